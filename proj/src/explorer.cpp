#include "rsum/explorer.hpp"

#include <algorithm>
#include <chrono>
#include <climits>
#include <exception>
#include <stdexcept>
#include <thread>

#include "rsum/errors.hpp"
#include "rsum/rng.hpp"

namespace rsum {

namespace {

using Mask = std::uint64_t;
using Triple = std::array<Mask, 3>;

unsigned long long binom(unsigned n, unsigned k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    unsigned long long r = 1;
    for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

std::vector<Mask> subsets_of_size(unsigned p, int n) {
    std::vector<Mask> out;
    if (n < 0 || n > static_cast<int>(p)) return out;
    if (n == 0) {
        out.push_back(0);
        return out;
    }
    const Mask limit = (Mask{1} << p) - 1;
    Mask v = (Mask{1} << n) - 1;
    while (v <= limit) {
        out.push_back(v);
        const Mask c = v & (~v + 1);
        const Mask r = v + c;
        if (r == 0) break;
        v = (((r ^ v) >> 2) / c) | r;
    }
    return out;
}

Mask dilate_mask(Mask m, unsigned u, unsigned p) {
    Mask out = 0;
    for (unsigned x = 0; x < p; ++x)
        if (m >> x & 1) out |= Mask{1} << (static_cast<Mask>(u) * x % p);
    return out;
}

// Minimal mask in {uX + t : u in Z_p^*, t in Z_p}.
bool is_affine_canonical(Mask m, unsigned p, Mask full) {
    for (unsigned u = 1; u < p; ++u) {
        const Mask d = dilate_mask(m, u, p);
        for (unsigned t = 0; t < p; ++t)
            if (detail::rotl_mask(d, t, p, full) < m) return false;
    }
    return true;
}

// Minimal mask in {X + t : t in Z_p}.
bool is_translation_canonical(Mask m, unsigned p, Mask full) {
    for (unsigned t = 1; t < p; ++t)
        if (detail::rotl_mask(m, t, p, full) < m) return false;
    return true;
}

void validate_spec(const SearchSpec& spec) {
    const int pv = static_cast<int>(spec.p.value());
    if (spec.nA < 1 || spec.nA > pv || spec.nB < 1 || spec.nB > pv)
        throw std::invalid_argument("need 1 <= nA, nB <= p");
    if (spec.nS < 0 || spec.nS > pv)
        throw std::invalid_argument("need 0 <= nS <= p");
    if (spec.workers < 1 || spec.workers > 64)
        throw std::invalid_argument("workers must be in [1, 64]");
}

struct CellBounds {
    BoundReport bounds;
    bool pan_sun_regime;  // odd p, 0 < |S| < p
    int conjecture_value;
};

CellBounds cell_bounds(PrimeModulus p, int nA, int nB, int nS) {
    CellBounds cb{};
    cb.bounds = bound_table(p, nA, nB, nS);
    cb.pan_sun_regime = p.value() != 2 && nS > 0 && nS < static_cast<int>(p.value());
    const int raw = nA + nB - nS - 1;
    cb.conjecture_value = std::min(static_cast<int>(p.value()), raw < 0 ? 0 : raw);
    return cb;
}

void finish_report(SearchReport& rep, const CellBounds& cb) {
    rep.bounds = cb.bounds;
    rep.conjecture_value = cb.conjecture_value;
    if (rep.empty_scan) return;
    if (rep.min_c < cb.bounds.thm2)
        throw CheckFailure("scan found |C| = " + std::to_string(rep.min_c) +
                           " below the min{p,|A|+|B|-2|S|-1} bound " +
                           std::to_string(cb.bounds.thm2));
    if (cb.pan_sun_regime && rep.min_c < cb.bounds.pan_sun)
        throw CheckFailure("scan found |C| = " + std::to_string(rep.min_c) +
                           " below the min{p,|A|+|B|-|S|-2} bound " +
                           std::to_string(cb.bounds.pan_sun));
    rep.tight_thm2 = rep.min_c == cb.bounds.thm2;
    rep.tight_pan_sun = cb.pan_sun_regime && rep.min_c == cb.bounds.pan_sun;
    rep.conjecture_tight = rep.min_c == cb.conjecture_value;
    rep.conjecture_violated = rep.min_c < cb.conjecture_value;
}

}  // namespace

std::tuple<ResidueSet, ResidueSet, ResidueSet> canonicalize(const ResidueSet& A,
                                                            const ResidueSet& B,
                                                            const ResidueSet& S,
                                                            bool include_swap) {
    const PrimeModulus m = A.modulus();
    if (!(B.modulus() == m) || !(S.modulus() == m))
        throw std::invalid_argument("modulus mismatch in canonicalize");
    const unsigned p = m.value();
    const Mask full = m.full_mask();

    Triple best{A.mask(), B.mask(), S.mask()};
    auto consider = [&](Mask a, Mask b, Mask s) {
        Triple cand{a, b, s};
        if (cand < best) best = cand;
    };

    const int variants = include_swap ? 2 : 1;
    for (int v = 0; v < variants; ++v) {
        const Mask am = v == 0 ? A.mask() : B.mask();
        const Mask bm = v == 0 ? B.mask() : A.mask();
        const Mask sm = v == 0 ? S.mask() : detail::negate_mask(S.mask(), p);
        for (unsigned u = 1; u < p; ++u) {
            const Mask da = dilate_mask(am, u, p);
            const Mask db = dilate_mask(bm, u, p);
            const Mask ds = dilate_mask(sm, u, p);
            for (unsigned t = 0; t < p; ++t) {
                const Mask at = detail::rotl_mask(da, t, p, full);
                for (unsigned s = 0; s < p; ++s)
                    consider(at, detail::rotl_mask(db, s, p, full),
                             detail::rotl_mask(ds, (t + p - s) % p, p, full));
            }
        }
    }
    return {ResidueSet::from_mask(m, best[0]), ResidueSet::from_mask(m, best[1]),
            ResidueSet::from_mask(m, best[2])};
}

SearchReport exhaustive_min(const SearchSpec& spec) {
    if (spec.mode != SearchSpec::Mode::exhaustive)
        throw std::invalid_argument("exhaustive_min called with a sampled spec");
    validate_spec(spec);
    const auto t0 = std::chrono::steady_clock::now();
    const unsigned p = spec.p.value();
    const Mask full = spec.p.full_mask();
    const CellBounds cb = cell_bounds(spec.p, spec.nA, spec.nB, spec.nS);

    if (binom(p, spec.nA) > 16'000'000ull || binom(p, spec.nB) > 16'000'000ull ||
        binom(p, spec.nS) > 16'000'000ull)
        throw std::invalid_argument("cell too large to materialize; use sampled mode");

    std::vector<Mask> as = subsets_of_size(p, spec.nA);
    std::vector<Mask> bs = subsets_of_size(p, spec.nB);
    if (spec.symmetry_reduction) {
        std::erase_if(as, [&](Mask a) { return !is_affine_canonical(a, p, full); });
        std::erase_if(bs, [&](Mask b) { return !is_translation_canonical(b, p, full); });
    }
    const std::vector<Mask> ss = subsets_of_size(p, spec.nS);
    std::vector<Mask> neg_ss;
    neg_ss.reserve(ss.size());
    for (Mask s : ss) neg_ss.push_back(detail::negate_mask(s, p));

    auto mul_capped = [](std::uint64_t a, std::uint64_t b) {
        if (a != 0 && b > UINT64_MAX / a) return UINT64_MAX;
        return a * b;
    };
    const std::uint64_t total = mul_capped(mul_capped(as.size(), bs.size()), ss.size());
    if (total > spec.budget)
        throw std::invalid_argument("exhaustive scan exceeds the configuration budget; "
                                    "use sampled mode or raise --budget");

    struct WorkerState {
        int min_c = INT_MAX;
        std::vector<Triple> wits;
        std::uint64_t scanned = 0;
    };
    const int nw = spec.workers;
    std::vector<WorkerState> states(nw);

    auto run_worker = [&](int w) {
        WorkerState& st = states[w];
        for (std::size_t ai = static_cast<std::size_t>(w); ai < as.size();
             ai += static_cast<std::size_t>(nw)) {
            const Mask a_mask = as[ai];
            for (Mask b_mask : bs) {
                for (std::size_t si = 0; si < ss.size(); ++si) {
                    const int c = std::popcount(
                        detail::restricted_sumset_mask(a_mask, b_mask, neg_ss[si], p, full));
                    ++st.scanned;
                    if (c > st.min_c) continue;
                    if (c < st.min_c) {
                        st.min_c = c;
                        st.wits.clear();
                    }
                    if (st.wits.size() < 10) st.wits.push_back({a_mask, b_mask, ss[si]});
                }
            }
        }
    };

    if (nw == 1) {
        run_worker(0);
    } else {
        std::vector<std::thread> threads;
        for (int w = 0; w < nw; ++w) threads.emplace_back(run_worker, w);
        for (auto& t : threads) t.join();
    }

    SearchReport rep(spec);
    rep.min_c = INT_MAX;
    for (const auto& st : states) {
        rep.configs_scanned += st.scanned;
        rep.min_c = std::min(rep.min_c, st.min_c);
    }
    if (rep.min_c == INT_MAX) {  // validated sizes always yield at least one config
        rep.empty_scan = true;
        rep.min_c = static_cast<int>(p);
    } else {
        std::vector<Triple> wits;
        for (const auto& st : states)
            if (st.min_c == rep.min_c) wits.insert(wits.end(), st.wits.begin(), st.wits.end());
        std::sort(wits.begin(), wits.end());
        if (wits.size() > 10) wits.resize(10);
        rep.extremal_witnesses = std::move(wits);
    }
    finish_report(rep, cb);
    rep.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

SearchReport sampled_min(const SearchSpec& spec) {
    if (spec.mode != SearchSpec::Mode::sampled)
        throw std::invalid_argument("sampled_min called with an exhaustive spec");
    validate_spec(spec);
    const auto t0 = std::chrono::steady_clock::now();
    const unsigned p = spec.p.value();
    const Mask full = spec.p.full_mask();
    const CellBounds cb = cell_bounds(spec.p, spec.nA, spec.nB, spec.nS);

    struct Hit {
        std::uint64_t index;
        Triple triple;
    };
    struct WorkerState {
        int min_c = INT_MAX;
        std::vector<Hit> hits;
    };
    const int nw = spec.workers;
    std::vector<WorkerState> states(nw);

    auto sample_subset = [p](Prng& rng, int n) {
        std::array<unsigned, 64> idx;
        for (unsigned i = 0; i < p; ++i) idx[i] = i;
        Mask m = 0;
        for (int i = 0; i < n; ++i) {
            const auto j = static_cast<unsigned>(rng.bounded(i, p - 1));
            std::swap(idx[static_cast<unsigned>(i)], idx[j]);
            m |= Mask{1} << idx[static_cast<unsigned>(i)];
        }
        return m;
    };

    auto run_worker = [&](int w) {
        WorkerState& st = states[w];
        for (std::uint64_t i = w; i < spec.sample_count; i += static_cast<std::uint64_t>(nw)) {
            Prng rng(derive_seed(spec.seed, i));
            const Mask a_mask = sample_subset(rng, spec.nA);
            const Mask b_mask = sample_subset(rng, spec.nB);
            const Mask s_mask = sample_subset(rng, spec.nS);
            const Mask neg_s = detail::negate_mask(s_mask, p);
            const int c =
                std::popcount(detail::restricted_sumset_mask(a_mask, b_mask, neg_s, p, full));
            if (c > st.min_c) continue;
            if (c < st.min_c) {
                st.min_c = c;
                st.hits.clear();
            }
            const Triple t{a_mask, b_mask, s_mask};
            bool seen = false;
            for (const auto& h : st.hits)
                if (h.triple == t) {
                    seen = true;
                    break;
                }
            if (!seen && st.hits.size() < 10) st.hits.push_back({i, t});
        }
    };

    if (nw == 1) {
        run_worker(0);
    } else {
        std::vector<std::thread> threads;
        for (int w = 0; w < nw; ++w) threads.emplace_back(run_worker, w);
        for (auto& t : threads) t.join();
    }

    SearchReport rep(spec);
    rep.configs_scanned = spec.sample_count;
    rep.upper_bound_only = true;
    rep.min_c = INT_MAX;
    for (const auto& st : states) rep.min_c = std::min(rep.min_c, st.min_c);
    if (rep.min_c == INT_MAX) {
        rep.empty_scan = true;
        rep.min_c = static_cast<int>(p);
    } else {
        std::vector<Hit> hits;
        for (const auto& st : states)
            if (st.min_c == rep.min_c) hits.insert(hits.end(), st.hits.begin(), st.hits.end());
        std::sort(hits.begin(), hits.end(),
                  [](const Hit& x, const Hit& y) { return x.index < y.index; });
        for (const auto& h : hits) {
            bool seen = false;
            for (const auto& t : rep.extremal_witnesses)
                if (t == h.triple) {
                    seen = true;
                    break;
                }
            if (!seen && rep.extremal_witnesses.size() < 10) rep.extremal_witnesses.push_back(h.triple);
        }
    }
    finish_report(rep, cb);
    rep.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

std::vector<ScanCell> conjecture_scan(PrimeModulus pm, int max_s, int workers) {
    const int pv = static_cast<int>(pm.value());
    const unsigned p = pm.value();
    const Mask full = pm.full_mask();
    if (max_s < 0 || max_s > pv) throw std::invalid_argument("need 0 <= max_s <= p");
    if (workers < 1 || workers > 64) throw std::invalid_argument("workers must be in [1, 64]");

    struct CellSpec {
        int nA, nB, nS;
    };
    std::vector<CellSpec> cells;
    for (int nA = 1; nA <= pv; ++nA)
        for (int nB = nA; nB <= pv; ++nB)
            for (int nS = 0; nS <= max_s; ++nS) cells.push_back({nA, nB, nS});

    std::vector<ScanCell> out(cells.size());
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(workers));
    auto scan_cells = [&](int w) {
        for (std::size_t ci = static_cast<std::size_t>(w); ci < cells.size();
             ci += static_cast<std::size_t>(workers)) {
            const auto [nA, nB, nS] = cells[ci];
            const CellBounds cb = cell_bounds(pm, nA, nB, nS);
            ScanCell cell{};
            cell.nA = nA;
            cell.nB = nB;
            cell.nS = nS;
            cell.thm2 = cb.bounds.thm2;
            cell.pan_sun = cb.bounds.pan_sun;
            cell.conjecture = cb.conjecture_value;
            cell.s_even = nS % 2 == 0;
            cell.min_all = INT_MAX;
            cell.min_a_neq_b = INT_MAX;

            const auto as = subsets_of_size(p, nA);
            const auto bs = subsets_of_size(p, nB);
            const auto ss = subsets_of_size(p, nS);
            std::vector<Mask> neg_ss;
            neg_ss.reserve(ss.size());
            for (Mask s : ss) neg_ss.push_back(detail::negate_mask(s, p));

            for (Mask a : as) {
                for (Mask b : bs) {
                    const bool distinct = a != b;
                    for (std::size_t si = 0; si < ss.size(); ++si) {
                        const int c = std::popcount(
                            detail::restricted_sumset_mask(a, b, neg_ss[si], p, full));
                        ++cell.configs_all;
                        cell.min_all = std::min(cell.min_all, c);
                        if (distinct) {
                            ++cell.configs_a_neq_b;
                            cell.min_a_neq_b = std::min(cell.min_a_neq_b, c);
                        }
                    }
                }
            }
            if (cell.min_all < cell.thm2)
                throw CheckFailure("conjecture scan found a cell below the proven bound");
            cell.holds_even_s = cell.s_even && cell.min_all >= cell.conjecture;
            cell.holds_a_neq_b = cell.configs_a_neq_b > 0 && cell.min_a_neq_b >= cell.conjecture;
            if (cell.configs_a_neq_b == 0) cell.min_a_neq_b = pv;  // empty-regime sentinel
            out[ci] = cell;
        }
    };
    auto run_worker = [&](int w) {
        try {
            scan_cells(w);
        } catch (...) {
            errors[static_cast<std::size_t>(w)] = std::current_exception();
        }
    };

    if (workers == 1) {
        run_worker(0);
    } else {
        std::vector<std::thread> threads;
        for (int w = 0; w < workers; ++w) threads.emplace_back(run_worker, w);
        for (auto& t : threads) t.join();
    }
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);
    return out;
}

}  // namespace rsum

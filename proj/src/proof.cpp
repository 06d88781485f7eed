#include "rsum/proof.hpp"

#include <sstream>
#include <stdexcept>

#include "rsum/errors.hpp"
#include "rsum/rng.hpp"

namespace rsum {

namespace {

void require_same_modulus(PrimeModulus a, PrimeModulus b) {
    if (!(a == b))
        throw std::invalid_argument("modulus mismatch: p=" + std::to_string(a.value()) +
                                    " vs p=" + std::to_string(b.value()));
}

constexpr int kSubsetCap = 10;  // 2^|S| expansion terms

}  // namespace

std::pair<ResidueSet, ResidueSet> hat_sets(PrimeModulus p, int nA, int nB, int nS) {
    const int pv = static_cast<int>(p.value());
    if (pv == 2) throw std::invalid_argument("hat_sets requires an odd prime");
    if (nA < 2 || nA > nB || nB > pv || nS < 0 || nS > pv)
        throw std::invalid_argument("hat_sets requires 2 <= nA <= nB <= p and 0 <= nS <= p");
    if (nA + nB <= 2 * nS + 1)
        throw std::invalid_argument("hat_sets requires |A| + |B| > 2|S| + 1");

    const int k = pv - nA + 1;
    const int l = pv - nB + 1;
    ResidueSet A_hat(p), B_hat(p);
    for (int i = 0; i < k; ++i) A_hat = A_hat.with(static_cast<unsigned>(i));
    for (int i = 0; i < l; ++i)
        B_hat = B_hat.with(Residue(nB - nS + i, p).value());
    return {A_hat, B_hat};
}

ZpFunction build_F(const ZpFunction& f, const ZpFunction& g, const ResidueSet& S) {
    const PrimeModulus m = f.modulus();
    require_same_modulus(m, g.modulus());
    require_same_modulus(m, S.modulus());
    const unsigned p = m.value();
    const auto s_elems = S.elements();

    std::vector<CycNum> roots;
    roots.reserve(p);
    for (unsigned r = 0; r < p; ++r) roots.push_back(root_power(m, Residue(r, m)));

    std::vector<CycNum> out(p, CycNum::zero(m));
    for (unsigned a = 0; a < p; ++a) {
        if (f[a].is_zero()) continue;
        for (unsigned x = 0; x < p; ++x) {
            const unsigned xa = (x + p - a) % p;
            if (g[xa].is_zero()) continue;
            CycNum term = f[a] * g[xa];
            for (unsigned d : s_elems) {
                if (term.is_zero()) break;
                term = term * (roots[xa] - roots[(a + p - d) % p]);
            }
            out[x] += term;
        }
    }
    return ZpFunction::from_values(m, std::move(out));
}

CycNum hatF_expansion(const ZpFunction& f_hat, const ZpFunction& g_hat, const ResidueSet& S,
                      Residue x) {
    const PrimeModulus m = f_hat.modulus();
    require_same_modulus(m, g_hat.modulus());
    require_same_modulus(m, S.modulus());
    require_same_modulus(m, x.modulus());
    const auto s_elems = S.elements();
    const int ns = static_cast<int>(s_elems.size());
    if (ns > kSubsetCap)
        throw std::invalid_argument("hatF_expansion: |S| exceeds the 2^|S| term cap (" +
                                    std::to_string(kSubsetCap) + ")");

    CycNum acc = CycNum::zero(m);
    for (std::uint32_t tmask = 0; tmask < (std::uint32_t{1} << ns); ++tmask) {
        long long dsum = 0;
        int tsize = 0;
        for (int i = 0; i < ns; ++i) {
            if (tmask >> i & 1) {
                dsum += s_elems[static_cast<std::size_t>(i)];
                ++tsize;
            }
        }
        CycNum term = root_power(m, Residue(-dsum, m));
        term = term * f_hat.at(x + Residue(tsize, m));
        term = term * g_hat.at(x + Residue(ns - tsize, m));
        if (tsize % 2 == 1) term = -term;
        acc += term;
    }
    return acc;
}

bool restricted_bound_statement_check(PrimeModulus p, const ResidueSet& A, const ResidueSet& B,
                                      const ResidueSet& S) {
    if (A.empty() || B.empty())
        throw std::invalid_argument("statement check requires nonempty A and B");
    const int c_size = restricted_sumset(A, B, S).size();
    const int raw = A.size() + B.size() - 2 * S.size() - 1;
    const int bound = std::min(static_cast<int>(p.value()), raw < 0 ? 0 : raw);
    return c_size >= bound;
}

TraceReport trace_restricted_bound(PrimeModulus p, const ResidueSet& A_in, const ResidueSet& B_in,
                                   const ResidueSet& S_in, std::uint64_t seed) {
    const int pv = static_cast<int>(p.value());
    if (pv == 2) throw std::invalid_argument("trace requires an odd prime");
    require_same_modulus(p, A_in.modulus());
    require_same_modulus(p, B_in.modulus());
    require_same_modulus(p, S_in.modulus());
    if (A_in.empty() || B_in.empty())
        throw std::invalid_argument("trace requires nonempty A and B");
    if (std::min(A_in.size(), B_in.size()) < 2)
        throw std::invalid_argument("trace requires min(|A|,|B|) >= 2 (smaller cases are trivial)");
    if (A_in.size() + B_in.size() <= 2 * S_in.size() + 1)
        throw std::invalid_argument("trace requires |A| + |B| > 2|S| + 1");

    // The derivation assumes |A| <= |B|; C is invariant under
    // (A,B,S) -> (B,A,-S), so swapping is harmless but recorded.
    const bool swapped = A_in.size() > B_in.size();
    const ResidueSet A = swapped ? B_in : A_in;
    const ResidueSet B = swapped ? A_in : B_in;
    const ResidueSet S = swapped ? S_in.negated() : S_in;

    const int nA = A.size(), nB = B.size(), nS = S.size();
    const int k = pv - nA + 1;
    const int l = pv - nB + 1;
    auto [A_hat, B_hat] = hat_sets(p, nA, nB, nS);

    TraceReport rep{ProofContext{p, A, B, S, swapped, k, l, A_hat, B_hat},
                    seed,
                    ZpFunction::zero(p),
                    ZpFunction::zero(p),
                    ZpFunction::zero(p),
                    ZpFunction::zero(p),
                    {},
                    "",
                    0,
                    ResidueSet(p)};

    auto checkpoint = [&rep](const std::string& name, bool ok) {
        rep.checks.push_back({name, ok});
        if (!ok) throw CheckFailure("trace checkpoint failed: " + name);
    };

    rep.f = construct_witness(p, A, A_hat, derive_seed(seed, 1));
    rep.g = construct_witness(p, B, B_hat, derive_seed(seed, 2));
    const ZpFunction f_hat = dft(rep.f);
    const ZpFunction g_hat = dft(rep.g);
    checkpoint("supp_f_equals_a", support(rep.f) == A);
    checkpoint("supp_f_hat_equals_a_hat", support(f_hat) == A_hat);
    checkpoint("supp_g_equals_b", support(rep.g) == B);
    checkpoint("supp_g_hat_equals_b_hat", support(g_hat) == B_hat);

    rep.F = build_F(rep.f, rep.g, S);
    rep.actual_C = restricted_sumset(A, B, S);
    const ResidueSet supp_F = support(rep.F);
    checkpoint("supp_F_subset_c", supp_F.is_subset_of(rep.actual_C));

    rep.F_hat = dft(rep.F);
    const ResidueSet supp_F_hat = support(rep.F_hat);
    const Residue p_minus_s(pv - nS, p);
    checkpoint("F_hat_nonzero_at_p_minus_s", !rep.F_hat.at(p_minus_s).is_zero());

    // supp(F_hat) is confined to {p-|S|} and the residues of [|B|-2|S|, k-1].
    ResidueSet predicted = ResidueSet::singleton(p_minus_s);
    for (int r = nB - 2 * nS; r <= k - 1; ++r)
        predicted = predicted.with(Residue(r, p).value());
    checkpoint("supp_F_hat_in_predicted", supp_F_hat.is_subset_of(predicted));

    if (nA + nB >= pv + 2 * nS + 1) {
        rep.branch = "full";
        checkpoint("branch_supp_F_hat_is_singleton", supp_F_hat == ResidueSet::singleton(p_minus_s));
        rep.derived_bound = pv;
    } else {
        rep.branch = "generic";
        checkpoint("branch_supp_F_hat_count_bound",
                   supp_F_hat.size() <= k + l - pv + 2 * nS);
        rep.derived_bound = nA + nB - 2 * nS - 1;
    }

    // |C| >= |supp(F)| >= p+1-|supp(F_hat)| >= derived bound.
    checkpoint("supp_F_lower_bound", supp_F.size() >= pv + 1 - supp_F_hat.size());
    checkpoint("derived_bound_le_actual", rep.derived_bound <= rep.actual_C.size());
    return rep;
}

}  // namespace rsum

#include "rsum/witness.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

#include "rsum/errors.hpp"
#include "rsum/rng.hpp"

namespace rsum {

namespace {

// Strip the rational content of a row of CycNums to keep entries small.
void normalize_row(std::vector<CycNum>& row, PrimeModulus m) {
    const std::size_t n = m.value() - 1;
    std::vector<Rational> flat;
    flat.reserve(row.size() * n);
    for (const auto& e : row)
        for (const auto& q : e.coeffs()) flat.push_back(q);
    normalize_content(flat);
    std::size_t k = 0;
    for (auto& e : row) {
        std::vector<Rational> c(flat.begin() + static_cast<long>(k), flat.begin() + static_cast<long>(k + n));
        e = CycNum::from_coeffs(m, std::move(c));
        k += n;
    }
}

}  // namespace

SupportSystem solve_support_system(PrimeModulus p, const ResidueSet& A, const ResidueSet& B) {
    const unsigned pv = p.value();
    if (pv == 2) throw std::invalid_argument("solve_support_system requires an odd prime");
    if (!(A.modulus() == p) || !(B.modulus() == p))
        throw std::invalid_argument("modulus mismatch between p and A/B");
    if (A.empty() || B.empty())
        throw std::invalid_argument("A and B must be nonempty");
    if (A.size() + B.size() < static_cast<int>(pv) + 1)
        throw std::invalid_argument("need |A| + |B| >= p + 1, got " +
                                    std::to_string(A.size() + B.size()) + " < " + std::to_string(pv + 1));

    // Assemble constraint rows.
    std::vector<std::vector<CycNum>> rows;
    for (unsigned x = 0; x < pv; ++x) {
        if (A.contains(x)) continue;
        std::vector<CycNum> row(pv, CycNum::zero(p));
        row[x] = CycNum::one(p);
        rows.push_back(std::move(row));
    }
    for (unsigned y = 0; y < pv; ++y) {
        if (B.contains(y)) continue;
        std::vector<CycNum> row;
        row.reserve(pv);
        for (unsigned a = 0; a < pv; ++a)
            row.push_back(root_power(p, Residue(static_cast<long long>(a) * y, p)));
        rows.push_back(std::move(row));
    }

    SupportSystem sys{p, A, B, rows, {}};

    // Division-free Gauss-Jordan: rows are combined by cross-multiplication
    // (row_j := pivot*row_j - entry*row_i), with exact zero tests for
    // pivoting and content normalization after each elimination.
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (unsigned col = 0; col < pv && r < rows.size(); ++col) {
        std::size_t piv = r;
        while (piv < rows.size() && rows[piv][col].is_zero()) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[r], rows[piv]);
        for (std::size_t j = 0; j < rows.size(); ++j) {
            if (j == r || rows[j][col].is_zero()) continue;
            const CycNum f = rows[j][col];
            for (unsigned c = 0; c < pv; ++c)
                rows[j][c] = rows[r][col] * rows[j][c] - f * rows[r][c];
            normalize_row(rows[j], p);
        }
        pivot_col.push_back(col);
        ++r;
    }
    const std::size_t rank = r;

    // Basis vector per free column c: x_c = W, x_{pivot_i} = -R_i[c] * W/w_i
    // with W the product of all pivots; scaling by W avoids any division in
    // Q(zeta_p). Each vector is content-normalized afterwards.
    std::vector<CycNum> pivots;
    for (std::size_t i = 0; i < rank; ++i) pivots.push_back(rows[i][pivot_col[i]]);
    std::vector<CycNum> prefix(rank + 1, CycNum::one(p)), suffix(rank + 1, CycNum::one(p));
    for (std::size_t i = 0; i < rank; ++i) prefix[i + 1] = prefix[i] * pivots[i];
    for (std::size_t i = rank; i-- > 0;) suffix[i] = suffix[i + 1] * pivots[i];
    const CycNum W = prefix[rank];

    std::vector<bool> is_pivot(pv, false);
    for (std::size_t c : pivot_col) is_pivot[c] = true;

    for (unsigned freec = 0; freec < pv; ++freec) {
        if (is_pivot[freec]) continue;
        std::vector<CycNum> vec(pv, CycNum::zero(p));
        vec[freec] = W;
        for (std::size_t i = 0; i < rank; ++i) {
            if (rows[i][freec].is_zero()) continue;
            vec[pivot_col[i]] = -(rows[i][freec] * (prefix[i] * suffix[i + 1]));
        }
        normalize_row(vec, p);
        sys.nullspace_basis.push_back(ZpFunction::from_values(p, std::move(vec)));
    }
    return sys;
}

bool verify_witness(const ZpFunction& f, const ResidueSet& A, const ResidueSet& B) {
    return support(f) == A && support(dft(f)) == B;
}

ZpFunction construct_witness(PrimeModulus p, const ResidueSet& A, const ResidueSet& B,
                             std::uint64_t seed, int retry_cap) {
    const SupportSystem sys = solve_support_system(p, A, B);
    const std::size_t dim = sys.nullspace_basis.size();
    if (dim == 0)
        throw CheckFailure("support system has an empty nullspace although |A|+|B| >= p+1");

    auto combine = [&](const std::vector<long long>& coeffs) {
        std::vector<CycNum> vals(p.value(), CycNum::zero(p));
        for (std::size_t k = 0; k < dim; ++k) {
            if (coeffs[k] == 0) continue;
            const Rational q(static_cast<long>(coeffs[k]));
            for (unsigned a = 0; a < p.value(); ++a)
                vals[a] += sys.nullspace_basis[k][a].scaled(q);
        }
        return ZpFunction::from_values(p, std::move(vals));
    };

    Prng rng(seed);
    const long long hi = static_cast<long long>(p.value()) * static_cast<long long>(dim);
    std::vector<long long> coeffs(dim);
    for (int attempt = 0; attempt < retry_cap; ++attempt) {
        for (auto& c : coeffs) c = rng.int_in(1, hi);
        ZpFunction f = combine(coeffs);
        if (verify_witness(f, A, B)) return f;
    }

    // Deterministic fallback: tuples in [-h, h]^dim, lexicographic per
    // height, skipping those already covered at a smaller height.
    constexpr int kMaxHeight = 8;
    for (int h = 1; h <= kMaxHeight; ++h) {
        std::vector<long long> t(dim, -h);
        while (true) {
            long long maxabs = 0;
            for (long long c : t) maxabs = std::max(maxabs, std::abs(c));
            if (maxabs == h) {
                ZpFunction f = combine(t);
                if (verify_witness(f, A, B)) return f;
            }
            std::size_t i = dim;
            while (i-- > 0) {
                if (t[i] < h) {
                    ++t[i];
                    break;
                }
                t[i] = -h;
                if (i == 0) goto next_height;
            }
            if (dim == 0) break;
        }
    next_height:;
    }

    std::ostringstream os;
    os << "witness search exhausted for p=" << p.value() << " |A|=" << sys.A.size()
       << " |B|=" << sys.B.size() << " nullspace dim=" << dim
       << "; a witness exists, so the solver is broken";
    throw CheckFailure(os.str());
}

}  // namespace rsum

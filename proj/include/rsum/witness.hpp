#pragma once

#include <cstdint>
#include <vector>

#include "rsum/fourier.hpp"

namespace rsum {

// The linear system expressing "supp(f) inside A and supp(f_hat) inside B":
// one unit row per x not in A (f(x) = 0) and one Fourier row per y not in B
// (sum_a f(a) e_p(ay) = 0). When |A|+|B| >= p+1 the nullspace has dimension
// at least |A|+|B|-p, and by Chebotarev's theorem on Fourier minors a
// generic element of it attains both supports exactly.
struct SupportSystem {
    PrimeModulus p;
    ResidueSet A;
    ResidueSet B;
    std::vector<std::vector<CycNum>> constraint_matrix;  // (p-|A|)+(p-|B|) rows, p columns
    std::vector<ZpFunction> nullspace_basis;
};

// Exact nullspace of the combined vanishing constraints. Gaussian
// elimination over Q(zeta_p) with exact pivot tests; division-free
// (cross-multiplication), so no inverses in Q(zeta_p) are ever formed.
// Requires p odd, A and B nonempty, |A|+|B| >= p+1.
SupportSystem solve_support_system(PrimeModulus p, const ResidueSet& A, const ResidueSet& B);

// A function f with supp(f) = A and supp(dft(f)) = B exactly. Seeded random
// integer combinations of the nullspace basis (coefficients in [1, p*dim]),
// each candidate verified exactly; after `retry_cap` misses, a deterministic
// enumeration of small integer tuples takes over. Exhaustion is a hard error
// (a witness exists, so it would mean the solver is broken).
ZpFunction construct_witness(PrimeModulus p, const ResidueSet& A, const ResidueSet& B,
                             std::uint64_t seed, int retry_cap = 64);

// True iff support(f) == A and support(dft(f)) == B, both exact.
bool verify_witness(const ZpFunction& f, const ResidueSet& A, const ResidueSet& B);

}  // namespace rsum

#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "rsum/witness.hpp"

namespace rsum {

// Post-swap instance the bound derivation runs on, plus the derived
// parameters k = p-|A|+1, l = p-|B|+1 and the prescribed Fourier supports.
struct ProofContext {
    PrimeModulus p;
    ResidueSet A, B, S;  // with |A| <= |B|; S negated if a swap happened
    bool swapped;
    int k, l;
    ResidueSet A_hat, B_hat;
};

struct ProofCheck {
    std::string name;
    bool passed;
};

// Full record of one traced instance. All checks are true whenever a trace
// returns: a failed checkpoint throws CheckFailure instead (the underlying
// argument guarantees every checkpoint, so failure means a bug here).
struct TraceReport {
    ProofContext context;
    std::uint64_t seed;
    ZpFunction f, g, F, F_hat;
    std::vector<ProofCheck> checks;
    std::string branch;  // "full" (|A|+|B| >= p+2|S|+1) or "generic"
    int derived_bound;
    ResidueSet actual_C;
};

// Prescribed transform supports: A_hat = {0,...,p-nA} and
// B_hat = {nB-nS,...,p-nS} taken mod p. Requires p odd, 2 <= nA <= nB,
// nA+nB > 2*nS+1.
std::pair<ResidueSet, ResidueSet> hat_sets(PrimeModulus p, int nA, int nB, int nS);

// F(x) = sum_a f(a) g(x-a) prod_{d in S} (e_p(x-a) - e_p(a-d)).
// An empty S gives the plain convolution of f and g.
ZpFunction build_F(const ZpFunction& f, const ZpFunction& g, const ResidueSet& S);

// Closed form of the transform of build_F:
//   F_hat(x) = sum_{T subset S} (-1)^|T| e_p(-sum_{d in T} d)
//              f_hat(x+|T|) g_hat(x+|S|-|T|),
// with |T| and |S|-|T| mapped to residues. 2^|S| terms; |S| capped at 10.
CycNum hatF_expansion(const ZpFunction& f_hat, const ZpFunction& g_hat, const ResidueSet& S,
                      Residue x);

// Run the bound derivation for |{a+b : a in A, b in B, a-b not in S}| as a
// checked pipeline: prescribe supports, construct witnesses, build F, verify
// supp(F) inside C, locate supp(F_hat), take the case branch, derive the
// bound, and cross-check it against the directly computed C.
TraceReport trace_restricted_bound(PrimeModulus p, const ResidueSet& A, const ResidueSet& B,
                                   const ResidueSet& S, std::uint64_t seed);

// Direct statement check, valid for every prime (including p = 2) and any
// nonempty A, B: |C| >= min{p, |A|+|B|-2|S|-1} clamped at 0.
bool restricted_bound_statement_check(PrimeModulus p, const ResidueSet& A, const ResidueSet& B,
                                      const ResidueSet& S);

}  // namespace rsum

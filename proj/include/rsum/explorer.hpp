#pragma once

#include <array>
#include <cstdint>
#include <tuple>
#include <vector>

#include "rsum/residue.hpp"

namespace rsum {

// One search cell: all (A,B,S) with the given sizes over Z_p.
struct SearchSpec {
    enum class Mode { exhaustive, sampled };

    explicit SearchSpec(PrimeModulus prime) : p(prime) {}

    PrimeModulus p;
    int nA = 1, nB = 1, nS = 0;
    Mode mode = Mode::exhaustive;
    std::uint64_t sample_count = 0;  // sampled mode only
    std::uint64_t seed = 0;          // sampled mode only
    bool symmetry_reduction = true;
    int workers = 1;
    std::uint64_t budget = 50'000'000;  // max configurations an exhaustive scan may visit
};

struct SearchReport {
    explicit SearchReport(const SearchSpec& s) : spec(s) {}

    SearchSpec spec;
    int min_c = 0;
    bool empty_scan = false;        // no configuration visited; min_c = p by convention
    bool upper_bound_only = false;  // sampled scans bound the true minimum from above
    std::vector<std::array<std::uint64_t, 3>> extremal_witnesses;  // (A,B,S) masks, at most 10
    BoundReport bounds;
    bool tight_thm2 = false;
    bool tight_pan_sun = false;
    int conjecture_value = 0;  // min{p, nA+nB-nS-1}
    bool conjecture_tight = false;
    bool conjecture_violated = false;
    std::uint64_t configs_scanned = 0;
    double elapsed_seconds = 0.0;  // not part of the JSON serialization
};

// Scan of one (nA,nB,nS) cell for conjecture evidence: minima over all
// configurations and over the A != B ones, against the strengthened bound
// min{p, nA+nB-nS-1}. Flags are evidence, never truth claims.
struct ScanCell {
    int nA, nB, nS;
    std::uint64_t configs_all = 0;
    int min_all = 0;
    std::uint64_t configs_a_neq_b = 0;
    int min_a_neq_b = 0;  // meaningful only when configs_a_neq_b > 0
    int thm2 = 0;
    int pan_sun = 0;
    int conjecture = 0;  // min{p, nA+nB-nS-1}
    bool s_even = false;
    bool holds_even_s = false;   // min_all >= conjecture (reported when s_even)
    bool holds_a_neq_b = false;  // min_a_neq_b >= conjecture (when the regime is nonempty)
};

// Lexicographically minimal image of (A,B,S) under
// (u,t,s): (A,B,S) -> (uA+t, uB+s, uS+(t-s)), u != 0 — every image has the
// same |C| — optionally composed with the swap (A,B,S) -> (B,A,-S).
// Images compare as (A.mask, B.mask, S.mask) tuples. Idempotent.
std::tuple<ResidueSet, ResidueSet, ResidueSet> canonicalize(const ResidueSet& A,
                                                            const ResidueSet& B,
                                                            const ResidueSet& S,
                                                            bool include_swap = true);

// Minimum of |restricted_sumset(A,B,S)| over the cell, exhaustively. With
// symmetry_reduction, only affine-canonical A and translation-canonical B
// are enumerated (S stays free), which covers every orbit; the same minimum
// must come out either way. min_c < the thm2 bound is a hard failure.
SearchReport exhaustive_min(const SearchSpec& spec);

// Minimum over `sample_count` seeded uniform draws; an upper bound on the
// true minimum. Draw i is derived from (seed, i), so reports are identical
// for any worker count.
SearchReport sampled_min(const SearchSpec& spec);

// Exhaustive evidence table for the strengthened-bound conjectures over all
// cells 1 <= nA <= nB <= p, 0 <= nS <= max_s. (Cells with nA > nB add
// nothing: (A,B,S) -> (B,A,-S) preserves |C| and all three sizes.)
std::vector<ScanCell> conjecture_scan(PrimeModulus p, int max_s, int workers = 1);

}  // namespace rsum

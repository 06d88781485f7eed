#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <vector>

namespace rsum {

// Ceiling for primes used in set arithmetic (bitmask width bound, <= 61).
// Override with RSUM_MAX_SET_PRIME; values above 61 are clamped.
unsigned set_prime_ceiling();

// Ceiling for primes used in cyclotomic field work. Default 31, raisable
// via RSUM_MAX_FIELD_PRIME (arithmetic stays exact, just slower).
unsigned field_prime_ceiling();

// A prime p with 2 <= p <= set_prime_ceiling(), checked by trial division.
class PrimeModulus {
public:
    explicit PrimeModulus(unsigned p);

    unsigned value() const { return p_; }
    std::uint64_t full_mask() const { return (std::uint64_t{1} << p_) - 1; }

    bool operator==(const PrimeModulus&) const = default;

private:
    unsigned p_;
};

// Canonical residue in [0, p-1].
class Residue {
public:
    Residue(long long value, PrimeModulus m);

    unsigned value() const { return v_; }
    PrimeModulus modulus() const { return m_; }

    friend Residue operator+(Residue a, Residue b);
    friend Residue operator-(Residue a, Residue b);
    friend Residue operator*(Residue a, Residue b);
    Residue operator-() const;

    bool operator==(const Residue&) const = default;

private:
    unsigned v_;
    PrimeModulus m_;
};

namespace detail {

// Rotate a p-bit mask left by r (addition of r to every element of the set).
// Requires 0 <= r < p <= 61.
inline std::uint64_t rotl_mask(std::uint64_t m, unsigned r, unsigned p, std::uint64_t full) {
    if (r == 0) return m;
    return ((m << r) | (m >> (p - r))) & full;
}

// Mask of {-x : x in m}.
inline std::uint64_t negate_mask(std::uint64_t m, unsigned p) {
    std::uint64_t out = m & 1;
    for (unsigned x = 1; x < p; ++x)
        if (m >> x & 1) out |= std::uint64_t{1} << (p - x);
    return out;
}

// C = {a+b : a in A, b in B, a-b not in S}, computed as the union over a in A
// of a + (B \ (a - S)). negS must be negate_mask(S).
inline std::uint64_t restricted_sumset_mask(std::uint64_t a_mask, std::uint64_t b_mask,
                                            std::uint64_t negS, unsigned p, std::uint64_t full) {
    std::uint64_t c = 0;
    std::uint64_t rest = a_mask;
    while (rest) {
        const unsigned a = static_cast<unsigned>(std::countr_zero(rest));
        rest &= rest - 1;
        c |= rotl_mask(b_mask & ~rotl_mask(negS, a, p, full), a, p, full);
    }
    return c;
}

}  // namespace detail

// Subset of Z_p as a bitmask; immutable after construction.
class ResidueSet {
public:
    explicit ResidueSet(PrimeModulus m) : bits_(0), m_(m) {}

    static ResidueSet from_mask(PrimeModulus m, std::uint64_t bits);
    static ResidueSet from_elements(PrimeModulus m, const std::vector<long long>& xs);
    static ResidueSet full_set(PrimeModulus m) { return from_mask(m, m.full_mask()); }
    static ResidueSet singleton(Residue r);

    PrimeModulus modulus() const { return m_; }
    std::uint64_t mask() const { return bits_; }
    int size() const { return std::popcount(bits_); }
    bool empty() const { return bits_ == 0; }
    bool contains(unsigned r) const { return r < m_.value() && (bits_ >> r & 1); }
    bool is_subset_of(const ResidueSet& other) const;
    std::vector<unsigned> elements() const;  // ascending

    ResidueSet with(unsigned r) const;
    ResidueSet translated(long long t) const;  // X + t
    ResidueSet dilated(long long u) const;     // u*X, u != 0 mod p
    ResidueSet negated() const;                // -X
    ResidueSet complement() const;

    friend ResidueSet operator|(const ResidueSet& a, const ResidueSet& b);
    friend ResidueSet operator&(const ResidueSet& a, const ResidueSet& b);

    bool operator==(const ResidueSet&) const = default;

private:
    std::uint64_t bits_;
    PrimeModulus m_;
};

// Closed-form lower bounds for |A+B| and its restricted variants, all as
// min{p, raw} with negative raws clamped to 0 (and flagged).
struct BoundReport {
    int cd;                  // min{p, |A|+|B|-1}        (Cauchy-Davenport)
    std::optional<int> eh;   // min{p, 2|A|-3}, only when |A|=|B|
    int thm2;                // min{p, |A|+|B|-2|S|-1}
    int pan_sun;             // min{p, |A|+|B|-|S|-2}
    bool clamped;

    bool operator==(const BoundReport&) const = default;
};

ResidueSet sumset(const ResidueSet& A, const ResidueSet& B);
ResidueSet restricted_sumset(const ResidueSet& A, const ResidueSet& B, const ResidueSet& S);
ResidueSet strict_sumset(const ResidueSet& A, const ResidueSet& B);
ResidueSet affine_image(const ResidueSet& X, Residue u, Residue t);

BoundReport bound_table(PrimeModulus p, int nA, int nB, int nS);

}  // namespace rsum

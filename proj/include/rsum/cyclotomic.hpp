#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "rsum/residue.hpp"

namespace rsum {

using Rational = mpq_class;

// An element of Q(zeta_p), zeta_p = e^{2*pi*i/p}, stored as exact rational
// coordinates in the power basis {1, zeta, ..., zeta^{p-2}}. The p-th
// cyclotomic polynomial is irreducible, so the representation is canonical:
// a number is zero iff every coordinate is zero. That makes is_zero() (and
// hence every support computation downstream) an exact decision with no
// tolerance anywhere.
//
// Reduction rule: zeta^{p-1} = -(1 + zeta + ... + zeta^{p-2}). For p = 2
// this degenerates to a single coordinate with zeta = -1, which the same
// code path handles.
class CycNum {
public:
    static CycNum zero(PrimeModulus m);
    static CycNum one(PrimeModulus m);
    static CycNum from_integer(PrimeModulus m, long long n);
    static CycNum from_rational(PrimeModulus m, const Rational& q);
    static CycNum from_coeffs(PrimeModulus m, std::vector<Rational> coeffs);

    // zeta^k reduced to the power basis, 0 <= k (taken mod p).
    static CycNum zeta_power(PrimeModulus m, unsigned long k);

    PrimeModulus modulus() const { return m_; }
    const std::vector<Rational>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_rational() const;  // all coordinates above zeta^0 vanish
    Rational rational_part() const { return c_[0]; }

    CycNum scaled(const Rational& q) const;

    friend CycNum operator+(const CycNum& x, const CycNum& y);
    friend CycNum operator-(const CycNum& x, const CycNum& y);
    friend CycNum operator*(const CycNum& x, const CycNum& y);
    CycNum operator-() const;
    CycNum& operator+=(const CycNum& y);
    CycNum& operator-=(const CycNum& y);

    bool operator==(const CycNum& y) const;

    std::string to_string() const;  // human-readable, e.g. "1 - 2/3*z^2"

private:
    CycNum(PrimeModulus m, std::vector<Rational> c) : m_(m), c_(std::move(c)) {}

    PrimeModulus m_;
    std::vector<Rational> c_;  // length p-1
};

// e_p(r) = e^{-2*pi*i*r/p} = zeta^{(p-r) mod p}.
CycNum root_power(PrimeModulus m, Residue r);

// Divide a vector of rationals by its content (gcd of numerators over lcm of
// denominators), signed so the first nonzero entry becomes positive. A zero
// vector is returned unchanged. Used to keep elimination entries small.
void normalize_content(std::vector<Rational>& v);

}  // namespace rsum

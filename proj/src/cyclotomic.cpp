#include "rsum/cyclotomic.hpp"

#include <sstream>
#include <stdexcept>

namespace rsum {

namespace {

void require_field_prime(PrimeModulus m) {
    if (m.value() > field_prime_ceiling())
        throw std::invalid_argument("p=" + std::to_string(m.value()) +
                                    " exceeds the field-arithmetic ceiling " +
                                    std::to_string(field_prime_ceiling()));
}

void require_same_modulus(PrimeModulus a, PrimeModulus b) {
    if (!(a == b))
        throw std::invalid_argument("modulus mismatch: p=" + std::to_string(a.value()) +
                                    " vs p=" + std::to_string(b.value()));
}

}  // namespace

CycNum CycNum::zero(PrimeModulus m) {
    require_field_prime(m);
    return CycNum(m, std::vector<Rational>(m.value() - 1));
}

CycNum CycNum::one(PrimeModulus m) { return from_integer(m, 1); }

CycNum CycNum::from_integer(PrimeModulus m, long long n) {
    return from_rational(m, Rational(static_cast<long>(n)));
}

CycNum CycNum::from_rational(PrimeModulus m, const Rational& q) {
    CycNum x = zero(m);
    x.c_[0] = q;
    return x;
}

CycNum CycNum::from_coeffs(PrimeModulus m, std::vector<Rational> coeffs) {
    require_field_prime(m);
    if (coeffs.size() != m.value() - 1)
        throw std::invalid_argument("coefficient vector must have length p-1");
    for (auto& q : coeffs) q.canonicalize();
    return CycNum(m, std::move(coeffs));
}

CycNum CycNum::zeta_power(PrimeModulus m, unsigned long k) {
    CycNum x = zero(m);
    const unsigned p = m.value();
    k %= p;
    if (k < p - 1) {
        x.c_[k] = 1;
    } else {
        // zeta^{p-1} = -(1 + zeta + ... + zeta^{p-2})
        for (auto& c : x.c_) c = -1;
    }
    return x;
}

bool CycNum::is_zero() const {
    for (const auto& c : c_)
        if (c != 0) return false;
    return true;
}

bool CycNum::is_rational() const {
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

CycNum CycNum::scaled(const Rational& q) const {
    CycNum out = *this;
    for (auto& c : out.c_) c *= q;
    return out;
}

CycNum operator+(const CycNum& x, const CycNum& y) {
    CycNum out = x;
    out += y;
    return out;
}

CycNum operator-(const CycNum& x, const CycNum& y) {
    CycNum out = x;
    out -= y;
    return out;
}

CycNum& CycNum::operator+=(const CycNum& y) {
    require_same_modulus(m_, y.m_);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += y.c_[i];
    return *this;
}

CycNum& CycNum::operator-=(const CycNum& y) {
    require_same_modulus(m_, y.m_);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= y.c_[i];
    return *this;
}

CycNum CycNum::operator-() const {
    CycNum out = *this;
    for (auto& c : out.c_) c = -c;
    return out;
}

CycNum operator*(const CycNum& x, const CycNum& y) {
    require_same_modulus(x.m_, y.m_);
    const unsigned p = x.m_.value();
    const std::size_t n = p - 1;  // basis size

    // Polynomial product: exponents 0 .. 2n-2.
    std::vector<Rational> acc(2 * n - 1);
    for (std::size_t i = 0; i < n; ++i) {
        if (x.c_[i] == 0) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (y.c_[j] == 0) continue;
            acc[i + j] += x.c_[i] * y.c_[j];
        }
    }

    // Fold zeta^p = 1, then eliminate zeta^{p-1} via the minimal polynomial.
    for (std::size_t e = p; e < acc.size(); ++e) acc[e - p] += acc[e];
    std::vector<Rational> out(n);
    const bool has_top = acc.size() >= p;
    for (std::size_t i = 0; i < n; ++i) {
        out[i] = acc[i];
        if (has_top) out[i] -= acc[p - 1];
    }
    return CycNum(x.m_, std::move(out));  // GMP arithmetic keeps coefficients canonical
}

bool CycNum::operator==(const CycNum& y) const {
    return m_ == y.m_ && c_ == y.c_;
}

std::string CycNum::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        Rational a = c_[i];
        if (first) {
            if (a < 0) { os << "-"; a = -a; }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        if (i == 0) {
            os << a;
        } else {
            if (a != 1) os << a << "*";
            os << "z";
            if (i > 1) os << "^" << i;
        }
    }
    if (first) os << "0";
    return os.str();
}

CycNum root_power(PrimeModulus m, Residue r) {
    require_same_modulus(m, r.modulus());
    const unsigned p = m.value();
    return CycNum::zeta_power(m, (p - r.value()) % p);
}

void normalize_content(std::vector<Rational>& v) {
    mpz_class g = 0, l = 1;
    int sign = 0;
    for (const auto& q : v) {
        if (q == 0) continue;
        if (sign == 0) sign = sgn(q) > 0 ? 1 : -1;
        g = gcd(g, q.get_num());
        l = lcm(l, q.get_den());
    }
    if (sign == 0) return;
    Rational content(sign > 0 ? g : -g, l);
    content.canonicalize();
    for (auto& q : v) q /= content;
}

}  // namespace rsum

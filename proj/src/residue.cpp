#include "rsum/residue.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace rsum {

namespace {

unsigned env_ceiling(const char* name, unsigned def, unsigned hard_max) {
    const char* s = std::getenv(name);
    if (!s || !*s) return def;
    char* end = nullptr;
    const unsigned long v = std::strtoul(s, &end, 10);
    if (end == s || *end != '\0' || v < 2)
        throw std::invalid_argument(std::string(name) + ": expected an integer >= 2, got \"" + s + "\"");
    return static_cast<unsigned>(v > hard_max ? hard_max : v);
}

bool is_prime(unsigned n) {
    if (n < 2) return false;
    for (unsigned d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

void require_same_modulus(PrimeModulus a, PrimeModulus b) {
    if (!(a == b))
        throw std::invalid_argument("modulus mismatch: p=" + std::to_string(a.value()) +
                                    " vs p=" + std::to_string(b.value()));
}

}  // namespace

unsigned set_prime_ceiling() {
    static const unsigned v = env_ceiling("RSUM_MAX_SET_PRIME", 61, 61);
    return v;
}

unsigned field_prime_ceiling() {
    static const unsigned v = env_ceiling("RSUM_MAX_FIELD_PRIME", 31, 0xffffffffu);
    return v;
}

PrimeModulus::PrimeModulus(unsigned p) : p_(p) {
    if (!is_prime(p))
        throw std::invalid_argument("p must be prime, got " + std::to_string(p));
    if (p > set_prime_ceiling())
        throw std::invalid_argument("p=" + std::to_string(p) + " exceeds the set-arithmetic ceiling " +
                                    std::to_string(set_prime_ceiling()));
}

Residue::Residue(long long value, PrimeModulus m) : m_(m) {
    const long long p = m.value();
    v_ = static_cast<unsigned>(((value % p) + p) % p);
}

Residue operator+(Residue a, Residue b) {
    require_same_modulus(a.m_, b.m_);
    return Residue(static_cast<long long>(a.v_) + b.v_, a.m_);
}

Residue operator-(Residue a, Residue b) {
    require_same_modulus(a.m_, b.m_);
    return Residue(static_cast<long long>(a.v_) - b.v_, a.m_);
}

Residue operator*(Residue a, Residue b) {
    require_same_modulus(a.m_, b.m_);
    return Residue(static_cast<long long>(a.v_) * b.v_, a.m_);
}

Residue Residue::operator-() const { return Residue(-static_cast<long long>(v_), m_); }

ResidueSet ResidueSet::from_mask(PrimeModulus m, std::uint64_t bits) {
    if (bits & ~m.full_mask())
        throw std::invalid_argument("set mask has bits at positions >= p");
    ResidueSet s(m);
    s.bits_ = bits;
    return s;
}

ResidueSet ResidueSet::from_elements(PrimeModulus m, const std::vector<long long>& xs) {
    ResidueSet s(m);
    for (long long x : xs) s.bits_ |= std::uint64_t{1} << Residue(x, m).value();
    return s;
}

ResidueSet ResidueSet::singleton(Residue r) {
    return from_mask(r.modulus(), std::uint64_t{1} << r.value());
}

bool ResidueSet::is_subset_of(const ResidueSet& other) const {
    require_same_modulus(m_, other.m_);
    return (bits_ & ~other.bits_) == 0;
}

std::vector<unsigned> ResidueSet::elements() const {
    std::vector<unsigned> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (unsigned r = 0; r < m_.value(); ++r)
        if (bits_ >> r & 1) out.push_back(r);
    return out;
}

ResidueSet ResidueSet::with(unsigned r) const {
    if (r >= m_.value()) throw std::invalid_argument("residue out of range");
    return from_mask(m_, bits_ | (std::uint64_t{1} << r));
}

ResidueSet ResidueSet::translated(long long t) const {
    const unsigned r = Residue(t, m_).value();
    return from_mask(m_, detail::rotl_mask(bits_, r, m_.value(), m_.full_mask()));
}

ResidueSet ResidueSet::dilated(long long u) const {
    const unsigned uu = Residue(u, m_).value();
    if (uu == 0) throw std::invalid_argument("dilation by 0 is not a bijection");
    std::uint64_t out = 0;
    for (unsigned x = 0; x < m_.value(); ++x)
        if (bits_ >> x & 1) out |= std::uint64_t{1} << (static_cast<std::uint64_t>(uu) * x % m_.value());
    return from_mask(m_, out);
}

ResidueSet ResidueSet::negated() const {
    return from_mask(m_, detail::negate_mask(bits_, m_.value()));
}

ResidueSet ResidueSet::complement() const {
    return from_mask(m_, ~bits_ & m_.full_mask());
}

ResidueSet operator|(const ResidueSet& a, const ResidueSet& b) {
    require_same_modulus(a.m_, b.m_);
    return ResidueSet::from_mask(a.m_, a.bits_ | b.bits_);
}

ResidueSet operator&(const ResidueSet& a, const ResidueSet& b) {
    require_same_modulus(a.m_, b.m_);
    return ResidueSet::from_mask(a.m_, a.bits_ & b.bits_);
}

ResidueSet sumset(const ResidueSet& A, const ResidueSet& B) {
    require_same_modulus(A.modulus(), B.modulus());
    const unsigned p = A.modulus().value();
    const std::uint64_t full = A.modulus().full_mask();
    std::uint64_t c = 0;
    std::uint64_t rest = A.mask();
    while (rest) {
        const unsigned a = static_cast<unsigned>(std::countr_zero(rest));
        rest &= rest - 1;
        c |= detail::rotl_mask(B.mask(), a, p, full);
    }
    return ResidueSet::from_mask(A.modulus(), c);
}

ResidueSet restricted_sumset(const ResidueSet& A, const ResidueSet& B, const ResidueSet& S) {
    require_same_modulus(A.modulus(), B.modulus());
    require_same_modulus(A.modulus(), S.modulus());
    const unsigned p = A.modulus().value();
    const std::uint64_t full = A.modulus().full_mask();
    const std::uint64_t negS = detail::negate_mask(S.mask(), p);
    return ResidueSet::from_mask(A.modulus(),
                                 detail::restricted_sumset_mask(A.mask(), B.mask(), negS, p, full));
}

ResidueSet strict_sumset(const ResidueSet& A, const ResidueSet& B) {
    ResidueSet zero = ResidueSet::singleton(Residue(0, A.modulus()));
    return restricted_sumset(A, B, zero);
}

ResidueSet affine_image(const ResidueSet& X, Residue u, Residue t) {
    require_same_modulus(X.modulus(), u.modulus());
    require_same_modulus(X.modulus(), t.modulus());
    if (u.value() == 0) throw std::invalid_argument("affine_image: u must be nonzero");
    return X.dilated(u.value()).translated(t.value());
}

BoundReport bound_table(PrimeModulus p, int nA, int nB, int nS) {
    const int pv = static_cast<int>(p.value());
    for (int n : {nA, nB, nS})
        if (n < 0 || n > pv)
            throw std::invalid_argument("set size out of range [0, p]: " + std::to_string(n));

    bool clamped = false;
    auto bound = [&](int raw) {
        if (raw < 0) {
            clamped = true;
            raw = 0;
        }
        return raw < pv ? raw : pv;
    };

    BoundReport r{};
    r.cd = bound(nA + nB - 1);
    if (nA == nB) r.eh = bound(2 * nA - 3);
    r.thm2 = bound(nA + nB - 2 * nS - 1);
    r.pan_sun = bound(nA + nB - nS - 2);
    r.clamped = clamped;
    return r;
}

}  // namespace rsum

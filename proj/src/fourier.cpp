#include "rsum/fourier.hpp"

#include <stdexcept>

namespace rsum {

namespace {

void require_same_modulus(PrimeModulus a, PrimeModulus b) {
    if (!(a == b))
        throw std::invalid_argument("modulus mismatch: p=" + std::to_string(a.value()) +
                                    " vs p=" + std::to_string(b.value()));
}

std::vector<CycNum> root_table(PrimeModulus m) {
    const unsigned p = m.value();
    std::vector<CycNum> roots;
    roots.reserve(p);
    for (unsigned r = 0; r < p; ++r) roots.push_back(root_power(m, Residue(r, m)));
    return roots;
}

}  // namespace

ZpFunction ZpFunction::zero(PrimeModulus m) {
    return ZpFunction(m, std::vector<CycNum>(m.value(), CycNum::zero(m)));
}

ZpFunction ZpFunction::constant(PrimeModulus m, const CycNum& v) {
    require_same_modulus(m, v.modulus());
    return ZpFunction(m, std::vector<CycNum>(m.value(), v));
}

ZpFunction ZpFunction::delta(PrimeModulus m, Residue at) {
    require_same_modulus(m, at.modulus());
    std::vector<CycNum> v(m.value(), CycNum::zero(m));
    v[at.value()] = CycNum::one(m);
    return ZpFunction(m, std::move(v));
}

ZpFunction ZpFunction::from_values(PrimeModulus m, std::vector<CycNum> values) {
    if (values.size() != m.value())
        throw std::invalid_argument("ZpFunction needs exactly p values");
    for (const auto& v : values) require_same_modulus(m, v.modulus());
    return ZpFunction(m, std::move(values));
}

bool ZpFunction::is_zero_function() const {
    for (const auto& v : v_)
        if (!v.is_zero()) return false;
    return true;
}

ZpFunction dft(const ZpFunction& f) {
    const PrimeModulus m = f.modulus();
    const unsigned p = m.value();
    const auto roots = root_table(m);
    std::vector<CycNum> out(p, CycNum::zero(m));
    for (unsigned a = 0; a < p; ++a) {
        if (f[a].is_zero()) continue;
        for (unsigned x = 0; x < p; ++x)
            out[x] += f[a] * roots[static_cast<std::size_t>(a) * x % p];
    }
    return ZpFunction::from_values(m, std::move(out));
}

ZpFunction idft(const ZpFunction& g) {
    const PrimeModulus m = g.modulus();
    const unsigned p = m.value();
    const auto roots = root_table(m);
    const Rational inv_p(1, static_cast<unsigned long>(p));
    std::vector<CycNum> out(p, CycNum::zero(m));
    for (unsigned x = 0; x < p; ++x) {
        if (g[x].is_zero()) continue;
        for (unsigned a = 0; a < p; ++a) {
            const unsigned r = (p - static_cast<unsigned>(static_cast<std::size_t>(a) * x % p)) % p;
            out[a] += g[x] * roots[r];
        }
    }
    for (auto& v : out) v = v.scaled(inv_p);
    return ZpFunction::from_values(m, std::move(out));
}

ResidueSet support(const ZpFunction& f) {
    ResidueSet s(f.modulus());
    for (unsigned x = 0; x < f.modulus().value(); ++x)
        if (!f[x].is_zero()) s = s.with(x);
    return s;
}

UncertaintyReport uncertainty_check(const ZpFunction& f) {
    if (f.modulus().value() == 2)
        throw std::invalid_argument("uncertainty_check requires an odd prime");
    if (f.is_zero_function())
        throw std::invalid_argument("uncertainty_check requires a function that is not identically zero");
    const int lhs = support(f).size() + support(dft(f)).size();
    return UncertaintyReport{lhs, lhs >= static_cast<int>(f.modulus().value()) + 1};
}

}  // namespace rsum

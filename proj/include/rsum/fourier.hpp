#pragma once

#include <vector>

#include "rsum/cyclotomic.hpp"
#include "rsum/residue.hpp"

namespace rsum {

// A function Z_p -> Q(zeta_p), stored as p values indexed by canonical
// residue. Immutable after construction.
class ZpFunction {
public:
    static ZpFunction zero(PrimeModulus m);
    static ZpFunction constant(PrimeModulus m, const CycNum& v);
    static ZpFunction delta(PrimeModulus m, Residue at);  // 1 at `at`, else 0
    static ZpFunction from_values(PrimeModulus m, std::vector<CycNum> values);

    PrimeModulus modulus() const { return m_; }
    const CycNum& operator[](unsigned a) const { return v_[a]; }
    const CycNum& at(Residue a) const { return v_[a.value()]; }
    const std::vector<CycNum>& values() const { return v_; }

    bool is_zero_function() const;

    bool operator==(const ZpFunction&) const = default;

private:
    ZpFunction(PrimeModulus m, std::vector<CycNum> v) : m_(m), v_(std::move(v)) {}

    PrimeModulus m_;
    std::vector<CycNum> v_;
};

// f_hat(x) = sum_a f(a) e_p(ax), with e_p(r) = e^{-2*pi*i*r/p}. Exact.
ZpFunction dft(const ZpFunction& f);

// Inverse: f(a) = (1/p) sum_x g(x) e_p(-ax). idft(dft(f)) == f exactly.
ZpFunction idft(const ZpFunction& g);

// supp(f) = {x : f(x) != 0}, decided exactly.
ResidueSet support(const ZpFunction& f);

struct UncertaintyReport {
    int lhs;     // |supp(f)| + |supp(f_hat)|
    bool holds;  // lhs >= p+1
};

// |supp(f)| + |supp(f_hat)| >= p+1 for nonzero f on Z_p, p an odd prime.
// Rejects the zero function and p = 2.
UncertaintyReport uncertainty_check(const ZpFunction& f);

}  // namespace rsum

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rsum/json_io.hpp"
#include "rsum/rng.hpp"
#include "rsum/witness.hpp"

using namespace rsum;

namespace {

ResidueSet set_of(PrimeModulus p, std::initializer_list<long long> xs) {
    return ResidueSet::from_elements(p, std::vector<long long>(xs));
}

ResidueSet random_nonempty(Prng& rng, PrimeModulus p) {
    while (true) {
        auto s = ResidueSet::from_mask(p, rng.next() & p.full_mask());
        if (!s.empty()) return s;
    }
}

}  // namespace

TEST_CASE("nullspace for A={0}, B=Z_3 is spanned by the delta at 0") {
    PrimeModulus p(3);
    auto sys = solve_support_system(p, set_of(p, {0}), ResidueSet::full_set(p));
    REQUIRE(sys.nullspace_basis.size() == 1);
    const auto& v = sys.nullspace_basis[0];
    CHECK(!v[0].is_zero());
    CHECK(v[1].is_zero());
    CHECK(v[2].is_zero());
    CHECK(sys.constraint_matrix.size() == 2);  // f(1)=0, f(2)=0
}

TEST_CASE("nullspace for A=Z_3, B={0} is the constants") {
    PrimeModulus p(3);
    auto sys = solve_support_system(p, ResidueSet::full_set(p), set_of(p, {0}));
    REQUIRE(sys.nullspace_basis.size() == 1);
    const auto& v = sys.nullspace_basis[0];
    CHECK(!v[0].is_zero());
    CHECK(v[0] == v[1]);
    CHECK(v[1] == v[2]);
}

TEST_CASE("nullspace for A=B={0,1} at p=3 solves f(0) = -zeta*f(1)") {
    PrimeModulus p(3);
    auto sys = solve_support_system(p, set_of(p, {0, 1}), set_of(p, {0, 1}));
    REQUIRE(sys.nullspace_basis.size() == 1);
    const auto& v = sys.nullspace_basis[0];
    CHECK(v[2].is_zero());
    CHECK(!v[0].is_zero());
    // v is proportional to (-zeta, 1, 0): f(0) + zeta*f(1) = 0
    CHECK((v[0] + CycNum::zeta_power(p, 1) * v[1]).is_zero());
}

TEST_CASE("witness construction examples at p=3") {
    PrimeModulus p(3);
    auto f1 = construct_witness(p, ResidueSet::full_set(p), set_of(p, {0}), 1);
    CHECK(verify_witness(f1, ResidueSet::full_set(p), set_of(p, {0})));
    CHECK(f1[0] == f1[1]);  // constant

    auto f2 = construct_witness(p, set_of(p, {0}), ResidueSet::full_set(p), 1);
    CHECK(verify_witness(f2, set_of(p, {0}), ResidueSet::full_set(p)));

    auto f3 = construct_witness(p, set_of(p, {0, 1}), set_of(p, {0, 1}), 1);
    CHECK(verify_witness(f3, set_of(p, {0, 1}), set_of(p, {0, 1})));
    CHECK((f3[0] + CycNum::zeta_power(p, 1) * f3[1]).is_zero());
}

TEST_CASE("verify_witness truth table") {
    PrimeModulus p(5);
    auto d0 = ZpFunction::delta(p, Residue(0, p));
    CHECK(verify_witness(d0, set_of(p, {0}), ResidueSet::full_set(p)));
    CHECK(!verify_witness(d0, set_of(p, {0}), set_of(p, {0})));
    CHECK(verify_witness(ZpFunction::constant(p, CycNum::one(p)), ResidueSet::full_set(p),
                         set_of(p, {0})));
}

TEST_CASE("preconditions") {
    PrimeModulus p(5);
    CHECK_THROWS_AS(solve_support_system(p, set_of(p, {0, 1}), set_of(p, {0, 1})),
                    std::invalid_argument);  // size deficit
    CHECK_THROWS_AS(solve_support_system(p, ResidueSet(p), ResidueSet::full_set(p)),
                    std::invalid_argument);
    PrimeModulus p2(2);
    CHECK_THROWS_AS(
        solve_support_system(p2, ResidueSet::full_set(p2), ResidueSet::full_set(p2)),
        std::invalid_argument);
}

TEST_CASE("exhaustive success and basis containments for p in {3,5}") {
    for (unsigned pv : {3u, 5u}) {
        PrimeModulus p(pv);
        for (std::uint64_t am = 1; am <= p.full_mask(); ++am)
            for (std::uint64_t bm = 1; bm <= p.full_mask(); ++bm) {
                auto A = ResidueSet::from_mask(p, am);
                auto B = ResidueSet::from_mask(p, bm);
                if (A.size() + B.size() < static_cast<int>(pv) + 1) continue;

                auto sys = solve_support_system(p, A, B);
                // Fourier minors of prime order are nonsingular, so the rank
                // is full and the dimension is exactly |A|+|B|-p.
                REQUIRE(static_cast<int>(sys.nullspace_basis.size()) ==
                        A.size() + B.size() - static_cast<int>(pv));
                for (const auto& v : sys.nullspace_basis) {
                    REQUIRE(support(v).is_subset_of(A));
                    REQUIRE(support(dft(v)).is_subset_of(B));
                }

                auto f = construct_witness(p, A, B, 42);
                REQUIRE(verify_witness(f, A, B));
            }
    }
}

TEST_CASE("random pairs at p in {11,13}") {
    Prng rng(7);
    for (unsigned pv : {11u, 13u}) {
        PrimeModulus p(pv);
        int done = 0;
        while (done < 100) {
            auto A = random_nonempty(rng, p);
            auto B = random_nonempty(rng, p);
            if (A.size() + B.size() < static_cast<int>(pv) + 1) continue;
            ++done;
            auto f = construct_witness(p, A, B, rng.next());
            REQUIRE(verify_witness(f, A, B));
        }
    }
}

TEST_CASE("seeded determinism and JSON roundtrip fixed point") {
    PrimeModulus p(7);
    auto A = set_of(p, {0, 2, 3, 5});
    auto B = set_of(p, {1, 2, 4, 6});
    auto f1 = construct_witness(p, A, B, 12345);
    auto f2 = construct_witness(p, A, B, 12345);
    CHECK(f1 == f2);
    auto f3 = construct_witness(p, A, B, 54321);
    CHECK(verify_witness(f3, A, B));

    const Json j = to_json(f1);
    const std::string text = j.dump();
    auto parsed = zpfunction_from_json(p, Json::parse(text));
    CHECK(parsed == f1);
    CHECK(verify_witness(parsed, A, B));
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hypervar/resolution.hpp"

using namespace hypervar;

TEST_CASE("betti numbers of the residue field over the polynomial ring") {
    auto F = Field::prime(2);
    RingSpec ring = RingSpec::elementary_abelian(F, 2);
    ModuleRep k = cyclic_module(ring, {{1, 0}, {0, 1}});
    BettiTable t = betti_over_P(k, 4);
    CHECK(t.betti == std::vector<std::size_t>{1, 2, 1, 0, 0});
}

TEST_CASE("betti numbers of the truncated ring over the polynomial ring") {
    // R = k[t1,t2]/(t1^3, t2^3) is resolved over P by the Koszul complex
    // on the two relations: Betti numbers (1, 2, 1).
    auto F = Field::prime(3);
    RingSpec ring = RingSpec::elementary_abelian(F, 2);
    ModuleRep R = regular_module(ring);
    BettiTable t = betti_over_P(R, 4);
    CHECK(t.betti == std::vector<std::size_t>{1, 2, 1, 0, 0});
}

TEST_CASE("two-periodic tail for one-variable truncations") {
    // R = k[t]/(t^5), M = k[t]/(t^j): infinite 2-periodic resolution
    // except at j = 5, where M is free.
    auto F = Field::prime(5);
    RingSpec ring(F, 1, 1, {5});
    for (std::uint32_t j = 1; j <= 5; ++j) {
        ModuleRep M = cyclic_module(ring, {{j}});
        CHECK(M.m == j);
        BettiTable t = betti_over_hypersurface(
            M, HypersurfaceCoeffs::from_point(ring, {1}), 6);
        std::vector<std::size_t> expect(7, j == 5 ? 0 : 1);
        expect[0] = 1;
        CHECK(t.betti == expect);
    }
}

TEST_CASE("hypersurface complex squares to zero with polynomial coefficients") {
    auto F = Field::prime(2);
    RingSpec ring = RingSpec::elementary_abelian(F, 2);
    auto ctx = ring.t_context();
    ModuleRep M = random_module(ring, 2, 1, 7);
    std::vector<MPoly> g = {parse_poly(ctx, "1 + t2"), parse_poly(ctx, "t1*t2")};
    HypersurfaceCoeffs coeffs(ring, g);
    VectorComplex X = hypersurface_complex(M, coeffs, 7);
    X.check_square_zero();
    CHECK(X.dims.size() == 8);
    CHECK_THROWS(hypersurface_complex(
        M, HypersurfaceCoeffs(ring, {MPoly(ctx), MPoly(ctx)}), 4));
}

TEST_CASE("betti over a hypersurface is 2-periodic past d") {
    auto F = Field::prime(3);
    RingSpec ring = RingSpec::elementary_abelian(F, 2);
    std::mt19937_64 rng(5);
    for (int t = 0; t < 10; ++t) {
        ModuleRep M = random_module(ring, 1, 1 + t % 3, 50 + t);
        if (M.m == 0) continue;
        std::vector<felem> a = {static_cast<felem>(rng() % 3), static_cast<felem>(rng() % 3)};
        if (a[0] == 0 && a[1] == 0) a[0] = 1;
        BettiTable tab =
            betti_over_hypersurface(M, HypersurfaceCoeffs::from_point(ring, a), 8);
        CHECK(tab.periodic_from(2));
        CHECK(tab.stable_period_detected);
    }
}

TEST_CASE("stable matrices compose to zero and bound the rank") {
    auto F = Field::prime(2);
    RingSpec ring = RingSpec::elementary_abelian(F, 2);
    std::mt19937_64 rng(9);
    for (int t = 0; t < 10; ++t) {
        ModuleRep M = random_module(ring, 1 + t % 2, 1 + t % 3, 80 + t);
        if (M.m == 0) continue;
        std::vector<felem> a = {static_cast<felem>(rng() % 2), static_cast<felem>(rng() % 2)};
        StablePair s = stable_matrices(M, HypersurfaceCoeffs::from_point(ring, a));
        CHECK(s.r == M.m * 2);
        CHECK((s.A * s.B).is_zero());
        CHECK((s.B * s.A).is_zero());
        Matrix C = c_matrix(M, a);
        CHECK(C.rows() == 2 * s.r);
        CHECK(C.rank() <= s.r);
    }
}

TEST_CASE("tensor formula for coefficients in the maximal ideal") {
    auto F = Field::prime(2);
    RingSpec ring = RingSpec::elementary_abelian(F, 2);
    auto ctx = ring.t_context();
    ModuleRep M = random_module(ring, 2, 2, 11);
    REQUIRE(M.m > 0);
    HypersurfaceCoeffs coeffs(ring, {parse_poly(ctx, "t1"), parse_poly(ctx, "t2 + t1*t2")});
    CHECK(betti_tensor_formula_check(M, coeffs, 8));
}

TEST_CASE("symbolic entry table matches the construction") {
    for (std::uint32_t p : {2u, 3u}) {
        auto F = Field::prime(p);
        for (std::size_t c = 1; c <= 3; ++c) {
            CHECK(example_matrices_agree(RingSpec::elementary_abelian(F, c)));
            if (p == 3)
                CHECK(example_matrices_agree(
                    RingSpec(F, c, c, std::vector<std::uint32_t>(c, 4))));
        }
    }
}

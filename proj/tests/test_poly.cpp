#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hypervar/poly.hpp"

using namespace hypervar;

TEST_CASE("multivariate parser round trip") {
    auto F = Field::prime(5);
    auto ctx = PolyContext::t_vars(F, 2);
    MPoly f = parse_poly(ctx, "1 + 2*t1*t2^3");
    MPoly g = MPoly::constant(ctx, 1) +
              (MPoly::variable(ctx, 0) * MPoly::variable(ctx, 1, 3)).scaled(2);
    CHECK(f == g);
    CHECK(parse_poly(ctx, f.to_string()) == f);
    CHECK(parse_poly(ctx, "(t1 + t2)^2") ==
          parse_poly(ctx, "t1^2 + 2*t1*t2 + t2^2"));
    CHECK_THROWS(parse_poly(ctx, "t3 + 1"));
}

TEST_CASE("evaluation is a ring homomorphism") {
    auto F = Field::prime(7);
    auto ctx = PolyContext::t_vars(F, 3);
    std::mt19937_64 rng(1);
    std::uniform_int_distribution<std::uint64_t> dist(0, 6);
    auto rand_poly = [&]() {
        MPoly r(ctx);
        for (int t = 0; t < 4; ++t) {
            Exponents e = {static_cast<std::uint32_t>(rng() % 3),
                           static_cast<std::uint32_t>(rng() % 3),
                           static_cast<std::uint32_t>(rng() % 3)};
            r.add_term(e, static_cast<felem>(dist(rng)));
        }
        return r;
    };
    for (int t = 0; t < 200; ++t) {
        MPoly a = rand_poly(), b = rand_poly();
        std::vector<felem> pt = {static_cast<felem>(dist(rng)), static_cast<felem>(dist(rng)),
                                 static_cast<felem>(dist(rng))};
        CHECK((a + b).evaluate(pt) == F->add(a.evaluate(pt), b.evaluate(pt)));
        CHECK((a * b).evaluate(pt) == F->mul(a.evaluate(pt), b.evaluate(pt)));
    }
}

TEST_CASE("frobenius identity at the operator level") {
    // (t1 + t2)^p = t1^p + t2^p in characteristic p
    for (std::uint32_t p : {2u, 3u, 5u}) {
        auto F = Field::prime(p);
        auto ctx = PolyContext::t_vars(F, 2);
        MPoly lhs = (MPoly::variable(ctx, 0) + MPoly::variable(ctx, 1)).pow(p);
        MPoly rhs = MPoly::variable(ctx, 0, p) + MPoly::variable(ctx, 1, p);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("univariate gcd") {
    auto F = Field::prime(5);
    UPoly a(F, {4, 0, 1});  // s^2 - 1
    UPoly b(F, {4, 1});     // s - 1
    CHECK(upoly_gcd(a, b) == b.monic());
    UPoly c(F, {1, 1});  // s + 1
    CHECK(upoly_gcd(b, c).degree() == 0);
}

TEST_CASE("divmod") {
    auto F = Field::prime(7);
    std::mt19937_64 rng(2);
    std::uniform_int_distribution<std::uint64_t> dist(0, 6);
    for (int t = 0; t < 300; ++t) {
        std::vector<felem> ac(1 + rng() % 6), bc(1 + rng() % 4);
        for (auto& v : ac) v = static_cast<felem>(dist(rng));
        for (auto& v : bc) v = static_cast<felem>(dist(rng));
        UPoly a(F, ac), b(F, bc);
        if (b.is_zero()) continue;
        auto [q, r] = a.divmod(b);
        CHECK(q * b + r == a);
        if (!r.is_zero()) CHECK(r.degree() < b.degree());
    }
}

TEST_CASE("squarefree part in characteristic p") {
    auto F = Field::prime(3);
    UPoly s(F, {0, 1});
    UPoly one = UPoly::constant(F, 1);
    // (s-1)^2 (s+1) -> (s-1)(s+1)
    UPoly a = (s - one) * (s - one) * (s + one);
    CHECK(squarefree_part(a) == ((s - one) * (s + one)).monic());
    // s^3 - 1 = (s-1)^3 in characteristic 3: derivative vanishes
    UPoly b(F, {2, 0, 0, 1});
    CHECK(squarefree_part(b) == (s - one).monic());
    // s^9 has squarefree part s
    UPoly c(F, std::vector<felem>(10, 0));
    {
        std::vector<felem> cc(10, 0);
        cc[9] = 1;
        c = UPoly(F, cc);
    }
    CHECK(squarefree_part(c) == s);
}

TEST_CASE("squarefree part over an extension field") {
    auto F = Field::of_order(4);
    felem z = F->from_digits({0, 1});
    UPoly s(F, {0, 1});
    // (s - z)^2: in characteristic 2 this is s^2 - z^2, derivative 0
    UPoly a = (s - UPoly::constant(F, z)) * (s - UPoly::constant(F, z));
    CHECK(squarefree_part(a) == (s - UPoly::constant(F, z)));
}

TEST_CASE("congruent coefficient detection") {
    auto F = Field::prime(2);
    auto ctx = PolyContext::t_vars(F, 2);
    std::vector<MPoly> g = {parse_poly(ctx, "1 + t1"), parse_poly(ctx, "t2")};
    std::vector<MPoly> h = {parse_poly(ctx, "1 + t2^2"), parse_poly(ctx, "t1*t2")};
    std::vector<MPoly> k = {parse_poly(ctx, "t1"), parse_poly(ctx, "t2")};
    CHECK(coeffs_congruent(g, h));
    CHECK_FALSE(coeffs_congruent(g, k));
}

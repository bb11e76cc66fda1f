#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "hypervar/suites.hpp"
#include "hypervar/varieties.hpp"

using namespace hypervar;

namespace {

std::set<std::vector<felem>> member_set(const SupportReport& rep) {
    std::set<std::vector<felem>> s;
    for (const auto& ev : rep.points)
        if (ev.member) s.insert(ev.point);
    return s;
}

}  // namespace

TEST_CASE("jordan blocks and the freeness rank test") {
    auto F = Field::prime(3);
    // single block of size 3: free over k[t]/(t^3)
    Matrix J(F, 3, 3);
    J.at(0, 1) = 1;
    J.at(1, 2) = 1;
    CHECK(nilpotent_free_rank_test(J, 3));
    CHECK(jordan_block_sizes(J) == std::vector<std::size_t>{3});
    // block of size 2 padded with a zero block: not free
    Matrix K(F, 3, 3);
    K.at(0, 1) = 1;
    CHECK_FALSE(nilpotent_free_rank_test(K, 3));
    CHECK(jordan_block_sizes(K) == std::vector<std::size_t>{2, 1});
    CHECK_THROWS(nilpotent_free_rank_test(K, 1));  // K^1 != 0
}

TEST_CASE("all freeness conditions agree on random nilpotents") {
    std::mt19937_64 rng(51);
    for (int t = 0; t < 100; ++t) {
        std::uint32_t p = (t % 3 == 0) ? 2 : (t % 3 == 1 ? 3 : 5);
        auto F = Field::prime(p);
        std::size_t m = 1 + rng() % 10;
        Matrix a = gen::random_nilpotent(F, m, p, rng);
        auto rep = nilpotent_conditions(a, p);
        CHECK(rep.all_agree());
        bool oracle = true;
        for (std::size_t b : jordan_block_sizes(a)) oracle = oracle && b == p;
        CHECK(rep.rank_test == oracle);
    }
}

TEST_CASE("support of the residue field is everything") {
    auto F = Field::prime(2);
    RingSpec ring = RingSpec::elementary_abelian(F, 2);
    ModuleRep k = cyclic_module(ring, {{1, 0}, {0, 1}});
    SupportReport rep = support_enumerate(k, F);
    CHECK(rep.member_count == 4);
    CHECK(rep.methods_agree);
}

TEST_CASE("support of the free module is the origin") {
    for (std::uint32_t p : {2u, 3u}) {
        auto F = Field::prime(p);
        RingSpec ring = RingSpec::elementary_abelian(F, 2);
        ModuleRep R = regular_module(ring);
        SupportReport rep = support_enumerate(R, F);
        CHECK(member_set(rep) == std::set<std::vector<felem>>{{0, 0}});
        CHECK(rep.methods_agree);
    }
}

TEST_CASE("support of R/(t1) is the line a2 = 0") {
    auto F = Field::prime(2);
    RingSpec ring = RingSpec::elementary_abelian(F, 2);
    ModuleRep M = cyclic_module(ring, {{1, 0}});
    SupportReport rep = support_enumerate(M, F);
    CHECK(member_set(rep) == std::set<std::vector<felem>>{{0, 0}, {1, 0}});
    // the same line over F_4 after scalar extension
    auto F4 = Field::of_order(4);
    ModuleRep M4 = extend_scalars(M, F4);
    SupportReport rep4 = support_enumerate(M4, F4);
    std::set<std::vector<felem>> expect;
    for (felem a : F4->enumerate()) expect.insert({a, 0});
    CHECK(member_set(rep4) == expect);
    CHECK(rep4.methods_agree);
}

TEST_CASE("rank variety of R/(t1)") {
    auto F = Field::prime(2);
    RingSpec ring = RingSpec::elementary_abelian(F, 2);
    ModuleRep M = cyclic_module(ring, {{1, 0}});
    RankReport rep = rank_variety_enumerate(M, F);
    // u = a1 t1 + a2 t2 restricts to a non-free module iff a2 = 0
    for (const auto& rp : rep.points) {
        bool in_variety = !rp.free || (rp.point[0] == 0 && rp.point[1] == 0);
        CHECK(in_variety == (rp.point[1] == 0));
    }
}

TEST_CASE("frobenius comparison on hand modules") {
    for (std::uint64_t q : {2ull, 3ull, 4ull}) {
        auto F = Field::of_order(q);
        RingSpec ring = RingSpec::elementary_abelian(F, 2);
        CHECK_FALSE(frobenius_compare(regular_module(ring), F).has_value());
        CHECK_FALSE(frobenius_compare(cyclic_module(ring, {{1, 0}}), F).has_value());
    }
}

TEST_CASE("support membership validates its inputs") {
    auto F = Field::prime(2);
    RingSpec ring = RingSpec::elementary_abelian(F, 2);
    ModuleRep M = regular_module(ring);
    CHECK_THROWS(support_membership(M, {0}));         // wrong arity
    CHECK_THROWS(support_enumerate(M, F, 2));          // bound exceeded
    auto F3 = Field::prime(3);
    CHECK_THROWS(support_enumerate(M, F3));            // field mismatch
}

TEST_CASE("zero module conventions") {
    auto F = Field::prime(2);
    RingSpec ring = RingSpec::elementary_abelian(F, 2);
    ModuleRep zero;
    zero.ring = ring;
    zero.m = 0;
    zero.ops = {Matrix(F, 0, 0), Matrix(F, 0, 0)};
    SupportReport rep = support_enumerate(zero, F);
    CHECK(rep.member_count == 0);  // even the origin is excluded
}

TEST_CASE("p-th power decomposition") {
    auto F = Field::prime(2);
    RingSpec ring = RingSpec::elementary_abelian(F, 2);
    auto ctx = ring.t_context();
    MPoly u = parse_poly(ctx, "t1 + t1*t2");
    MPoly up = char_p_power(u);
    CHECK(up == parse_poly(ctx, "t1^2 + t1^2*t2^2"));
    auto h = decompose_p_power(up, ring);
    CHECK(h[0] == parse_poly(ctx, "1 + t2^2"));
    CHECK(h[1].is_zero());
}

TEST_CASE("differential module radicals on a hand example") {
    auto F = Field::prime(5);
    DiffModule dm;
    dm.r = 1;
    dm.delta = PolyMatrix(F, 2, 2);
    dm.delta.at(0, 1) = UPoly(F, {0, 1});  // delta = [[0, s], [0, 0]]
    DModuleRadicals rad = dmodule_radical_check(dm);
    CHECK(rad.equal);
    CHECK(rad.ann_radical == UPoly(F, {0, 1}));
    // delta = 0: homology is free, both radicals zero
    DiffModule z;
    z.r = 1;
    z.delta = PolyMatrix(F, 2, 2);
    DModuleRadicals zr = dmodule_radical_check(z);
    CHECK(zr.equal);
    CHECK(zr.ann_radical.is_zero());
}

TEST_CASE("radical agreement survives squared factors") {
    auto F = Field::prime(3);
    DiffModule dm;
    dm.r = 2;
    dm.delta = PolyMatrix(F, 4, 4);
    UPoly s(F, {0, 1});
    dm.delta.at(0, 2) = s * s;        // ann contribution s^2
    dm.delta.at(3, 1) = s * (s - UPoly::constant(F, 1));
    DModuleRadicals rad = dmodule_radical_check(dm);
    CHECK(rad.equal);
    CHECK(rad.ann_radical == (s * (s - UPoly::constant(F, 1))).monic());
}

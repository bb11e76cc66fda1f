#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hypervar/field.hpp"

using namespace hypervar;

TEST_CASE("prime field arithmetic") {
    auto F = Field::prime(5);
    CHECK(F->order() == 5);
    CHECK(F->add(3, 4) == 2);
    CHECK(F->mul(3, 4) == 2);
    CHECK(F->neg(2) == 3);
    CHECK(F->inv(2) == 3);  // 2*3 = 6 = 1
    CHECK(F->pow(2, 4) == 1);
    CHECK_THROWS(F->inv(0));
}

TEST_CASE("deterministic irreducible moduli") {
    // lowest-lexicographic monic irreducible candidates
    CHECK(find_irreducible(2, 2) == std::vector<std::uint32_t>{1, 1});  // z^2+z+1
    CHECK(find_irreducible(3, 2) == std::vector<std::uint32_t>{1, 0});  // z^2+1
}

TEST_CASE("F_8 inverse") {
    // modulus z^3 + z + 1
    auto F = Field::extension(2, 3, {1, 1, 0});
    felem z = F->from_digits({0, 1});
    felem z2p1 = F->from_digits({1, 0, 1});
    CHECK(F->inv(z) == z2p1);
    CHECK(F->mul(z, z2p1) == F->one());
}

TEST_CASE("F_4 frobenius") {
    auto F = Field::of_order(4);
    felem z = F->from_digits({0, 1});
    CHECK(F->frobenius(z) == F->from_digits({1, 1}));  // z^2 = z + 1
    for (felem a : F->enumerate()) CHECK(F->frobenius_inv(F->frobenius(a)) == a);
}

TEST_CASE("product of nonzero elements of F_8 is 1") {
    auto F = Field::of_order(8);
    felem prod = F->one();
    for (felem a : F->enumerate())
        if (a != 0) prod = F->mul(prod, a);
    CHECK(prod == F->one());
}

TEST_CASE("frobenius is a ring homomorphism") {
    for (std::uint64_t q : {4ull, 8ull, 9ull, 25ull, 27ull}) {
        auto F = Field::of_order(q);
        std::mt19937_64 rng(7);
        std::uniform_int_distribution<std::uint64_t> dist(0, q - 1);
        for (int t = 0; t < 1000; ++t) {
            felem a = static_cast<felem>(dist(rng)), b = static_cast<felem>(dist(rng));
            CHECK(F->frobenius(F->add(a, b)) == F->add(F->frobenius(a), F->frobenius(b)));
            CHECK(F->frobenius(F->mul(a, b)) == F->mul(F->frobenius(a), F->frobenius(b)));
        }
    }
}

TEST_CASE("field axioms on random samples") {
    for (std::uint64_t q : {3ull, 16ull, 9ull}) {
        auto F = Field::of_order(q);
        std::mt19937_64 rng(11);
        std::uniform_int_distribution<std::uint64_t> dist(0, q - 1);
        for (int t = 0; t < 300; ++t) {
            felem a = static_cast<felem>(dist(rng));
            felem b = static_cast<felem>(dist(rng));
            felem c = static_cast<felem>(dist(rng));
            CHECK(F->mul(a, F->add(b, c)) == F->add(F->mul(a, b), F->mul(a, c)));
            CHECK(F->add(a, F->neg(a)) == 0);
            if (a != 0) CHECK(F->mul(a, F->inv(a)) == F->one());
        }
    }
}

TEST_CASE("order bound enforced") {
    CHECK_THROWS(Field::extension(2, 21));  // 2^21 > 2^20
    CHECK_THROWS(Field::of_order(6));
}

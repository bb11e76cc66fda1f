#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hypervar/linalg.hpp"

using namespace hypervar;

namespace {

Matrix random_matrix(const FieldPtr& F, std::size_t r, std::size_t c, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::uint64_t> dist(0, F->order() - 1);
    Matrix M(F, r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) M.at(i, j) = static_cast<felem>(dist(rng));
    return M;
}

}  // namespace

TEST_CASE("rank and kernel of a singular matrix over F_5") {
    auto F = Field::prime(5);
    Matrix A(F, 2, 2);
    A.at(0, 0) = 1; A.at(0, 1) = 2;
    A.at(1, 0) = 2; A.at(1, 1) = 4;
    CHECK(A.rank() == 1);
    Subspace ker = kernel_basis(A);
    CHECK(ker.dim() == 1);
    CHECK(ker.contains_vector({3, 1}));  // 1*3 + 2*1 = 5 = 0
}

TEST_CASE("rank equals rank of transpose") {
    auto F = Field::of_order(4);
    std::mt19937_64 rng(3);
    for (int t = 0; t < 500; ++t) {
        std::size_t r = 1 + rng() % 6, c = 1 + rng() % 6;
        Matrix A = random_matrix(F, r, c, rng);
        CHECK(A.rank() == A.transpose().rank());
    }
}

TEST_CASE("rank-nullity") {
    auto F = Field::prime(3);
    std::mt19937_64 rng(5);
    for (int t = 0; t < 200; ++t) {
        std::size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
        Matrix A = random_matrix(F, r, c, rng);
        CHECK(A.rank() + kernel_basis(A).dim() == c);
    }
}

TEST_CASE("subspace equality is representation independent") {
    auto F = Field::prime(7);
    Matrix A(F, 3, 2);
    A.at(0, 0) = 1; A.at(1, 0) = 2;
    A.at(0, 1) = 3; A.at(2, 1) = 1;
    Matrix B(F, 3, 2);
    // same span, scaled and mixed columns
    for (std::size_t i = 0; i < 3; ++i) {
        B.at(i, 0) = F->add(F->mul(2, A.at(i, 0)), A.at(i, 1));
        B.at(i, 1) = F->mul(4, A.at(i, 1));
    }
    CHECK(Subspace::span_of_columns(A) == Subspace::span_of_columns(B));
}

TEST_CASE("solve recovers solutions and detects inconsistency") {
    auto F = Field::prime(5);
    std::mt19937_64 rng(9);
    for (int t = 0; t < 200; ++t) {
        std::size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
        Matrix A = random_matrix(F, r, c, rng);
        std::vector<felem> x(c);
        std::uniform_int_distribution<std::uint64_t> dist(0, 4);
        for (auto& v : x) v = static_cast<felem>(dist(rng));
        std::vector<felem> b(r, 0);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) b[i] = F->add(b[i], F->mul(A.at(i, j), x[j]));
        auto sol = solve(A, b);
        REQUIRE(sol.has_value());
        // the returned solution really solves the system
        for (std::size_t i = 0; i < r; ++i) {
            felem acc = 0;
            for (std::size_t j = 0; j < c; ++j) acc = F->add(acc, F->mul(A.at(i, j), (*sol)[j]));
            CHECK(acc == b[i]);
        }
    }
    Matrix Z(F, 2, 1);  // 0*x = (1,0) has no solution
    auto none = solve(Z, {1, 0});
    CHECK_FALSE(none.has_value());
}

TEST_CASE("matrix power and commutation") {
    auto F = Field::prime(2);
    Matrix N(F, 3, 3);
    N.at(0, 1) = 1;
    N.at(1, 2) = 1;
    CHECK_FALSE(N.pow(2).is_zero());
    CHECK(N.pow(3).is_zero());
    CHECK(N.commutes_with(N * N));
    Matrix E(F, 3, 3);
    E.at(0, 0) = 1;
    CHECK_FALSE(N.commutes_with(E));
}

TEST_CASE("image basis dimension equals rank") {
    auto F = Field::of_order(9);
    std::mt19937_64 rng(13);
    for (int t = 0; t < 100; ++t) {
        Matrix A = random_matrix(F, 1 + rng() % 5, 1 + rng() % 5, rng);
        CHECK(image_basis(A).dim() == A.rank());
    }
}

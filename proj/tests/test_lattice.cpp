#include <algorithm>
#include <map>
#include <set>
#include <limits>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "toric/lattice.hpp"

using namespace toric;

TEST_CASE("determinant examples") {
    std::vector<LatticeVector> id3{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    CHECK(determinant(id3) == 1);
    std::vector<LatticeVector> flipped{{-1, 0}, {0, 1}};
    CHECK(determinant(flipped) == -1);
    std::vector<LatticeVector> f3_pair{{1, 0}, {-1, 3}};
    CHECK(determinant(f3_pair) == 3);
    std::vector<LatticeVector> needs_pivot{{0, 1}, {1, 0}};
    CHECK(determinant(needs_pivot) == -1);
    std::vector<LatticeVector> singular{{1, 2}, {2, 4}};
    CHECK(determinant(singular) == 0);
}

TEST_CASE("determinant rejects non-square input") {
    std::vector<LatticeVector> bad{{1, 0, 0}, {0, 1, 0}};
    CHECK_THROWS_AS(determinant(bad), InputError);
}

TEST_CASE("determinant agrees with cofactor expansion for n <= 4") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<Int> d(-9, 9);
    for (std::size_t n = 1; n <= 4; ++n)
        for (int trial = 0; trial < 200; ++trial) {
            std::vector<LatticeVector> rows(n, LatticeVector(n));
            for (auto& r : rows)
                for (std::size_t i = 0; i < n; ++i) r[i] = d(rng);
            CHECK(determinant(rows) == oracle::det_by_minors(rows));
        }
}

TEST_CASE("unimodular_solve examples") {
    std::vector<LatticeVector> id{{1, 0}, {0, 1}};
    CHECK(unimodular_solve(id, {2, 2}) == std::vector<Int>{2, 2});
    std::vector<LatticeVector> b1{{3, 1}, {-1, 0}};
    CHECK(unimodular_solve(b1, {0, 2}) == std::vector<Int>{2, 6});
    std::vector<LatticeVector> b2{{-3, -1}, {-1, 0}};
    CHECK(unimodular_solve(b2, {-9, -1}) == std::vector<Int>{1, 6});
}

TEST_CASE("unimodular_solve rejects non-unimodular bases") {
    std::vector<LatticeVector> b{{1, 0}, {-1, 3}};
    CHECK_THROWS_AS(unimodular_solve(b, {1, 1}), PreconditionError);
}

TEST_CASE("unimodular_solve round trip on random unimodular bases") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<Int> d(-20, 20);
    for (std::size_t n = 1; n <= 5; ++n)
        for (int trial = 0; trial < 100; ++trial) {
            const auto g = oracle::random_unimodular(rng, n, 12);
            std::vector<LatticeVector> basis;
            for (const auto& row : g) basis.emplace_back(row);
            LatticeVector target(n);
            for (std::size_t i = 0; i < n; ++i) target[i] = d(rng);
            const auto c = unimodular_solve(basis, target);
            LatticeVector back(n);
            for (std::size_t i = 0; i < n; ++i) back += c[i] * basis[i];
            CHECK(back == target);
        }
}

TEST_CASE("dual basis pairs to the identity") {
    std::vector<LatticeVector> basis{{0, 1}, {-1, 3}};
    const auto dual = dual_basis(basis);
    CHECK(dual[0] == LatticeVector{3, 1});
    CHECK(dual[1] == LatticeVector{-1, 0});
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) CHECK(dot(dual[i], basis[j]) == (i == j ? 1 : 0));
}

TEST_CASE("segment_lattice_count examples") {
    CHECK(segment_lattice_count({0, 0}, {0, 3}) == 4);
    CHECK(segment_lattice_count({5, -2}, {5, -2}) == 1);
    CHECK(segment_lattice_count({2, 0}, {11, 3}) == 4);
    CHECK(oracle::segment_points_brute({2, 0}, {11, 3}) == 4);
}

TEST_CASE("segment_lattice_count matches enumeration") {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<Int> d(-50, 50);
    for (int trial = 0; trial < 300; ++trial) {
        LatticeVector p{d(rng), d(rng)}, q{d(rng), d(rng)};
        CHECK(segment_lattice_count(p, q) == oracle::segment_points_brute(p, q));
    }
    std::uniform_int_distribution<Int> s(-6, 6);
    for (int trial = 0; trial < 100; ++trial) {
        LatticeVector p{s(rng), s(rng), s(rng)}, q{s(rng), s(rng), s(rng)};
        CHECK(segment_lattice_count(p, q) == oracle::segment_points_brute(p, q));
    }
}

TEST_CASE("arithmetic aborts on overflow") {
    const Int big = std::numeric_limits<Int>::max();
    CHECK_THROWS_AS(checked_add(big, 1), OverflowError);
    CHECK_THROWS_AS(checked_mul(big / 2, 3), OverflowError);
    CHECK_THROWS_AS(checked_neg(std::numeric_limits<Int>::min()), OverflowError);
    LatticeVector v{big, 0};
    CHECK_THROWS_AS(v + LatticeVector({1, 0}), OverflowError);
}

TEST_CASE("binomial") {
    CHECK(binomial(6, 2) == 15);
    CHECK(binomial(4, 2) == 6);
    CHECK(binomial(1, 2) == 0);
    CHECK(binomial(-1, 2) == 0);
    CHECK(binomial(60, 30) == 118264581564861424LL);
}

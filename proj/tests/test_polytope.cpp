#include <algorithm>
#include <map>
#include <set>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "toric/fuzz.hpp"
#include "toric/polytope.hpp"

using namespace toric;

namespace {

ToricDivisor divisor(const Fan& f, std::vector<Int> alpha) {
    return ToricDivisor(std::make_shared<const Fan>(f), std::move(alpha));
}

ToricDivisor f3_2f3h() { return divisor(hirzebruch(3), {0, 0, 2, 3}); }

}  // namespace

TEST_CASE("polytope_of: F_3, 2F + 3H") {
    const auto p = polytope_of(f3_2f3h());
    REQUIRE(p.vertices.size() == 4);
    CHECK(p.vertices[0] == LatticeVector{0, 0});
    CHECK(p.vertices[1] == LatticeVector{2, 0});
    CHECK(p.vertices[2] == LatticeVector{11, 3});
    CHECK(p.vertices[3] == LatticeVector{0, 3});
}

TEST_CASE("polytope_of: P^2") {
    const auto p = polytope_of(divisor(projective_space(2), {0, 0, 1}));
    std::set<LatticeVector> vs(p.vertices.begin(), p.vertices.end());
    CHECK(vs == std::set<LatticeVector>{{0, 0}, {1, 0}, {0, 1}});
    const auto z = polytope_of(divisor(projective_space(2), {0, 0, 0}));
    for (const auto& v : z.vertices) CHECK(v == LatticeVector{0, 0});
}

TEST_CASE("divisor coefficient count must match rays") {
    CHECK_THROWS_AS(divisor(hirzebruch(3), {0, 0, 2}), InputError);
}

TEST_CASE("is_ample") {
    CHECK(is_ample(f3_2f3h()));
    CHECK_FALSE(is_ample(divisor(projective_space(2), {0, 0, 0})));
    CHECK_FALSE(is_ample(divisor(hirzebruch(3), {0, 0, 0, 1})));
    CHECK(is_ample(divisor(projective_space(2), {0, 0, 1})));
}

TEST_CASE("lattice_points") {
    const auto pts = lattice_points(polytope_of(f3_2f3h()));
    CHECK(pts.size() == 30);
    CHECK(std::is_sorted(pts.begin(), pts.end()));
    CHECK(lattice_points(polytope_of(divisor(projective_space(2), {0, 0, 1}))).size() == 3);
    CHECK(lattice_points(polytope_of(divisor(projective_space(2), {0, 0, 2}))).size() == 6);
    // Nef but not ample is still enumerated.
    CHECK(lattice_points(polytope_of(divisor(hirzebruch(3), {0, 0, 0, 1}))).size() == 5);
}

TEST_CASE("edge_point_count and curve_degree on F_3") {
    const auto d = f3_2f3h();
    const auto ws = walls(d.fan());
    // Walls are sorted by facet ray: {0} = e14 fibre, {1} = e12, {2} = e23, {3} = e34.
    CHECK(ws[0].cone_a == 0);
    CHECK(ws[0].cone_b == 3);
    CHECK(edge_point_count(d, ws[0]) == 4);
    CHECK(curve_degree(d, ws[0]) == 3);
    CHECK(edge_point_count(d, ws[1]) == 3);
    CHECK(curve_degree(d, ws[1]) == 2);
    CHECK(edge_point_count(d, ws[2]) == 4);
    CHECK(edge_point_count(d, ws[3]) == 12);
}

TEST_CASE("edge_point_count on P^1 x P^1 unit square") {
    const auto d = divisor(product(projective_space(1), projective_space(1)), {0, 1, 0, 1});
    CHECK(is_ample(d));
    for (const auto& w : walls(d.fan())) CHECK(edge_point_count(d, w) == 2);
}

TEST_CASE("edge_point_count rejects collapsed edges") {
    const auto d = divisor(hirzebruch(3), {0, 0, 0, 1});
    const auto ws = walls(d.fan());
    CHECK_THROWS_AS(edge_point_count(d, ws[1]), PreconditionError);
}

TEST_CASE("curve_degree trivial cases") {
    const Fan f = random_fan_2d(9, 4);
    const auto zero = divisor(f, std::vector<Int>(f.num_rays(), 0));
    for (const auto& w : walls(f)) CHECK(curve_degree(zero, w) == 0);
    const auto line = divisor(projective_space(2), {0, 0, 1});
    for (const auto& w : walls(line.fan())) CHECK(curve_degree(line, w) == 1);
}

TEST_CASE("curve_degree is symmetric in the two extra rays") {
    const auto inst = random_ample_2d(31, 4);
    for (auto w : walls(*inst.fan)) {
        const Int before = curve_degree(inst.divisor, w);
        std::swap(w.extra_rays[0], w.extra_rays[1]);
        CHECK(curve_degree(inst.divisor, w) == before);
    }
}

TEST_CASE("wall degree equals edge length over the fleet") {
    for (std::uint64_t seed = 0; seed < 150; ++seed) {
        const auto inst = random_ample_2d(seed, static_cast<int>(seed % 6));
        CAPTURE(seed);
        REQUIRE(is_ample(inst.divisor));
        const auto p = polytope_of(inst.divisor);
        for (const auto& w : walls(*inst.fan)) CHECK(curve_degree(inst.divisor, w) == edge_point_count(p, w) - 1);
    }
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const auto inst = random_ample_product(seed, 2 + seed % 3);
        const auto p = polytope_of(inst.divisor);
        for (const auto& w : walls(*inst.fan)) CHECK(curve_degree(inst.divisor, w) == edge_point_count(p, w) - 1);
    }
}

TEST_CASE("lattice count agrees with Pick's theorem") {
    for (std::uint64_t seed = 0; seed < 80; ++seed) {
        const auto inst = random_ample_2d(seed, static_cast<int>(seed % 5));
        const auto p = polytope_of(inst.divisor);
        CAPTURE(seed);
        CHECK(static_cast<Int>(lattice_points(p).size()) == oracle::pick_count(*inst.fan, p));
    }
}

TEST_CASE("ample polytopes have distinct simple vertices") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const auto inst = seed % 2 ? random_ample_2d(seed, 3) : random_ample_product(seed, 3);
        const auto p = polytope_of(inst.divisor);
        std::set<LatticeVector> distinct(p.vertices.begin(), p.vertices.end());
        CHECK(distinct.size() == p.vertices.size());
        for (const auto& v : p.vertices) CHECK(p.num_tight(v) == p.dim);
    }
}

TEST_CASE("lattice count is invariant under a unimodular change of coordinates") {
    std::mt19937_64 rng(17);
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const auto inst = seed % 3 ? random_ample_2d(seed, 3) : random_ample_product(seed, 3);
        const Fan& f = *inst.fan;
        const auto g = oracle::random_unimodular(rng, f.dim, 6);
        Fan h = f;
        for (auto& r : h.rays) r = oracle::apply(g, r);
        REQUIRE(validate(h).ok());
        const auto d2 = ToricDivisor(std::make_shared<const Fan>(h), inst.divisor.alpha());
        CHECK(lattice_points(polytope_of(d2)).size() == lattice_points(polytope_of(inst.divisor)).size());
    }
}

TEST_CASE("monotonicity: raising a coefficient never loses points") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const auto inst = random_ample_2d(seed, 2);
        const auto base = lattice_points(polytope_of(inst.divisor)).size();
        for (std::size_t i = 0; i < inst.fan->num_rays(); ++i) {
            auto a = inst.divisor.alpha();
            ++a[i];
            CHECK(lattice_points(polytope_of(ToricDivisor(inst.fan, a))).size() >= base);
        }
    }
}

TEST_CASE("random_ample_2d matches random_fan_2d") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto inst = random_ample_2d(seed, 5);
        CHECK(*inst.fan == random_fan_2d(seed, 5));
        CHECK(is_ample(inst.divisor));
    }
}

TEST_CASE("ample divisors are found on every random smooth complete 2D fan") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const auto fan = std::make_shared<const Fan>(random_fan_2d(seed, static_cast<int>(seed % 13)));
        const auto d = fuzz::random_ample_on(fan, seed);
        CHECK(is_ample(d));
        CHECK(fuzz::wall_degree_mismatches(d).empty());
    }
}

#include <algorithm>
#include <map>
#include <set>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "toric/fan.hpp"

using namespace toric;

namespace {

const ValidationCheck& check_named(const ValidationReport& r, const std::string& name) {
    for (const auto& c : r.checks)
        if (c.name == name) return c;
    FAIL("missing check " << name);
    return r.checks.front();
}

void check_wall_relations(const Fan& f) {
    for (const auto& w : walls(f)) {
        LatticeVector sum = f.rays[w.extra_rays[0]] + f.rays[w.extra_rays[1]];
        for (std::size_t i = 0; i < w.facet_rays.size(); ++i) sum += w.gamma[i] * f.rays[w.facet_rays[i]];
        CHECK(sum.is_zero());
    }
}

}  // namespace

TEST_CASE("validate: textbook fans pass") {
    CHECK(validate(projective_space(2)).ok());
    CHECK(validate(projective_space(3)).ok());
    const Fan f3 = hirzebruch(3);
    CHECK(f3.rays == std::vector<LatticeVector>{{1, 0}, {0, 1}, {-1, 3}, {0, -1}});
    CHECK(validate(f3).ok());
    CHECK(validate(product(projective_space(1), projective_space(1))).ok());
    CHECK(validate(product(hirzebruch(2), projective_space(1))).ok());
}

TEST_CASE("validate: deleting a cone breaks completeness on two facets") {
    Fan f = projective_space(2);
    f.cones.pop_back();
    const auto rep = validate(f);
    CHECK_FALSE(rep.ok());
    CHECK(check_named(rep, "facet pairing").failures.size() == 2);
}

TEST_CASE("validate: non-smooth and non-primitive input") {
    Fan f;
    f.dim = 2;
    f.rays = {{1, 0}, {1, 2}, {-1, -1}};
    f.cones = {{0, 1}, {1, 2}, {2, 0}};
    auto rep = validate(f);
    CHECK_FALSE(check_named(rep, "unimodular cones").passed);
    f.rays[0] = {2, 0};
    rep = validate(f);
    CHECK_FALSE(check_named(rep, "primitive rays").passed);
}

TEST_CASE("validate: 2D fan that pairs facets but wraps twice is rejected") {
    // Rays at six directions, cones chosen so every facet is shared twice but the
    // cones do not follow angular order.
    Fan f;
    f.dim = 2;
    f.rays = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    f.cones = {{0, 2}, {2, 1}, {1, 3}, {3, 0}};
    const auto rep = validate(f);
    CHECK_FALSE(rep.ok());
    CHECK_FALSE(check_named(rep, "2d angular coverage").passed);
}

TEST_CASE("walls of P^2") {
    const auto ws = walls(projective_space(2));
    REQUIRE(ws.size() == 3);
    for (const auto& w : ws) CHECK(w.gamma == std::vector<Int>{1});
    check_wall_relations(projective_space(2));
}

TEST_CASE("walls of F_3") {
    const Fan f = hirzebruch(3);
    const auto ws = walls(f);
    REQUIRE(ws.size() == 4);
    // Facet {v_2 = (0,1)}: neighbours (1,0) and (-1,3) give gamma = -3.
    const auto& w = ws[1];
    CHECK(w.facet_rays == std::vector<std::size_t>{1});
    CHECK(w.extra_rays == std::array<std::size_t, 2>{0, 2});
    CHECK(w.gamma == std::vector<Int>{-3});
    CHECK(w.cone_a == 0);
    CHECK(w.cone_b == 1);
    check_wall_relations(f);
}

TEST_CASE("walls of P^1 x P^1 have gamma 0") {
    const auto ws = walls(product(projective_space(1), projective_space(1)));
    REQUIRE(ws.size() == 4);
    for (const auto& w : ws) CHECK(w.gamma == std::vector<Int>{0});
}

TEST_CASE("constructors") {
    const Fan p2 = projective_space(2);
    CHECK(p2.num_rays() == 3);
    CHECK(p2.num_cones() == 3);
    const Fan bl = blowup_fixed_point(p2, 0);  // cone {0,1} = <(1,0),(0,1)>
    CHECK(p2.cones[0] == Cone{0, 1});
    CHECK(bl.num_rays() == 4);
    CHECK(bl.num_cones() == 4);
    CHECK(bl.rays.back() == LatticeVector{1, 1});
    CHECK(validate(bl).ok());
    CHECK_THROWS_AS(blowup_fixed_point(p2, 3), InputError);
    CHECK_THROWS_AS(hirzebruch(-1), InputError);

    const Fan bl3 = blowup_fixed_point(projective_space(3), 0);
    CHECK(bl3.num_cones() == 6);
    CHECK(validate(bl3).ok());
}

TEST_CASE("random_fan_2d") {
    const auto base = random_fan_2d_trace(123, 0);
    CHECK(base.fan == base.base);
    const Fan f = random_fan_2d(77, 3);
    CHECK(f.num_rays() >= 6);
    CHECK(f.num_rays() <= 7);
    CHECK(validate(f).ok());
    CHECK(random_fan_2d(77, 3) == f);
    CHECK_THROWS_AS(random_fan_2d(1, 13), InputError);
}

TEST_CASE("fan fleet properties") {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        const Fan f = random_fan_2d(seed, static_cast<int>(seed % 9));
        CAPTURE(seed);
        REQUIRE(validate(f).ok());
        const auto ws = walls(f);
        CHECK(ws.size() == f.num_rays());
        CHECK(ws.size() == f.num_cones());
        check_wall_relations(f);
        for (std::size_t c = 0; c < f.num_cones(); ++c) {
            const auto rays = f.cone_rays(c);
            const auto dual = dual_basis(rays);
            for (std::size_t i = 0; i < rays.size(); ++i)
                for (std::size_t j = 0; j < rays.size(); ++j) CHECK(dot(dual[i], rays[j]) == (i == j ? 1 : 0));
        }
        const Fan b = blowup_fixed_point(f, seed % f.num_cones());
        CHECK(validate(b).ok());
    }
    for (std::size_t n = 1; n <= 4; ++n) {
        const Fan p = projective_space(n);
        CHECK(validate(p).ok());
        check_wall_relations(p);
        check_wall_relations(blowup_fixed_point(p, 0));
    }
}

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "toric/linsys.hpp"
#include "toric/picard.hpp"

namespace toric::fuzz {

/// Per-trial seed derived from a run seed; trials are independent of scheduling.
std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial);

/// A random ample divisor on an arbitrary (projective) fan: a base ample
/// divisor found by search, scaled, perturbed and translated by a character,
/// with rejection and rescaling until the result is ample.
ToricDivisor random_ample_on(const std::shared_ptr<const Fan>& fan, std::uint64_t seed);

struct Violation {
    std::uint64_t trial = 0;
    std::string what;
    nlohmann::json reproducer;
};

struct WallDegreeSummary {
    std::size_t trials = 0;
    std::size_t walls_checked = 0;
    std::vector<Violation> violations;  // sorted by trial
    bool ok() const { return violations.empty(); }
};

/// Checks curve_degree == edge_point_count - 1 on every wall of one divisor.
std::vector<std::string> wall_degree_mismatches(const ToricDivisor& d);

/// Random ample divisors on a fixed fan.
WallDegreeSummary check_wall_degrees(const std::shared_ptr<const Fan>& fan, std::size_t trials, std::uint64_t seed);
/// Random 2D fans with at most `max_rays` rays, then `products_3d` random 3D products.
WallDegreeSummary check_wall_degrees_fleet(std::size_t trials_2d, std::size_t max_rays, std::size_t products_3d,
                                 std::uint64_t seed);

/// A random linear system: a 2D instance (<= max_rays rays) or a product of
/// dimension `dim`, each fixed point marked with probability 1/2 and
/// multiplicity uniform in [0, max_mult].
LinearSystemSpec random_system(std::uint64_t seed, std::size_t dim, std::size_t max_rays = 8, Int max_mult = 6);

struct SpecialitySummary {
    std::size_t trials = 0;
    std::size_t special = 0;
    std::size_t equivalence_violations = 0;
    std::size_t pairs_checked = 0;
    std::size_t pair_violations = 0;
    std::vector<Violation> violations;  // sorted by trial
    bool ok() const { return violations.empty(); }
};

/// h1 > 0 <=> a wall with L.C <= -2, and the two-point restriction property
/// on every special instance. `dims` lists the dimensions to cycle through.
SpecialitySummary check_speciality(const std::vector<std::size_t>& dims, std::size_t trials, std::uint64_t seed,
                             Int max_mult = 6, WitnessScope scope = WitnessScope::AllFixedPoints);

struct RRIdentitySummary {
    std::size_t trials = 0;
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
};

/// v(L) = v(L - C) + L.C + 1 for random genus-0 C on random surface models.
RRIdentitySummary check_rr_identity(std::size_t trials, std::uint64_t seed);

struct CrossSummary {
    std::size_t trials = 0;
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
};

/// rr_virtual_dim of the blown-up class equals the toric virtual dimension on F_a.
CrossSummary check_cross_module(std::size_t trials, std::uint64_t seed, Int max_a = 4);

struct MinusOneSummary {
    std::size_t trials = 0;
    std::size_t agree = 0;
    std::vector<Violation> disagreements;  // candidates for closer inspection
};

/// Compares lattice speciality with the (-1)-special verdict on toric F_a / P2 systems.
MinusOneSummary explore_minus_one(std::size_t trials, std::uint64_t seed, Int max_mult = 6);

}  // namespace toric::fuzz

#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "toric/lattice.hpp"

namespace toric {

using Cone = std::vector<std::size_t>;  // ray indices, size == dim

/// A simplicial fan given by its rays and maximal cones. Maximal cone i is the
/// torus-fixed point p_i of the toric variety.
struct Fan {
    std::size_t dim = 0;
    std::vector<LatticeVector> rays;
    std::vector<Cone> cones;

    std::size_t num_rays() const { return rays.size(); }
    std::size_t num_cones() const { return cones.size(); }
    std::vector<LatticeVector> cone_rays(std::size_t cone) const;
    bool cone_contains(std::size_t cone, std::size_t ray) const;

    friend bool operator==(const Fan&, const Fan&) = default;
};

struct ValidationCheck {
    std::string name;
    bool passed = true;
    std::vector<std::string> failures;  // offending cone / facet descriptions
};

struct ValidationReport {
    std::vector<ValidationCheck> checks;

    bool ok() const;
    std::string summary() const;
};

/// Runs every smoothness/completeness check. Never throws on a bad fan; the
/// report carries the failures.
ValidationReport validate(const Fan& fan);

/// Wall between two maximal cones: the (n-1)-cone of the invariant curve
/// joining their fixed points. Satisfies
///   rays[extra_rays[0]] + rays[extra_rays[1]] + sum_i gamma[i] * rays[facet_rays[i]] == 0.
struct Wall {
    std::vector<std::size_t> facet_rays;  // sorted
    std::size_t cone_a = 0;               // cone_a < cone_b
    std::size_t cone_b = 0;
    std::vector<Int> gamma;               // aligned with facet_rays
    std::array<std::size_t, 2> extra_rays{};  // lower ray index first

    friend bool operator==(const Wall&, const Wall&) = default;
};

/// All walls, sorted by facet-ray index tuple. Requires a validated fan.
std::vector<Wall> walls(const Fan& fan);

std::string describe(const Wall& w);

Fan projective_space(std::size_t n);
Fan hirzebruch(Int a);
Fan product(const Fan& f1, const Fan& f2);
/// Star subdivision of a maximal cone at the sum of its rays (equivariant
/// blow-up of the fixed point). The new ray is appended; the cone is replaced
/// in place by n cones.
Fan blowup_fixed_point(const Fan& f, std::size_t cone);

/// Seeded 2D generator: a base fan (P^2 or F_a, a <= 4) followed by `steps`
/// random fixed-point blow-ups. `blown_cones[i]` is the cone index blown up at
/// step i; `base_kind` is -1 for P^2 and a for F_a.
struct RandomFanTrace {
    Fan base;
    int base_kind = -1;
    std::vector<std::size_t> blown_cones;
    Fan fan;
};

RandomFanTrace random_fan_2d_trace(std::uint64_t seed, int steps);
Fan random_fan_2d(std::uint64_t seed, int steps);

}  // namespace toric

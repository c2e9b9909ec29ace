#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "toric/fan.hpp"
#include "toric/lattice.hpp"

namespace toric {

/// D = sum_i alpha_i D_i. The support function takes the value -alpha_i on ray i.
class ToricDivisor {
public:
    ToricDivisor(std::shared_ptr<const Fan> fan, std::vector<Int> alpha);

    const Fan& fan() const { return *fan_; }
    const std::shared_ptr<const Fan>& fan_ptr() const { return fan_; }
    const std::vector<Int>& alpha() const { return alpha_; }
    Int alpha(std::size_t ray) const { return alpha_.at(ray); }

private:
    std::shared_ptr<const Fan> fan_;
    std::vector<Int> alpha_;
};

/// {m : <m, v_i> >= -alpha_i for every ray v_i}, with one vertex per maximal cone.
struct LatticePolytope {
    std::size_t dim = 0;
    std::vector<LatticeVector> vertices;  // indexed by maximal cone
    std::vector<LatticeVector> normals;   // the rays
    std::vector<Int> bounds;              // -alpha_i

    bool contains(const LatticeVector& m) const;
    std::size_t num_tight(const LatticeVector& m) const;  // constraints met with equality
};

LatticePolytope polytope_of(const ToricDivisor& d);

/// Strict convexity of the support function.
bool is_ample(const ToricDivisor& d);

/// Lattice points of the polytope in lexicographic order (bounding-box scan,
/// OpenMP-parallel over slices of the first coordinate).
std::vector<LatticeVector> lattice_points(const LatticePolytope& p);
/// Single-threaded reference for lattice_points; identical output.
std::vector<LatticeVector> lattice_points_serial(const LatticePolytope& p);

/// Number of lattice points on the polytope edge dual to the wall.
Int edge_point_count(const ToricDivisor& d, const Wall& w);
Int edge_point_count(const LatticePolytope& p, const Wall& w);

/// Intersection number D . C of the divisor with the wall's invariant curve.
Int curve_degree(const ToricDivisor& d, const Wall& w);

/// A fan together with an ample divisor on it, from the seeded generators.
struct AmpleInstance {
    std::shared_ptr<const Fan> fan;
    ToricDivisor divisor;
};

/// random_fan_2d(seed, steps) with an ample divisor built inductively: a
/// random ample divisor on the base, then at each blow-up all coefficients are
/// doubled and the new ray gets (sum over the blown-up cone) - 1. The result is
/// translated by a random character (a linearly equivalent divisor).
AmpleInstance random_ample_2d(std::uint64_t seed, int steps);

/// Product of random small factors (P^1, P^2, F_a) of total dimension `dim`,
/// with a sum of pulled-back ample divisors.
AmpleInstance random_ample_product(std::uint64_t seed, std::size_t dim);

}  // namespace toric

#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "toric/polytope.hpp"

namespace toric {

/// The divisor is not ample; the speciality pipeline refuses nef-only input.
struct NotAmpleError : InputError {
    NotAmpleError() : InputError("divisor not ample") {}
};

/// L(D, m_1, ..., m_r): an ample divisor and multiplicities at fixed points
/// (maximal-cone indices). Fixed points absent from `mults` carry multiplicity 0
/// but count as unmarked.
class LinearSystemSpec {
public:
    LinearSystemSpec(ToricDivisor divisor, std::map<std::size_t, Int> mults);

    const ToricDivisor& divisor() const { return divisor_; }
    const Fan& fan() const { return divisor_.fan(); }
    const std::map<std::size_t, Int>& mults() const { return mults_; }
    Int mult(std::size_t cone) const;
    bool is_marked(std::size_t cone) const { return mults_.count(cone) > 0; }

    /// Same divisor, keeping only the listed fixed points.
    LinearSystemSpec restricted_to(std::initializer_list<std::size_t> cones) const;

private:
    ToricDivisor divisor_;
    std::map<std::size_t, Int> mults_;
};

/// Vanishing order at p_i of the section s_m, as the coefficient sum of m - V_i
/// in the dual basis of the cone's rays. Throws PreconditionError when m lies
/// outside the polytope (a negative coefficient).
Int multiplicity_at(const ToricDivisor& d, const LatticeVector& m, std::size_t cone);

/// Precomputed fast route for the same quantity: the sum over the cone's rays
/// of <m, v_j> + alpha_j. Used by the counting kernels.
class MultiplicityTable {
public:
    explicit MultiplicityTable(const ToricDivisor& d);
    Int operator()(const LatticeVector& m, std::size_t cone) const;

private:
    std::vector<LatticeVector> ray_sums_;  // per cone
    std::vector<Int> offsets_;             // per cone
};

Int h0(const ToricDivisor& d);
Int virtual_dim(const LinearSystemSpec& spec);
/// h^0(L) - 1 by counting monomials that satisfy every multiplicity condition.
Int effective_dim(const LinearSystemSpec& spec);
Int effective_dim_serial(const LinearSystemSpec& spec);
Int h1(const LinearSystemSpec& spec);

/// Lattice points removed by at least one multiplicity condition, lexicographic.
std::vector<LatticeVector> cut_points(const LinearSystemSpec& spec);

/// L . C for the wall's curve: D . C minus the multiplicities at both endpoints.
Int system_curve_intersection(const LinearSystemSpec& spec, const Wall& w);

enum class WitnessScope {
    AllFixedPoints,  // unmarked endpoints count with multiplicity 0
    MarkedOnly,      // both endpoints of the curve must be marked
};

struct Witness {
    Wall wall;
    Int value = 0;
};

std::vector<Witness> all_witnesses(const LinearSystemSpec& spec, WitnessScope scope = WitnessScope::AllFixedPoints);
std::optional<Witness> first_witness(const LinearSystemSpec& spec,
                                       WitnessScope scope = WitnessScope::AllFixedPoints);

struct SpecialityReport {
    Int virtual_dim = 0;
    Int effective_dim = 0;
    Int h1 = 0;
    bool special = false;
    std::vector<Witness> witnesses;
    // Set when the cohomology count and the curve criterion disagree.
    std::optional<std::string> unwitnessed;
};

SpecialityReport speciality_report(const LinearSystemSpec& spec,
                                   WitnessScope scope = WitnessScope::AllFixedPoints);

/// A pair of fixed points whose two-point restriction is already special, if any.
std::optional<std::pair<std::size_t, std::size_t>> special_pair(const LinearSystemSpec& spec);

}  // namespace toric

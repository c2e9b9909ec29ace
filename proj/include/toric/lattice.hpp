#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "toric/error.hpp"

namespace toric {

using Int = std::int64_t;

// Overflow-checked integer arithmetic. Throws OverflowError instead of wrapping.
Int checked_add(Int a, Int b);
Int checked_sub(Int a, Int b);
Int checked_mul(Int a, Int b);
Int checked_neg(Int a);

// Binomial coefficient with overflow checking; 0 when k < 0 or k > n.
Int binomial(Int n, Int k);

/// Element of N = Z^n or of its dual M. Value type; arithmetic is exact.
class LatticeVector {
public:
    LatticeVector() = default;
    explicit LatticeVector(std::size_t dim) : coords_(dim, 0) {}
    LatticeVector(std::initializer_list<Int> xs) : coords_(xs) {}
    explicit LatticeVector(std::vector<Int> xs) : coords_(std::move(xs)) {}

    std::size_t dim() const { return coords_.size(); }
    Int operator[](std::size_t i) const { return coords_[i]; }
    Int& operator[](std::size_t i) { return coords_[i]; }
    std::span<const Int> coords() const { return coords_; }

    bool is_zero() const;
    // gcd of the absolute values of the coordinates (0 for the zero vector).
    Int content() const;
    bool is_primitive() const { return content() == 1; }

    LatticeVector& operator+=(const LatticeVector& o);
    LatticeVector& operator-=(const LatticeVector& o);

    friend LatticeVector operator+(LatticeVector a, const LatticeVector& b) { return a += b; }
    friend LatticeVector operator-(LatticeVector a, const LatticeVector& b) { return a -= b; }
    friend LatticeVector operator-(const LatticeVector& a);
    friend LatticeVector operator*(Int s, const LatticeVector& a);

    friend bool operator==(const LatticeVector&, const LatticeVector&) = default;
    friend auto operator<=>(const LatticeVector& a, const LatticeVector& b) {
        return a.coords_ <=> b.coords_;
    }

    std::string str() const;

private:
    std::vector<Int> coords_;
};

std::ostream& operator<<(std::ostream& os, const LatticeVector& v);

// Pairing <m, v> between M and N.
Int dot(const LatticeVector& a, const LatticeVector& b);

/// Exact determinant of the square matrix whose rows are `rows`, by
/// fraction-free (Bareiss) elimination.
Int determinant(std::span<const LatticeVector> rows);

/// Integer coefficients c with sum_i c[i] * basis[i] == target.
/// Requires |determinant(basis)| == 1 (PreconditionError otherwise).
std::vector<Int> unimodular_solve(std::span<const LatticeVector> basis,
                                  const LatticeVector& target);

/// Dual basis u_1..u_n of a unimodular basis: <u_i, basis_j> = delta_ij.
std::vector<LatticeVector> dual_basis(std::span<const LatticeVector> basis);

/// Number of lattice points on the closed segment [p, q].
Int segment_lattice_count(const LatticeVector& p, const LatticeVector& q);

}  // namespace toric

#pragma once

#include <compare>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "toric/lattice.hpp"
#include "toric/linsys.hpp"

namespace toric {

/// Curve class known to be irreducible for the chosen point configuration:
/// base - sum of E_i over `points` (e.g. strict transforms of invariant curves
/// when the blown-up points are torus-fixed).
struct KnownCurve {
    std::vector<Int> base;
    std::vector<std::size_t> points;
    friend bool operator==(const KnownCurve&, const KnownCurve&) = default;
};

/// Blow-up of P^2 or F_a at r points. Basis (L) or (H, F), then E_1..E_r, with
/// L^2 = 1; H^2 = a, H.F = 1, F^2 = 0; E_i^2 = -1; all cross terms 0.
/// Points are in general position unless `known_curves` says otherwise.
struct SurfaceModel {
    enum class Kind { P2, Fa };
    Kind kind = Kind::P2;
    Int a = 0;
    std::size_t r = 0;
    std::vector<KnownCurve> known_curves;

    static SurfaceModel p2(std::size_t r) { return {Kind::P2, 0, r, {}}; }
    static SurfaceModel hirzebruch(Int a, std::size_t r) { return {Kind::Fa, a, r, {}}; }

    std::size_t base_rank() const { return kind == Kind::P2 ? 1 : 2; }
    std::string name() const;
    friend bool operator==(const SurfaceModel&, const SurfaceModel&) = default;
};

/// base - sum_i m[i] E_i on a SurfaceModel.
class PicardClass {
public:
    PicardClass(std::shared_ptr<const SurfaceModel> model, std::vector<Int> base, std::vector<Int> m);

    const SurfaceModel& model() const { return *model_; }
    const std::shared_ptr<const SurfaceModel>& model_ptr() const { return model_; }
    const std::vector<Int>& base() const { return base_; }
    const std::vector<Int>& m() const { return m_; }
    bool is_zero() const;

    static PicardClass zero(std::shared_ptr<const SurfaceModel> model);
    static PicardClass exceptional(std::shared_ptr<const SurfaceModel> model, std::size_t i);
    static PicardClass canonical(std::shared_ptr<const SurfaceModel> model);

    PicardClass& operator+=(const PicardClass& o);
    PicardClass& operator-=(const PicardClass& o);
    friend PicardClass operator+(PicardClass a, const PicardClass& b) { return a += b; }
    friend PicardClass operator-(PicardClass a, const PicardClass& b) { return a -= b; }
    friend PicardClass operator*(Int s, const PicardClass& c);

    friend bool operator==(const PicardClass& a, const PicardClass& b) {
        return *a.model_ == *b.model_ && a.base_ == b.base_ && a.m_ == b.m_;
    }
    // Canonical order: base coefficients, then multiplicities.
    friend std::strong_ordering operator<=>(const PicardClass& a, const PicardClass& b) {
        if (auto c = a.base_ <=> b.base_; c != 0) return c;
        return a.m_ <=> b.m_;
    }

    std::string str() const;

private:
    std::shared_ptr<const SurfaceModel> model_;
    std::vector<Int> base_;
    std::vector<Int> m_;
};

Int intersect(const PicardClass& a, const PicardClass& b);
/// (c.c - c.K) / 2.
Int rr_virtual_dim(const PicardClass& c);
/// Arithmetic genus (c.c + c.K) / 2 + 1.
Int genus(const PicardClass& c);

struct CandidateBounds {
    Int coeff = 3;  // base coefficients range over [-coeff, coeff]; at most 10
};

/// Heuristic rational curve classes: all E_i; lines (P^2) or fibres (F_a)
/// through at most one point, plus lines through two points on P^2; the
/// negative section of F_a; the model's known curves; and every class with
/// bounded base coefficients, exceptional multiplicities all-0, all-1 or a
/// single 1, genus 0, self-intersection >= -max(a, 2) and non-negative
/// expected dimension. Sorted canonically, no duplicates. These are classes,
/// not certified curves.
std::vector<PicardClass> candidate_curves(const std::shared_ptr<const SurfaceModel>& model,
                                          CandidateBounds bounds = {});

struct ReductionStep {
    PicardClass subtracted;
    Int intersection = 0;         // current . subtracted, always <= -1
    Int v_after = 0;
    bool reference_decreases = true;  // subtracted pairs positively with the reference ample class
};

struct ReductionTrace {
    PicardClass start;
    std::vector<ReductionStep> steps;
    PicardClass final_class;
    Int v_start = 0;
    Int v_final = 0;
    bool minus_one_special = false;
};

struct NonTerminationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kReductionCap = 10000;

/// Repeatedly subtracts the canonically-first candidate C with L.C <= -1.
ReductionTrace reduce(const PicardClass& c, const std::vector<PicardClass>& candidates);
/// Verdict: v(final) > v(start).
ReductionTrace is_minus_one_special(const PicardClass& c, const std::vector<PicardClass>& candidates);

/// Fixed reference class used to monitor reduce() progress.
PicardClass reference_ample(const std::shared_ptr<const SurfaceModel>& model);

/// Bounded exploration of every subtraction order (depth <= max_depth).
struct OrderOutcome {
    PicardClass final_class;
    Int v_final = 0;
    bool settled = false;  // no candidate applies any more
    friend bool operator==(const OrderOutcome&, const OrderOutcome&) = default;
};

struct OrderExploration {
    Int v_start = 0;
    std::vector<OrderOutcome> outcomes;  // sorted, unique
    bool order_sensitive = false;        // settled outcomes disagree on the verdict
};

OrderExploration explore_all_orders(const PicardClass& c, const std::vector<PicardClass>& candidates,
                                    std::size_t max_depth = 6);

/// The toric system on P^2 or F_a (standard fans) as a class on the blow-up at
/// all fixed points, with the invariant curves registered as known curves.
PicardClass toric_to_picard(const LinearSystemSpec& spec);

struct MinusOneProbe {
    bool special = false;            // h1 > 0 by the lattice count
    bool minus_one_special = false;  // reduction verdict within the candidate bounds
    bool agree() const { return special == minus_one_special; }
};

MinusOneProbe probe_minus_one(const LinearSystemSpec& spec, CandidateBounds bounds = {});

}  // namespace toric

#include "toric/polytope.hpp"

#include <algorithm>
#include <exception>
#include <iterator>
#include <random>

namespace toric {

ToricDivisor::ToricDivisor(std::shared_ptr<const Fan> fan, std::vector<Int> alpha)
    : fan_(std::move(fan)), alpha_(std::move(alpha)) {
    if (!fan_) throw InputError("ToricDivisor: null fan");
    if (alpha_.size() != fan_->num_rays())
        throw InputError("ToricDivisor: expected " + std::to_string(fan_->num_rays()) + " coefficients, got " +
                         std::to_string(alpha_.size()));
}

bool LatticePolytope::contains(const LatticeVector& m) const {
    for (std::size_t i = 0; i < normals.size(); ++i)
        if (dot(m, normals[i]) < bounds[i]) return false;
    return true;
}

std::size_t LatticePolytope::num_tight(const LatticeVector& m) const {
    std::size_t k = 0;
    for (std::size_t i = 0; i < normals.size(); ++i)
        if (dot(m, normals[i]) == bounds[i]) ++k;
    return k;
}

LatticePolytope polytope_of(const ToricDivisor& d) {
    const Fan& f = d.fan();
    LatticePolytope p;
    p.dim = f.dim;
    p.normals = f.rays;
    for (Int a : d.alpha()) p.bounds.push_back(checked_neg(a));
    for (std::size_t c = 0; c < f.num_cones(); ++c) {
        const auto rays = f.cone_rays(c);
        const auto dual = dual_basis(rays);
        LatticeVector v(f.dim);
        for (std::size_t k = 0; k < rays.size(); ++k)
            v += checked_neg(d.alpha(f.cones[c][k])) * dual[k];
        for (std::size_t k = 0; k < rays.size(); ++k)
            if (dot(v, rays[k]) != -d.alpha(f.cones[c][k]))
                throw InternalError("polytope_of: vertex does not meet its cone's equalities");
        p.vertices.push_back(std::move(v));
    }
    return p;
}

bool is_ample(const ToricDivisor& d) {
    const Fan& f = d.fan();
    const auto p = polytope_of(d);
    for (std::size_t c = 0; c < f.num_cones(); ++c)
        for (std::size_t r = 0; r < f.num_rays(); ++r) {
            if (f.cone_contains(c, r)) continue;
            if (dot(p.vertices[c], f.rays[r]) <= -d.alpha(r)) return false;
        }
    return true;
}

namespace {

struct Box {
    LatticeVector lo, hi;
};

Box bounding_box(const LatticePolytope& p) {
    if (p.vertices.empty()) throw InputError("polytope has no vertices");
    Box b{p.vertices.front(), p.vertices.front()};
    for (const auto& v : p.vertices)
        for (std::size_t i = 0; i < p.dim; ++i) {
            b.lo[i] = std::min(b.lo[i], v[i]);
            b.hi[i] = std::max(b.hi[i], v[i]);
        }
    return b;
}

// Scan all box points whose first coordinate is x0, in lexicographic order.
void scan_slice(const LatticePolytope& p, const Box& b, Int x0, std::vector<LatticeVector>& out) {
    LatticeVector m = b.lo;
    m[0] = x0;
    if (p.dim == 1) {
        if (p.contains(m)) out.push_back(m);
        return;
    }
    while (true) {
        if (p.contains(m)) out.push_back(m);
        std::size_t i = p.dim - 1;
        while (i >= 1) {
            if (m[i] < b.hi[i]) {
                ++m[i];
                break;
            }
            m[i] = b.lo[i];
            --i;
        }
        if (i == 0) return;
    }
}

}  // namespace

std::vector<LatticeVector> lattice_points_serial(const LatticePolytope& p) {
    const Box b = bounding_box(p);
    std::vector<LatticeVector> out;
    for (Int x = b.lo[0]; x <= b.hi[0]; ++x) scan_slice(p, b, x, out);
    return out;
}

std::vector<LatticeVector> lattice_points(const LatticePolytope& p) {
    const Box b = bounding_box(p);
    const Int width = checked_add(checked_sub(b.hi[0], b.lo[0]), 1);
    std::vector<std::vector<LatticeVector>> slices(static_cast<std::size_t>(width));
    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
    for (Int k = 0; k < width; ++k) {
        try {
            scan_slice(p, b, b.lo[0] + k, slices[static_cast<std::size_t>(k)]);
        } catch (...) {
#pragma omp critical(lattice_points_failure)
            failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);
    std::vector<LatticeVector> out;
    for (auto& s : slices) std::move(s.begin(), s.end(), std::back_inserter(out));
    return out;
}

Int edge_point_count(const LatticePolytope& p, const Wall& w) {
    const auto& a = p.vertices.at(w.cone_a);
    const auto& b = p.vertices.at(w.cone_b);
    if (a == b) throw PreconditionError("edge_point_count: edge collapsed to a point (divisor not ample)");
    return segment_lattice_count(a, b);
}

Int edge_point_count(const ToricDivisor& d, const Wall& w) { return edge_point_count(polytope_of(d), w); }

Int curve_degree(const ToricDivisor& d, const Wall& w) {
    Int s = checked_add(d.alpha(w.extra_rays[0]), d.alpha(w.extra_rays[1]));
    for (std::size_t i = 0; i < w.facet_rays.size(); ++i)
        s = checked_add(s, checked_mul(w.gamma[i], d.alpha(w.facet_rays[i])));
    return s;
}

namespace {

// Replace alpha by the linearly equivalent alpha_i + <u, v_i>.
std::vector<Int> translate(const Fan& f, std::vector<Int> alpha, const LatticeVector& u) {
    for (std::size_t i = 0; i < alpha.size(); ++i) alpha[i] = checked_add(alpha[i], dot(u, f.rays[i]));
    return alpha;
}

LatticeVector random_character(std::mt19937_64& rng, std::size_t dim) {
    std::uniform_int_distribution<Int> d(-2, 2);
    LatticeVector u(dim);
    for (std::size_t i = 0; i < dim; ++i) u[i] = d(rng);
    return u;
}

// Ample divisor on a base variety: P^n gets O(k); F_a gets bF_fiber + cH-type.
std::vector<Int> random_base_alpha(std::mt19937_64& rng, const Fan& base, int kind) {
    std::uniform_int_distribution<Int> d(1, 3);
    std::vector<Int> alpha(base.num_rays(), 0);
    if (kind < 0) {
        alpha.back() = d(rng);
    } else {
        alpha[2] = d(rng);
        alpha[3] = d(rng);
    }
    return alpha;
}

}  // namespace

AmpleInstance random_ample_2d(std::uint64_t seed, int steps) {
    const auto trace = random_fan_2d_trace(seed, steps);
    // Divisor draws use an independent stream so the fan matches random_fan_2d.
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
    Fan fan = trace.base;
    std::vector<Int> alpha = random_base_alpha(rng, fan, trace.base_kind);
    for (std::size_t c : trace.blown_cones) {
        const Cone cone = fan.cones[c];
        fan = blowup_fixed_point(fan, c);
        for (int attempt = 0;; ++attempt) {
            for (auto& a : alpha) a = checked_mul(a, 2);
            Int s = 0;
            for (std::size_t r : cone) s = checked_add(s, alpha[r]);
            std::vector<Int> next = alpha;
            next.push_back(s - 1);
            auto fp = std::make_shared<const Fan>(fan);
            if (is_ample(ToricDivisor(fp, next))) {
                alpha = std::move(next);
                break;
            }
            if (attempt == 8) throw InternalError("random_ample_2d: could not make the blown-up divisor ample");
        }
    }
    auto fp = std::make_shared<const Fan>(trace.fan);
    alpha = translate(*fp, std::move(alpha), random_character(rng, 2));
    ToricDivisor d(fp, std::move(alpha));
    if (!is_ample(d)) throw InternalError("random_ample_2d: generated divisor is not ample");
    return {fp, d};
}

AmpleInstance random_ample_product(std::uint64_t seed, std::size_t dim) {
    if (dim < 1) throw InputError("random_ample_product: dimension must be positive");
    std::mt19937_64 rng(seed);
    Fan fan;
    std::vector<Int> alpha;
    std::size_t left = dim;
    bool first = true;
    while (left > 0) {
        Fan factor;
        std::vector<Int> fa;
        int pick = std::uniform_int_distribution<int>(0, left >= 2 ? 2 : 0)(rng);
        if (pick == 0) {
            factor = projective_space(1);
            fa = {0, std::uniform_int_distribution<Int>(1, 4)(rng)};
        } else if (pick == 1) {
            factor = projective_space(2);
            fa = random_base_alpha(rng, factor, -1);
        } else {
            int a = std::uniform_int_distribution<int>(0, 3)(rng);
            factor = hirzebruch(a);
            fa = random_base_alpha(rng, factor, a);
        }
        left -= factor.dim;
        if (first) {
            fan = factor;
            alpha = fa;
            first = false;
        } else {
            fan = product(fan, factor);
            alpha.insert(alpha.end(), fa.begin(), fa.end());
        }
    }
    auto fp = std::make_shared<const Fan>(fan);
    alpha = translate(*fp, std::move(alpha), random_character(rng, dim));
    ToricDivisor d(fp, std::move(alpha));
    if (!is_ample(d)) throw InternalError("random_ample_product: generated divisor is not ample");
    return {fp, d};
}

}  // namespace toric

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "toric/linsys.hpp"

namespace toric {

struct Segment {
    LatticeVector from, to;
};

/// What gets drawn for a linear system: the polytope, which lattice points
/// survive and which are cut, the polytope edges, and one cutting line H_i per
/// fixed point with multiplicity >= 2.
struct RenderSpec {
    LatticePolytope polytope;
    std::vector<LatticeVector> kept;
    std::vector<LatticeVector> cut;  // exactly the points removed by the conditions
    std::vector<Segment> edges;
    std::vector<Segment> hyperplanes;
    int size_px = 480;
};

RenderSpec make_render_spec(const LinearSystemSpec& spec, int size_px = 480);

/// Deterministic SVG. Filled dots are surviving points, open circles cut points.
/// Polytopes of dimension != 2 are summarised as point counts per slice of
/// the first coordinate.
std::string render_svg(const RenderSpec& r);

}  // namespace toric

#include "toric/render.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace toric {

RenderSpec make_render_spec(const LinearSystemSpec& spec, int size_px) {
    RenderSpec r;
    r.size_px = size_px;
    r.polytope = polytope_of(spec.divisor());
    const auto all = lattice_points(r.polytope);
    r.cut = cut_points(spec);
    std::set_difference(all.begin(), all.end(), r.cut.begin(), r.cut.end(), std::back_inserter(r.kept));
    const Fan& f = spec.fan();
    for (const auto& w : walls(f)) r.edges.push_back({r.polytope.vertices[w.cone_a], r.polytope.vertices[w.cone_b]});
    if (f.dim == 2) {
        for (const auto& [cone, m] : spec.mults()) {
            if (m < 2) continue;
            const auto dual = dual_basis(f.cone_rays(cone));
            const auto& v = r.polytope.vertices[cone];
            r.hyperplanes.push_back({v + (m - 1) * dual[0], v + (m - 1) * dual[1]});
        }
    }
    return r;
}

namespace {

std::string render_slices(const RenderSpec& r) {
    std::map<Int, std::pair<std::size_t, std::size_t>> per_slice;  // kept, cut
    for (const auto& p : r.kept) ++per_slice[p[0]].first;
    for (const auto& p : r.cut) ++per_slice[p[0]].second;
    std::ostringstream os;
    const int line = 18;
    const int height = std::max<int>(r.size_px, line * static_cast<int>(per_slice.size() + 3));
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << r.size_px << "\" height=\"" << height
       << "\" font-family=\"monospace\" font-size=\"13\">\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    int y = line;
    os << "<text x=\"8\" y=\"" << y << "\">dimension " << r.polytope.dim << ": lattice points per slice x0 = k</text>\n";
    for (const auto& [k, counts] : per_slice) {
        y += line;
        os << "<text x=\"8\" y=\"" << y << "\">x0 = " << k << ": " << counts.first + counts.second << " points, "
           << counts.second << " cut</text>\n";
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace

std::string render_svg(const RenderSpec& r) {
    if (r.polytope.dim != 2) return render_slices(r);

    Int lo_x = r.polytope.vertices.front()[0], hi_x = lo_x;
    Int lo_y = r.polytope.vertices.front()[1], hi_y = lo_y;
    auto grow = [&](const LatticeVector& p) {
        lo_x = std::min(lo_x, p[0]);
        hi_x = std::max(hi_x, p[0]);
        lo_y = std::min(lo_y, p[1]);
        hi_y = std::max(hi_y, p[1]);
    };
    for (const auto& v : r.polytope.vertices) grow(v);
    for (const auto& s : r.hyperplanes) {
        grow(s.from);
        grow(s.to);
    }
    const double margin = 30.0;
    const double span = static_cast<double>(std::max<Int>({hi_x - lo_x, hi_y - lo_y, 1}));
    const double cell = (r.size_px - 2 * margin) / span;
    const int height = static_cast<int>(2 * margin + cell * static_cast<double>(hi_y - lo_y)) + 1;
    auto px = [&](const LatticeVector& p) {
        return std::make_pair(margin + cell * static_cast<double>(p[0] - lo_x),
                              height - margin - cell * static_cast<double>(p[1] - lo_y));
    };

    std::ostringstream os;
    os.setf(std::ios::fixed);
    os.precision(2);
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << r.size_px << "\" height=\"" << height << "\">\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    os << "<g stroke=\"black\" stroke-width=\"1.5\">\n";
    for (const auto& e : r.edges) {
        auto [x1, y1] = px(e.from);
        auto [x2, y2] = px(e.to);
        os << "<line class=\"edge\" x1=\"" << x1 << "\" y1=\"" << y1 << "\" x2=\"" << x2 << "\" y2=\"" << y2 << "\"/>\n";
    }
    for (const auto& h : r.hyperplanes) {
        auto [x1, y1] = px(h.from);
        auto [x2, y2] = px(h.to);
        os << "<line class=\"hyperplane\" x1=\"" << x1 << "\" y1=\"" << y1 << "\" x2=\"" << x2 << "\" y2=\"" << y2
           << "\"/>\n";
    }
    os << "</g>\n";
    const double dot_r = std::clamp(cell / 8.0, 1.5, 4.0);
    for (const auto& p : r.kept) {
        auto [x, y] = px(p);
        os << "<circle class=\"kept\" cx=\"" << x << "\" cy=\"" << y << "\" r=\"" << dot_r << "\" fill=\"black\"/>\n";
    }
    for (const auto& p : r.cut) {
        auto [x, y] = px(p);
        os << "<circle class=\"cut\" cx=\"" << x << "\" cy=\"" << y << "\" r=\"" << dot_r * 1.8
           << "\" fill=\"none\" stroke=\"black\"/>\n";
    }
    for (std::size_t i = 0; i < r.polytope.vertices.size(); ++i) {
        auto [x, y] = px(r.polytope.vertices[i]);
        os << "<text x=\"" << x + 4 << "\" y=\"" << y - 4 << "\" font-size=\"11\">V" << i + 1 << "</text>\n";
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace toric

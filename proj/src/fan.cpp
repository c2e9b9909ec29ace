#include "toric/fan.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <random>
#include <set>
#include <sstream>

namespace toric {

std::vector<LatticeVector> Fan::cone_rays(std::size_t cone) const {
    std::vector<LatticeVector> out;
    out.reserve(cones.at(cone).size());
    for (std::size_t r : cones.at(cone)) out.push_back(rays.at(r));
    return out;
}

bool Fan::cone_contains(std::size_t cone, std::size_t ray) const {
    const auto& c = cones.at(cone);
    return std::find(c.begin(), c.end(), ray) != c.end();
}

bool ValidationReport::ok() const {
    return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
}

std::string ValidationReport::summary() const {
    std::ostringstream os;
    for (const auto& c : checks) {
        os << (c.passed ? "PASS " : "FAIL ") << c.name << '\n';
        for (const auto& f : c.failures) os << "  - " << f << '\n';
    }
    return os.str();
}

namespace {

std::string cone_str(const Fan& f, std::size_t i) {
    std::ostringstream os;
    os << "cone " << i << " {";
    for (std::size_t k = 0; k < f.cones[i].size(); ++k) os << (k ? "," : "") << f.cones[i][k];
    os << '}';
    return os.str();
}

std::string facet_str(const std::vector<std::size_t>& facet) {
    std::ostringstream os;
    os << "facet {";
    for (std::size_t k = 0; k < facet.size(); ++k) os << (k ? "," : "") << facet[k];
    os << '}';
    return os.str();
}

using FacetMap = std::map<std::vector<std::size_t>, std::vector<std::size_t>>;

FacetMap facet_map(const Fan& f) {
    FacetMap m;
    for (std::size_t c = 0; c < f.cones.size(); ++c) {
        const auto& cone = f.cones[c];
        for (std::size_t drop = 0; drop < cone.size(); ++drop) {
            std::vector<std::size_t> facet;
            for (std::size_t k = 0; k < cone.size(); ++k)
                if (k != drop) facet.push_back(cone[k]);
            std::sort(facet.begin(), facet.end());
            m[facet].push_back(c);
        }
    }
    return m;
}

// Upper half-plane (including the positive x-axis) sorts before the lower one.
bool angle_less(const LatticeVector& a, const LatticeVector& b) {
    auto half = [](const LatticeVector& v) { return (v[1] > 0 || (v[1] == 0 && v[0] > 0)) ? 0 : 1; };
    int ha = half(a), hb = half(b);
    if (ha != hb) return ha < hb;
    return checked_sub(checked_mul(a[0], b[1]), checked_mul(a[1], b[0])) > 0;
}

ValidationCheck angular_coverage(const Fan& f) {
    ValidationCheck chk{"2d angular coverage", true, {}};
    const std::size_t m = f.rays.size();
    if (m < 3) {
        chk.passed = false;
        chk.failures.push_back("a complete 2D fan needs at least 3 rays");
        return chk;
    }
    std::vector<std::size_t> order(m);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t i, std::size_t j) { return angle_less(f.rays[i], f.rays[j]); });
    std::set<std::pair<std::size_t, std::size_t>> cone_set;
    for (const auto& c : f.cones)
        if (c.size() == 2) cone_set.insert(std::minmax(c[0], c[1]));
    for (std::size_t k = 0; k < m; ++k) {
        const std::size_t i = order[k], j = order[(k + 1) % m];
        const auto& a = f.rays[i];
        const auto& b = f.rays[j];
        Int cross = checked_sub(checked_mul(a[0], b[1]), checked_mul(a[1], b[0]));
        if (cross <= 0) {
            chk.passed = false;
            chk.failures.push_back("angular gap of at least pi (or duplicate direction) between rays " +
                                   std::to_string(i) + " and " + std::to_string(j));
        }
        if (!cone_set.count(std::minmax(i, j))) {
            chk.passed = false;
            chk.failures.push_back("angularly consecutive rays " + std::to_string(i) + "," +
                                   std::to_string(j) + " do not span a maximal cone");
        }
    }
    if (f.cones.size() != m) {
        chk.passed = false;
        chk.failures.push_back("expected " + std::to_string(m) + " maximal cones, found " +
                               std::to_string(f.cones.size()));
    }
    return chk;
}

}  // namespace

ValidationReport validate(const Fan& f) {
    ValidationReport rep;

    ValidationCheck shape{"well-formed", true, {}};
    if (f.dim == 0) {
        shape.passed = false;
        shape.failures.push_back("dimension must be at least 1");
    }
    for (std::size_t i = 0; i < f.rays.size(); ++i)
        if (f.rays[i].dim() != f.dim) {
            shape.passed = false;
            shape.failures.push_back("ray " + std::to_string(i) + " has wrong dimension");
        }
    for (std::size_t c = 0; c < f.cones.size(); ++c) {
        const auto& cone = f.cones[c];
        std::set<std::size_t> distinct(cone.begin(), cone.end());
        bool bad_index = std::any_of(cone.begin(), cone.end(), [&](std::size_t r) { return r >= f.rays.size(); });
        if (cone.size() != f.dim || distinct.size() != cone.size() || bad_index) {
            shape.passed = false;
            shape.failures.push_back(cone_str(f, c) + " is not a set of " + std::to_string(f.dim) +
                                     " valid ray indices");
        }
    }
    if (f.cones.empty()) {
        shape.passed = false;
        shape.failures.push_back("no maximal cones");
    }
    rep.checks.push_back(shape);
    if (!shape.passed) return rep;  // later checks index into rays/cones

    ValidationCheck prim{"primitive rays", true, {}};
    for (std::size_t i = 0; i < f.rays.size(); ++i)
        if (!f.rays[i].is_primitive()) {
            prim.passed = false;
            prim.failures.push_back("ray " + std::to_string(i) + " " + f.rays[i].str() + " is not primitive");
        }
    rep.checks.push_back(prim);

    ValidationCheck used{"every ray in a maximal cone", true, {}};
    std::vector<bool> seen(f.rays.size(), false);
    for (const auto& c : f.cones)
        for (std::size_t r : c) seen[r] = true;
    for (std::size_t i = 0; i < seen.size(); ++i)
        if (!seen[i]) {
            used.passed = false;
            used.failures.push_back("ray " + std::to_string(i) + " is in no maximal cone");
        }
    rep.checks.push_back(used);

    ValidationCheck smooth{"unimodular cones", true, {}};
    for (std::size_t c = 0; c < f.cones.size(); ++c) {
        auto rays = f.cone_rays(c);
        Int det = determinant(rays);
        if (det != 1 && det != -1) {
            smooth.passed = false;
            smooth.failures.push_back(cone_str(f, c) + " has determinant " + std::to_string(det));
        }
    }
    rep.checks.push_back(smooth);

    ValidationCheck pairing{"facet pairing", true, {}};
    const auto facets = facet_map(f);
    for (const auto& [facet, owners] : facets)
        if (owners.size() != 2) {
            pairing.passed = false;
            pairing.failures.push_back(facet_str(facet) + " lies in " + std::to_string(owners.size()) +
                                       " maximal cone(s), expected 2");
        }
    rep.checks.push_back(pairing);

    ValidationCheck connected{"facet graph connected", true, {}};
    std::vector<std::vector<std::size_t>> adj(f.cones.size());
    for (const auto& [facet, owners] : facets)
        if (owners.size() == 2) {
            adj[owners[0]].push_back(owners[1]);
            adj[owners[1]].push_back(owners[0]);
        }
    std::vector<bool> reached(f.cones.size(), false);
    std::queue<std::size_t> q;
    q.push(0);
    reached[0] = true;
    while (!q.empty()) {
        auto c = q.front();
        q.pop();
        for (auto d : adj[c])
            if (!reached[d]) {
                reached[d] = true;
                q.push(d);
            }
    }
    for (std::size_t c = 0; c < reached.size(); ++c)
        if (!reached[c]) {
            connected.passed = false;
            connected.failures.push_back(cone_str(f, c) + " is not reachable from cone 0");
        }
    rep.checks.push_back(connected);

    if (f.dim == 2) rep.checks.push_back(angular_coverage(f));
    return rep;
}

std::vector<Wall> walls(const Fan& f) {
    std::vector<Wall> out;
    for (const auto& [facet, owners] : facet_map(f)) {
        if (owners.size() != 2) throw PreconditionError("walls: fan is not complete (unpaired " + facet_str(facet) + ")");
        Wall w;
        w.facet_rays = facet;
        w.cone_a = std::min(owners[0], owners[1]);
        w.cone_b = std::max(owners[0], owners[1]);
        auto extra_of = [&](std::size_t cone) {
            for (std::size_t r : f.cones[cone])
                if (!std::binary_search(facet.begin(), facet.end(), r)) return r;
            throw InternalError("walls: cone does not extend its facet");
        };
        const std::size_t xa = extra_of(w.cone_a), xb = extra_of(w.cone_b);
        std::vector<LatticeVector> basis;
        for (std::size_t r : facet) basis.push_back(f.rays[r]);
        basis.push_back(f.rays[xa]);
        const auto coeffs = unimodular_solve(basis, -f.rays[xb]);
        if (coeffs.back() != 1)
            throw InternalError("walls: wall relation has coefficient " + std::to_string(coeffs.back()) +
                                " on the extra ray of " + facet_str(facet) + " (non-smooth or mis-paired fan)");
        w.gamma.assign(coeffs.begin(), coeffs.end() - 1);
        w.extra_rays = {std::min(xa, xb), std::max(xa, xb)};
        out.push_back(std::move(w));
    }
    // facet_map iterates in sorted facet order already
    return out;
}

std::string describe(const Wall& w) {
    std::ostringstream os;
    os << "wall{facet=[";
    for (std::size_t k = 0; k < w.facet_rays.size(); ++k) os << (k ? "," : "") << w.facet_rays[k];
    os << "], cones=(" << w.cone_a << "," << w.cone_b << "), gamma=[";
    for (std::size_t k = 0; k < w.gamma.size(); ++k) os << (k ? "," : "") << w.gamma[k];
    os << "]}";
    return os.str();
}

Fan projective_space(std::size_t n) {
    if (n == 0) throw InputError("projective_space: dimension must be positive");
    Fan f;
    f.dim = n;
    LatticeVector last(n);
    for (std::size_t i = 0; i < n; ++i) {
        LatticeVector e(n);
        e[i] = 1;
        f.rays.push_back(e);
        last[i] = -1;
    }
    f.rays.push_back(last);
    for (std::size_t skip = n + 1; skip-- > 0;) {
        Cone c;
        for (std::size_t i = 0; i <= n; ++i)
            if (i != skip) c.push_back(i);
        f.cones.push_back(c);
    }
    return f;
}

Fan hirzebruch(Int a) {
    if (a < 0) throw InputError("hirzebruch: parameter must be non-negative");
    Fan f;
    f.dim = 2;
    f.rays = {{1, 0}, {0, 1}, {-1, a}, {0, -1}};
    f.cones = {{0, 1}, {1, 2}, {2, 3}, {3, 0}};
    return f;
}

Fan product(const Fan& f1, const Fan& f2) {
    Fan f;
    f.dim = f1.dim + f2.dim;
    for (const auto& r : f1.rays) {
        LatticeVector v(f.dim);
        for (std::size_t i = 0; i < f1.dim; ++i) v[i] = r[i];
        f.rays.push_back(v);
    }
    for (const auto& r : f2.rays) {
        LatticeVector v(f.dim);
        for (std::size_t i = 0; i < f2.dim; ++i) v[f1.dim + i] = r[i];
        f.rays.push_back(v);
    }
    const std::size_t off = f1.rays.size();
    for (const auto& c1 : f1.cones)
        for (const auto& c2 : f2.cones) {
            Cone c = c1;
            for (std::size_t r : c2) c.push_back(off + r);
            f.cones.push_back(c);
        }
    return f;
}

Fan blowup_fixed_point(const Fan& f, std::size_t cone) {
    if (cone >= f.cones.size()) throw InputError("blowup_fixed_point: invalid cone index " + std::to_string(cone));
    Fan g = f;
    LatticeVector sum(f.dim);
    for (std::size_t r : f.cones[cone]) sum += f.rays[r];
    const std::size_t new_ray = g.rays.size();
    g.rays.push_back(sum);
    const Cone old = f.cones[cone];
    std::vector<Cone> pieces;
    for (std::size_t k = 0; k < old.size(); ++k) {
        Cone c = old;
        c[k] = new_ray;
        pieces.push_back(c);
    }
    // In 2D keep angular adjacency: {a,b} -> {a,new},{new,b}.
    if (f.dim == 2) std::swap(pieces[0], pieces[1]);
    g.cones.erase(g.cones.begin() + static_cast<std::ptrdiff_t>(cone));
    g.cones.insert(g.cones.begin() + static_cast<std::ptrdiff_t>(cone), pieces.begin(), pieces.end());
    return g;
}

RandomFanTrace random_fan_2d_trace(std::uint64_t seed, int steps) {
    if (steps < 0 || steps > 12) throw InputError("random_fan_2d: steps must be in [0, 12]");
    std::mt19937_64 rng(seed);
    RandomFanTrace t;
    t.base_kind = static_cast<int>(std::uniform_int_distribution<int>(-1, 4)(rng));
    t.base = t.base_kind < 0 ? projective_space(2) : hirzebruch(t.base_kind);
    t.fan = t.base;
    for (int s = 0; s < steps; ++s) {
        std::size_t c = std::uniform_int_distribution<std::size_t>(0, t.fan.cones.size() - 1)(rng);
        t.blown_cones.push_back(c);
        t.fan = blowup_fixed_point(t.fan, c);
    }
    return t;
}

Fan random_fan_2d(std::uint64_t seed, int steps) { return random_fan_2d_trace(seed, steps).fan; }

}  // namespace toric

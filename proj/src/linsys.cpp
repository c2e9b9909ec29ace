#include "toric/linsys.hpp"

#include <algorithm>
#include <exception>
#include <sstream>

namespace toric {

LinearSystemSpec::LinearSystemSpec(ToricDivisor divisor, std::map<std::size_t, Int> mults)
    : divisor_(std::move(divisor)), mults_(std::move(mults)) {
    for (const auto& [cone, m] : mults_) {
        if (cone >= fan().num_cones())
            throw InputError("multiplicity given for unknown fixed point " + std::to_string(cone));
        if (m < 0) throw InputError("multiplicities must be non-negative");
    }
    if (!is_ample(divisor_)) throw NotAmpleError();
}

Int LinearSystemSpec::mult(std::size_t cone) const {
    auto it = mults_.find(cone);
    return it == mults_.end() ? 0 : it->second;
}

LinearSystemSpec LinearSystemSpec::restricted_to(std::initializer_list<std::size_t> cones) const {
    std::map<std::size_t, Int> kept;
    for (std::size_t c : cones)
        if (auto it = mults_.find(c); it != mults_.end()) kept.insert(*it);
    return LinearSystemSpec(divisor_, std::move(kept));
}

Int multiplicity_at(const ToricDivisor& d, const LatticeVector& m, std::size_t cone) {
    const Fan& f = d.fan();
    if (cone >= f.num_cones()) throw InputError("multiplicity_at: invalid cone index");
    const auto p = polytope_of(d);
    const auto dual = dual_basis(f.cone_rays(cone));
    const auto coeffs = unimodular_solve(dual, m - p.vertices[cone]);
    Int sum = 0;
    for (Int c : coeffs) {
        if (c < 0) throw PreconditionError("multiplicity_at: point " + m.str() + " lies outside the polytope");
        sum = checked_add(sum, c);
    }
    return sum;
}

MultiplicityTable::MultiplicityTable(const ToricDivisor& d) {
    const Fan& f = d.fan();
    for (const auto& cone : f.cones) {
        LatticeVector s(f.dim);
        Int off = 0;
        for (std::size_t r : cone) {
            s += f.rays[r];
            off = checked_add(off, d.alpha(r));
        }
        ray_sums_.push_back(std::move(s));
        offsets_.push_back(off);
    }
}

Int MultiplicityTable::operator()(const LatticeVector& m, std::size_t cone) const {
    return checked_add(dot(m, ray_sums_[cone]), offsets_[cone]);
}

Int h0(const ToricDivisor& d) { return static_cast<Int>(lattice_points(polytope_of(d)).size()); }

Int virtual_dim(const LinearSystemSpec& spec) {
    const Int n = static_cast<Int>(spec.fan().dim);
    Int v = checked_sub(h0(spec.divisor()), 1);
    for (const auto& [cone, m] : spec.mults()) v = checked_sub(v, binomial(m + n - 1, n));
    return v;
}

namespace {

bool survives(const MultiplicityTable& table, const LinearSystemSpec& spec, const LatticeVector& m) {
    for (const auto& [cone, mult] : spec.mults())
        if (mult > 0 && table(m, cone) < mult) return false;
    return true;
}

}  // namespace

Int effective_dim_serial(const LinearSystemSpec& spec) {
    const MultiplicityTable table(spec.divisor());
    Int count = 0;
    for (const auto& m : lattice_points_serial(polytope_of(spec.divisor())))
        if (survives(table, spec, m)) ++count;
    return count - 1;
}

Int effective_dim(const LinearSystemSpec& spec) {
    const MultiplicityTable table(spec.divisor());
    const auto pts = lattice_points(polytope_of(spec.divisor()));
    const auto n = static_cast<std::ptrdiff_t>(pts.size());
    Int count = 0;
    std::exception_ptr failure;
#pragma omp parallel for reduction(+ : count)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        try {
            if (survives(table, spec, pts[static_cast<std::size_t>(i)])) ++count;
        } catch (...) {
#pragma omp critical(effective_dim_failure)
            failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);
    return count - 1;
}

Int h1(const LinearSystemSpec& spec) {
    const Int h = checked_sub(effective_dim(spec), virtual_dim(spec));
    if (h < 0) throw InternalError("h1: effective dimension below virtual dimension");
    return h;
}

std::vector<LatticeVector> cut_points(const LinearSystemSpec& spec) {
    const MultiplicityTable table(spec.divisor());
    std::vector<LatticeVector> out;
    for (const auto& m : lattice_points(polytope_of(spec.divisor())))
        if (!survives(table, spec, m)) out.push_back(m);
    return out;
}

Int system_curve_intersection(const LinearSystemSpec& spec, const Wall& w) {
    return checked_sub(checked_sub(curve_degree(spec.divisor(), w), spec.mult(w.cone_a)), spec.mult(w.cone_b));
}

std::vector<Witness> all_witnesses(const LinearSystemSpec& spec, WitnessScope scope) {
    std::vector<Witness> out;
    for (const auto& w : walls(spec.fan())) {
        if (scope == WitnessScope::MarkedOnly && !(spec.is_marked(w.cone_a) && spec.is_marked(w.cone_b))) continue;
        const Int v = system_curve_intersection(spec, w);
        if (v <= -2) out.push_back({w, v});
    }
    return out;
}

std::optional<Witness> first_witness(const LinearSystemSpec& spec, WitnessScope scope) {
    auto ws = all_witnesses(spec, scope);
    if (ws.empty()) return std::nullopt;
    return ws.front();
}

SpecialityReport speciality_report(const LinearSystemSpec& spec, WitnessScope scope) {
    SpecialityReport r;
    r.virtual_dim = virtual_dim(spec);
    r.effective_dim = effective_dim(spec);
    r.h1 = checked_sub(r.effective_dim, r.virtual_dim);
    if (r.h1 < 0) throw InternalError("speciality_report: effective dimension below virtual dimension");
    r.special = r.h1 > 0;
    r.witnesses = all_witnesses(spec, scope);
    if (r.special != !r.witnesses.empty()) {
        std::ostringstream os;
        os << "unwitnessed: h1 = " << r.h1 << " but " << r.witnesses.size()
           << " invariant curve(s) with L.C <= -2";
        r.unwitnessed = os.str();
    }
    return r;
}

std::optional<std::pair<std::size_t, std::size_t>> special_pair(const LinearSystemSpec& spec) {
    const std::size_t k = spec.fan().num_cones();
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j) {
            if (spec.mult(i) == 0 && spec.mult(j) == 0) continue;
            if (h1(spec.restricted_to({i, j})) > 0) return std::make_pair(i, j);
        }
    return std::nullopt;
}

}  // namespace toric

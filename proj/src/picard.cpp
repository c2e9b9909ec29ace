#include "toric/picard.hpp"

#include <algorithm>
#include <exception>
#include <map>
#include <set>
#include <sstream>

namespace toric {

std::string SurfaceModel::name() const {
    std::ostringstream os;
    if (kind == Kind::P2)
        os << "P2";
    else
        os << "F" << a;
    os << " blown up at " << r << " point(s)";
    return os.str();
}

PicardClass::PicardClass(std::shared_ptr<const SurfaceModel> model, std::vector<Int> base, std::vector<Int> m)
    : model_(std::move(model)), base_(std::move(base)), m_(std::move(m)) {
    if (!model_) throw InputError("PicardClass: null model");
    if (base_.size() != model_->base_rank())
        throw InputError("PicardClass: expected " + std::to_string(model_->base_rank()) + " base coefficient(s)");
    if (m_.size() != model_->r)
        throw InputError("PicardClass: expected " + std::to_string(model_->r) + " exceptional coefficients");
}

bool PicardClass::is_zero() const {
    auto nz = [](Int x) { return x != 0; };
    return std::none_of(base_.begin(), base_.end(), nz) && std::none_of(m_.begin(), m_.end(), nz);
}

PicardClass PicardClass::zero(std::shared_ptr<const SurfaceModel> model) {
    const auto rank = model->base_rank();
    const auto r = model->r;
    return PicardClass(std::move(model), std::vector<Int>(rank, 0), std::vector<Int>(r, 0));
}

PicardClass PicardClass::exceptional(std::shared_ptr<const SurfaceModel> model, std::size_t i) {
    if (i >= model->r) throw InputError("exceptional: point index out of range");
    PicardClass c = zero(std::move(model));
    c.m_[i] = -1;
    return c;
}

PicardClass PicardClass::canonical(std::shared_ptr<const SurfaceModel> model) {
    std::vector<Int> base = model->kind == SurfaceModel::Kind::P2 ? std::vector<Int>{-3}
                                                                  : std::vector<Int>{-2, model->a - 2};
    std::vector<Int> m(model->r, -1);
    return PicardClass(std::move(model), std::move(base), std::move(m));
}

static void require_same_model(const PicardClass& a, const PicardClass& b) {
    if (!(a.model() == b.model())) throw InputError("Picard classes live on different surface models");
}

PicardClass& PicardClass::operator+=(const PicardClass& o) {
    require_same_model(*this, o);
    for (std::size_t i = 0; i < base_.size(); ++i) base_[i] = checked_add(base_[i], o.base_[i]);
    for (std::size_t i = 0; i < m_.size(); ++i) m_[i] = checked_add(m_[i], o.m_[i]);
    return *this;
}

PicardClass& PicardClass::operator-=(const PicardClass& o) {
    require_same_model(*this, o);
    for (std::size_t i = 0; i < base_.size(); ++i) base_[i] = checked_sub(base_[i], o.base_[i]);
    for (std::size_t i = 0; i < m_.size(); ++i) m_[i] = checked_sub(m_[i], o.m_[i]);
    return *this;
}

PicardClass operator*(Int s, const PicardClass& c) {
    PicardClass r = c;
    for (auto& x : r.base_) x = checked_mul(s, x);
    for (auto& x : r.m_) x = checked_mul(s, x);
    return r;
}

std::string PicardClass::str() const {
    std::ostringstream os;
    auto term = [&](Int coeff, const std::string& sym, bool& first) {
        if (coeff == 0) return;
        if (first)
            os << (coeff < 0 ? "-" : "");
        else
            os << (coeff < 0 ? " - " : " + ");
        Int mag = coeff < 0 ? -coeff : coeff;
        if (mag != 1) os << mag;
        os << sym;
        first = false;
    };
    bool first = true;
    if (model_->kind == SurfaceModel::Kind::P2) {
        term(base_[0], "L", first);
    } else {
        term(base_[0], "H", first);
        term(base_[1], "F", first);
    }
    for (std::size_t i = 0; i < m_.size(); ++i) term(checked_neg(m_[i]), "E" + std::to_string(i + 1), first);
    if (first) os << "0";
    return os.str();
}

Int intersect(const PicardClass& x, const PicardClass& y) {
    require_same_model(x, y);
    const auto& mod = x.model();
    Int s = 0;
    if (mod.kind == SurfaceModel::Kind::P2) {
        s = checked_mul(x.base()[0], y.base()[0]);
    } else {
        const Int h1 = x.base()[0], f1 = x.base()[1], h2 = y.base()[0], f2 = y.base()[1];
        s = checked_mul(mod.a, checked_mul(h1, h2));
        s = checked_add(s, checked_mul(h1, f2));
        s = checked_add(s, checked_mul(h2, f1));
    }
    for (std::size_t i = 0; i < mod.r; ++i) s = checked_sub(s, checked_mul(x.m()[i], y.m()[i]));
    return s;
}

Int rr_virtual_dim(const PicardClass& c) {
    const auto k = PicardClass::canonical(c.model_ptr());
    const Int num = checked_sub(intersect(c, c), intersect(c, k));
    if (num % 2 != 0) throw InternalError("rr_virtual_dim: odd numerator " + std::to_string(num));
    return num / 2;
}

Int genus(const PicardClass& c) {
    const auto k = PicardClass::canonical(c.model_ptr());
    const Int num = checked_add(intersect(c, c), intersect(c, k));
    if (num % 2 != 0) throw InternalError("genus: odd numerator " + std::to_string(num));
    return num / 2 + 1;
}

std::vector<PicardClass> candidate_curves(const std::shared_ptr<const SurfaceModel>& model, CandidateBounds bounds) {
    if (bounds.coeff < 0 || bounds.coeff > 10) throw InputError("candidate_curves: coefficient bound must be in [0, 10]");
    const auto& mod = *model;
    const std::size_t r = mod.r;
    const bool p2 = mod.kind == SurfaceModel::Kind::P2;
    std::set<PicardClass> out;

    auto with_points = [&](std::vector<Int> base, std::initializer_list<std::size_t> pts) {
        std::vector<Int> m(r, 0);
        for (std::size_t p : pts) m[p] = 1;
        return PicardClass(model, std::move(base), std::move(m));
    };

    for (std::size_t i = 0; i < r; ++i) out.insert(PicardClass::exceptional(model, i));

    const std::vector<Int> line = p2 ? std::vector<Int>{1} : std::vector<Int>{0, 1};
    out.insert(with_points(line, {}));
    for (std::size_t i = 0; i < r; ++i) out.insert(with_points(line, {i}));
    // Two general points span a line in P^2 but never share a fibre of F_a.
    if (p2)
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = i + 1; j < r; ++j) out.insert(with_points(line, {i, j}));
    if (!p2) out.insert(with_points({1, -mod.a}, {}));

    for (const auto& kc : mod.known_curves) {
        std::vector<Int> m(r, 0);
        for (std::size_t p : kc.points) m.at(p) = 1;
        out.insert(PicardClass(model, kc.base, std::move(m)));
    }

    std::vector<std::vector<Int>> mult_patterns;
    mult_patterns.emplace_back(r, 0);
    if (r > 0) mult_patterns.emplace_back(r, 1);
    for (std::size_t i = 0; i < r; ++i) {
        std::vector<Int> e(r, 0);
        e[i] = 1;
        if (r > 1) mult_patterns.push_back(std::move(e));
    }
    const Int self_bound = -std::max<Int>(mod.a, 2);
    const Int B = bounds.coeff;
    std::vector<std::vector<Int>> bases;
    if (p2) {
        for (Int d = -B; d <= B; ++d) bases.push_back({d});
    } else {
        for (Int h = -B; h <= B; ++h)
            for (Int f = -B; f <= B; ++f) bases.push_back({h, f});
    }
    for (const auto& base : bases)
        for (const auto& m : mult_patterns) {
            PicardClass c(model, base, m);
            if (c.is_zero()) continue;
            if (genus(c) != 0 || intersect(c, c) < self_bound) continue;
            if (rr_virtual_dim(c) < 0) continue;  // not expected to move through the points
            out.insert(std::move(c));
        }
    return {out.begin(), out.end()};
}

PicardClass reference_ample(const std::shared_ptr<const SurfaceModel>& model) {
    const Int t = static_cast<Int>(model->r) + 1;
    std::vector<Int> base = model->kind == SurfaceModel::Kind::P2 ? std::vector<Int>{t} : std::vector<Int>{t, t};
    return PicardClass(model, std::move(base), std::vector<Int>(model->r, 1));
}

ReductionTrace reduce(const PicardClass& c, const std::vector<PicardClass>& candidates) {
    if (candidates.empty()) throw InputError("reduce: empty candidate list");
    const auto ref = reference_ample(c.model_ptr());
    ReductionTrace t{c, {}, c, rr_virtual_dim(c), 0, false};
    PicardClass cur = c;
    for (std::size_t it = 0;; ++it) {
        auto pick = std::find_if(candidates.begin(), candidates.end(),
                                 [&](const PicardClass& k) { return intersect(cur, k) <= -1; });
        if (pick == candidates.end()) break;
        if (it == kReductionCap)
            throw NonTerminationError("reduce: no fixed point after " + std::to_string(kReductionCap) + " steps from " +
                                      c.str());
        const Int val = intersect(cur, *pick);
        cur -= *pick;
        t.steps.push_back({*pick, val, rr_virtual_dim(cur), intersect(ref, *pick) > 0});
    }
    t.final_class = cur;
    t.v_final = rr_virtual_dim(cur);
    t.minus_one_special = t.v_final > t.v_start;
    return t;
}

ReductionTrace is_minus_one_special(const PicardClass& c, const std::vector<PicardClass>& candidates) {
    return reduce(c, candidates);
}

namespace {

struct Explorer {
    const std::vector<PicardClass>& candidates;
    std::map<std::pair<PicardClass, std::size_t>, std::vector<OrderOutcome>> memo;

    std::vector<OrderOutcome> run(const PicardClass& cur, std::size_t depth) {
        auto key = std::make_pair(cur, depth);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        std::vector<OrderOutcome> res;
        bool any = false;
        for (const auto& k : candidates) {
            if (intersect(cur, k) > -1) continue;
            any = true;
            if (depth == 0) break;
            for (auto& o : run(cur - k, depth - 1)) res.push_back(std::move(o));
        }
        if (!any || depth == 0) res.push_back({cur, rr_virtual_dim(cur), !any});
        std::sort(res.begin(), res.end(), [](const auto& a, const auto& b) { return a.final_class < b.final_class; });
        res.erase(std::unique(res.begin(), res.end()), res.end());
        memo.emplace(key, res);
        return res;
    }
};

}  // namespace

OrderExploration explore_all_orders(const PicardClass& c, const std::vector<PicardClass>& candidates,
                                    std::size_t max_depth) {
    if (max_depth > 6) throw InputError("explore_all_orders: depth is capped at 6");
    OrderExploration ex;
    ex.v_start = rr_virtual_dim(c);
    std::vector<std::size_t> first;
    for (std::size_t i = 0; i < candidates.size(); ++i)
        if (intersect(c, candidates[i]) <= -1) first.push_back(i);
    if (first.empty() || max_depth == 0) {
        ex.outcomes.push_back({c, ex.v_start, first.empty()});
        return ex;
    }
    // Each first move is explored independently; results are merged in sorted order.
    std::vector<std::vector<OrderOutcome>> branches(first.size());
    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t b = 0; b < static_cast<std::ptrdiff_t>(first.size()); ++b) {
        try {
            Explorer e{candidates, {}};
            const auto i = first[static_cast<std::size_t>(b)];
            branches[static_cast<std::size_t>(b)] = e.run(c - candidates[i], max_depth - 1);
        } catch (...) {
#pragma omp critical(explore_failure)
            failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);
    for (auto& br : branches)
        for (auto& o : br) ex.outcomes.push_back(std::move(o));
    std::sort(ex.outcomes.begin(), ex.outcomes.end(),
              [](const auto& a, const auto& b) { return a.final_class < b.final_class; });
    ex.outcomes.erase(std::unique(ex.outcomes.begin(), ex.outcomes.end()), ex.outcomes.end());
    bool seen_yes = false, seen_no = false;
    for (const auto& o : ex.outcomes) {
        if (!o.settled) continue;
        (o.v_final > ex.v_start ? seen_yes : seen_no) = true;
    }
    ex.order_sensitive = seen_yes && seen_no;
    return ex;
}

PicardClass toric_to_picard(const LinearSystemSpec& spec) {
    const Fan& f = spec.fan();
    const auto& alpha = spec.divisor().alpha();
    const auto ws = walls(f);
    auto model = std::make_shared<SurfaceModel>();
    model->r = f.num_cones();
    std::vector<Int> base;
    std::vector<std::vector<Int>> curve_class(f.num_rays());
    if (f == projective_space(2)) {
        model->kind = SurfaceModel::Kind::P2;
        base = {alpha[0] + alpha[1] + alpha[2]};
        for (auto& c : curve_class) c = {1};
    } else if (f.dim == 2 && f.num_rays() == 4 && f.rays[2][0] == -1 && f.rays[2][1] >= 0 &&
               f == hirzebruch(f.rays[2][1])) {
        const Int a = f.rays[2][1];
        model->kind = SurfaceModel::Kind::Fa;
        model->a = a;
        // D_1 ~ D_3 ~ F, D_2 = H - aF (negative section), D_4 ~ H.
        base = {checked_add(alpha[1], alpha[3]), checked_sub(checked_add(alpha[0], alpha[2]), checked_mul(a, alpha[1]))};
        curve_class = {{0, 1}, {1, -a}, {0, 1}, {1, 0}};
    } else {
        throw InputError("toric_to_picard: only the standard fans of P2 and F_a are supported");
    }
    for (const auto& w : ws) model->known_curves.push_back({curve_class[w.facet_rays[0]], {w.cone_a, w.cone_b}});
    std::vector<Int> m(model->r, 0);
    for (std::size_t i = 0; i < model->r; ++i) m[i] = spec.mult(i);
    return PicardClass(std::move(model), std::move(base), std::move(m));
}

MinusOneProbe probe_minus_one(const LinearSystemSpec& spec, CandidateBounds bounds) {
    MinusOneProbe p;
    p.special = h1(spec) > 0;
    const auto cls = toric_to_picard(spec);
    p.minus_one_special = is_minus_one_special(cls, candidate_curves(cls.model_ptr(), bounds)).minus_one_special;
    return p;
}

}  // namespace toric

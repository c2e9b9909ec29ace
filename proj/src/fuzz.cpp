#include "toric/fuzz.hpp"

#include <algorithm>
#include <exception>
#include <optional>
#include <random>
#include <sstream>

#include "toric/io.hpp"

namespace toric::fuzz {

using nlohmann::json;

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32)};
    std::array<std::uint32_t, 2> out{};
    seq.generate(out.begin(), out.end());
    return (static_cast<std::uint64_t>(out[0]) << 32) | out[1];
}

namespace {

// Runs body(t) for t in [0, n) concurrently; the first exception is rethrown.
template <class Body>
void parallel_trials(std::size_t n, Body&& body) {
    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t t = 0; t < static_cast<std::ptrdiff_t>(n); ++t) {
        try {
            body(static_cast<std::size_t>(t));
        } catch (...) {
#pragma omp critical(fuzz_failure)
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);
}

std::vector<Violation> collect(std::vector<std::optional<Violation>>& slots) {
    std::vector<Violation> out;
    for (auto& s : slots)
        if (s) out.push_back(std::move(*s));
    return out;
}

std::vector<Int> all_wall_degrees_positive_search(const Fan& f, std::mt19937_64& rng);
std::vector<Int> ample_search(const Fan& f, std::mt19937_64& rng);

// 2D: blow down a (-1)-ray (v_a + v_b = v_i), find an ample class downstairs,
// then take k * pullback - E for k large enough.
std::optional<std::vector<Int>> ample_by_blowdown(const Fan& f, std::mt19937_64& rng) {
    for (std::size_t i = 0; i < f.num_rays(); ++i) {
        std::vector<std::size_t> nbr, inc;
        for (std::size_t c = 0; c < f.num_cones(); ++c)
            if (f.cone_contains(c, i)) {
                inc.push_back(c);
                for (auto r : f.cones[c])
                    if (r != i) nbr.push_back(r);
            }
        if (nbr.size() != 2 || f.rays[nbr[0]] + f.rays[nbr[1]] != f.rays[i]) continue;
        Fan down;
        down.dim = 2;
        auto idx = [&](std::size_t r) { return r < i ? r : r - 1; };
        for (std::size_t r = 0; r < f.num_rays(); ++r)
            if (r != i) down.rays.push_back(f.rays[r]);
        for (std::size_t c = 0; c < f.num_cones(); ++c) {
            if (c == inc[0]) {
                down.cones.push_back({idx(nbr[0]), idx(nbr[1])});
            } else if (c != inc[1]) {
                Cone k;
                for (auto r : f.cones[c]) k.push_back(idx(r));
                down.cones.push_back(k);
            }
        }
        const auto base = ample_search(down, rng);
        auto fp = std::make_shared<const Fan>(f);
        for (Int k = 1; k <= (Int{1} << 20); k *= 2) {
            std::vector<Int> a(f.num_rays());
            for (std::size_t r = 0; r < f.num_rays(); ++r)
                if (r != i) a[r] = checked_mul(k, base[idx(r)]);
            a[i] = checked_sub(checked_add(a[nbr[0]], a[nbr[1]]), 1);
            if (is_ample(ToricDivisor(fp, a))) return a;
        }
        return std::nullopt;
    }
    return std::nullopt;
}

std::vector<Int> ample_search(const Fan& f, std::mt19937_64& rng) {
    if (f.dim == 2 && f.num_rays() > 4)
        if (auto a = ample_by_blowdown(f, rng)) return *a;
    return all_wall_degrees_positive_search(f, rng);
}

std::vector<Int> all_wall_degrees_positive_search(const Fan& f, std::mt19937_64& rng) {
    const auto ws = walls(f);
    auto fp = std::make_shared<const Fan>(f);
    auto ample = [&](const std::vector<Int>& a) {
        for (const auto& w : ws) {
            Int deg = checked_add(a[w.extra_rays[0]], a[w.extra_rays[1]]);
            for (std::size_t i = 0; i < w.facet_rays.size(); ++i)
                deg = checked_add(deg, checked_mul(w.gamma[i], a[w.facet_rays[i]]));
            if (deg <= 0) return false;
        }
        return is_ample(ToricDivisor(fp, a));
    };
    for (Int bound = 1; bound <= 64; bound *= 2) {
        std::uniform_int_distribution<Int> d(0, bound);
        for (int attempt = 0; attempt < 4000; ++attempt) {
            std::vector<Int> a(f.num_rays());
            for (auto& x : a) x = d(rng);
            if (ample(a)) return a;
        }
    }
    throw InputError("no ample divisor found on this fan (it may not be projective)");
}

}  // namespace

ToricDivisor random_ample_on(const std::shared_ptr<const Fan>& fan, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const auto base = ample_search(*fan, rng);
    std::uniform_int_distribution<Int> scale(1, 3), noise(0, 2), shift(-3, 3);
    Int c = scale(rng);
    for (int attempt = 0; attempt < 64; ++attempt) {
        std::vector<Int> a(base.size());
        for (std::size_t i = 0; i < a.size(); ++i) a[i] = checked_add(checked_mul(c, base[i]), noise(rng));
        LatticeVector u(fan->dim);
        for (std::size_t i = 0; i < fan->dim; ++i) u[i] = shift(rng);
        for (std::size_t i = 0; i < a.size(); ++i) a[i] = checked_add(a[i], dot(u, fan->rays[i]));
        ToricDivisor d(fan, a);
        if (is_ample(d)) return d;
        c = checked_mul(c, 2);  // rescale: a large multiple of an ample class absorbs the noise
    }
    throw InternalError("random_ample_on: rejection sampling did not converge");
}

std::vector<std::string> wall_degree_mismatches(const ToricDivisor& d) {
    std::vector<std::string> out;
    const auto p = polytope_of(d);
    for (const auto& w : walls(d.fan())) {
        const Int deg = curve_degree(d, w);
        const Int n = edge_point_count(p, w);
        if (deg != n - 1) {
            std::ostringstream os;
            os << describe(w) << ": D.C = " << deg << " but N = " << n;
            out.push_back(os.str());
        }
    }
    return out;
}

namespace {

void wall_degree_trial(const ToricDivisor& d, std::size_t t, std::size_t& walls_checked, std::optional<Violation>& slot) {
    auto bad = wall_degree_mismatches(d);
    walls_checked = walls(d.fan()).size();
    if (!bad.empty()) {
        json rep = {{"fan", io::fan_to_json(d.fan())}, {"alpha", d.alpha()}, {"mismatches", bad}};
        slot = Violation{t, bad.front(), rep};
    }
}

}  // namespace

WallDegreeSummary check_wall_degrees(const std::shared_ptr<const Fan>& fan, std::size_t trials, std::uint64_t seed) {
    if (trials > 10000) throw InputError("check_wall_degrees: at most 10^4 trials");
    WallDegreeSummary s;
    s.trials = trials;
    std::vector<std::optional<Violation>> slots(trials);
    std::vector<std::size_t> counts(trials, 0);
    parallel_trials(trials, [&](std::size_t t) {
        wall_degree_trial(random_ample_on(fan, trial_seed(seed, t)), t, counts[t], slots[t]);
    });
    for (auto c : counts) s.walls_checked += c;
    s.violations = collect(slots);
    return s;
}

WallDegreeSummary check_wall_degrees_fleet(std::size_t trials_2d, std::size_t max_rays, std::size_t products_3d,
                                 std::uint64_t seed) {
    if (max_rays < 4) throw InputError("check_wall_degrees_fleet: max_rays must be at least 4");
    WallDegreeSummary s;
    const std::size_t total = trials_2d + products_3d;
    s.trials = total;
    std::vector<std::optional<Violation>> slots(total);
    std::vector<std::size_t> counts(total, 0);
    parallel_trials(total, [&](std::size_t t) {
        const auto ts = trial_seed(seed, t);
        if (t < trials_2d) {
            const int steps = static_cast<int>(ts % (max_rays - 3));
            auto inst = random_ample_2d(ts, steps);
            wall_degree_trial(inst.divisor, t, counts[t], slots[t]);
        } else {
            auto inst = random_ample_product(ts, 3);
            wall_degree_trial(inst.divisor, t, counts[t], slots[t]);
        }
    });
    for (auto c : counts) s.walls_checked += c;
    s.violations = collect(slots);
    return s;
}

LinearSystemSpec random_system(std::uint64_t seed, std::size_t dim, std::size_t max_rays, Int max_mult) {
    std::mt19937_64 rng(seed);
    std::optional<AmpleInstance> inst;
    if (dim == 2) {
        if (max_rays < 4) throw InputError("random_system: max_rays must be at least 4");
        const int steps = std::uniform_int_distribution<int>(0, static_cast<int>(max_rays) - 4)(rng);
        inst = random_ample_2d(rng(), steps);
    } else {
        inst = random_ample_product(rng(), dim);
    }
    std::map<std::size_t, Int> mults;
    std::bernoulli_distribution marked(0.5);
    std::uniform_int_distribution<Int> m(0, max_mult);
    for (std::size_t c = 0; c < inst->fan->num_cones(); ++c)
        if (marked(rng)) mults[c] = m(rng);
    return LinearSystemSpec(inst->divisor, std::move(mults));
}

SpecialitySummary check_speciality(const std::vector<std::size_t>& dims, std::size_t trials, std::uint64_t seed,
                             Int max_mult, WitnessScope scope) {
    if (dims.empty()) throw InputError("check_speciality: no dimensions given");
    SpecialitySummary s;
    s.trials = trials;
    std::vector<std::optional<Violation>> slots(trials);
    std::vector<int> special(trials, 0), l1_checked(trials, 0), l1_bad(trials, 0), eq_bad(trials, 0);
    parallel_trials(trials, [&](std::size_t t) {
        const auto spec = random_system(trial_seed(seed, t), dims[t % dims.size()], 8, max_mult);
        const auto rep = speciality_report(spec, scope);
        std::vector<std::string> problems;
        if (rep.unwitnessed) {
            eq_bad[t] = 1;
            problems.push_back(*rep.unwitnessed);
        }
        if (rep.special) {
            special[t] = 1;
            l1_checked[t] = 1;
            if (!special_pair(spec)) {
                l1_bad[t] = 1;
                problems.push_back("no special two-point restriction");
            }
        }
        if (!problems.empty()) {
            json rep_json = io::system_to_json(spec);
            rep_json["report"] = io::report_to_json(rep);
            rep_json["problems"] = problems;
            slots[t] = Violation{t, problems.front(), rep_json};
        }
    });
    for (std::size_t t = 0; t < trials; ++t) {
        s.special += special[t];
        s.pairs_checked += l1_checked[t];
        s.pair_violations += l1_bad[t];
        s.equivalence_violations += eq_bad[t];
    }
    s.violations = collect(slots);
    return s;
}

namespace {

std::shared_ptr<const SurfaceModel> random_model(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> kind(-1, 8);
    std::uniform_int_distribution<std::size_t> r(0, 12);
    const int k = kind(rng);
    auto model = k < 0 ? SurfaceModel::p2(r(rng)) : SurfaceModel::hirzebruch(k, r(rng));
    return std::make_shared<const SurfaceModel>(model);
}

PicardClass random_class(std::mt19937_64& rng, const std::shared_ptr<const SurfaceModel>& model, Int bound) {
    std::uniform_int_distribution<Int> d(-bound, bound);
    std::vector<Int> base(model->base_rank()), m(model->r);
    for (auto& x : base) x = d(rng);
    for (auto& x : m) x = d(rng);
    return PicardClass(model, std::move(base), std::move(m));
}

}  // namespace

RRIdentitySummary check_rr_identity(std::size_t trials, std::uint64_t seed) {
    RRIdentitySummary s;
    s.trials = trials;
    std::vector<std::optional<Violation>> slots(trials);
    parallel_trials(trials, [&](std::size_t t) {
        std::mt19937_64 rng(trial_seed(seed, t));
        const auto model = random_model(rng);
        const PicardClass l = random_class(rng, model, 10);
        std::optional<PicardClass> c;
        if (t % 2 == 1) {
            // Rejection sampling of genus-0 classes with small coefficients.
            for (int attempt = 0; attempt < 20000 && !c; ++attempt) {
                auto k = random_class(rng, model, 2);
                if (genus(k) == 0) c = k;
            }
        }
        if (!c) {
            const auto cands = candidate_curves(model, {2});
            c = cands[std::uniform_int_distribution<std::size_t>(0, cands.size() - 1)(rng)];
        }
        const Int lhs = rr_virtual_dim(l);
        const Int rhs = rr_virtual_dim(l - *c) + intersect(l, *c) + 1;
        if (genus(*c) != 0 || lhs != rhs) {
            std::ostringstream os;
            os << "v(L) = " << lhs << " but v(L-C) + L.C + 1 = " << rhs;
            slots[t] = Violation{t, os.str(), {{"L", io::class_to_json(l)}, {"C", io::class_to_json(*c)}}};
        }
    });
    s.violations = collect(slots);
    return s;
}

CrossSummary check_cross_module(std::size_t trials, std::uint64_t seed, Int max_a) {
    CrossSummary s;
    s.trials = trials;
    std::vector<std::optional<Violation>> slots(trials);
    parallel_trials(trials, [&](std::size_t t) {
        std::mt19937_64 rng(trial_seed(seed, t));
        const Int a = std::uniform_int_distribution<Int>(0, max_a)(rng);
        auto fan = std::make_shared<const Fan>(hirzebruch(a));
        const auto d = random_ample_on(fan, rng());
        std::map<std::size_t, Int> mults;
        std::uniform_int_distribution<Int> m(0, 6);
        for (std::size_t c = 0; c < 4; ++c)
            if (rng() % 2) mults[c] = m(rng);
        const LinearSystemSpec spec(d, mults);
        const Int toric_v = virtual_dim(spec);
        const Int rr_v = rr_virtual_dim(toric_to_picard(spec));
        if (toric_v != rr_v) {
            std::ostringstream os;
            os << "toric virtual dimension " << toric_v << " != Riemann-Roch " << rr_v;
            slots[t] = Violation{t, os.str(), io::system_to_json(spec)};
        }
    });
    s.violations = collect(slots);
    return s;
}

MinusOneSummary explore_minus_one(std::size_t trials, std::uint64_t seed, Int max_mult) {
    MinusOneSummary s;
    s.trials = trials;
    std::vector<std::optional<Violation>> slots(trials);
    std::vector<int> agree(trials, 0);
    parallel_trials(trials, [&](std::size_t t) {
        std::mt19937_64 rng(trial_seed(seed, t));
        const int kind = std::uniform_int_distribution<int>(-1, 4)(rng);
        auto fan = std::make_shared<const Fan>(kind < 0 ? projective_space(2) : hirzebruch(kind));
        const auto d = random_ample_on(fan, rng());
        std::map<std::size_t, Int> mults;
        std::uniform_int_distribution<Int> m(0, max_mult);
        for (std::size_t c = 0; c < fan->num_cones(); ++c)
            if (rng() % 2) mults[c] = m(rng);
        const LinearSystemSpec spec(d, mults);
        const auto probe = probe_minus_one(spec);
        if (probe.agree()) {
            agree[t] = 1;
        } else {
            json rep = io::system_to_json(spec);
            rep["special"] = probe.special;
            rep["minus_one_special"] = probe.minus_one_special;
            slots[t] = Violation{t, probe.special ? "special but not (-1)-special within bounds"
                                                  : "(-1)-special but not special",
                                 rep};
        }
    });
    for (int a : agree) s.agree += static_cast<std::size_t>(a);
    s.disagreements = collect(slots);
    return s;
}

}  // namespace toric::fuzz

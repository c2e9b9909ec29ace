// toricsys: command-line front end for fans, linear systems and Picard classes.
//
// Exit codes: 0 success / non-special, 2 input error, 3 special, 4 property violation.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "toric/fuzz.hpp"
#include "toric/io.hpp"
#include "toric/picard.hpp"
#include "toric/render.hpp"

using namespace toric;
using nlohmann::json;

namespace {

enum Exit : int { kOk = 0, kInternal = 1, kInput = 2, kSpecial = 3, kViolation = 4 };

struct Options {
    std::uint64_t seed = 1;
    std::size_t trials = 100;
    bool json_out = false;
    bool unchecked = false;
    bool all_orders = false;
    bool strict_marked = false;
};

void emit(const Options& o, const json& j, const std::string& text) {
    if (o.json_out)
        std::cout << j.dump(2) << '\n';
    else
        std::cout << text;
}

void write_fan(const Fan& f, const std::string& out) {
    const json j = io::fan_to_json(f);
    if (out.empty() || out == "-")
        std::cout << j.dump(2) << '\n';
    else
        io::write_json_file(out, j);
}

Fan load_fan(const std::string& path, bool unchecked) { return io::fan_from_json(io::read_json_file(path), unchecked); }

LinearSystemSpec load_system(const std::string& path, bool unchecked) {
    const std::filesystem::path p(path);
    return io::system_from_json(io::read_json_file(p), p.parent_path(), unchecked);
}

WitnessScope scope_of(const Options& o) {
    return o.strict_marked ? WitnessScope::MarkedOnly : WitnessScope::AllFixedPoints;
}

int speciality_exit(const SpecialityReport& r) {
    if (r.unwitnessed) return kViolation;
    return r.special ? kSpecial : kOk;
}

std::string witness_lines(const SpecialityReport& r) {
    std::ostringstream os;
    for (const auto& w : r.witnesses) os << "witness: " << describe(w.wall) << "  L.C = " << w.value << '\n';
    if (r.unwitnessed) os << "diagnostic: " << *r.unwitnessed << '\n';
    return os.str();
}

int cmd_special(const Options& o, const std::string& file) {
    const auto spec = load_system(file, o.unchecked);
    const auto r = speciality_report(spec, scope_of(o));
    std::ostringstream os;
    os << "virtual dim:   " << r.virtual_dim << '\n'
       << "effective dim: " << r.effective_dim << '\n'
       << "h1:            " << r.h1 << '\n'
       << "special:       " << (r.special ? "yes" : "no") << '\n'
       << witness_lines(r);
    emit(o, io::report_to_json(r), os.str());
    return speciality_exit(r);
}

int cmd_dim(const Options& o, const std::string& file) {
    const auto spec = load_system(file, o.unchecked);
    const Int v = virtual_dim(spec), e = effective_dim(spec), h = h1(spec);
    std::ostringstream os;
    os << "v = " << v << ", eff = " << e << ", h1 = " << h << '\n';
    emit(o, {{"virtual_dim", v}, {"effective_dim", e}, {"h1", h}}, os.str());
    return h > 0 ? kSpecial : kOk;
}

int cmd_witness(const Options& o, const std::string& file) {
    const auto spec = load_system(file, o.unchecked);
    const auto r = speciality_report(spec, scope_of(o));
    json ws = json::array();
    for (const auto& w : r.witnesses) ws.push_back({{"wall", io::wall_to_json(w.wall)}, {"value", w.value}});
    std::string text = witness_lines(r);
    if (r.witnesses.empty()) text = "no wall with L.C <= -2\n" + text;
    emit(o, ws, text);
    return speciality_exit(r);
}

int print_wall_degrees(const Options& o, const fuzz::WallDegreeSummary& s) {
    json vs = json::array();
    for (const auto& v : s.violations) vs.push_back({{"trial", v.trial}, {"what", v.what}, {"reproducer", v.reproducer}});
    std::ostringstream os;
    os << (s.ok() ? "pass" : "FAIL") << ": " << s.trials << " divisor(s), " << s.walls_checked << " wall(s), "
       << s.violations.size() << " violation(s)\n";
    for (const auto& v : s.violations) os << "  trial " << v.trial << ": " << v.reproducer.dump() << '\n';
    emit(o, {{"trials", s.trials}, {"walls_checked", s.walls_checked}, {"violations", vs}, {"ok", s.ok()}}, os.str());
    return s.ok() ? kOk : kViolation;
}

int cmd_check_wall_degrees(const Options& o, const std::string& fan_file, const std::vector<Int>& alpha) {
    auto fan = std::make_shared<const Fan>(load_fan(fan_file, o.unchecked));
    if (!alpha.empty()) {
        const ToricDivisor d(fan, alpha);
        if (!is_ample(d)) throw NotAmpleError();
        fuzz::WallDegreeSummary s;
        s.trials = 1;
        s.walls_checked = walls(*fan).size();
        for (const auto& what : fuzz::wall_degree_mismatches(d))
            s.violations.push_back({0, what, {{"fan", io::fan_to_json(*fan)}, {"alpha", alpha}, {"wall", what}}});
        return print_wall_degrees(o, s);
    }
    if (o.trials > 10000) throw InputError("--trials must be at most 10000");
    return print_wall_degrees(o, fuzz::check_wall_degrees(fan, o.trials, o.seed));
}

int cmd_fuzz(const Options& o, const std::vector<std::size_t>& dims, Int max_mult) {
    for (auto d : dims)
        if (d < 2) throw InputError("--dims entries must be at least 2");
    const auto s = fuzz::check_speciality(dims, o.trials, o.seed, max_mult, scope_of(o));
    json vs = json::array();
    for (const auto& v : s.violations) vs.push_back({{"trial", v.trial}, {"what", v.what}, {"reproducer", v.reproducer}});
    std::ostringstream os;
    os << (s.ok() ? "pass" : "FAIL") << ": " << s.trials << " system(s), " << s.special << " special, "
       << s.equivalence_violations << " equivalence violation(s), " << s.pair_violations << " of "
       << s.pairs_checked << " two-point check(s) failed\n";
    for (const auto& v : s.violations) os << "  trial " << v.trial << ": " << v.reproducer.dump() << '\n';
    emit(o,
         {{"trials", s.trials},
          {"special", s.special},
          {"equivalence_violations", s.equivalence_violations},
          {"pairs_checked", s.pairs_checked},
          {"pair_violations", s.pair_violations},
          {"violations", vs},
          {"ok", s.ok()}},
         os.str());
    return s.ok() ? kOk : kViolation;
}

int cmd_reduce(const Options& o, const std::string& file, Int bound) {
    const auto c = io::class_from_json(io::read_json_file(file));
    const auto cands = candidate_curves(c.model_ptr(), {bound});
    const auto t = is_minus_one_special(c, cands);

    json steps = json::array();
    std::ostringstream os;
    os << c.model().name() << "\nstart: " << t.start.str() << "  v = " << t.v_start << '\n';
    char line[64];
    std::snprintf(line, sizeof line, "%5s  %-12s %8s\n", "step", "intersection", "v");
    os << line;
    bool flagged = false;
    for (std::size_t i = 0; i < t.steps.size(); ++i) {
        const auto& s = t.steps[i];
        std::snprintf(line, sizeof line, "%5zu  %12lld %8lld  ", i + 1, static_cast<long long>(s.intersection),
                      static_cast<long long>(s.v_after));
        os << line << "- (" << s.subtracted.str() << ")" << (s.reference_decreases ? "" : "  [reference not decreasing]")
           << '\n';
        flagged |= !s.reference_decreases;
        steps.push_back({{"subtracted", io::class_to_json(s.subtracted)},
                         {"intersection", s.intersection},
                         {"v", s.v_after},
                         {"reference_decreases", s.reference_decreases}});
    }
    os << "final: " << (t.final_class.is_zero() ? "0" : t.final_class.str()) << "  v = " << t.v_final << '\n'
       << "verdict: " << (t.minus_one_special ? "minus-one-special" : "not (-1)-special within bounds") << " (v "
       << t.v_start << " -> " << t.v_final << ")\n";
    json j = {{"start", io::class_to_json(t.start)},
              {"v_start", t.v_start},
              {"steps", steps},
              {"final", io::class_to_json(t.final_class)},
              {"v_final", t.v_final},
              {"minus_one_special", t.minus_one_special},
              {"candidates", cands.size()}};
    if (flagged) os << "note: some steps did not decrease the pairing with the reference ample class\n";

    if (o.all_orders) {
        const auto ex = explore_all_orders(c, cands, 6);
        json outs = json::array();
        os << "all orders (depth <= 6): " << ex.outcomes.size() << " outcome(s), "
           << (ex.order_sensitive ? "ORDER-SENSITIVE" : "verdict stable") << '\n';
        for (const auto& out : ex.outcomes) {
            os << "  " << (out.final_class.is_zero() ? "0" : out.final_class.str()) << "  v = " << out.v_final
               << (out.settled ? "" : "  (depth limit)") << '\n';
            outs.push_back({{"final", io::class_to_json(out.final_class)}, {"v", out.v_final}, {"settled", out.settled}});
        }
        j["all_orders"] = {{"outcomes", outs}, {"order_sensitive", ex.order_sensitive}};
    }
    emit(o, j, os.str());
    return kOk;
}

int cmd_render(const Options& o, const std::string& file, const std::string& out, int size) {
    if (size < 64 || size > 8192) throw InputError("--size must be in [64, 8192]");
    const auto spec = load_system(file, o.unchecked);
    const auto r = make_render_spec(spec, size);
    std::ofstream os(out);
    if (!os) throw InputError("cannot write " + out);
    os << render_svg(r);
    if (!os) throw InputError("write failed: " + out);
    emit(o, {{"file", out}, {"kept", r.kept.size()}, {"cut", r.cut.size()}},
         out + ": " + std::to_string(r.kept.size()) + " kept, " + std::to_string(r.cut.size()) + " cut\n");
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Fans, ample divisors and fat-point linear systems on smooth toric varieties"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    app.add_option("--seed", o.seed, "Random seed")->capture_default_str();
    app.add_option("--trials", o.trials, "Number of random trials")->capture_default_str();
    app.add_flag("--json", o.json_out, "Machine-readable output");
    app.add_flag("--unchecked", o.unchecked, "Skip fan validation");
    app.add_flag("--all-orders", o.all_orders, "reduce: explore every subtraction order (depth <= 6)");
    app.add_flag("--strict-marked", o.strict_marked, "Only count walls joining two marked points as witnesses");

    std::function<int()> run;
    std::string out;

    auto* gen = app.add_subcommand("gen", "Write a fan as JSON");
    gen->require_subcommand(1);
    gen->add_option("-o,--out", out, "Output file (default stdout)");
    auto* g_p2 = gen->add_subcommand("p2", "Projective plane");
    g_p2->callback([&] { run = [&] { write_fan(projective_space(2), out); return int(kOk); }; });
    std::size_t pn = 0;
    auto* g_pn = gen->add_subcommand("pn", "Projective space P^n");
    g_pn->add_option("n", pn)->required();
    g_pn->callback([&] { run = [&] { write_fan(projective_space(pn), out); return int(kOk); }; });
    Int a = 0;
    auto* g_fa = gen->add_subcommand("hirzebruch", "Hirzebruch surface F_a");
    g_fa->add_option("a", a)->required();
    g_fa->callback([&] { run = [&] { write_fan(hirzebruch(a), out); return int(kOk); }; });
    std::string f1, f2;
    auto* g_prod = gen->add_subcommand("product", "Product of two fan files");
    g_prod->add_option("fan1", f1)->required();
    g_prod->add_option("fan2", f2)->required();
    g_prod->callback([&] {
        run = [&] { write_fan(product(load_fan(f1, o.unchecked), load_fan(f2, o.unchecked)), out); return int(kOk); };
    });
    std::size_t cone = 0;
    auto* g_bl = gen->add_subcommand("blowup", "Blow up a fixed point (maximal cone) of a fan file");
    g_bl->add_option("fan", f1)->required();
    g_bl->add_option("cone", cone)->required();
    g_bl->callback([&] { run = [&] { write_fan(blowup_fixed_point(load_fan(f1, o.unchecked), cone), out); return int(kOk); }; });
    int steps = 3;
    auto* g_rnd = gen->add_subcommand("random2d", "Random smooth complete 2D fan (P2 or F_a plus blow-ups)");
    g_rnd->add_option("--steps", steps, "Number of blow-ups (0..12)")->capture_default_str();
    g_rnd->callback([&] { run = [&] { write_fan(random_fan_2d(o.seed, steps), out); return int(kOk); }; });

    std::string file;
    auto* sp = app.add_subcommand("special", "Speciality report of a system file");
    sp->add_option("system", file)->required();
    sp->callback([&] { run = [&] { return cmd_special(o, file); }; });
    auto* dm = app.add_subcommand("dim", "Virtual and effective dimension of a system file");
    dm->add_option("system", file)->required();
    dm->callback([&] { run = [&] { return cmd_dim(o, file); }; });
    auto* wi = app.add_subcommand("witness", "Walls with L.C <= -2");
    wi->add_option("system", file)->required();
    wi->callback([&] { run = [&] { return cmd_witness(o, file); }; });

    std::vector<Int> alpha;
    auto* l2 = app.add_subcommand("check-lemma2", "Check D.C = N - 1 on every wall for random ample divisors");
    l2->add_option("fan", file)->required();
    l2->add_option("--alpha", alpha, "Check this one divisor instead")->delimiter(',');
    l2->callback([&] { run = [&] { return cmd_check_wall_degrees(o, file, alpha); }; });

    std::vector<std::size_t> dims{2};
    Int max_mult = 6;
    auto* fz = app.add_subcommand("fuzz", "Random systems: h1 > 0 iff a wall witness exists");
    fz->add_option("--dims", dims, "Dimensions to cycle through")->delimiter(',')->capture_default_str();
    fz->add_option("--max-mult", max_mult, "Largest multiplicity")->capture_default_str()->check(CLI::Range(0, 64));
    fz->callback([&] { run = [&] { return cmd_fuzz(o, dims, max_mult); }; });

    Int bound = 3;
    auto* rd = app.add_subcommand("reduce", "(-1)-special reduction of a class file");
    rd->add_option("class", file)->required();
    rd->add_option("--bound", bound, "Candidate coefficient bound (<= 10)")->capture_default_str();
    rd->callback([&] { run = [&] { return cmd_reduce(o, file, bound); }; });

    std::string svg;
    int size = 480;
    auto* rn = app.add_subcommand("render", "SVG of the polytope with cut points circled");
    rn->add_option("system", file)->required();
    rn->add_option("out", svg)->required();
    rn->add_option("--size", size, "Image size in pixels")->capture_default_str();
    rn->callback([&] { run = [&] { return cmd_render(o, file, svg, size); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kInput;
    }
    try {
        return run();
    } catch (const NonTerminationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kViolation;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInput;
    } catch (const PreconditionError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInput;
    } catch (const OverflowError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInput;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kInternal;
    }
}

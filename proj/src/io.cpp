#include "toric/io.hpp"

#include <fstream>

namespace toric::io {

json read_json_file(const std::filesystem::path& p) {
    std::ifstream in(p);
    if (!in) throw InputError("cannot open " + p.string());
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw InputError(p.string() + ": " + e.what());
    }
}

void write_json_file(const std::filesystem::path& p, const json& j) {
    std::ofstream out(p);
    if (!out) throw InputError("cannot write " + p.string());
    out << j.dump(2) << '\n';
}

namespace {

template <class T>
T get_field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field \"") + key + "\"");
    try {
        return j.at(key).get<T>();
    } catch (const json::exception& e) {
        throw InputError(std::string("bad field \"") + key + "\": " + e.what());
    }
}

}  // namespace

Fan fan_from_json(const json& j, bool unchecked) {
    Fan f;
    f.dim = get_field<std::size_t>(j, "dim");
    for (const auto& r : get_field<std::vector<std::vector<Int>>>(j, "rays")) f.rays.emplace_back(r);
    for (const auto& c : get_field<std::vector<std::vector<std::size_t>>>(j, "cones")) f.cones.push_back(c);
    if (!unchecked) {
        auto rep = validate(f);
        if (!rep.ok()) throw InputError("fan failed validation:\n" + rep.summary());
    }
    return f;
}

json fan_to_json(const Fan& f) {
    json rays = json::array();
    for (const auto& r : f.rays) rays.push_back(std::vector<Int>(r.coords().begin(), r.coords().end()));
    json cones = json::array();
    for (const auto& c : f.cones) cones.push_back(c);
    return {{"dim", f.dim}, {"rays", rays}, {"cones", cones}};
}

LinearSystemSpec system_from_json(const json& j, const std::filesystem::path& base_dir, bool unchecked) {
    if (!j.is_object() || !j.contains("fan")) throw InputError("missing field \"fan\"");
    const json& fj = j.at("fan");
    Fan fan;
    if (fj.is_string()) {
        std::filesystem::path p = fj.get<std::string>();
        if (p.is_relative()) p = base_dir / p;
        fan = fan_from_json(read_json_file(p), unchecked);
    } else {
        fan = fan_from_json(fj, unchecked);
    }
    auto fp = std::make_shared<const Fan>(std::move(fan));
    ToricDivisor d(fp, get_field<std::vector<Int>>(j, "alpha"));
    std::map<std::size_t, Int> mults;
    if (j.contains("mults")) {
        const json& mj = j.at("mults");
        if (!mj.is_object()) throw InputError("\"mults\" must be an object {\"<cone index>\": m}");
        for (const auto& [key, val] : mj.items()) {
            std::size_t idx = 0;
            try {
                std::size_t used = 0;
                idx = std::stoul(key, &used);
                if (used != key.size()) throw std::invalid_argument(key);
            } catch (const std::exception&) {
                throw InputError("bad cone index \"" + key + "\" in mults");
            }
            if (!val.is_number_integer()) throw InputError("multiplicity for cone " + key + " is not an integer");
            mults[idx] = val.get<Int>();
        }
    }
    return LinearSystemSpec(std::move(d), std::move(mults));
}

json system_to_json(const LinearSystemSpec& spec, bool inline_fan) {
    json mults = json::object();
    for (const auto& [c, m] : spec.mults()) mults[std::to_string(c)] = m;
    json j = {{"alpha", spec.divisor().alpha()}, {"mults", mults}};
    if (inline_fan) j["fan"] = fan_to_json(spec.fan());
    return j;
}

json wall_to_json(const Wall& w) {
    return {{"facet_rays", w.facet_rays},
            {"cones", {w.cone_a, w.cone_b}},
            {"gamma", w.gamma},
            {"extra_rays", {w.extra_rays[0], w.extra_rays[1]}}};
}

json report_to_json(const SpecialityReport& r) {
    json ws = json::array();
    for (const auto& w : r.witnesses) ws.push_back({{"wall", wall_to_json(w.wall)}, {"value", w.value}});
    json j = {{"virtual_dim", r.virtual_dim},
              {"effective_dim", r.effective_dim},
              {"h1", r.h1},
              {"special", r.special},
              {"witnesses", ws}};
    if (r.unwitnessed) j["unwitnessed"] = *r.unwitnessed;
    return j;
}

PicardClass class_from_json(const json& j) {
    if (!j.is_object() || !j.contains("surface")) throw InputError("missing field \"surface\"");
    auto model = std::make_shared<SurfaceModel>();
    const json& s = j.at("surface");
    if (s.is_string() && s.get<std::string>() == "P2") {
        model->kind = SurfaceModel::Kind::P2;
    } else if (s.is_object() && s.contains("Fa") && s.at("Fa").is_number_integer() && s.at("Fa").get<Int>() >= 0) {
        model->kind = SurfaceModel::Kind::Fa;
        model->a = s.at("Fa").get<Int>();
    } else {
        throw InputError("\"surface\" must be \"P2\" or {\"Fa\": a} with a >= 0");
    }
    model->r = get_field<std::size_t>(j, "r");
    const json coeffs = get_field<json>(j, "coeffs");
    auto base_of = [&](const json& o) {
        if (model->kind == SurfaceModel::Kind::P2) return std::vector<Int>{o.value("L", Int{0})};
        return std::vector<Int>{o.value("H", Int{0}), o.value("F", Int{0})};
    };
    std::vector<Int> m = coeffs.contains("m") ? get_field<std::vector<Int>>(coeffs, "m") : std::vector<Int>(model->r, 0);
    if (j.contains("known_curves")) {
        for (const auto& kc : j.at("known_curves")) {
            KnownCurve c{base_of(kc), get_field<std::vector<std::size_t>>(kc, "points")};
            for (auto p : c.points)
                if (p >= model->r) throw InputError("known curve through unknown point " + std::to_string(p));
            model->known_curves.push_back(std::move(c));
        }
    }
    return PicardClass(std::move(model), base_of(coeffs), std::move(m));
}

json class_to_json(const PicardClass& c) {
    const auto& mod = c.model();
    json j;
    j["surface"] = mod.kind == SurfaceModel::Kind::P2 ? json("P2") : json{{"Fa", mod.a}};
    j["r"] = mod.r;
    json coeffs;
    if (mod.kind == SurfaceModel::Kind::P2) {
        coeffs["L"] = c.base()[0];
    } else {
        coeffs["H"] = c.base()[0];
        coeffs["F"] = c.base()[1];
    }
    coeffs["m"] = c.m();
    j["coeffs"] = coeffs;
    if (!mod.known_curves.empty()) {
        json kcs = json::array();
        for (const auto& kc : mod.known_curves) {
            json o = {{"points", kc.points}};
            if (mod.kind == SurfaceModel::Kind::P2) {
                o["L"] = kc.base[0];
            } else {
                o["H"] = kc.base[0];
                o["F"] = kc.base[1];
            }
            kcs.push_back(o);
        }
        j["known_curves"] = kcs;
    }
    return j;
}

}  // namespace toric::io

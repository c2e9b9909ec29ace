#pragma once

#include <filesystem>
#include <memory>
#include <nlohmann/json.hpp>

#include "toric/fan.hpp"
#include "toric/linsys.hpp"
#include "toric/picard.hpp"

namespace toric::io {

using json = nlohmann::json;

json read_json_file(const std::filesystem::path& p);
void write_json_file(const std::filesystem::path& p, const json& j);

/// {"dim": n, "rays": [[...]], "cones": [[...]]}. Validates unless `unchecked`.
Fan fan_from_json(const json& j, bool unchecked = false);
json fan_to_json(const Fan& f);

/// {"fan": <path or inline fan object>, "alpha": [...], "mults": {"<cone>": m}}.
/// Relative fan paths resolve against `base_dir`.
LinearSystemSpec system_from_json(const json& j, const std::filesystem::path& base_dir, bool unchecked = false);
json system_to_json(const LinearSystemSpec& spec, bool inline_fan = true);

json wall_to_json(const Wall& w);
json report_to_json(const SpecialityReport& r);

/// {"surface": "P2" | {"Fa": a}, "r": n, "coeffs": {"H": .., "F": .., "m": [...]}}
/// (P2 uses "L"). Optional "known_curves": [{"H":..,"F":..,"points":[...]}].
PicardClass class_from_json(const json& j);
json class_to_json(const PicardClass& c);

}  // namespace toric::io

#include <filesystem>
#include <regex>

#include "doctest.h"
#include "toric/io.hpp"
#include "toric/render.hpp"

using namespace toric;
using nlohmann::json;

namespace {

std::size_t count(const std::string& s, const std::string& needle) {
    std::size_t n = 0;
    for (auto p = s.find(needle); p != std::string::npos; p = s.find(needle, p + 1)) ++n;
    return n;
}

const json f3_fan = json::parse(R"({"dim": 2, "rays": [[1,0],[0,1],[-1,3],[0,-1]],
                                     "cones": [[0,1],[1,2],[2,3],[3,0]]})");

}  // namespace

TEST_CASE("fan JSON round trip") {
    const Fan f = io::fan_from_json(f3_fan);
    CHECK(f == hirzebruch(3));
    CHECK(io::fan_from_json(io::fan_to_json(f)) == f);
    const Fan p = product(projective_space(2), hirzebruch(1));
    CHECK(io::fan_from_json(io::fan_to_json(p)) == p);
}

TEST_CASE("invalid fans are rejected with the failed check") {
    json bad = f3_fan;
    bad["rays"][2] = {-2, 6};
    try {
        io::fan_from_json(bad);
        FAIL("expected InputError");
    } catch (const InputError& e) {
        CHECK(std::string(e.what()).find("primitive rays") != std::string::npos);
    }
    CHECK_NOTHROW(io::fan_from_json(bad, true));
    CHECK_THROWS_AS(io::fan_from_json(json::parse(R"({"dim": 2})")), InputError);
    CHECK_THROWS_AS(io::fan_from_json(json::parse(R"({"dim": 2, "rays": "x", "cones": []})")), InputError);
}

TEST_CASE("system JSON") {
    const json j = {{"fan", f3_fan}, {"alpha", {0, 0, 2, 3}}, {"mults", {{"3", 5}}}};
    const auto spec = io::system_from_json(j, ".");
    CHECK(spec.mult(3) == 5);
    CHECK(spec.mult(0) == 0);
    const auto again = io::system_from_json(io::system_to_json(spec), ".");
    CHECK(again.divisor().alpha() == spec.divisor().alpha());
    CHECK(again.mults() == spec.mults());

    json bad = j;
    bad["mults"] = {{"x", 1}};
    CHECK_THROWS_AS(io::system_from_json(bad, "."), InputError);
    bad["mults"] = {{"9", 1}};
    CHECK_THROWS_AS(io::system_from_json(bad, "."), InputError);
    bad = j;
    bad["alpha"] = {0, 0, 0, 1};
    CHECK_THROWS_AS(io::system_from_json(bad, "."), NotAmpleError);
    bad["alpha"] = {0, 0, 2};
    CHECK_THROWS_AS(io::system_from_json(bad, "."), InputError);
}

TEST_CASE("system JSON with a fan file") {
    const auto dir = std::filesystem::temp_directory_path() / "toric_io_test";
    std::filesystem::create_directories(dir);
    io::write_json_file(dir / "f3.json", f3_fan);
    const json j = {{"fan", "f3.json"}, {"alpha", {0, 0, 2, 3}}, {"mults", json::object()}};
    CHECK(io::system_from_json(j, dir).fan() == hirzebruch(3));
    CHECK_THROWS_AS(io::read_json_file(dir / "missing.json"), InputError);
    std::filesystem::remove_all(dir);
}

TEST_CASE("report JSON") {
    const auto spec = io::system_from_json({{"fan", f3_fan}, {"alpha", {0, 0, 2, 3}}, {"mults", {{"3", 5}}}}, ".");
    const json r = io::report_to_json(speciality_report(spec));
    CHECK(r["virtual_dim"] == 14);
    CHECK(r["effective_dim"] == 15);
    CHECK(r["h1"] == 1);
    CHECK(r["special"] == true);
    CHECK(r["witnesses"][0]["value"] == -2);
    CHECK_FALSE(r.contains("unwitnessed"));
}

TEST_CASE("class JSON") {
    const json j = json::parse(R"({"surface": {"Fa": 6}, "r": 11,
        "coeffs": {"H": 4, "F": 0, "m": [3,3,3,3,3,3,3,3,3,3,3]}})");
    const auto c = io::class_from_json(j);
    CHECK(rr_virtual_dim(c) == -2);
    CHECK(io::class_to_json(c) == j);
    const auto p = io::class_from_json(json::parse(R"({"surface": "P2", "r": 2, "coeffs": {"L": 2, "m": [1, 1]},
        "known_curves": [{"L": 1, "points": [0, 1]}]})"));
    CHECK(p.model().known_curves.size() == 1);
    CHECK(io::class_from_json(io::class_to_json(p)) == p);
    CHECK_THROWS_AS(io::class_from_json(json::parse(R"({"surface": "P3", "r": 0, "coeffs": {}})")), InputError);
    CHECK_THROWS_AS(io::class_from_json(json::parse(R"({"surface": "P2", "r": 2, "coeffs": {"L": 1, "m": [1]}})")),
                    InputError);
}

TEST_CASE("render |2F + 3H - 5 p4| on F_3") {
    const auto spec = io::system_from_json({{"fan", f3_fan}, {"alpha", {0, 0, 2, 3}}, {"mults", {{"3", 5}}}}, ".");
    const auto r = make_render_spec(spec);
    CHECK(r.cut.size() == 14);
    CHECK(r.kept.size() == 16);
    CHECK(r.edges.size() == 4);
    REQUIRE(r.hyperplanes.size() == 1);
    const std::string svg = render_svg(r);
    CHECK(count(svg, "class=\"cut\"") == 14);
    CHECK(count(svg, "class=\"kept\"") == 16);
    CHECK(count(svg, "class=\"edge\"") == 4);
    CHECK(count(svg, "class=\"hyperplane\"") == 1);
    CHECK(svg.rfind("<svg", 0) == 0);
    CHECK(render_svg(make_render_spec(spec)) == svg);
}

TEST_CASE("render |2F + 3H - 2 p1 - 3 p4| counts the shared point once") {
    const auto spec =
        io::system_from_json({{"fan", f3_fan}, {"alpha", {0, 0, 2, 3}}, {"mults", {{"0", 2}, {"3", 3}}}}, ".");
    const auto r = make_render_spec(spec);
    CHECK(r.cut.size() == 8);
    CHECK(count(render_svg(r), "class=\"cut\"") == 8);
    CHECK(r.hyperplanes.size() == 2);
}

TEST_CASE("render 3D as slices") {
    const auto inst = random_ample_product(4, 3);
    const LinearSystemSpec spec(inst.divisor, {{0, 1}});
    const std::string svg = render_svg(make_render_spec(spec));
    CHECK(svg.find("slice") != std::string::npos);
    CHECK(count(svg, "class=\"cut\"") == 0);
}

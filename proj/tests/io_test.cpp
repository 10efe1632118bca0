#include "doctest.h"

#include <cmath>
#include <filesystem>
#include <limits>
#include <regex>
#include <stdexcept>

#include "json.hpp"
#include "spiralcover/baselines.hpp"
#include "spiralcover/bench.hpp"
#include "spiralcover/io.hpp"
#include "spiralcover/spiral.hpp"

using namespace spiralcover;
using nlohmann::json;

namespace {

std::size_t occurrences(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

// Number of segments in the placement path.
std::size_t path_segments(const std::string& svg) {
  const std::regex re("<polyline class=\"path\"[^>]* points=\"([^\"]*)\"");
  std::smatch m;
  if (!std::regex_search(svg, m, re)) return 0;
  const std::string pts = m[1];
  return static_cast<std::size_t>(std::count(pts.begin(), pts.end(), ' '));
}

void check_svg_counts(const Instance& inst, const Solution& sol) {
  const std::string svg = render_svg(inst, sol);
  CHECK(occurrences(svg, "<polygon class=\"gt\"") == inst.size());
  CHECK(occurrences(svg, "<rect class=\"mbs\"") == sol.size());
  CHECK(occurrences(svg, "<circle class=\"coverage\"") == sol.size());
  CHECK(path_segments(svg) == sol.size() - 1);
  CHECK(occurrences(svg, "<polyline") == (sol.size() >= 2 ? 1u : 0u));
}

}  // namespace

TEST_CASE("round_sig12") {
  CHECK(round_sig12(0.1) == 0.1);
  CHECK(round_sig12(1.0 / 3.0) == 0.333333333333);
  CHECK(round_sig12(round_sig12(M_PI)) == round_sig12(M_PI));
}

TEST_CASE("instance round-trip") {
  Instance inst = generate_topology(200, std::sqrt(10.0), 3);
  inst.radius = 0.5;
  for (Point& p : inst.points) p = {round_sig12(p.x), round_sig12(p.y)};
  inst.region_side = round_sig12(*inst.region_side);

  const json doc = instance_to_json(inst);
  const Instance back = parse_instance(json::parse(doc.dump()));
  CHECK(back.points == inst.points);
  CHECK(back.radius == inst.radius);
  CHECK(back.region_side == inst.region_side);
  CHECK(instance_to_json(back).dump() == doc.dump());
}

TEST_CASE("instance round-trip without region side") {
  Instance inst;
  inst.points = {{0.25, -1.5}, {1e-3, 12345.678}};
  inst.radius = 2.0;
  const Instance back = parse_instance(instance_to_json(inst));
  CHECK(back.points == inst.points);
  CHECK_FALSE(back.region_side.has_value());
}

TEST_CASE("instance schema errors") {
  const json ok = json::parse(R"({"radius": 1, "points": [[0, 0], [1, 2]]})");
  CHECK_NOTHROW(parse_instance(ok));
  CHECK_THROWS_AS(parse_instance(json::parse(R"({"radius": 1, "points": [[0, 0]], "extra": 3})")), SchemaError);
  CHECK_THROWS_AS(parse_instance(json::parse(R"({"points": [[0, 0]]})")), SchemaError);
  CHECK_THROWS_AS(parse_instance(json::parse(R"({"radius": 0, "points": [[0, 0]]})")), SchemaError);
  CHECK_THROWS_AS(parse_instance(json::parse(R"({"radius": -2, "points": [[0, 0]]})")), SchemaError);
  CHECK_THROWS_AS(parse_instance(json::parse(R"({"radius": "1", "points": [[0, 0]]})")), SchemaError);
  CHECK_THROWS_AS(parse_instance(json::parse(R"({"radius": 1, "points": []})")), SchemaError);
  CHECK_THROWS_AS(parse_instance(json::parse(R"({"radius": 1, "points": [[0, 0, 0]]})")), SchemaError);
  CHECK_THROWS_AS(parse_instance(json::parse(R"({"radius": 1, "points": [[0, "a"]]})")), SchemaError);
  json inf_point = json::parse(R"({"radius": 1, "points": [[0, 0]]})");
  inf_point["points"][0][1] = std::numeric_limits<double>::infinity();
  CHECK_THROWS_AS(parse_instance(inf_point), SchemaError);
  CHECK_THROWS_AS(parse_instance(json::parse(R"({"radius": 1, "region_side": -1, "points": [[0, 0]]})")),
                  SchemaError);
  CHECK_THROWS_AS(parse_instance(json::parse(R"([1, 2])")), SchemaError);
}

TEST_CASE("radius override") {
  const json no_radius = json::parse(R"({"points": [[0, 0]]})");
  CHECK(parse_instance(no_radius, 0.7).radius == 0.7);
  const json with_radius = json::parse(R"({"radius": 1, "points": [[0, 0]]})");
  CHECK(parse_instance(with_radius, 0.7).radius == 0.7);
  CHECK_THROWS_AS(parse_instance(no_radius, -1.0), SchemaError);
}

TEST_CASE("reading files") {
  const auto dir = std::filesystem::temp_directory_path() / "spiralcover_io_test";
  std::filesystem::create_directories(dir);
  CHECK_THROWS_AS(read_instance_file(dir / "missing.json"), IoError);
  write_text_file(dir / "bad.json", "{ not json");
  CHECK_THROWS_AS(read_instance_file(dir / "bad.json"), SchemaError);
  write_text_file(dir / "ok.json", R"({"radius": 1, "points": [[0, 0]]})");
  CHECK(read_instance_file(dir / "ok.json").size() == 1);
  CHECK_THROWS_AS(write_text_file(dir / "no" / "such" / "dir.txt", "x"), IoError);
  std::filesystem::remove_all(dir);
}

TEST_CASE("solution document") {
  Instance inst = generate_topology(30, 2.0, 4);
  inst.radius = 0.5;
  const Solution sol = solve_spiral(inst, 4, true);
  const json doc = solution_to_json(inst, sol);
  CHECK(doc["algorithm"] == "spiral");
  CHECK(doc["seed"] == 4);
  CHECK(doc["m"] == sol.size());
  CHECK(doc["centers"].size() == sol.size());
  CHECK(doc["newly_covered"].size() == sol.size());
  CHECK(doc["feasible"] == true);
  CHECK(doc["runtime_ms"].is_number());

  Solution broken = sol;
  broken.centers.pop_back();
  broken.newly_covered.pop_back();
  CHECK_THROWS_AS(solution_to_json(inst, broken), std::logic_error);
}

TEST_CASE("SVG: one GT, one center") {
  Instance inst;
  inst.points = {{0.5, 0.5}};
  inst.radius = 0.2;
  const Solution sol = solve_spiral(inst, 0, true);
  const std::string svg = render_svg(inst, sol);
  CHECK(occurrences(svg, "<polygon") == 1);
  CHECK(occurrences(svg, "<rect") == 1);
  CHECK(occurrences(svg, "<circle") == 1);
  CHECK(occurrences(svg, "<polyline") == 0);
}

TEST_CASE("SVG: two centers give one path segment") {
  Instance inst;
  inst.points = {{0, 0}, {3, 0}};
  inst.radius = 1.0;
  const Solution sol = solve_spiral(inst, 0, true);
  REQUIRE(sol.size() == 2);
  CHECK(path_segments(render_svg(inst, sol)) == 1);
}

TEST_CASE("SVG: element counts and determinism") {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    Instance inst = generate_topology(80, std::sqrt(10.0), seed);
    inst.radius = 0.5;
    const Solution spiral = solve_spiral(inst, seed, false);
    check_svg_counts(inst, spiral);
    check_svg_counts(inst, solve_strip(inst, {}));
    CHECK(render_svg(inst, spiral) == render_svg(inst, spiral));
  }
}

TEST_CASE("SVG: viewBox covers the region with margin") {
  Instance inst = generate_topology(10, 2.0, 1);
  inst.radius = 0.1;
  const std::string svg = render_svg(inst, solve_spiral(inst, 0, true));
  const std::regex re("viewBox=\"([^ ]+) ([^ ]+) ([^ ]+) ([^\"]+)\"");
  std::smatch m;
  REQUIRE(std::regex_search(svg, m, re));
  const double x = std::stod(m[1]), y = std::stod(m[2]), w = std::stod(m[3]), h = std::stod(m[4]);
  CHECK(x <= -0.05 * 2.0 + 1e-9);
  CHECK(y <= -0.05 * 2.0 + 1e-9);
  CHECK(x + w >= 2.0 * 1.05 - 1e-9);
  CHECK(y + h >= 2.0 * 1.05 - 1e-9);
}

#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>

#include "json.hpp"
#include "spiralcover/instance.hpp"

namespace spiralcover {

/// Malformed or out-of-contract instance/solution document.
class SchemaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// File could not be read or written.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Rounds to 12 significant digits, the precision used for every
/// serialized coordinate.
double round_sig12(double v);

/// {"radius": r, "region_side": D?, "points": [[x, y], ...]}. Unknown
/// keys are rejected. `radius_override` replaces the file radius and
/// makes the key optional.
Instance parse_instance(const nlohmann::json& doc, std::optional<double> radius_override = {});
nlohmann::json instance_to_json(const Instance& inst);

Instance read_instance_file(const std::filesystem::path& path,
                            std::optional<double> radius_override = {});
void write_text_file(const std::filesystem::path& path, const std::string& text);

/// Solution document. Throws std::logic_error if the solution does not
/// pass check_solution, so every emitted file is feasible.
nlohmann::json solution_to_json(const Instance& inst, const Solution& sol);

/// SVG 1.1 drawing: GTs as triangles, centers as squares, dashed coverage
/// circles, and a dash-dot arrowed polyline through the centers in
/// placement order. GTs share the color of the center that first covered them.
std::string render_svg(const Instance& inst, const Solution& sol);

}  // namespace spiralcover

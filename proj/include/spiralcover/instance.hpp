#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "spiralcover/geometry.hpp"

namespace spiralcover {

/// K ground terminals to be covered by disks of a common radius.
struct Instance {
  std::vector<Point> points;
  double radius = 0.0;
  /// Side of the square the points were drawn from; metadata only.
  std::optional<double> region_side;

  std::size_t size() const { return points.size(); }

  /// Throws std::invalid_argument unless K >= 1, radius > 0 and every
  /// coordinate is finite.
  void validate() const;
};

/// Output shared by every solver. Centers are kept in placement order and
/// newly_covered[m] lists the GT indices first covered by center m.
struct Solution {
  std::vector<Point> centers;
  std::vector<std::vector<std::size_t>> newly_covered;
  std::string algorithm;
  std::uint64_t seed = 0;
  std::chrono::nanoseconds runtime{0};

  std::size_t size() const { return centers.size(); }
  double runtime_ms() const { return std::chrono::duration<double, std::milli>(runtime).count(); }
};

/// Every GT lies within the radius (with tolerance) of some center.
bool is_feasible(const Instance& inst, const Solution& sol);

/// Full structural check: feasibility plus disjoint, non-empty
/// newly_covered sets whose union is every GT and whose members are
/// within the radius of their own center. Returns a diagnostic on failure.
std::optional<std::string> check_solution(const Instance& inst, const Solution& sol);

}  // namespace spiralcover

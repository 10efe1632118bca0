#include "spiralcover/instance.hpp"

#include <cmath>
#include <stdexcept>

namespace spiralcover {

void Instance::validate() const {
  if (points.empty()) throw std::invalid_argument("instance has no points");
  if (!(radius > 0.0) || !std::isfinite(radius))
    throw std::invalid_argument("instance radius must be positive and finite");
  for (const Point& p : points) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y))
      throw std::invalid_argument("instance point has a non-finite coordinate");
  }
}

bool is_feasible(const Instance& inst, const Solution& sol) {
  for (const Point& p : inst.points) {
    bool hit = false;
    for (const Point& c : sol.centers) {
      if (within(c, p, inst.radius)) {
        hit = true;
        break;
      }
    }
    if (!hit) return false;
  }
  return true;
}

std::optional<std::string> check_solution(const Instance& inst, const Solution& sol) {
  if (sol.centers.size() != sol.newly_covered.size())
    return "centers and newly_covered differ in length";
  std::vector<bool> seen(inst.size(), false);
  for (std::size_t m = 0; m < sol.size(); ++m) {
    if (sol.newly_covered[m].empty()) return "center " + std::to_string(m) + " covers nothing new";
    for (std::size_t k : sol.newly_covered[m]) {
      if (k >= inst.size()) return "GT index " + std::to_string(k) + " out of range";
      if (seen[k]) return "GT " + std::to_string(k) + " appears in two newly_covered sets";
      seen[k] = true;
      if (!within(sol.centers[m], inst.points[k], inst.radius))
        return "GT " + std::to_string(k) + " is outside the disk of center " + std::to_string(m);
    }
  }
  for (std::size_t k = 0; k < inst.size(); ++k) {
    if (!seen[k]) return "GT " + std::to_string(k) + " is not covered";
  }
  if (!is_feasible(inst, sol)) return "solution is infeasible";
  return std::nullopt;
}

}  // namespace spiralcover

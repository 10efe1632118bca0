#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "spiralcover/geometry.hpp"
#include "spiralcover/instance.hpp"

namespace spiralcover {

/// Raised when local_cover is called with inputs that violate its
/// contract. Distinct from std::invalid_argument so callers can tell a
/// programming error from a bad instance.
class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct LocalCoverResult {
  Point center;
  /// Final prioritized set: the input prioritized GTs plus every GT
  /// admitted from the secondary set, in admission order.
  std::vector<std::size_t> covered;
};

/// Greedy refinement of a disk location. Starting from `start`, which
/// must already cover every GT in `prio`, repeatedly
///   - drops secondary GTs farther than 2r from some prioritized GT,
///   - admits secondary GTs already within r of the current center,
///   - tries the remaining secondary GT nearest the center and keeps it
///     only if the 1-center of the enlarged set still has radius <= r,
///     moving the center to that 1-center.
/// Stops at the first rejected candidate or when the secondary set runs dry.
LocalCoverResult local_cover(Point start, std::vector<std::size_t> prio,
                             std::vector<std::size_t> sec, const Instance& inst);

/// One placement of the spiral solver, recorded for inspection.
struct SpiralStep {
  std::size_t k0 = 0;
  /// Boundary GTs of the uncovered set in counterclockwise order.
  std::vector<std::size_t> boundary;
  /// Boundary GTs secured by the first refinement phase.
  std::vector<std::size_t> boundary_covered;
  std::vector<std::size_t> newly_covered;
};

/// Sequential placement along the shrinking hull of the uncovered GTs.
/// With deterministic_start the first anchor is the bottom-most then
/// left-most boundary GT; otherwise it is drawn uniformly from the
/// boundary using `seed`.
Solution solve_spiral(const Instance& inst, std::uint64_t seed, bool deterministic_start,
                      std::vector<SpiralStep>* trace = nullptr);

}  // namespace spiralcover

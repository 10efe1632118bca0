#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "spiralcover/instance.hpp"
#include "spiralcover/parallel.hpp"
#include "spiralcover/rng.hpp"

namespace spiralcover {

/// How each strip is covered.
///   sweep:   grow a disk over the strip's GTs in x order while their
///            1-center radius stays <= r, then place it at that 1-center.
///   midline: center each disk on the strip midline, pushed right as far
///            as the leftmost uncovered GT allows.
enum class StripRule { sweep, midline };

/// Seeding of Lloyd's iterations: uniform distinct GTs (Forgy) or
/// D^2-weighted k-means++.
enum class KmeansInit { plus_plus, forgy };

struct TrialConfig {
  std::size_t trials = 100;
  std::uint64_t seed = 0;
  std::size_t max_kmeans_iters = 100;
  /// Strip height as a multiple of the radius.
  double strip_height_factor = 2.0;
  StripRule strip_rule = StripRule::sweep;
  KmeansInit kmeans_init = KmeansInit::plus_plus;
  Execution execution = Execution::parallel;

  void validate() const;
};

/// A disk and the GTs it newly covers.
struct Placement {
  Point center;
  std::vector<std::size_t> covered;
};

Solution to_solution(std::vector<Placement> placements, const char* algorithm, std::uint64_t seed);

// ---- strip cover --------------------------------------------------------

/// Covers `members` left to right with disks centered on the line
/// y = y_mid. Each disk is pushed as far right as the leftmost uncovered
/// member allows.
std::vector<Placement> cover_strip_midline(std::span<const Point> points,
                                           std::span<const std::size_t> members, double y_mid,
                                           double radius);

/// Covers `members` left to right: starting from the leftmost uncovered
/// GT, GTs are taken in x order while the 1-center of the batch fits in
/// radius r; the disk goes to that 1-center.
std::vector<Placement> cover_strip_sweep(std::span<const Point> points,
                                         std::span<const std::size_t> members, double radius);

Solution solve_strip(const Instance& inst, const TrialConfig& cfg);

// ---- k-means with bisection --------------------------------------------

/// Lloyd's iterations from p distinct GT positions drawn from `rng`
/// according to `init`.
/// Returns the clusters re-centered on their 1-centers when every
/// cluster fits in a radius-r disk, nothing otherwise. Empty clusters
/// are dropped.
std::optional<std::vector<Placement>> kmeans_cover(const Instance& inst, std::size_t p,
                                                   std::size_t max_iters, Rng& rng,
                                                   KmeansInit init = KmeansInit::plus_plus);

/// One randomized trial: bisection over p in [1, K].
std::vector<Placement> kmeans_trial(const Instance& inst, const TrialConfig& cfg,
                                    std::size_t trial);

Solution solve_kmeans(const Instance& inst, const TrialConfig& cfg);

// ---- random placement ---------------------------------------------------

std::vector<Placement> random_trial(const Instance& inst, const TrialConfig& cfg,
                                    std::size_t trial);

Solution solve_random(const Instance& inst, const TrialConfig& cfg);

/// Seed of trial `trial` under `cfg`; shared by every stochastic baseline.
std::uint64_t trial_seed(const TrialConfig& cfg, std::size_t trial);

}  // namespace spiralcover

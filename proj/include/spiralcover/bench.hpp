#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "spiralcover/baselines.hpp"
#include "spiralcover/instance.hpp"
#include "spiralcover/parallel.hpp"

namespace spiralcover {

enum class Algorithm { spiral, strip, kmeans, random, oracle };

std::string_view to_string(Algorithm a);
/// Throws std::invalid_argument for an unknown label.
Algorithm parse_algorithm(std::string_view label);

/// k points i.i.d. uniform on [0, side]^2, x then y for each point in
/// turn, drawn from Rng(seed). The radius is left at zero.
Instance generate_topology(std::size_t k, double side, std::uint64_t seed);

/// Free-space link budget of a UAV hovering at a fixed altitude.
struct LinkBudget {
  double altitude_km = 0.0;
  /// Transmit power over noise power.
  double transmit_power_over_noise = 0.0;
  /// Channel power gain at 1 km.
  double reference_gain = 0.0;
  double snr_min = 0.0;
};

/// Ground-projected range at which the received SNR under the
/// beta0 / d^2 gain still meets snr_min. Throws std::domain_error when the
/// maximum slant range is shorter than the altitude.
double coverage_radius(const LinkBudget& lb);

struct Campaign {
  std::size_t k = 80;
  double side = 1.0;
  std::vector<double> ratios;
  std::size_t topologies = 5;
  std::uint64_t seed = 1;
  std::vector<Algorithm> algorithms;
  TrialConfig trials;
  bool spiral_deterministic_start = false;
  std::uint64_t oracle_node_limit = 1'000'000;
  Execution execution = Execution::parallel;

  void validate() const;
};

/// One solve. `m` is empty when the exact oracle ran out of budget.
struct BenchRow {
  Algorithm algorithm = Algorithm::spiral;
  std::size_t k = 0;
  double ratio = 0.0;
  std::uint64_t topology_seed = 0;
  std::optional<std::size_t> m;
  double runtime_ms = 0.0;
};

/// Mean over the topologies of one (algorithm, ratio) pair. mean_m is
/// empty if any of its rows is.
struct BenchCell {
  Algorithm algorithm = Algorithm::spiral;
  double ratio = 0.0;
  std::optional<double> mean_m;
  double mean_runtime_ms = 0.0;
  std::size_t rows = 0;
};

struct BenchReport {
  std::string prng;
  std::size_t k = 0;
  double side = 0.0;
  std::vector<double> ratios;
  std::vector<Algorithm> algorithms;
  std::vector<BenchRow> rows;
  std::vector<BenchCell> cells;

  const BenchCell& cell(Algorithm a, double ratio) const;
};

struct SolveOptions {
  std::uint64_t seed = 0;
  bool deterministic_start = false;
  TrialConfig trials;
  std::uint64_t oracle_node_limit = 10'000'000;
};

/// Dispatches to the named solver.
Solution run_algorithm(Algorithm a, const Instance& inst, const SolveOptions& opts);

/// Runs every (ratio, topology, algorithm) cell, checks each solution,
/// and aggregates. Topology t uses seed c.seed + t at every ratio; the
/// stochastic baselines draw their trials from that topology seed.
BenchReport run_campaign(const Campaign& c);

void write_raw_csv(std::ostream& os, const BenchReport& report);
void write_aggregate_csv(std::ostream& os, const BenchReport& report);
std::string report_to_json(const BenchReport& report);

}  // namespace spiralcover

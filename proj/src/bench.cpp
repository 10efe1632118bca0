#include "spiralcover/bench.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

#include "json.hpp"
#include "spiralcover/exact.hpp"
#include "spiralcover/rng.hpp"
#include "spiralcover/spiral.hpp"

namespace spiralcover {

std::string_view to_string(Algorithm a) {
  switch (a) {
    case Algorithm::spiral: return "spiral";
    case Algorithm::strip: return "strip";
    case Algorithm::kmeans: return "kmeans";
    case Algorithm::random: return "random";
    case Algorithm::oracle: return "oracle";
  }
  return "?";
}

Algorithm parse_algorithm(std::string_view label) {
  for (Algorithm a : {Algorithm::spiral, Algorithm::strip, Algorithm::kmeans, Algorithm::random,
                      Algorithm::oracle}) {
    if (to_string(a) == label) return a;
  }
  throw std::invalid_argument("unknown algorithm '" + std::string(label) + "'");
}

Instance generate_topology(std::size_t k, double side, std::uint64_t seed) {
  if (k < 1) throw std::invalid_argument("generate_topology: k must be at least 1");
  if (!(side > 0.0) || !std::isfinite(side))
    throw std::invalid_argument("generate_topology: side must be positive");
  Rng rng(seed);
  Instance inst;
  inst.region_side = side;
  inst.points.reserve(k);
  for (std::size_t i = 0; i < k; ++i) {
    const double x = rng.uniform() * side;
    const double y = rng.uniform() * side;
    inst.points.push_back({x, y});
  }
  return inst;
}

double coverage_radius(const LinkBudget& lb) {
  if (!(lb.altitude_km > 0.0 && lb.transmit_power_over_noise > 0.0 && lb.reference_gain > 0.0 &&
        lb.snr_min > 0.0))
    throw std::domain_error("link budget terms must be positive");
  const double slant_sq = lb.transmit_power_over_noise * lb.reference_gain / lb.snr_min;
  const double h_sq = lb.altitude_km * lb.altitude_km;
  if (slant_sq < h_sq) throw std::domain_error("maximum slant range is below the altitude");
  return std::sqrt(slant_sq - h_sq);
}

void Campaign::validate() const {
  if (k < 1) throw std::invalid_argument("campaign: k must be at least 1");
  if (!(side > 0.0)) throw std::invalid_argument("campaign: side must be positive");
  if (ratios.empty()) throw std::invalid_argument("campaign: no ratios");
  for (double q : ratios) {
    if (!(q > 0.0) || !std::isfinite(q)) throw std::invalid_argument("campaign: ratios must be positive");
  }
  if (topologies < 1) throw std::invalid_argument("campaign: topologies must be at least 1");
  if (algorithms.empty()) throw std::invalid_argument("campaign: no algorithms");
  trials.validate();
}

const BenchCell& BenchReport::cell(Algorithm a, double ratio) const {
  for (const auto& c : cells) {
    if (c.algorithm == a && c.ratio == ratio) return c;
  }
  throw std::out_of_range("no bench cell for " + std::string(to_string(a)));
}

Solution run_algorithm(Algorithm a, const Instance& inst, const SolveOptions& opts) {
  switch (a) {
    case Algorithm::spiral: return solve_spiral(inst, opts.seed, opts.deterministic_start);
    case Algorithm::strip: return solve_strip(inst, opts.trials);
    case Algorithm::kmeans: return solve_kmeans(inst, opts.trials);
    case Algorithm::random: return solve_random(inst, opts.trials);
    case Algorithm::oracle: {
      MinCoverOptions mc;
      mc.node_limit = opts.oracle_node_limit;
      Solution s = min_cover(inst, mc);
      s.seed = opts.seed;
      return s;
    }
  }
  throw std::invalid_argument("unknown algorithm");
}

BenchReport run_campaign(const Campaign& c) {
  c.validate();
  const std::size_t n_ratio = c.ratios.size();
  const std::size_t n_topo = c.topologies;
  const std::size_t n_algo = c.algorithms.size();

  std::vector<Instance> topologies;
  for (std::size_t t = 0; t < n_topo; ++t) topologies.push_back(generate_topology(c.k, c.side, c.seed + t));

  std::vector<BenchRow> rows(n_ratio * n_topo * n_algo);
  auto run_cell = [&](std::size_t job) {
    const std::size_t a = job % n_algo;
    const std::size_t t = (job / n_algo) % n_topo;
    const std::size_t q = job / (n_algo * n_topo);

    Instance inst = topologies[t];
    inst.radius = c.side / c.ratios[q];
    const std::uint64_t topo_seed = c.seed + t;

    SolveOptions opts;
    opts.seed = topo_seed;
    opts.deterministic_start = c.spiral_deterministic_start;
    opts.trials = c.trials;
    opts.trials.seed = topo_seed;
    // Cells are the unit of parallelism; trials inside a cell run serially.
    if (c.execution == Execution::parallel) opts.trials.execution = Execution::serial;
    opts.oracle_node_limit = c.oracle_node_limit;

    BenchRow row{c.algorithms[a], c.k, c.ratios[q], topo_seed, std::nullopt, 0.0};
    try {
      const Solution sol = run_algorithm(c.algorithms[a], inst, opts);
      if (auto err = check_solution(inst, sol))
        throw std::logic_error(std::string(to_string(c.algorithms[a])) + " produced an invalid solution: " + *err);
      row.m = sol.size();
      row.runtime_ms = sol.runtime_ms();
    } catch (const BudgetExceeded&) {
      row.m.reset();
    }
    rows[job] = row;
  };

  const auto jobs = static_cast<long>(rows.size());
  if (c.execution == Execution::parallel) {
    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
    for (long j = 0; j < jobs; ++j) {
      try {
        run_cell(static_cast<std::size_t>(j));
      } catch (...) {
#pragma omp critical
        if (!failure) failure = std::current_exception();
      }
    }
    if (failure) std::rethrow_exception(failure);
  } else {
    for (long j = 0; j < jobs; ++j) run_cell(static_cast<std::size_t>(j));
  }

  BenchReport report;
  report.prng = std::string(Rng::kName);
  report.k = c.k;
  report.side = c.side;
  report.ratios = c.ratios;
  report.algorithms = c.algorithms;
  for (std::size_t q = 0; q < n_ratio; ++q) {
    for (std::size_t a = 0; a < n_algo; ++a) {
      BenchCell cell{c.algorithms[a], c.ratios[q], 0.0, 0.0, 0};
      double sum_m = 0.0;
      for (std::size_t t = 0; t < n_topo; ++t) {
        const BenchRow& row = rows[(q * n_topo + t) * n_algo + a];
        ++cell.rows;
        cell.mean_runtime_ms += row.runtime_ms;
        if (row.m && cell.mean_m) sum_m += static_cast<double>(*row.m);
        else cell.mean_m.reset();
      }
      if (cell.mean_m) cell.mean_m = sum_m / static_cast<double>(n_topo);
      cell.mean_runtime_ms /= static_cast<double>(n_topo);
      report.cells.push_back(cell);
    }
  }
  report.rows = std::move(rows);
  return report;
}

namespace {

std::string num(double v, const char* fmt = "%.6g") {
  char buf[64];
  std::snprintf(buf, sizeof buf, fmt, v);
  return buf;
}

}  // namespace

void write_raw_csv(std::ostream& os, const BenchReport& report) {
  os << "algorithm,k,ratio,topology_seed,M,runtime_ms\n";
  for (const auto& row : report.rows) {
    os << to_string(row.algorithm) << ',' << row.k << ',' << num(row.ratio) << ','
       << row.topology_seed << ',' << (row.m ? std::to_string(*row.m) : "-") << ','
       << num(row.runtime_ms, "%.3f") << '\n';
  }
}

void write_aggregate_csv(std::ostream& os, const BenchReport& report) {
  os << "algorithm,k,metric";
  for (double q : report.ratios) os << ',' << num(q);
  os << '\n';
  for (Algorithm a : report.algorithms) {
    os << to_string(a) << ',' << report.k << ",M";
    for (double q : report.ratios) {
      const auto& cell = report.cell(a, q);
      os << ',' << (cell.mean_m ? num(*cell.mean_m, "%.2f") : "-");
    }
    os << '\n' << to_string(a) << ',' << report.k << ",runtime_ms";
    for (double q : report.ratios) {
      const auto& cell = report.cell(a, q);
      os << ',' << (cell.mean_m ? num(cell.mean_runtime_ms, "%.3f") : "-");
    }
    os << '\n';
  }
}

std::string report_to_json(const BenchReport& report) {
  using nlohmann::json;
  json raw = json::array();
  for (const auto& row : report.rows) {
    raw.push_back({{"algorithm", to_string(row.algorithm)},
                   {"k", row.k},
                   {"ratio", row.ratio},
                   {"topology_seed", row.topology_seed},
                   {"M", row.m ? json(*row.m) : json(nullptr)},
                   {"runtime_ms", row.runtime_ms}});
  }
  json agg = json::array();
  for (const auto& cell : report.cells) {
    agg.push_back({{"algorithm", to_string(cell.algorithm)},
                   {"k", report.k},
                   {"ratio", cell.ratio},
                   {"mean_M", cell.mean_m ? json(*cell.mean_m) : json(nullptr)},
                   {"mean_runtime_ms", cell.mean_runtime_ms},
                   {"topologies", cell.rows}});
  }
  json doc{{"prng", report.prng}, {"k", report.k}, {"side", report.side},
           {"raw", raw},          {"aggregate", agg}};
  return doc.dump(2) + "\n";
}

}  // namespace spiralcover

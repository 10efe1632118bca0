#include "spiralcover/baselines.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <stdexcept>

namespace spiralcover {

void TrialConfig::validate() const {
  if (trials < 1) throw std::invalid_argument("trials must be at least 1");
  if (!(strip_height_factor > 0.0 && strip_height_factor <= 2.0))
    throw std::invalid_argument("strip_height_factor must lie in (0, 2]");
}

std::uint64_t trial_seed(const TrialConfig& cfg, std::size_t trial) {
  return mix_seed(cfg.seed, trial);
}

Solution to_solution(std::vector<Placement> placements, const char* algorithm, std::uint64_t seed) {
  Solution sol;
  sol.algorithm = algorithm;
  sol.seed = seed;
  for (auto& pl : placements) {
    std::sort(pl.covered.begin(), pl.covered.end());
    sol.centers.push_back(pl.center);
    sol.newly_covered.push_back(std::move(pl.covered));
  }
  return sol;
}

namespace {

template <class Clock = std::chrono::steady_clock>
std::chrono::nanoseconds since(typename Clock::time_point t0) {
  return std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - t0);
}

// Runs every trial and keeps the one with the fewest disks; ties go to
// the lowest trial index, so the serial and OpenMP paths agree.
template <class TrialFn>
std::vector<Placement> best_of_trials(std::size_t trials, Execution exec, TrialFn&& run) {
  std::vector<std::vector<Placement>> results(trials);
  if (exec == Execution::parallel) {
    const auto n = static_cast<long>(trials);
#pragma omp parallel for schedule(dynamic)
    for (long t = 0; t < n; ++t) results[t] = run(static_cast<std::size_t>(t));
  } else {
    for (std::size_t t = 0; t < trials; ++t) results[t] = run(t);
  }
  std::size_t best = 0;
  for (std::size_t t = 1; t < trials; ++t) {
    if (results[t].size() < results[best].size()) best = t;
  }
  return std::move(results[best]);
}

}  // namespace

// ---- strip cover --------------------------------------------------------

namespace {

std::vector<std::size_t> x_order(std::span<const Point> points, std::span<const std::size_t> members) {
  std::vector<std::size_t> order(members.begin(), members.end());
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const Point& p = points[a];
    const Point& q = points[b];
    if (p.x != q.x) return p.x < q.x;
    if (p.y != q.y) return p.y < q.y;
    return a < b;
  });
  return order;
}

}  // namespace

std::vector<Placement> cover_strip_midline(std::span<const Point> points,
                                           std::span<const std::size_t> members, double y_mid,
                                           double radius) {
  const std::vector<std::size_t> order = x_order(points, members);
  std::vector<Placement> out;
  std::vector<char> done(order.size(), 0);
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (done[i]) continue;
    const Point& p = points[order[i]];
    const double dy = p.y - y_mid;
    const Point center{p.x + std::sqrt(std::max(0.0, radius * radius - dy * dy)), y_mid};
    Placement pl{center, {}};
    for (std::size_t j = i; j < order.size(); ++j) {
      if (!done[j] && within(center, points[order[j]], radius)) {
        done[j] = 1;
        pl.covered.push_back(order[j]);
      }
    }
    // The anchor sits exactly on the rim; never let rounding drop it.
    if (!done[i]) {
      done[i] = 1;
      pl.covered.push_back(order[i]);
    }
    out.push_back(std::move(pl));
  }
  return out;
}

std::vector<Placement> cover_strip_sweep(std::span<const Point> points,
                                         std::span<const std::size_t> members, double radius) {
  const std::vector<std::size_t> order = x_order(points, members);
  std::vector<Placement> out;
  std::vector<char> done(order.size(), 0);
  std::vector<Point> batch;
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (done[i]) continue;
    batch.assign(1, points[order[i]]);
    Disk disk{points[order[i]], 0.0};
    for (std::size_t j = i + 1; j < order.size(); ++j) {
      if (done[j]) continue;
      batch.push_back(points[order[j]]);
      const Disk grown = one_center(batch);
      if (grown.radius > Tolerance::widen(radius)) break;
      disk = grown;
    }
    Placement pl{disk.center, {}};
    for (std::size_t j = i; j < order.size(); ++j) {
      if (!done[j] && within(disk.center, points[order[j]], radius)) {
        done[j] = 1;
        pl.covered.push_back(order[j]);
      }
    }
    out.push_back(std::move(pl));
  }
  return out;
}

Solution solve_strip(const Instance& inst, const TrialConfig& cfg) {
  inst.validate();
  cfg.validate();
  const auto t0 = std::chrono::steady_clock::now();

  const double height = cfg.strip_height_factor * inst.radius;
  double min_y = std::numeric_limits<double>::infinity();
  for (const Point& p : inst.points) min_y = std::min(min_y, p.y);

  std::map<long long, std::vector<std::size_t>> strips;
  for (std::size_t k = 0; k < inst.size(); ++k) {
    strips[static_cast<long long>(std::floor((inst.points[k].y - min_y) / height))].push_back(k);
  }

  std::vector<Placement> placements;
  for (const auto& [row, members] : strips) {
    const double y_mid = min_y + (static_cast<double>(row) + 0.5) * height;
    auto part = cfg.strip_rule == StripRule::sweep
                    ? cover_strip_sweep(inst.points, members, inst.radius)
                    : cover_strip_midline(inst.points, members, y_mid, inst.radius);
    std::move(part.begin(), part.end(), std::back_inserter(placements));
  }

  Solution sol = to_solution(std::move(placements), "strip", cfg.seed);
  sol.runtime = since(t0);
  return sol;
}

// ---- k-means with bisection --------------------------------------------

namespace {

// p distinct GTs via a partial Fisher-Yates shuffle.
std::vector<Point> forgy_seeds(const std::vector<Point>& pts, std::size_t p, Rng& rng) {
  std::vector<std::size_t> pool(pts.size());
  std::iota(pool.begin(), pool.end(), std::size_t{0});
  std::vector<Point> out(p);
  for (std::size_t c = 0; c < p; ++c) {
    std::swap(pool[c], pool[c + rng.index(pts.size() - c)]);
    out[c] = pts[pool[c]];
  }
  return out;
}

// Each further seed is a GT drawn with probability proportional to its
// squared distance from the seeds chosen so far.
std::vector<Point> plus_plus_seeds(const std::vector<Point>& pts, std::size_t p, Rng& rng) {
  const std::size_t n = pts.size();
  std::vector<char> taken(n, 0);
  std::vector<double> d2(n);
  std::vector<Point> out;
  out.reserve(p);
  std::size_t first = rng.index(n);
  taken[first] = 1;
  out.push_back(pts[first]);
  for (std::size_t k = 0; k < n; ++k) d2[k] = dist_sq(pts[k], pts[first]);

  while (out.size() < p) {
    double total = 0.0;
    for (std::size_t k = 0; k < n; ++k) total += d2[k];
    std::size_t pick = n;
    if (total > 0.0) {
      const double target = rng.uniform() * total;
      double acc = 0.0;
      for (std::size_t k = 0; k < n; ++k) {
        if (d2[k] <= 0.0) continue;
        acc += d2[k];
        pick = k;
        if (acc > target) break;
      }
    } else {
      // Every GT sits on a seed already; fall back to any untaken index.
      std::vector<std::size_t> rest;
      for (std::size_t k = 0; k < n; ++k) {
        if (!taken[k]) rest.push_back(k);
      }
      pick = rest[rng.index(rest.size())];
    }
    taken[pick] = 1;
    out.push_back(pts[pick]);
    for (std::size_t k = 0; k < n; ++k) d2[k] = std::min(d2[k], dist_sq(pts[k], pts[pick]));
  }
  return out;
}

}  // namespace

std::optional<std::vector<Placement>> kmeans_cover(const Instance& inst, std::size_t p,
                                                   std::size_t max_iters, Rng& rng,
                                                   KmeansInit init) {
  const std::size_t n = inst.size();
  const auto& pts = inst.points;
  p = std::clamp<std::size_t>(p, 1, n);
  std::vector<Point> centers =
      init == KmeansInit::forgy ? forgy_seeds(pts, p, rng) : plus_plus_seeds(pts, p, rng);

  constexpr auto unassigned = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> assign(n, unassigned);
  std::vector<double> sx(p), sy(p);
  std::vector<std::size_t> count(p);
  for (std::size_t it = 0; it < std::max<std::size_t>(max_iters, 1); ++it) {
    bool changed = false;
    for (std::size_t k = 0; k < n; ++k) {
      std::size_t best = 0;
      double best_d = dist_sq(pts[k], centers[0]);
      for (std::size_t c = 1; c < p; ++c) {
        const double d = dist_sq(pts[k], centers[c]);
        if (d < best_d) {
          best_d = d;
          best = c;
        }
      }
      if (assign[k] != best) {
        assign[k] = best;
        changed = true;
      }
    }
    if (!changed) break;
    std::fill(sx.begin(), sx.end(), 0.0);
    std::fill(sy.begin(), sy.end(), 0.0);
    std::fill(count.begin(), count.end(), 0);
    for (std::size_t k = 0; k < n; ++k) {
      sx[assign[k]] += pts[k].x;
      sy[assign[k]] += pts[k].y;
      ++count[assign[k]];
    }
    for (std::size_t c = 0; c < p; ++c) {
      if (count[c] > 0) {
        const auto m = static_cast<double>(count[c]);
        centers[c] = {sx[c] / m, sy[c] / m};
      }
    }
  }

  std::vector<std::vector<std::size_t>> clusters(p);
  for (std::size_t k = 0; k < n; ++k) clusters[assign[k]].push_back(k);

  std::vector<Placement> out;
  std::vector<Point> members;
  for (auto& cluster : clusters) {
    if (cluster.empty()) continue;
    members.clear();
    for (std::size_t k : cluster) members.push_back(pts[k]);
    const Disk d = one_center(members);
    if (d.radius > Tolerance::widen(inst.radius)) return std::nullopt;
    out.push_back({d.center, std::move(cluster)});
  }
  return out;
}

std::vector<Placement> kmeans_trial(const Instance& inst, const TrialConfig& cfg,
                                    std::size_t trial) {
  Rng rng(trial_seed(cfg, trial));
  std::size_t lo = 1;
  std::size_t hi = inst.size();
  std::optional<std::vector<Placement>> best;
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (auto res = kmeans_cover(inst, mid, cfg.max_kmeans_iters, rng, cfg.kmeans_init)) {
      best = std::move(res);
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  if (!best) best = kmeans_cover(inst, lo, cfg.max_kmeans_iters, rng, cfg.kmeans_init);
  if (!best) {
    // Unreachable in exact arithmetic (p = K places a center on every GT).
    std::vector<Placement> singletons;
    for (std::size_t k = 0; k < inst.size(); ++k) singletons.push_back({inst.points[k], {k}});
    best = std::move(singletons);
  }
  return std::move(*best);
}

Solution solve_kmeans(const Instance& inst, const TrialConfig& cfg) {
  inst.validate();
  cfg.validate();
  const auto t0 = std::chrono::steady_clock::now();
  auto best = best_of_trials(cfg.trials, cfg.execution,
                             [&](std::size_t t) { return kmeans_trial(inst, cfg, t); });
  Solution sol = to_solution(std::move(best), "kmeans", cfg.seed);
  sol.runtime = since(t0);
  return sol;
}

// ---- random placement ---------------------------------------------------

std::vector<Placement> random_trial(const Instance& inst, const TrialConfig& cfg,
                                    std::size_t trial) {
  Rng rng(trial_seed(cfg, trial));
  std::vector<std::size_t> uncovered(inst.size());
  std::iota(uncovered.begin(), uncovered.end(), std::size_t{0});
  std::vector<Placement> out;
  while (!uncovered.empty()) {
    const Point center = inst.points[uncovered[rng.index(uncovered.size())]];
    Placement pl{center, {}};
    std::erase_if(uncovered, [&](std::size_t k) {
      if (!within(center, inst.points[k], inst.radius)) return false;
      pl.covered.push_back(k);
      return true;
    });
    out.push_back(std::move(pl));
  }
  return out;
}

Solution solve_random(const Instance& inst, const TrialConfig& cfg) {
  inst.validate();
  cfg.validate();
  const auto t0 = std::chrono::steady_clock::now();
  auto best = best_of_trials(cfg.trials, cfg.execution,
                             [&](std::size_t t) { return random_trial(inst, cfg, t); });
  Solution sol = to_solution(std::move(best), "random", cfg.seed);
  sol.runtime = since(t0);
  return sol;
}

}  // namespace spiralcover

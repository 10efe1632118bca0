#include "spiralcover/spiral.hpp"

#include <algorithm>
#include <optional>

#include "spiralcover/rng.hpp"

namespace spiralcover {

namespace {

std::vector<Point> gather(const Instance& inst, const std::vector<std::size_t>& ids) {
  std::vector<Point> out;
  out.reserve(ids.size() + 1);
  for (std::size_t k : ids) out.push_back(inst.points[k]);
  return out;
}

void check_local_cover_contract(Point start, const std::vector<std::size_t>& prio,
                                const std::vector<std::size_t>& sec, const Instance& inst) {
  if (prio.empty()) throw ContractError("local_cover: prioritized set is empty");
  std::vector<char> in_prio(inst.size(), 0);
  for (std::size_t k : prio) {
    if (k >= inst.size()) throw ContractError("local_cover: GT index out of range");
    in_prio[k] = 1;
  }
  for (std::size_t k : sec) {
    if (k >= inst.size()) throw ContractError("local_cover: GT index out of range");
    if (in_prio[k]) throw ContractError("local_cover: prioritized and secondary sets overlap");
  }
  const auto pts = gather(inst, prio);
  if (one_center(pts).radius > Tolerance::widen(inst.radius))
    throw ContractError("local_cover: prioritized set does not fit in one disk");
  for (const Point& p : pts) {
    if (!within(start, p, inst.radius))
      throw ContractError("local_cover: start location does not cover the prioritized set");
  }
}

std::size_t bottom_left(const Instance& inst, const std::vector<std::size_t>& ids) {
  return *std::min_element(ids.begin(), ids.end(), [&](std::size_t a, std::size_t b) {
    const Point& p = inst.points[a];
    const Point& q = inst.points[b];
    if (p.y != q.y) return p.y < q.y;
    if (p.x != q.x) return p.x < q.x;
    return a < b;
  });
}

}  // namespace

LocalCoverResult local_cover(Point start, std::vector<std::size_t> prio,
                             std::vector<std::size_t> sec, const Instance& inst) {
  check_local_cover_contract(start, prio, sec, inst);
  const auto& pts = inst.points;
  const double r = inst.radius;

  Point u = start;
  std::vector<Point> prio_pts = gather(inst, prio);
  // Prioritized GTs below this position have already screened `sec`.
  std::size_t screened = 0;

  while (true) {
    for (; screened < prio.size(); ++screened) {
      const Point anchor = pts[prio[screened]];
      std::erase_if(sec, [&](std::size_t k) { return !within(anchor, pts[k], 2.0 * r); });
    }

    auto reached = std::stable_partition(sec.begin(), sec.end(),
                                         [&](std::size_t k) { return !within(u, pts[k], r); });
    for (auto it = reached; it != sec.end(); ++it) {
      prio.push_back(*it);
      prio_pts.push_back(pts[*it]);
    }
    sec.erase(reached, sec.end());

    if (sec.empty()) break;

    auto nearest = std::min_element(sec.begin(), sec.end(), [&](std::size_t a, std::size_t b) {
      const double da = dist_sq(u, pts[a]);
      const double db = dist_sq(u, pts[b]);
      return da != db ? da < db : a < b;
    });
    const std::size_t k1 = *nearest;
    prio_pts.push_back(pts[k1]);
    const Disk trial = one_center(prio_pts);
    if (trial.radius > Tolerance::widen(r)) {
      prio_pts.pop_back();
      break;
    }
    u = trial.center;
    prio.push_back(k1);
    sec.erase(nearest);
  }
  return {u, std::move(prio)};
}

Solution solve_spiral(const Instance& inst, std::uint64_t seed, bool deterministic_start,
                      std::vector<SpiralStep>* trace) {
  inst.validate();
  const auto t0 = std::chrono::steady_clock::now();
  const std::size_t n = inst.size();

  Solution sol;
  sol.algorithm = "spiral";
  sol.seed = seed;

  Rng rng(seed);
  std::vector<char> covered(n, 0);
  std::size_t remaining = n;
  std::optional<std::size_t> k0;
  std::vector<std::size_t> ids;
  std::vector<Point> sub;
  std::vector<char> on_boundary(n, 0);

  while (remaining > 0) {
    ids.clear();
    sub.clear();
    for (std::size_t k = 0; k < n; ++k) {
      if (!covered[k]) {
        ids.push_back(k);
        sub.push_back(inst.points[k]);
      }
    }

    std::vector<std::size_t> boundary = convex_hull(sub).indices;
    for (auto& b : boundary) b = ids[b];
    for (std::size_t k : boundary) on_boundary[k] = 1;
    std::vector<std::size_t> inner;
    for (std::size_t k : ids) {
      if (!on_boundary[k]) inner.push_back(k);
    }

    if (k0 && !on_boundary[*k0]) k0.reset();
    if (!k0) k0 = deterministic_start ? bottom_left(inst, boundary) : boundary[rng.index(boundary.size())];

    std::vector<std::size_t> boundary_rest;
    for (std::size_t k : boundary) {
      if (k != *k0) boundary_rest.push_back(k);
    }
    std::sort(boundary_rest.begin(), boundary_rest.end());

    const LocalCoverResult phase1 =
        local_cover(inst.points[*k0], {*k0}, std::move(boundary_rest), inst);
    const LocalCoverResult phase2 = local_cover(phase1.center, phase1.covered, inner, inst);

    std::vector<std::size_t> newly = phase2.covered;
    for (std::size_t k : newly) covered[k] = 1;
    // GTs inside the final disk that never entered the prioritized set.
    for (std::size_t k : ids) {
      if (!covered[k] && within(phase2.center, inst.points[k], inst.radius)) {
        covered[k] = 1;
        newly.push_back(k);
      }
    }
    std::sort(newly.begin(), newly.end());
    remaining -= newly.size();

    sol.centers.push_back(phase2.center);
    sol.newly_covered.push_back(newly);

    if (trace) {
      std::vector<std::size_t> bo_cov = phase1.covered;
      std::sort(bo_cov.begin(), bo_cov.end());
      trace->push_back({*k0, boundary, std::move(bo_cov), newly});
    }

    // Next anchor: first still-uncovered boundary GT counterclockwise from k0.
    const auto pos = static_cast<std::size_t>(
        std::find(boundary.begin(), boundary.end(), *k0) - boundary.begin());
    std::optional<std::size_t> next;
    for (std::size_t step = 1; step < boundary.size(); ++step) {
      const std::size_t cand = boundary[(pos + step) % boundary.size()];
      if (!covered[cand]) {
        next = cand;
        break;
      }
    }
    k0 = next;
    for (std::size_t k : boundary) on_boundary[k] = 0;
  }

  sol.runtime = std::chrono::duration_cast<std::chrono::nanoseconds>(
      std::chrono::steady_clock::now() - t0);
  return sol;
}

}  // namespace spiralcover

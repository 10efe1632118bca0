#include "spiralcover/exact.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>

namespace spiralcover {

std::size_t CoverSet::count() const {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool CoverSet::none() const {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

bool CoverSet::is_subset_of(const CoverSet& other) const {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] & ~other.words_[i]) return false;
  }
  return true;
}

std::size_t CoverSet::overlap(const CoverSet& other) const {
  std::size_t c = 0;
  for (std::size_t i = 0; i < words_.size(); ++i)
    c += static_cast<std::size_t>(std::popcount(words_[i] & other.words_[i]));
  return c;
}

void CoverSet::subtract(const CoverSet& other) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
}

std::vector<CandidateDisk> generate_candidates(const Instance& inst, CandidateOptions opts) {
  inst.validate();
  const auto& pts = inst.points;
  const std::size_t n = inst.size();
  const double r = inst.radius;

  std::vector<Point> centers(pts.begin(), pts.end());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double d = dist(pts[i], pts[j]);
      if (d == 0.0 || d > Tolerance::widen(2.0 * r)) continue;
      const Point mid{0.5 * (pts[i].x + pts[j].x), 0.5 * (pts[i].y + pts[j].y)};
      const double h2 = r * r - 0.25 * d * d;
      if (h2 <= 0.0) {
        centers.push_back(mid);
        continue;
      }
      const double h = std::sqrt(h2);
      const double ux = -(pts[j].y - pts[i].y) / d;
      const double uy = (pts[j].x - pts[i].x) / d;
      centers.push_back({mid.x + h * ux, mid.y + h * uy});
      centers.push_back({mid.x - h * ux, mid.y - h * uy});
    }
  }

  const auto count = static_cast<long>(centers.size());
  std::vector<CandidateDisk> all(centers.size());
  auto fill = [&](long c) {
    CoverSet cov(n);
    for (std::size_t k = 0; k < n; ++k) {
      if (within(centers[c], pts[k], r)) cov.set(k);
    }
    all[c] = {centers[c], std::move(cov)};
  };
  if (opts.execution == Execution::parallel) {
#pragma omp parallel for schedule(static)
    for (long c = 0; c < count; ++c) fill(c);
  } else {
    for (long c = 0; c < count; ++c) fill(c);
  }

  if (!opts.prune) return all;

  std::vector<char> keep(all.size(), 1);
  auto dominated = [&](long a) {
    const CoverSet& ca = all[a].coverage;
    for (long b = 0; b < count; ++b) {
      if (b == a || !ca.is_subset_of(all[b].coverage)) continue;
      if (b < a || !(ca == all[b].coverage)) return true;
    }
    return false;
  };
  if (opts.execution == Execution::parallel) {
#pragma omp parallel for schedule(dynamic, 16)
    for (long a = 0; a < count; ++a) keep[a] = !dominated(a);
  } else {
    for (long a = 0; a < count; ++a) keep[a] = !dominated(a);
  }

  std::vector<CandidateDisk> kept;
  for (std::size_t c = 0; c < all.size(); ++c) {
    if (keep[c]) kept.push_back(std::move(all[c]));
  }
  return kept;
}

namespace {

class CoverSearch {
 public:
  CoverSearch(const std::vector<CandidateDisk>& cands, std::size_t n, std::uint64_t limit)
      : cands_(cands), n_(n), limit_(limit), covering_(n) {
    for (std::size_t c = 0; c < cands.size(); ++c) {
      for (std::size_t k = 0; k < n; ++k) {
        if (cands[c].coverage.test(k)) covering_[k].push_back(c);
      }
    }
  }

  std::vector<std::size_t> run() {
    best_ = greedy();
    CoverSet all(n_);
    for (std::size_t k = 0; k < n_; ++k) all.set(k);
    std::vector<std::size_t> chosen;
    dfs(all, chosen);
    return best_;
  }

 private:
  std::vector<std::size_t> greedy() const {
    CoverSet open(n_);
    for (std::size_t k = 0; k < n_; ++k) open.set(k);
    std::vector<std::size_t> pick;
    while (!open.none()) {
      std::size_t best = 0, gain = 0;
      for (std::size_t c = 0; c < cands_.size(); ++c) {
        const std::size_t g = cands_[c].coverage.overlap(open);
        if (g > gain) {
          gain = g;
          best = c;
        }
      }
      pick.push_back(best);
      open.subtract(cands_[best].coverage);
    }
    return pick;
  }

  void dfs(const CoverSet& open, std::vector<std::size_t>& chosen) {
    if (++nodes_ > limit_) throw BudgetExceeded(limit_);
    const std::size_t remaining = open.count();
    if (remaining == 0) {
      if (chosen.size() < best_.size()) best_ = chosen;
      return;
    }
    std::size_t reach = 0;
    for (const auto& cand : cands_) reach = std::max(reach, cand.coverage.overlap(open));
    if (chosen.size() + (remaining + reach - 1) / reach >= best_.size()) return;

    // Branch on the open GT with the fewest covering candidates.
    std::size_t pivot = n_;
    for (std::size_t k = 0; k < n_; ++k) {
      if (open.test(k) && (pivot == n_ || covering_[k].size() < covering_[pivot].size())) pivot = k;
    }

    std::vector<std::pair<std::size_t, std::size_t>> branches;
    for (std::size_t c : covering_[pivot]) branches.emplace_back(cands_[c].coverage.overlap(open), c);
    std::sort(branches.begin(), branches.end(), [](const auto& a, const auto& b) {
      return a.first != b.first ? a.first > b.first : a.second < b.second;
    });
    for (const auto& [gain, c] : branches) {
      CoverSet next = open;
      next.subtract(cands_[c].coverage);
      chosen.push_back(c);
      dfs(next, chosen);
      chosen.pop_back();
    }
  }

  const std::vector<CandidateDisk>& cands_;
  std::size_t n_;
  std::uint64_t limit_;
  std::uint64_t nodes_ = 0;
  std::vector<std::vector<std::size_t>> covering_;
  std::vector<std::size_t> best_;
};

}  // namespace

Solution min_cover(const Instance& inst, MinCoverOptions opts) {
  inst.validate();
  const auto t0 = std::chrono::steady_clock::now();
  const auto cands = generate_candidates(inst, {opts.prune, Execution::serial});
  const std::vector<std::size_t> pick = CoverSearch(cands, inst.size(), opts.node_limit).run();

  Solution sol;
  sol.algorithm = "oracle";
  std::vector<char> done(inst.size(), 0);
  for (std::size_t c : pick) {
    std::vector<std::size_t> fresh;
    for (std::size_t k = 0; k < inst.size(); ++k) {
      if (!done[k] && cands[c].coverage.test(k)) {
        done[k] = 1;
        fresh.push_back(k);
      }
    }
    // A minimum cover has no redundant disk, so `fresh` is never empty.
    sol.centers.push_back(cands[c].center);
    sol.newly_covered.push_back(std::move(fresh));
  }
  sol.runtime = std::chrono::duration_cast<std::chrono::nanoseconds>(
      std::chrono::steady_clock::now() - t0);
  return sol;
}

}  // namespace spiralcover

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "spiralcover/instance.hpp"
#include "spiralcover/parallel.hpp"

namespace spiralcover {

/// Fixed-size bitset over GT indices.
class CoverSet {
 public:
  CoverSet() = default;
  explicit CoverSet(std::size_t bits) : bits_(bits), words_((bits + 63) / 64, 0) {}

  std::size_t bits() const { return bits_; }
  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }
  std::size_t count() const;
  bool none() const;
  bool is_subset_of(const CoverSet& other) const;
  std::size_t overlap(const CoverSet& other) const;
  /// Removes every bit set in `other`.
  void subtract(const CoverSet& other);

  friend bool operator==(const CoverSet&, const CoverSet&) = default;

 private:
  std::size_t bits_ = 0;
  std::vector<std::uint64_t> words_;
};

struct CandidateDisk {
  Point center;
  CoverSet coverage;
};

struct CandidateOptions {
  bool prune = true;
  Execution execution = Execution::parallel;
};

/// Candidate centers sufficient for an optimal cover: every GT, plus the
/// one or two centers of radius-r circles through each GT pair at
/// distance <= 2r. Candidates are ordered singletons first, then pairs in
/// lexicographic order. With pruning, candidates whose coverage is a
/// subset of another's are removed (equal coverage keeps the earlier one).
std::vector<CandidateDisk> generate_candidates(const Instance& inst, CandidateOptions opts = {});

/// Raised when the branch-and-bound search runs out of nodes.
class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(std::uint64_t nodes)
      : std::runtime_error("exact search exceeded its node budget of " + std::to_string(nodes)),
        nodes_(nodes) {}
  std::uint64_t nodes() const { return nodes_; }

 private:
  std::uint64_t nodes_;
};

struct MinCoverOptions {
  std::uint64_t node_limit = 10'000'000;
  bool prune = true;
};

/// Minimum-cardinality disk cover by branch and bound over candidates.
/// Throws BudgetExceeded rather than return an unproven answer.
Solution min_cover(const Instance& inst, MinCoverOptions opts = {});

inline Solution min_cover(const Instance& inst, std::optional<std::uint64_t> node_limit) {
  MinCoverOptions opts;
  if (node_limit) opts.node_limit = *node_limit;
  return min_cover(inst, opts);
}

}  // namespace spiralcover

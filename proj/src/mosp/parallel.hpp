// Copyright 2026 The mosp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Parallel multi-objective A*: one search per cyclic rotation of the
// objectives. Each search keeps its goal bounds in a ladder of truncation
// levels and promotes a bound to the next level once the search led by the
// bound's leading objective has extracted past it. Fully truncated bounds
// become scalar upper bounds shared by every search.

#pragma once

#include <array>
#include <atomic>
#include <cstdint>
#include <span>
#include <vector>

#include "mosp/core.hpp"
#include "mosp/graph.hpp"
#include "mosp/heuristic.hpp"
#include "mosp/search.hpp"
#include "mosp/trunc_store.hpp"

namespace mosp {

/// Objective order of one search: entry j is the canonical index of the
/// objective at position j.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<std::size_t> order);

  /// Rotation of 0..k-1 starting at `first`.
  static Permutation cyclic(std::size_t k, std::size_t first);
  static Permutation identity(std::size_t k) { return cyclic(k, 0); }

  std::size_t size() const { return order_.size(); }
  std::size_t operator[](std::size_t position) const { return order_[position]; }
  std::size_t primary() const { return order_.front(); }
  std::span<const std::size_t> order() const { return order_; }

  /// Maps a vector in this order back to canonical order.
  CostVector toCanonical(const CostVector& v) const;

 private:
  std::vector<std::size_t> order_;
};

enum class UpperBoundMode : std::uint8_t {
  kFull,
  kNone,  // ablation: single truncation only, no shared scalar bounds
};

std::string_view toString(UpperBoundMode m);

/// Goal-side truncation levels V_1..V_{k-1} of one search, all in that
/// search's objective order. Level λ holds vectors truncated λ times, so
/// their leading entry is objective permutation()[λ].
class BoundLadder {
 public:
  BoundLadder(Permutation permutation, StoreMode mode);

  std::size_t numLevels() const { return levels_.size(); }
  TruncStore& level(std::size_t lambda) { return levels_.at(lambda - 1); }
  const TruncStore& level(std::size_t lambda) const { return levels_.at(lambda - 1); }
  const Permutation& permutation() const { return permutation_; }

  /// Canonical index of the leading objective of vectors at `lambda`.
  std::size_t leadingObjective(std::size_t lambda) const { return permutation_[lambda]; }

  /// Every level pairwise non-dominated and the last one at most a scalar.
  bool wellFormed() const;

 private:
  Permutation permutation_;
  std::vector<TruncStore> levels_;
};

/// Cross-search state. Each watermark and each upper bound has exactly one
/// writer; readers tolerate stale values.
class SharedBounds {
 public:
  explicit SharedBounds(std::size_t numObjectives);

  std::size_t numObjectives() const { return numObjectives_; }

  Cost upperBound(std::size_t objective) const {
    return slots_[objective].upper.load(std::memory_order_acquire);
  }
  Cost watermark(std::size_t objective) const {
    return slots_[objective].watermark.load(std::memory_order_acquire);
  }
  bool done() const { return done_.load(std::memory_order_acquire); }
  void markDone() { done_.store(true, std::memory_order_release); }

  /// Writer side. Values that would move the wrong way are rejected and
  /// counted in monotonicityViolations().
  void lowerUpperBound(std::size_t objective, Cost value);
  void publishWatermark(std::size_t objective, Cost value);

  std::uint64_t monotonicityViolations() const {
    return violations_.load(std::memory_order_relaxed);
  }

 private:
  struct alignas(64) Slot {
    std::atomic<Cost> upper{kInfiniteCost};
    std::atomic<Cost> watermark{0};
  };

  std::size_t numObjectives_;
  std::array<Slot, kMaxObjectives> slots_;
  alignas(64) std::atomic<bool> done_{false};
  std::atomic<std::uint64_t> violations_{0};
};

/// True if v (in the ladder's order) reaches any scalar bound, then if any
/// truncation Tr^λ(v) is weakly dominated within level λ.
/// `globalUpper` is indexed by canonical objective.
bool isDominatedMD(const CostVector& v, const BoundLadder& ladder,
                   std::span<const Cost> globalUpper);
bool isDominatedMD(const CostVector& v, const BoundLadder& ladder, const SharedBounds& shared);

struct LadderUpdate {
  std::size_t promoted = 0;
  // Set when a scalar bound was published.
  bool publishedBound = false;
};

/// Promotes every bound whose leading entry is within the explored range of
/// the search led by that objective, then publishes the fully truncated
/// scalar, if any. Reads each watermark once per level. With
/// `checkInvariants` the ladder is re-verified and every promotion is
/// checked against the watermark it relied on.
LadderUpdate updateUpperBound(BoundLadder& ladder, SharedBounds& shared,
                              UpperBoundMode mode = UpperBoundMode::kFull,
                              bool checkInvariants = false);

struct MergedSolution {
  CostVector cost;  // canonical order
  std::size_t thread = 0;
  std::size_t index = 0;  // position in that thread's list
};

/// Lexicographically sorted, cost-unique union. Among equal costs the
/// entry from the lowest thread index is kept.
std::vector<MergedSolution> mergeUnique(std::span<const std::vector<CostVector>> perThread);

/// Drops every entry weakly dominated by another entry that ties with it on
/// some objective. Searches with primary-only ordering can each return such
/// an entry when the dominating cost was found by a different search.
void removeTieDominated(std::vector<MergedSolution>& merged);

struct ParallelOptions {
  SearchOptions search;
  UpperBoundMode upperBounds = UpperBoundMode::kFull;
  // Publish watermarks and refresh scalar bounds every N extractions.
  // Values above 1 only add staleness and exist to test tolerance to it.
  std::uint32_t publishInterval = 1;
};

struct ParallelResult {
  std::vector<Permutation> permutations;
  std::vector<SearchRun> runs;  // one per search; costs in that search's order
  std::vector<MergedSolution> merged;
  bool timedOut = false;
  std::size_t finisher = 0;       // first search to complete
  std::uint64_t monotonicityViolations = 0;
  std::uint64_t regressions = 0;  // observed bound/watermark moving backwards
  double elapsedSeconds = 0.0;

  SearchStats totalStats() const;
  std::vector<StateId> path(const MergedSolution& s) const {
    return runs[s.thread].arena.path(runs[s.thread].solutions[s.index]);
  }
};

/// One search of the parallel framework. `instance` and `heuristic` must
/// already be in `permutation` order. Publishes this search's watermark under
/// objective permutation.primary().
SearchRun parallelizedMoaStar(const ProblemInstance& instance, const HeuristicTable& heuristic,
                              const Permutation& permutation, SharedBounds& shared,
                              const ParallelOptions& options, std::uint64_t* regressions = nullptr);

/// One search per cyclic permutation, k threads. `heuristic` is in canonical
/// order for instance.goal.
ParallelResult runParallel(const ProblemInstance& instance, const HeuristicTable& heuristic,
                           const ParallelOptions& options = {});

}  // namespace mosp

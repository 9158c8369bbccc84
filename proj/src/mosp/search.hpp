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

#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "mosp/core.hpp"
#include "mosp/graph.hpp"
#include "mosp/heuristic.hpp"
#include "mosp/trunc_store.hpp"

namespace mosp {

enum class Strategy : std::uint8_t {
  kLtmoa,  // lexicographic queue, unordered stores
  kNwmoa,  // primary-cost queue, lex-sorted stores, quick pruning
};

enum class DominanceTiming : std::uint8_t {
  kLazy,   // dominance checked on extraction only
  kEager,  // also checked when a successor is generated
};

enum class OrderingMode : std::uint8_t { kLexicographic, kPrimaryOnly };

std::string_view toString(Strategy s);
std::string_view toString(DominanceTiming t);

using SteadyClock = std::chrono::steady_clock;

struct SearchStats {
  std::uint64_t extractions = 0;
  std::uint64_t expansions = 0;
  std::uint64_t generations = 0;
  std::uint64_t prunedByGTr = 0;
  std::uint64_t prunedBySolutions = 0;
  std::uint64_t quickPruneHits = 0;
  std::uint64_t queuePeak = 0;
  double elapsedSeconds = 0.0;

  /// Counters add; queuePeak and elapsedSeconds take the maximum.
  SearchStats& operator+=(const SearchStats& other);
};

struct SearchOptions {
  Strategy strategy = Strategy::kLtmoa;
  DominanceTiming timing = DominanceTiming::kLazy;
  // NWMOA only. Disabling it changes quickPruneHits and nothing else.
  bool quickPrune = true;
  std::optional<SteadyClock::time_point> deadline;
  // Re-verify store invariants after every mutation. Test builds only; O(n^2).
  bool checkInvariants = false;
  // Called with every extracted label before any pruning.
  std::function<void(const Label&)> onExtract;

  OrderingMode ordering() const {
    return strategy == Strategy::kLtmoa ? OrderingMode::kLexicographic
                                        : OrderingMode::kPrimaryOnly;
  }
  StoreMode storeMode() const {
    return strategy == Strategy::kLtmoa ? StoreMode::kUnordered : StoreMode::kLexSorted;
  }
  bool quickCache() const { return strategy == Strategy::kNwmoa && quickPrune; }
};

/// Append-only label storage; parents are arena indices.
class LabelArena {
 public:
  using Index = std::uint32_t;

  Index add(const Label& label) {
    labels_.push_back(label);
    return static_cast<Index>(labels_.size() - 1);
  }
  const Label& operator[](Index i) const { return labels_[i]; }
  std::size_t size() const { return labels_.size(); }
  void reserve(std::size_t n) { labels_.reserve(n); }

  /// States from the root label to `i`.
  std::vector<StateId> path(Index i) const;

 private:
  std::vector<Label> labels_;
};

/// Binary heap of label indices. Lexicographic mode orders by the full f
/// vector; primary-only mode orders by f[0] and leaves ties unspecified.
class OpenQueue {
 public:
  OpenQueue(const LabelArena& arena, OrderingMode mode) : arena_(&arena), mode_(mode) {}

  void push(LabelArena::Index label);
  LabelArena::Index pop();
  bool empty() const { return heap_.empty(); }
  std::size_t size() const { return heap_.size(); }

 private:
  struct Entry {
    Cost primary;
    LabelArena::Index label;
  };
  bool after(const Entry& a, const Entry& b) const;

  const LabelArena* arena_;
  OrderingMode mode_;
  std::vector<Entry> heap_;
};

enum class Termination : std::uint8_t {
  kExhausted,       // Open ran empty
  kEarlyTerminated, // primary bound reached (parallel only)
  kCancelled,       // another worker finished first (parallel only)
  kTimedOut,
};

struct SearchRun {
  LabelArena arena;
  std::vector<LabelArena::Index> solutions;  // discovery order
  SearchStats stats;
  Termination termination = Termination::kExhausted;

  std::vector<CostVector> solutionCosts() const;
};

/// Single-threaded multi-objective A*. `heuristic` must be computed for
/// instance.goal on instance.graph. Returns every cost-unique Pareto-optimal
/// solution unless the deadline expires first.
SearchRun moaStar(const ProblemInstance& instance, const HeuristicTable& heuristic,
                  const SearchOptions& options = {});

}  // namespace mosp

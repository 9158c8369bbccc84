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

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "mosp/core.hpp"
#include "mosp/graph.hpp"

namespace mosp {

/// Per-state vector of single-objective distances to the goal. A state that
/// cannot reach the goal holds kInfiniteCost in every entry.
class HeuristicTable {
 public:
  HeuristicTable() = default;
  HeuristicTable(std::size_t numObjectives, std::vector<CostVector> perState);

  std::size_t numStates() const { return perState_.size(); }
  std::size_t numObjectives() const { return numObjectives_; }

  const CostVector& operator[](StateId s) const { return perState_[s]; }
  bool reachesGoal(StateId s) const { return perState_[s][0] != kInfiniteCost; }

  /// Same reordering contract as Graph::permuted.
  HeuristicTable permuted(std::span<const std::size_t> order) const;

  friend bool operator==(const HeuristicTable&, const HeuristicTable&) = default;

 private:
  std::size_t numObjectives_ = 0;
  std::vector<CostVector> perState_;
};

/// One reverse Dijkstra pass per objective. Passes run on separate threads
/// when `parallel` is set.
HeuristicTable computeHeuristic(const Graph& graph, StateId goal, bool parallel = true);

/// Single-objective distances from every state to `goal` under objective
/// `objective`; kInfiniteCost where unreachable.
std::vector<Cost> reverseDijkstra(const Graph& graph, StateId goal, std::size_t objective);

// Cache file: a header line `mosp-heuristic,<fingerprint>,<goal>,<n>,<k>`
// followed by one CSV row of k integers per state, or `inf` for states that
// cannot reach the goal.
void saveHeuristic(std::ostream& out, const HeuristicTable& table, std::uint64_t graphFingerprint,
                   StateId goal);

/// nullopt when the cache was written for another graph or goal. Throws
/// GraphError when the file is malformed.
std::optional<HeuristicTable> loadHeuristic(std::istream& in, std::uint64_t graphFingerprint,
                                            StateId goal);

}  // namespace mosp

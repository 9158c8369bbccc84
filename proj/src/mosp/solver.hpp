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

// Single entry point over the sequential and parallel engines.

#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "mosp/core.hpp"
#include "mosp/graph.hpp"
#include "mosp/heuristic.hpp"
#include "mosp/parallel.hpp"
#include "mosp/search.hpp"

namespace mosp {

enum class Algorithm : std::uint8_t { kLtmoa, kNwmoa, kLtmoaPar, kNwmoaPar };

std::string_view toString(Algorithm a);
std::optional<Algorithm> parseAlgorithm(std::string_view name);

inline bool isParallel(Algorithm a) {
  return a == Algorithm::kLtmoaPar || a == Algorithm::kNwmoaPar;
}
inline Strategy strategyOf(Algorithm a) {
  return (a == Algorithm::kLtmoa || a == Algorithm::kLtmoaPar) ? Strategy::kLtmoa
                                                                : Strategy::kNwmoa;
}

struct SolveOptions {
  Algorithm algorithm = Algorithm::kLtmoa;
  UpperBoundMode upperBounds = UpperBoundMode::kFull;
  DominanceTiming timing = DominanceTiming::kLazy;
  bool quickPrune = true;
  std::optional<double> timeoutSeconds;
  // Sequential only: search with the objectives rotated to start at this one.
  std::size_t rotation = 0;
  bool checkInvariants = false;
};

struct Solution {
  CostVector cost;  // canonical order
  std::vector<StateId> path;
};

struct SolveResult {
  std::vector<Solution> solutions;  // lexicographically sorted by cost
  SearchStats stats;                // summed over searches
  std::vector<SearchStats> perSearch;
  bool timedOut = false;
  double searchSeconds = 0.0;
  std::uint64_t monotonicityViolations = 0;
};

/// `heuristic` is in canonical order for instance.goal.
SolveResult solve(const ProblemInstance& instance, const HeuristicTable& heuristic,
                  const SolveOptions& options);

}  // namespace mosp

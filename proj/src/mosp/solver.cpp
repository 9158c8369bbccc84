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

#include "mosp/solver.hpp"

#include <algorithm>
#include <chrono>

namespace mosp {

namespace {

constexpr std::pair<Algorithm, std::string_view> kNames[] = {
    {Algorithm::kLtmoa, "ltmoa"},
    {Algorithm::kNwmoa, "nwmoa"},
    {Algorithm::kLtmoaPar, "ltmoa-par"},
    {Algorithm::kNwmoaPar, "nwmoa-par"},
};

SearchOptions searchOptionsFor(const SolveOptions& options, SteadyClock::time_point began) {
  SearchOptions search;
  search.strategy = strategyOf(options.algorithm);
  search.timing = options.timing;
  search.quickPrune = options.quickPrune;
  search.checkInvariants = options.checkInvariants;
  if (options.timeoutSeconds) {
    const auto budget = std::chrono::duration_cast<SteadyClock::duration>(
        std::chrono::duration<double>(std::max(0.0, *options.timeoutSeconds)));
    search.deadline = began + budget;
  }
  return search;
}

}  // namespace

std::string_view toString(Algorithm a) {
  for (const auto& [alg, name] : kNames) {
    if (alg == a) return name;
  }
  return "unknown";
}

std::optional<Algorithm> parseAlgorithm(std::string_view name) {
  for (const auto& [alg, n] : kNames) {
    if (n == name) return alg;
  }
  return std::nullopt;
}

SolveResult solve(const ProblemInstance& instance, const HeuristicTable& heuristic,
                  const SolveOptions& options) {
  const std::size_t k = instance.graph.numObjectives();
  const auto began = SteadyClock::now();
  const SearchOptions search = searchOptionsFor(options, began);
  SolveResult result;

  if (isParallel(options.algorithm)) {
    ParallelOptions parallel;
    parallel.search = search;
    parallel.upperBounds = options.upperBounds;
    ParallelResult run = runParallel(instance, heuristic, parallel);
    for (const MergedSolution& m : run.merged) result.solutions.push_back({m.cost, run.path(m)});
    for (const SearchRun& r : run.runs) result.perSearch.push_back(r.stats);
    result.timedOut = run.timedOut;
    result.monotonicityViolations = run.monotonicityViolations;
  } else {
    if (options.rotation >= std::max<std::size_t>(k, 1)) {
      throw DimensionError("solve: rotation out of range");
    }
    SearchRun run;
    Permutation perm;
    if (options.rotation == 0) {
      run = moaStar(instance, heuristic, search);
      perm = Permutation::identity(k);
    } else {
      perm = Permutation::cyclic(k, options.rotation);
      const ProblemInstance view{instance.graph.permuted(perm.order()), instance.start,
                                 instance.goal};
      run = moaStar(view, heuristic.permuted(perm.order()), search);
    }
    for (LabelArena::Index s : run.solutions) {
      result.solutions.push_back({perm.toCanonical(run.arena[s].f), run.arena.path(s)});
    }
    result.perSearch.push_back(run.stats);
    result.timedOut = run.termination == Termination::kTimedOut;
  }

  std::sort(result.solutions.begin(), result.solutions.end(),
            [](const Solution& a, const Solution& b) { return lexLess(a.cost, b.cost); });
  for (const SearchStats& s : result.perSearch) result.stats += s;
  result.searchSeconds = std::chrono::duration<double>(SteadyClock::now() - began).count();
  return result;
}

}  // namespace mosp

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

// Shared best-first loop behind the sequential and parallel searches. The
// goal policy decides how solutions bound the search and when to stop:
//
//   bool stopBeforeProcessing(const Label& x, SearchRun& run);
//   bool boundsDominate(const CostVector& f);
//   void acceptSolution(LabelArena::Index x, SearchRun& run);

#pragma once

#include <stdexcept>
#include <vector>

#include "mosp/search.hpp"

namespace mosp::detail {

/// Appends a solution, first dropping earlier solutions with the same
/// primary cost that it dominates. Only primary-only ordering can produce
/// those, since ties on f[0] come out in arbitrary order.
inline void appendSolution(SearchRun& run, LabelArena::Index x) {
  const CostVector& fx = run.arena[x].f;
  auto& sols = run.solutions;
  std::size_t tailBegin = sols.size();
  while (tailBegin > 0 && run.arena[sols[tailBegin - 1]].f[0] == fx[0]) --tailBegin;
  std::size_t out = tailBegin;
  for (std::size_t i = tailBegin; i < sols.size(); ++i) {
    if (!weaklyDominatesUnchecked(fx, run.arena[sols[i]].f)) sols[out++] = sols[i];
  }
  sols.resize(out);
  sols.push_back(x);
}

inline void verifyStore(const TruncStore& store, const char* where) {
  if (!store.pairwiseNonDominated()) {
    throw std::logic_error(std::string(where) + ": store holds a dominated vector");
  }
  if (store.mode() == StoreMode::kLexSorted && !store.isSorted()) {
    throw std::logic_error(std::string(where) + ": lex-sorted store out of order");
  }
}

template <class GoalPolicy>
class MoaEngine {
 public:
  MoaEngine(const Graph& graph, const HeuristicTable& heuristic, StateId start, StateId goal,
            const SearchOptions& options)
      : graph_(graph),
        heuristic_(heuristic),
        start_(start),
        goal_(goal),
        options_(options),
        stores_(graph.numStates(), TruncStore(options.storeMode(), options.quickCache())) {}

  TruncStore& storeAt(StateId s) { return stores_[s]; }

  void run(GoalPolicy& policy, SearchRun& out) {
    const auto began = SteadyClock::now();
    SearchStats& stats = out.stats;
    out.termination = Termination::kExhausted;
    if (!heuristic_.reachesGoal(start_)) {
      stats.elapsedSeconds = secondsSince(began);
      return;
    }

    const bool eager = options_.timing == DominanceTiming::kEager;
    OpenQueue open(out.arena, options_.ordering());
    {
      Label root;
      root.state = start_;
      root.g = CostVector::zeros(graph_.numObjectives());
      root.f = heuristic_[start_];
      open.push(out.arena.add(root));
    }

    CostVector truncated;
    while (!open.empty()) {
      if (open.size() > stats.queuePeak) stats.queuePeak = open.size();
      const LabelArena::Index xi = open.pop();
      ++stats.extractions;
      // copy: the arena may reallocate while successors are added
      const Label x = out.arena[xi];
      if (options_.onExtract) options_.onExtract(x);
      if (options_.deadline && SteadyClock::now() >= *options_.deadline) {
        out.termination = Termination::kTimedOut;
        break;
      }
      if (policy.stopBeforeProcessing(x, out)) break;

      if (x.state == goal_) {
        if (policy.boundsDominate(x.f)) {
          ++stats.prunedBySolutions;
          continue;
        }
        policy.acceptSolution(xi, out);
        continue;
      }

      TruncStore& here = stores_[x.state];
      truncateInto(x.g, truncated);
      switch (here.probe(truncated)) {
        case DominanceHit::kQuick:
          ++stats.quickPruneHits;
          [[fallthrough]];
        case DominanceHit::kScan:
          ++stats.prunedByGTr;
          continue;
        case DominanceHit::kNone:
          break;
      }
      if (policy.boundsDominate(x.f)) {
        ++stats.prunedBySolutions;
        continue;
      }
      here.insert(truncated);
      if (options_.checkInvariants) verifyStore(here, "G^Tr");
      ++stats.expansions;

      for (const Arc& arc : graph_.successors(x.state)) {
        const StateId t = arc.target;
        if (!heuristic_.reachesGoal(t)) continue;
        Label y;
        y.state = t;
        y.parent = xi;
        y.g = x.g;
        y.g += arc.cost;
        y.f = y.g;
        y.f += heuristic_[t];
        ++stats.generations;
        if (eager) {
          if (t != goal_) {
            truncateInto(y.g, truncated);
            DominanceHit hit = stores_[t].probe(truncated);
            if (hit != DominanceHit::kNone) {
              if (hit == DominanceHit::kQuick) ++stats.quickPruneHits;
              ++stats.prunedByGTr;
              continue;
            }
          }
          if (policy.boundsDominate(y.f)) {
            ++stats.prunedBySolutions;
            continue;
          }
        }
        open.push(out.arena.add(y));
      }
    }
    stats.elapsedSeconds = secondsSince(began);
  }

 private:
  static double secondsSince(SteadyClock::time_point t) {
    return std::chrono::duration<double>(SteadyClock::now() - t).count();
  }

  const Graph& graph_;
  const HeuristicTable& heuristic_;
  StateId start_;
  StateId goal_;
  const SearchOptions& options_;
  std::vector<TruncStore> stores_;
};

}  // namespace mosp::detail

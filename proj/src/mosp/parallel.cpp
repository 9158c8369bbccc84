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

#include "mosp/parallel.hpp"

#include <algorithm>
#include <exception>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "mosp/search_engine.hpp"

namespace mosp {

Permutation::Permutation(std::vector<std::size_t> order) : order_(std::move(order)) {
  std::vector<std::size_t> sorted = order_;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] != i) throw DimensionError("Permutation: not a permutation of 0..k-1");
  }
  if (order_.size() > kMaxObjectives) throw DimensionError("Permutation: too many objectives");
}

Permutation Permutation::cyclic(std::size_t k, std::size_t first) {
  if (first >= k) throw DimensionError("Permutation::cyclic: first index out of range");
  std::vector<std::size_t> order(k);
  for (std::size_t j = 0; j < k; ++j) order[j] = (first + j) % k;
  return Permutation(std::move(order));
}

CostVector Permutation::toCanonical(const CostVector& v) const {
  if (v.size() != order_.size()) throw DimensionError("toCanonical: length mismatch");
  CostVector out(v.size());
  for (std::size_t j = 0; j < order_.size(); ++j) out[order_[j]] = v[j];
  return out;
}

std::string_view toString(UpperBoundMode m) { return m == UpperBoundMode::kFull ? "full" : "noub"; }

BoundLadder::BoundLadder(Permutation permutation, StoreMode mode)
    : permutation_(std::move(permutation)) {
  if (permutation_.size() < 2) throw DimensionError("BoundLadder: need at least two objectives");
  levels_.assign(permutation_.size() - 1, TruncStore(mode, false));
}

bool BoundLadder::wellFormed() const {
  for (const TruncStore& level : levels_) {
    if (!level.pairwiseNonDominated()) return false;
    if (level.mode() == StoreMode::kLexSorted && !level.isSorted()) return false;
  }
  return levels_.back().size() <= 1;
}

SharedBounds::SharedBounds(std::size_t numObjectives) : numObjectives_(numObjectives) {
  if (numObjectives < 2 || numObjectives > kMaxObjectives) {
    throw DimensionError("SharedBounds: objective count out of range");
  }
}

void SharedBounds::lowerUpperBound(std::size_t objective, Cost value) {
  auto& slot = slots_[objective].upper;
  Cost current = slot.load(std::memory_order_relaxed);
  if (value < current) {
    slot.store(value, std::memory_order_release);
  } else if (value > current) {
    violations_.fetch_add(1, std::memory_order_relaxed);
  }
}

void SharedBounds::publishWatermark(std::size_t objective, Cost value) {
  auto& slot = slots_[objective].watermark;
  Cost current = slot.load(std::memory_order_relaxed);
  if (value > current) {
    slot.store(value, std::memory_order_release);
  } else if (value < current) {
    violations_.fetch_add(1, std::memory_order_relaxed);
  }
}

bool isDominatedMD(const CostVector& v, const BoundLadder& ladder,
                   std::span<const Cost> globalUpper) {
  const Permutation& perm = ladder.permutation();
  const std::size_t k = perm.size();
  if (v.size() != k) throw DimensionError("isDominatedMD: length mismatch");
  for (std::size_t j = 0; j < k; ++j) {
    if (v[j] >= globalUpper[perm[j]]) return true;
  }
  CostVector truncated;
  for (std::size_t lambda = 1; lambda < k; ++lambda) {
    const TruncStore& level = ladder.level(lambda);
    if (level.empty()) continue;
    truncated = CostVector(k - lambda);
    for (std::size_t j = lambda; j < k; ++j) truncated[j - lambda] = v[j];
    if (level.isDominated(truncated)) return true;
  }
  return false;
}

bool isDominatedMD(const CostVector& v, const BoundLadder& ladder, const SharedBounds& shared) {
  std::array<Cost, kMaxObjectives> upper{};
  for (std::size_t i = 0; i < shared.numObjectives(); ++i) upper[i] = shared.upperBound(i);
  return isDominatedMD(v, ladder, std::span<const Cost>(upper.data(), shared.numObjectives()));
}

LadderUpdate updateUpperBound(BoundLadder& ladder, SharedBounds& shared, UpperBoundMode mode,
                              bool checkInvariants) {
  LadderUpdate update;
  if (mode == UpperBoundMode::kNone) return update;
  const std::size_t k = ladder.permutation().size();
  CostVector truncated;
  for (std::size_t lambda = 1; lambda + 1 < k; ++lambda) {
    TruncStore& from = ladder.level(lambda);
    if (from.empty()) continue;
    const std::size_t leader = ladder.leadingObjective(lambda);
    const Cost explored = shared.watermark(leader);
    std::vector<CostVector> promoted = from.extractFirstAtMost(explored);
    TruncStore& to = ladder.level(lambda + 1);
    for (const CostVector& v : promoted) {
      if (checkInvariants && v[0] > explored) {
        throw std::logic_error("updateUpperBound: promoted a bound beyond the watermark");
      }
      detail::truncateInto(v, truncated);
      ++update.promoted;
      if (to.isDominated(truncated)) continue;
      to.insert(truncated);
    }
  }
  const TruncStore& last = ladder.level(k - 1);
  if (!last.empty()) {
    shared.lowerUpperBound(ladder.leadingObjective(k - 1), last.vectors().front()[0]);
    update.publishedBound = true;
  }
  if (checkInvariants && !ladder.wellFormed()) {
    throw std::logic_error("updateUpperBound: ladder lost pairwise non-dominance");
  }
  return update;
}

std::vector<MergedSolution> mergeUnique(std::span<const std::vector<CostVector>> perThread) {
  std::vector<MergedSolution> all;
  for (std::size_t t = 0; t < perThread.size(); ++t) {
    for (std::size_t i = 0; i < perThread[t].size(); ++i) {
      all.push_back(MergedSolution{perThread[t][i], t, i});
    }
  }
  // stable: equal costs stay in thread order
  std::stable_sort(all.begin(), all.end(), [](const MergedSolution& a, const MergedSolution& b) {
    return lexLess(a.cost, b.cost);
  });
  auto last = std::unique(all.begin(), all.end(), [](const MergedSolution& a,
                                                     const MergedSolution& b) {
    return a.cost == b.cost;
  });
  all.erase(last, all.end());
  return all;
}

void removeTieDominated(std::vector<MergedSolution>& merged) {
  if (merged.empty()) return;
  const std::size_t k = merged.front().cost.size();
  std::vector<char> removed(merged.size(), 0);
  std::vector<std::size_t> order(merged.size());
  std::vector<std::size_t> kept;
  for (std::size_t p = 0; p < k; ++p) {
    std::iota(order.begin(), order.end(), 0);
    // `merged` is lex-sorted, so a stable sort on one key keeps lex order
    // inside each group and a dominator always precedes what it dominates.
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return merged[a].cost[p] < merged[b].cost[p];
    });
    for (std::size_t lo = 0; lo < order.size();) {
      std::size_t hi = lo;
      while (hi < order.size() && merged[order[hi]].cost[p] == merged[order[lo]].cost[p]) ++hi;
      kept.clear();
      for (std::size_t i = lo; i < hi; ++i) {
        // entries removed in an earlier pass still serve as dominators here
        const std::size_t cand = order[i];
        bool dominated = false;
        for (std::size_t j : kept) {
          if (detail::weaklyDominatesUnchecked(merged[j].cost, merged[cand].cost)) {
            dominated = true;
            break;
          }
        }
        if (dominated) {
          removed[cand] = 1;
        } else {
          kept.push_back(cand);
        }
      }
      lo = hi;
    }
  }
  std::size_t out = 0;
  for (std::size_t i = 0; i < merged.size(); ++i) {
    if (!removed[i]) merged[out++] = merged[i];
  }
  merged.resize(out);
}

namespace {

// Goal bounds of one parallel search: the ladder plus the shared scalars.
class LadderGoal {
 public:
  LadderGoal(const Permutation& permutation, SharedBounds& shared, const ParallelOptions& options)
      : ladder_(permutation, options.search.storeMode()),
        shared_(shared),
        options_(options),
        self_(permutation.primary()),
        k_(permutation.size()) {
    upper_.fill(kInfiniteCost);
    seenWatermark_.fill(0);
  }

  bool stopBeforeProcessing(const Label& x, SearchRun& run) {
    if (shared_.done()) {
      run.termination = Termination::kCancelled;
      return true;
    }
    if (++sincePublish_ >= options_.publishInterval) {
      sincePublish_ = 0;
      shared_.publishWatermark(self_, x.f[0]);
      refreshSnapshot();
    }
    if (x.f[0] >= upper_[self_]) {
      run.termination = Termination::kEarlyTerminated;
      return true;
    }
    return false;
  }

  bool boundsDominate(const CostVector& f) {
    return isDominatedMD(f, ladder_, std::span<const Cost>(upper_.data(), k_));
  }

  void acceptSolution(LabelArena::Index x, SearchRun& run) {
    detail::truncateInto(run.arena[x].f, scratch_);
    ladder_.level(1).insert(scratch_);
    updateUpperBound(ladder_, shared_, options_.upperBounds, options_.search.checkInvariants);
    if (options_.upperBounds == UpperBoundMode::kFull && ladder_.level(k_ - 1).size() == 1) {
      // own writes are visible immediately
      upper_[ladder_.leadingObjective(k_ - 1)] =
          std::min(upper_[ladder_.leadingObjective(k_ - 1)],
                   ladder_.level(k_ - 1).vectors().front()[0]);
    }
    detail::appendSolution(run, x);
  }

  std::uint64_t regressions() const { return regressions_; }

 private:
  void refreshSnapshot() {
    for (std::size_t i = 0; i < k_; ++i) {
      Cost u = shared_.upperBound(i);
      if (u > seenUpper(i)) ++regressions_;
      upper_[i] = std::min(upper_[i], u);
      Cost w = shared_.watermark(i);
      if (w < seenWatermark_[i]) ++regressions_;
      seenWatermark_[i] = std::max(seenWatermark_[i], w);
    }
  }
  Cost seenUpper(std::size_t i) const { return upper_[i]; }

  BoundLadder ladder_;
  SharedBounds& shared_;
  const ParallelOptions& options_;
  std::size_t self_;
  std::size_t k_;
  std::array<Cost, kMaxObjectives> upper_{};
  std::array<Cost, kMaxObjectives> seenWatermark_{};
  std::uint32_t sincePublish_ = 0;
  std::uint64_t regressions_ = 0;
  CostVector scratch_;
};

}  // namespace

SearchRun parallelizedMoaStar(const ProblemInstance& instance, const HeuristicTable& heuristic,
                              const Permutation& permutation, SharedBounds& shared,
                              const ParallelOptions& options, std::uint64_t* regressions) {
  instance.validate();
  if (permutation.size() != instance.graph.numObjectives() ||
      heuristic.numObjectives() != instance.graph.numObjectives()) {
    throw DimensionError("parallelizedMoaStar: objective count mismatch");
  }
  detail::MoaEngine<LadderGoal> engine(instance.graph, heuristic, instance.start, instance.goal,
                                       options.search);
  LadderGoal policy(permutation, shared, options);
  SearchRun run;
  engine.run(policy, run);
  if (regressions) *regressions = policy.regressions();
  return run;
}

SearchStats ParallelResult::totalStats() const {
  SearchStats total;
  for (const SearchRun& r : runs) total += r.stats;
  total.elapsedSeconds = elapsedSeconds;
  return total;
}

ParallelResult runParallel(const ProblemInstance& instance, const HeuristicTable& heuristic,
                           const ParallelOptions& options) {
  instance.validate();
  const std::size_t k = instance.graph.numObjectives();
  if (k < 2) throw DimensionError("runParallel: at least two objectives required");
  if (heuristic.numObjectives() != k || heuristic.numStates() != instance.graph.numStates()) {
    throw DimensionError("runParallel: heuristic does not match the graph");
  }

  ParallelResult result;
  std::vector<ProblemInstance> views;
  std::vector<HeuristicTable> heuristics;
  views.reserve(k);
  heuristics.reserve(k);
  for (std::size_t i = 0; i < k; ++i) {
    result.permutations.push_back(Permutation::cyclic(k, i));
    const auto order = result.permutations.back().order();
    views.push_back(
        ProblemInstance{instance.graph.permuted(order), instance.start, instance.goal});
    heuristics.push_back(heuristic.permuted(order));
  }

  SharedBounds shared(k);
  result.runs.resize(k);
  std::vector<std::uint64_t> regressions(k, 0);
  std::vector<std::exception_ptr> failures(k);
  const auto began = SteadyClock::now();
  {
    std::vector<std::jthread> workers;
    workers.reserve(k);
    for (std::size_t i = 0; i < k; ++i) {
      workers.emplace_back([&, i] {
        try {
          result.runs[i] = parallelizedMoaStar(views[i], heuristics[i], result.permutations[i],
                                               shared, options, &regressions[i]);
          const Termination t = result.runs[i].termination;
          if (t != Termination::kCancelled) shared.markDone();
        } catch (...) {
          failures[i] = std::current_exception();
          shared.markDone();
        }
      });
    }
  }
  result.elapsedSeconds =
      std::chrono::duration<double>(SteadyClock::now() - began).count();

  for (std::size_t i = 0; i < k; ++i) {
    if (!failures[i]) continue;
    try {
      std::rethrow_exception(failures[i]);
    } catch (const std::exception& e) {
      throw std::runtime_error("parallel search " + std::to_string(i) + " failed: " + e.what());
    }
  }

  bool complete = false;
  for (std::size_t i = 0; i < k; ++i) {
    const Termination t = result.runs[i].termination;
    if (t == Termination::kExhausted || t == Termination::kEarlyTerminated) {
      if (!complete) result.finisher = i;
      complete = true;
    }
    result.regressions += regressions[i];
  }
  result.timedOut = !complete;
  result.monotonicityViolations = shared.monotonicityViolations();

  std::vector<std::vector<CostVector>> perThread(k);
  for (std::size_t i = 0; i < k; ++i) {
    for (LabelArena::Index s : result.runs[i].solutions) {
      perThread[i].push_back(result.permutations[i].toCanonical(result.runs[i].arena[s].f));
    }
  }
  result.merged = mergeUnique(perThread);
  if (options.search.ordering() == OrderingMode::kPrimaryOnly) removeTieDominated(result.merged);
  return result;
}

}  // namespace mosp

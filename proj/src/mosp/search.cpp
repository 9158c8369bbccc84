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

#include "mosp/search.hpp"

#include <algorithm>

#include "mosp/search_engine.hpp"

namespace mosp {

std::string_view toString(Strategy s) {
  return s == Strategy::kLtmoa ? "ltmoa" : "nwmoa";
}

std::string_view toString(DominanceTiming t) {
  return t == DominanceTiming::kLazy ? "lazy" : "eager";
}

SearchStats& SearchStats::operator+=(const SearchStats& other) {
  extractions += other.extractions;
  expansions += other.expansions;
  generations += other.generations;
  prunedByGTr += other.prunedByGTr;
  prunedBySolutions += other.prunedBySolutions;
  quickPruneHits += other.quickPruneHits;
  queuePeak = std::max(queuePeak, other.queuePeak);
  elapsedSeconds = std::max(elapsedSeconds, other.elapsedSeconds);
  return *this;
}

std::vector<StateId> LabelArena::path(Index i) const {
  std::vector<StateId> states;
  for (Index cur = i; cur != Label::kNoParent; cur = labels_[cur].parent) {
    states.push_back(labels_[cur].state);
  }
  std::reverse(states.begin(), states.end());
  return states;
}

bool OpenQueue::after(const Entry& a, const Entry& b) const {
  if (a.primary != b.primary) return a.primary > b.primary;
  if (mode_ == OrderingMode::kPrimaryOnly) return false;
  return detail::lexLessUnchecked((*arena_)[b.label].f, (*arena_)[a.label].f);
}

void OpenQueue::push(LabelArena::Index label) {
  heap_.push_back(Entry{(*arena_)[label].f[0], label});
  std::push_heap(heap_.begin(), heap_.end(),
                 [this](const Entry& a, const Entry& b) { return after(a, b); });
}

LabelArena::Index OpenQueue::pop() {
  std::pop_heap(heap_.begin(), heap_.end(),
                [this](const Entry& a, const Entry& b) { return after(a, b); });
  LabelArena::Index top = heap_.back().label;
  heap_.pop_back();
  return top;
}

std::vector<CostVector> SearchRun::solutionCosts() const {
  std::vector<CostVector> costs;
  costs.reserve(solutions.size());
  for (auto i : solutions) costs.push_back(arena[i].f);
  return costs;
}

namespace {

// Solutions bound the search through one singly truncated store at the goal.
class SingleTruncationGoal {
 public:
  SingleTruncationGoal(TruncStore& goalStore, bool checkInvariants)
      : goalStore_(goalStore), checkInvariants_(checkInvariants) {}

  bool stopBeforeProcessing(const Label&, SearchRun&) { return false; }

  bool boundsDominate(const CostVector& f) {
    detail::truncateInto(f, scratch_);
    return goalStore_.isDominated(scratch_);
  }

  void acceptSolution(LabelArena::Index x, SearchRun& run) {
    detail::truncateInto(run.arena[x].f, scratch_);
    goalStore_.insert(scratch_);
    if (checkInvariants_) detail::verifyStore(goalStore_, "G^Tr(goal)");
    detail::appendSolution(run, x);
  }

 private:
  TruncStore& goalStore_;
  bool checkInvariants_;
  CostVector scratch_;
};

}  // namespace

SearchRun moaStar(const ProblemInstance& instance, const HeuristicTable& heuristic,
                  const SearchOptions& options) {
  instance.validate();
  const std::size_t k = instance.graph.numObjectives();
  if (k < 2) throw DimensionError("moaStar: at least two objectives required");
  if (heuristic.numStates() != instance.graph.numStates() || heuristic.numObjectives() != k) {
    throw DimensionError("moaStar: heuristic does not match the graph");
  }
  detail::MoaEngine<SingleTruncationGoal> engine(instance.graph, heuristic, instance.start,
                                                 instance.goal, options);
  SingleTruncationGoal policy(engine.storeAt(instance.goal), options.checkInvariants);
  SearchRun run;
  engine.run(policy, run);
  return run;
}

}  // namespace mosp

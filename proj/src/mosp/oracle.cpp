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

#include "mosp/oracle.hpp"

#include <algorithm>
#include <deque>
#include <istream>
#include <ostream>
#include <sstream>

namespace mosp {

ParetoFrontier paretoFilter(std::vector<CostVector> costs) {
  std::sort(costs.begin(), costs.end(), lexLess);
  costs.erase(std::unique(costs.begin(), costs.end()), costs.end());
  ParetoFrontier frontier;
  for (const CostVector& c : costs) {
    // a dominator is lexicographically smaller, so it is already in the frontier
    bool dominated = std::any_of(frontier.costs.begin(), frontier.costs.end(),
                                 [&](const CostVector& f) { return weaklyDominates(f, c); });
    if (!dominated) frontier.costs.push_back(c);
  }
  return frontier;
}

ParetoFrontier labelCorrectingPareto(const ProblemInstance& instance) {
  instance.validate();
  const Graph& graph = instance.graph;
  std::vector<std::vector<CostVector>> sets(graph.numStates());
  std::deque<std::pair<StateId, CostVector>> queue;

  const CostVector zero = CostVector::zeros(graph.numObjectives());
  sets[instance.start].push_back(zero);
  queue.emplace_back(instance.start, zero);

  while (!queue.empty()) {
    auto [u, g] = queue.front();
    queue.pop_front();
    // skip labels that were dominated after being queued
    if (std::find(sets[u].begin(), sets[u].end(), g) == sets[u].end()) continue;
    for (const Arc& arc : graph.successors(u)) {
      CostVector next = g + arc.cost;
      auto& target = sets[arc.target];
      bool dominated = std::any_of(target.begin(), target.end(),
                                   [&](const CostVector& c) { return weaklyDominates(c, next); });
      if (dominated) continue;
      std::erase_if(target, [&](const CostVector& c) { return weaklyDominates(next, c); });
      target.push_back(next);
      queue.emplace_back(arc.target, next);
    }
  }
  return paretoFilter(sets[instance.goal]);
}

namespace {

void enumerateFrom(const Graph& graph, StateId u, StateId goal, CostVector& cost,
                   std::vector<char>& onPath, std::vector<CostVector>& found) {
  if (u == goal) {
    found.push_back(cost);
    return;
  }
  for (const Arc& arc : graph.successors(u)) {
    if (onPath[arc.target]) continue;
    onPath[arc.target] = 1;
    CostVector saved = cost;
    cost += arc.cost;
    enumerateFrom(graph, arc.target, goal, cost, onPath, found);
    cost = saved;
    onPath[arc.target] = 0;
  }
}

}  // namespace

ParetoFrontier enumeratePathsPareto(const ProblemInstance& instance, std::size_t maxStates) {
  instance.validate();
  const Graph& graph = instance.graph;
  if (graph.numStates() > maxStates) {
    throw OracleRefused("path enumeration refused: " + std::to_string(graph.numStates()) +
                        " states exceeds " + std::to_string(maxStates));
  }
  std::vector<char> onPath(graph.numStates(), 0);
  std::vector<CostVector> found;
  CostVector cost = CostVector::zeros(graph.numObjectives());
  onPath[instance.start] = 1;
  enumerateFrom(graph, instance.start, instance.goal, cost, onPath, found);
  return paretoFilter(std::move(found));
}

void writeFrontier(std::ostream& out, std::span<const CostVector> costs) {
  for (const CostVector& c : costs) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) out << ' ';
      out << c[i];
    }
    out << '\n';
  }
}

std::vector<CostVector> readFrontier(std::istream& in) {
  std::vector<CostVector> costs;
  std::string line;
  std::size_t lineNo = 0;
  while (std::getline(in, line)) {
    ++lineNo;
    if (line.empty()) continue;
    std::istringstream row(line);
    std::vector<Cost> values;
    Cost v = 0;
    while (row >> v) values.push_back(v);
    if (!row.eof() || values.empty()) {
      throw std::runtime_error("frontier line " + std::to_string(lineNo) + " is malformed");
    }
    costs.emplace_back(std::span<const Cost>(values));
  }
  return costs;
}

std::string FrontierMismatch::describe() const {
  switch (kind) {
    case Kind::kMissing:
      return "missing " + cost.toString();
    case Kind::kExtra:
      return "extra " + cost.toString();
    case Kind::kDominated:
      return "dominated " + cost.toString();
    case Kind::kDuplicate:
      return "duplicate " + cost.toString();
  }
  return "mismatch";
}

std::optional<FrontierMismatch> compareFrontiers(const ParetoFrontier& expected,
                                                 std::span<const CostVector> actual) {
  std::vector<CostVector> got(actual.begin(), actual.end());
  std::sort(got.begin(), got.end(), lexLess);
  for (std::size_t i = 1; i < got.size(); ++i) {
    if (got[i] == got[i - 1]) return FrontierMismatch{FrontierMismatch::Kind::kDuplicate, got[i]};
  }
  for (const CostVector& c : expected.costs) {
    if (!std::binary_search(got.begin(), got.end(), c, lexLess)) {
      return FrontierMismatch{FrontierMismatch::Kind::kMissing, c};
    }
  }
  for (const CostVector& c : got) {
    if (std::binary_search(expected.costs.begin(), expected.costs.end(), c, lexLess)) continue;
    bool dominated = std::any_of(expected.costs.begin(), expected.costs.end(),
                                 [&](const CostVector& e) { return dominates(e, c); });
    return FrontierMismatch{
        dominated ? FrontierMismatch::Kind::kDominated : FrontierMismatch::Kind::kExtra, c};
  }
  return std::nullopt;
}

}  // namespace mosp

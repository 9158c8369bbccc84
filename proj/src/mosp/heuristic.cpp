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

#include "mosp/heuristic.hpp"

#include <functional>
#include <istream>
#include <ostream>
#include <queue>
#include <sstream>
#include <string>
#include <thread>
#include <utility>

namespace mosp {

HeuristicTable::HeuristicTable(std::size_t numObjectives, std::vector<CostVector> perState)
    : numObjectives_(numObjectives), perState_(std::move(perState)) {
  for (const CostVector& v : perState_) {
    if (v.size() != numObjectives_) throw DimensionError("HeuristicTable: entry length mismatch");
  }
}

HeuristicTable HeuristicTable::permuted(std::span<const std::size_t> order) const {
  if (order.size() != numObjectives_) throw DimensionError("permuted: order length mismatch");
  std::vector<CostVector> out(perState_.size(), CostVector(numObjectives_));
  for (std::size_t s = 0; s < perState_.size(); ++s) {
    for (std::size_t j = 0; j < order.size(); ++j) out[s][j] = perState_[s][order[j]];
  }
  return HeuristicTable(numObjectives_, std::move(out));
}

std::vector<Cost> reverseDijkstra(const Graph& graph, StateId goal, std::size_t objective) {
  using Entry = std::pair<Cost, StateId>;
  std::vector<Cost> dist(graph.numStates(), kInfiniteCost);
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;
  dist[goal] = 0;
  queue.emplace(0, goal);
  while (!queue.empty()) {
    auto [d, v] = queue.top();
    queue.pop();
    if (d != dist[v]) continue;
    for (const Arc& in : graph.predecessors(v)) {
      Cost nd = d + in.cost[objective];
      if (nd < dist[in.target]) {
        dist[in.target] = nd;
        queue.emplace(nd, in.target);
      }
    }
  }
  return dist;
}

HeuristicTable computeHeuristic(const Graph& graph, StateId goal, bool parallel) {
  if (!graph.isValidState(goal)) throw GraphError("heuristic: goal state out of range");
  const std::size_t k = graph.numObjectives();
  std::vector<std::vector<Cost>> columns(k);
  if (parallel && k > 1) {
    std::vector<std::jthread> workers;
    workers.reserve(k);
    for (std::size_t i = 0; i < k; ++i) {
      workers.emplace_back([&, i] { columns[i] = reverseDijkstra(graph, goal, i); });
    }
  } else {
    for (std::size_t i = 0; i < k; ++i) columns[i] = reverseDijkstra(graph, goal, i);
  }
  std::vector<CostVector> perState(graph.numStates(), CostVector(k));
  for (std::size_t s = 0; s < graph.numStates(); ++s) {
    for (std::size_t i = 0; i < k; ++i) perState[s][i] = columns[i][s];
  }
  return HeuristicTable(k, std::move(perState));
}

void saveHeuristic(std::ostream& out, const HeuristicTable& table, std::uint64_t graphFingerprint,
                   StateId goal) {
  out << "mosp-heuristic," << graphFingerprint << ',' << goal + 1 << ',' << table.numStates()
      << ',' << table.numObjectives() << '\n';
  for (StateId s = 0; s < table.numStates(); ++s) {
    if (!table.reachesGoal(s)) {
      out << "inf\n";
      continue;
    }
    const CostVector& h = table[s];
    for (std::size_t i = 0; i < h.size(); ++i) {
      if (i) out << ',';
      out << h[i];
    }
    out << '\n';
  }
}

std::optional<HeuristicTable> loadHeuristic(std::istream& in, std::uint64_t graphFingerprint,
                                            StateId goal) {
  std::string line;
  if (!std::getline(in, line)) throw GraphError("heuristic cache: empty file");
  std::istringstream header(line);
  std::string tag;
  std::uint64_t fingerprint = 0;
  std::size_t goalId = 0, n = 0, k = 0;
  char c1 = 0, c2 = 0, c3 = 0;
  std::getline(header, tag, ',');
  header >> fingerprint >> c1 >> goalId >> c2 >> n >> c3 >> k;
  if (tag != "mosp-heuristic" || !header || c1 != ',' || c2 != ',' || c3 != ',') {
    throw GraphError("heuristic cache: bad header");
  }
  if (fingerprint != graphFingerprint || goalId != static_cast<std::size_t>(goal) + 1) {
    return std::nullopt;
  }
  if (k < 1 || k > kMaxObjectives) throw GraphError("heuristic cache: bad objective count");
  std::vector<CostVector> perState;
  perState.reserve(n);
  for (std::size_t s = 0; s < n; ++s) {
    if (!std::getline(in, line)) throw GraphError("heuristic cache: truncated file");
    CostVector h(k);
    if (line == "inf") {
      for (std::size_t i = 0; i < k; ++i) h[i] = kInfiniteCost;
    } else {
      std::istringstream row(line);
      for (std::size_t i = 0; i < k; ++i) {
        char sep = ',';
        if (i) row >> sep;
        row >> h[i];
        if (!row || sep != ',') {
          throw GraphError("heuristic cache: malformed row " + std::to_string(s + 2));
        }
      }
    }
    perState.push_back(h);
  }
  return HeuristicTable(k, std::move(perState));
}

}  // namespace mosp

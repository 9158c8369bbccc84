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

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mosp/core.hpp"

namespace mosp {

/// Any failure to read, compose or generate a graph.
class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed .gr input. what() carries the 1-based line number.
class ParseError : public GraphError {
 public:
  ParseError(std::size_t line, const std::string& message);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

struct Arc {
  StateId target;
  CostVector cost;
};

struct ArcSpec {
  StateId source;
  StateId target;
  CostVector cost;
};

/// Immutable directed multi-cost graph in compressed adjacency form.
///
/// Forward and reverse adjacency are both materialised. In the reverse view
/// Arc::target holds the source of the original arc.
class Graph {
 public:
  Graph() = default;
  Graph(std::size_t numStates, std::size_t numObjectives, std::vector<ArcSpec> arcs);

  std::size_t numStates() const { return numStates_; }
  std::size_t numObjectives() const { return numObjectives_; }
  std::size_t numArcs() const { return arcs_.size(); }

  std::span<const Arc> successors(StateId u) const {
    return {forward_.data() + forwardOffset_[u], forward_.data() + forwardOffset_[u + 1]};
  }
  std::span<const Arc> predecessors(StateId v) const {
    return {reverse_.data() + reverseOffset_[v], reverse_.data() + reverseOffset_[v + 1]};
  }
  std::size_t outDegree(StateId u) const { return forwardOffset_[u + 1] - forwardOffset_[u]; }

  /// Arcs in construction order.
  const std::vector<ArcSpec>& arcs() const { return arcs_; }

  bool isValidState(StateId s) const { return s < numStates_; }

  /// Copy with every cost vector reordered: entry j of the result is entry
  /// order[j] of the original.
  Graph permuted(std::span<const std::size_t> order) const;

  /// Copy with forward and reverse adjacency swapped.
  Graph transposed() const;

  /// FNV-1a over the state count, objective count and arc list.
  std::uint64_t fingerprint() const;

 private:
  std::size_t numStates_ = 0;
  std::size_t numObjectives_ = 0;
  std::vector<ArcSpec> arcs_;
  std::vector<std::size_t> forwardOffset_;
  std::vector<Arc> forward_;
  std::vector<std::size_t> reverseOffset_;
  std::vector<Arc> reverse_;
};

struct ProblemInstance {
  Graph graph;
  StateId start = 0;
  StateId goal = 0;

  /// Throws GraphError unless start and goal are valid states.
  void validate() const;
};

/// Contents of a DIMACS .gr file. Plain files carry one weight per arc; the
/// extended form `a u v w1 ... wk` carries several.
struct GrFile {
  std::size_t numStates = 0;
  std::size_t weightsPerArc = 0;
  std::vector<StateId> sources;  // 0-based
  std::vector<StateId> targets;  // 0-based
  std::vector<Cost> weights;     // weightsPerArc entries per arc, row-major
  std::optional<StateId> start;  // from a `c mosp instance <s> <g>` comment
  std::optional<StateId> goal;

  std::size_t numArcs() const { return sources.size(); }
  std::span<const Cost> weightsOf(std::size_t arc) const {
    return {weights.data() + arc * weightsPerArc, weightsPerArc};
  }
};

GrFile parseGr(std::istream& in);
GrFile readGrFile(const std::string& path);

/// Single-weight DIMACS reader; rejects extended files.
GrFile parseDimacsGr(std::istream& in);

enum class SyntheticCost { kOutDegree, kUnit };

std::optional<SyntheticCost> parseSyntheticCost(std::string_view name);

/// Concatenates the weights of topology-identical files, then the synthetic
/// costs, into one k-objective graph.
Graph composeMultiCost(std::span<const GrFile> files, std::span<const SyntheticCost> synthetic);

struct Endpoints {
  StateId start;
  StateId goal;
};

/// Writes the extended .gr form. Output is a pure function of the arguments.
void writeExtendedGr(std::ostream& out, const Graph& graph,
                     std::optional<Endpoints> endpoints = std::nullopt);
void writeExtendedGr(std::ostream& out, const ProblemInstance& instance);

/// Uniformly random arcs (no self loops) with costs in [1, maxCost].
/// Start and goal are distinct and goal is reachable from start.
ProblemInstance generateRandom(std::size_t numStates, double avgOutDegree, std::size_t k,
                               Cost maxCost, std::uint64_t seed);

/// 4-connected grid, both directions per adjacency, start top-left and
/// goal bottom-right.
ProblemInstance generateGrid(std::size_t width, std::size_t height, std::size_t k, Cost maxCost,
                             std::uint64_t seed);

/// True iff goal is reachable from start.
bool isReachable(const Graph& graph, StateId start, StateId goal);

}  // namespace mosp

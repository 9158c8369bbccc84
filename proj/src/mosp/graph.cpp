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

#include "mosp/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <random>
#include <string_view>

namespace mosp {

ParseError::ParseError(std::size_t line, const std::string& message)
    : GraphError("line " + std::to_string(line) + ": " + message), line_(line) {}

namespace {

void buildAdjacency(std::size_t numStates, const std::vector<ArcSpec>& arcs, bool reverse,
                    std::vector<std::size_t>& offset, std::vector<Arc>& out) {
  offset.assign(numStates + 1, 0);
  for (const ArcSpec& a : arcs) ++offset[(reverse ? a.target : a.source) + 1];
  for (std::size_t i = 0; i < numStates; ++i) offset[i + 1] += offset[i];
  out.resize(arcs.size());
  std::vector<std::size_t> cursor(offset.begin(), offset.end() - 1);
  for (const ArcSpec& a : arcs) {
    StateId from = reverse ? a.target : a.source;
    StateId to = reverse ? a.source : a.target;
    out[cursor[from]++] = Arc{to, a.cost};
  }
}

constexpr std::uint64_t kFnvOffset = 14695981039346656037ull;
constexpr std::uint64_t kFnvPrime = 1099511628211ull;

void fnvMix(std::uint64_t& h, std::uint64_t value) {
  for (int i = 0; i < 8; ++i) {
    h ^= (value >> (8 * i)) & 0xffu;
    h *= kFnvPrime;
  }
}

std::vector<std::string_view> splitWhitespace(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) tokens.push_back(line.substr(i, j - i));
    i = j;
  }
  return tokens;
}

template <class T>
bool parseUnsigned(std::string_view token, T& out) {
  if (token.empty() || token.front() == '+' || token.front() == '-') return false;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), out);
  return ec == std::errc() && ptr == token.data() + token.size();
}

}  // namespace

Graph::Graph(std::size_t numStates, std::size_t numObjectives, std::vector<ArcSpec> arcs)
    : numStates_(numStates), numObjectives_(numObjectives), arcs_(std::move(arcs)) {
  if (numObjectives_ > kMaxObjectives) {
    throw GraphError("graph has " + std::to_string(numObjectives_) +
                     " objectives; at most " + std::to_string(kMaxObjectives) + " supported");
  }
  if (numStates_ >= kNoState) throw GraphError("too many states");
  for (std::size_t i = 0; i < arcs_.size(); ++i) {
    const ArcSpec& a = arcs_[i];
    if (a.source >= numStates_ || a.target >= numStates_) {
      throw GraphError("arc " + std::to_string(i + 1) + " references an unknown state");
    }
    if (a.cost.size() != numObjectives_) {
      throw GraphError("arc " + std::to_string(i + 1) + " has " +
                       std::to_string(a.cost.size()) + " costs, expected " +
                       std::to_string(numObjectives_));
    }
    for (Cost c : a.cost) {
      if (c > kMaxEdgeWeight) {
        throw GraphError("arc " + std::to_string(i + 1) + " has a weight above " +
                         std::to_string(kMaxEdgeWeight));
      }
    }
  }
  buildAdjacency(numStates_, arcs_, false, forwardOffset_, forward_);
  buildAdjacency(numStates_, arcs_, true, reverseOffset_, reverse_);
}

Graph Graph::permuted(std::span<const std::size_t> order) const {
  if (order.size() != numObjectives_) throw DimensionError("permuted: order length mismatch");
  std::vector<ArcSpec> arcs = arcs_;
  for (ArcSpec& a : arcs) {
    CostVector c(numObjectives_);
    for (std::size_t j = 0; j < order.size(); ++j) c[j] = a.cost[order[j]];
    a.cost = c;
  }
  return Graph(numStates_, numObjectives_, std::move(arcs));
}

Graph Graph::transposed() const {
  std::vector<ArcSpec> arcs = arcs_;
  for (ArcSpec& a : arcs) std::swap(a.source, a.target);
  return Graph(numStates_, numObjectives_, std::move(arcs));
}

std::uint64_t Graph::fingerprint() const {
  std::uint64_t h = kFnvOffset;
  fnvMix(h, numStates_);
  fnvMix(h, numObjectives_);
  for (const ArcSpec& a : arcs_) {
    fnvMix(h, a.source);
    fnvMix(h, a.target);
    for (Cost c : a.cost) fnvMix(h, c);
  }
  return h;
}

void ProblemInstance::validate() const {
  if (!graph.isValidState(start)) throw GraphError("start state out of range");
  if (!graph.isValidState(goal)) throw GraphError("goal state out of range");
}

GrFile parseGr(std::istream& in) {
  GrFile file;
  bool haveProblem = false;
  std::size_t declaredArcs = 0;
  std::size_t lineNo = 0;
  std::string line;
  while (std::getline(in, line)) {
    ++lineNo;
    auto tokens = splitWhitespace(line);
    if (tokens.empty()) continue;
    std::string_view kind = tokens[0];
    if (kind == "c") {
      // c mosp instance <start> <goal>, 1-based
      if (tokens.size() == 5 && tokens[1] == "mosp" && tokens[2] == "instance") {
        StateId s = 0, g = 0;
        if (parseUnsigned(tokens[3], s) && parseUnsigned(tokens[4], g) && s >= 1 && g >= 1) {
          file.start = s - 1;
          file.goal = g - 1;
        }
      }
      continue;
    }
    if (kind == "p") {
      if (haveProblem) throw ParseError(lineNo, "duplicate problem line");
      if (tokens.size() != 4 || tokens[1] != "sp") {
        throw ParseError(lineNo, "expected 'p sp <n> <m>'");
      }
      if (!parseUnsigned(tokens[2], file.numStates) || !parseUnsigned(tokens[3], declaredArcs)) {
        throw ParseError(lineNo, "non-integer size in problem line");
      }
      if (file.numStates >= kNoState) throw ParseError(lineNo, "too many states");
      haveProblem = true;
      file.sources.reserve(declaredArcs);
      file.targets.reserve(declaredArcs);
      continue;
    }
    if (kind == "a") {
      if (!haveProblem) throw ParseError(lineNo, "arc before problem line");
      if (tokens.size() < 4) throw ParseError(lineNo, "expected 'a <u> <v> <w>...'");
      std::size_t nWeights = tokens.size() - 3;
      if (file.weightsPerArc == 0) {
        if (nWeights > kMaxObjectives) {
          throw ParseError(lineNo, "more than " + std::to_string(kMaxObjectives) + " weights");
        }
        file.weightsPerArc = nWeights;
        file.weights.reserve(declaredArcs * nWeights);
      } else if (nWeights != file.weightsPerArc) {
        throw ParseError(lineNo, "expected " + std::to_string(file.weightsPerArc) +
                                     " weights, found " + std::to_string(nWeights));
      }
      StateId u = 0, v = 0;
      if (!parseUnsigned(tokens[1], u) || !parseUnsigned(tokens[2], v)) {
        throw ParseError(lineNo, "non-integer vertex id");
      }
      if (u < 1 || u > file.numStates || v < 1 || v > file.numStates) {
        throw ParseError(lineNo, "vertex id out of range 1.." + std::to_string(file.numStates));
      }
      for (std::size_t i = 3; i < tokens.size(); ++i) {
        Cost w = 0;
        if (!parseUnsigned(tokens[i], w)) {
          throw ParseError(lineNo, "non-integer weight '" + std::string(tokens[i]) + "'");
        }
        if (w > kMaxEdgeWeight) {
          throw ParseError(lineNo, "weight exceeds " + std::to_string(kMaxEdgeWeight));
        }
        file.weights.push_back(w);
      }
      file.sources.push_back(u - 1);
      file.targets.push_back(v - 1);
      continue;
    }
    throw ParseError(lineNo, "unknown line type '" + std::string(kind) + "'");
  }
  if (!haveProblem) throw ParseError(lineNo, "missing problem line");
  if (file.numArcs() != declaredArcs) {
    throw ParseError(lineNo, "problem line declares " + std::to_string(declaredArcs) +
                                 " arcs, found " + std::to_string(file.numArcs()));
  }
  if (file.start && (*file.start >= file.numStates || *file.goal >= file.numStates)) {
    file.start.reset();
    file.goal.reset();
  }
  return file;
}

GrFile parseDimacsGr(std::istream& in) {
  GrFile file = parseGr(in);
  if (file.numArcs() > 0 && file.weightsPerArc != 1) {
    throw GraphError("expected one weight per arc, found " + std::to_string(file.weightsPerArc));
  }
  return file;
}

GrFile readGrFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw GraphError("cannot open '" + path + "'");
  try {
    return parseGr(in);
  } catch (const ParseError& e) {
    throw GraphError(path + ": " + e.what());
  }
}

std::optional<SyntheticCost> parseSyntheticCost(std::string_view name) {
  if (name == "outdegree") return SyntheticCost::kOutDegree;
  if (name == "unit") return SyntheticCost::kUnit;
  return std::nullopt;
}

Graph composeMultiCost(std::span<const GrFile> files, std::span<const SyntheticCost> synthetic) {
  if (files.empty()) throw GraphError("compose: at least one .gr file is required");
  const GrFile& base = files.front();
  std::size_t k = synthetic.size();
  for (const GrFile& f : files) k += f.numArcs() > 0 ? f.weightsPerArc : 1;
  if (k < 2) throw GraphError("compose: need at least 2 objectives, got " + std::to_string(k));
  if (k > kMaxObjectives) {
    throw GraphError("compose: " + std::to_string(k) + " objectives exceeds " +
                     std::to_string(kMaxObjectives));
  }
  for (std::size_t fi = 1; fi < files.size(); ++fi) {
    const GrFile& f = files[fi];
    if (f.numStates != base.numStates) {
      throw GraphError("compose: file " + std::to_string(fi + 1) + " has " +
                       std::to_string(f.numStates) + " states, file 1 has " +
                       std::to_string(base.numStates));
    }
    std::size_t common = std::min(f.numArcs(), base.numArcs());
    for (std::size_t a = 0; a < common; ++a) {
      if (f.sources[a] != base.sources[a] || f.targets[a] != base.targets[a]) {
        throw GraphError("compose: topology mismatch at arc " + std::to_string(a + 1) + ": (" +
                         std::to_string(base.sources[a] + 1) + "," +
                         std::to_string(base.targets[a] + 1) + ") in file 1 vs (" +
                         std::to_string(f.sources[a] + 1) + "," +
                         std::to_string(f.targets[a] + 1) + ") in file " +
                         std::to_string(fi + 1));
      }
    }
    if (f.numArcs() != base.numArcs()) {
      throw GraphError("compose: topology mismatch at arc " + std::to_string(common + 1) +
                       ": file 1 has " + std::to_string(base.numArcs()) + " arcs, file " +
                       std::to_string(fi + 1) + " has " + std::to_string(f.numArcs()));
    }
  }

  std::vector<std::size_t> outDegree(base.numStates, 0);
  for (StateId s : base.sources) ++outDegree[s];

  std::vector<ArcSpec> arcs;
  arcs.reserve(base.numArcs());
  for (std::size_t a = 0; a < base.numArcs(); ++a) {
    CostVector cost(k);
    std::size_t j = 0;
    for (const GrFile& f : files) {
      for (Cost w : f.weightsOf(a)) cost[j++] = w;
    }
    for (SyntheticCost s : synthetic) {
      switch (s) {
        case SyntheticCost::kUnit:
          cost[j++] = 1;
          break;
        case SyntheticCost::kOutDegree:
          // average of both endpoint degrees, ties round up
          cost[j++] = (outDegree[base.sources[a]] + outDegree[base.targets[a]] + 1) / 2;
          break;
      }
    }
    arcs.push_back(ArcSpec{base.sources[a], base.targets[a], cost});
  }
  return Graph(base.numStates, k, std::move(arcs));
}

void writeExtendedGr(std::ostream& out, const Graph& graph, std::optional<Endpoints> endpoints) {
  out << "c mosp extended graph k " << graph.numObjectives() << '\n';
  if (endpoints) {
    out << "c mosp instance " << endpoints->start + 1 << ' ' << endpoints->goal + 1 << '\n';
  }
  out << "p sp " << graph.numStates() << ' ' << graph.numArcs() << '\n';
  for (const ArcSpec& a : graph.arcs()) {
    out << "a " << a.source + 1 << ' ' << a.target + 1;
    for (Cost c : a.cost) out << ' ' << c;
    out << '\n';
  }
}

void writeExtendedGr(std::ostream& out, const ProblemInstance& instance) {
  writeExtendedGr(out, instance.graph, Endpoints{instance.start, instance.goal});
}

bool isReachable(const Graph& graph, StateId start, StateId goal) {
  std::vector<char> seen(graph.numStates(), 0);
  std::vector<StateId> stack{start};
  seen[start] = 1;
  while (!stack.empty()) {
    StateId u = stack.back();
    stack.pop_back();
    if (u == goal) return true;
    for (const Arc& a : graph.successors(u)) {
      if (!seen[a.target]) {
        seen[a.target] = 1;
        stack.push_back(a.target);
      }
    }
  }
  return false;
}

namespace {

constexpr int kGraphAttempts = 32;
constexpr int kPairAttempts = 64;

void checkGeneratorArgs(std::size_t k, Cost maxCost) {
  if (k < 2 || k > kMaxObjectives) {
    throw GraphError("generate: k must be in [2, " + std::to_string(kMaxObjectives) + "]");
  }
  if (maxCost < 1 || maxCost > kMaxEdgeWeight) throw GraphError("generate: maxCost out of range");
}

CostVector randomCost(std::mt19937_64& rng, std::size_t k, Cost maxCost) {
  std::uniform_int_distribution<Cost> dist(1, maxCost);
  CostVector c(k);
  for (std::size_t i = 0; i < k; ++i) c[i] = dist(rng);
  return c;
}

}  // namespace

ProblemInstance generateRandom(std::size_t numStates, double avgOutDegree, std::size_t k,
                               Cost maxCost, std::uint64_t seed) {
  if (numStates < 2) throw GraphError("generate: numStates must be >= 2");
  if (!(avgOutDegree >= 1.0)) throw GraphError("generate: avgOutDegree must be >= 1");
  checkGeneratorArgs(k, maxCost);

  std::mt19937_64 rng(seed);
  const auto numArcs = static_cast<std::size_t>(static_cast<double>(numStates) * avgOutDegree + 0.5);
  std::uniform_int_distribution<StateId> pick(0, static_cast<StateId>(numStates - 1));
  std::uniform_int_distribution<StateId> pickOther(0, static_cast<StateId>(numStates - 2));

  for (int attempt = 0; attempt < kGraphAttempts; ++attempt) {
    std::vector<ArcSpec> arcs;
    arcs.reserve(numArcs);
    for (std::size_t i = 0; i < numArcs; ++i) {
      StateId u = pick(rng);
      StateId v = pickOther(rng);
      if (v >= u) ++v;
      arcs.push_back(ArcSpec{u, v, randomCost(rng, k, maxCost)});
    }
    Graph graph(numStates, k, std::move(arcs));
    for (int p = 0; p < kPairAttempts; ++p) {
      StateId start = pick(rng);
      StateId goal = pickOther(rng);
      if (goal >= start) ++goal;
      if (isReachable(graph, start, goal)) return ProblemInstance{std::move(graph), start, goal};
    }
  }
  throw GraphError("generate: no reachable start/goal pair after " +
                   std::to_string(kGraphAttempts) + " graphs");
}

ProblemInstance generateGrid(std::size_t width, std::size_t height, std::size_t k, Cost maxCost,
                             std::uint64_t seed) {
  if (width < 1 || height < 1 || width * height < 2) {
    throw GraphError("generate: grid needs at least two cells");
  }
  checkGeneratorArgs(k, maxCost);
  std::mt19937_64 rng(seed);
  auto id = [width](std::size_t r, std::size_t c) { return static_cast<StateId>(r * width + c); };
  std::vector<ArcSpec> arcs;
  for (std::size_t r = 0; r < height; ++r) {
    for (std::size_t c = 0; c < width; ++c) {
      if (c + 1 < width) {
        arcs.push_back(ArcSpec{id(r, c), id(r, c + 1), randomCost(rng, k, maxCost)});
        arcs.push_back(ArcSpec{id(r, c + 1), id(r, c), randomCost(rng, k, maxCost)});
      }
      if (r + 1 < height) {
        arcs.push_back(ArcSpec{id(r, c), id(r + 1, c), randomCost(rng, k, maxCost)});
        arcs.push_back(ArcSpec{id(r + 1, c), id(r, c), randomCost(rng, k, maxCost)});
      }
    }
  }
  Graph graph(width * height, k, std::move(arcs));
  return ProblemInstance{std::move(graph), 0, static_cast<StateId>(width * height - 1)};
}

}  // namespace mosp

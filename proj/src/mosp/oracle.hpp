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

// Brute-force reference frontiers. Nothing here shares code with the search
// engines beyond the cost-vector vocabulary.

#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "mosp/core.hpp"
#include "mosp/graph.hpp"

namespace mosp {

class OracleRefused : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Lexicographically sorted, cost-unique, pairwise non-dominated costs.
struct ParetoFrontier {
  std::vector<CostVector> costs;

  std::size_t size() const { return costs.size(); }
  bool empty() const { return costs.empty(); }
  friend bool operator==(const ParetoFrontier&, const ParetoFrontier&) = default;
};

/// Sorts, removes duplicates and drops dominated vectors.
ParetoFrontier paretoFilter(std::vector<CostVector> costs);

/// Label-correcting fixpoint over per-state non-dominated cost sets. No
/// heuristic, no truncation, no ordering beyond FIFO.
ParetoFrontier labelCorrectingPareto(const ProblemInstance& instance);

/// Exhaustive simple-path enumeration. Refuses graphs above `maxStates`.
ParetoFrontier enumeratePathsPareto(const ProblemInstance& instance, std::size_t maxStates = 12);

// Frontier text form: one vector per line, space-separated integers.
void writeFrontier(std::ostream& out, std::span<const CostVector> costs);
std::vector<CostVector> readFrontier(std::istream& in);

struct FrontierMismatch {
  enum class Kind { kMissing, kExtra, kDominated, kDuplicate };
  Kind kind;
  CostVector cost;

  std::string describe() const;
};

/// First difference between a reference frontier and an engine's output,
/// or nullopt when they are equal as sets and `actual` has no duplicates.
std::optional<FrontierMismatch> compareFrontiers(const ParetoFrontier& expected,
                                                 std::span<const CostVector> actual);

}  // namespace mosp

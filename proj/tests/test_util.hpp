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

// Small generators for property tests.

#pragma once

#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "mosp/core.hpp"
#include "mosp/graph.hpp"

namespace mosp::testing {

inline CostVector randomVector(std::mt19937_64& rng, std::size_t k, Cost maxEntry) {
  std::uniform_int_distribution<Cost> dist(0, maxEntry);
  CostVector v(k);
  for (std::size_t i = 0; i < k; ++i) v[i] = dist(rng);
  return v;
}

inline ProblemInstance instanceFromArcs(std::size_t n, std::size_t k, std::vector<ArcSpec> arcs,
                                        StateId start, StateId goal) {
  return ProblemInstance{Graph(n, k, std::move(arcs)), start, goal};
}

inline GrFile parseText(const std::string& text) {
  std::istringstream in(text);
  return parseGr(in);
}

// The four-state diamond: s->a (1,1), s->b (2,0), a->g (0,2), b->g (1,1).
inline ProblemInstance diamond() {
  return instanceFromArcs(4, 2,
                          {{0, 1, {1, 1}}, {0, 2, {2, 0}}, {1, 3, {0, 2}}, {2, 3, {1, 1}}}, 0, 3);
}

}  // namespace mosp::testing

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

#include "mosp/mosp.h"

#include <algorithm>
#include <chrono>
#include <cstring>
#include <fstream>
#include <memory>
#include <new>
#include <optional>
#include <string>
#include <vector>

#include "mosp/graph.hpp"
#include "mosp/heuristic.hpp"
#include "mosp/oracle.hpp"
#include "mosp/solver.hpp"

struct mosp_graph {
  mosp::Graph graph;
  std::optional<mosp::Endpoints> endpoints;
};

struct mosp_heuristic {
  mosp::HeuristicTable table;
  std::uint64_t fingerprint = 0;
  mosp::StateId goal = 0;
  double seconds = 0.0;
};

struct mosp_result {
  mosp::SolveResult result;
  std::size_t numObjectives = 0;
  double heuristicSeconds = 0.0;
};

struct mosp_frontier {
  mosp::ParetoFrontier frontier;
  std::size_t numObjectives = 0;
};

namespace {

thread_local std::string lastError;

mosp_status fail(mosp_status status, const std::string& message) {
  lastError = message;
  return status;
}

// Maps exceptions escaping the core to status codes. Nothing may unwind
// across the C boundary.
template <class F>
mosp_status guarded(F&& body) {
  try {
    lastError.clear();
    return body();
  } catch (const mosp::ParseError& e) {
    return fail(MOSP_ERR_PARSE, e.what());
  } catch (const mosp::GraphError& e) {
    return fail(MOSP_ERR_GRAPH, e.what());
  } catch (const mosp::OracleRefused& e) {
    return fail(MOSP_ERR_ORACLE_REFUSED, e.what());
  } catch (const mosp::DimensionError& e) {
    return fail(MOSP_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(MOSP_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(MOSP_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(MOSP_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(MOSP_ERR_INTERNAL, "unknown error");
  }
}

mosp::Graph graphFromFile(const mosp::GrFile& file) {
  std::vector<mosp::ArcSpec> arcs;
  arcs.reserve(file.numArcs());
  for (std::size_t i = 0; i < file.numArcs(); ++i) {
    arcs.push_back({file.sources[i], file.targets[i], mosp::CostVector(file.weightsOf(i))});
  }
  return mosp::Graph(file.numStates, file.weightsPerArc, std::move(arcs));
}

mosp_stats toC(const mosp::SearchStats& s) {
  return mosp_stats{s.extractions,       s.expansions,     s.generations,
                    s.prunedByGTr,       s.prunedBySolutions, s.quickPruneHits,
                    s.queuePeak,         s.elapsedSeconds};
}

mosp::ProblemInstance instanceOf(const mosp_graph* g, uint32_t start, uint32_t goal) {
  mosp::ProblemInstance instance{g->graph, start, goal};
  instance.validate();
  return instance;
}

}  // namespace

extern "C" {

const char* mosp_last_error(void) { return lastError.c_str(); }

const char* mosp_status_string(mosp_status status) {
  switch (status) {
    case MOSP_OK: return "ok";
    case MOSP_ERR_INVALID_ARGUMENT: return "invalid argument";
    case MOSP_ERR_IO: return "i/o error";
    case MOSP_ERR_PARSE: return "parse error";
    case MOSP_ERR_GRAPH: return "graph error";
    case MOSP_ERR_NOT_FOUND: return "not found";
    case MOSP_ERR_ORACLE_REFUSED: return "oracle refused";
    case MOSP_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

mosp_status mosp_graph_read(const char* path, mosp_graph** out) {
  if (!path || !out) return fail(MOSP_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    std::ifstream in(path);
    if (!in) return fail(MOSP_ERR_IO, std::string("cannot open ") + path);
    const mosp::GrFile file = mosp::parseGr(in);
    auto g = std::make_unique<mosp_graph>();
    g->graph = graphFromFile(file);
    if (file.start && file.goal) g->endpoints = mosp::Endpoints{*file.start, *file.goal};
    *out = g.release();
    return MOSP_OK;
  });
}

mosp_status mosp_graph_compose(const char* const* paths, size_t num_paths,
                               const char* const* synthetic, size_t num_synthetic,
                               mosp_graph** out) {
  if (!out || (num_paths && !paths) || (num_synthetic && !synthetic)) {
    return fail(MOSP_ERR_INVALID_ARGUMENT, "null argument");
  }
  return guarded([&] {
    std::vector<mosp::GrFile> files;
    for (size_t i = 0; i < num_paths; ++i) {
      std::ifstream in(paths[i]);
      if (!in) return fail(MOSP_ERR_IO, std::string("cannot open ") + paths[i]);
      try {
        files.push_back(mosp::parseGr(in));
      } catch (const mosp::ParseError& e) {
        return fail(MOSP_ERR_PARSE, std::string(paths[i]) + ": " + e.what());
      }
    }
    std::vector<mosp::SyntheticCost> costs;
    for (size_t i = 0; i < num_synthetic; ++i) {
      auto c = mosp::parseSyntheticCost(synthetic[i]);
      if (!c) {
        return fail(MOSP_ERR_INVALID_ARGUMENT,
                    std::string("unknown synthetic cost '") + synthetic[i] + "'");
      }
      costs.push_back(*c);
    }
    auto g = std::make_unique<mosp_graph>();
    g->graph = mosp::composeMultiCost(files, costs);
    *out = g.release();
    return MOSP_OK;
  });
}

mosp_status mosp_graph_generate_random(size_t num_states, double avg_out_degree, size_t k,
                                       uint64_t max_cost, uint64_t seed, mosp_graph** out) {
  if (!out) return fail(MOSP_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    mosp::ProblemInstance p = mosp::generateRandom(num_states, avg_out_degree, k, max_cost, seed);
    *out = new mosp_graph{std::move(p.graph), mosp::Endpoints{p.start, p.goal}};
    return MOSP_OK;
  });
}

mosp_status mosp_graph_generate_grid(size_t width, size_t height, size_t k, uint64_t max_cost,
                                     uint64_t seed, mosp_graph** out) {
  if (!out) return fail(MOSP_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    mosp::ProblemInstance p = mosp::generateGrid(width, height, k, max_cost, seed);
    *out = new mosp_graph{std::move(p.graph), mosp::Endpoints{p.start, p.goal}};
    return MOSP_OK;
  });
}

mosp_status mosp_graph_write(const mosp_graph* graph, const char* path) {
  if (!graph || !path) return fail(MOSP_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    std::ofstream out(path, std::ios::binary);
    if (!out) return fail(MOSP_ERR_IO, std::string("cannot write ") + path);
    mosp::writeExtendedGr(out, graph->graph, graph->endpoints);
    out.flush();
    if (!out) return fail(MOSP_ERR_IO, std::string("write failed: ") + path);
    return MOSP_OK;
  });
}

size_t mosp_graph_num_states(const mosp_graph* graph) {
  return graph ? graph->graph.numStates() : 0;
}
size_t mosp_graph_num_arcs(const mosp_graph* graph) { return graph ? graph->graph.numArcs() : 0; }
size_t mosp_graph_num_objectives(const mosp_graph* graph) {
  return graph ? graph->graph.numObjectives() : 0;
}
uint64_t mosp_graph_fingerprint(const mosp_graph* graph) {
  return graph ? graph->graph.fingerprint() : 0;
}

int mosp_graph_endpoints(const mosp_graph* graph, uint32_t* start, uint32_t* goal) {
  if (!graph || !graph->endpoints) return 0;
  if (start) *start = graph->endpoints->start;
  if (goal) *goal = graph->endpoints->goal;
  return 1;
}

mosp_status mosp_graph_set_endpoints(mosp_graph* graph, uint32_t start, uint32_t goal) {
  if (!graph) return fail(MOSP_ERR_INVALID_ARGUMENT, "null argument");
  if (!graph->graph.isValidState(start) || !graph->graph.isValidState(goal)) {
    return fail(MOSP_ERR_INVALID_ARGUMENT, "endpoint out of range");
  }
  graph->endpoints = mosp::Endpoints{start, goal};
  return MOSP_OK;
}

void mosp_graph_free(mosp_graph* graph) { delete graph; }

mosp_status mosp_heuristic_compute(const mosp_graph* graph, uint32_t goal, mosp_heuristic** out) {
  if (!graph || !out) return fail(MOSP_ERR_INVALID_ARGUMENT, "null argument");
  if (!graph->graph.isValidState(goal)) return fail(MOSP_ERR_INVALID_ARGUMENT, "goal out of range");
  return guarded([&] {
    const auto began = std::chrono::steady_clock::now();
    auto h = std::make_unique<mosp_heuristic>();
    h->table = mosp::computeHeuristic(graph->graph, goal);
    h->fingerprint = graph->graph.fingerprint();
    h->goal = goal;
    h->seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - began).count();
    *out = h.release();
    return MOSP_OK;
  });
}

mosp_status mosp_heuristic_save(const mosp_heuristic* heuristic, const char* path) {
  if (!heuristic || !path) return fail(MOSP_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    std::ofstream out(path);
    if (!out) return fail(MOSP_ERR_IO, std::string("cannot write ") + path);
    mosp::saveHeuristic(out, heuristic->table, heuristic->fingerprint, heuristic->goal);
    out.flush();
    if (!out) return fail(MOSP_ERR_IO, std::string("write failed: ") + path);
    return MOSP_OK;
  });
}

mosp_status mosp_heuristic_load(const mosp_graph* graph, uint32_t goal, const char* path,
                                mosp_heuristic** out) {
  if (!graph || !path || !out) return fail(MOSP_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    std::ifstream in(path);
    if (!in) return fail(MOSP_ERR_IO, std::string("cannot open ") + path);
    const std::uint64_t fp = graph->graph.fingerprint();
    auto table = mosp::loadHeuristic(in, fp, goal);
    if (!table) return fail(MOSP_ERR_NOT_FOUND, "heuristic cache does not match graph and goal");
    if (table->numStates() != graph->graph.numStates() ||
        table->numObjectives() != graph->graph.numObjectives()) {
      return fail(MOSP_ERR_NOT_FOUND, "heuristic cache has the wrong shape");
    }
    *out = new mosp_heuristic{std::move(*table), fp, goal, 0.0};
    return MOSP_OK;
  });
}

double mosp_heuristic_seconds(const mosp_heuristic* heuristic) {
  return heuristic ? heuristic->seconds : 0.0;
}

void mosp_heuristic_free(mosp_heuristic* heuristic) { delete heuristic; }

void mosp_solve_options_init(mosp_solve_options* options) {
  if (!options) return;
  options->algorithm = MOSP_ALG_LTMOA;
  options->upper_bounds = MOSP_UB_FULL;
  options->timing = MOSP_TIMING_LAZY;
  options->timeout_seconds = -1.0;
  options->quick_prune = 1;
  options->rotation = 0;
  options->check_invariants = 0;
}

mosp_status mosp_parse_algorithm(const char* name, mosp_algorithm* out) {
  if (!name || !out) return fail(MOSP_ERR_INVALID_ARGUMENT, "null argument");
  auto a = mosp::parseAlgorithm(name);
  if (!a) return fail(MOSP_ERR_INVALID_ARGUMENT, std::string("unknown algorithm '") + name + "'");
  *out = static_cast<mosp_algorithm>(*a);
  return MOSP_OK;
}

const char* mosp_algorithm_name(mosp_algorithm algorithm) {
  // the names are static string literals, so data() is null-terminated
  return mosp::toString(static_cast<mosp::Algorithm>(algorithm)).data();
}

mosp_status mosp_solve(const mosp_graph* graph, uint32_t start, uint32_t goal,
                       const mosp_heuristic* heuristic, const mosp_solve_options* options,
                       mosp_result** out) {
  if (!graph || !out) return fail(MOSP_ERR_INVALID_ARGUMENT, "null argument");
  mosp_solve_options defaults;
  mosp_solve_options_init(&defaults);
  const mosp_solve_options& o = options ? *options : defaults;
  if (o.algorithm < MOSP_ALG_LTMOA || o.algorithm > MOSP_ALG_NWMOA_PAR) {
    return fail(MOSP_ERR_INVALID_ARGUMENT, "unknown algorithm");
  }
  if (graph->graph.numObjectives() < 2) {
    return fail(MOSP_ERR_INVALID_ARGUMENT, "at least two objectives required");
  }
  if (heuristic && heuristic->goal != goal) {
    return fail(MOSP_ERR_INVALID_ARGUMENT, "heuristic was computed for another goal");
  }
  return guarded([&] {
    const mosp::ProblemInstance instance = instanceOf(graph, start, goal);
    auto r = std::make_unique<mosp_result>();
    r->numObjectives = graph->graph.numObjectives();
    mosp::HeuristicTable computed;
    const mosp::HeuristicTable* table = nullptr;
    if (heuristic) {
      table = &heuristic->table;
    } else {
      const auto began = std::chrono::steady_clock::now();
      computed = mosp::computeHeuristic(instance.graph, goal);
      r->heuristicSeconds =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - began).count();
      table = &computed;
    }
    mosp::SolveOptions so;
    so.algorithm = static_cast<mosp::Algorithm>(o.algorithm);
    so.upperBounds = o.upper_bounds == MOSP_UB_NONE ? mosp::UpperBoundMode::kNone
                                                    : mosp::UpperBoundMode::kFull;
    so.timing = o.timing == MOSP_TIMING_EAGER ? mosp::DominanceTiming::kEager
                                              : mosp::DominanceTiming::kLazy;
    so.quickPrune = o.quick_prune != 0;
    if (o.timeout_seconds >= 0.0) so.timeoutSeconds = o.timeout_seconds;
    so.rotation = o.rotation;
    so.checkInvariants = o.check_invariants != 0;
    r->result = mosp::solve(instance, *table, so);
    *out = r.release();
    return MOSP_OK;
  });
}

int mosp_result_timed_out(const mosp_result* result) {
  return result && result->result.timedOut ? 1 : 0;
}
size_t mosp_result_num_objectives(const mosp_result* result) {
  return result ? result->numObjectives : 0;
}
size_t mosp_result_num_solutions(const mosp_result* result) {
  return result ? result->result.solutions.size() : 0;
}

mosp_status mosp_result_cost(const mosp_result* result, size_t index, uint64_t* cost) {
  if (!result || !cost) return fail(MOSP_ERR_INVALID_ARGUMENT, "null argument");
  if (index >= result->result.solutions.size()) {
    return fail(MOSP_ERR_INVALID_ARGUMENT, "solution index out of range");
  }
  const mosp::CostVector& c = result->result.solutions[index].cost;
  std::copy(c.begin(), c.end(), cost);
  return MOSP_OK;
}

size_t mosp_result_path_length(const mosp_result* result, size_t index) {
  if (!result || index >= result->result.solutions.size()) return 0;
  return result->result.solutions[index].path.size();
}

mosp_status mosp_result_path(const mosp_result* result, size_t index, uint32_t* states) {
  if (!result || !states) return fail(MOSP_ERR_INVALID_ARGUMENT, "null argument");
  if (index >= result->result.solutions.size()) {
    return fail(MOSP_ERR_INVALID_ARGUMENT, "solution index out of range");
  }
  const auto& path = result->result.solutions[index].path;
  std::copy(path.begin(), path.end(), states);
  return MOSP_OK;
}

void mosp_result_stats(const mosp_result* result, mosp_stats* stats) {
  if (!result || !stats) return;
  *stats = toC(result->result.stats);
}

size_t mosp_result_num_searches(const mosp_result* result) {
  return result ? result->result.perSearch.size() : 0;
}

mosp_status mosp_result_search_stats(const mosp_result* result, size_t search,
                                     mosp_stats* stats) {
  if (!result || !stats) return fail(MOSP_ERR_INVALID_ARGUMENT, "null argument");
  if (search >= result->result.perSearch.size()) {
    return fail(MOSP_ERR_INVALID_ARGUMENT, "search index out of range");
  }
  *stats = toC(result->result.perSearch[search]);
  return MOSP_OK;
}

double mosp_result_heuristic_seconds(const mosp_result* result) {
  return result ? result->heuristicSeconds : 0.0;
}
double mosp_result_search_seconds(const mosp_result* result) {
  return result ? result->result.searchSeconds : 0.0;
}
uint64_t mosp_result_monotonicity_violations(const mosp_result* result) {
  return result ? result->result.monotonicityViolations : 0;
}

void mosp_result_free(mosp_result* result) { delete result; }

mosp_status mosp_oracle_label_correcting(const mosp_graph* graph, uint32_t start, uint32_t goal,
                                         mosp_frontier** out) {
  if (!graph || !out) return fail(MOSP_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    auto f = std::make_unique<mosp_frontier>();
    f->frontier = mosp::labelCorrectingPareto(instanceOf(graph, start, goal));
    f->numObjectives = graph->graph.numObjectives();
    *out = f.release();
    return MOSP_OK;
  });
}

mosp_status mosp_oracle_enumerate(const mosp_graph* graph, uint32_t start, uint32_t goal,
                                  size_t max_states, mosp_frontier** out) {
  if (!graph || !out) return fail(MOSP_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    auto f = std::make_unique<mosp_frontier>();
    f->frontier = mosp::enumeratePathsPareto(instanceOf(graph, start, goal), max_states);
    f->numObjectives = graph->graph.numObjectives();
    *out = f.release();
    return MOSP_OK;
  });
}

mosp_status mosp_frontier_read(const char* path, mosp_frontier** out) {
  if (!path || !out) return fail(MOSP_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    std::ifstream in(path);
    if (!in) return fail(MOSP_ERR_IO, std::string("cannot open ") + path);
    std::vector<mosp::CostVector> costs;
    try {
      costs = mosp::readFrontier(in);
    } catch (const std::runtime_error& e) {
      return fail(MOSP_ERR_PARSE, std::string(path) + ": " + e.what());
    }
    auto f = std::make_unique<mosp_frontier>();
    f->numObjectives = costs.empty() ? 0 : costs.front().size();
    for (const auto& c : costs) {
      if (c.size() != f->numObjectives) {
        return fail(MOSP_ERR_PARSE, std::string(path) + ": rows differ in length");
      }
    }
    std::sort(costs.begin(), costs.end(), mosp::lexLess);
    costs.erase(std::unique(costs.begin(), costs.end()), costs.end());
    f->frontier.costs = std::move(costs);
    *out = f.release();
    return MOSP_OK;
  });
}

mosp_status mosp_frontier_write(const mosp_frontier* frontier, const char* path) {
  if (!frontier || !path) return fail(MOSP_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    std::ofstream out(path);
    if (!out) return fail(MOSP_ERR_IO, std::string("cannot write ") + path);
    mosp::writeFrontier(out, frontier->frontier.costs);
    out.flush();
    if (!out) return fail(MOSP_ERR_IO, std::string("write failed: ") + path);
    return MOSP_OK;
  });
}

size_t mosp_frontier_size(const mosp_frontier* frontier) {
  return frontier ? frontier->frontier.size() : 0;
}
size_t mosp_frontier_num_objectives(const mosp_frontier* frontier) {
  return frontier ? frontier->numObjectives : 0;
}

mosp_status mosp_frontier_cost(const mosp_frontier* frontier, size_t index, uint64_t* cost) {
  if (!frontier || !cost) return fail(MOSP_ERR_INVALID_ARGUMENT, "null argument");
  if (index >= frontier->frontier.size()) {
    return fail(MOSP_ERR_INVALID_ARGUMENT, "frontier index out of range");
  }
  const mosp::CostVector& c = frontier->frontier.costs[index];
  std::copy(c.begin(), c.end(), cost);
  return MOSP_OK;
}

mosp_status mosp_frontier_compare(const mosp_frontier* expected, const uint64_t* costs,
                                  size_t count, size_t k, int* equal, char* message,
                                  size_t message_size) {
  if (!expected || !equal || (count && !costs)) {
    return fail(MOSP_ERR_INVALID_ARGUMENT, "null argument");
  }
  if (count && (k == 0 || k > mosp::kMaxObjectives)) {
    return fail(MOSP_ERR_INVALID_ARGUMENT, "bad objective count");
  }
  if (count && !expected->frontier.empty() && k != expected->numObjectives) {
    return fail(MOSP_ERR_INVALID_ARGUMENT, "objective counts differ");
  }
  return guarded([&] {
    std::vector<mosp::CostVector> actual;
    actual.reserve(count);
    for (size_t i = 0; i < count; ++i) {
      actual.emplace_back(std::span<const mosp::Cost>(costs + i * k, k));
    }
    auto mismatch = mosp::compareFrontiers(expected->frontier, actual);
    *equal = mismatch ? 0 : 1;
    if (message && message_size) {
      const std::string text = mismatch ? mismatch->describe() : std::string();
      const size_t n = std::min(text.size(), message_size - 1);
      std::memcpy(message, text.data(), n);
      message[n] = '\0';
    }
    return MOSP_OK;
  });
}

void mosp_frontier_free(mosp_frontier* frontier) { delete frontier; }

}  // extern "C"

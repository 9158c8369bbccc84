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

/* C interface to the mosp multi-objective shortest-path solver.
 *
 * All objects are opaque handles released with their *_free function.
 * Functions returning mosp_status leave a thread-local message in
 * mosp_last_error() on failure. State ids are 0-based throughout. */

#ifndef MOSP_MOSP_H_
#define MOSP_MOSP_H_

#include <stddef.h>
#include <stdint.h>

#if defined(MOSP_BUILDING_LIBRARY)
#define MOSP_API __attribute__((visibility("default")))
#else
#define MOSP_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum mosp_status {
  MOSP_OK = 0,
  MOSP_ERR_INVALID_ARGUMENT = 1,
  MOSP_ERR_IO = 2,
  MOSP_ERR_PARSE = 3,
  MOSP_ERR_GRAPH = 4,
  MOSP_ERR_NOT_FOUND = 5, /* heuristic cache written for another graph or goal */
  MOSP_ERR_ORACLE_REFUSED = 6,
  MOSP_ERR_INTERNAL = 7
} mosp_status;

MOSP_API const char* mosp_last_error(void);
MOSP_API const char* mosp_status_string(mosp_status status);

/* ---- graphs ------------------------------------------------------------ */

typedef struct mosp_graph mosp_graph;

/* Reads a plain or extended .gr file. */
MOSP_API mosp_status mosp_graph_read(const char* path, mosp_graph** out);

/* Combines topology-identical .gr files with synthetic costs named
 * "outdegree" or "unit". At least two objectives in total. */
MOSP_API mosp_status mosp_graph_compose(const char* const* paths, size_t num_paths,
                                        const char* const* synthetic, size_t num_synthetic,
                                        mosp_graph** out);

MOSP_API mosp_status mosp_graph_generate_random(size_t num_states, double avg_out_degree,
                                                size_t k, uint64_t max_cost, uint64_t seed,
                                                mosp_graph** out);
MOSP_API mosp_status mosp_graph_generate_grid(size_t width, size_t height, size_t k,
                                              uint64_t max_cost, uint64_t seed,
                                              mosp_graph** out);

/* Writes the extended .gr form, including endpoints when set. */
MOSP_API mosp_status mosp_graph_write(const mosp_graph* graph, const char* path);

MOSP_API size_t mosp_graph_num_states(const mosp_graph* graph);
MOSP_API size_t mosp_graph_num_arcs(const mosp_graph* graph);
MOSP_API size_t mosp_graph_num_objectives(const mosp_graph* graph);
MOSP_API uint64_t mosp_graph_fingerprint(const mosp_graph* graph);

/* Returns 1 and fills start/goal when the graph carries endpoints. */
MOSP_API int mosp_graph_endpoints(const mosp_graph* graph, uint32_t* start, uint32_t* goal);
MOSP_API mosp_status mosp_graph_set_endpoints(mosp_graph* graph, uint32_t start, uint32_t goal);

MOSP_API void mosp_graph_free(mosp_graph* graph);

/* ---- heuristics -------------------------------------------------------- */

typedef struct mosp_heuristic mosp_heuristic;

MOSP_API mosp_status mosp_heuristic_compute(const mosp_graph* graph, uint32_t goal,
                                            mosp_heuristic** out);
MOSP_API mosp_status mosp_heuristic_save(const mosp_heuristic* heuristic, const char* path);
MOSP_API mosp_status mosp_heuristic_load(const mosp_graph* graph, uint32_t goal,
                                         const char* path, mosp_heuristic** out);
MOSP_API double mosp_heuristic_seconds(const mosp_heuristic* heuristic);
MOSP_API void mosp_heuristic_free(mosp_heuristic* heuristic);

/* ---- solving ----------------------------------------------------------- */

typedef enum mosp_algorithm {
  MOSP_ALG_LTMOA = 0,
  MOSP_ALG_NWMOA = 1,
  MOSP_ALG_LTMOA_PAR = 2,
  MOSP_ALG_NWMOA_PAR = 3
} mosp_algorithm;

typedef enum mosp_upper_bounds { MOSP_UB_FULL = 0, MOSP_UB_NONE = 1 } mosp_upper_bounds;

typedef enum mosp_timing { MOSP_TIMING_LAZY = 0, MOSP_TIMING_EAGER = 1 } mosp_timing;

typedef struct mosp_solve_options {
  mosp_algorithm algorithm;
  mosp_upper_bounds upper_bounds;
  mosp_timing timing;
  double timeout_seconds; /* negative: no limit */
  int quick_prune;
  uint32_t rotation; /* sequential only: first objective of the search order */
  int check_invariants;
} mosp_solve_options;

MOSP_API void mosp_solve_options_init(mosp_solve_options* options);

/* Parses "ltmoa", "nwmoa", "ltmoa-par" or "nwmoa-par". */
MOSP_API mosp_status mosp_parse_algorithm(const char* name, mosp_algorithm* out);
MOSP_API const char* mosp_algorithm_name(mosp_algorithm algorithm);

typedef struct mosp_result mosp_result;

/* A null heuristic is computed on the fly and its time recorded. */
MOSP_API mosp_status mosp_solve(const mosp_graph* graph, uint32_t start, uint32_t goal,
                                const mosp_heuristic* heuristic,
                                const mosp_solve_options* options, mosp_result** out);

typedef struct mosp_stats {
  uint64_t extractions;
  uint64_t expansions;
  uint64_t generations;
  uint64_t pruned_by_gtr;
  uint64_t pruned_by_solutions;
  uint64_t quick_prune_hits;
  uint64_t queue_peak;
  double elapsed_seconds;
} mosp_stats;

MOSP_API int mosp_result_timed_out(const mosp_result* result);
MOSP_API size_t mosp_result_num_objectives(const mosp_result* result);
/* Solutions are sorted lexicographically by cost. */
MOSP_API size_t mosp_result_num_solutions(const mosp_result* result);
/* Writes num_objectives entries. */
MOSP_API mosp_status mosp_result_cost(const mosp_result* result, size_t index, uint64_t* cost);
MOSP_API size_t mosp_result_path_length(const mosp_result* result, size_t index);
MOSP_API mosp_status mosp_result_path(const mosp_result* result, size_t index,
                                      uint32_t* states);
MOSP_API void mosp_result_stats(const mosp_result* result, mosp_stats* stats);
MOSP_API size_t mosp_result_num_searches(const mosp_result* result);
MOSP_API mosp_status mosp_result_search_stats(const mosp_result* result, size_t search,
                                              mosp_stats* stats);
MOSP_API double mosp_result_heuristic_seconds(const mosp_result* result);
MOSP_API double mosp_result_search_seconds(const mosp_result* result);
MOSP_API uint64_t mosp_result_monotonicity_violations(const mosp_result* result);
MOSP_API void mosp_result_free(mosp_result* result);

/* ---- reference frontiers ----------------------------------------------- */

typedef struct mosp_frontier mosp_frontier;

MOSP_API mosp_status mosp_oracle_label_correcting(const mosp_graph* graph, uint32_t start,
                                                  uint32_t goal, mosp_frontier** out);
/* MOSP_ERR_ORACLE_REFUSED when the graph has more than max_states states. */
MOSP_API mosp_status mosp_oracle_enumerate(const mosp_graph* graph, uint32_t start,
                                           uint32_t goal, size_t max_states,
                                           mosp_frontier** out);

MOSP_API mosp_status mosp_frontier_read(const char* path, mosp_frontier** out);
MOSP_API mosp_status mosp_frontier_write(const mosp_frontier* frontier, const char* path);
MOSP_API size_t mosp_frontier_size(const mosp_frontier* frontier);
MOSP_API size_t mosp_frontier_num_objectives(const mosp_frontier* frontier);
MOSP_API mosp_status mosp_frontier_cost(const mosp_frontier* frontier, size_t index,
                                        uint64_t* cost);

/* Compares count cost vectors of k entries each, row-major, against the
 * frontier. *equal is set to 1 on exact set equality without duplicates;
 * otherwise message receives a description of the first difference. */
MOSP_API mosp_status mosp_frontier_compare(const mosp_frontier* expected, const uint64_t* costs,
                                           size_t count, size_t k, int* equal, char* message,
                                           size_t message_size);

MOSP_API void mosp_frontier_free(mosp_frontier* frontier);

#ifdef __cplusplus
}
#endif

#endif /* MOSP_MOSP_H_ */

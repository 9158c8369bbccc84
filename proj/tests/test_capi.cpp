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

// Exercises the shared library through its C header only.

#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "mosp/mosp.h"

namespace {

std::string tempPath(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("mosp_capi_" + name)).string();
}

void writeFile(const std::string& path, const std::string& text) {
  std::ofstream(path) << text;
}

std::string readFile(const std::string& path) {
  std::ifstream in(path);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

const char* kDiamond =
    "p sp 4 4\n"
    "a 1 2 1 1\n"
    "a 1 3 2 0\n"
    "a 2 4 0 2\n"
    "a 3 4 1 1\n";

TEST(CApi, SolveDiamondWithEveryAlgorithm) {
  const std::string path = tempPath("diamond.gr");
  writeFile(path, kDiamond);
  mosp_graph* g = nullptr;
  ASSERT_EQ(mosp_graph_read(path.c_str(), &g), MOSP_OK) << mosp_last_error();
  EXPECT_EQ(mosp_graph_num_states(g), 4u);
  EXPECT_EQ(mosp_graph_num_objectives(g), 2u);
  EXPECT_EQ(mosp_graph_endpoints(g, nullptr, nullptr), 0);

  for (mosp_algorithm a : {MOSP_ALG_LTMOA, MOSP_ALG_NWMOA, MOSP_ALG_LTMOA_PAR, MOSP_ALG_NWMOA_PAR}) {
    mosp_solve_options o;
    mosp_solve_options_init(&o);
    o.algorithm = a;
    o.check_invariants = 1;
    mosp_result* r = nullptr;
    ASSERT_EQ(mosp_solve(g, 0, 3, nullptr, &o, &r), MOSP_OK) << mosp_last_error();
    ASSERT_EQ(mosp_result_num_solutions(r), 2u);
    EXPECT_EQ(mosp_result_num_objectives(r), 2u);
    std::uint64_t c[2];
    ASSERT_EQ(mosp_result_cost(r, 0, c), MOSP_OK);
    EXPECT_EQ(c[0], 1u);
    EXPECT_EQ(c[1], 3u);
    ASSERT_EQ(mosp_result_cost(r, 1, c), MOSP_OK);
    EXPECT_EQ(c[0], 3u);
    EXPECT_EQ(c[1], 1u);
    ASSERT_EQ(mosp_result_path_length(r, 0), 3u);
    std::uint32_t states[3];
    ASSERT_EQ(mosp_result_path(r, 0, states), MOSP_OK);
    EXPECT_EQ(states[0], 0u);
    EXPECT_EQ(states[1], 1u);
    EXPECT_EQ(states[2], 3u);
    EXPECT_EQ(mosp_result_timed_out(r), 0);
    const bool parallel = a == MOSP_ALG_LTMOA_PAR || a == MOSP_ALG_NWMOA_PAR;
    EXPECT_EQ(mosp_result_num_searches(r), parallel ? 2u : 1u);
    mosp_stats s;
    EXPECT_EQ(mosp_result_search_stats(r, 0, &s), MOSP_OK);
    EXPECT_EQ(mosp_result_search_stats(r, 9, &s), MOSP_ERR_INVALID_ARGUMENT);
    EXPECT_EQ(mosp_result_cost(r, 2, c), MOSP_ERR_INVALID_ARGUMENT);
    EXPECT_GE(mosp_result_heuristic_seconds(r), 0.0);
    mosp_result_free(r);
  }
  mosp_graph_free(g);
  std::remove(path.c_str());
}

TEST(CApi, ErrorsAreReported) {
  mosp_graph* g = nullptr;
  EXPECT_EQ(mosp_graph_read("/nonexistent/file.gr", &g), MOSP_ERR_IO);
  EXPECT_NE(std::string(mosp_last_error()), "");
  EXPECT_EQ(mosp_graph_read(nullptr, &g), MOSP_ERR_INVALID_ARGUMENT);

  const std::string bad = tempPath("bad.gr");
  writeFile(bad, "p sp 2 2\na 1 2 5\n");
  EXPECT_EQ(mosp_graph_read(bad.c_str(), &g), MOSP_ERR_PARSE);
  EXPECT_NE(std::string(mosp_last_error()).find("line 2"), std::string::npos);
  std::remove(bad.c_str());

  EXPECT_EQ(mosp_graph_generate_grid(1, 1, 2, 5, 1, &g), MOSP_ERR_GRAPH);
  ASSERT_EQ(mosp_graph_generate_grid(3, 3, 2, 5, 1, &g), MOSP_OK);
  mosp_result* r = nullptr;
  EXPECT_EQ(mosp_solve(g, 0, 99, nullptr, nullptr, &r), MOSP_ERR_GRAPH);
  mosp_solve_options o;
  mosp_solve_options_init(&o);
  o.algorithm = static_cast<mosp_algorithm>(42);
  EXPECT_EQ(mosp_solve(g, 0, 8, nullptr, &o, &r), MOSP_ERR_INVALID_ARGUMENT);
  mosp_algorithm alg;
  EXPECT_EQ(mosp_parse_algorithm("nwmoa-par", &alg), MOSP_OK);
  EXPECT_EQ(alg, MOSP_ALG_NWMOA_PAR);
  EXPECT_STREQ(mosp_algorithm_name(alg), "nwmoa-par");
  EXPECT_EQ(mosp_parse_algorithm("boa", &alg), MOSP_ERR_INVALID_ARGUMENT);
  EXPECT_STREQ(mosp_status_string(MOSP_ERR_ORACLE_REFUSED), "oracle refused");

  mosp_frontier* f = nullptr;
  EXPECT_EQ(mosp_oracle_enumerate(g, 0, 8, 5, &f), MOSP_ERR_ORACLE_REFUSED);
  mosp_graph_free(g);
}

TEST(CApi, TimeoutZeroTimesOut) {
  mosp_graph* g = nullptr;
  ASSERT_EQ(mosp_graph_generate_grid(20, 20, 3, 10, 1, &g), MOSP_OK);
  std::uint32_t start, goal;
  ASSERT_EQ(mosp_graph_endpoints(g, &start, &goal), 1);
  for (mosp_algorithm a : {MOSP_ALG_LTMOA, MOSP_ALG_LTMOA_PAR}) {
    mosp_solve_options o;
    mosp_solve_options_init(&o);
    o.algorithm = a;
    o.timeout_seconds = 0.0;
    mosp_result* r = nullptr;
    ASSERT_EQ(mosp_solve(g, start, goal, nullptr, &o, &r), MOSP_OK);
    EXPECT_EQ(mosp_result_timed_out(r), 1);
    mosp_result_free(r);
  }
  mosp_graph_free(g);
}

TEST(CApi, OracleAndCompare) {
  mosp_graph* g = nullptr;
  ASSERT_EQ(mosp_graph_generate_random(10, 3.0, 3, 10, 4, &g), MOSP_OK);
  std::uint32_t start, goal;
  ASSERT_EQ(mosp_graph_endpoints(g, &start, &goal), 1);
  mosp_frontier* lc = nullptr;
  mosp_frontier* en = nullptr;
  ASSERT_EQ(mosp_oracle_label_correcting(g, start, goal, &lc), MOSP_OK);
  ASSERT_EQ(mosp_oracle_enumerate(g, start, goal, 12, &en), MOSP_OK);
  ASSERT_EQ(mosp_frontier_size(lc), mosp_frontier_size(en));
  ASSERT_GT(mosp_frontier_size(lc), 0u);
  const std::size_t n = mosp_frontier_size(lc);
  std::vector<std::uint64_t> costs(n * 3);
  for (std::size_t i = 0; i < n; ++i) ASSERT_EQ(mosp_frontier_cost(lc, i, &costs[i * 3]), MOSP_OK);

  int equal = 0;
  char msg[128];
  ASSERT_EQ(mosp_frontier_compare(en, costs.data(), n, 3, &equal, msg, sizeof msg), MOSP_OK);
  EXPECT_EQ(equal, 1);
  ASSERT_EQ(mosp_frontier_compare(en, costs.data(), n - 1, 3, &equal, msg, sizeof msg), MOSP_OK);
  EXPECT_EQ(equal, 0);
  EXPECT_EQ(std::string(msg).rfind("missing", 0), 0u) << msg;

  const std::string path = tempPath("frontier.txt");
  ASSERT_EQ(mosp_frontier_write(lc, path.c_str()), MOSP_OK);
  mosp_frontier* back = nullptr;
  ASSERT_EQ(mosp_frontier_read(path.c_str(), &back), MOSP_OK);
  ASSERT_EQ(mosp_frontier_compare(back, costs.data(), n, 3, &equal, nullptr, 0), MOSP_OK);
  EXPECT_EQ(equal, 1);
  std::remove(path.c_str());

  mosp_frontier_free(back);
  mosp_frontier_free(lc);
  mosp_frontier_free(en);
  mosp_graph_free(g);
}

TEST(CApi, HeuristicCache) {
  mosp_graph* g = nullptr;
  ASSERT_EQ(mosp_graph_generate_grid(5, 5, 3, 10, 2, &g), MOSP_OK);
  mosp_heuristic* h = nullptr;
  ASSERT_EQ(mosp_heuristic_compute(g, 24, &h), MOSP_OK);
  const std::string path = tempPath("h.csv");
  ASSERT_EQ(mosp_heuristic_save(h, path.c_str()), MOSP_OK);
  mosp_heuristic* loaded = nullptr;
  ASSERT_EQ(mosp_heuristic_load(g, 24, path.c_str(), &loaded), MOSP_OK);
  mosp_heuristic* other = nullptr;
  EXPECT_EQ(mosp_heuristic_load(g, 23, path.c_str(), &other),
            MOSP_ERR_NOT_FOUND);

  mosp_result* a = nullptr;
  mosp_result* b = nullptr;
  ASSERT_EQ(mosp_solve(g, 0, 24, h, nullptr, &a), MOSP_OK);
  ASSERT_EQ(mosp_solve(g, 0, 24, loaded, nullptr, &b), MOSP_OK);
  EXPECT_EQ(mosp_result_num_solutions(a), mosp_result_num_solutions(b));
  mosp_result* c = nullptr;
  EXPECT_EQ(mosp_solve(g, 0, 23, h, nullptr, &c), MOSP_ERR_INVALID_ARGUMENT);
  mosp_result_free(a);
  mosp_result_free(b);
  mosp_heuristic_free(loaded);
  mosp_heuristic_free(h);
  mosp_graph_free(g);
  std::remove(path.c_str());
}

TEST(CApi, ComposeAndWriteDeterministic) {
  const std::string a = tempPath("a.gr");
  const std::string b = tempPath("b.gr");
  writeFile(a, "p sp 3 2\na 1 2 4\na 2 3 6\n");
  writeFile(b, "p sp 3 2\na 1 2 7\na 2 3 8\n");
  const char* paths[] = {a.c_str(), b.c_str()};
  const char* unit[] = {"unit"};
  mosp_graph* g = nullptr;
  ASSERT_EQ(mosp_graph_compose(paths, 2, unit, 1, &g), MOSP_OK) << mosp_last_error();
  EXPECT_EQ(mosp_graph_num_objectives(g), 3u);
  const char* bogus[] = {"height"};
  mosp_graph* h = nullptr;
  EXPECT_EQ(mosp_graph_compose(paths, 2, bogus, 1, &h), MOSP_ERR_INVALID_ARGUMENT);

  ASSERT_EQ(mosp_graph_set_endpoints(g, 0, 2), MOSP_OK);
  EXPECT_EQ(mosp_graph_set_endpoints(g, 0, 3), MOSP_ERR_INVALID_ARGUMENT);
  const std::string out1 = tempPath("out1.gr");
  const std::string out2 = tempPath("out2.gr");
  ASSERT_EQ(mosp_graph_write(g, out1.c_str()), MOSP_OK);
  mosp_graph* again = nullptr;
  ASSERT_EQ(mosp_graph_read(out1.c_str(), &again), MOSP_OK);
  std::uint32_t s = 9, t = 9;
  ASSERT_EQ(mosp_graph_endpoints(again, &s, &t), 1);
  EXPECT_EQ(s, 0u);
  EXPECT_EQ(t, 2u);
  EXPECT_EQ(mosp_graph_fingerprint(again), mosp_graph_fingerprint(g));
  ASSERT_EQ(mosp_graph_write(again, out2.c_str()), MOSP_OK);
  EXPECT_EQ(readFile(out1), readFile(out2));
  for (const auto& p : {a, b, out1, out2}) std::remove(p.c_str());
  mosp_graph_free(again);
  mosp_graph_free(g);
}

}  // namespace

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

// Helpers shared by the mosp command-line subcommands. Everything goes
// through the C interface.

#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mosp/mosp.h"

namespace mosp_cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitInternal = 1,
  kExitTimeout = 2,
  kExitMismatch = 3,
  kExitInput = 4,
  kExitOracleRefused = 5,
};

/// Carries an exit code out of a subcommand.
class CliError : public std::runtime_error {
 public:
  CliError(int code, const std::string& message) : std::runtime_error(message), code_(code) {}
  int code() const { return code_; }

 private:
  int code_;
};

struct GraphDeleter {
  void operator()(mosp_graph* g) const { mosp_graph_free(g); }
};
struct HeuristicDeleter {
  void operator()(mosp_heuristic* h) const { mosp_heuristic_free(h); }
};
struct ResultDeleter {
  void operator()(mosp_result* r) const { mosp_result_free(r); }
};
struct FrontierDeleter {
  void operator()(mosp_frontier* f) const { mosp_frontier_free(f); }
};

using GraphPtr = std::unique_ptr<mosp_graph, GraphDeleter>;
using HeuristicPtr = std::unique_ptr<mosp_heuristic, HeuristicDeleter>;
using ResultPtr = std::unique_ptr<mosp_result, ResultDeleter>;
using FrontierPtr = std::unique_ptr<mosp_frontier, FrontierDeleter>;

/// Exit code for a failed library call.
int exitCodeFor(mosp_status status);

/// Throws CliError when status is not MOSP_OK.
void check(mosp_status status, const std::string& context);

/// A graph source: one or more .gr files plus synthetic costs, or a single
/// generator spec "grid:WxH:K:MAXCOST[:SEED]" or
/// "random:N:DEGREE:K:MAXCOST[:SEED]". A generator spec without a seed
/// takes `defaultSeed`.
GraphPtr loadGraph(const std::vector<std::string>& sources,
                   const std::vector<std::string>& synthetic, std::uint64_t defaultSeed);

struct Endpoints {
  std::uint32_t start;  // 0-based
  std::uint32_t goal;
};

/// Resolves 1-based command-line endpoints, falling back to the ones stored
/// with the graph.
Endpoints resolveEndpoints(const mosp_graph* graph, std::optional<std::uint64_t> start1,
                           std::optional<std::uint64_t> goal1);

mosp_upper_bounds parseUpperBounds(const std::string& name);
mosp_timing parseTiming(const std::string& name);
mosp_algorithm parseAlgorithmName(const std::string& name);
std::vector<std::string> splitList(const std::string& text, char sep = ',');

/// Row-major cost vectors of a result.
std::vector<std::uint64_t> resultCosts(const mosp_result* result);

int runBench(const std::string& listPath, const std::vector<std::string>& algorithms,
             mosp_upper_bounds ub, mosp_timing timing, double timeoutSeconds, int reps,
             std::uint64_t seed, const std::string& csvPath, bool virtualBest,
             const std::string& cactusPath, const std::string& scatterPath);

}  // namespace mosp_cli

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

// mosp command-line tool: solve, bench, verify, gen and convert.

#include <cstdio>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "cli_common.hpp"

namespace mosp_cli {
namespace {

constexpr const char* kAllAlgorithms = "ltmoa,nwmoa,ltmoa-par,nwmoa-par";

struct SolveArgs {
  std::vector<std::string> sources;
  std::vector<std::string> synthetic;
  std::optional<std::uint64_t> start;
  std::optional<std::uint64_t> goal;
  std::string algorithm = "ltmoa";
  std::string ub = "full";
  std::string timing = "lazy";
  double timeout = -1.0;
  std::uint64_t seed = 1;
  std::uint32_t firstObjective = 1;
  bool quickPrune = true;
  bool paths = false;
  std::string heuristicCache;
};

void printCost(std::ostream& out, const std::uint64_t* cost, std::size_t k) {
  for (std::size_t j = 0; j < k; ++j) out << (j ? " " : "") << cost[j];
  out << '\n';
}

HeuristicPtr obtainHeuristic(const mosp_graph* graph, std::uint32_t goal,
                             const std::string& cachePath) {
  mosp_heuristic* raw = nullptr;
  if (!cachePath.empty()) {
    if (mosp_heuristic_load(graph, goal, cachePath.c_str(), &raw) == MOSP_OK) {
      return HeuristicPtr(raw);
    }
  }
  check(mosp_heuristic_compute(graph, goal, &raw), "heuristic");
  HeuristicPtr h(raw);
  if (!cachePath.empty()) check(mosp_heuristic_save(h.get(), cachePath.c_str()), "heuristic cache");
  return h;
}

int cmdSolve(const SolveArgs& a) {
  GraphPtr graph = loadGraph(a.sources, a.synthetic, a.seed);
  const Endpoints ends = resolveEndpoints(graph.get(), a.start, a.goal);
  const std::size_t k = mosp_graph_num_objectives(graph.get());

  mosp_solve_options options;
  mosp_solve_options_init(&options);
  options.algorithm = parseAlgorithmName(a.algorithm);
  options.upper_bounds = parseUpperBounds(a.ub);
  options.timing = parseTiming(a.timing);
  options.timeout_seconds = a.timeout;
  options.quick_prune = a.quickPrune ? 1 : 0;
  if (a.firstObjective < 1 || a.firstObjective > k) {
    throw CliError(kExitInput, "--first-objective must be within 1.." + std::to_string(k));
  }
  options.rotation = a.firstObjective - 1;

  HeuristicPtr heuristic = obtainHeuristic(graph.get(), ends.goal, a.heuristicCache);
  mosp_result* raw = nullptr;
  check(mosp_solve(graph.get(), ends.start, ends.goal, heuristic.get(), &options, &raw), "solve");
  ResultPtr result(raw);

  const std::size_t n = mosp_result_num_solutions(raw);
  const std::vector<std::uint64_t> costs = resultCosts(raw);
  for (std::size_t i = 0; i < n; ++i) printCost(std::cout, &costs[i * k], k);
  std::cout << n << " solutions\n";
  if (a.paths) {
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<std::uint32_t> states(mosp_result_path_length(raw, i));
      check(mosp_result_path(raw, i, states.data()), "path");
      std::cout << "path " << (i + 1) << ':';
      for (auto s : states) std::cout << ' ' << (s + 1);
      std::cout << '\n';
    }
  }
  mosp_stats stats;
  mosp_result_stats(raw, &stats);
  std::cout << std::fixed << std::setprecision(6)
            << "heuristic time: " << mosp_heuristic_seconds(heuristic.get()) << " s\n"
            << "search time: " << mosp_result_search_seconds(raw) << " s\n"
            << "extractions: " << stats.extractions << '\n'
            << "expansions: " << stats.expansions << '\n'
            << "generations: " << stats.generations << '\n'
            << "pruned by G^Tr: " << stats.pruned_by_gtr << '\n'
            << "pruned by solutions: " << stats.pruned_by_solutions << '\n'
            << "quick prune hits: " << stats.quick_prune_hits << '\n';
  if (mosp_result_timed_out(raw)) {
    std::cerr << "solve: timed out, frontier is incomplete\n";
    return kExitTimeout;
  }
  return kExitOk;
}

struct VerifyArgs {
  std::vector<std::string> sources;
  std::vector<std::string> synthetic;
  std::optional<std::uint64_t> start;
  std::optional<std::uint64_t> goal;
  std::string algorithms = kAllAlgorithms;
  std::optional<std::string> ub;
  std::optional<std::string> timing;
  double timeout = -1.0;
  std::uint64_t seed = 1;
  std::size_t random = 0;
  std::size_t states = 20;
  double degree = 4.0;
  std::optional<std::size_t> k;
  std::uint64_t maxCost = 10;
  std::string oracle = "label";
  std::optional<std::size_t> oracleLimit;
  std::string frontierOut;
  bool dropSolution = false;
};

struct VerifyInstance {
  std::string name;
  GraphPtr graph;
  Endpoints ends;
};

int cmdVerify(const VerifyArgs& a) {
  std::vector<VerifyInstance> instances;
  if (a.random > 0) {
    if (!a.sources.empty()) throw CliError(kExitInput, "give either graph sources or --random");
    for (std::size_t i = 0; i < a.random; ++i) {
      const std::size_t k = a.k.value_or(2 + i % 4);
      const std::uint64_t seed = a.seed + i;
      mosp_graph* raw = nullptr;
      check(mosp_graph_generate_random(a.states, a.degree, k, a.maxCost, seed, &raw), "generate");
      GraphPtr g(raw);
      const Endpoints ends = resolveEndpoints(g.get(), std::nullopt, std::nullopt);
      instances.push_back({"random#" + std::to_string(seed) + "/k" + std::to_string(k),
                           std::move(g), ends});
    }
  } else {
    GraphPtr g = loadGraph(a.sources, a.synthetic, a.seed);
    const Endpoints ends = resolveEndpoints(g.get(), a.start, a.goal);
    instances.push_back({a.sources.front(), std::move(g), ends});
  }

  std::vector<std::string> algNames = splitList(a.algorithms);
  std::vector<mosp_algorithm> algs;
  for (const auto& name : algNames) algs.push_back(parseAlgorithmName(name));
  std::vector<mosp_timing> timings = {MOSP_TIMING_LAZY, MOSP_TIMING_EAGER};
  if (a.timing) timings = {parseTiming(*a.timing)};
  std::vector<mosp_upper_bounds> ubs = {MOSP_UB_FULL, MOSP_UB_NONE};
  if (a.ub) ubs = {parseUpperBounds(*a.ub)};
  const bool enumerate = a.oracle == "enumerate";
  if (!enumerate && a.oracle != "label") {
    throw CliError(kExitInput, "unknown oracle '" + a.oracle + "'");
  }
  const std::size_t limit = a.oracleLimit.value_or(enumerate ? 12 : 5000);

  std::size_t runs = 0;
  std::size_t mismatches = 0;
  std::size_t timeouts = 0;
  bool dropPending = a.dropSolution;
  for (const VerifyInstance& inst : instances) {
    const mosp_graph* g = inst.graph.get();
    const std::size_t n = mosp_graph_num_states(g);
    if (n > limit) {
      throw CliError(kExitOracleRefused, inst.name + ": " + std::to_string(n) +
                                             " states exceeds the oracle limit of " +
                                             std::to_string(limit));
    }
    mosp_frontier* rawFrontier = nullptr;
    if (enumerate) {
      check(mosp_oracle_enumerate(g, inst.ends.start, inst.ends.goal, limit, &rawFrontier),
            inst.name);
    } else {
      check(mosp_oracle_label_correcting(g, inst.ends.start, inst.ends.goal, &rawFrontier),
            inst.name);
    }
    FrontierPtr frontier(rawFrontier);
    if (!a.frontierOut.empty()) check(mosp_frontier_write(rawFrontier, a.frontierOut.c_str()), "frontier");

    mosp_heuristic* rawH = nullptr;
    check(mosp_heuristic_compute(g, inst.ends.goal, &rawH), inst.name);
    HeuristicPtr heuristic(rawH);
    const std::size_t k = mosp_graph_num_objectives(g);

    for (std::size_t ai = 0; ai < algs.size(); ++ai) {
      const bool parallel = algs[ai] == MOSP_ALG_LTMOA_PAR || algs[ai] == MOSP_ALG_NWMOA_PAR;
      for (mosp_timing timing : timings) {
        for (std::size_t ui = 0; ui < (parallel ? ubs.size() : 1); ++ui) {
          mosp_solve_options options;
          mosp_solve_options_init(&options);
          options.algorithm = algs[ai];
          options.timing = timing;
          options.upper_bounds = ubs[ui];
          options.timeout_seconds = a.timeout;
          std::string config = algNames[ai] + (timing == MOSP_TIMING_EAGER ? "/eager" : "/lazy");
          if (parallel) config += ubs[ui] == MOSP_UB_NONE ? "/noub" : "/full";

          mosp_result* rawR = nullptr;
          check(mosp_solve(g, inst.ends.start, inst.ends.goal, heuristic.get(), &options, &rawR),
                inst.name + " " + config);
          ResultPtr result(rawR);
          ++runs;
          if (mosp_result_timed_out(rawR)) {
            ++timeouts;
            std::cout << "TIMEOUT " << inst.name << ' ' << config << '\n';
            continue;
          }
          std::vector<std::uint64_t> costs = resultCosts(rawR);
          if (dropPending && !costs.empty()) {
            costs.resize(costs.size() - k);
            dropPending = false;
          }
          int equal = 0;
          char message[256];
          check(mosp_frontier_compare(rawFrontier, costs.data(), costs.size() / k, k, &equal,
                                      message, sizeof message),
                "compare");
          if (!equal) {
            ++mismatches;
            std::cout << "MISMATCH " << inst.name << ' ' << config << ": " << message << '\n';
          }
        }
      }
    }
  }
  std::cout << runs << " runs on " << instances.size() << " instances, " << mismatches
            << " mismatches, " << timeouts << " timeouts\n";
  if (mismatches) return kExitMismatch;
  if (timeouts) return kExitTimeout;
  return kExitOk;
}

struct GenArgs {
  std::size_t width = 5;
  std::size_t height = 5;
  std::size_t states = 50;
  double degree = 4.0;
  std::size_t k = 3;
  std::uint64_t maxCost = 10;
  std::uint64_t seed = 1;
  std::string output;
};

int cmdGen(const GenArgs& a, bool grid) {
  mosp_graph* raw = nullptr;
  if (grid) {
    check(mosp_graph_generate_grid(a.width, a.height, a.k, a.maxCost, a.seed, &raw), "gen grid");
  } else {
    check(mosp_graph_generate_random(a.states, a.degree, a.k, a.maxCost, a.seed, &raw),
          "gen random");
  }
  GraphPtr g(raw);
  check(mosp_graph_write(g.get(), a.output.c_str()), "write");
  return kExitOk;
}

struct ConvertArgs {
  std::vector<std::string> sources;
  std::vector<std::string> synthetic;
  std::optional<std::uint64_t> start;
  std::optional<std::uint64_t> goal;
  std::string output;
};

int cmdConvert(const ConvertArgs& a) {
  GraphPtr g = loadGraph(a.sources, a.synthetic, 0);
  if (a.start || a.goal) {
    if (!a.start || !a.goal) throw CliError(kExitInput, "--start and --goal go together");
    const Endpoints ends = resolveEndpoints(g.get(), a.start, a.goal);
    check(mosp_graph_set_endpoints(g.get(), ends.start, ends.goal), "endpoints");
  }
  check(mosp_graph_write(g.get(), a.output.c_str()), "write");
  return kExitOk;
}

void addSources(CLI::App* cmd, std::vector<std::string>& sources,
                std::vector<std::string>& synthetic) {
  cmd->add_option("sources", sources,
                  ".gr files (plain or extended), or one generator spec "
                  "grid:WxH:K:MAXCOST[:SEED] / random:N:DEGREE:K:MAXCOST[:SEED]");
  cmd->add_option("--synthetic", synthetic, "extra synthetic costs: unit, outdegree")
      ->delimiter(',');
}

}  // namespace
}  // namespace mosp_cli

int main(int argc, char** argv) {
  using namespace mosp_cli;
  CLI::App app{"Multi-objective shortest path solver"};
  app.require_subcommand(1);

  SolveArgs solve;
  auto* solveCmd = app.add_subcommand("solve", "compute the Pareto frontier of one instance");
  addSources(solveCmd, solve.sources, solve.synthetic);
  solveCmd->add_option("--start", solve.start, "start state, 1-based");
  solveCmd->add_option("--goal", solve.goal, "goal state, 1-based");
  solveCmd->add_option("--alg", solve.algorithm, "ltmoa, nwmoa, ltmoa-par or nwmoa-par")
      ->capture_default_str();
  solveCmd->add_option("--ub", solve.ub, "upper bounding for parallel runs: full or noub")
      ->capture_default_str();
  solveCmd->add_option("--timing", solve.timing, "dominance checks: lazy or eager")
      ->capture_default_str();
  solveCmd->add_option("--timeout", solve.timeout, "search time limit in seconds");
  solveCmd->add_option("--seed", solve.seed, "seed for generator specs without one")
      ->capture_default_str();
  solveCmd->add_option("--first-objective", solve.firstObjective,
                       "sequential runs: objective searched first, 1-based")
      ->capture_default_str();
  solveCmd->add_flag("!--no-quick-prune", solve.quickPrune, "disable quick pruning");
  solveCmd->add_flag("--paths", solve.paths, "print one path per solution");
  solveCmd->add_option("--heuristic-cache", solve.heuristicCache,
                       "heuristic cache file, reused when it matches");

  std::string listPath;
  std::string benchAlgs = "ltmoa,ltmoa-par";
  std::string benchUb = "full";
  std::string benchTiming = "lazy";
  double benchTimeout = -1.0;
  int reps = 1;
  std::uint64_t benchSeed = 1;
  std::string csvPath;
  bool virtualBest = false;
  std::string cactusPath;
  std::string scatterPath;
  auto* benchCmd = app.add_subcommand("bench", "run an instance list and write CSV");
  benchCmd->add_option("instances", listPath, "instance list file")->required();
  benchCmd->add_option("--alg", benchAlgs, "comma-separated algorithms")->capture_default_str();
  benchCmd->add_option("--ub", benchUb, "full or noub")->capture_default_str();
  benchCmd->add_option("--timing", benchTiming, "lazy or eager")->capture_default_str();
  benchCmd->add_option("--timeout", benchTimeout, "per-run search time limit in seconds");
  benchCmd->add_option("--reps", reps, "repetitions per configuration")->capture_default_str();
  benchCmd->add_option("--seed", benchSeed, "seed for generator specs without one")
      ->capture_default_str();
  benchCmd->add_option("--csv", csvPath, "CSV output path (default stdout)");
  benchCmd->add_flag("--virtual-best", virtualBest,
                     "run sequential algorithms once per cyclic objective order");
  benchCmd->add_option("--cactus", cactusPath, "sorted solved runtimes per algorithm");
  benchCmd->add_option("--scatter", scatterPath, "per-instance runtimes, one column per algorithm");

  VerifyArgs verify;
  auto* verifyCmd = app.add_subcommand("verify", "compare every engine with a reference frontier");
  addSources(verifyCmd, verify.sources, verify.synthetic);
  verifyCmd->add_option("--start", verify.start, "start state, 1-based");
  verifyCmd->add_option("--goal", verify.goal, "goal state, 1-based");
  verifyCmd->add_option("--alg", verify.algorithms, "comma-separated algorithms")
      ->capture_default_str();
  verifyCmd->add_option("--ub", verify.ub, "only this upper-bound mode (default both)");
  verifyCmd->add_option("--timing", verify.timing, "only this dominance timing (default both)");
  verifyCmd->add_option("--timeout", verify.timeout, "per-run search time limit in seconds");
  verifyCmd->add_option("--seed", verify.seed, "first seed for --random")->capture_default_str();
  verifyCmd->add_option("--random", verify.random, "verify this many random instances");
  verifyCmd->add_option("--states", verify.states, "states per random instance")
      ->capture_default_str();
  verifyCmd->add_option("--degree", verify.degree, "average out-degree of random instances")
      ->capture_default_str();
  verifyCmd->add_option("--k", verify.k, "objectives of random instances (default cycles 2..5)");
  verifyCmd->add_option("--max-cost", verify.maxCost, "largest arc cost of random instances")
      ->capture_default_str();
  verifyCmd->add_option("--oracle", verify.oracle, "label or enumerate")->capture_default_str();
  verifyCmd->add_option("--oracle-limit", verify.oracleLimit,
                        "refuse instances with more states (default 5000, enumerate 12)");
  verifyCmd->add_option("--frontier-out", verify.frontierOut, "write the reference frontier");
  verifyCmd->add_flag("--debug-drop-solution", verify.dropSolution)->group("");

  GenArgs gen;
  auto* genCmd = app.add_subcommand("gen", "generate an extended .gr instance");
  genCmd->require_subcommand(1);
  auto* gridCmd = genCmd->add_subcommand("grid", "4-connected grid");
  gridCmd->add_option("--width", gen.width)->capture_default_str();
  gridCmd->add_option("--height", gen.height)->capture_default_str();
  auto* randomCmd = genCmd->add_subcommand("random", "uniform random digraph");
  randomCmd->add_option("--states", gen.states)->capture_default_str();
  randomCmd->add_option("--degree", gen.degree)->capture_default_str();
  for (auto* cmd : {gridCmd, randomCmd}) {
    cmd->add_option("--k", gen.k, "objectives")->capture_default_str();
    cmd->add_option("--max-cost", gen.maxCost)->capture_default_str();
    cmd->add_option("--seed", gen.seed)->capture_default_str();
    cmd->add_option("-o,--output", gen.output, "output path")->required();
  }

  ConvertArgs convert;
  auto* convertCmd = app.add_subcommand("convert", "compose .gr files into one extended file");
  addSources(convertCmd, convert.sources, convert.synthetic);
  convertCmd->add_option("--start", convert.start, "start state to record, 1-based");
  convertCmd->add_option("--goal", convert.goal, "goal state to record, 1-based");
  convertCmd->add_option("-o,--output", convert.output, "output path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (*solveCmd) return cmdSolve(solve);
    if (*benchCmd) {
      return runBench(listPath, splitList(benchAlgs), parseUpperBounds(benchUb),
                      parseTiming(benchTiming), benchTimeout, reps, benchSeed, csvPath,
                      virtualBest, cactusPath, scatterPath);
    }
    if (*verifyCmd) return cmdVerify(verify);
    if (*genCmd) return cmdGen(gen, static_cast<bool>(*gridCmd));
    if (*convertCmd) return cmdConvert(convert);
  } catch (const CliError& e) {
    std::cerr << "mosp: " << e.what() << '\n';
    return e.code();
  } catch (const std::exception& e) {
    std::cerr << "mosp: internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitInternal;
}

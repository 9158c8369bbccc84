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

// bench: runs a list of instances under several configurations and writes
// one CSV row per run plus aggregate rows.
//
// Instance list format, one instance per line, '#' starts a comment:
//
//   <name> <start|-> <goal|-> <source> [<source> ...]
//
// start and goal are 1-based, '-' uses the endpoints stored with the graph.
// A source is a .gr path (relative to the list file), a synthetic cost
// name (unit, outdegree) or a single generator spec as accepted by solve.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>

#include "cli_common.hpp"

namespace mosp_cli {

namespace {

constexpr const char* kCsvHeader =
    "instance,algorithm,k,solved,heuristicTimeS,searchTimeS,solutions,expansions,generations,"
    "prunedByGTr,prunedBySolutions,quickPruneHits,repetitionIndex";

struct ListEntry {
  std::string name;
  std::optional<std::uint64_t> start;
  std::optional<std::uint64_t> goal;
  std::vector<std::string> sources;
  std::vector<std::string> synthetic;
};

struct Row {
  std::string instance;
  std::string algorithm;
  std::size_t k = 0;
  bool failed = false;
  bool solved = false;
  double heuristicSeconds = 0.0;
  double searchSeconds = 0.0;
  std::size_t solutions = 0;
  mosp_stats stats{};
  std::string repetition;
};

std::string seconds(double s) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(6) << s;
  return out.str();
}

void writeRow(std::ostream& out, const Row& r) {
  out << r.instance << ',' << r.algorithm << ',';
  if (r.failed) {
    out << (r.k ? std::to_string(r.k) : "") << ",false,,,,,,,,," << r.repetition << '\n';
    return;
  }
  out << r.k << ',' << (r.solved ? "true" : "false") << ',' << seconds(r.heuristicSeconds) << ','
      << seconds(r.searchSeconds) << ',' << r.solutions << ',' << r.stats.expansions << ','
      << r.stats.generations << ',' << r.stats.pruned_by_gtr << ','
      << r.stats.pruned_by_solutions << ',' << r.stats.quick_prune_hits << ',' << r.repetition
      << '\n';
}

std::optional<std::uint64_t> parseEndpoint(const std::string& token, std::size_t line) {
  if (token == "-") return std::nullopt;
  try {
    std::size_t used = 0;
    const auto v = std::stoull(token, &used);
    if (used == token.size()) return v;
  } catch (const std::exception&) {
  }
  throw CliError(kExitInput, "instance list line " + std::to_string(line) + ": bad endpoint '" +
                                 token + "'");
}

std::vector<ListEntry> readList(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CliError(kExitInput, "cannot open instance list " + path);
  const std::filesystem::path base = std::filesystem::path(path).parent_path();
  std::vector<ListEntry> entries;
  std::string line;
  std::size_t lineNo = 0;
  while (std::getline(in, line)) {
    ++lineNo;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream tokens(line);
    std::vector<std::string> t;
    for (std::string s; tokens >> s;) t.push_back(s);
    if (t.empty()) continue;
    if (t.size() < 4) {
      throw CliError(kExitInput, "instance list line " + std::to_string(lineNo) +
                                     ": expected <name> <start> <goal> <source>...");
    }
    ListEntry e;
    e.name = t[0];
    e.start = parseEndpoint(t[1], lineNo);
    e.goal = parseEndpoint(t[2], lineNo);
    for (std::size_t i = 3; i < t.size(); ++i) {
      if (t[i] == "unit" || t[i] == "outdegree") {
        e.synthetic.push_back(t[i]);
      } else if (t[i].rfind("grid:", 0) == 0 || t[i].rfind("random:", 0) == 0) {
        e.sources.push_back(t[i]);
      } else {
        std::filesystem::path p(t[i]);
        e.sources.push_back(p.is_absolute() ? p.string() : (base / p).string());
      }
    }
    entries.push_back(std::move(e));
  }
  return entries;
}

// The run with the median search time; the lower middle for even counts.
const Row& medianRun(const std::vector<Row>& runs) {
  std::vector<const Row*> sorted;
  for (const Row& r : runs) sorted.push_back(&r);
  std::sort(sorted.begin(), sorted.end(),
            [](const Row* a, const Row* b) { return a->searchSeconds < b->searchSeconds; });
  return *sorted[(sorted.size() - 1) / 2];
}

Row makeRow(const std::string& instance, const std::string& algorithm, std::size_t k) {
  Row r;
  r.instance = instance;
  r.algorithm = algorithm;
  r.k = k;
  return r;
}

struct Summary {
  bool solved = false;
  double searchSeconds = 0.0;
};

}  // namespace

int runBench(const std::string& listPath, const std::vector<std::string>& algorithms,
             mosp_upper_bounds ub, mosp_timing timing, double timeoutSeconds, int reps,
             std::uint64_t seed, const std::string& csvPath, bool virtualBest,
             const std::string& cactusPath, const std::string& scatterPath) {
  if (reps < 1) throw CliError(kExitInput, "--reps must be at least 1");
  std::vector<mosp_algorithm> algs;
  for (const auto& a : algorithms) algs.push_back(parseAlgorithmName(a));
  const std::vector<ListEntry> entries = readList(listPath);

  std::ofstream file;
  if (!csvPath.empty()) {
    file.open(csvPath);
    if (!file) throw CliError(kExitInput, "cannot write " + csvPath);
  }
  std::ostream& csv = csvPath.empty() ? std::cout : file;
  csv << kCsvHeader << '\n';

  // summary label -> instance -> representative run
  std::map<std::string, std::map<std::string, Summary>> summaries;
  std::vector<std::string> labels;
  auto summarize = [&](const std::string& label, const std::string& instance, const Row& r) {
    if (std::find(labels.begin(), labels.end(), label) == labels.end()) labels.push_back(label);
    summaries[label][instance] = Summary{!r.failed && r.solved, r.searchSeconds};
  };

  for (const ListEntry& entry : entries) {
    GraphPtr graph;
    HeuristicPtr heuristic;
    Endpoints ends{};
    std::string loadError;
    try {
      graph = loadGraph(entry.sources, entry.synthetic, seed);
      ends = resolveEndpoints(graph.get(), entry.start, entry.goal);
      mosp_heuristic* raw = nullptr;
      check(mosp_heuristic_compute(graph.get(), ends.goal, &raw), entry.name);
      heuristic.reset(raw);
    } catch (const CliError& e) {
      loadError = e.what();
    }
    if (!loadError.empty()) {
      std::cerr << "bench: " << entry.name << ": " << loadError << '\n';
      for (const auto& a : algorithms) {
        Row r = makeRow(entry.name, a, 0);
        r.failed = true;
        r.repetition = "0";
        writeRow(csv, r);
        summarize(a, entry.name, r);
      }
      continue;
    }
    const std::size_t k = mosp_graph_num_objectives(graph.get());
    const double heuristicSeconds = mosp_heuristic_seconds(heuristic.get());

    auto runOnce = [&](mosp_algorithm alg, std::uint32_t rotation, const std::string& label,
                       int rep) {
      Row r = makeRow(entry.name, label, k);
      r.repetition = std::to_string(rep);
      r.heuristicSeconds = heuristicSeconds;
      mosp_solve_options options;
      mosp_solve_options_init(&options);
      options.algorithm = alg;
      options.upper_bounds = ub;
      options.timing = timing;
      options.timeout_seconds = timeoutSeconds;
      options.rotation = rotation;
      mosp_result* raw = nullptr;
      if (mosp_solve(graph.get(), ends.start, ends.goal, heuristic.get(), &options, &raw) !=
          MOSP_OK) {
        std::cerr << "bench: " << entry.name << " " << label << ": " << mosp_last_error() << '\n';
        r.failed = true;
        return r;
      }
      ResultPtr result(raw);
      r.solved = !mosp_result_timed_out(raw);
      r.searchSeconds = mosp_result_search_seconds(raw);
      r.solutions = mosp_result_num_solutions(raw);
      mosp_result_stats(raw, &r.stats);
      return r;
    };

    for (std::size_t ai = 0; ai < algs.size(); ++ai) {
      const mosp_algorithm alg = algs[ai];
      const std::string& name = algorithms[ai];
      const bool parallel = alg == MOSP_ALG_LTMOA_PAR || alg == MOSP_ALG_NWMOA_PAR;
      if (virtualBest && !parallel) {
        std::optional<Row> best;
        for (std::uint32_t p = 0; p < k; ++p) {
          std::vector<Row> runs;
          for (int rep = 0; rep < reps; ++rep) {
            runs.push_back(runOnce(alg, p, name + "-p" + std::to_string(p), rep));
            writeRow(csv, runs.back());
          }
          const Row& m = medianRun(runs);
          const bool better = !best || (m.solved && !best->solved) ||
                              (m.solved == best->solved && m.searchSeconds < best->searchSeconds);
          if (!m.failed && better) best = m;
        }
        Row agg = makeRow(entry.name, name, k);
        if (best) {
          agg = *best;
        } else {
          agg.failed = true;
        }
        agg.algorithm = name + "-vb";
        agg.repetition = "min";
        writeRow(csv, agg);
        summarize(agg.algorithm, entry.name, agg);
        continue;
      }
      std::vector<Row> runs;
      for (int rep = 0; rep < reps; ++rep) {
        runs.push_back(runOnce(alg, 0, name, rep));
        writeRow(csv, runs.back());
      }
      if (reps > 1) {
        Row agg = medianRun(runs);
        agg.repetition = "median";
        writeRow(csv, agg);
        summarize(name, entry.name, agg);
      } else {
        summarize(name, entry.name, runs.front());
      }
    }
  }
  csv.flush();

  if (!cactusPath.empty()) {
    std::ofstream out(cactusPath);
    if (!out) throw CliError(kExitInput, "cannot write " + cactusPath);
    out << "algorithm,solvedRank,searchTimeS\n";
    for (const auto& label : labels) {
      std::vector<double> times;
      for (const auto& [instance, s] : summaries[label]) {
        if (s.solved) times.push_back(s.searchSeconds);
      }
      std::sort(times.begin(), times.end());
      for (std::size_t i = 0; i < times.size(); ++i) {
        out << label << ',' << (i + 1) << ',' << seconds(times[i]) << '\n';
      }
    }
  }
  if (!scatterPath.empty()) {
    std::ofstream out(scatterPath);
    if (!out) throw CliError(kExitInput, "cannot write " + scatterPath);
    out << "instance";
    for (const auto& label : labels) out << ',' << label;
    out << '\n';
    for (const ListEntry& entry : entries) {
      out << entry.name;
      for (const auto& label : labels) {
        out << ',';
        auto it = summaries[label].find(entry.name);
        if (it != summaries[label].end() && it->second.solved) out << seconds(it->second.searchSeconds);
      }
      out << '\n';
    }
  }
  return kExitOk;
}

}  // namespace mosp_cli

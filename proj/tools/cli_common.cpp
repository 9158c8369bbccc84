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

#include "cli_common.hpp"

#include <charconv>
#include <sstream>

namespace mosp_cli {

namespace {

template <class T>
T parseNumber(const std::string& token, const std::string& spec) {
  T value{};
  if constexpr (std::is_floating_point_v<T>) {
    std::size_t used = 0;
    try {
      value = std::stod(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == token.size() && used > 0) return value;
  } else {
    auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec == std::errc() && end == token.data() + token.size()) return value;
  }
  throw CliError(kExitInput, "bad number '" + token + "' in '" + spec + "'");
}

GraphPtr generate(const std::string& spec, std::uint64_t defaultSeed) {
  const std::vector<std::string> parts = splitList(spec, ':');
  mosp_graph* raw = nullptr;
  if (parts[0] == "grid") {
    if (parts.size() != 4 && parts.size() != 5) {
      throw CliError(kExitInput, "expected grid:WxH:K:MAXCOST[:SEED], got '" + spec + "'");
    }
    const auto x = parts[1].find('x');
    if (x == std::string::npos) throw CliError(kExitInput, "grid size must be WxH in '" + spec + "'");
    const auto w = parseNumber<std::size_t>(parts[1].substr(0, x), spec);
    const auto h = parseNumber<std::size_t>(parts[1].substr(x + 1), spec);
    const auto k = parseNumber<std::size_t>(parts[2], spec);
    const auto maxCost = parseNumber<std::uint64_t>(parts[3], spec);
    const auto seed = parts.size() == 5 ? parseNumber<std::uint64_t>(parts[4], spec) : defaultSeed;
    check(mosp_graph_generate_grid(w, h, k, maxCost, seed, &raw), spec);
  } else {
    if (parts.size() != 5 && parts.size() != 6) {
      throw CliError(kExitInput, "expected random:N:DEGREE:K:MAXCOST[:SEED], got '" + spec + "'");
    }
    const auto n = parseNumber<std::size_t>(parts[1], spec);
    const auto degree = parseNumber<double>(parts[2], spec);
    const auto k = parseNumber<std::size_t>(parts[3], spec);
    const auto maxCost = parseNumber<std::uint64_t>(parts[4], spec);
    const auto seed = parts.size() == 6 ? parseNumber<std::uint64_t>(parts[5], spec) : defaultSeed;
    check(mosp_graph_generate_random(n, degree, k, maxCost, seed, &raw), spec);
  }
  return GraphPtr(raw);
}

bool isGeneratorSpec(const std::string& s) {
  return s.rfind("grid:", 0) == 0 || s.rfind("random:", 0) == 0;
}

}  // namespace

int exitCodeFor(mosp_status status) {
  switch (status) {
    case MOSP_OK:
      return kExitOk;
    case MOSP_ERR_INVALID_ARGUMENT:
    case MOSP_ERR_IO:
    case MOSP_ERR_PARSE:
    case MOSP_ERR_GRAPH:
    case MOSP_ERR_NOT_FOUND:
      return kExitInput;
    case MOSP_ERR_ORACLE_REFUSED:
      return kExitOracleRefused;
    case MOSP_ERR_INTERNAL:
      return kExitInternal;
  }
  return kExitInternal;
}

void check(mosp_status status, const std::string& context) {
  if (status == MOSP_OK) return;
  throw CliError(exitCodeFor(status), context + ": " + mosp_last_error());
}

std::vector<std::string> splitList(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep)) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

GraphPtr loadGraph(const std::vector<std::string>& sources,
                   const std::vector<std::string>& synthetic, std::uint64_t defaultSeed) {
  if (sources.empty()) throw CliError(kExitInput, "no graph given");
  if (sources.size() == 1 && isGeneratorSpec(sources[0])) {
    if (!synthetic.empty()) {
      throw CliError(kExitInput, "synthetic costs cannot be added to a generated graph");
    }
    return generate(sources[0], defaultSeed);
  }
  mosp_graph* raw = nullptr;
  if (sources.size() == 1 && synthetic.empty()) {
    check(mosp_graph_read(sources[0].c_str(), &raw), sources[0]);
    return GraphPtr(raw);
  }
  std::vector<const char*> paths;
  for (const auto& s : sources) paths.push_back(s.c_str());
  std::vector<const char*> names;
  for (const auto& s : synthetic) names.push_back(s.c_str());
  check(mosp_graph_compose(paths.data(), paths.size(), names.data(), names.size(), &raw),
        "compose");
  return GraphPtr(raw);
}

Endpoints resolveEndpoints(const mosp_graph* graph, std::optional<std::uint64_t> start1,
                           std::optional<std::uint64_t> goal1) {
  std::uint32_t start = 0;
  std::uint32_t goal = 0;
  const bool stored = mosp_graph_endpoints(graph, &start, &goal) != 0;
  const std::size_t n = mosp_graph_num_states(graph);
  auto fromOneBased = [n](std::uint64_t v, const char* what) {
    if (v < 1 || v > n) {
      throw CliError(kExitInput, std::string(what) + " " + std::to_string(v) +
                                     " is outside 1.." + std::to_string(n));
    }
    return static_cast<std::uint32_t>(v - 1);
  };
  if (start1) {
    start = fromOneBased(*start1, "start");
  } else if (!stored) {
    throw CliError(kExitInput, "no start state given and none stored with the graph");
  }
  if (goal1) {
    goal = fromOneBased(*goal1, "goal");
  } else if (!stored) {
    throw CliError(kExitInput, "no goal state given and none stored with the graph");
  }
  return {start, goal};
}

mosp_upper_bounds parseUpperBounds(const std::string& name) {
  if (name == "full") return MOSP_UB_FULL;
  if (name == "noub") return MOSP_UB_NONE;
  throw CliError(kExitInput, "unknown upper-bound mode '" + name + "'");
}

mosp_timing parseTiming(const std::string& name) {
  if (name == "lazy") return MOSP_TIMING_LAZY;
  if (name == "eager") return MOSP_TIMING_EAGER;
  throw CliError(kExitInput, "unknown dominance timing '" + name + "'");
}

mosp_algorithm parseAlgorithmName(const std::string& name) {
  mosp_algorithm a = MOSP_ALG_LTMOA;
  if (mosp_parse_algorithm(name.c_str(), &a) != MOSP_OK) {
    throw CliError(kExitInput, mosp_last_error());
  }
  return a;
}

std::vector<std::uint64_t> resultCosts(const mosp_result* result) {
  const std::size_t k = mosp_result_num_objectives(result);
  const std::size_t n = mosp_result_num_solutions(result);
  std::vector<std::uint64_t> costs(n * k);
  for (std::size_t i = 0; i < n; ++i) check(mosp_result_cost(result, i, &costs[i * k]), "result");
  return costs;
}

}  // namespace mosp_cli

// Copyright 2026 The Conga Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "conga/bench/bench.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <chrono>
#include <cstdio>
#include <random>
#include <sstream>
#include <stdexcept>

#include "conga/games/families.h"
#include "conga/games/game_file.h"
#include "conga/oracle/normal_form.h"
#include "conga/solvers/enum1.h"
#include "json.hpp"

namespace conga::bench {
namespace {

using nlohmann::json;

std::string_view Trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

std::vector<std::string_view> Split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  while (true) {
    const auto pos = s.find(sep);
    out.push_back(Trim(s.substr(0, pos)));
    if (pos == std::string_view::npos) return out;
    s.remove_prefix(pos + 1);
  }
}

template <typename T>
T Number(std::string_view key, std::string_view text) {
  T v{};
  const auto res = std::from_chars(text.data(), text.data() + text.size(), v);
  if (res.ec != std::errc() || res.ptr != text.data() + text.size()) {
    throw std::invalid_argument("bad value for " + std::string(key) + ": '" +
                                std::string(text) + "'");
  }
  return v;
}

std::vector<Value> Numbers(std::string_view key, std::string_view text) {
  std::vector<Value> out;
  if (Trim(text).empty()) return out;
  for (auto part : Split(text, ',')) out.push_back(Number<Value>(key, part));
  return out;
}

// Clients with one task of size 1..3 each, machines with unit cost 1..5 and
// enough room between them for every task.
Game RandomCrag(int clients, int machines, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::vector<Value>> demands;
  Value total = 0;
  for (int i = 0; i < clients; ++i) {
    const Value d = 1 + static_cast<Value>(rng() % 3);
    demands.push_back({d});
    total += d;
  }
  std::vector<Value> caps(machines, (total + machines - 1) / machines + 1);
  std::vector<Value> costs;
  for (int j = 0; j < machines; ++j) {
    costs.push_back(1 + static_cast<Value>(rng() % 5));
  }
  return games::Crag(caps, costs, demands);
}

std::string Describe(const GameSource& s) {
  if (!s.file.empty()) return s.file;
  return s.family + "." + std::to_string(s.players) + "." +
         std::to_string(s.domain);
}

}  // namespace

Game MakeGame(const GameSource& s) {
  if (!s.file.empty()) return games::LoadGame(s.file);
  const int n = s.players;
  const int m = s.domain;
  const std::string& f = s.family;
  if (f == "gtta") return games::Gtta(n, m);
  if (f == "meg") return games::Meg(n, m, s.a.value_or(2), s.b.value_or(1));
  if (f == "td") return games::Td(n, m, s.reward.value_or(2));
  if (f == "cg") return games::Congestion(n, m, s.seed.value_or(1));
  if (f == "lg-hc") {
    std::vector<Value> prices = s.prices;
    if (prices.empty()) prices.assign(std::max(n, 0), 1);
    return games::LocationHc(n, m, prices);
  }
  if (f == "lg-gv") {
    if (n != 2) throw std::invalid_argument("lg-gv has exactly 2 players");
    return games::LocationGamut(m, {}, s.seed);
  }
  if (f == "crag") {
    if (s.caps.empty() && s.costs.empty() && s.demands.empty()) {
      return RandomCrag(n, m, s.seed.value_or(1));
    }
    return games::Crag(s.caps, s.costs, s.demands);
  }
  throw std::invalid_argument("unknown game family '" + f +
                              "' (expected gtta, meg, td, cg, crag, lg-hc, "
                              "lg-gv)");
}

void SetParam(GameSource& s, std::string_view key, std::string_view value) {
  if (key == "players") {
    s.players = Number<int>(key, value);
  } else if (key == "domain") {
    s.domain = Number<int>(key, value);
  } else if (key == "a") {
    s.a = Number<Value>(key, value);
  } else if (key == "b") {
    s.b = Number<Value>(key, value);
  } else if (key == "reward") {
    s.reward = Number<Value>(key, value);
  } else if (key == "seed") {
    s.seed = Number<std::uint64_t>(key, value);
  } else if (key == "prices") {
    s.prices = Numbers(key, value);
  } else if (key == "caps") {
    s.caps = Numbers(key, value);
  } else if (key == "costs") {
    s.costs = Numbers(key, value);
  } else if (key == "demands") {
    s.demands.clear();
    for (auto client : Split(value, ';')) {
      s.demands.push_back(Numbers(key, client));
    }
  } else if (key == "file") {
    s.file = std::string(value);
  } else {
    throw std::invalid_argument("unknown parameter '" + std::string(key) + "'");
  }
}

std::string SolverName(SolverKind kind) {
  switch (kind) {
    case SolverKind::kEnum1:
      return "enum1";
    case SolverKind::kConga:
      return "conga";
    case SolverKind::kOracle:
      return "oracle";
  }
  return "";
}

SolverKind ParseSolver(std::string_view name) {
  if (name == "enum1") return SolverKind::kEnum1;
  if (name == "conga") return SolverKind::kConga;
  if (name == "oracle") return SolverKind::kOracle;
  throw std::invalid_argument("unknown solver '" + std::string(name) +
                              "' (expected enum1, conga or oracle)");
}

RunReport Run(const Game& game, const RunConfig& config) {
  RunReport r;
  r.game = game.name();
  r.solver = SolverName(config.solver);
  SolveControl control;
  if (config.timeout) {
    control.deadline =
        Clock::now() + std::chrono::duration_cast<Clock::duration>(
                           std::chrono::duration<double>(*config.timeout));
  }
  control.stop_after_first = config.stop_after_first;
  const auto start = Clock::now();
  try {
    SolveResult res;
    switch (config.solver) {
      case SolverKind::kEnum1:
        res = SolveEnum1(game, control);
        break;
      case SolverKind::kConga:
        res = SolveConga(game, config.conga, control);
        break;
      case SolverKind::kOracle: {
        const auto tensor = oracle::Expand(game);
        res.pne = oracle::BruteForcePne(tensor);
        res.stats.candidates = tensor.num_cells();
        res.stats.deviation_calls =
            tensor.num_cells() * static_cast<std::uint64_t>(game.num_players());
        if (config.stop_after_first && res.pne.size() > 1) {
          res.pne.resize(1);
          res.stopped_early = true;
        }
        res.stats.pne_found = res.pne.size();
        break;
      }
    }
    r.stats = res.stats;
    r.pne_count = res.pne.size();
    r.timed_out = res.timed_out;
    r.partial = !res.complete();
    if (config.keep_pne) {
      for (auto& s : res.pne) r.pne.push_back(std::move(s.values));
    }
  } catch (const std::exception& e) {
    r.error = e.what();
    r.partial = true;
  }
  r.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                     Clock::now() - start)
                     .count();
  return r;
}

std::string ToJson(const RunReport& r) {
  json j;
  j["game"] = r.game;
  j["solver"] = r.solver;
  j["elapsed_ms"] = r.elapsed_ms;
  j["candidates"] = r.stats.candidates;
  j["deviation_calls"] = r.stats.deviation_calls;
  j["pne_found"] = r.stats.pne_found;
  j["pne_count"] = r.pne_count;
  j["pne"] = r.pne;
  j["timed_out"] = r.timed_out;
  j["partial"] = r.partial;
  j["error"] = r.error.empty() ? json(nullptr) : json(r.error);
  return j.dump();
}

RunReport ReportFromJson(std::string_view line) {
  try {
    const json j = json::parse(line);
    RunReport r;
    r.game = j.at("game").get<std::string>();
    r.solver = j.at("solver").get<std::string>();
    r.elapsed_ms = j.at("elapsed_ms").get<std::int64_t>();
    r.stats.candidates = j.at("candidates").get<std::uint64_t>();
    r.stats.deviation_calls = j.at("deviation_calls").get<std::uint64_t>();
    r.stats.pne_found = j.at("pne_found").get<std::uint64_t>();
    r.pne_count = j.at("pne_count").get<std::uint64_t>();
    r.pne = j.at("pne").get<std::vector<std::vector<Value>>>();
    r.timed_out = j.at("timed_out").get<bool>();
    r.partial = j.at("partial").get<bool>();
    const json& err = j.at("error");
    if (!err.is_null()) r.error = err.get<std::string>();
    return r;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("bad report record: ") + e.what());
  }
}

std::vector<SuiteRow> ParseSuite(std::string_view text) {
  std::vector<SuiteRow> rows;
  int line_no = 0;
  for (auto line : Split(text, '\n')) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = Trim(line.substr(0, hash));
    }
    if (line.empty()) continue;
    try {
      SuiteRow row;
      bool first = true;
      std::istringstream words{std::string(line)};
      std::string word;
      while (words >> word) {
        const auto eq = word.find('=');
        if (eq == std::string::npos) {
          if (!first) throw std::invalid_argument("unexpected '" + word + "'");
          row.source.family = word;
        } else {
          const std::string key = word.substr(0, eq);
          const std::string value = word.substr(eq + 1);
          if (key == "solvers") {
            for (auto name : Split(value, ',')) {
              row.solvers.push_back(ParseSolver(name));
            }
          } else {
            SetParam(row.source, key, value);
          }
        }
        first = false;
      }
      if (row.source.family.empty() == row.source.file.empty()) {
        throw std::invalid_argument("give either a family or file=");
      }
      if (row.solvers.empty()) {
        row.solvers = {SolverKind::kConga, SolverKind::kEnum1};
      }
      rows.push_back(std::move(row));
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument("suite line " + std::to_string(line_no) +
                                  ": " + e.what());
    }
  }
  return rows;
}

std::vector<SuiteRow> DefaultSuite() {
  std::vector<SuiteRow> rows;
  const std::vector<SolverKind> both = {SolverKind::kConga, SolverKind::kEnum1};
  for (const auto& [family, m] :
       std::vector<std::pair<std::string, int>>{
           {"gtta", 100}, {"meg", 100}, {"td", 99}}) {
    SuiteRow row;
    row.source.family = family;
    row.source.players = 3;
    row.source.domain = m;
    row.solvers = both;
    rows.push_back(row);
  }
  return rows;
}

std::vector<RunReport> RunSuite(const std::vector<SuiteRow>& rows,
                                const RunConfig& base) {
  std::vector<RunReport> out;
  for (const auto& row : rows) {
    std::optional<Game> game;
    std::string build_error;
    try {
      game = MakeGame(row.source);
    } catch (const std::exception& e) {
      build_error = e.what();
    }
    // Solver name and PNE set of the first run of the row that finished.
    std::optional<std::pair<std::string, std::vector<std::vector<Value>>>>
        reference;
    const std::size_t first = out.size();
    for (SolverKind kind : row.solvers) {
      RunConfig config = base;
      config.solver = kind;
      config.keep_pne = true;
      RunReport r;
      if (!game) {
        r.game = Describe(row.source);
        r.solver = SolverName(kind);
        r.error = build_error;
        r.partial = true;
      } else {
        r = Run(*game, config);
      }
      if (r.error.empty() && !r.partial) {
        if (!reference) {
          reference.emplace(r.solver, r.pne);
        } else if (r.pne != reference->second) {
          r.error = "PNE set differs from " + reference->first;
        }
      }
      out.push_back(std::move(r));
    }
    if (!base.keep_pne) {
      for (std::size_t k = first; k < out.size(); ++k) out[k].pne.clear();
    }
  }
  return out;
}

std::string FormatTable(const std::vector<RunReport>& reports) {
  const std::vector<std::string> head = {"Game", "Solver", "Time(s)", "#Cand",
                                         "#Dev", "#PNE",   "Status"};
  std::vector<std::vector<std::string>> rows = {head};
  for (const auto& r : reports) {
    char time[32];
    std::snprintf(time, sizeof(time), "%.3f",
                  static_cast<double>(r.elapsed_ms) / 1000.0);
    std::string status = "ok";
    if (!r.error.empty()) {
      status = "error: " + r.error;
    } else if (r.timed_out) {
      status = "timeout (partial)";
    } else if (r.partial) {
      status = "stopped early";
    }
    rows.push_back({r.game, r.solver, time, std::to_string(r.stats.candidates),
                    std::to_string(r.stats.deviation_calls),
                    std::to_string(r.pne_count), status});
  }
  std::vector<std::size_t> width(head.size(), 0);
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      width[c] = std::max(width[c], row[c].size());
    }
  }
  std::string out;
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      // Text columns to the left, numbers to the right.
      const std::string pad(width[c] - row[c].size(), ' ');
      const bool left = c < 2 || c + 1 == row.size();
      if (c > 0) line += "  ";
      line += left ? row[c] + (c + 1 == row.size() ? "" : pad) : pad + row[c];
    }
    out += line + "\n";
  }
  return out;
}

}  // namespace conga::bench

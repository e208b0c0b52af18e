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

// Command-line front end.
//
//   conga solve --game gtta --players 3 --domain 100 --solver conga
//   conga solve --file data/games/matrix.game --format jsonl
//   conga bench [--suite suite.txt] [--records out.jsonl]
//   conga gen --game crag --players 3 --domain 2 --out crag.game
//   conga export-nfg --game gtta --players 2 --domain 3 --out gtta.nfg
//
// Exit status: 0 solved, 2 timed out, 1 error.

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "conga/bench/bench.h"
#include "conga/games/game_file.h"
#include "conga/oracle/normal_form.h"

namespace {

using conga::bench::GameSource;
using conga::bench::RunConfig;
using conga::bench::RunReport;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitTimeout = 2;

// Family parameters as typed on the command line, applied with SetParam.
struct SourceFlags {
  std::string family;
  std::string file;
  std::map<std::string, std::string> params;

  void Register(CLI::App* app) {
    auto* game = app->add_option("--game", family,
                                 "Game family: gtta, meg, td, cg, crag, "
                                 "lg-hc, lg-gv");
    auto* file_opt =
        app->add_option("--file", file, "Game file (see docs/game-format.md)");
    game->excludes(file_opt);
    const std::pair<const char*, const char*> keys[] = {
        {"players", "Number of players"},
        {"domain", "Strategies per player (facilities for cg, machines for crag)"},
        {"a", "MEG payoff weight of the minimum effort"},
        {"b", "MEG cost of own effort"},
        {"reward", "TD reward/penalty"},
        {"prices", "LG(HC) prices, comma separated"},
        {"caps", "CRAG machine capacities, comma separated"},
        {"costs", "CRAG unit costs, comma separated"},
        {"demands", "CRAG task sizes: clients separated by ';', tasks by ','"},
        {"seed", "Random seed (cg, crag, lg-gv)"},
    };
    for (const auto& [key, help] : keys) {
      app->add_option(std::string("--") + key, params[key], help);
    }
  }

  GameSource Build() const {
    if (family.empty() == file.empty()) {
      throw CLI::ValidationError("give exactly one of --game and --file");
    }
    GameSource s;
    s.family = family;
    s.file = file;
    for (const auto& [key, value] : params) {
      if (!value.empty()) conga::bench::SetParam(s, key, value);
    }
    return s;
  }
};

std::string ProfileText(const std::vector<conga::Value>& v) {
  std::string s = "(";
  for (std::size_t k = 0; k < v.size(); ++k) {
    s += (k ? ", " : "") + std::to_string(v[k]);
  }
  return s + ")";
}

int ExitCode(const RunReport& r) {
  if (!r.error.empty()) return kExitError;
  return r.timed_out ? kExitTimeout : kExitOk;
}

void PrintHuman(const RunReport& r, bool list) {
  std::cout << "game      " << r.game << "\n"
            << "solver    " << r.solver << "\n"
            << "time      " << r.elapsed_ms / 1000.0 << " s\n"
            << "#Cand     " << r.stats.candidates << "\n"
            << "#Dev      " << r.stats.deviation_calls << "\n"
            << "#PNE      " << r.pne_count << (r.partial ? " (partial)" : "")
            << "\n";
  if (r.timed_out) std::cout << "status    timeout\n";
  if (!r.error.empty()) std::cout << "status    error: " << r.error << "\n";
  if (list) {
    for (const auto& s : r.pne) std::cout << ProfileText(s) << "\n";
  }
}

// Writes to `path`, or stdout when empty.
void WriteOut(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
  if (!out) throw std::runtime_error("cannot write " + path);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pure Nash equilibria of constraint games"};
  app.require_subcommand(1);

  // solve
  auto* solve = app.add_subcommand("solve", "Enumerate the pure equilibria");
  SourceFlags solve_src;
  solve_src.Register(solve);
  std::string solver = "conga";
  std::optional<double> timeout;
  bool first = false;
  std::string format = "human";
  bool no_list = false;
  RunConfig config;
  bool no_tables = false, no_counters = false;
  solve->add_option("--solver", solver, "enum1, conga or oracle")
      ->capture_default_str();
  solve->add_option("--timeout", timeout, "Seconds before giving up")
      ->check(CLI::PositiveNumber);
  solve->add_flag("--first", first, "Stop at the first equilibrium");
  solve->add_option("--format", format, "human or jsonl")
      ->check(CLI::IsMember({"human", "jsonl"}))
      ->capture_default_str();
  solve->add_flag("--no-list", no_list, "Print counts only");
  solve->add_flag("--no-tables", no_tables, "conga: disable best-response tables");
  solve->add_flag("--no-counters", no_counters,
                  "conga: disable never-best-response pruning");
  solve->add_option("--threads", config.conga.threads, "conga: worker threads")
      ->check(CLI::PositiveNumber);

  // bench
  auto* bench = app.add_subcommand("bench", "Run a suite of games and solvers");
  std::string suite_path;
  std::string records_path;
  std::optional<double> bench_timeout;
  std::string bench_format = "human";
  bench->add_option("--suite", suite_path,
                    "Suite file; default GTTA.3.100, MEG.3.100, TD.3.99");
  bench->add_option("--records", records_path, "Also write JSON lines here");
  bench->add_option("--timeout", bench_timeout, "Seconds per run")
      ->check(CLI::PositiveNumber);
  bench->add_option("--format", bench_format, "human or jsonl")
      ->check(CLI::IsMember({"human", "jsonl"}))
      ->capture_default_str();

  // gen
  auto* gen = app.add_subcommand("gen", "Write a game in the game-file format");
  SourceFlags gen_src;
  gen_src.Register(gen);
  std::string gen_out;
  gen->add_option("--out", gen_out, "Output path; default stdout");

  // export-nfg
  auto* nfg = app.add_subcommand("export-nfg", "Write a Gambit .nfg file");
  SourceFlags nfg_src;
  nfg_src.Register(nfg);
  std::string nfg_out;
  std::uint64_t cap = conga::oracle::kDefaultCellCap;
  nfg->add_option("--out", nfg_out, "Output path; default stdout");
  nfg->add_option("--cap", cap, "Largest number of cells allowed")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    if (*solve) {
      const conga::Game game = conga::bench::MakeGame(solve_src.Build());
      config.solver = conga::bench::ParseSolver(solver);
      config.timeout = timeout;
      config.stop_after_first = first;
      config.keep_pne = !no_list || format == "jsonl";
      config.conga.use_tables = !no_tables;
      config.conga.use_counters = !no_counters;
      for (const auto& w : game.warnings()) {
        std::cerr << "warning: " << w << "\n";
      }
      const RunReport r = conga::bench::Run(game, config);
      if (format == "jsonl") {
        std::cout << conga::bench::ToJson(r) << "\n";
      } else {
        PrintHuman(r, !no_list);
      }
      if (!r.error.empty()) std::cerr << "error: " << r.error << "\n";
      return ExitCode(r);
    }

    if (*bench) {
      std::vector<conga::bench::SuiteRow> rows;
      if (suite_path.empty()) {
        rows = conga::bench::DefaultSuite();
      } else {
        std::ifstream in(suite_path);
        if (!in) throw std::runtime_error("cannot open " + suite_path);
        std::ostringstream text;
        text << in.rdbuf();
        rows = conga::bench::ParseSuite(text.str());
      }
      RunConfig base;
      base.timeout = bench_timeout;
      base.keep_pne = false;
      const auto reports = conga::bench::RunSuite(rows, base);
      std::string records;
      for (const auto& r : reports) records += conga::bench::ToJson(r) + "\n";
      if (bench_format == "jsonl") {
        std::cout << records;
      } else {
        std::cout << conga::bench::FormatTable(reports);
      }
      if (!records_path.empty()) WriteOut(records_path, records);
      int code = kExitOk;
      for (const auto& r : reports) {
        const int c = ExitCode(r);
        if (c == kExitError) code = kExitError;
        if (c == kExitTimeout && code == kExitOk) code = kExitTimeout;
      }
      return code;
    }

    if (*gen) {
      const conga::Game game = conga::bench::MakeGame(gen_src.Build());
      WriteOut(gen_out, conga::games::SerializeGame(game));
      return kExitOk;
    }

    if (*nfg) {
      const conga::Game game = conga::bench::MakeGame(nfg_src.Build());
      const auto tensor = conga::oracle::Expand(game, cap);
      WriteOut(nfg_out, conga::oracle::ExportNfg(tensor));
      return kExitOk;
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  } catch (const conga::oracle::UnsupportedError& e) {
    std::cerr << "error: " << e.what() << " (not applicable)\n";
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}

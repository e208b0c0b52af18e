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

// Running solvers on named games and collecting comparable reports.

#ifndef CONGA_BENCH_BENCH_H_
#define CONGA_BENCH_BENCH_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "conga/game/game.h"
#include "conga/solvers/conga.h"

namespace conga::bench {

// Where a game comes from: a family with parameters, or a game file.
struct GameSource {
  // gtta, meg, td, cg, crag, lg-hc, lg-gv; empty when `file` is set.
  std::string family;
  std::string file;
  int players = 3;
  int domain = 10;  // strategies per player, facilities for cg
  std::optional<Value> a, b;      // meg
  std::optional<Value> reward;    // td
  std::vector<Value> prices;      // lg-hc, one per vendor; default all 1
  std::vector<Value> caps;        // crag, one per machine
  std::vector<Value> costs;       // crag, unit cost per machine
  std::vector<std::vector<Value>> demands;  // crag, tasks per client
  std::optional<std::uint64_t> seed;        // cg, crag, lg-gv
};

// Throws std::invalid_argument for unknown families or bad parameters and
// games::GameFileError for unreadable files.
Game MakeGame(const GameSource& source);

// Sets one parameter from its textual form, as in suite files and on the
// command line: players=3, prices=1,2,3, demands=2,2;1,2 ... Throws
// std::invalid_argument.
void SetParam(GameSource& source, std::string_view key, std::string_view value);

enum class SolverKind { kEnum1, kConga, kOracle };

std::string SolverName(SolverKind kind);
// Throws std::invalid_argument.
SolverKind ParseSolver(std::string_view name);

struct RunConfig {
  SolverKind solver = SolverKind::kConga;
  // Seconds; none when unset.
  std::optional<double> timeout;
  bool stop_after_first = false;
  bool keep_pne = true;
  CongaOptions conga;
};

struct RunReport {
  std::string game;
  std::string solver;
  std::int64_t elapsed_ms = 0;
  SolveStats stats;
  std::uint64_t pne_count = 0;
  // Empty unless requested; may be incomplete when `partial`.
  std::vector<std::vector<Value>> pne;
  bool timed_out = false;
  // The PNE list is not known to be complete.
  bool partial = false;
  std::string error;  // empty on success

  friend bool operator==(const RunReport&, const RunReport&) = default;
};

RunReport Run(const Game& game, const RunConfig& config);

// One JSON object, no newline. See README.md for the fields.
std::string ToJson(const RunReport& report);
// Throws std::invalid_argument on malformed input.
RunReport ReportFromJson(std::string_view line);

struct SuiteRow {
  GameSource source;
  std::vector<SolverKind> solvers;
};

// One row per non-blank line, "#" comments:
//   gtta players=3 domain=100 solvers=conga,enum1
//   file=data/games/matrix.game solvers=oracle
// Throws std::invalid_argument with the line number.
std::vector<SuiteRow> ParseSuite(std::string_view text);

// GTTA.3.100, MEG.3.100 and TD.3.99, each with conga and enum1.
std::vector<SuiteRow> DefaultSuite();

// Runs rows in order, continuing after failures. Runs of one row that
// finished must agree on the PNE set; a disagreement is recorded in the
// error field of the later report.
std::vector<RunReport> RunSuite(const std::vector<SuiteRow>& rows,
                                const RunConfig& base);

// Aligned table with one line per report.
std::string FormatTable(const std::vector<RunReport>& reports);

}  // namespace conga::bench

#endif  // CONGA_BENCH_BENCH_H_

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

// ConGa: depth-first search over the players' strategies in player order,
// with hard-constraint propagation at every level, per-player best-response
// tables, and never-best-response counters that cut a level short once
// every opponent context of the current subgame has been answered.

#ifndef CONGA_SOLVERS_CONGA_H_
#define CONGA_SOLVERS_CONGA_H_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "conga/game/game.h"
#include "conga/solvers/solve.h"

namespace conga {

struct CongaOptions {
  // When off every table lookup misses. Entries are still recorded so the
  // counters keep working.
  bool use_tables = true;
  // When off no level is ever cut short.
  bool use_counters = true;
  // Entries per player table; 0 is unbounded. A full table at a deeper
  // level refuses new entries and stops counting until it is reset; a full
  // table for the first player evicts its oldest entry and stops counting
  // for the rest of the run.
  std::size_t table_capacity = 0;
  // Above 1, the first player's strategies are dealt round-robin to this
  // many independent searches whose results are merged.
  int threads = 1;
  bool record_trace = false;
};

// One Nash-check step: player `player` examined at `profile`.
struct DeviationCheck {
  StrategyProfile profile;
  int player = 0;
  bool from_table = false;
  bool all = false;  // the player's goal cannot be met in this context
  std::vector<PlayerStrategy> best;
};

// A level cut short by its counter.
struct SkipRecord {
  int level = 0;
  // Strategies of the players before `level`.
  std::vector<PlayerStrategy> prefix;
  // Remaining strategies of the player at `level` that were not searched.
  std::vector<PlayerStrategy> unexplored;
  // The subset of `unexplored` never submitted from the table either.
  std::vector<PlayerStrategy> skipped;
};

struct CongaTrace {
  std::vector<DeviationCheck> checks;
  std::vector<SkipRecord> skips;
  // Profiles re-submitted from a table after a cut, in submission order.
  std::vector<StrategyProfile> resubmitted;
  // Table hits at levels below the first on an entry recorded under a
  // different first-player branch.
  std::uint64_t cross_branch_hits = 0;
};

struct CongaResult : SolveResult {
  CongaTrace trace;  // filled only with record_trace
};

// stats.candidates counts full profiles submitted to Nash checking,
// including those re-submitted from a table after a cut. deviation_calls
// counts best-response computations; table hits are free.
CongaResult SolveConga(const Game& game, const CongaOptions& options = {},
                       const SolveControl& control = {});

}  // namespace conga

#endif  // CONGA_SOLVERS_CONGA_H_

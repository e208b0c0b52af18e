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

#ifndef CONGA_SOLVERS_SOLVE_H_
#define CONGA_SOLVERS_SOLVE_H_

#include <chrono>
#include <optional>
#include <vector>

#include "conga/game/game.h"

namespace conga {

using Clock = std::chrono::steady_clock;

struct SolveControl {
  // Give up once this point is passed; the result is then partial.
  std::optional<Clock::time_point> deadline;
  // Return as soon as one equilibrium is known.
  bool stop_after_first = false;

  bool Expired() const { return deadline && Clock::now() >= *deadline; }
};

struct SolveResult {
  // Lexicographic order.
  std::vector<StrategyProfile> pne;
  SolveStats stats;
  bool timed_out = false;
  bool stopped_early = false;

  // False when the search did not run to completion.
  bool complete() const { return !timed_out && !stopped_early; }
};

}  // namespace conga

#endif  // CONGA_SOLVERS_SOLVE_H_

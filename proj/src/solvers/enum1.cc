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

#include "conga/solvers/enum1.h"

#include "conga/game/evaluation.h"

namespace conga {

SolveResult SolveEnum1(const Game& game, const SolveControl& control) {
  SolveResult result;
  const int n = game.num_players();
  std::vector<std::uint64_t> idx(n, 0);
  std::vector<std::uint64_t> size(n);
  for (int p = 0; p < n; ++p) size[p] = game.strategies(PlayerId{p}).size();

  while (true) {
    if ((result.stats.candidates & 63) == 0 && control.Expired()) {
      result.timed_out = true;
      break;
    }
    const StrategyProfile s = game.ProfileFromIndices(idx);
    ++result.stats.candidates;
    if (IsNash(game, s, &result.stats)) {
      result.pne.push_back(s);
      ++result.stats.pne_found;
      if (control.stop_after_first) {
        result.stopped_early = true;
        break;
      }
    }
    int p = n - 1;
    while (p >= 0 && ++idx[p] == size[p]) {
      idx[p] = 0;
      --p;
    }
    if (p < 0) break;
  }
  return result;
}

}  // namespace conga

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

// Game-theoretic queries on a single profile. All of them are answered by
// the player's goal solver (or the hard-constraint solver); existential
// variables are always projected out.

#ifndef CONGA_GAME_EVALUATION_H_
#define CONGA_GAME_EVALUATION_H_

#include <optional>
#include <vector>

#include "conga/game/game.h"

namespace conga {

// A player's payoff at a profile, normalized so that larger is better.
// Satisfaction games: 1 when the goal holds, 0 otherwise. Optimization
// games: the best objective value over existential witnesses satisfying the
// goal (negated for minimization), or nullopt when no witness exists, which
// ranks below every defined value.
using Utility = std::optional<Value>;

// True iff `a` is strictly preferred to `b`.
bool Improves(const Utility& a, const Utility& b);

bool CheckHard(const Game& game, const StrategyProfile& s);
bool IsWinning(const Game& game, const StrategyProfile& s, PlayerId i);
Utility UtilityOf(const Game& game, const StrategyProfile& s, PlayerId i);

// True iff player i strictly prefers `alt` to `s`. Throws
// std::invalid_argument if the profiles differ outside player i's variables.
bool BetterThan(const Game& game, const StrategyProfile& alt,
                const StrategyProfile& s, PlayerId i);

// Player i's best responses to the other players' part of `s`, sorted
// lexicographically. Hard constraints are not imposed. Empty when the goal
// is unsatisfiable for every strategy of player i.
std::vector<PlayerStrategy> BestResponses(const Game& game,
                                          const StrategyProfile& s,
                                          PlayerId i);

// One goal-solver search for a strictly better strategy of player i.
bool HasBeneficialDeviation(const Game& game, const StrategyProfile& s,
                            PlayerId i);

// Hard constraints hold and no player has a beneficial deviation. Players
// are checked in order, stopping at the first deviation; each check adds
// one to `stats->deviation_calls` when `stats` is given.
bool IsNash(const Game& game, const StrategyProfile& s,
            SolveStats* stats = nullptr);

}  // namespace conga

#endif  // CONGA_GAME_EVALUATION_H_

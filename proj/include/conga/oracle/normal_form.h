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

// Dense normal form of a game: every player's payoff in every cell of the
// strategy cross product. Exponential in the number of players; meant for
// small games, as a reference and for export to Gambit.

#ifndef CONGA_ORACLE_NORMAL_FORM_H_
#define CONGA_ORACLE_NORMAL_FORM_H_

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "conga/game/evaluation.h"
#include "conga/game/game.h"

namespace conga::oracle {

inline constexpr std::uint64_t kDefaultCellCap = 1'000'000;
inline constexpr std::uint64_t kDefaultGgsCap = 100'000;

// Raised when a game has more cells than allowed.
class TooLargeError : public std::length_error {
 public:
  TooLargeError(std::uint64_t cells, std::uint64_t cap);
  std::uint64_t cells() const { return cells_; }

 private:
  std::uint64_t cells_;
};

// Raised when a game uses something the target format cannot express.
class UnsupportedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Cells are numbered with player 0's strategy index varying fastest, as in
// Gambit files.
struct PayoffTensor {
  std::string title;
  std::vector<std::string> player_names;
  // strategies[p][k] is player p's k-th strategy.
  std::vector<std::vector<PlayerStrategy>> strategies;
  // utility[p][cell], to be maximized: 1/0 for satisfaction goals, the
  // objective (negated for minimization) otherwise. nullopt marks a cell
  // where the player's goal cannot be met ("no preference").
  std::vector<std::vector<Utility>> utility;
  // False where the hard constraints are violated.
  std::vector<bool> valid;
  bool has_hard_constraints = false;

  int num_players() const { return static_cast<int>(strategies.size()); }
  std::uint64_t num_cells() const { return valid.size(); }
  std::vector<std::uint64_t> IndicesOf(std::uint64_t cell) const;
  std::uint64_t CellOf(const std::vector<std::uint64_t>& indices) const;
  StrategyProfile Profile(std::uint64_t cell) const;
};

// Evaluates every cell with the game's own goal solvers. Throws
// TooLargeError when the game has more than `cap` cells. Cells are split
// across `threads` workers; the result does not depend on the split.
PayoffTensor Expand(const Game& game, std::uint64_t cap = kDefaultCellCap,
                    int threads = 1);

// Valid cells from which no player strictly improves by changing only its
// own strategy index, sorted by profile.
std::vector<StrategyProfile> BruteForcePne(const PayoffTensor& tensor);

// Profiles t such that no strategy of `player` beats t against t's other
// players. One bit per profile, in lexicographic profile order (player 0
// most significant, as StrategySpace indices).
std::vector<bool> NashRelation(const Game& game, PlayerId player,
                               std::uint64_t cap = kDefaultGgsCap);

// Intersection of every player's NashRelation, restricted to profiles that
// satisfy the hard constraints. Sorted.
std::vector<StrategyProfile> GgsPne(const Game& game,
                                    std::uint64_t cap = kDefaultGgsCap);

// Gambit payoff-format .nfg text. Refuses tensors of games with hard
// constraints (UnsupportedError): the format has no way to forbid cells.
// A "no preference" cell is written as one less than the player's lowest
// payoff elsewhere.
void ExportNfg(const PayoffTensor& tensor, std::ostream& out);
std::string ExportNfg(const PayoffTensor& tensor);

}  // namespace conga::oracle

#endif  // CONGA_ORACLE_NORMAL_FORM_H_

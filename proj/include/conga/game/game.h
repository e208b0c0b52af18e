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

#ifndef CONGA_GAME_GAME_H_
#define CONGA_GAME_GAME_H_

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "conga/csp/csp.h"
#include "conga/csp/domain.h"
#include "conga/csp/solver.h"

namespace conga {

using csp::Value;
using csp::VarId;

// Players are numbered from 0 internally; user-facing output prints names.
struct PlayerId {
  int index = 0;

  friend auto operator<=>(const PlayerId&, const PlayerId&) = default;
};

// An assignment of one player's controlled variables, in declaration order.
using PlayerStrategy = std::vector<Value>;

// An assignment of every controlled variable, players concatenated in
// player order.
struct StrategyProfile {
  std::vector<Value> values;

  friend auto operator<=>(const StrategyProfile&,
                          const StrategyProfile&) = default;
};

struct SolveStats {
  // Full profiles submitted to Nash checking.
  std::uint64_t candidates = 0;
  // Goal-solver invocations. Best-response table hits are not counted.
  std::uint64_t deviation_calls = 0;
  std::uint64_t pne_found = 0;

  friend bool operator==(const SolveStats&, const SolveStats&) = default;
};

// The cross product of one player's variable domains. Strategies are
// indexed in lexicographic order, first variable most significant.
class StrategySpace {
 public:
  StrategySpace() = default;
  explicit StrategySpace(std::vector<std::vector<Value>> values_per_var);

  // Saturates at UINT64_MAX.
  std::uint64_t size() const { return size_; }
  int num_vars() const { return static_cast<int>(values_.size()); }
  const std::vector<Value>& values(int var) const { return values_[var]; }

  // Throws std::out_of_range if `strategy` is not a member.
  std::uint64_t IndexOf(std::span<const Value> strategy) const;
  PlayerStrategy At(std::uint64_t index) const;

 private:
  std::vector<std::vector<Value>> values_;
  std::vector<std::uint64_t> radix_;  // stride of each variable
  std::uint64_t size_ = 1;
};

class GameBuilder;

// A constraint game, possibly with hard constraints and per-player
// optimization conditions. Immutable once built and cheap to copy: the
// compiled goal and hard-constraint solvers are shared.
class Game {
 public:
  const std::string& name() const { return name_; }
  int num_players() const { return static_cast<int>(players_.size()); }
  const std::string& player_name(PlayerId p) const {
    return players_[p.index].name;
  }
  std::span<const VarId> vars_of(PlayerId p) const {
    return players_[p.index].vars;
  }
  // Position of the player's first variable inside a StrategyProfile.
  std::size_t offset(PlayerId p) const { return players_[p.index].offset; }
  std::span<const VarId> controlled() const { return controlled_; }
  std::span<const VarId> existential() const { return existential_; }

  int num_vars() const { return static_cast<int>(domains_.size()); }
  const std::vector<csp::Domain>& domains() const { return domains_; }
  const std::string& var_name(VarId v) const { return var_names_[v.index]; }
  // -1 for existential variables.
  int owner(VarId v) const { return owner_[v.index]; }

  const csp::Solver& goal(PlayerId p) const { return *goals_[p.index]; }
  const std::optional<csp::OptGoal>& opt(PlayerId p) const {
    return opts_[p.index];
  }
  const csp::Solver& hard() const { return *hard_; }
  bool has_hard_constraints() const {
    return !hard_->csp().constraints().empty();
  }

  const StrategySpace& strategies(PlayerId p) const {
    return players_[p.index].space;
  }
  // Product of the strategy-space sizes; saturates at UINT64_MAX.
  std::uint64_t num_profiles() const;

  const std::vector<std::string>& warnings() const { return warnings_; }

  PlayerStrategy StrategyOf(const StrategyProfile& s, PlayerId p) const;
  StrategyProfile With(const StrategyProfile& s, PlayerId p,
                       std::span<const Value> strategy) const;
  StrategyProfile ProfileFromIndices(
      std::span<const std::uint64_t> strategy_indices) const;
  std::vector<std::uint64_t> IndicesOf(const StrategyProfile& s) const;

  // Initial domains with every controlled variable fixed to `s`, except
  // those of `free_player` which keep their initial domains. Throws
  // std::invalid_argument if `s` has the wrong size or leaves a domain.
  csp::Domains FixedDomains(const StrategyProfile& s,
                            std::optional<PlayerId> free_player = {}) const;

  std::string ToString(const StrategyProfile& s) const;

 private:
  friend class GameBuilder;

  struct Player {
    std::string name;
    std::vector<VarId> vars;
    std::size_t offset = 0;
    StrategySpace space;
  };

  std::string name_;
  std::vector<Player> players_;
  std::vector<VarId> controlled_;
  std::vector<VarId> existential_;
  std::vector<csp::Domain> domains_;
  std::vector<std::string> var_names_;
  std::vector<int> owner_;
  std::vector<std::shared_ptr<const csp::Solver>> goals_;
  std::vector<std::optional<csp::OptGoal>> opts_;
  std::shared_ptr<const csp::Solver> hard_;
  std::vector<std::string> warnings_;
};

// Incremental construction of a Game. Build() validates the model and
// throws std::invalid_argument on a malformed one.
class GameBuilder {
 public:
  explicit GameBuilder(std::string name);
  // A builder holding everything `game` was built from, with the same
  // variable numbering, so that more can be added before rebuilding.
  static GameBuilder FromGame(const Game& game);

  PlayerId AddPlayer(std::string name);
  VarId AddControlled(PlayerId p, std::string name, csp::Domain domain);
  VarId AddExistential(std::string name, csp::Domain domain);
  void AddGoal(PlayerId p, csp::Constraint c);
  void AddHard(csp::Constraint c);
  void Maximize(PlayerId p, VarId objective);
  void Minimize(PlayerId p, VarId objective);
  void AddWarning(std::string warning);

  int num_players() const { return static_cast<int>(player_names_.size()); }
  int num_vars() const { return static_cast<int>(var_names_.size()); }

  Game Build() const;

 private:
  void CheckPlayer(PlayerId p) const;

  std::string name_;
  std::vector<std::string> player_names_;
  std::vector<std::string> var_names_;
  std::vector<csp::Domain> domains_;
  std::vector<int> owner_;
  std::vector<std::vector<csp::Constraint>> goals_;
  std::vector<std::optional<csp::OptGoal>> opts_;
  std::vector<csp::Constraint> hard_;
  std::vector<std::string> warnings_;
};

}  // namespace conga

#endif  // CONGA_GAME_GAME_H_

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

#include "conga/game/game.h"

#include <algorithm>
#include <limits>
#include <set>
#include <stdexcept>

namespace conga {
namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t SaturatingMul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > kSaturated / a) return kSaturated;
  return a * b;
}

}  // namespace

StrategySpace::StrategySpace(std::vector<std::vector<Value>> values_per_var)
    : values_(std::move(values_per_var)), radix_(values_.size(), 1) {
  for (int k = static_cast<int>(values_.size()) - 1; k >= 0; --k) {
    radix_[k] = size_;
    size_ = SaturatingMul(size_, values_[k].size());
  }
}

std::uint64_t StrategySpace::IndexOf(std::span<const Value> strategy) const {
  if (strategy.size() != values_.size()) {
    throw std::out_of_range("strategy has the wrong number of values");
  }
  std::uint64_t index = 0;
  for (std::size_t k = 0; k < values_.size(); ++k) {
    const auto& vals = values_[k];
    auto it = std::lower_bound(vals.begin(), vals.end(), strategy[k]);
    if (it == vals.end() || *it != strategy[k]) {
      throw std::out_of_range("value " + std::to_string(strategy[k]) +
                              " is outside the strategy space");
    }
    index += radix_[k] * static_cast<std::uint64_t>(it - vals.begin());
  }
  return index;
}

PlayerStrategy StrategySpace::At(std::uint64_t index) const {
  if (index >= size_) throw std::out_of_range("strategy index out of range");
  PlayerStrategy out(values_.size());
  for (std::size_t k = 0; k < values_.size(); ++k) {
    out[k] = values_[k][index / radix_[k]];
    index %= radix_[k];
  }
  return out;
}

std::uint64_t Game::num_profiles() const {
  std::uint64_t n = 1;
  for (const auto& p : players_) n = SaturatingMul(n, p.space.size());
  return n;
}

PlayerStrategy Game::StrategyOf(const StrategyProfile& s, PlayerId p) const {
  const auto& pl = players_[p.index];
  auto begin = s.values.begin() + static_cast<std::ptrdiff_t>(pl.offset);
  return PlayerStrategy(begin,
                        begin + static_cast<std::ptrdiff_t>(pl.vars.size()));
}

StrategyProfile Game::With(const StrategyProfile& s, PlayerId p,
                           std::span<const Value> strategy) const {
  const auto& pl = players_[p.index];
  if (strategy.size() != pl.vars.size()) {
    throw std::invalid_argument("strategy for player " + pl.name +
                                " has the wrong number of values");
  }
  StrategyProfile out = s;
  std::copy(strategy.begin(), strategy.end(),
            out.values.begin() + static_cast<std::ptrdiff_t>(pl.offset));
  return out;
}

StrategyProfile Game::ProfileFromIndices(
    std::span<const std::uint64_t> strategy_indices) const {
  StrategyProfile out;
  out.values.reserve(controlled_.size());
  for (std::size_t i = 0; i < players_.size(); ++i) {
    auto st = players_[i].space.At(strategy_indices[i]);
    out.values.insert(out.values.end(), st.begin(), st.end());
  }
  return out;
}

std::vector<std::uint64_t> Game::IndicesOf(const StrategyProfile& s) const {
  std::vector<std::uint64_t> out;
  for (std::size_t i = 0; i < players_.size(); ++i) {
    const auto& pl = players_[i];
    out.push_back(pl.space.IndexOf(std::span<const Value>(
        s.values.data() + pl.offset, pl.vars.size())));
  }
  return out;
}

csp::Domains Game::FixedDomains(const StrategyProfile& s,
                                std::optional<PlayerId> free_player) const {
  if (s.values.size() != controlled_.size()) {
    throw std::invalid_argument(
        "profile has " + std::to_string(s.values.size()) +
        " values, expected " + std::to_string(controlled_.size()));
  }
  csp::Domains doms = domains_;
  for (std::size_t k = 0; k < controlled_.size(); ++k) {
    const VarId v = controlled_[k];
    if (free_player && owner_[v.index] == free_player->index) continue;
    if (!doms[v.index].contains(s.values[k])) {
      throw std::invalid_argument("value " + std::to_string(s.values[k]) +
                                  " is outside the domain of " +
                                  var_names_[v.index]);
    }
    doms[v.index].Assign(s.values[k]);
  }
  return doms;
}

std::string Game::ToString(const StrategyProfile& s) const {
  std::string out = "(";
  for (std::size_t k = 0; k < s.values.size(); ++k) {
    if (k > 0) out += ", ";
    out += std::to_string(s.values[k]);
  }
  return out + ")";
}

GameBuilder::GameBuilder(std::string name) : name_(std::move(name)) {}

GameBuilder GameBuilder::FromGame(const Game& game) {
  GameBuilder b(game.name());
  for (int p = 0; p < game.num_players(); ++p) {
    b.AddPlayer(game.player_name(PlayerId{p}));
  }
  b.var_names_ = game.var_names_;
  b.domains_ = game.domains_;
  b.owner_ = game.owner_;
  for (int p = 0; p < game.num_players(); ++p) {
    b.goals_[p] = game.goals_[p]->csp().constraints();
    b.opts_[p] = game.opts_[p];
  }
  b.hard_ = game.hard_->csp().constraints();
  b.warnings_ = game.warnings_;
  return b;
}

PlayerId GameBuilder::AddPlayer(std::string name) {
  player_names_.push_back(std::move(name));
  goals_.emplace_back();
  opts_.emplace_back();
  return PlayerId{num_players() - 1};
}

void GameBuilder::CheckPlayer(PlayerId p) const {
  if (p.index < 0 || p.index >= num_players()) {
    throw std::invalid_argument("unknown player #" + std::to_string(p.index));
  }
}

VarId GameBuilder::AddControlled(PlayerId p, std::string name,
                                 csp::Domain domain) {
  CheckPlayer(p);
  if (domain.empty()) {
    throw std::invalid_argument("variable '" + name + "' has an empty domain");
  }
  var_names_.push_back(std::move(name));
  domains_.push_back(std::move(domain));
  owner_.push_back(p.index);
  return VarId{num_vars() - 1};
}

VarId GameBuilder::AddExistential(std::string name, csp::Domain domain) {
  if (domain.empty()) {
    throw std::invalid_argument("variable '" + name + "' has an empty domain");
  }
  var_names_.push_back(std::move(name));
  domains_.push_back(std::move(domain));
  owner_.push_back(-1);
  return VarId{num_vars() - 1};
}

void GameBuilder::AddGoal(PlayerId p, csp::Constraint c) {
  CheckPlayer(p);
  goals_[p.index].push_back(std::move(c));
}

void GameBuilder::AddHard(csp::Constraint c) { hard_.push_back(std::move(c)); }

void GameBuilder::Maximize(PlayerId p, VarId objective) {
  CheckPlayer(p);
  opts_[p.index] = csp::OptGoal{csp::OptGoal::Direction::kMaximize, objective};
}

void GameBuilder::Minimize(PlayerId p, VarId objective) {
  CheckPlayer(p);
  opts_[p.index] = csp::OptGoal{csp::OptGoal::Direction::kMinimize, objective};
}

void GameBuilder::AddWarning(std::string warning) {
  warnings_.push_back(std::move(warning));
}

Game GameBuilder::Build() const {
  if (player_names_.empty()) {
    throw std::invalid_argument("game '" + name_ + "' has no players");
  }
  std::set<std::string> seen;
  for (const auto& n : var_names_) {
    if (!seen.insert(n).second) {
      throw std::invalid_argument("duplicate variable name '" + n + "'");
    }
  }
  seen.clear();
  for (const auto& n : player_names_) {
    if (!seen.insert(n).second) {
      throw std::invalid_argument("duplicate player name '" + n + "'");
    }
  }

  Game g;
  g.name_ = name_;
  g.domains_ = domains_;
  g.var_names_ = var_names_;
  g.owner_ = owner_;
  g.warnings_ = warnings_;
  g.players_.resize(player_names_.size());
  for (std::size_t i = 0; i < player_names_.size(); ++i) {
    g.players_[i].name = player_names_[i];
  }
  for (int v = 0; v < num_vars(); ++v) {
    if (owner_[v] >= 0) {
      g.players_[owner_[v]].vars.push_back(VarId{v});
    } else {
      g.existential_.push_back(VarId{v});
    }
  }
  for (auto& pl : g.players_) {
    if (pl.vars.empty()) {
      throw std::invalid_argument("player " + pl.name +
                                  " controls no variables");
    }
    pl.offset = g.controlled_.size();
    std::vector<std::vector<Value>> values;
    for (VarId v : pl.vars) {
      g.controlled_.push_back(v);
      values.push_back(domains_[v.index].Values());
    }
    pl.space = StrategySpace(std::move(values));
  }

  auto base = [&] {
    csp::Csp c;
    for (int v = 0; v < num_vars(); ++v) c.AddVariable(var_names_[v], domains_[v]);
    return c;
  };
  for (std::size_t i = 0; i < player_names_.size(); ++i) {
    csp::Csp c = base();
    for (const auto& k : goals_[i]) c.Add(k);
    if (opts_[i]) {
      const int obj = opts_[i]->objective.index;
      if (obj < 0 || obj >= num_vars() ||
          (owner_[obj] != -1 && owner_[obj] != static_cast<int>(i))) {
        throw std::invalid_argument(
            "objective of player " + player_names_[i] +
            " must be one of its own or an existential variable");
      }
    }
    g.goals_.push_back(std::make_shared<const csp::Solver>(std::move(c)));
    g.opts_.push_back(opts_[i]);
  }
  csp::Csp hard = base();
  for (const auto& k : hard_) hard.Add(k);
  g.hard_ = std::make_shared<const csp::Solver>(std::move(hard));
  return g;
}

}  // namespace conga

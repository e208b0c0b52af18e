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

#include "conga/game/evaluation.h"

#include <stdexcept>

namespace conga {
namespace {

using Direction = csp::OptGoal::Direction;

Value Normalize(const csp::OptGoal& goal, Value raw) {
  return goal.direction == Direction::kMaximize ? raw : -raw;
}

csp::SearchOrder PlayerFirst(const Game& game, PlayerId i, bool project) {
  auto vars = game.vars_of(i);
  return csp::SearchOrder{std::vector<VarId>(vars.begin(), vars.end()),
                          project};
}

}  // namespace

bool Improves(const Utility& a, const Utility& b) {
  return a.has_value() && (!b.has_value() || *a > *b);
}

bool CheckHard(const Game& game, const StrategyProfile& s) {
  if (!game.has_hard_constraints()) return true;
  return game.hard().IsSatisfiable(game.FixedDomains(s));
}

bool IsWinning(const Game& game, const StrategyProfile& s, PlayerId i) {
  return game.goal(i).IsSatisfiable(game.FixedDomains(s));
}

Utility UtilityOf(const Game& game, const StrategyProfile& s, PlayerId i) {
  const auto& opt = game.opt(i);
  if (!opt) return IsWinning(game, s, i) ? 1 : 0;
  auto best = game.goal(i).Optimum(game.FixedDomains(s), *opt);
  if (!best) return std::nullopt;
  return Normalize(*opt, *best);
}

bool BetterThan(const Game& game, const StrategyProfile& alt,
                const StrategyProfile& s, PlayerId i) {
  if (alt.values.size() != s.values.size()) {
    throw std::invalid_argument("profiles have different sizes");
  }
  const auto vars = game.vars_of(i);
  const std::size_t lo = game.offset(i);
  const std::size_t hi = lo + vars.size();
  for (std::size_t k = 0; k < s.values.size(); ++k) {
    if ((k < lo || k >= hi) && alt.values[k] != s.values[k]) {
      throw std::invalid_argument(
          "profiles differ outside the variables of player " +
          game.player_name(i));
    }
  }
  return Improves(UtilityOf(game, alt, i), UtilityOf(game, s, i));
}

std::vector<PlayerStrategy> BestResponses(const Game& game,
                                          const StrategyProfile& s,
                                          PlayerId i) {
  const csp::Solver& goal = game.goal(i);
  csp::Domains doms = game.FixedDomains(s, i);
  const auto& opt = game.opt(i);
  if (opt) {
    auto best = goal.Optimum(doms, *opt, PlayerFirst(game, i, false));
    if (!best) return {};
    doms[opt->objective.index].Assign(*best);
  }
  const auto vars = game.vars_of(i);
  std::vector<PlayerStrategy> out;
  goal.Enumerate(std::move(doms), PlayerFirst(game, i, true),
                 [&](const csp::Domains& sol) {
                   PlayerStrategy st;
                   st.reserve(vars.size());
                   for (VarId v : vars) st.push_back(sol[v.index].min());
                   out.push_back(std::move(st));
                   return true;
                 });
  return out;
}

bool HasBeneficialDeviation(const Game& game, const StrategyProfile& s,
                            PlayerId i) {
  const csp::Solver& goal = game.goal(i);
  const auto& opt = game.opt(i);
  if (!opt) {
    if (goal.IsSatisfiable(game.FixedDomains(s))) return false;
    return goal.IsSatisfiable(game.FixedDomains(s, i));
  }
  const auto current = goal.Optimum(game.FixedDomains(s), *opt);
  csp::Domains doms = game.FixedDomains(s, i);
  if (current) {
    csp::Domain& obj = doms[opt->objective.index];
    if (opt->direction == Direction::kMaximize) {
      obj.RemoveBelow(*current + 1);
    } else {
      obj.RemoveAbove(*current - 1);
    }
    if (obj.empty()) return false;
  }
  bool found = false;
  goal.Enumerate(std::move(doms), PlayerFirst(game, i, true),
                 [&](const csp::Domains&) {
                   found = true;
                   return false;
                 });
  return found;
}

bool IsNash(const Game& game, const StrategyProfile& s, SolveStats* stats) {
  if (!CheckHard(game, s)) return false;
  for (int p = 0; p < game.num_players(); ++p) {
    if (stats != nullptr) ++stats->deviation_calls;
    if (HasBeneficialDeviation(game, s, PlayerId{p})) return false;
  }
  return true;
}

}  // namespace conga

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

#include "conga/games/families.h"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>

namespace conga::games {
namespace {

using csp::Domain;
using csp::Relation;

std::string Id(const std::string& family, int n, int m) {
  return family + "." + std::to_string(n) + "." + std::to_string(m);
}

std::string Name(const std::string& base, int i) {
  return base + std::to_string(i);
}

std::string Name(const std::string& base, int i, int j) {
  return base + std::to_string(i) + "_" + std::to_string(j);
}

void Require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

// lhs = sum of coef * var.
csp::Linear Defines(VarId lhs, std::vector<csp::LinearTerm> rhs) {
  csp::Linear l{{{1, lhs}}, Relation::kEq, 0};
  for (auto t : rhs) l.terms.push_back({-t.coef, t.var});
  return l;
}

}  // namespace

Game LocationHc(int n, int m, const std::vector<Value>& prices) {
  Require(n >= 1 && m >= 1, "location game needs n >= 1 and m >= 1");
  Require(static_cast<int>(prices.size()) == n,
          "location game needs one price per vendor");
  for (Value p : prices) Require(p >= 0, "prices must be non-negative");
  const Value pmin = *std::min_element(prices.begin(), prices.end());
  const Value pmax = *std::max_element(prices.begin(), prices.end());

  GameBuilder b(Id("LG(HC)", n, m));
  if (n > m) {
    b.AddWarning("more vendors than locations: the hard constraints cannot "
                 "be satisfied");
  }
  std::vector<PlayerId> players;
  std::vector<VarId> loc;
  for (int i = 1; i <= n; ++i) {
    players.push_back(b.AddPlayer(Name("vendor", i)));
    loc.push_back(b.AddControlled(players.back(), Name("l", i),
                                  Domain::Interval(1, m)));
  }
  // cost[i][c], choice[i][c], min[c]
  std::vector<std::vector<VarId>> cost(n), choice(n);
  std::vector<VarId> mins;
  std::vector<csp::Constraint> defs;
  for (int c = 1; c <= m; ++c) {
    std::vector<VarId> column;
    for (int i = 0; i < n; ++i) {
      const VarId v = b.AddExistential(
          Name("cost_", i + 1, c),
          Domain::Interval(prices[i], prices[i] + m - 1));
      cost[i].push_back(v);
      column.push_back(v);
      defs.push_back(csp::AbsOffset{v, loc[i], c, prices[i]});
    }
    const VarId mn =
        b.AddExistential(Name("min", c), Domain::Interval(pmin, pmax + m - 1));
    mins.push_back(mn);
    defs.push_back(csp::MinOf{mn, column});
  }
  for (int c = 1; c <= m; ++c) {
    csp::WeightedBoolSum one{{}, Relation::kEq, 1};
    for (int i = 0; i < n; ++i) {
      const VarId ch = b.AddExistential(Name("choice_", i + 1, c),
                                        Domain::Interval(0, 1));
      choice[i].push_back(ch);
      defs.push_back(csp::ImplyEqVars{ch, mins[c - 1], cost[i][c - 1]});
      one.terms.push_back({1, ch});
    }
    defs.push_back(one);
  }
  b.AddHard(csp::AllDifferent{loc});
  for (const auto& d : defs) b.AddHard(d);
  for (int i = 0; i < n; ++i) {
    const VarId benefit = b.AddExistential(Name("benefit", i + 1),
                                           Domain::Interval(0, prices[i] * m));
    std::vector<csp::LinearTerm> terms;
    for (VarId ch : choice[i]) terms.push_back({prices[i], ch});
    // The benefit is only meaningful with the customers' choices in force,
    // so the definitions are part of every goal as well. So is the
    // distinctness of locations: a vendor can only move to a free place.
    b.AddGoal(players[i], csp::AllDifferent{loc});
    for (const auto& d : defs) b.AddGoal(players[i], d);
    b.AddGoal(players[i], Defines(benefit, terms));
    b.Maximize(players[i], benefit);
  }
  return b.Build();
}

Game Crag(const std::vector<Value>& caps, const std::vector<Value>& unit_costs,
          const std::vector<std::vector<Value>>& demands) {
  const int m = static_cast<int>(caps.size());
  const int n = static_cast<int>(demands.size());
  Require(m >= 1, "at least one machine is needed");
  Require(n >= 1, "at least one client is needed");
  Require(static_cast<int>(unit_costs.size()) == m,
          "one unit cost per machine is needed");
  Value total_cap = 0;
  Value total_demand = 0;
  for (Value c : caps) {
    Require(c >= 0, "capacities must be non-negative");
    total_cap += c;
  }
  for (Value u : unit_costs) Require(u >= 0, "unit costs must be non-negative");
  for (const auto& tasks : demands) {
    Require(!tasks.empty(), "every client needs at least one task");
    for (Value d : tasks) {
      Require(d >= 1, "task sizes must be positive");
      total_demand += d;
    }
  }
  Require(total_demand <= total_cap,
          "total demand " + std::to_string(total_demand) +
              " exceeds total capacity " + std::to_string(total_cap));
  const Value umax = *std::max_element(unit_costs.begin(), unit_costs.end());

  GameBuilder b(Id("CRAG", n, m));
  std::vector<PlayerId> players;
  // load[j]: terms d_ik * choice_ijk over all clients.
  std::vector<std::vector<csp::LinearTerm>> load(m);
  for (int i = 0; i < n; ++i) {
    players.push_back(b.AddPlayer(Name("client", i + 1)));
  }
  std::vector<std::vector<VarId>> task(n);
  for (int i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < demands[i].size(); ++k) {
      task[i].push_back(
          b.AddControlled(players[i], Name("r_", i + 1, static_cast<int>(k) + 1),
                          Domain::Interval(1, m)));
    }
  }
  for (int i = 0; i < n; ++i) {
    std::vector<csp::LinearTerm> cost_terms;
    Value worst = 0;
    for (std::size_t k = 0; k < demands[i].size(); ++k) {
      const VarId r = task[i][k];
      const Value d = demands[i][k];
      worst += d * umax;
      for (int j = 1; j <= m; ++j) {
        const VarId ch = b.AddExistential(
            "choice_" + std::to_string(i + 1) + "_" + std::to_string(j) + "_" +
                std::to_string(k + 1),
            Domain::Interval(0, 1));
        const csp::ReifEqConst channel{ch, r, j};
        b.AddHard(channel);
        b.AddGoal(players[i], channel);
        load[j - 1].push_back({d, ch});
        cost_terms.push_back({d * unit_costs[j - 1], ch});
      }
    }
    const VarId cost =
        b.AddExistential(Name("cost", i + 1), Domain::Interval(0, worst));
    b.AddGoal(players[i], Defines(cost, cost_terms));
    b.Minimize(players[i], cost);
  }
  for (int j = 0; j < m; ++j) {
    b.AddHard(csp::WeightedBoolSum{load[j], Relation::kLe, caps[j]});
  }
  return b.Build();
}

Game Gtta(int n, int m) {
  Require(n >= 2, "GTTA needs at least two players");
  Require(m >= 2, "GTTA needs at least two guesses");
  GameBuilder b(Id("GTTA", n, m));
  std::vector<PlayerId> players;
  std::vector<VarId> g;
  for (int i = 1; i <= n; ++i) {
    players.push_back(b.AddPlayer(Name("p", i)));
    g.push_back(b.AddControlled(players.back(), Name("g", i),
                                Domain::Interval(1, m)));
  }
  const VarId sum = b.AddExistential("sum", Domain::Interval(n, n * m));
  std::vector<csp::LinearTerm> gs;
  for (VarId v : g) gs.push_back({1, v});
  const csp::Constraint sum_def = Defines(sum, gs);
  // Distance to two thirds of the mean, scaled by 3n: |3n * g_i - 2 * sum|.
  const Value span = static_cast<Value>(3 * n) * m;
  for (int i = 0; i < n; ++i) {
    const VarId diff =
        b.AddExistential(Name("diff", i + 1), Domain::Interval(-span, span));
    const VarId dist =
        b.AddExistential(Name("dist", i + 1), Domain::Interval(0, span));
    b.AddGoal(players[i], sum_def);
    b.AddGoal(players[i], Defines(diff, {{3 * n, g[i]}, {-2, sum}}));
    b.AddGoal(players[i], csp::AbsOffset{dist, diff, 0, 0});
    b.Minimize(players[i], dist);
  }
  return b.Build();
}

Game Meg(int n, int m, Value a, Value b_cost) {
  Require(n >= 2, "MEG needs at least two players");
  Require(m >= 2, "MEG needs at least two effort levels");
  Require(a > b_cost && b_cost >= 1, "MEG needs a > b >= 1");
  GameBuilder b(Id("MEG", n, m));
  std::vector<PlayerId> players;
  std::vector<VarId> e;
  for (int i = 1; i <= n; ++i) {
    players.push_back(b.AddPlayer(Name("p", i)));
    e.push_back(b.AddControlled(players.back(), Name("e", i),
                                Domain::Interval(1, m)));
  }
  const VarId low = b.AddExistential("low", Domain::Interval(1, m));
  const csp::MinOf def{low, e};
  for (int i = 0; i < n; ++i) {
    const VarId pay = b.AddExistential(
        Name("pay", i + 1), Domain::Interval(a - b_cost * m, a * m - b_cost));
    b.AddGoal(players[i], def);
    b.AddGoal(players[i], Defines(pay, {{a, low}, {-b_cost, e[i]}}));
    b.Maximize(players[i], pay);
  }
  return b.Build();
}

Game Td(int n, int m, Value r) {
  Require(n >= 2, "TD needs at least two players");
  Require(m >= 2, "TD needs at least two claims");
  Require(r >= 2, "TD needs a reward of at least 2");
  GameBuilder b(Id("TD", n, m));
  std::vector<PlayerId> players;
  std::vector<VarId> c;
  const Value lo = 2;
  const Value hi = m + 1;
  for (int i = 1; i <= n; ++i) {
    players.push_back(b.AddPlayer(Name("p", i)));
    c.push_back(b.AddControlled(players.back(), Name("c", i),
                                Domain::Interval(lo, hi)));
  }
  csp::Table sign{{}, {}};
  for (Value d = lo - hi; d <= hi - lo; ++d) {
    sign.tuples.push_back({d, d < 0 ? 1 : 0, d > 0 ? 1 : 0});
  }
  for (int i = 0; i < n; ++i) {
    std::vector<VarId> others;
    for (int j = 0; j < n; ++j) {
      if (j != i) others.push_back(c[j]);
    }
    const VarId low =
        b.AddExistential(Name("others_low", i + 1), Domain::Interval(lo, hi));
    const VarId paid =
        b.AddExistential(Name("paid", i + 1), Domain::Interval(lo, hi));
    const VarId diff = b.AddExistential(Name("diff", i + 1),
                                        Domain::Interval(lo - hi, hi - lo));
    const VarId below =
        b.AddExistential(Name("below", i + 1), Domain::Interval(0, 1));
    const VarId above =
        b.AddExistential(Name("above", i + 1), Domain::Interval(0, 1));
    const VarId pay =
        b.AddExistential(Name("pay", i + 1), Domain::Interval(lo - r, hi + r));
    const PlayerId p = players[i];
    b.AddGoal(p, csp::MinOf{low, others});
    b.AddGoal(p, csp::MinOf{paid, {c[i], low}});
    b.AddGoal(p, Defines(diff, {{1, c[i]}, {-1, low}}));
    csp::Table t = sign;
    t.vars = {diff, below, above};
    b.AddGoal(p, t);
    b.AddGoal(p, Defines(pay, {{1, paid}, {r, below}, {-r, above}}));
    b.Maximize(p, pay);
  }
  return b.Build();
}

Game Congestion(int n, int f, std::uint64_t seed) {
  Require(n >= 1, "congestion game needs at least one player");
  Require(f >= 1, "congestion game needs at least one facility");
  std::mt19937_64 rng(seed);
  // value[k][load], strictly decreasing in load for load >= 1.
  std::vector<std::vector<Value>> value(f, std::vector<Value>(n + 1));
  Value top = 0;
  for (int k = 0; k < f; ++k) {
    value[k][n] = static_cast<Value>(rng() % 5) + 1;
    for (int l = n - 1; l >= 1; --l) {
      value[k][l] = value[k][l + 1] + 1 + static_cast<Value>(rng() % 5);
    }
    value[k][0] = value[k][1] + 1;
    top = std::max(top, value[k][0]);
  }

  GameBuilder b("CG." + std::to_string(n) + "." + std::to_string(f));
  std::vector<PlayerId> players;
  std::vector<VarId> x;
  for (int i = 1; i <= n; ++i) {
    players.push_back(b.AddPlayer(Name("p", i)));
    x.push_back(b.AddControlled(players.back(), Name("x", i),
                                Domain::Interval(1, f)));
  }
  std::vector<csp::Constraint> defs;
  std::vector<std::vector<VarId>> on(n);
  std::vector<VarId> worth;
  for (int k = 1; k <= f; ++k) {
    std::vector<csp::LinearTerm> users;
    for (int i = 0; i < n; ++i) {
      const VarId v =
          b.AddExistential(Name("on_", i + 1, k), Domain::Interval(0, 1));
      defs.push_back(csp::ReifEqConst{v, x[i], k});
      on[i].push_back(v);
      users.push_back({1, v});
    }
    const VarId load = b.AddExistential(Name("load", k), Domain::Interval(0, n));
    defs.push_back(Defines(load, users));
    const VarId w = b.AddExistential(Name("worth", k), Domain::Interval(1, top));
    csp::Table t{{load, w}, {}};
    for (int l = 0; l <= n; ++l) t.tuples.push_back({l, value[k - 1][l]});
    defs.push_back(t);
    worth.push_back(w);
  }
  for (int i = 0; i < n; ++i) {
    const PlayerId p = players[i];
    for (const auto& d : defs) b.AddGoal(p, d);
    std::vector<csp::LinearTerm> parts;
    for (int k = 0; k < f; ++k) {
      const VarId share =
          b.AddExistential(Name("share_", i + 1, k + 1), Domain::Interval(0, top));
      csp::Table t{{on[i][k], worth[k], share}, {}};
      for (int l = 0; l <= n; ++l) {
        t.tuples.push_back({0, value[k][l], 0});
        t.tuples.push_back({1, value[k][l], value[k][l]});
      }
      b.AddGoal(p, t);
      parts.push_back({1, share});
    }
    const VarId pay = b.AddExistential(Name("pay", i + 1), Domain::Interval(0, top));
    b.AddGoal(p, Defines(pay, parts));
    b.Maximize(p, pay);
  }
  return b.Build();
}

Game LocationGamut(int m, std::optional<std::pair<Value, Value>> sellers,
                   std::optional<std::uint64_t> seed) {
  Require(m >= 2, "the street needs at least two customers");
  const auto [s1, s2] = sellers.value_or(std::pair<Value, Value>{0, m + 1});
  std::vector<Value> customers(m);
  if (seed) {
    std::mt19937_64 rng(*seed);
    for (auto& c : customers) c = 1 + static_cast<Value>(rng() % m);
  } else {
    std::iota(customers.begin(), customers.end(), 1);
  }
  // Customers served by seller 1 depend only on p1 - p2.
  auto served_by_first = [&](Value delta) {
    Value count = 0;
    for (Value c : customers) {
      count += delta + std::llabs(c - s1) <= std::llabs(c - s2);
    }
    return count;
  };

  GameBuilder b(Id("LG(GV)", 2, m));
  const PlayerId p1 = b.AddPlayer("seller1");
  const PlayerId p2 = b.AddPlayer("seller2");
  const VarId price1 = b.AddControlled(p1, "price1", Domain::Interval(1, m));
  const VarId price2 = b.AddControlled(p2, "price2", Domain::Interval(1, m));
  const VarId delta = b.AddExistential("delta", Domain::Interval(1 - m, m - 1));
  const VarId count1 = b.AddExistential("count1", Domain::Interval(0, m));
  const VarId count2 = b.AddExistential("count2", Domain::Interval(0, m));
  std::vector<csp::Constraint> defs;
  defs.push_back(Defines(delta, {{1, price1}, {-1, price2}}));
  csp::Table split{{delta, count1}, {}};
  for (Value d = 1 - m; d <= m - 1; ++d) {
    split.tuples.push_back({d, served_by_first(d)});
  }
  defs.push_back(split);
  defs.push_back(csp::Linear{{{1, count1}, {1, count2}}, Relation::kEq, m});
  const VarId prices[] = {price1, price2};
  const VarId counts[] = {count1, count2};
  const PlayerId players[] = {p1, p2};
  for (int i = 0; i < 2; ++i) {
    const VarId pay =
        b.AddExistential(Name("pay", i + 1), Domain::Interval(0, m * m));
    csp::Table t{{prices[i], counts[i], pay}, {}};
    for (Value p = 1; p <= m; ++p) {
      for (Value c = 0; c <= m; ++c) t.tuples.push_back({p, c, p * c});
    }
    for (const auto& d : defs) b.AddGoal(players[i], d);
    b.AddGoal(players[i], t);
    b.Maximize(players[i], pay);
  }
  return b.Build();
}

}  // namespace conga::games

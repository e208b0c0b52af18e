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

// Builders for the benchmark game families. Every payoff is an existential
// variable defined by constraints over the joint strategy; every builder is
// deterministic in its parameters. Invalid parameters throw
// std::invalid_argument.

#ifndef CONGA_GAMES_FAMILIES_H_
#define CONGA_GAMES_FAMILIES_H_

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "conga/game/game.h"

namespace conga::games {

// Vendors choose distinct locations 1..m on a street; customer c buys from
// the vendor minimizing |c - l_i| + p_i, and each vendor maximizes price
// times number of customers. Distinct locations and the customers'
// choices are hard constraints, and also part of every vendor's goal, so
// vendors only consider free locations. Ties between vendors are resolved
// in favour of whichever vendor is asking. n > m leaves the hard constraints
// unsatisfiable; the game is still built, with a warning.
Game LocationHc(int n, int m, const std::vector<Value>& prices);

// Clients place each task on a machine. Machine j has capacity caps[j] and
// a per-unit cost unit_costs[j]; task k of client i has size
// demands[i][k]. Capacities are hard; each client minimizes its own cost.
Game Crag(const std::vector<Value>& caps, const std::vector<Value>& unit_costs,
          const std::vector<std::vector<Value>>& demands);

// Guess two-thirds of the average: guesses 1..m, and each player minimizes
// the distance between its guess and two thirds of the mean, measured
// exactly as |3n * guess - 2 * sum|.
Game Gtta(int n, int m);

// Minimum effort: efforts 1..m, payoff a * min(e) - b * e_i. Needs a > b >= 1.
Game Meg(int n, int m, Value a = 2, Value b = 1);

// Traveller's dilemma: claims 2..m+1. With L the lowest claim of the
// others, a player receives its claim when equal to L, claim + r when
// below, and L - r when above. Needs r >= 2.
Game Td(int n, int m, Value r = 2);

// Singleton congestion: each player picks one of f facilities and is paid
// that facility's value at its load. Values strictly decrease with load
// and are drawn from `seed`.
Game Congestion(int n, int f, std::uint64_t seed);

// Two sellers at fixed positions on a street of customers 1..m choose
// prices 1..m. A customer buys from the seller minimizing price plus
// distance, seller 1 on ties; payoff is price times customers served.
// Seller positions default to 0 and m + 1. With a seed, customer
// positions are drawn uniformly from 1..m instead of one per position.
Game LocationGamut(int m,
                   std::optional<std::pair<Value, Value>> seller_positions = {},
                   std::optional<std::uint64_t> seed = {});

}  // namespace conga::games

#endif  // CONGA_GAMES_FAMILIES_H_

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

// Equilibria of a game given by payoff functions written directly in C++,
// for checking the constraint encodings of the benchmark families.

#ifndef CONGA_TESTS_SUPPORT_DENSE_ORACLE_H_
#define CONGA_TESTS_SUPPORT_DENSE_ORACLE_H_

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <optional>
#include <vector>

#include "conga/game/game.h"

namespace conga::testing {

// Payoff of player p (to maximize) at a profile; nullopt when the player
// has no acceptable outcome there.
using PayoffFn =
    std::function<std::optional<Value>(int p, const std::vector<Value>& s)>;
using ValidFn = std::function<bool(const std::vector<Value>& s)>;

// Every profile of `game`, in lexicographic order, that satisfies `valid`
// and from which no player gains by changing its own strategy. Only the
// game's strategy spaces are used.
inline std::vector<StrategyProfile> DensePne(const Game& game,
                                             const PayoffFn& pay,
                                             const ValidFn& valid = nullptr) {
  std::vector<StrategyProfile> out;
  const int n = game.num_players();
  std::vector<std::uint64_t> idx(n, 0);
  while (true) {
    const StrategyProfile s = game.ProfileFromIndices(idx);
    if (!valid || valid(s.values)) {
      bool nash = true;
      for (int p = 0; p < n && nash; ++p) {
        const auto cur = pay(p, s.values);
        const auto& space = game.strategies(PlayerId{p});
        for (std::uint64_t k = 0; k < space.size() && nash; ++k) {
          const auto alt =
              pay(p, game.With(s, PlayerId{p}, space.At(k)).values);
          if (alt && (!cur || *alt > *cur)) nash = false;
        }
      }
      if (nash) out.push_back(s);
    }
    int k = n - 1;
    while (k >= 0 && ++idx[k] == game.strategies(PlayerId{k}).size()) {
      idx[k--] = 0;
    }
    if (k < 0) break;
  }
  return out;
}

inline Value GttaPay(int n, int p, const std::vector<Value>& s) {
  Value sum = 0;
  for (Value g : s) sum += g;
  return -std::llabs(3 * n * s[p] - 2 * sum);
}

inline Value MegPay(Value a, Value b, int p, const std::vector<Value>& s) {
  Value low = s[0];
  for (Value e : s) low = std::min(low, e);
  return a * low - b * s[p];
}

inline Value TdPay(Value r, int p, const std::vector<Value>& s) {
  Value low = -1;
  for (int j = 0; j < static_cast<int>(s.size()); ++j) {
    if (j != p && (low < 0 || s[j] < low)) low = s[j];
  }
  if (s[p] == low) return s[p];
  return s[p] < low ? s[p] + r : low - r;
}

// Customers at 1..m; vendor p serves every customer for which it is among
// the cheapest.
inline Value LocationPay(int m, const std::vector<Value>& prices, int p,
                         const std::vector<Value>& loc) {
  Value served = 0;
  for (Value c = 1; c <= m; ++c) {
    Value best = -1;
    for (std::size_t i = 0; i < loc.size(); ++i) {
      const Value cost = std::llabs(c - loc[i]) + prices[i];
      if (best < 0 || cost < best) best = cost;
    }
    served += std::llabs(c - loc[p]) + prices[p] == best;
  }
  return prices[p] * served;
}

inline bool AllDistinct(const std::vector<Value>& s) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      if (s[i] == s[j]) return false;
    }
  }
  return true;
}

// Two sellers at the street ends 0 and m + 1; ties go to seller 1.
inline Value StreetPay(int m, int p, const std::vector<Value>& price) {
  Value first = 0;
  for (Value c = 1; c <= m; ++c) {
    first += price[0] + c <= price[1] + (m + 1 - c);
  }
  return price[p] * (p == 0 ? first : m - first);
}

}  // namespace conga::testing

#endif  // CONGA_TESTS_SUPPORT_DENSE_ORACLE_H_

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

#include "conga/oracle/normal_form.h"

#include <algorithm>
#include <sstream>
#include <thread>

namespace conga::oracle {
namespace {

// Number of profiles, or throws if above `cap`.
std::uint64_t CheckedSize(const Game& game, std::uint64_t cap) {
  const std::uint64_t cells = game.num_profiles();
  if (cells > cap) throw TooLargeError(cells, cap);
  return cells;
}

std::string Quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

TooLargeError::TooLargeError(std::uint64_t cells, std::uint64_t cap)
    : std::length_error("normal form needs " + std::to_string(cells) +
                        " cells per player, above the limit of " +
                        std::to_string(cap)),
      cells_(cells) {}

std::vector<std::uint64_t> PayoffTensor::IndicesOf(std::uint64_t cell) const {
  std::vector<std::uint64_t> idx(strategies.size());
  for (std::size_t p = 0; p < strategies.size(); ++p) {
    idx[p] = cell % strategies[p].size();
    cell /= strategies[p].size();
  }
  return idx;
}

std::uint64_t PayoffTensor::CellOf(
    const std::vector<std::uint64_t>& indices) const {
  std::uint64_t cell = 0;
  for (std::size_t p = strategies.size(); p-- > 0;) {
    cell = cell * strategies[p].size() + indices[p];
  }
  return cell;
}

StrategyProfile PayoffTensor::Profile(std::uint64_t cell) const {
  StrategyProfile s;
  const auto idx = IndicesOf(cell);
  for (std::size_t p = 0; p < strategies.size(); ++p) {
    const auto& st = strategies[p][idx[p]];
    s.values.insert(s.values.end(), st.begin(), st.end());
  }
  return s;
}

PayoffTensor Expand(const Game& game, std::uint64_t cap, int threads) {
  const std::uint64_t cells = CheckedSize(game, cap);
  const int n = game.num_players();
  PayoffTensor t;
  t.title = game.name();
  t.has_hard_constraints = game.has_hard_constraints();
  for (int p = 0; p < n; ++p) {
    t.player_names.push_back(game.player_name(PlayerId{p}));
    const auto& space = game.strategies(PlayerId{p});
    auto& list = t.strategies.emplace_back();
    for (std::uint64_t k = 0; k < space.size(); ++k) list.push_back(space.At(k));
  }
  t.utility.assign(n, std::vector<Utility>(cells));
  // vector<bool> packs bits, so workers fill a byte array instead.
  std::vector<char> valid(cells, 1);

  auto work = [&](std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t cell = begin; cell < end; ++cell) {
      const StrategyProfile s = t.Profile(cell);
      valid[cell] = CheckHard(game, s);
      for (int p = 0; p < n; ++p) {
        t.utility[p][cell] = UtilityOf(game, s, PlayerId{p});
      }
    }
  };
  const std::uint64_t workers =
      std::clamp<std::uint64_t>(threads, 1, std::max<std::uint64_t>(cells, 1));
  if (workers == 1) {
    work(0, cells);
  } else {
    std::vector<std::thread> pool;
    const std::uint64_t chunk = (cells + workers - 1) / workers;
    for (std::uint64_t w = 0; w < workers; ++w) {
      pool.emplace_back(work, std::min(cells, w * chunk),
                        std::min(cells, (w + 1) * chunk));
    }
    for (auto& th : pool) th.join();
  }
  t.valid.assign(valid.begin(), valid.end());
  return t;
}

std::vector<StrategyProfile> BruteForcePne(const PayoffTensor& t) {
  const int n = t.num_players();
  std::vector<StrategyProfile> out;
  for (std::uint64_t cell = 0; cell < t.num_cells(); ++cell) {
    if (!t.valid[cell]) continue;
    bool nash = true;
    std::uint64_t stride = 1;
    for (int p = 0; p < n && nash; ++p) {
      const std::uint64_t size = t.strategies[p].size();
      const std::uint64_t own = cell / stride % size;
      const std::uint64_t base = cell - own * stride;
      for (std::uint64_t k = 0; k < size && nash; ++k) {
        if (Improves(t.utility[p][base + k * stride], t.utility[p][cell])) {
          nash = false;
        }
      }
      stride *= size;
    }
    if (nash) out.push_back(t.Profile(cell));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<bool> NashRelation(const Game& game, PlayerId player,
                               std::uint64_t cap) {
  const std::uint64_t cells = CheckedSize(game, cap);
  const int n = game.num_players();
  std::vector<bool> rel(cells, false);
  // Lexicographic strides, player 0 most significant.
  std::vector<std::uint64_t> stride(n, 1);
  for (int p = n - 2; p >= 0; --p) {
    stride[p] = stride[p + 1] * game.strategies(PlayerId{p + 1}).size();
  }
  const auto& own = game.strategies(player);
  std::vector<std::uint64_t> idx(n, 0);
  while (true) {
    const StrategyProfile s = game.ProfileFromIndices(idx);
    const auto br = BestResponses(game, s, player);
    std::uint64_t base = 0;
    for (int p = 0; p < n; ++p) {
      if (p != player.index) base += idx[p] * stride[p];
    }
    for (std::uint64_t k = 0; k < own.size(); ++k) {
      rel[base + k * stride[player.index]] =
          br.empty() || std::find(br.begin(), br.end(), own.At(k)) != br.end();
    }
    // Next context: odometer over the other players.
    int p = n - 1;
    while (p >= 0) {
      if (p == player.index) {
        --p;
        continue;
      }
      if (++idx[p] < game.strategies(PlayerId{p}).size()) break;
      idx[p--] = 0;
    }
    if (p < 0) break;
  }
  return rel;
}

std::vector<StrategyProfile> GgsPne(const Game& game, std::uint64_t cap) {
  const std::uint64_t cells = CheckedSize(game, cap);
  std::vector<bool> all(cells, true);
  for (int p = 0; p < game.num_players(); ++p) {
    const auto rel = NashRelation(game, PlayerId{p}, cap);
    for (std::uint64_t c = 0; c < cells; ++c) all[c] = all[c] && rel[c];
  }
  std::vector<StrategyProfile> out;
  const int n = game.num_players();
  std::vector<std::uint64_t> idx(n, 0);
  for (std::uint64_t c = 0; c < cells; ++c) {
    if (all[c]) {
      const StrategyProfile s = game.ProfileFromIndices(idx);
      if (CheckHard(game, s)) out.push_back(s);
    }
    int p = n - 1;
    while (p >= 0 && ++idx[p] == game.strategies(PlayerId{p}).size()) {
      idx[p--] = 0;
    }
  }
  return out;
}

void ExportNfg(const PayoffTensor& t, std::ostream& out) {
  if (t.has_hard_constraints ||
      std::find(t.valid.begin(), t.valid.end(), false) != t.valid.end()) {
    throw UnsupportedError(
        "game '" + t.title +
        "' has hard constraints, which the .nfg format cannot express");
  }
  const int n = t.num_players();
  // Stand-in for "no preference": below every real payoff of the player.
  std::vector<Value> floor(n, 0);
  for (int p = 0; p < n; ++p) {
    Utility low;
    for (const auto& u : t.utility[p]) {
      if (u && (!low || *u < *low)) low = u;
    }
    floor[p] = low ? *low - 1 : 0;
  }
  out << "NFG 1 R " << Quoted(t.title) << " {";
  for (const auto& name : t.player_names) out << " " << Quoted(name);
  out << " } {";
  for (const auto& s : t.strategies) out << " " << s.size();
  out << " }\n\n";
  for (std::uint64_t cell = 0; cell < t.num_cells(); ++cell) {
    for (int p = 0; p < n; ++p) {
      if (cell > 0 || p > 0) out << " ";
      out << t.utility[p][cell].value_or(floor[p]);
    }
  }
  out << "\n";
}

std::string ExportNfg(const PayoffTensor& tensor) {
  std::ostringstream s;
  ExportNfg(tensor, s);
  return s.str();
}

}  // namespace conga::oracle

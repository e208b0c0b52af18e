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

// Acceptance suite. Prints one PASS or FAIL line per criterion and exits
// non-zero if any criterion fails.

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "conga/games/families.h"
#include "conga/oracle/normal_form.h"
#include "conga/solvers/conga.h"
#include "conga/solvers/enum1.h"
#include "support/dense_oracle.h"
#include "support/example_games.h"
#include "support/random_game.h"

namespace conga {
namespace {

using Profiles = std::vector<StrategyProfile>;
using Seconds = std::chrono::duration<double>;

constexpr int kRandomGames = 200;
constexpr std::uint64_t kRandomSeed = 20260101;
constexpr std::uint64_t kMaxProfiles = 10000;
constexpr double kCountLimitSeconds = 60;
constexpr double kRandomLimitSeconds = 600;
constexpr double kPruningLimitSeconds = 300;
constexpr std::uint64_t kPruningFactor = 10;

struct Outcome {
  bool pass = true;
  std::string detail;

  void Fail(const std::string& why) {
    if (pass) detail.clear();
    pass = false;
    if (!detail.empty()) detail += "; ";
    detail += why;
  }
};

double Since(Clock::time_point start) {
  return Seconds(Clock::now() - start).count();
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

StrategyProfile P(std::vector<Value> v) { return StrategyProfile{std::move(v)}; }

Outcome ExactCounts() {
  struct Case {
    Game game;
    std::size_t pne;
  };
  const Case cases[] = {{games::Gtta(3, 100), 1},
                        {games::Meg(3, 100, 2, 1), 100},
                        {games::Td(3, 99, 2), 1}};
  Outcome o;
  std::ostringstream detail;
  for (const auto& c : cases) {
    auto start = Clock::now();
    const SolveResult e = SolveEnum1(c.game);
    const double te = Since(start);
    start = Clock::now();
    const SolveResult g = SolveConga(c.game);
    const double tg = Since(start);
    detail << c.game.name() << " " << g.pne.size() << " PNE (enum1 "
           << static_cast<int>(te + 0.5) << "s, conga "
           << static_cast<int>(tg + 0.5) << "s) ";
    if (e.pne.size() != c.pne) o.Fail(c.game.name() + ": enum1 count");
    if (g.pne.size() != c.pne) o.Fail(c.game.name() + ": conga count");
    if (e.pne != g.pne) o.Fail(c.game.name() + ": sets differ");
    if (te > kCountLimitSeconds || tg > kCountLimitSeconds) {
      o.Fail(c.game.name() + ": over 60 s");
    }
  }
  if (o.pass) o.detail = detail.str();
  return o;
}

// Every value skipped by a counter cut, checked against the equilibria
// that share the cut's prefix.
int SkipViolations(const Game& g, const CongaTrace& trace, const Profiles& pne) {
  int bad = 0;
  for (const auto& skip : trace.skips) {
    for (const auto& s : pne) {
      bool same_prefix = true;
      for (int j = 0; j < skip.level && same_prefix; ++j) {
        same_prefix = g.StrategyOf(s, PlayerId{j}) == skip.prefix[j];
      }
      if (!same_prefix) continue;
      const auto own = g.StrategyOf(s, PlayerId{skip.level});
      bad += std::count(skip.skipped.begin(), skip.skipped.end(), own);
    }
  }
  return bad;
}

struct RandomRuns {
  Outcome equivalence;
  Outcome skips;
  Outcome ablations;
};

RandomRuns RandomGames() {
  RandomRuns out;
  testing::RandomGameMaker maker(kRandomSeed);
  testing::RandomGameOptions opt;
  opt.min_players = 2;
  opt.max_players = 4;
  opt.max_profiles = kMaxProfiles;
  int satisfaction = 0, optimization = 0, hard = 0, multi = 0, hopeless = 0;
  std::set<int> sizes;
  std::uint64_t largest = 0;
  std::uint64_t skipped_values = 0, total_pne = 0;
  int skip_violations = 0, differ = 0, ablation_differ = 0;
  const auto start = Clock::now();
  for (int round = 0; round < kRandomGames; ++round) {
    const Game g = maker.Make(opt);
    sizes.insert(g.num_players());
    largest = std::max(largest, g.num_profiles());
    hard += g.has_hard_constraints();
    const oracle::PayoffTensor t = oracle::Expand(g);
    for (int p = 0; p < g.num_players(); ++p) {
      const bool opt_player = g.opt(PlayerId{p}).has_value();
      (opt_player ? optimization : satisfaction)++;
      multi += g.vars_of(PlayerId{p}).size() > 1;
      // Never satisfied: no cell gives the player an outcome it accepts.
      hopeless += std::none_of(
          t.utility[p].begin(), t.utility[p].end(),
          [&](const Utility& u) { return u && (opt_player || *u == 1); });
    }

    const Profiles brute = oracle::BruteForcePne(t);
    total_pne += brute.size();
    const Profiles ggs = oracle::GgsPne(g, kMaxProfiles);
    const Profiles e1 = SolveEnum1(g).pne;
    CongaOptions traced;
    traced.record_trace = true;
    const CongaResult cg = SolveConga(g, traced);
    if (ggs != brute || e1 != brute || cg.pne != brute) ++differ;

    skip_violations += SkipViolations(g, cg.trace, brute);
    for (const auto& s : cg.trace.skips) skipped_values += s.skipped.size();

    CongaOptions no_tables;
    no_tables.use_tables = false;
    CongaOptions no_counters;
    no_counters.use_counters = false;
    if (SolveConga(g, no_tables).pne != brute ||
        SolveConga(g, no_counters).pne != brute) {
      ++ablation_differ;
    }
  }
  const double elapsed = Since(start);

  std::ostringstream d;
  d << kRandomGames << " games, " << total_pne << " PNE, players "
    << *sizes.begin() << ".." << *sizes.rbegin() << ", up to " << largest
    << " profiles, " << satisfaction
    << " satisfaction / " << optimization << " optimization players, " << hard
    << " with hard constraints, " << multi << " multi-variable, " << hopeless
    << " never satisfied, " << static_cast<int>(elapsed + 0.5) << "s";
  out.equivalence.detail = d.str();
  if (differ > 0) {
    out.equivalence.Fail(std::to_string(differ) + " games disagree");
  }
  if (satisfaction == 0 || optimization == 0 || hard == 0 || multi == 0 ||
      hopeless == 0 || *sizes.begin() != 2 || *sizes.rbegin() != 4 ||
      largest > kMaxProfiles) {
    out.equivalence.Fail("generator missed a required kind of game: " + d.str());
  }
  if (elapsed > kRandomLimitSeconds) out.equivalence.Fail("over 10 min");

  out.skips.detail = std::to_string(skipped_values) +
                     " skipped values checked, none in an equilibrium";
  if (skip_violations > 0) {
    out.skips.Fail(std::to_string(skip_violations) +
                   " skipped values belong to an equilibrium");
  }
  if (skipped_values == 0) out.skips.Fail("no value was ever skipped");

  out.ablations.detail = "tables off and counters off agree on all " +
                         std::to_string(kRandomGames) + " games";
  if (ablation_differ > 0) {
    out.ablations.Fail(std::to_string(ablation_differ) + " games disagree");
  }
  return out;
}

Outcome MatrixTrace() {
  Outcome o;
  CongaOptions traced;
  traced.record_trace = true;
  const CongaResult r = SolveConga(testing::MatrixGame(), traced);
  // Rows a, b, c and columns 1, 2, 3 are the values 1, 2, 3.
  if (r.pne != Profiles{P({3, 2})}) o.Fail("PNE set is not {(c,2)}");
  const DeviationCheck* at_a1 = nullptr;
  const DeviationCheck* at_b1 = nullptr;
  for (const auto& c : r.trace.checks) {
    if (c.player != 0) continue;
    if (c.profile == P({1, 1}) && at_a1 == nullptr) at_a1 = &c;
    if (c.profile == P({2, 1}) && at_b1 == nullptr) at_b1 = &c;
  }
  const std::vector<PlayerStrategy> to_c = {{3}};
  if (at_a1 == nullptr || at_a1->from_table || at_a1->best != to_c) {
    o.Fail("no computed deviation to (c,1) at (a,1)");
  }
  if (at_b1 == nullptr || !at_b1->from_table || at_b1->best != to_c) {
    o.Fail("deviation at (b,1) not served from the table");
  }
  if (o.pass) {
    o.detail = "{(c,2)}; (a,1) deviates to (c,1) by search, (b,1) by table";
  }
  return o;
}

Outcome Pruning() {
  Outcome o;
  const Game g = games::Gtta(4, 30);
  const auto start = Clock::now();
  const SolveResult e = SolveEnum1(g);
  const SolveResult c = SolveConga(g);
  const double elapsed = Since(start);
  std::ostringstream d;
  d << "#Cand " << c.stats.candidates << " vs " << e.stats.candidates
    << ", #Dev " << c.stats.deviation_calls << " vs "
    << e.stats.deviation_calls << ", " << static_cast<int>(elapsed + 0.5)
    << "s";
  o.detail = d.str();
  if (c.stats.candidates * kPruningFactor > e.stats.candidates) {
    o.Fail("#Cand above a tenth: " + d.str());
  }
  if (c.stats.deviation_calls * kPruningFactor > e.stats.deviation_calls) {
    o.Fail("#Dev above a tenth: " + d.str());
  }
  if (c.pne != e.pne) o.Fail("PNE sets differ");
  if (elapsed > kPruningLimitSeconds) o.Fail("over 5 min");
  return o;
}

Outcome LocationHardConstraints() {
  Outcome o;
  const int n = 3, m = 5;
  const std::vector<Value> prices(n, 1);
  const Game g = games::LocationHc(n, m, prices);
  const Profiles pne = SolveConga(g).pne;
  const Profiles dense = testing::DensePne(
      g,
      [&](int p, const std::vector<Value>& s) -> std::optional<Value> {
        if (!testing::AllDistinct(s)) return std::nullopt;
        return testing::LocationPay(m, prices, p, s);
      },
      testing::AllDistinct);
  if (pne.empty()) o.Fail("no equilibrium");
  for (const auto& s : pne) {
    if (!testing::AllDistinct(s.values)) o.Fail("two vendors share a location");
  }
  if (pne != dense) o.Fail("differs from the closed-form oracle");
  if (pne != oracle::BruteForcePne(oracle::Expand(g))) {
    o.Fail("differs from the normal-form oracle");
  }
  if (pne != SolveEnum1(g).pne) o.Fail("differs from enum1");
  const std::set<StrategyProfile> set(pne.begin(), pne.end());
  for (const auto& s : pne) {
    std::vector<Value> v = s.values;
    std::sort(v.begin(), v.end());
    do {
      if (!set.count(P(v))) o.Fail("not closed under permutation");
    } while (std::next_permutation(v.begin(), v.end()));
  }
  if (o.pass) {
    o.detail = std::to_string(pne.size()) +
               " PNE, all distinct, equal to the oracles, closed under "
               "permutation";
  }
  return o;
}

Outcome Goldens() {
  Outcome o;
  const std::string dir = CONGA_GOLDEN_DIR;
  if (oracle::ExportNfg(oracle::Expand(testing::MatrixGame())) !=
      ReadFile(dir + "/matrix.nfg")) {
    o.Fail("matrix.nfg differs");
  }
  if (oracle::ExportNfg(oracle::Expand(games::Gtta(2, 3))) !=
      ReadFile(dir + "/gtta_2_3.nfg")) {
    o.Fail("gtta_2_3.nfg differs");
  }
  const Game hard[] = {games::LocationHc(3, 5, {1, 1, 1}),
                       games::Crag({3, 3}, {1, 2}, {{2}, {2}})};
  for (const auto& g : hard) {
    try {
      oracle::ExportNfg(oracle::Expand(g));
      o.Fail(g.name() + " was exported");
    } catch (const oracle::UnsupportedError& e) {
      if (std::string(e.what()).find("hard constraints") == std::string::npos) {
        o.Fail(std::string("unexpected message: ") + e.what());
      }
    }
  }
  if (o.pass) o.detail = "both goldens byte-exact; LG(HC) and CRAG refused";
  return o;
}

// The README lists what is not reproduced.
Outcome OutOfScope() {
  Outcome o;
  const std::string readme = ReadFile(std::string(CONGA_SOURCE_DIR) + "/README.md");
  const auto at = readme.find("## Out of scope");
  if (at == std::string::npos) {
    o.Fail("README.md has no out-of-scope section");
    return o;
  }
  std::string section = readme.substr(at);
  std::transform(section.begin(), section.end(), section.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  for (const char* item : {"wall-clock", "cg", "lg(gv)", "crag", "lg(hc)"}) {
    if (section.find(item) == std::string::npos) {
      o.Fail(std::string("out-of-scope section does not mention ") + item);
    }
  }
  if (o.pass) {
    o.detail = "timings and large-instance counts listed in README.md";
  }
  return o;
}

}  // namespace
}  // namespace conga

int main() {
  using conga::Outcome;
  int failures = 0;
  auto report = [&](int id, const char* title, const Outcome& o) {
    std::printf("%s %d %s: %s\n", o.pass ? "PASS" : "FAIL", id, title,
                o.detail.c_str());
    std::fflush(stdout);
    failures += !o.pass;
  };
  report(1, "exact counts under enum1 and conga", conga::ExactCounts());
  const auto random = conga::RandomGames();
  report(2, "random games agree with every oracle", random.equivalence);
  report(3, "matrix game trace", conga::MatrixTrace());
  report(4, "pruning on GTTA.4.30", conga::Pruning());
  report(5, "skipped values are never equilibria", random.skips);
  report(6, "ablations give the same sets", random.ablations);
  report(7, "LG(HC) 3 vendors, 5 locations, equal prices",
         conga::LocationHardConstraints());
  report(8, ".nfg goldens and refusal", conga::Goldens());
  report(9, "out-of-scope items declared", conga::OutOfScope());
  return failures == 0 ? 0 : 1;
}

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

#include "conga/solvers/conga.h"

#include <algorithm>
#include <vector>

#include "conga/solvers/br_table.h"
#include "conga/solvers/enum1.h"
#include "doctest.h"
#include "support/example_games.h"
#include "support/game_oracle.h"
#include "support/random_game.h"

namespace conga {
namespace {

using Profiles = std::vector<StrategyProfile>;

StrategyProfile P(std::vector<Value> v) { return StrategyProfile{std::move(v)}; }

CongaOptions Traced() {
  CongaOptions o;
  o.record_trace = true;
  return o;
}

const DeviationCheck* FindCheck(const CongaTrace& trace,
                                const StrategyProfile& s, int player) {
  for (const auto& c : trace.checks) {
    if (c.profile == s && c.player == player) return &c;
  }
  return nullptr;
}

TEST_CASE("table insert, search and reset") {
  BrTable t(2);
  CHECK(t.Find(std::vector<std::uint64_t>{0, 1}) == nullptr);
  CHECK(t.Insert({{0, 1}, {2, 3}, false, 7}) == BrTable::InsertResult::kInserted);
  const auto* e = t.Find(std::vector<std::uint64_t>{0, 1});
  REQUIRE(e != nullptr);
  CHECK(e->best == std::vector<std::uint64_t>{2, 3});
  CHECK(e->epoch == 7);
  CHECK(t.Find(std::vector<std::uint64_t>{1, 0}) == nullptr);
  CHECK(t.Find(std::vector<std::uint64_t>{0, 2}) == nullptr);
  CHECK(t.Insert({{0, 1}, {5}, false, 8}) == BrTable::InsertResult::kExisting);
  CHECK(t.Find(std::vector<std::uint64_t>{0, 1})->best ==
        std::vector<std::uint64_t>{2, 3});
  CHECK(t.size() == 1);
  t.Reset();
  CHECK(t.size() == 0);
  CHECK(t.Find(std::vector<std::uint64_t>{0, 1}) == nullptr);
  CHECK_THROWS(t.Find(std::vector<std::uint64_t>{0}));
}

TEST_CASE("table visits contexts in lexicographic order") {
  BrTable t(2);
  t.Insert({{2, 0}, {}, true, 0});
  t.Insert({{0, 5}, {1}, false, 0});
  t.Insert({{0, 1}, {1}, false, 0});
  t.Insert({{1, 9}, {1}, false, 0});
  std::vector<std::vector<std::uint64_t>> seen;
  t.ForEach([&](const BrTable::Entry& e) { seen.push_back(e.context); });
  CHECK(seen == std::vector<std::vector<std::uint64_t>>{
                    {0, 1}, {0, 5}, {1, 9}, {2, 0}});
}

TEST_CASE("table capacity and eviction") {
  BrTable t(1, 2);
  CHECK(t.Insert({{1}, {0}, false, 0}) == BrTable::InsertResult::kInserted);
  CHECK(t.Insert({{2}, {0}, false, 0}) == BrTable::InsertResult::kInserted);
  CHECK(t.Insert({{3}, {0}, false, 0}) == BrTable::InsertResult::kFull);
  t.EvictOldest();
  CHECK(t.Find(std::vector<std::uint64_t>{1}) == nullptr);
  CHECK(t.Find(std::vector<std::uint64_t>{2}) != nullptr);
  CHECK(t.Insert({{3}, {0}, false, 0}) == BrTable::InsertResult::kInserted);
  CHECK(t.size() == 2);
}

TEST_CASE("matrix game trace") {
  const CongaResult r = SolveConga(testing::MatrixGame(), Traced());
  CHECK(r.pne == Profiles{P({3, 2})});
  CHECK(r.stats.candidates == 4);
  CHECK(r.stats.deviation_calls == 5);

  // Candidate (a,1): x's deviation to c is computed.
  const auto* first = FindCheck(r.trace, P({1, 1}), 0);
  REQUIRE(first != nullptr);
  CHECK_FALSE(first->from_table);
  CHECK(first->best == std::vector<PlayerStrategy>{{3}});
  // Candidate (b,1): the same answer comes from x's table.
  const auto* second = FindCheck(r.trace, P({2, 1}), 0);
  REQUIRE(second != nullptr);
  CHECK(second->from_table);
  CHECK(second->best == std::vector<PlayerStrategy>{{3}});

  std::vector<std::pair<StrategyProfile, int>> order;
  for (const auto& c : r.trace.checks) order.emplace_back(c.profile, c.player);
  CHECK(order == std::vector<std::pair<StrategyProfile, int>>{
                     {P({1, 1}), 1}, {P({1, 1}), 0}, {P({2, 1}), 1},
                     {P({2, 1}), 0}, {P({3, 1}), 1}, {P({3, 2}), 1},
                     {P({3, 2}), 0}});
  CHECK(r.trace.resubmitted == Profiles{P({3, 2})});
}

TEST_CASE("independent goals trace") {
  const CongaResult r = SolveConga(testing::IndependentGoalsGame(), Traced());
  CHECK(r.pne == Profiles{P({2, 1, 3})});

  // 111 is refused by Z, whose answer 3 brings 113; Y is content there and
  // X's computed answer is 2.
  const auto* z = FindCheck(r.trace, P({1, 1, 1}), 2);
  REQUIRE(z != nullptr);
  CHECK(z->best == std::vector<PlayerStrategy>{{3}});
  const auto* y = FindCheck(r.trace, P({1, 1, 3}), 1);
  REQUIRE(y != nullptr);
  CHECK_FALSE(y->from_table);
  const auto* x = FindCheck(r.trace, P({1, 1, 3}), 0);
  REQUIRE(x != nullptr);
  CHECK_FALSE(x->from_table);
  CHECK(x->best == std::vector<PlayerStrategy>{{2}});

  // 123 is refused by a hit in Y's table, never reaching X.
  const auto* hit = FindCheck(r.trace, P({1, 2, 3}), 1);
  REQUIRE(hit != nullptr);
  CHECK(hit->from_table);
  CHECK(hit->best == std::vector<PlayerStrategy>{{1}});
  CHECK(FindCheck(r.trace, P({1, 2, 3}), 0) == nullptr);

  // 213 is confirmed by X's stored answer.
  const auto* confirm = FindCheck(r.trace, P({2, 1, 3}), 0);
  REQUIRE(confirm != nullptr);
  CHECK(confirm->from_table);
}

TEST_CASE("backjump after the counter runs out") {
  const Game g = testing::BackjumpGame();
  const CongaResult r = SolveConga(g, Traced());
  CHECK(r.pne == Profiles{P({1, 2, 1}), P({1, 3, 3}), P({1, 8, 2}),
                          P({2, 2, 1}), P({2, 3, 3}), P({2, 8, 2})});
  CHECK(r.pne == SolveEnum1(g).pne);

  const SkipRecord* skip = nullptr;
  for (const auto& s : r.trace.skips) {
    if (s.level == 1 && s.prefix == std::vector<PlayerStrategy>{{1}}) {
      skip = &s;
    }
  }
  REQUIRE(skip != nullptr);
  CHECK(skip->unexplored ==
        std::vector<PlayerStrategy>{{5}, {6}, {7}, {8}, {9}});
  CHECK(skip->skipped == std::vector<PlayerStrategy>{{5}, {6}, {7}, {9}});
  for (const auto& t : r.trace.resubmitted) {
    if (t.values[0] == 1 && t.values[1] >= 5) CHECK(t == P({1, 8, 2}));
  }
  CHECK(std::count(r.trace.resubmitted.begin(), r.trace.resubmitted.end(),
                   P({1, 8, 2})) == 1);
  // Y is never evaluated with y in 5..7 or 9.
  for (const auto& c : r.trace.checks) {
    const Value yv = c.profile.values[1];
    CHECK((yv <= 4 || yv == 8));
  }
}

TEST_CASE("root wipeout") {
  GameBuilder b = GameBuilder::FromGame(testing::MatrixGame());
  b.AddHard(csp::Linear{{{1, VarId{0}}, {1, VarId{1}}}, csp::Relation::kGe, 9});
  const CongaResult r = SolveConga(b.Build());
  CHECK(r.pne.empty());
  CHECK(r.stats.candidates == 0);
  CHECK(r.stats.deviation_calls == 0);
}

TEST_CASE("deadline and stop after first") {
  SolveControl late;
  late.deadline = Clock::now() - std::chrono::seconds(1);
  CHECK(SolveConga(testing::MatrixGame(), {}, late).timed_out);

  SolveControl first;
  first.stop_after_first = true;
  const CongaResult r = SolveConga(testing::BackjumpGame(), {}, first);
  CHECK(r.pne == Profiles{P({1, 2, 1})});
  CHECK(r.stopped_early);
}

bool NoSkippedValueIsNash(const Game& g, const CongaTrace& trace,
                          const Profiles& pne) {
  for (const auto& skip : trace.skips) {
    for (const auto& s : pne) {
      bool same_prefix = true;
      for (int j = 0; j < skip.level && same_prefix; ++j) {
        same_prefix = g.StrategyOf(s, PlayerId{j}) == skip.prefix[j];
      }
      if (!same_prefix) continue;
      const auto own = g.StrategyOf(s, PlayerId{skip.level});
      if (std::find(skip.skipped.begin(), skip.skipped.end(), own) !=
          skip.skipped.end()) {
        return false;
      }
    }
  }
  return true;
}

TEST_CASE("random games: conga, ablations and oracle agree") {
  testing::RandomGameMaker maker(2024);
  int skips = 0;
  for (int round = 0; round < 120; ++round) {
    testing::RandomGameOptions opt;
    opt.max_profiles = 600;
    const Game g = maker.Make(opt);
    const Profiles expected = testing::GameOracle(g).Pne();

    const CongaResult r = SolveConga(g, Traced());
    REQUIRE(r.pne == expected);
    REQUIRE(r.stats.candidates <= g.num_profiles());
    REQUIRE(r.stats.pne_found == r.pne.size());
    REQUIRE(r.trace.cross_branch_hits == 0);
    REQUIRE(NoSkippedValueIsNash(g, r.trace, expected));
    skips += static_cast<int>(r.trace.skips.size());

    CongaOptions no_tables;
    no_tables.use_tables = false;
    REQUIRE(SolveConga(g, no_tables).pne == expected);
    CongaOptions no_counters;
    no_counters.use_counters = false;
    const CongaResult nc = SolveConga(g, no_counters);
    REQUIRE(nc.pne == expected);
    CongaOptions tiny;
    tiny.table_capacity = 2;
    REQUIRE(SolveConga(g, tiny).pne == expected);
    CongaOptions parallel;
    parallel.threads = 3;
    REQUIRE(SolveConga(g, parallel).pne == expected);

    const CongaResult again = SolveConga(g, Traced());
    REQUIRE(again.pne == r.pne);
    REQUIRE(again.stats == r.stats);
  }
  CHECK(skips > 50);
}

TEST_CASE("two players without hard constraints never need more candidates") {
  testing::RandomGameMaker maker(555);
  testing::RandomGameOptions opt;
  opt.min_players = 2;
  opt.max_players = 2;
  opt.allow_hard = false;
  opt.max_profiles = 1000;
  for (int round = 0; round < 60; ++round) {
    const Game g = maker.Make(opt);
    const auto c = SolveConga(g);
    const auto e = SolveEnum1(g);
    REQUIRE(c.pne == e.pne);
    REQUIRE(c.stats.candidates <= e.stats.candidates);
  }
}

}  // namespace
}  // namespace conga

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

#include "conga/csp/solver.h"

#include <random>
#include <set>

#include "doctest.h"
#include "support/brute_force.h"

namespace conga::csp {
namespace {

using testing::BruteForceSolutions;

TEST_CASE("propagate: consistent all-different is a fixpoint") {
  Csp csp;
  VarId x = csp.AddVariable("x", Domain::Singleton(1));
  VarId y = csp.AddVariable("y", Domain::Singleton(2));
  csp.Add(AllDifferent{{x, y}});
  Domains doms = csp.domains();
  CHECK(Propagate(csp, doms) == PropagationStatus::kFixpoint);
  CHECK(doms == csp.domains());
}

TEST_CASE("propagate: pigeonhole on all-different narrows z") {
  Csp csp;
  VarId x = csp.AddVariable("x", Domain::Interval(1, 2));
  VarId y = csp.AddVariable("y", Domain::Interval(1, 2));
  VarId z = csp.AddVariable("z", Domain::Interval(1, 3));
  csp.Add(AllDifferent{{x, y, z}});
  // Oracle: enumerate the 12 assignments and project z.
  std::set<Value> z_support;
  for (const auto& a : BruteForceSolutions(csp, csp.domains())) {
    z_support.insert(a[z.index]);
  }
  REQUIRE(z_support == std::set<Value>{3});
  // Pairwise elimination alone cannot see the pigeonhole; search does.
  Domains doms = csp.domains();
  CHECK(Propagate(csp, doms) == PropagationStatus::kFixpoint);
  const auto sols = SolveAll(csp, csp.domains());
  std::set<Value> found;
  for (const auto& a : sols) found.insert(a[z.index]);
  CHECK(found == z_support);
  (void)x;
  (void)y;
}

TEST_CASE("propagate: equal singletons under all-different wipe out") {
  Csp csp;
  VarId x = csp.AddVariable("x", Domain::Singleton(1));
  VarId y = csp.AddVariable("y", Domain::Singleton(1));
  csp.Add(AllDifferent{{x, y}});
  Domains doms = csp.domains();
  CHECK(Propagate(csp, doms) == PropagationStatus::kWipeout);
  CHECK_FALSE(IsSatisfiable(csp, csp.domains()));
}

TEST_CASE("solve_all examples") {
  {
    Csp csp;
    csp.AddVariable("x", Domain::Interval(1, 2));
    CHECK(SolveAll(csp, csp.domains()) ==
          std::vector<Assignment>{{1}, {2}});
  }
  {
    Csp csp;
    VarId x = csp.AddVariable("x", Domain::Interval(1, 2));
    VarId y = csp.AddVariable("y", Domain::Interval(1, 2));
    csp.Add(Linear{{{1, x}, {1, y}}, Relation::kEq, 3});
    CHECK(SolveAll(csp, csp.domains()) ==
          std::vector<Assignment>{{1, 2}, {2, 1}});
  }
  {
    Csp csp;
    VarId x = csp.AddVariable("x", Domain::Singleton(1));
    VarId y = csp.AddVariable("y", Domain::Singleton(1));
    csp.Add(AllDifferent{{x, y}});
    CHECK(SolveAll(csp, csp.domains()).empty());
  }
}

TEST_CASE("solve_optimal_all examples") {
  {
    Csp csp;
    VarId x = csp.AddVariable("x", Domain::Interval(1, 3));
    OptGoal goal{OptGoal::Direction::kMinimize, x};
    CHECK(SolveOptimalAll(csp, csp.domains(), goal) ==
          std::vector<Assignment>{{1}});
  }
  {
    Csp csp;
    VarId x = csp.AddVariable("x", Domain::Interval(1, 3));
    VarId y = csp.AddVariable("y", Domain::Interval(0, 10));
    csp.Add(AbsOffset{y, x, 2, 0});
    OptGoal goal{OptGoal::Direction::kMinimize, y};
    CHECK(SolveOptimalAll(csp, csp.domains(), goal) ==
          std::vector<Assignment>{{2, 0}});
  }
  {
    Csp csp;
    VarId x = csp.AddVariable("x", Domain::Interval(1, 2));
    VarId z = csp.AddVariable("z", Domain::Interval(0, 5));
    csp.Add(Linear{{{1, z}, {-1, x}}, Relation::kEq, 0});
    csp.Add(Table{{x, z}, {{1, 1}, {2, 2}}});
    OptGoal goal{OptGoal::Direction::kMaximize, z};
    CHECK(SolveOptimalAll(csp, csp.domains(), goal) ==
          std::vector<Assignment>{{2, 2}});
  }
}

TEST_CASE("is_satisfiable examples") {
  Csp empty;
  CHECK(IsSatisfiable(empty, empty.domains()));
}

TEST_CASE("constraint validation") {
  Csp csp;
  VarId x = csp.AddVariable("x", Domain::Interval(0, 3));
  VarId b = csp.AddVariable("b", Domain::Interval(0, 1));
  CHECK_THROWS_AS(csp.Add(Table{{x, b}, {{1}}}), std::invalid_argument);
  CHECK_THROWS_AS(csp.Add(ReifEqConst{x, b, 1}), std::invalid_argument);
  CHECK_THROWS_AS(csp.Add(AllDifferent{{x, VarId{9}}}), std::invalid_argument);
  CHECK_NOTHROW(csp.Add(ReifEqConst{b, x, 1}));
}

TEST_CASE("property: search equals brute force over the full vocabulary") {
  std::mt19937_64 rng(20260101);
  int satisfiable = 0;
  for (int round = 0; round < 3000; ++round) {
    const Csp csp = testing::RandomCsp(rng);
    const auto expected = BruteForceSolutions(csp, csp.domains());
    const Solver solver(csp);
    const auto got = solver.SolveAll(csp.domains());
    REQUIRE(got == expected);
    CHECK(solver.IsSatisfiable(csp.domains()) == !expected.empty());
    if (!expected.empty()) ++satisfiable;

    // Propagation keeps every supported value.
    Domains doms = csp.domains();
    const auto status = solver.Propagate(doms);
    if (!expected.empty()) {
      REQUIRE(status == PropagationStatus::kFixpoint);
      for (const auto& a : expected) {
        for (int i = 0; i < csp.num_vars(); ++i) {
          REQUIRE(doms[i].contains(a[i]));
        }
      }
      // Re-running a propagator at the fixpoint removes nothing.
      Domains again = doms;
      solver.Propagate(again);
      CHECK(again == doms);
    }

    // Optimal solutions equal the brute-force argmin of a random variable.
    const VarId target{static_cast<std::int32_t>(rng() % csp.num_vars())};
    const OptGoal goal{OptGoal::Direction::kMinimize, target};
    std::vector<Assignment> best;
    for (const auto& a : expected) {
      if (best.empty() || a[target.index] < best.front()[target.index]) {
        best = {a};
      } else if (a[target.index] == best.front()[target.index]) {
        best.push_back(a);
      }
    }
    REQUIRE(solver.SolveOptimalAll(csp.domains(), goal) == best);
  }
  CHECK(satisfiable > 300);
}

TEST_CASE("projected enumeration yields one witness per projected tuple") {
  Csp csp;
  VarId x = csp.AddVariable("x", Domain::Interval(1, 3));
  VarId w = csp.AddVariable("w", Domain::Interval(0, 4));
  csp.Add(Linear{{{1, w}, {-1, x}}, Relation::kGe, 0});
  const Solver solver(csp);
  std::vector<Value> xs;
  solver.Enumerate(csp.domains(), SearchOrder{{x}, true},
                   [&](const Domains& d) {
                     xs.push_back(d[x.index].min());
                     return true;
                   });
  CHECK(xs == std::vector<Value>{1, 2, 3});
}

TEST_CASE("determinism: repeated runs give identical streams") {
  std::mt19937_64 rng(99);
  for (int round = 0; round < 200; ++round) {
    const Csp csp = testing::RandomCsp(rng);
    CHECK(SolveAll(csp, csp.domains()) == SolveAll(csp, csp.domains()));
  }
}

}  // namespace
}  // namespace conga::csp

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

#ifndef CONGA_CSP_SOLVER_H_
#define CONGA_CSP_SOLVER_H_

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "conga/csp/csp.h"
#include "conga/csp/domain.h"

namespace conga::csp {

using Domains = std::vector<Domain>;
using Assignment = std::vector<Value>;

enum class PropagationStatus { kFixpoint, kWipeout };

struct OptGoal {
  enum class Direction { kMinimize, kMaximize };
  Direction direction = Direction::kMaximize;
  VarId objective;
};

// Controls the depth-first search. Variables in `first` are branched on
// before all others (which follow in declaration order). When `project` is
// set, at most one solution is reported per distinct assignment of `first`;
// the remaining variables only need a witness.
struct SearchOrder {
  std::vector<VarId> first;
  bool project = false;
};

// A compiled Csp. Construction builds watch lists and table indexes; every
// method afterwards is const and allocates only per call, so one Solver can
// be shared between threads.
//
// Propagation is bounds consistency for Linear, WeightedBoolSum, AbsOffset
// and MinOf, pairwise value elimination for AllDifferent, and generalized arc
// consistency for Table, ReifEqConst and ImplyEqVars. Every propagator fails
// on a fully assigned scope that violates its constraint, so search results
// are exact regardless of propagation strength.
class Solver {
 public:
  explicit Solver(Csp csp);

  const Csp& csp() const { return csp_; }
  Domains initial_domains() const { return csp_.domains(); }

  PropagationStatus Propagate(Domains& doms) const;
  // Only wakes constraints watching `changed`.
  PropagationStatus Propagate(Domains& doms,
                              std::span<const VarId> changed) const;

  // Calls `on_solution` with fully fixed domains for every solution within
  // `doms`, in lexicographic order of the branching order. The callback
  // returns false to stop. Returns false iff stopped early.
  bool Enumerate(Domains doms, const SearchOrder& order,
                 const std::function<bool(const Domains&)>& on_solution) const;

  // Branch-and-bound; nullopt when unsatisfiable.
  std::optional<Value> Optimum(Domains doms, const OptGoal& goal,
                               const SearchOrder& order = {}) const;

  std::vector<Assignment> SolveAll(Domains doms) const;
  std::vector<Assignment> SolveOptimalAll(Domains doms,
                                          const OptGoal& goal) const;
  bool IsSatisfiable(Domains doms) const;

 private:
  struct TableIndex {
    std::vector<std::vector<Value>> tuples;  // sorted
    std::vector<Value> first_values;         // distinct column-0 values
    std::vector<std::size_t> first_offsets;  // size first_values + 1
    std::vector<int> repeat_of;              // earlier column with same var
  };
  struct SearchState;
  class Store;

  bool Run(Domains& doms, std::vector<int>& queue,
           std::vector<char>& in_queue) const;
  bool PropagateOne(int c, Store& store) const;
  bool PropagateTable(const Table& t, const TableIndex& index,
                      Store& store) const;
  bool Search(Domains& doms, SearchState& state, std::size_t depth) const;

  Csp csp_;
  std::vector<std::vector<int>> watchers_;  // per variable
  std::vector<char> constrained_;           // per variable
  std::vector<int> table_slot_;             // per constraint, -1 if none
  std::vector<TableIndex> tables_;
};

PropagationStatus Propagate(const Csp& csp, Domains& doms);
std::vector<Assignment> SolveAll(const Csp& csp, const Domains& doms);
std::vector<Assignment> SolveOptimalAll(const Csp& csp, const Domains& doms,
                                        const OptGoal& goal);
bool IsSatisfiable(const Csp& csp, const Domains& doms);

}  // namespace conga::csp

#endif  // CONGA_CSP_SOLVER_H_

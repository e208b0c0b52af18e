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

#include <algorithm>
#include <deque>
#include <limits>

namespace conga::csp {
namespace {

using Wide = __int128;

Wide FloorDiv(Wide a, Wide b) {
  Wide q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

Wide CeilDiv(Wide a, Wide b) {
  Wide q = a / b;
  if ((a % b != 0) && ((a < 0) == (b < 0))) ++q;
  return q;
}

Value Clamp(Wide v) {
  constexpr Wide kLo = std::numeric_limits<Value>::min() / 4;
  constexpr Wide kHi = std::numeric_limits<Value>::max() / 4;
  return static_cast<Value>(std::clamp(v, kLo, kHi));
}

}  // namespace

// Domain access for propagators. Every mutation that changes a domain wakes
// the constraints watching it; a false return signals a wipe-out.
class Solver::Store {
 public:
  Store(Domains& doms, const std::vector<std::vector<int>>& watchers,
        std::vector<int>& queue, std::vector<char>& in_queue)
      : doms_(doms), watchers_(watchers), queue_(queue), in_queue_(in_queue) {}

  const Domain& operator[](VarId v) const { return doms_[v.index]; }

  bool SetMin(VarId v, Value x) {
    return !doms_[v.index].RemoveBelow(x) || Changed(v);
  }
  bool SetMax(VarId v, Value x) {
    return !doms_[v.index].RemoveAbove(x) || Changed(v);
  }
  bool Remove(VarId v, Value x) {
    return !doms_[v.index].Remove(x) || Changed(v);
  }
  bool Assign(VarId v, Value x) {
    return !doms_[v.index].Assign(x) || Changed(v);
  }
  bool Intersect(VarId v, std::span<const Value> sorted) {
    return !doms_[v.index].IntersectWith(sorted) || Changed(v);
  }
  bool Intersect(VarId v, VarId other) {
    if (v == other) return true;
    return !doms_[v.index].IntersectWith(doms_[other.index]) || Changed(v);
  }

 private:
  bool Changed(VarId v) {
    if (doms_[v.index].empty()) return false;
    for (int c : watchers_[v.index]) {
      if (!in_queue_[c]) {
        in_queue_[c] = 1;
        queue_.push_back(c);
      }
    }
    return true;
  }

  Domains& doms_;
  const std::vector<std::vector<int>>& watchers_;
  std::vector<int>& queue_;
  std::vector<char>& in_queue_;
};

struct Solver::SearchState {
  std::vector<VarId> order;
  std::size_t num_projected = 0;
  const std::function<bool(const Domains&)>* on_solution = nullptr;
  const OptGoal* goal = nullptr;
  std::optional<Value> bound;  // objective must strictly improve on this
  bool stopped = false;
  // Scratch space reused across nodes: propagation queue and one domain
  // vector per depth.
  std::vector<int> queue;
  std::vector<char> in_queue;
  std::deque<Domains> frames;  // deque: growing keeps references valid
};

Solver::Solver(Csp csp) : csp_(std::move(csp)) {
  const int n = csp_.num_vars();
  const auto& cons = csp_.constraints();
  watchers_.assign(n, {});
  constrained_.assign(n, 0);
  table_slot_.assign(cons.size(), -1);
  for (int c = 0; c < static_cast<int>(cons.size()); ++c) {
    std::vector<VarId> scope = Scope(cons[c]);
    std::sort(scope.begin(), scope.end());
    scope.erase(std::unique(scope.begin(), scope.end()), scope.end());
    for (VarId v : scope) {
      watchers_[v.index].push_back(c);
      constrained_[v.index] = 1;
    }

    if (const auto* t = std::get_if<Table>(&cons[c])) {
      TableIndex index;
      index.tuples = t->tuples;
      std::sort(index.tuples.begin(), index.tuples.end());
      index.tuples.erase(std::unique(index.tuples.begin(), index.tuples.end()),
                         index.tuples.end());
      for (std::size_t k = 0; k < index.tuples.size(); ++k) {
        if (k == 0 || index.tuples[k][0] != index.tuples[k - 1][0]) {
          index.first_values.push_back(index.tuples[k][0]);
          index.first_offsets.push_back(k);
        }
      }
      index.first_offsets.push_back(index.tuples.size());
      index.repeat_of.assign(t->vars.size(), -1);
      for (std::size_t a = 0; a < t->vars.size(); ++a) {
        for (std::size_t b = 0; b < a; ++b) {
          if (t->vars[a] == t->vars[b]) {
            index.repeat_of[a] = static_cast<int>(b);
            break;
          }
        }
      }
      table_slot_[c] = static_cast<int>(tables_.size());
      tables_.push_back(std::move(index));
    }
  }
}

bool Solver::PropagateTable(const Table& t, const TableIndex& index,
                            Store& s) const {
  const std::size_t arity = t.vars.size();
  if (arity == 0) return !index.tuples.empty();
  std::vector<std::vector<Value>> supports(arity);
  bool any = false;
  auto scan = [&](std::size_t from, std::size_t to) {
    for (std::size_t k = from; k < to; ++k) {
      const auto& tuple = index.tuples[k];
      bool ok = true;
      for (std::size_t col = 0; col < arity && ok; ++col) {
        if (index.repeat_of[col] >= 0) {
          ok = tuple[col] == tuple[index.repeat_of[col]];
        } else {
          ok = s[t.vars[col]].contains(tuple[col]);
        }
      }
      if (!ok) continue;
      any = true;
      for (std::size_t col = 0; col < arity; ++col) {
        supports[col].push_back(tuple[col]);
      }
    }
  };
  const Domain& head = s[t.vars[0]];
  if (head.size() < index.first_values.size()) {
    head.ForEachValue([&](Value v) {
      auto it = std::lower_bound(index.first_values.begin(),
                                 index.first_values.end(), v);
      if (it == index.first_values.end() || *it != v) return;
      const std::size_t slot = it - index.first_values.begin();
      scan(index.first_offsets[slot], index.first_offsets[slot + 1]);
    });
  } else {
    scan(0, index.tuples.size());
  }
  if (!any) return false;
  for (std::size_t col = 0; col < arity; ++col) {
    if (index.repeat_of[col] >= 0) continue;
    auto& sup = supports[col];
    std::sort(sup.begin(), sup.end());
    sup.erase(std::unique(sup.begin(), sup.end()), sup.end());
    if (!s.Intersect(t.vars[col], sup)) return false;
  }
  return true;
}

namespace {

bool PropagateLinear(const std::vector<LinearTerm>& terms, Relation rel,
                     Value rhs, auto& s) {
  Wide lo = 0;
  Wide hi = 0;
  for (const auto& t : terms) {
    const Domain& d = s[t.var];
    if (t.coef > 0) {
      lo += Wide(t.coef) * d.min();
      hi += Wide(t.coef) * d.max();
    } else {
      lo += Wide(t.coef) * d.max();
      hi += Wide(t.coef) * d.min();
    }
  }
  if (rel != Relation::kGe && lo > rhs) return false;
  if (rel != Relation::kLe && hi < rhs) return false;
  for (const auto& t : terms) {
    if (t.coef == 0) continue;
    const Domain& d = s[t.var];
    const Wide a = t.coef;
    const Wide cmin = a > 0 ? a * d.min() : a * d.max();
    const Wide cmax = a > 0 ? a * d.max() : a * d.min();
    if (rel != Relation::kGe) {
      const Wide room = Wide(rhs) - (lo - cmin);
      const bool ok = a > 0 ? s.SetMax(t.var, Clamp(FloorDiv(room, a)))
                            : s.SetMin(t.var, Clamp(CeilDiv(room, a)));
      if (!ok) return false;
    }
    if (rel != Relation::kLe) {
      const Wide need = Wide(rhs) - (hi - cmax);
      const bool ok = a > 0 ? s.SetMin(t.var, Clamp(CeilDiv(need, a)))
                            : s.SetMax(t.var, Clamp(FloorDiv(need, a)));
      if (!ok) return false;
    }
  }
  return true;
}

bool PropagateAllDifferent(const AllDifferent& c, auto& s) {
  for (std::size_t i = 0; i < c.vars.size(); ++i) {
    if (!s[c.vars[i]].fixed()) continue;
    const Value v = s[c.vars[i]].min();
    for (std::size_t j = 0; j < c.vars.size(); ++j) {
      if (j == i) continue;
      if (c.vars[j] == c.vars[i]) return false;
      if (!s.Remove(c.vars[j], v)) return false;
    }
  }
  return true;
}

bool PropagateAbsOffset(const AbsOffset& c, auto& s) {
  const Domain& x = s[c.x];
  // Distance range |x - center| over the bounds of x.
  Value dlo;
  Value dhi;
  if (x.min() >= c.center) {
    dlo = x.min() - c.center;
    dhi = x.max() - c.center;
  } else if (x.max() <= c.center) {
    dlo = c.center - x.max();
    dhi = c.center - x.min();
  } else {
    const Value below = c.center - x.PrevAtMost(c.center);
    const Value above = x.NextAtLeast(c.center) - c.center;
    dlo = std::min(below, above);
    dhi = std::max(c.center - x.min(), x.max() - c.center);
  }
  if (!s.SetMin(c.result, dlo + c.offset)) return false;
  if (!s.SetMax(c.result, dhi + c.offset)) return false;
  const Value far = s[c.result].max() - c.offset;
  const Value near = s[c.result].min() - c.offset;
  if (!s.SetMin(c.x, c.center - far)) return false;
  if (!s.SetMax(c.x, c.center + far)) return false;
  if (near > 0) {
    const Domain& xd = s[c.x];
    if (xd.min() > c.center - near && xd.min() < c.center + near) {
      if (!s.SetMin(c.x, c.center + near)) return false;
    }
    const Domain& xe = s[c.x];
    if (xe.max() < c.center + near && xe.max() > c.center - near) {
      if (!s.SetMax(c.x, c.center - near)) return false;
    }
  }
  return true;
}

bool PropagateMinOf(const MinOf& c, auto& s) {
  if (c.args.empty()) return false;
  Value min_lo = std::numeric_limits<Value>::max();
  Value min_hi = std::numeric_limits<Value>::max();
  for (VarId a : c.args) {
    min_lo = std::min(min_lo, s[a].min());
    min_hi = std::min(min_hi, s[a].max());
  }
  if (!s.SetMin(c.result, min_lo)) return false;
  if (!s.SetMax(c.result, min_hi)) return false;
  const Value ylo = s[c.result].min();
  const Value yhi = s[c.result].max();
  int candidates = 0;
  VarId last{};
  for (VarId a : c.args) {
    if (!s.SetMin(a, ylo)) return false;
    if (s[a].min() <= yhi) {
      ++candidates;
      last = a;
    }
  }
  if (candidates == 0) return false;
  if (candidates == 1 && !s.SetMax(last, yhi)) return false;
  return true;
}

bool PropagateReif(const ReifEqConst& c, auto& s) {
  const Domain& x = s[c.x];
  if (!x.contains(c.value)) return s.Assign(c.flag, 0);
  if (x.fixed()) return s.Assign(c.flag, 1);
  const Domain& b = s[c.flag];
  if (b.fixed()) {
    return b.min() == 1 ? s.Assign(c.x, c.value) : s.Remove(c.x, c.value);
  }
  return true;
}

bool PropagateImply(const ImplyEqVars& c, auto& s) {
  if (c.x == c.y) return true;
  if (!s[c.x].Intersects(s[c.y])) return s.Assign(c.flag, 0);
  const Domain& b = s[c.flag];
  if (b.fixed() && b.min() == 1) {
    if (!s.Intersect(c.x, c.y)) return false;
    if (!s.Intersect(c.y, c.x)) return false;
  }
  return true;
}

}  // namespace

bool Solver::PropagateOne(int c, Store& s) const {
  const Constraint& con = csp_.constraints()[c];
  switch (con.index()) {
    case 0: {
      const auto& k = std::get<Linear>(con);
      return PropagateLinear(k.terms, k.rel, k.rhs, s);
    }
    case 1: {
      const auto& k = std::get<WeightedBoolSum>(con);
      return PropagateLinear(k.terms, k.rel, k.rhs, s);
    }
    case 2:
      return PropagateAllDifferent(std::get<AllDifferent>(con), s);
    case 3:
      return PropagateAbsOffset(std::get<AbsOffset>(con), s);
    case 4:
      return PropagateMinOf(std::get<MinOf>(con), s);
    case 5:
      return PropagateReif(std::get<ReifEqConst>(con), s);
    case 6:
      return PropagateImply(std::get<ImplyEqVars>(con), s);
    case 7:
      return PropagateTable(std::get<Table>(con), tables_[table_slot_[c]], s);
  }
  return true;
}

bool Solver::Run(Domains& doms, std::vector<int>& queue,
                 std::vector<char>& in_queue) const {
  Store store(doms, watchers_, queue, in_queue);
  std::size_t head = 0;
  bool ok = true;
  while (head < queue.size()) {
    const int c = queue[head++];
    in_queue[c] = 0;
    if (!PropagateOne(c, store)) {
      ok = false;
      break;
    }
    if (head > 4096 && head * 2 > queue.size()) {
      queue.erase(queue.begin(), queue.begin() + head);
      head = 0;
    }
  }
  for (std::size_t k = head; k < queue.size(); ++k) in_queue[queue[k]] = 0;
  queue.clear();
  return ok;
}

PropagationStatus Solver::Propagate(Domains& doms) const {
  const int m = static_cast<int>(csp_.constraints().size());
  std::vector<int> queue(m);
  std::vector<char> in_queue(m, 1);
  for (int c = 0; c < m; ++c) queue[c] = c;
  for (const Domain& d : doms) {
    if (d.empty()) return PropagationStatus::kWipeout;
  }
  return Run(doms, queue, in_queue) ? PropagationStatus::kFixpoint
                                    : PropagationStatus::kWipeout;
}

PropagationStatus Solver::Propagate(Domains& doms,
                                    std::span<const VarId> changed) const {
  std::vector<int> queue;
  std::vector<char> in_queue(csp_.constraints().size(), 0);
  for (VarId v : changed) {
    if (doms[v.index].empty()) return PropagationStatus::kWipeout;
    for (int c : watchers_[v.index]) {
      if (!in_queue[c]) {
        in_queue[c] = 1;
        queue.push_back(c);
      }
    }
  }
  return Run(doms, queue, in_queue) ? PropagationStatus::kFixpoint
                                    : PropagationStatus::kWipeout;
}

bool Solver::Search(Domains& doms, SearchState& state,
                    std::size_t depth) const {
  std::size_t pos = 0;
  while (pos < state.order.size()) {
    const VarId v = state.order[pos];
    Domain& d = doms[v.index];
    if (!d.fixed()) {
      // A variable no constraint mentions only needs one value, unless all
      // of its values are wanted or it is the objective.
      const bool one_value_enough =
          pos >= state.num_projected ||
          (state.goal != nullptr && v != state.goal->objective);
      if (constrained_[v.index] || !one_value_enough) break;
      d.Assign(d.min());
    }
    ++pos;
  }
  if (pos == state.order.size()) {
    if (state.goal != nullptr) {
      state.bound = doms[state.goal->objective.index].min();
    }
    if (!(*state.on_solution)(doms)) state.stopped = true;
    return true;
  }
  const VarId var = state.order[pos];
  const bool witness_only = pos >= state.num_projected;
  bool found = false;
  if (state.frames.size() <= depth) state.frames.resize(depth + 1);
  const Domain& dom = doms[var.index];
  const Value last = dom.max();
  for (Value v = dom.min(); v <= last; v = dom.NextAtLeast(v + 1)) {
    Domains& child = state.frames[depth];
    child = doms;
    child[var.index].Assign(v);
    VarId changed[2] = {var, var};
    std::size_t num_changed = 1;
    if (state.goal != nullptr && state.bound.has_value()) {
      Domain& obj = child[state.goal->objective.index];
      const bool tightened =
          state.goal->direction == OptGoal::Direction::kMaximize
              ? obj.RemoveBelow(*state.bound + 1)
              : obj.RemoveAbove(*state.bound - 1);
      if (tightened) changed[num_changed++] = state.goal->objective;
    }
    bool ok = true;
    for (std::size_t k = 0; k < num_changed && ok; ++k) {
      const VarId c = changed[k];
      if (child[c.index].empty()) {
        ok = false;
        break;
      }
      for (int w : watchers_[c.index]) {
        if (!state.in_queue[w]) {
          state.in_queue[w] = 1;
          state.queue.push_back(w);
        }
      }
    }
    if (!ok) {
      for (int w : state.queue) state.in_queue[w] = 0;
      state.queue.clear();
    } else if (Run(child, state.queue, state.in_queue)) {
      if (Search(child, state, depth + 1)) found = true;
      if (state.stopped) return found;
      if (found && witness_only) return true;
    }
    if (v == last) break;
  }
  return found;
}

bool Solver::Enumerate(
    Domains doms, const SearchOrder& order,
    const std::function<bool(const Domains&)>& on_solution) const {
  SearchState state;
  std::vector<char> placed(csp_.num_vars(), 0);
  for (VarId v : order.first) {
    if (!placed[v.index]) {
      placed[v.index] = 1;
      state.order.push_back(v);
    }
  }
  state.num_projected =
      order.project ? state.order.size() : static_cast<std::size_t>(-1);
  for (int i = 0; i < csp_.num_vars(); ++i) {
    if (!placed[i]) state.order.push_back(VarId{i});
  }
  state.on_solution = &on_solution;
  state.in_queue.assign(csp_.constraints().size(), 0);
  if (Propagate(doms) == PropagationStatus::kWipeout) return true;
  Search(doms, state, 0);
  return !state.stopped;
}

std::optional<Value> Solver::Optimum(Domains doms, const OptGoal& goal,
                                     const SearchOrder& order) const {
  SearchState state;
  std::vector<char> placed(csp_.num_vars(), 0);
  for (VarId v : order.first) {
    if (!placed[v.index]) {
      placed[v.index] = 1;
      state.order.push_back(v);
    }
  }
  for (int i = 0; i < csp_.num_vars(); ++i) {
    if (!placed[i]) state.order.push_back(VarId{i});
  }
  state.num_projected = static_cast<std::size_t>(-1);
  state.goal = &goal;
  const std::function<bool(const Domains&)> keep_going =
      [](const Domains&) { return true; };
  state.on_solution = &keep_going;
  state.in_queue.assign(csp_.constraints().size(), 0);
  if (Propagate(doms) == PropagationStatus::kWipeout) return std::nullopt;
  Search(doms, state, 0);
  return state.bound;
}

std::vector<Assignment> Solver::SolveAll(Domains doms) const {
  std::vector<Assignment> out;
  Enumerate(std::move(doms), {}, [&](const Domains& d) {
    Assignment a(d.size());
    for (std::size_t i = 0; i < d.size(); ++i) a[i] = d[i].min();
    out.push_back(std::move(a));
    return true;
  });
  return out;
}

std::vector<Assignment> Solver::SolveOptimalAll(Domains doms,
                                                const OptGoal& goal) const {
  const std::optional<Value> best = Optimum(doms, goal);
  if (!best.has_value()) return {};
  doms[goal.objective.index].Assign(*best);
  return SolveAll(std::move(doms));
}

bool Solver::IsSatisfiable(Domains doms) const {
  bool found = false;
  Enumerate(std::move(doms), {}, [&](const Domains&) {
    found = true;
    return false;
  });
  return found;
}

PropagationStatus Propagate(const Csp& csp, Domains& doms) {
  return Solver(csp).Propagate(doms);
}

std::vector<Assignment> SolveAll(const Csp& csp, const Domains& doms) {
  return Solver(csp).SolveAll(doms);
}

std::vector<Assignment> SolveOptimalAll(const Csp& csp, const Domains& doms,
                                        const OptGoal& goal) {
  return Solver(csp).SolveOptimalAll(doms, goal);
}

bool IsSatisfiable(const Csp& csp, const Domains& doms) {
  return Solver(csp).IsSatisfiable(doms);
}

}  // namespace conga::csp

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

// Test-only oracles for csp-core: direct constraint evaluation and
// cross-product enumeration. Nothing here touches the propagation engine.

#ifndef CONGA_TESTS_SUPPORT_BRUTE_FORCE_H_
#define CONGA_TESTS_SUPPORT_BRUTE_FORCE_H_

#include <algorithm>
#include <cstdlib>
#include <random>
#include <set>
#include <variant>
#include <vector>

#include "conga/csp/csp.h"
#include "conga/csp/solver.h"

namespace conga::testing {

using csp::Assignment;
using csp::Value;

inline bool Compare(Value lhs, csp::Relation rel, Value rhs) {
  switch (rel) {
    case csp::Relation::kEq: return lhs == rhs;
    case csp::Relation::kLe: return lhs <= rhs;
    case csp::Relation::kGe: return lhs >= rhs;
  }
  return false;
}

inline bool Satisfies(const csp::Constraint& c, const Assignment& a) {
  auto at = [&](csp::VarId v) { return a[v.index]; };
  if (const auto* k = std::get_if<csp::Linear>(&c)) {
    Value sum = 0;
    for (const auto& t : k->terms) sum += t.coef * at(t.var);
    return Compare(sum, k->rel, k->rhs);
  }
  if (const auto* k = std::get_if<csp::WeightedBoolSum>(&c)) {
    Value sum = 0;
    for (const auto& t : k->terms) sum += t.coef * at(t.var);
    return Compare(sum, k->rel, k->rhs);
  }
  if (const auto* k = std::get_if<csp::AllDifferent>(&c)) {
    std::set<Value> seen;
    for (auto v : k->vars) {
      if (!seen.insert(at(v)).second) return false;
    }
    return true;
  }
  if (const auto* k = std::get_if<csp::AbsOffset>(&c)) {
    return at(k->result) == std::llabs(at(k->x) - k->center) + k->offset;
  }
  if (const auto* k = std::get_if<csp::MinOf>(&c)) {
    Value m = at(k->args.front());
    for (auto v : k->args) m = std::min(m, at(v));
    return at(k->result) == m;
  }
  if (const auto* k = std::get_if<csp::ReifEqConst>(&c)) {
    return (at(k->flag) == 1) == (at(k->x) == k->value);
  }
  if (const auto* k = std::get_if<csp::ImplyEqVars>(&c)) {
    return at(k->flag) == 0 || at(k->x) == at(k->y);
  }
  const auto& t = std::get<csp::Table>(c);
  for (const auto& tuple : t.tuples) {
    bool ok = true;
    for (std::size_t i = 0; i < tuple.size() && ok; ++i) {
      ok = at(t.vars[i]) == tuple[i];
    }
    if (ok) return true;
  }
  return false;
}

// All assignments of the cross product of `doms` satisfying every
// constraint, in lexicographic order.
inline std::vector<Assignment> BruteForceSolutions(const csp::Csp& csp,
                                                   const csp::Domains& doms) {
  std::vector<std::vector<Value>> values;
  for (const auto& d : doms) values.push_back(d.Values());
  std::vector<Assignment> out;
  for (const auto& v : values) {
    if (v.empty()) return out;
  }
  std::vector<std::size_t> idx(doms.size(), 0);
  while (true) {
    Assignment a(doms.size());
    for (std::size_t i = 0; i < doms.size(); ++i) a[i] = values[i][idx[i]];
    bool ok = true;
    for (const auto& c : csp.constraints()) {
      if (!Satisfies(c, a)) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(a);
    int k = static_cast<int>(doms.size()) - 1;
    while (k >= 0 && ++idx[k] == values[k].size()) {
      idx[k] = 0;
      --k;
    }
    if (k < 0) break;
  }
  return out;
}

// Random CSP over the full constraint vocabulary: up to 4 variables with at
// most 5 values each. Variables flagged as booleans get domain {0, 1}.
inline csp::Csp RandomCsp(std::mt19937_64& rng) {
  auto pick = [&](int lo, int hi) {
    return lo + static_cast<int>(rng() % static_cast<unsigned>(hi - lo + 1));
  };
  csp::Csp csp;
  const int n = pick(2, 4);
  std::vector<csp::VarId> vars;
  std::vector<bool> is_bool;
  for (int i = 0; i < n; ++i) {
    const bool boolean = pick(0, 3) == 0;
    csp::Domain d;
    if (boolean) {
      d = csp::Domain::Interval(0, 1);
    } else {
      const int lo = pick(-2, 2);
      std::vector<Value> vals;
      const int size = pick(1, 5);
      for (int k = 0; k < size; ++k) vals.push_back(lo + pick(0, 5));
      d = csp::Domain::FromValues(vals);
    }
    vars.push_back(csp.AddVariable("v" + std::to_string(i), d));
    is_bool.push_back(boolean || (d.min() >= 0 && d.max() <= 1));
  }
  auto any_var = [&] { return vars[pick(0, n - 1)]; };
  std::vector<csp::VarId> bools;
  for (int i = 0; i < n; ++i) {
    if (is_bool[i]) bools.push_back(vars[i]);
  }
  const int m = pick(1, 3);
  for (int k = 0; k < m; ++k) {
    switch (pick(0, 7)) {
      case 0: {
        csp::Linear c;
        const int terms = pick(1, 3);
        for (int t = 0; t < terms; ++t) c.terms.push_back({pick(-3, 3), any_var()});
        c.rel = static_cast<csp::Relation>(pick(0, 2));
        c.rhs = pick(-4, 6);
        csp.Add(c);
        break;
      }
      case 1: {
        if (bools.empty()) break;
        csp::WeightedBoolSum c;
        const int terms = pick(1, 3);
        for (int t = 0; t < terms; ++t) {
          c.terms.push_back({pick(-2, 4), bools[pick(0, bools.size() - 1)]});
        }
        c.rel = static_cast<csp::Relation>(pick(0, 2));
        c.rhs = pick(-1, 4);
        csp.Add(c);
        break;
      }
      case 2: {
        csp::AllDifferent c;
        for (int i = 0; i < n; ++i) {
          if (pick(0, 1) == 1) c.vars.push_back(vars[i]);
        }
        if (c.vars.size() < 2) c.vars = {vars[0], vars[1]};
        csp.Add(c);
        break;
      }
      case 3:
        csp.Add(csp::AbsOffset{any_var(), any_var(), pick(-2, 4), pick(-1, 2)});
        break;
      case 4: {
        csp::MinOf c{any_var(), {}};
        const int args = pick(1, 3);
        for (int t = 0; t < args; ++t) c.args.push_back(any_var());
        csp.Add(c);
        break;
      }
      case 5:
        if (bools.empty()) break;
        csp.Add(csp::ReifEqConst{bools[pick(0, bools.size() - 1)], any_var(),
                                 pick(-1, 5)});
        break;
      case 6:
        if (bools.empty()) break;
        csp.Add(csp::ImplyEqVars{bools[pick(0, bools.size() - 1)], any_var(),
                                 any_var()});
        break;
      default: {
        csp::Table c;
        const int arity = pick(1, std::min(n, 3));
        for (int t = 0; t < arity; ++t) c.vars.push_back(any_var());
        const int rows = pick(0, 8);
        for (int r = 0; r < rows; ++r) {
          std::vector<Value> tuple;
          for (int t = 0; t < arity; ++t) tuple.push_back(pick(-2, 6));
          c.tuples.push_back(tuple);
        }
        csp.Add(c);
        break;
      }
    }
  }
  return csp;
}

}  // namespace conga::testing

#endif  // CONGA_TESTS_SUPPORT_BRUTE_FORCE_H_

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

#ifndef CONGA_CSP_CSP_H_
#define CONGA_CSP_CSP_H_

#include <compare>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "conga/csp/domain.h"

namespace conga::csp {

// Dense index of a variable inside one Csp.
struct VarId {
  std::int32_t index = -1;

  friend auto operator<=>(const VarId&, const VarId&) = default;
};

enum class Relation { kEq, kLe, kGe };

struct LinearTerm {
  Value coef;
  VarId var;
};

// sum(coef * var) <rel> rhs
struct Linear {
  std::vector<LinearTerm> terms;
  Relation rel = Relation::kEq;
  Value rhs = 0;
};

// Same shape as Linear, restricted to 0/1 variables.
struct WeightedBoolSum {
  std::vector<LinearTerm> terms;
  Relation rel = Relation::kEq;
  Value rhs = 0;
};

struct AllDifferent {
  std::vector<VarId> vars;
};

// result = |x - center| + offset
struct AbsOffset {
  VarId result;
  VarId x;
  Value center = 0;
  Value offset = 0;
};

// result = min(args)
struct MinOf {
  VarId result;
  std::vector<VarId> args;
};

// flag = 1 <-> x = value
struct ReifEqConst {
  VarId flag;
  VarId x;
  Value value = 0;
};

// flag = 1 -> x = y
struct ImplyEqVars {
  VarId flag;
  VarId x;
  VarId y;
};

// Extensional constraint: (vars) must equal one of `tuples`.
struct Table {
  std::vector<VarId> vars;
  std::vector<std::vector<Value>> tuples;
};

using Constraint = std::variant<Linear, WeightedBoolSum, AllDifferent,
                                AbsOffset, MinOf, ReifEqConst, ImplyEqVars,
                                Table>;

// Variables the constraint mentions, in declaration order, with repeats.
std::vector<VarId> Scope(const Constraint& c);

// Keyword naming the constraint kind ("linear", "table", ...).
std::string KindName(const Constraint& c);

// A set of variables with initial domains and a list of constraints.
// Variables are identified by their insertion index.
class Csp {
 public:
  VarId AddVariable(std::string name, Domain domain);

  // Throws std::invalid_argument when the constraint mentions an unknown
  // variable, a table tuple has the wrong arity, or a variable used as a
  // boolean has values outside {0, 1}.
  void Add(Constraint c);

  int num_vars() const { return static_cast<int>(domains_.size()); }
  const std::vector<Domain>& domains() const { return domains_; }
  const Domain& domain(VarId v) const { return domains_[v.index]; }
  const std::string& name(VarId v) const { return names_[v.index]; }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<Constraint>& constraints() const { return constraints_; }

 private:
  void CheckVar(VarId v) const;
  void CheckBoolean(VarId v) const;

  std::vector<std::string> names_;
  std::vector<Domain> domains_;
  std::vector<Constraint> constraints_;
};

}  // namespace conga::csp

#endif  // CONGA_CSP_CSP_H_

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

#include "conga/csp/csp.h"

#include <stdexcept>

namespace conga::csp {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

}  // namespace

std::vector<VarId> Scope(const Constraint& c) {
  return std::visit(
      Overloaded{
          [](const Linear& k) {
            std::vector<VarId> out;
            for (const auto& t : k.terms) out.push_back(t.var);
            return out;
          },
          [](const WeightedBoolSum& k) {
            std::vector<VarId> out;
            for (const auto& t : k.terms) out.push_back(t.var);
            return out;
          },
          [](const AllDifferent& k) { return k.vars; },
          [](const AbsOffset& k) { return std::vector<VarId>{k.result, k.x}; },
          [](const MinOf& k) {
            std::vector<VarId> out{k.result};
            out.insert(out.end(), k.args.begin(), k.args.end());
            return out;
          },
          [](const ReifEqConst& k) { return std::vector<VarId>{k.flag, k.x}; },
          [](const ImplyEqVars& k) {
            return std::vector<VarId>{k.flag, k.x, k.y};
          },
          [](const Table& k) { return k.vars; },
      },
      c);
}

std::string KindName(const Constraint& c) {
  static const char* const kNames[] = {"linear", "boolsum", "alldifferent",
                                       "absoffset", "min", "reif",
                                       "imply", "table"};
  return kNames[c.index()];
}

VarId Csp::AddVariable(std::string name, Domain domain) {
  if (domain.empty()) {
    throw std::invalid_argument("variable '" + name + "' has an empty domain");
  }
  names_.push_back(std::move(name));
  domains_.push_back(std::move(domain));
  return VarId{static_cast<std::int32_t>(domains_.size() - 1)};
}

void Csp::CheckVar(VarId v) const {
  if (v.index < 0 || v.index >= num_vars()) {
    throw std::invalid_argument("constraint mentions unknown variable #" +
                                std::to_string(v.index));
  }
}

void Csp::CheckBoolean(VarId v) const {
  const Domain& d = domains_[v.index];
  if (d.min() < 0 || d.max() > 1) {
    throw std::invalid_argument("variable '" + names_[v.index] +
                                "' is used as a boolean but has domain " +
                                d.ToString());
  }
}

void Csp::Add(Constraint c) {
  for (VarId v : Scope(c)) CheckVar(v);
  if (const auto* t = std::get_if<Table>(&c)) {
    for (const auto& tuple : t->tuples) {
      if (tuple.size() != t->vars.size()) {
        throw std::invalid_argument("table tuple arity " +
                                    std::to_string(tuple.size()) +
                                    " does not match scope size " +
                                    std::to_string(t->vars.size()));
      }
    }
  } else if (const auto* s = std::get_if<WeightedBoolSum>(&c)) {
    for (const auto& term : s->terms) CheckBoolean(term.var);
  } else if (const auto* r = std::get_if<ReifEqConst>(&c)) {
    CheckBoolean(r->flag);
  } else if (const auto* i = std::get_if<ImplyEqVars>(&c)) {
    CheckBoolean(i->flag);
  }
  constraints_.push_back(std::move(c));
}

}  // namespace conga::csp

// Copyright 2026 The cfgkb Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CFGKB_EVAL_HPP_
#define CFGKB_EVAL_HPP_

#include <algorithm>
#include <optional>
#include <vector>

#include "cfgkb/ast.hpp"
#include "cfgkb/structure.hpp"

namespace cfgkb {

// Variable bindings indexed by slot.
using Env = std::vector<std::optional<Element>>;

// Kleene evaluation; `env` grows as binders are entered.
Truth EvalFormula(const PartialStructure& s, const Formula& f, Env& env);
Truth EvalFormula(const PartialStructure& s, const Formula& f);

// The value forced by `s`, or nullopt when several values remain possible.
std::optional<Element> EvalTerm(const PartialStructure& s, const Term& t, Env& env);
std::optional<Element> EvalTerm(const PartialStructure& s, const Term& t);

// Tuples on which the condition is true.
std::vector<Tuple> Query(const PartialStructure& s, const SetExpression& e);

Theory AssociatedTheory(const PartialStructure& s);

// Domain a quantified variable of this type ranges over.
const std::vector<Element>& QuantifierDomain(const Domains& d, TypeId type);

// Calls `fn(env)` for every binding of `vars` over their domains.
template <typename Fn>
bool ForEachBinding(const Domains& d, const std::vector<VarDecl>& vars, Env& env, Fn&& fn) {
  std::size_t need = 0;
  for (const VarDecl& v : vars) need = std::max<std::size_t>(need, v.slot + 1);
  if (env.size() < need) env.resize(need);
  std::vector<const std::vector<Element>*> doms;
  for (const VarDecl& v : vars) {
    doms.push_back(&QuantifierDomain(d, v.type));
    if (doms.back()->empty()) {
      for (const VarDecl& w : vars) env[w.slot].reset();
      return true;
    }
  }
  std::vector<std::size_t> idx(vars.size(), 0);
  bool completed = true;
  while (true) {
    for (std::size_t i = 0; i < vars.size(); ++i) env[vars[i].slot] = (*doms[i])[idx[i]];
    if (!fn(env)) {
      completed = false;
      break;
    }
    bool done = true;
    for (std::size_t k = vars.size(); k-- > 0;) {
      if (++idx[k] < doms[k]->size()) {
        done = false;
        break;
      }
      idx[k] = 0;
    }
    if (done) break;
  }
  for (const VarDecl& v : vars) env[v.slot].reset();
  return completed;
}

}  // namespace cfgkb

#endif  // CFGKB_EVAL_HPP_

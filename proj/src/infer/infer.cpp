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

#include "cfgkb/infer.hpp"

#include <algorithm>
#include <unordered_set>

#include "cfgkb/eval.hpp"

namespace cfgkb {

Engine::Engine(std::shared_ptr<const GroundProblem> ground, const InferOptions& options,
               bool guarded)
    : ground_(std::move(ground)), solver_(options.seed), guarded_(guarded) {
  const GroundProblem& g = *ground_;
  solver_.EnsureVars(g.num_vars);
  solver_.SetDeadline(options.deadline);
  if (guarded_) {
    first_selector_ = g.num_vars + 1;
    solver_.EnsureVars(g.num_vars + static_cast<int>(g.units.size()));
  }
  for (std::size_t i = 0; i < g.clauses.size(); ++i) {
    sat::Clause c = g.clauses[i];
    if (guarded_ && g.provenance[i] >= 0) c.push_back(-Selector(g.provenance[i]));
    solver_.AddClause(std::move(c));
  }
}

int Engine::Selector(int unit) const {
  if (!guarded_) throw Error(ErrorKind::kInternal, "engine has no selectors");
  return first_selector_ + unit;
}

bool Engine::Solve(const std::vector<int>& assumptions) {
  switch (solver_.Solve(assumptions)) {
    case sat::Result::kSat: return true;
    case sat::Result::kUnsat: return false;
    case sat::Result::kUnknown: break;
  }
  throw Error(ErrorKind::kTimeout, "timeout");
}

PartialStructure Engine::Model() const { return DecodeModel(*ground_, solver_.model()); }

int Engine::AddTemporaryClause(sat::Clause clause) {
  int act = solver_.NewVar();
  clause.push_back(-act);
  solver_.AddClause(std::move(clause));
  return act;
}

void Engine::Retire(int activation) { solver_.AddClause({-activation}); }

namespace {

void Apply(PartialStructure& s, const GroundProblem& g, int lit) {
  auto atom = g.varmap.Atom(std::abs(lit));
  if (!atom) return;
  s.SetValueTruth(atom->symbol, atom->tuple, atom->value, ToTruth(lit > 0));
}

}  // namespace

PropagationResult PropagateWith(Engine& engine, const PartialStructure& current,
                                const std::vector<int>& assumptions) {
  const GroundProblem& g = engine.ground();
  if (!engine.Solve(assumptions)) throw Error(ErrorKind::kInconsistent, "inconsistent state");
  std::vector<std::uint8_t> model = engine.solver().model();

  std::vector<int> implied;
  engine.solver().PropagateAssumptions(assumptions, &implied);
  std::unordered_set<int> implied_set(implied.begin(), implied.end());

  std::vector<int> backbone;
  std::vector<int> candidates;
  const Vocabulary& voc = g.vocabulary();
  for (SymbolId sym = 0; sym < voc.num_symbols(); ++sym) {
    if (g.fixed[sym]) continue;
    bool function = voc.symbol(sym).is_function();
    std::size_t n = function ? g.domains->ResultDomain(sym).size() : 1;
    for (std::size_t tuple = 0; tuple < g.domains->NumTuples(sym); ++tuple) {
      for (std::size_t v = 0; v < n; ++v) {
        std::size_t value = function ? v : 1;
        if (current.ValueTruth(sym, tuple, value) != Truth::kUnknown) continue;
        int var = g.varmap.Var(sym, tuple, value);
        int lit = model[var - 1] ? var : -var;
        if (implied_set.count(lit)) {
          backbone.push_back(lit);
        } else {
          candidates.push_back(lit);
        }
      }
    }
  }

  // Each round asks for a model flipping at least one remaining candidate,
  // with phases steering the solver toward flipping as many as possible.
  // Unsat means every remaining candidate is entailed.
  std::vector<int> assume = assumptions;
  while (!candidates.empty()) {
    for (int l : candidates) engine.solver().SetPhase(-l);
    bool sat;
    if (candidates.size() == 1) {
      assume.push_back(-candidates[0]);
      sat = engine.Solve(assume);
      assume.pop_back();
    } else {
      sat::Clause some_flipped;
      for (int l : candidates) some_flipped.push_back(-l);
      int act = engine.AddTemporaryClause(some_flipped);
      assume.push_back(act);
      sat = engine.Solve(assume);
      assume.pop_back();
      engine.Retire(act);
    }
    if (!sat) {
      backbone.insert(backbone.end(), candidates.begin(), candidates.end());
      break;
    }
    const auto& m = engine.solver().model();
    candidates.erase(std::remove_if(candidates.begin(), candidates.end(),
                                    [&](int l) { return (m[std::abs(l) - 1] != 0) != (l > 0); }),
                     candidates.end());
  }

  PropagationResult result{current, {}};
  for (int lit : backbone) Apply(result.structure, g, lit);
  result.structure.Normalize();
  for (SymbolId sym = 0; sym < voc.num_symbols(); ++sym) {
    const auto& results = g.domains->ResultDomain(sym);
    bool function = voc.symbol(sym).is_function();
    for (std::size_t tuple = 0; tuple < g.domains->NumTuples(sym); ++tuple) {
      for (std::size_t v = function ? 0 : 1; v < results.size(); ++v) {
        Truth before = current.ValueTruth(sym, tuple, v);
        Truth after = result.structure.ValueTruth(sym, tuple, v);
        if (before == Truth::kUnknown && after != Truth::kUnknown) {
          result.derived.push_back({{sym, g.domains->TupleAt(sym, tuple)}, results[v], after});
        }
      }
    }
  }
  return result;
}

std::optional<PartialStructure> ExpandWith(Engine& engine, const std::vector<int>& assumptions) {
  if (!engine.Solve(assumptions)) return std::nullopt;
  return engine.Model();
}

std::optional<PartialStructure> MinimizeWith(Engine& engine, const std::vector<int>& assumptions,
                                             const DomainTerm& objective) {
  const GroundProblem& g = engine.ground();
  const SymbolDecl& decl = g.vocabulary().symbol(objective.symbol);
  if (!decl.is_function() || !g.vocabulary().IsIntegerType(decl.result)) {
    throw Error(ErrorKind::kType, "objective '" + ToString(g.vocabulary(), objective) +
                                      "' is not an integer term");
  }
  auto cases = TermCases(g, objective);
  if (!engine.Solve(assumptions)) return std::nullopt;
  auto value_of = [&](const std::vector<std::uint8_t>& m) {
    for (const auto& [v, l] : cases) {
      if (l == g.top || (l != -g.top && (m[std::abs(l) - 1] != 0) == (l > 0))) {
        return v.integer();
      }
    }
    throw Error(ErrorKind::kInternal, "objective has no value in model");
  };
  std::vector<std::uint8_t> best = engine.solver().model();
  std::int64_t best_value = value_of(best);
  std::vector<int> assume = assumptions;
  while (true) {
    sat::Clause lower;
    for (const auto& [v, l] : cases) {
      if (v.integer() < best_value) lower.push_back(l);
    }
    if (lower.empty()) break;
    int act = engine.AddTemporaryClause(lower);
    assume.push_back(act);
    bool sat = engine.Solve(assume);
    assume.pop_back();
    engine.Retire(act);
    if (!sat) break;
    best = engine.solver().model();
    best_value = value_of(best);
  }
  return DecodeModel(g, best);
}

std::vector<Element> ValuesWith(Engine& engine, const PartialStructure& current,
                                const std::vector<int>& assumptions, const DomainTerm& term) {
  const GroundProblem& g = engine.ground();
  std::size_t tuple = current.TupleIndexOrThrow(term);
  const auto& results = g.domains->ResultDomain(term.symbol);
  bool function = g.vocabulary().symbol(term.symbol).is_function();
  std::vector<int> lits;
  for (const Element& v : results) lits.push_back(EncodeAssignment(g, {term, v}));
  auto holds = [&](int l, const std::vector<std::uint8_t>& m) {
    if (l == g.top) return true;
    if (l == -g.top) return false;
    return (m[std::abs(l) - 1] != 0) == (l > 0);
  };
  std::vector<bool> seen(results.size(), false);
  if (!engine.Solve(assumptions)) throw Error(ErrorKind::kInconsistent, "inconsistent state");
  for (std::size_t v = 0; v < results.size(); ++v) seen[v] = holds(lits[v], engine.solver().model());
  std::vector<int> assume = assumptions;
  for (std::size_t v = 0; v < results.size(); ++v) {
    if (seen[v] || lits[v] == -g.top) continue;
    std::size_t index = function ? v : 1;
    if (function && current.ValueTruth(term.symbol, tuple, index) == Truth::kFalse) continue;
    assume.push_back(lits[v]);
    bool sat = engine.Solve(assume);
    assume.pop_back();
    if (!sat) continue;
    for (std::size_t w = 0; w < results.size(); ++w) {
      if (holds(lits[w], engine.solver().model())) seen[w] = true;
    }
  }
  std::vector<Element> out;
  for (std::size_t v = 0; v < results.size(); ++v) {
    if (seen[v]) out.push_back(results[v]);
  }
  return out;
}

namespace {

std::shared_ptr<const GroundProblem> GroundShared(const Theory& theory, const PartialStructure& s) {
  return std::make_shared<const GroundProblem>(Ground(theory, s));
}

}  // namespace

std::optional<PartialStructure> ModelExpand(const Theory& theory, const PartialStructure& s,
                                            const InferOptions& options) {
  Engine engine(GroundShared(theory, s), options);
  return ExpandWith(engine, {});
}

bool ModelCheck(const Theory& theory, const PartialStructure& s) {
  if (!s.IsTotal()) throw Error(ErrorKind::kDomain, "structure not total");
  for (const Sentence& sentence : theory.sentences) {
    Env env(sentence.num_slots);
    if (EvalFormula(s, *sentence.formula, env) != Truth::kTrue) return false;
  }
  return true;
}

std::optional<PartialStructure> Minimize(const Theory& theory, const PartialStructure& s,
                                         const DomainTerm& objective,
                                         const InferOptions& options) {
  Engine engine(GroundShared(theory, s), options);
  return MinimizeWith(engine, {}, objective);
}

PropagationResult Propagate(const Theory& theory, const PartialStructure& s,
                            const InferOptions& options) {
  Engine engine(GroundShared(theory, s), options);
  return PropagateWith(engine, s, {});
}

}  // namespace cfgkb

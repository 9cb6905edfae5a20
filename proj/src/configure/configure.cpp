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

#include "cfgkb/configure.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace cfgkb {

std::shared_ptr<const KnowledgeBase> KnowledgeBase::Create(const Problem& problem) {
  return Create(problem.theory, problem.structure);
}

std::shared_ptr<const KnowledgeBase> KnowledgeBase::Create(const Theory& theory,
                                                           const PartialStructure& base) {
  auto kb = std::make_shared<KnowledgeBase>(
      KnowledgeBase{base.domains().vocabulary_ptr(), theory, base, nullptr});
  kb->ground = std::make_shared<const GroundProblem>(Ground(theory, base));
  return kb;
}

struct Configurator::Candidates {
  std::vector<int> lits;    // assumption literal per candidate
  std::vector<int> unit;    // unit index, or -1
  std::vector<int> choice;  // choice index, or -1
  std::vector<int> fixed;   // background selectors
  std::vector<std::string> background;
};

namespace {

// Visits index combinations of size k over [0, n) in lexicographic order
// until fn returns true.
template <typename Fn>
bool ForEachCombination(std::size_t n, std::size_t k, Fn&& fn) {
  if (k > n) return false;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    if (fn(idx)) return true;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return false;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

std::vector<std::size_t> Iota(std::size_t n) {
  std::vector<std::size_t> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = i;
  return out;
}

std::vector<std::size_t> MinimumHittingSet(const std::vector<std::vector<std::size_t>>& sets,
                                           std::size_t n) {
  std::vector<std::size_t> best;
  for (std::size_t k = 0; k <= n; ++k) {
    bool found = ForEachCombination(n, k, [&](const std::vector<std::size_t>& h) {
      for (const auto& s : sets) {
        bool hit = false;
        for (std::size_t x : s) {
          if (std::binary_search(h.begin(), h.end(), x)) {
            hit = true;
            break;
          }
        }
        if (!hit) return false;
      }
      best = h;
      return true;
    });
    if (found) return best;
  }
  throw Error(ErrorKind::kInternal, "no hitting set");
}

}  // namespace

Configurator::Configurator(std::shared_ptr<const KnowledgeBase> kb,
                           std::vector<Assignment> choices, ConfigOptions options)
    : kb_(std::move(kb)), choices_(std::move(choices)), options_(options), current_(kb_->base) {
  for (std::size_t i = 0; i < choices_.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (choices_[j].term == choices_[i].term) {
        throw Error(ErrorKind::kConflict, "term '" + ToString(*kb_->vocabulary, choices_[i].term) +
                                              "' chosen twice");
      }
    }
    current_ = Extend(current_, choices_[i]);
  }
}

Engine& Configurator::Plain() {
  if (!plain_) plain_ = std::make_unique<Engine>(kb_->ground, options_.infer);
  return *plain_;
}

Engine& Configurator::Guarded(bool fine) {
  if (!fine) {
    if (!guarded_) guarded_ = std::make_unique<Engine>(kb_->ground, options_.infer, true);
    return *guarded_;
  }
  if (!fine_guarded_) {
    GroundOptions go;
    go.fixing = GroundOptions::Fixing::kWeightsOnly;
    fine_ground_ = std::make_shared<const GroundProblem>(Ground(kb_->theory, kb_->base, go));
    fine_guarded_ = std::make_unique<Engine>(fine_ground_, options_.infer, true);
  }
  return *fine_guarded_;
}

std::vector<int> Configurator::ChoiceLits() const {
  std::vector<int> out;
  for (const Assignment& c : choices_) {
    int l = EncodeAssignment(*kb_->ground, c);
    if (l != kb_->ground->top) out.push_back(l);
  }
  return out;
}

bool Configurator::Consistent() { return Plain().Solve(ChoiceLits()); }

PropagationResult Configurator::Propagate() {
  if (!propagated_) propagated_ = PropagateWith(Plain(), current_, ChoiceLits());
  return *propagated_;
}

ParameterSet Configurator::OpenTerms() {
  const PartialStructure& s = Propagate().structure;
  ParameterSet out;
  for (const DomainTerm& t : OpenTermsUniverse(kb_->base)) {
    if (!s.ForcedValue(t) || s.IsUninterpreted(t)) {
      std::size_t tuple = s.TupleIndexOrThrow(t);
      bool open = false;
      std::size_t n = s.domains().ResultDomain(t.symbol).size();
      bool function = s.vocabulary().symbol(t.symbol).is_function();
      for (std::size_t v = function ? 0 : 1; v < n; ++v) {
        open |= s.ValueTruth(t.symbol, tuple, v) == Truth::kUnknown;
      }
      if (open) out.push_back(t);
    }
  }
  return out;
}

std::vector<Element> Configurator::ConsistentValues(const DomainTerm& term) {
  return ValuesWith(Plain(), current_, ChoiceLits(), term);
}

ConsequenceSet Configurator::Consequences(const DomainTerm& term, const Element& value) {
  PropagationResult before = Propagate();
  ParameterSet open = OpenTerms();
  std::vector<int> assume = ChoiceLits();
  assume.push_back(EncodeAssignment(*kb_->ground, {term, value}));
  PartialStructure hypothetical = Extend(current_, {term, value});
  PropagationResult after{hypothetical, {}};
  try {
    after = PropagateWith(Plain(), hypothetical, assume);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::kInconsistent) throw;
    throw Error(ErrorKind::kInconsistent, "inconsistent hypothetical");
  }
  ConsequenceSet out;
  const Domains& d = current_.domains();
  for (const DomainTerm& q : open) {
    if (q == term) continue;
    std::size_t tuple = current_.TupleIndexOrThrow(q);
    if (!kb_->vocabulary->symbol(q.symbol).is_function()) {
      if (before.structure.ValueTruth(q.symbol, tuple, 1) != Truth::kUnknown) continue;
      Truth t = after.structure.ValueTruth(q.symbol, tuple, 1);
      if (t == Truth::kUnknown) continue;
      bool v = t == Truth::kTrue;
      out.positive.push_back({q, Element::Boolean(v)});
      out.negative.push_back({q, Element::Boolean(!v)});
      continue;
    }
    const auto& results = d.ResultDomain(q.symbol);
    for (std::size_t v = 0; v < results.size(); ++v) {
      if (before.structure.ValueTruth(q.symbol, tuple, v) != Truth::kUnknown) continue;
      Truth t = after.structure.ValueTruth(q.symbol, tuple, v);
      if (t == Truth::kTrue) out.positive.push_back({q, results[v]});
      if (t == Truth::kFalse) out.negative.push_back({q, results[v]});
    }
  }
  return out;
}

bool Configurator::CheckConsistency(const DomainTerm& term, const Element& value) {
  int lit = EncodeAssignment(*kb_->ground, {term, value});
  if (lit == -kb_->ground->top) return false;
  std::vector<int> assume = ChoiceLits();
  assume.push_back(lit);
  return Plain().Solve(assume);
}

std::optional<PartialStructure> Configurator::Autocomplete(
    const std::optional<DomainTerm>& objective) {
  if (objective) return MinimizeWith(Plain(), ChoiceLits(), *objective);
  return ExpandWith(Plain(), ChoiceLits());
}

Configurator::Candidates Configurator::Collect(const GroundProblem& g,
                                               const std::vector<std::string>& background,
                                               bool data_only) const {
  Candidates c;
  std::set<std::string> wanted(background.begin(), background.end());
  std::set<std::string> matched;
  std::vector<int> sentence_units;
  std::vector<int> data_units;
  for (std::size_t u = 0; u < g.units.size(); ++u) {
    (g.units[u].kind == Unit::Kind::kSentence ? sentence_units : data_units)
        .push_back(static_cast<int>(u));
  }
  std::stable_sort(sentence_units.begin(), sentence_units.end(),
                   [&](int a, int b) { return g.units[a].label < g.units[b].label; });
  auto in_background = [&](const Unit& u) {
    bool hit = false;
    for (const std::string* key : {&u.id, &u.label}) {
      if (wanted.count(*key)) {
        matched.insert(*key);
        hit = true;
      }
    }
    return hit;
  };
  auto Engine_selector = [&](int unit) {
    return (data_only ? fine_guarded_ : guarded_)->Selector(unit);
  };
  for (int u : sentence_units) {
    if (data_only || in_background(g.units[u])) {
      c.fixed.push_back(Engine_selector(u));
      continue;
    }
    c.lits.push_back(Engine_selector(u));
    c.unit.push_back(u);
    c.choice.push_back(-1);
  }
  for (int u : data_units) {
    if (in_background(g.units[u])) {
      c.fixed.push_back(Engine_selector(u));
      continue;
    }
    c.lits.push_back(Engine_selector(u));
    c.unit.push_back(u);
    c.choice.push_back(-1);
  }
  for (std::size_t i = 0; i < choices_.size(); ++i) {
    int l = EncodeAssignment(g, choices_[i]);
    if (l == g.top) continue;
    c.lits.push_back(l);
    c.unit.push_back(-1);
    c.choice.push_back(static_cast<int>(i));
  }
  for (const std::string& b : background) {
    // Sentences that ground to nothing have no units; accept their labels.
    if (!matched.count(b) && !kb_->theory.Find(b)) {
      throw Error(ErrorKind::kDomain, "unknown background sentence '" + b + "'");
    }
  }
  c.background = background;
  return c;
}

// QuickXplain over `subset` in order; fixed plus subset must be unsatisfiable.
std::vector<std::size_t> Configurator::Shrink(Engine& engine, const std::vector<int>& fixed,
                                              const std::vector<int>& items,
                                              std::vector<std::size_t> subset) {
  if (subset.empty()) return subset;
  std::vector<int> background = fixed;
  auto quick = [&](auto& self, bool added,
                   const std::vector<std::size_t>& c) -> std::vector<std::size_t> {
    if (added && !engine.Solve(background)) return {};
    if (c.size() == 1) return c;
    std::size_t half = c.size() / 2;
    std::vector<std::size_t> c1(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(half));
    std::vector<std::size_t> c2(c.begin() + static_cast<std::ptrdiff_t>(half), c.end());
    std::size_t mark = background.size();
    for (std::size_t i : c1) background.push_back(items[i]);
    std::vector<std::size_t> d2 = self(self, true, c2);
    background.resize(mark);
    for (std::size_t i : d2) background.push_back(items[i]);
    std::vector<std::size_t> d1 = self(self, !d2.empty(), c1);
    background.resize(mark);
    d1.insert(d1.end(), d2.begin(), d2.end());
    return d1;
  };
  return quick(quick, false, subset);
}

Explanation Configurator::Build(const GroundProblem& g, const Candidates& c,
                                const std::vector<std::size_t>& picked) const {
  Explanation out;
  out.background = c.background;
  for (std::size_t i : picked) {
    if (c.unit[i] >= 0) {
      const Unit& u = g.units[c.unit[i]];
      if (u.kind == Unit::Kind::kSentence) {
        out.sentences.push_back({u.id, u.label, u.formula});
      } else {
        out.data.push_back(u.literal);
      }
    } else {
      out.choices.push_back(choices_[c.choice[i]]);
    }
  }
  return out;
}

Explanation Configurator::Explain(const std::vector<std::string>& background, bool minimum) {
  Engine& engine = Guarded(false);
  const GroundProblem& g = *kb_->ground;
  Candidates c = Collect(g, background, false);
  if (!engine.Solve(c.fixed)) throw Error(ErrorKind::kInconsistent, "background inconsistent");
  std::vector<int> all = c.fixed;
  all.insert(all.end(), c.lits.begin(), c.lits.end());
  if (engine.Solve(all)) throw Error(ErrorKind::kConsistent, "state is consistent");
  std::vector<std::size_t> picked = Shrink(engine, c.fixed, c.lits, Iota(c.lits.size()));
  if (minimum) {
    if (c.lits.size() > options_.minimum_core_limit) {
      throw Error(ErrorKind::kLimit, "instance too large for minimum core");
    }
    for (std::size_t k = 1; k < picked.size(); ++k) {
      bool found = ForEachCombination(c.lits.size(), k, [&](const std::vector<std::size_t>& s) {
        std::vector<int> assume = c.fixed;
        for (std::size_t i : s) assume.push_back(c.lits[i]);
        if (engine.Solve(assume)) return false;
        picked = s;
        return true;
      });
      if (found) break;
    }
  }
  return Build(g, c, picked);
}

Explanation Configurator::MinimalUnsatTheory(const std::vector<std::string>& background) {
  return Explain(background, false);
}

Explanation Configurator::MinimumUnsatTheory(const std::vector<std::string>& background) {
  return Explain(background, true);
}

std::vector<Explanation> Configurator::MinimalUnsatTheories(
    const std::vector<std::string>& background, std::size_t limit) {
  Engine& engine = Guarded(false);
  const GroundProblem& g = *kb_->ground;
  Candidates c = Collect(g, background, false);
  if (!engine.Solve(c.fixed)) throw Error(ErrorKind::kInconsistent, "background inconsistent");
  std::vector<int> all = c.fixed;
  all.insert(all.end(), c.lits.begin(), c.lits.end());
  if (engine.Solve(all)) throw Error(ErrorKind::kConsistent, "state is consistent");

  // Map solver over candidate subsets: variable i+1 selects candidate i.
  const std::size_t n = c.lits.size();
  sat::Solver map(options_.infer.seed);
  map.EnsureVars(static_cast<int>(n));
  for (std::size_t i = 0; i < n; ++i) map.SetPhase(static_cast<int>(i) + 1);
  std::vector<Explanation> out;
  while (out.size() < limit && map.Solve() == sat::Result::kSat) {
    std::vector<std::size_t> seed;
    std::vector<bool> in(n, false);
    for (std::size_t i = 0; i < n; ++i) {
      if (map.ModelValue(static_cast<int>(i) + 1)) {
        seed.push_back(i);
        in[i] = true;
      }
    }
    std::vector<int> assume = c.fixed;
    for (std::size_t i : seed) assume.push_back(c.lits[i]);
    sat::Clause block;
    if (engine.Solve(assume)) {
      for (std::size_t i = 0; i < n; ++i) {
        if (in[i]) continue;
        assume.push_back(c.lits[i]);
        if (engine.Solve(assume)) {
          in[i] = true;
        } else {
          assume.pop_back();
        }
      }
      for (std::size_t i = 0; i < n; ++i) {
        if (!in[i]) block.push_back(static_cast<int>(i) + 1);
      }
    } else {
      std::vector<std::size_t> mus = Shrink(engine, c.fixed, c.lits, seed);
      for (std::size_t i : mus) block.push_back(-(static_cast<int>(i) + 1));
      out.push_back(Build(g, c, mus));
    }
    if (!map.AddClause(block)) break;
  }
  return out;
}

PartialStructure Configurator::UnsatSubstructure() {
  Engine& engine = Guarded(true);
  const GroundProblem& g = *fine_ground_;
  Candidates c = Collect(g, {}, true);
  PartialStructure out = DomainStructure(kb_->base);
  const Domains& d = out.domains();
  for (SymbolId sym = 0; sym < kb_->vocabulary->num_symbols(); ++sym) {
    if (!g.fixed[sym]) continue;
    for (std::size_t tuple = 0; tuple < d.NumTuples(sym); ++tuple) {
      for (std::size_t v = 0; v < d.ResultDomain(sym).size(); ++v) {
        out.SetValueTruth(sym, tuple, v, kb_->base.ValueTruth(sym, tuple, v));
      }
    }
  }
  if (!engine.Solve(c.fixed)) return out;
  std::vector<int> all = c.fixed;
  all.insert(all.end(), c.lits.begin(), c.lits.end());
  if (engine.Solve(all)) throw Error(ErrorKind::kConsistent, "state is consistent");
  Explanation e = Build(g, c, Shrink(engine, c.fixed, c.lits, Iota(c.lits.size())));
  for (const ValueLiteral& lit : e.data) {
    const Assignment& a = lit.atom;
    std::size_t tuple = out.TupleIndexOrThrow(a.term);
    if (kb_->vocabulary->symbol(a.term.symbol).is_function()) {
      out.SetValueTruth(a.term.symbol, tuple, out.ResultIndexOrThrow(a.term, a.value),
                        ToTruth(lit.positive));
    } else {
      out.SetValueTruth(a.term.symbol, tuple, 1, ToTruth(lit.positive == a.value.boolean()));
    }
  }
  for (const Assignment& a : e.choices) out = Extend(out, a);
  out.Normalize();
  return out;
}

std::vector<Assignment> Configurator::BacktrackSuggest(const DomainTerm& term,
                                                       const Element& value) {
  const GroundProblem& g = *kb_->ground;
  int lit = EncodeAssignment(g, {term, value});
  Engine& engine = Plain();
  if (lit == -g.top || !engine.Solve({lit})) {
    throw Error(ErrorKind::kConflict, "value conflicts with base data");
  }
  std::size_t n = choices_.size();
  if (n > options_.hitting_set_limit) {
    throw Error(ErrorKind::kLimit, "too many choices for exact backtracking");
  }
  std::vector<int> lits;
  for (const Assignment& c : choices_) lits.push_back(EncodeAssignment(g, c));
  std::vector<std::vector<std::size_t>> conflicts;
  while (true) {
    std::vector<std::size_t> retract = MinimumHittingSet(conflicts, n);
    std::vector<int> assume{lit};
    std::vector<std::size_t> kept;
    for (std::size_t i = 0; i < n; ++i) {
      if (std::binary_search(retract.begin(), retract.end(), i)) continue;
      kept.push_back(i);
      assume.push_back(lits[i]);
    }
    if (engine.Solve(assume)) {
      std::vector<Assignment> out;
      for (std::size_t i : retract) out.push_back(choices_[i]);
      return out;
    }
    std::set<int> core(engine.core().begin(), engine.core().end());
    std::vector<std::size_t> initial;
    for (std::size_t i : kept) {
      if (core.count(lits[i])) initial.push_back(i);
    }
    std::vector<std::size_t> conflict = Shrink(engine, {lit}, lits, initial);
    std::sort(conflict.begin(), conflict.end());
    if (conflict.empty()) throw Error(ErrorKind::kInternal, "empty conflict set");
    conflicts.push_back(std::move(conflict));
  }
}

Configurator Configurator::Retract(const DomainTerm& term) const {
  auto [structure, remaining] = cfgkb::Retract(kb_->base, choices_, term);
  return Configurator(kb_, std::move(remaining), options_);
}

Configurator Configurator::Choose(const Assignment& choice) const {
  std::vector<Assignment> next = choices_;
  next.push_back(choice);
  return Configurator(kb_, std::move(next), options_);
}

ParameterSet GetOpenTerms(const Theory& theory, const PartialStructure& s) {
  return Configurator(KnowledgeBase::Create(theory, s), {}).OpenTerms();
}

std::vector<Element> GetConsistentValues(const Theory& theory, const PartialStructure& s,
                                         const DomainTerm& term) {
  return Configurator(KnowledgeBase::Create(theory, s), {}).ConsistentValues(term);
}

ConsequenceSet Consequences(const Theory& theory, const PartialStructure& s,
                            const DomainTerm& term, const Element& value) {
  return Configurator(KnowledgeBase::Create(theory, s), {}).Consequences(term, value);
}

bool CheckConsistency(const Theory& theory, const PartialStructure& s, const DomainTerm& term,
                      const Element& value) {
  return Configurator(KnowledgeBase::Create(theory, s), {}).CheckConsistency(term, value);
}

std::optional<PartialStructure> Autocomplete(const Theory& theory, const PartialStructure& s,
                                             const std::optional<DomainTerm>& objective) {
  return Configurator(KnowledgeBase::Create(theory, s), {}).Autocomplete(objective);
}

Explanation MinimalUnsatTheory(const Theory& theory, const PartialStructure& s,
                               const std::vector<std::string>& background) {
  return Configurator(KnowledgeBase::Create(theory, s), {}).MinimalUnsatTheory(background);
}

std::vector<Explanation> MinimalUnsatTheories(const Theory& theory, const PartialStructure& s,
                                              const std::vector<std::string>& background,
                                              std::size_t limit) {
  return Configurator(KnowledgeBase::Create(theory, s), {}).MinimalUnsatTheories(background, limit);
}

Explanation MinimumUnsatTheory(const Theory& theory, const PartialStructure& s,
                               const std::vector<std::string>& background) {
  return Configurator(KnowledgeBase::Create(theory, s), {}).MinimumUnsatTheory(background);
}

PartialStructure UnsatSubstructure(const Theory& theory, const PartialStructure& s) {
  return Configurator(KnowledgeBase::Create(theory, s), {}).UnsatSubstructure();
}

std::vector<Assignment> BacktrackSuggest(const Theory& theory, const PartialStructure& base,
                                         const std::vector<Assignment>& choices,
                                         const DomainTerm& term, const Element& value) {
  return Configurator(KnowledgeBase::Create(theory, base), choices).BacktrackSuggest(term, value);
}

std::pair<PartialStructure, std::vector<Assignment>> Retract(const PartialStructure& base,
                                                             const std::vector<Assignment>& choices,
                                                             const DomainTerm& term) {
  std::vector<Assignment> remaining;
  bool found = false;
  for (const Assignment& c : choices) {
    if (c.term == term) {
      found = true;
    } else {
      remaining.push_back(c);
    }
  }
  if (!found) {
    std::string name = ToString(base.vocabulary(), term);
    if (!base.IsUninterpreted(term)) {
      throw Error(ErrorKind::kDomain, "'" + name + "' is fixed by data and cannot be retracted");
    }
    throw Error(ErrorKind::kDomain, "'" + name + "' was not chosen");
  }
  PartialStructure s = base;
  for (const Assignment& c : remaining) s = Extend(s, c);
  return {std::move(s), std::move(remaining)};
}

}  // namespace cfgkb

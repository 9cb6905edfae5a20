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

#include "cfgkb/ground.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "cfgkb/eval.hpp"

namespace cfgkb {

VarMap::VarMap(const Domains& d, const std::vector<bool>& fixed, int first_var)
    : first_(first_var), end_(first_var) {
  const Vocabulary& voc = d.vocabulary();
  base_.assign(voc.num_symbols(), 0);
  width_.assign(voc.num_symbols(), 0);
  predicate_.assign(voc.num_symbols(), false);
  for (SymbolId sym = 0; sym < voc.num_symbols(); ++sym) {
    if (fixed[sym]) continue;
    bool function = voc.symbol(sym).is_function();
    std::size_t width = function ? d.ResultDomain(sym).size() : 1;
    predicate_[sym] = !function;
    base_[sym] = end_;
    width_[sym] = width;
    order_.push_back(sym);
    end_ += static_cast<int>(d.NumTuples(sym) * width);
  }
}

int VarMap::Var(SymbolId sym, std::size_t tuple, std::size_t value) const {
  if (base_[sym] == 0) return 0;
  std::size_t offset = predicate_[sym] ? 0 : value;
  return base_[sym] + static_cast<int>(tuple * width_[sym] + offset);
}

std::optional<AtomRef> VarMap::Atom(int var) const {
  if (var < first_ || var >= end_) return std::nullopt;
  auto it = std::upper_bound(order_.begin(), order_.end(), var,
                             [&](int v, SymbolId sym) { return v < base_[sym]; });
  SymbolId sym = *(it - 1);
  std::size_t rel = static_cast<std::size_t>(var - base_[sym]);
  AtomRef ref{sym, rel / width_[sym], rel % width_[sym]};
  if (predicate_[sym]) ref.value = 1;
  return ref;
}

int GroundProblem::FindUnit(const std::string& id) const {
  for (std::size_t i = 0; i < units.size(); ++i) {
    if (units[i].id == id) return static_cast<int>(i);
  }
  return -1;
}

namespace {

using Cases = std::vector<std::pair<Element, int>>;

CompareOp Negate(CompareOp op) {
  switch (op) {
    case CompareOp::kEq: return CompareOp::kNe;
    case CompareOp::kNe: return CompareOp::kEq;
    case CompareOp::kLt: return CompareOp::kGe;
    case CompareOp::kLe: return CompareOp::kGt;
    case CompareOp::kGt: return CompareOp::kLe;
    case CompareOp::kGe: return CompareOp::kLt;
  }
  return op;
}

void CollectSymbols(const Term& t, std::set<SymbolId>& out);

void CollectSymbols(const Formula& f, std::set<SymbolId>& out) {
  if (f.kind == FormulaKind::kAtom) out.insert(f.symbol);
  for (const auto& a : f.args) CollectSymbols(*a, out);
  for (const auto& c : f.children) CollectSymbols(*c, out);
}

void CollectSymbols(const Term& t, std::set<SymbolId>& out) {
  if (t.kind == TermKind::kApply) out.insert(t.symbol);
  for (const auto& a : t.args) CollectSymbols(*a, out);
  if (t.cond) CollectSymbols(*t.cond, out);
}

void CollectWeightSymbols(const Term& t, std::set<SymbolId>& out);

void CollectWeightSymbols(const Formula& f, std::set<SymbolId>& out) {
  for (const auto& a : f.args) CollectWeightSymbols(*a, out);
  for (const auto& c : f.children) CollectWeightSymbols(*c, out);
}

void CollectWeightSymbols(const Term& t, std::set<SymbolId>& out) {
  if (t.kind == TermKind::kAggregate) {
    if (t.agg == AggOp::kProd) throw Error(ErrorKind::kUnsupported, "unsupported aggregate: prod");
    if (!t.args.empty()) CollectSymbols(*t.args[0], out);
  }
  for (const auto& a : t.args) CollectWeightSymbols(*a, out);
  if (t.cond) CollectWeightSymbols(*t.cond, out);
}

class Grounder {
 public:
  Grounder(const Theory& theory, const PartialStructure& s, const GroundOptions& options)
      : theory_(theory), s_(s), d_(s.domains()), voc_(s.vocabulary()), options_(options) {}

  GroundProblem Run() {
    if (!theory_.typed) throw Error(ErrorKind::kType, "theory is not typechecked");
    g_.domains = s_.domains_ptr();
    g_.base = std::make_shared<const PartialStructure>(s_);
    ChooseFixed();
    g_.varmap = VarMap(d_, g_.fixed, 2);
    g_.top = 1;
    g_.num_vars = g_.varmap.end_var() - 1;
    top_ = g_.top;
    Emit({top_}, -1);
    EmitFunctionalConsistency();
    EmitData();
    for (std::size_t i = 0; i < theory_.sentences.size(); ++i) GroundSentence(i);
    for (const DomainTerm& t : options_.observables) {
      g_.objectives.push_back(Objective{t, TermCases(g_, t)});
    }
    return std::move(g_);
  }

 private:
  void ChooseFixed() {
    std::set<SymbolId> weights;
    for (const Sentence& s : theory_.sentences) CollectWeightSymbols(*s.formula, weights);
    g_.fixed.assign(voc_.num_symbols(), false);
    for (SymbolId sym = 0; sym < voc_.num_symbols(); ++sym) {
      bool total = s_.SymbolTotal(sym);
      if (weights.count(sym) && !total) {
        throw Error(ErrorKind::kUnsupported, "unsupported aggregate: weight uses '" +
                                                 voc_.symbol(sym).name +
                                                 "', which is not fully interpreted");
      }
      g_.fixed[sym] = options_.fixing == GroundOptions::Fixing::kTotalSymbols
                          ? total
                          : weights.count(sym) > 0;
    }
  }

  int NewVar() { return ++g_.num_vars; }
  bool IsTop(int l) const { return l == top_; }
  bool IsBottom(int l) const { return l == -top_; }

  void Emit(sat::Clause c, int unit) {
    sat::Clause out;
    for (int l : c) {
      if (IsTop(l) && !(c.size() == 1 && unit < 0)) return;
      if (IsBottom(l)) continue;
      out.push_back(l);
    }
    std::sort(out.begin(), out.end(), [](int a, int b) {
      return std::abs(a) != std::abs(b) ? std::abs(a) < std::abs(b) : a < b;
    });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    for (std::size_t i = 0; i + 1 < out.size(); ++i) {
      if (out[i] == -out[i + 1]) return;
    }
    if (out.empty()) out.push_back(-top_);
    g_.clauses.push_back(std::move(out));
    g_.provenance.push_back(unit);
    if (unit >= 0) unit_used_ = true;
  }

  void EmitFunctionalConsistency() {
    for (SymbolId sym = 0; sym < voc_.num_symbols(); ++sym) {
      if (g_.fixed[sym] || !voc_.symbol(sym).is_function()) continue;
      std::size_t n = d_.ResultDomain(sym).size();
      for (std::size_t tuple = 0; tuple < d_.NumTuples(sym); ++tuple) {
        sat::Clause alo;
        for (std::size_t v = 0; v < n; ++v) alo.push_back(g_.varmap.Var(sym, tuple, v));
        Emit(alo, -1);
        for (std::size_t a = 0; a < n; ++a) {
          for (std::size_t b = a + 1; b < n; ++b) Emit({-alo[a], -alo[b]}, -1);
        }
      }
    }
  }

  int AddDataUnit(const ValueLiteral& lit) {
    Unit u;
    u.kind = Unit::Kind::kData;
    u.label = "data:" + voc_.symbol(lit.atom.term.symbol).name;
    u.id = "data:" + ToString(voc_, lit);
    u.literal = lit;
    g_.units.push_back(std::move(u));
    return static_cast<int>(g_.units.size()) - 1;
  }

  void EmitData() {
    for (SymbolId sym = 0; sym < voc_.num_symbols(); ++sym) {
      if (g_.fixed[sym]) continue;
      const auto& results = d_.ResultDomain(sym);
      bool function = voc_.symbol(sym).is_function();
      for (std::size_t tuple = 0; tuple < d_.NumTuples(sym); ++tuple) {
        DomainTerm term{sym, d_.TupleAt(sym, tuple)};
        if (!function) {
          Truth t = s_.ValueTruth(sym, tuple, 1);
          if (t == Truth::kUnknown) continue;
          int unit = AddDataUnit({{term, Element::Boolean(true)}, t == Truth::kTrue});
          int var = g_.varmap.Var(sym, tuple, 1);
          Emit({t == Truth::kTrue ? var : -var}, unit);
          continue;
        }
        std::optional<Element> forced;
        for (std::size_t v = 0; v < results.size(); ++v) {
          if (s_.ValueTruth(sym, tuple, v) == Truth::kTrue) {
            int unit = AddDataUnit({{term, results[v]}, true});
            Emit({g_.varmap.Var(sym, tuple, v)}, unit);
            forced = results[v];
          }
        }
        if (forced) continue;
        for (std::size_t v = 0; v < results.size(); ++v) {
          if (s_.ValueTruth(sym, tuple, v) == Truth::kFalse) {
            int unit = AddDataUnit({{term, results[v]}, false});
            Emit({-g_.varmap.Var(sym, tuple, v)}, unit);
          }
        }
      }
    }
  }

  void GroundSentence(std::size_t index) {
    const Sentence& sentence = theory_.sentences[index];
    std::vector<VarDecl> vars;
    const Formula* body = sentence.formula.get();
    while (body->kind == FormulaKind::kForall) {
      vars.insert(vars.end(), body->vars.begin(), body->vars.end());
      body = body->children[0].get();
    }
    Env env(std::max(sentence.num_slots, 1));
    int instance = 0;
    ForEachBinding(d_, vars, env, [&](Env& e) {
      g_.units.emplace_back();
      int unit = static_cast<int>(g_.units.size()) - 1;
      unit_used_ = false;
      Assert(*body, e, true, unit);
      Unit& u = g_.units.back();
      u.kind = Unit::Kind::kSentence;
      u.label = sentence.label;
      u.sentence = static_cast<int>(index);
      u.instance = instance++;
      if (!unit_used_) {
        g_.units.pop_back();
        return true;
      }
      if (vars.empty()) {
        u.id = sentence.label;
        u.formula = sentence.formula;
      } else {
        u.id = sentence.label + "[";
        for (std::size_t i = 0; i < vars.size(); ++i) {
          u.id += (i ? "," : "") + e[vars[i].slot]->ToString();
        }
        u.id += "]";
        u.formula = ast::Substitute(sentence.formula->kind == FormulaKind::kForall
                                        ? FindBody(sentence.formula, vars.size())
                                        : sentence.formula,
                                    e);
      }
      return true;
    });
  }

  static FormulaPtr FindBody(FormulaPtr f, std::size_t num_vars) {
    std::size_t seen = 0;
    while (f->kind == FormulaKind::kForall && seen < num_vars) {
      seen += f->vars.size();
      f = f->children[0];
    }
    return f;
  }

  // ---- Tseitin definitions ---------------------------------------------

  int MakeAnd(std::vector<int> lits) {
    std::vector<int> v;
    for (int l : lits) {
      if (IsTop(l)) continue;
      if (IsBottom(l)) return -top_;
      v.push_back(l);
    }
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    for (int l : v) {
      if (std::binary_search(v.begin(), v.end(), -l)) return -top_;
    }
    if (v.empty()) return top_;
    if (v.size() == 1) return v[0];
    auto it = and_cache_.find(v);
    if (it != and_cache_.end()) return it->second;
    int a = NewVar();
    sat::Clause back{a};
    for (int l : v) {
      Emit({-a, l}, -1);
      back.push_back(-l);
    }
    Emit(back, -1);
    and_cache_.emplace(v, a);
    return a;
  }

  int MakeOr(const std::vector<int>& lits) {
    std::vector<int> neg;
    neg.reserve(lits.size());
    for (int l : lits) neg.push_back(-l);
    return -MakeAnd(std::move(neg));
  }

  int MakeEquiv(int a, int b) {
    if (a == b) return top_;
    if (a == -b) return -top_;
    if (IsTop(a)) return b;
    if (IsBottom(a)) return -b;
    if (IsTop(b)) return a;
    if (IsBottom(b)) return -a;
    auto key = std::make_pair(std::min(a, b), std::max(a, b));
    auto it = equiv_cache_.find(key);
    if (it != equiv_cache_.end()) return it->second;
    int e = NewVar();
    Emit({-e, -a, b}, -1);
    Emit({-e, a, -b}, -1);
    Emit({e, a, b}, -1);
    Emit({e, -a, -b}, -1);
    equiv_cache_.emplace(key, e);
    return e;
  }

  // ---- terms ------------------------------------------------------------

  Cases Group(std::map<Element, std::vector<int>>& by_value) {
    Cases out;
    for (auto& [value, lits] : by_value) {
      int l = MakeOr(lits);
      if (!IsBottom(l)) out.emplace_back(value, l);
    }
    return out;
  }

  // Calls fn(tuple index, condition literal) per argument combination.
  template <typename Fn>
  void ForEachArgCombination(SymbolId sym, const std::vector<TermPtr>& args, Env& env, Fn&& fn) {
    std::vector<Cases> arg_cases;
    for (const auto& a : args) {
      arg_cases.push_back(CasesOf(*a, env));
      if (arg_cases.back().empty()) return;
    }
    std::vector<std::size_t> idx(args.size(), 0);
    Tuple tuple(args.size());
    std::vector<int> conj(args.size());
    while (true) {
      for (std::size_t i = 0; i < args.size(); ++i) {
        tuple[i] = arg_cases[i][idx[i]].first;
        conj[i] = arg_cases[i][idx[i]].second;
      }
      auto index = d_.TupleIndex(sym, tuple);
      if (!index) {
        throw Error(ErrorKind::kDomain, "'" + voc_.symbol(sym).name + TupleToString(tuple) +
                                            "' is outside the domain of '" +
                                            voc_.symbol(sym).name + "'");
      }
      fn(*index, MakeAnd(conj));
      bool done = true;
      for (std::size_t k = args.size(); k-- > 0;) {
        if (++idx[k] < arg_cases[k].size()) {
          done = false;
          break;
        }
        idx[k] = 0;
      }
      if (done) break;
    }
  }

  int ValueLit(SymbolId sym, std::size_t tuple, std::size_t value) {
    if (g_.fixed[sym]) {
      return s_.ValueTruth(sym, tuple, value) == Truth::kTrue ? top_ : -top_;
    }
    return g_.varmap.Var(sym, tuple, value);
  }

  Cases CasesOf(const Term& t, Env& env) {
    switch (t.kind) {
      case TermKind::kVariable:
        return {{*env.at(t.slot), top_}};
      case TermKind::kConstant:
        return {{t.value, top_}};
      case TermKind::kApply: {
        std::map<Element, std::vector<int>> by_value;
        const auto& results = d_.ResultDomain(t.symbol);
        ForEachArgCombination(t.symbol, t.args, env, [&](std::size_t tuple, int cond) {
          for (std::size_t v = 0; v < results.size(); ++v) {
            int l = MakeAnd({cond, ValueLit(t.symbol, tuple, v)});
            if (!IsBottom(l)) by_value[results[v]].push_back(l);
          }
        });
        return Group(by_value);
      }
      case TermKind::kArith: {
        Cases a = CasesOf(*t.args[0], env);
        Cases b = CasesOf(*t.args[1], env);
        std::map<Element, std::vector<int>> by_value;
        for (const auto& [x, lx] : a) {
          for (const auto& [y, ly] : b) {
            std::int64_t p = x.integer();
            std::int64_t q = y.integer();
            std::int64_t r = t.arith == ArithOp::kAdd ? p + q
                             : t.arith == ArithOp::kSub ? p - q
                                                        : p * q;
            by_value[Element::Integer(r)].push_back(MakeAnd({lx, ly}));
          }
        }
        return Group(by_value);
      }
      case TermKind::kAggregate:
        return AggregateCases(t, env);
      case TermKind::kName:
        break;
    }
    throw Error(ErrorKind::kType, "term was not typechecked");
  }

  Cases AggregateCases(const Term& t, Env& env) {
    std::vector<std::pair<int, std::int64_t>> items;
    ForEachBinding(d_, t.binders, env, [&](Env& e) {
      int c = Encode(*t.cond, e);
      if (IsBottom(c)) return true;
      std::int64_t w = 1;
      if (t.agg != AggOp::kCard) {
        Cases wc = CasesOf(*t.args[0], e);
        if (wc.size() != 1 || !IsTop(wc[0].second)) {
          throw Error(ErrorKind::kUnsupported, "unsupported aggregate: weight is not fixed");
        }
        w = wc[0].first.integer();
      }
      items.emplace_back(c, w);
      return true;
    });
    const auto& range = voc_.int_range();
    if (t.agg == AggOp::kMin || t.agg == AggOp::kMax) {
      bool min = t.agg == AggOp::kMin;
      std::int64_t empty = range ? (min ? range->hi : range->lo) : 0;
      std::set<std::int64_t> weights;
      for (const auto& it : items) weights.insert(it.second);
      std::map<Element, std::vector<int>> by_value;
      for (std::int64_t v : weights) {
        std::vector<int> hit;
        std::vector<int> conj;
        for (const auto& [c, w] : items) {
          if (w == v) hit.push_back(c);
          if (min ? w < v : w > v) conj.push_back(-c);
        }
        conj.push_back(MakeOr(hit));
        by_value[Element::Integer(v)].push_back(MakeAnd(conj));
      }
      std::vector<int> none;
      for (const auto& it : items) none.push_back(-it.first);
      by_value[Element::Integer(empty)].push_back(MakeAnd(none));
      Cases out = Group(by_value);
      CheckRange(out);
      return out;
    }
    // Running-sum chain.
    std::map<std::int64_t, int> layer{{0, top_}};
    for (const auto& [c, w] : items) {
      if (w == 0) continue;
      std::map<std::int64_t, std::vector<int>> next;
      for (const auto& [k, lk] : layer) {
        next[k].push_back(MakeAnd({lk, -c}));
        next[k + w].push_back(MakeAnd({lk, c}));
      }
      layer.clear();
      for (auto& [k, lits] : next) {
        int l = MakeOr(lits);
        if (!IsBottom(l)) layer.emplace(k, l);
      }
    }
    Cases out;
    for (const auto& [k, l] : layer) out.emplace_back(Element::Integer(k), l);
    CheckRange(out);
    return out;
  }

  void CheckRange(const Cases& cases) {
    const auto& range = voc_.int_range();
    if (!range) return;
    for (const auto& [v, l] : cases) {
      if (!range->Contains(v.integer())) {
        throw Error(ErrorKind::kRange, "range exceeded: aggregate can reach " + v.ToString() +
                                           ", outside int[" + std::to_string(range->lo) + ".." +
                                           std::to_string(range->hi) + "]");
      }
    }
  }

  // ---- formulas ---------------------------------------------------------

  int Encode(const Formula& f, Env& env) {
    switch (f.kind) {
      case FormulaKind::kTrue: return top_;
      case FormulaKind::kFalse: return -top_;
      case FormulaKind::kAtom: {
        std::vector<int> alts;
        ForEachArgCombination(f.symbol, f.args, env, [&](std::size_t tuple, int cond) {
          alts.push_back(MakeAnd({cond, ValueLit(f.symbol, tuple, 1)}));
        });
        return MakeOr(alts);
      }
      case FormulaKind::kCompare:
        return EncodeCompare(f.cmp, CasesOf(*f.args[0], env), CasesOf(*f.args[1], env));
      case FormulaKind::kNot:
        return -Encode(*f.children[0], env);
      case FormulaKind::kAnd:
      case FormulaKind::kOr: {
        bool conj = f.kind == FormulaKind::kAnd;
        std::vector<int> lits;
        for (const auto& c : f.children) {
          int l = Encode(*c, env);
          if (conj ? IsBottom(l) : IsTop(l)) return l;
          lits.push_back(l);
        }
        return conj ? MakeAnd(lits) : MakeOr(lits);
      }
      case FormulaKind::kImplies: {
        int a = Encode(*f.children[0], env);
        if (IsBottom(a)) return top_;
        return MakeOr({-a, Encode(*f.children[1], env)});
      }
      case FormulaKind::kEquiv:
        return MakeEquiv(Encode(*f.children[0], env), Encode(*f.children[1], env));
      case FormulaKind::kForall:
      case FormulaKind::kExists: {
        bool conj = f.kind == FormulaKind::kForall;
        std::vector<int> lits;
        int shortcut = 0;
        ForEachBinding(d_, f.vars, env, [&](Env& e) {
          int l = Encode(*f.children[0], e);
          if (conj ? IsBottom(l) : IsTop(l)) {
            shortcut = l;
            return false;
          }
          lits.push_back(l);
          return true;
        });
        if (shortcut) return shortcut;
        return conj ? MakeAnd(lits) : MakeOr(lits);
      }
    }
    throw Error(ErrorKind::kInternal, "bad formula kind");
  }

  int EncodeCompare(CompareOp op, const Cases& lhs, const Cases& rhs) {
    auto holding = [&](const Element& a, const Cases& other, bool a_left, bool want) {
      std::vector<int> out;
      for (const auto& [b, lb] : other) {
        bool h = a_left ? CompareHolds(op, a, b) : CompareHolds(op, b, a);
        if (h == want) out.push_back(lb);
      }
      return out;
    };
    if (lhs.size() == 1 && IsTop(lhs[0].second)) {
      return MakeOr(holding(lhs[0].first, rhs, true, true));
    }
    if (rhs.size() == 1 && IsTop(rhs[0].second)) {
      return MakeOr(holding(rhs[0].first, lhs, false, true));
    }
    bool left_small = lhs.size() <= rhs.size();
    const Cases& small = left_small ? lhs : rhs;
    const Cases& other = left_small ? rhs : lhs;
    int c = NewVar();
    for (const auto& [a, la] : small) {
      sat::Clause pos{-c, -la};
      for (int l : holding(a, other, left_small, true)) pos.push_back(l);
      Emit(pos, -1);
      sat::Clause neg{c, -la};
      for (int l : holding(a, other, left_small, false)) neg.push_back(l);
      Emit(neg, -1);
    }
    return c;
  }

  void AssertCompare(CompareOp op, const Cases& lhs, const Cases& rhs, int unit) {
    for (const auto& [a, la] : lhs) {
      sat::Clause c{-la};
      for (const auto& [b, lb] : rhs) {
        if (CompareHolds(op, a, b)) c.push_back(lb);
      }
      Emit(c, unit);
    }
    for (const auto& [b, lb] : rhs) {
      sat::Clause c{-lb};
      for (const auto& [a, la] : lhs) {
        if (CompareHolds(op, a, b)) c.push_back(la);
      }
      Emit(c, unit);
    }
  }

  void Assert(const Formula& f, Env& env, bool positive, int unit) {
    switch (f.kind) {
      case FormulaKind::kNot:
        Assert(*f.children[0], env, !positive, unit);
        return;
      case FormulaKind::kAnd:
      case FormulaKind::kOr:
        if ((f.kind == FormulaKind::kAnd) == positive) {
          for (const auto& c : f.children) Assert(*c, env, positive, unit);
          return;
        }
        break;
      case FormulaKind::kImplies:
        if (!positive) {
          Assert(*f.children[0], env, true, unit);
          Assert(*f.children[1], env, false, unit);
          return;
        }
        break;
      case FormulaKind::kForall:
      case FormulaKind::kExists:
        if ((f.kind == FormulaKind::kForall) == positive) {
          ForEachBinding(d_, f.vars, env, [&](Env& e) {
            Assert(*f.children[0], e, positive, unit);
            return true;
          });
          return;
        }
        break;
      case FormulaKind::kCompare:
        AssertCompare(positive ? f.cmp : Negate(f.cmp), CasesOf(*f.args[0], env),
                      CasesOf(*f.args[1], env), unit);
        return;
      default:
        break;
    }
    sat::Clause clause;
    if (!Collect(f, env, positive, clause)) Emit(clause, unit);
  }

  // Appends the literals of f to a clause; returns true once the clause is
  // satisfied, at which point the remaining disjuncts are skipped.
  bool Collect(const Formula& f, Env& env, bool positive, sat::Clause& out) {
    switch (f.kind) {
      case FormulaKind::kNot:
        return Collect(*f.children[0], env, !positive, out);
      case FormulaKind::kAnd:
      case FormulaKind::kOr:
        if ((f.kind == FormulaKind::kOr) == positive) {
          for (const auto& c : f.children) {
            if (Collect(*c, env, positive, out)) return true;
          }
          return false;
        }
        break;
      case FormulaKind::kImplies:
        if (positive) {
          return Collect(*f.children[0], env, false, out) ||
                 Collect(*f.children[1], env, true, out);
        }
        break;
      case FormulaKind::kForall:
      case FormulaKind::kExists:
        if ((f.kind == FormulaKind::kExists) == positive) {
          bool satisfied = false;
          ForEachBinding(d_, f.vars, env, [&](Env& e) {
            satisfied = Collect(*f.children[0], e, positive, out);
            return !satisfied;
          });
          return satisfied;
        }
        break;
      default:
        break;
    }
    int l = Encode(f, env);
    if (!positive) l = -l;
    if (IsTop(l)) return true;
    if (!IsBottom(l)) out.push_back(l);
    return false;
  }

  const Theory& theory_;
  const PartialStructure& s_;
  const Domains& d_;
  const Vocabulary& voc_;
  const GroundOptions& options_;
  GroundProblem g_;
  int top_ = 0;
  bool unit_used_ = false;
  std::map<std::vector<int>, int> and_cache_;
  std::map<std::pair<int, int>, int> equiv_cache_;
};

}  // namespace

GroundProblem Ground(const Theory& theory, const PartialStructure& s,
                     const GroundOptions& options) {
  return Grounder(theory, s, options).Run();
}

int EncodeAssignment(const GroundProblem& g, const Assignment& a) {
  const PartialStructure& base = *g.base;
  std::size_t tuple = base.TupleIndexOrThrow(a.term);
  SymbolId sym = a.term.symbol;
  bool function = g.vocabulary().symbol(sym).is_function();
  if (!function && !a.value.is_boolean()) {
    throw Error(ErrorKind::kDomain, "predicate atoms take true or false");
  }
  std::size_t value = function ? base.ResultIndexOrThrow(a.term, a.value) : 1;
  bool positive = function || a.value.boolean();
  int lit;
  if (g.fixed[sym]) {
    lit = base.ValueTruth(sym, tuple, value) == Truth::kTrue ? g.top : -g.top;
  } else {
    lit = g.varmap.Var(sym, tuple, value);
  }
  return positive ? lit : -lit;
}

std::vector<std::pair<Element, int>> TermCases(const GroundProblem& g, const DomainTerm& t) {
  const SymbolDecl& decl = g.vocabulary().symbol(t.symbol);
  if (!decl.is_function()) {
    throw Error(ErrorKind::kType, "'" + decl.name + "' is not a function");
  }
  std::vector<std::pair<Element, int>> out;
  for (const Element& v : g.domains->ResultDomain(t.symbol)) {
    int l = EncodeAssignment(g, {t, v});
    if (l != -g.top) out.emplace_back(v, l);
  }
  return out;
}

PartialStructure DecodeModel(const GroundProblem& g, const std::vector<std::uint8_t>& model) {
  PartialStructure out(*g.base);
  const Vocabulary& voc = g.vocabulary();
  for (SymbolId sym = 0; sym < voc.num_symbols(); ++sym) {
    if (g.fixed[sym]) continue;
    bool function = voc.symbol(sym).is_function();
    std::size_t n = function ? g.domains->ResultDomain(sym).size() : 1;
    for (std::size_t tuple = 0; tuple < g.domains->NumTuples(sym); ++tuple) {
      if (!function) {
        int var = g.varmap.Var(sym, tuple, 1);
        out.SetValueTruth(sym, tuple, 1, ToTruth(model.at(var - 1) != 0));
        continue;
      }
      int count = 0;
      for (std::size_t v = 0; v < n; ++v) {
        bool on = model.at(g.varmap.Var(sym, tuple, v) - 1) != 0;
        count += on;
        out.SetValueTruth(sym, tuple, v, ToTruth(on));
      }
      if (count != 1) {
        throw Error(ErrorKind::kInternal, "model violates exactly-one for '" +
                                              voc.symbol(sym).name + "'");
      }
    }
  }
  return out;
}

std::string ToDimacs(const GroundProblem& g) {
  std::ostringstream out;
  out << "p cnf " << g.num_vars << " " << g.clauses.size() << "\n";
  for (int v = g.varmap.first_var(); v < g.varmap.end_var(); ++v) {
    AtomRef a = *g.varmap.Atom(v);
    DomainTerm t{a.symbol, g.domains->TupleAt(a.symbol, a.tuple)};
    out << "c var " << v << " " << ToString(g.vocabulary(), t);
    if (g.vocabulary().symbol(a.symbol).is_function()) {
      out << "=" << g.domains->ResultDomain(a.symbol)[a.value].ToString();
    }
    out << "\n";
  }
  int last = -2;
  for (std::size_t i = 0; i < g.clauses.size(); ++i) {
    int p = g.provenance[i];
    if (p != last) {
      if (p < 0) {
        out << "c structural\n";
      } else {
        out << "c sentence " << g.units[p].id << "\n";
      }
      last = p;
    }
    for (int l : g.clauses[i]) out << l << " ";
    out << "0\n";
  }
  return out.str();
}

}  // namespace cfgkb

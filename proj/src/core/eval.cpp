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

#include "cfgkb/eval.hpp"

#include <algorithm>

namespace cfgkb {
namespace {

// Possible values of a term; `any` stands for "not determined".
struct Values {
  bool any = false;
  std::vector<Element> vals;
};

void SortUnique(std::vector<Element>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

void CheckRange(const Vocabulary& voc, std::int64_t v) {
  const auto& range = voc.int_range();
  if (range && !range->Contains(v)) {
    throw Error(ErrorKind::kRange, "range exceeded: " + std::to_string(v) + " outside int[" +
                                       std::to_string(range->lo) + ".." +
                                       std::to_string(range->hi) + "]");
  }
}

class Evaluator {
 public:
  explicit Evaluator(const PartialStructure& s) : s_(s), d_(s.domains()) {}

  Truth Eval(const Formula& f, Env& env) {
    switch (f.kind) {
      case FormulaKind::kTrue: return Truth::kTrue;
      case FormulaKind::kFalse: return Truth::kFalse;
      case FormulaKind::kAtom: return EvalAtom(f, env);
      case FormulaKind::kCompare: return EvalCompare(f, env);
      case FormulaKind::kNot: return Not(Eval(*f.children[0], env));
      case FormulaKind::kAnd: {
        Truth acc = Truth::kTrue;
        for (const auto& c : f.children) {
          acc = And(acc, Eval(*c, env));
          if (acc == Truth::kFalse) break;
        }
        return acc;
      }
      case FormulaKind::kOr: {
        Truth acc = Truth::kFalse;
        for (const auto& c : f.children) {
          acc = Or(acc, Eval(*c, env));
          if (acc == Truth::kTrue) break;
        }
        return acc;
      }
      case FormulaKind::kImplies:
        return Or(Not(Eval(*f.children[0], env)), Eval(*f.children[1], env));
      case FormulaKind::kEquiv: {
        Truth a = Eval(*f.children[0], env);
        Truth b = Eval(*f.children[1], env);
        if (a == Truth::kUnknown || b == Truth::kUnknown) return Truth::kUnknown;
        return ToTruth(a == b);
      }
      case FormulaKind::kForall:
      case FormulaKind::kExists: {
        bool forall = f.kind == FormulaKind::kForall;
        Truth acc = forall ? Truth::kTrue : Truth::kFalse;
        ForEachBinding(d_, f.vars, env, [&](Env& e) {
          Truth t = Eval(*f.children[0], e);
          acc = forall ? And(acc, t) : Or(acc, t);
          return acc != (forall ? Truth::kFalse : Truth::kTrue);
        });
        return acc;
      }
    }
    throw Error(ErrorKind::kInternal, "bad formula kind");
  }

  Values TermValues(const Term& t, Env& env) {
    switch (t.kind) {
      case TermKind::kVariable:
        if (t.slot < 0 || static_cast<std::size_t>(t.slot) >= env.size() || !env[t.slot]) {
          throw Error(ErrorKind::kDomain, "unbound variable '" + t.name + "'");
        }
        return {false, {*env[t.slot]}};
      case TermKind::kConstant:
        return {false, {t.value}};
      case TermKind::kApply: {
        std::vector<Element> out;
        ForEachTuple(t.symbol, t.args, env, [&](std::size_t tuple) {
          const auto& results = d_.ResultDomain(t.symbol);
          for (std::size_t v = 0; v < results.size(); ++v) {
            if (s_.ValueTruth(t.symbol, tuple, v) != Truth::kFalse) out.push_back(results[v]);
          }
        });
        SortUnique(out);
        return {false, out};
      }
      case TermKind::kArith: {
        Values a = TermValues(*t.args[0], env);
        Values b = TermValues(*t.args[1], env);
        if (a.any || b.any) return {true, {}};
        std::vector<Element> out;
        for (const Element& x : a.vals) {
          for (const Element& y : b.vals) {
            std::int64_t p = x.integer();
            std::int64_t q = y.integer();
            std::int64_t r = t.arith == ArithOp::kAdd ? p + q : t.arith == ArithOp::kSub ? p - q
                                                                                       : p * q;
            out.push_back(Element::Integer(r));
          }
        }
        SortUnique(out);
        return {false, out};
      }
      case TermKind::kAggregate:
        return EvalAggregate(t, env);
      case TermKind::kName:
        throw Error(ErrorKind::kType, "term '" + t.name + "' was not typechecked");
    }
    throw Error(ErrorKind::kInternal, "bad term kind");
  }

 private:
  // Enumerates argument tuples compatible with the argument values.
  template <typename Fn>
  void ForEachTuple(SymbolId sym, const std::vector<TermPtr>& args, Env& env, Fn&& fn) {
    const SymbolDecl& decl = s_.vocabulary().symbol(sym);
    std::vector<std::vector<Element>> choices;
    for (std::size_t i = 0; i < args.size(); ++i) {
      Values v = TermValues(*args[i], env);
      choices.push_back(v.any ? d_.of(decl.args[i]) : std::move(v.vals));
    }
    Tuple tuple(args.size());
    std::vector<std::size_t> idx(args.size(), 0);
    for (const auto& c : choices) {
      if (c.empty()) return;
    }
    while (true) {
      for (std::size_t i = 0; i < args.size(); ++i) tuple[i] = choices[i][idx[i]];
      auto index = d_.TupleIndex(sym, tuple);
      if (!index) {
        throw Error(ErrorKind::kDomain, "'" + decl.name + TupleToString(tuple) +
                                            "' is outside the domain of '" + decl.name + "'");
      }
      fn(*index);
      bool done = true;
      for (std::size_t k = args.size(); k-- > 0;) {
        if (++idx[k] < choices[k].size()) {
          done = false;
          break;
        }
        idx[k] = 0;
      }
      if (done) break;
    }
  }

  Truth EvalAtom(const Formula& f, Env& env) {
    bool seen_true = false;
    bool seen_false = false;
    bool seen_unknown = false;
    ForEachTuple(f.symbol, f.args, env, [&](std::size_t tuple) {
      Truth t = s_.ValueTruth(f.symbol, tuple, 1);
      seen_true |= t == Truth::kTrue;
      seen_false |= t == Truth::kFalse;
      seen_unknown |= t == Truth::kUnknown;
    });
    if (seen_unknown || (seen_true && seen_false)) return Truth::kUnknown;
    return ToTruth(seen_true);
  }

  Truth EvalCompare(const Formula& f, Env& env) {
    Values a = TermValues(*f.args[0], env);
    Values b = TermValues(*f.args[1], env);
    if (a.any || b.any) return Truth::kUnknown;
    bool some = false;
    bool all = true;
    for (const Element& x : a.vals) {
      for (const Element& y : b.vals) {
        bool h = CompareHolds(f.cmp, x, y);
        some |= h;
        all &= h;
      }
    }
    if (all) return Truth::kTrue;
    return some ? Truth::kUnknown : Truth::kFalse;
  }

  Values EvalAggregate(const Term& t, Env& env) {
    if (t.agg == AggOp::kProd) {
      throw Error(ErrorKind::kUnsupported, "unsupported aggregate: prod");
    }
    std::vector<std::int64_t> weights;
    bool unknown = false;
    ForEachBinding(d_, t.binders, env, [&](Env& e) {
      Truth c = Eval(*t.cond, e);
      if (c == Truth::kUnknown) {
        unknown = true;
        return false;
      }
      if (c == Truth::kFalse) return true;
      if (t.agg == AggOp::kCard) {
        weights.push_back(1);
        return true;
      }
      Values w = TermValues(*t.args[0], e);
      if (w.any || w.vals.size() != 1) {
        unknown = true;
        return false;
      }
      weights.push_back(w.vals[0].integer());
      return true;
    });
    if (unknown) return {true, {}};
    const Vocabulary& voc = s_.vocabulary();
    std::int64_t result = 0;
    switch (t.agg) {
      case AggOp::kSum:
      case AggOp::kCard:
        for (std::int64_t w : weights) result += w;
        break;
      case AggOp::kMin:
        result = weights.empty() ? EmptyMinMax(voc, true)
                                 : *std::min_element(weights.begin(), weights.end());
        break;
      case AggOp::kMax:
        result = weights.empty() ? EmptyMinMax(voc, false)
                                 : *std::max_element(weights.begin(), weights.end());
        break;
      case AggOp::kProd:
        break;
    }
    CheckRange(voc, result);
    return {false, {Element::Integer(result)}};
  }

  static std::int64_t EmptyMinMax(const Vocabulary& voc, bool min) {
    const auto& range = voc.int_range();
    if (!range) return 0;
    return min ? range->hi : range->lo;
  }

  const PartialStructure& s_;
  const Domains& d_;
};

FormulaPtr LiteralSentence(const PartialStructure& s, SymbolId sym, const Tuple& args,
                           const Element& value, bool positive) {
  const Vocabulary& voc = s.vocabulary();
  const SymbolDecl& decl = voc.symbol(sym);
  std::vector<TermPtr> terms;
  for (std::size_t i = 0; i < args.size(); ++i) {
    terms.push_back(ast::Constant(args[i], decl.args[i]));
  }
  if (!decl.is_function()) {
    auto atom = std::make_shared<Formula>(*ast::Atom(decl.name, std::move(terms)));
    atom->symbol = sym;
    bool truth = value.boolean() == positive;
    return truth ? FormulaPtr(atom) : ast::Not(atom);
  }
  auto apply = std::make_shared<Term>(*ast::Apply(decl.name, std::move(terms)));
  apply->symbol = sym;
  apply->type = decl.result;
  return ast::Compare(positive ? CompareOp::kEq : CompareOp::kNe, apply,
                      ast::Constant(value, decl.result));
}

}  // namespace

const std::vector<Element>& QuantifierDomain(const Domains& d, TypeId type) {
  const auto& dom = d.of(type);
  if (dom.empty() && d.vocabulary().IsIntegerType(type)) {
    throw Error(ErrorKind::kUnsupported, "quantifier over unbounded type '" +
                                             d.vocabulary().type(type).name + "'");
  }
  return dom;
}

Truth EvalFormula(const PartialStructure& s, const Formula& f, Env& env) {
  return Evaluator(s).Eval(f, env);
}

Truth EvalFormula(const PartialStructure& s, const Formula& f) {
  Env env;
  return EvalFormula(s, f, env);
}

std::optional<Element> EvalTerm(const PartialStructure& s, const Term& t, Env& env) {
  Values v = Evaluator(s).TermValues(t, env);
  if (v.any || v.vals.size() != 1) return std::nullopt;
  return v.vals[0];
}

std::optional<Element> EvalTerm(const PartialStructure& s, const Term& t) {
  Env env;
  return EvalTerm(s, t, env);
}

std::vector<Tuple> Query(const PartialStructure& s, const SetExpression& e) {
  std::vector<Tuple> out;
  Env env(e.num_slots);
  Evaluator ev(s);
  ForEachBinding(s.domains(), e.vars, env, [&](Env& b) {
    if (ev.Eval(*e.cond, b) == Truth::kTrue) {
      Tuple t;
      for (const VarDecl& v : e.vars) t.push_back(*b[v.slot]);
      out.push_back(std::move(t));
    }
    return true;
  });
  return out;
}

Theory AssociatedTheory(const PartialStructure& s) {
  Theory theory;
  theory.typed = true;
  for (const ValueLiteral& lit : DecidedLiterals(s)) {
    Sentence sentence;
    sentence.label = ToString(s.vocabulary(), lit);
    sentence.formula = LiteralSentence(s, lit.atom.term.symbol, lit.atom.term.args,
                                       lit.atom.value, lit.positive);
    theory.sentences.push_back(std::move(sentence));
  }
  return theory;
}

}  // namespace cfgkb

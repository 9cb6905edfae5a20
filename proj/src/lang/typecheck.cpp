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

#include <optional>
#include <string>
#include <vector>

#include "cfgkb/lang.hpp"

namespace cfgkb {
namespace {

class Checker {
 public:
  explicit Checker(const Domains& domains) : domains_(domains), voc_(domains.vocabulary()) {}

  const std::vector<Diagnostic>& errors() const { return errors_; }
  int num_slots() const { return next_slot_; }
  void ResetSlots() { next_slot_ = 0; }

  FormulaPtr CheckFormula(const Formula& f) {
    switch (f.kind) {
      case FormulaKind::kTrue:
      case FormulaKind::kFalse:
        return std::make_shared<Formula>(f);
      case FormulaKind::kAtom:
        return CheckAtom(f);
      case FormulaKind::kCompare:
        return CheckCompare(f);
      case FormulaKind::kNot:
      case FormulaKind::kAnd:
      case FormulaKind::kOr:
      case FormulaKind::kImplies:
      case FormulaKind::kEquiv: {
        auto out = std::make_shared<Formula>(f);
        for (auto& c : out->children) c = CheckFormula(*c);
        return out;
      }
      case FormulaKind::kForall:
      case FormulaKind::kExists: {
        auto out = std::make_shared<Formula>(f);
        std::size_t mark = scope_.size();
        out->vars = Bind(f.vars, *f.children[0], nullptr);
        out->children[0] = CheckFormula(*f.children[0]);
        scope_.resize(mark);
        return out;
      }
    }
    throw Error(ErrorKind::kInternal, "bad formula kind");
  }

  TermPtr CheckTerm(const Term& t, std::optional<TypeId> expected) {
    auto out = std::make_shared<Term>(t);
    switch (t.kind) {
      case TermKind::kName: {
        if (const VarDecl* v = Lookup(t.name)) return ast::Variable(*v);
        if (auto sym = voc_.FindSymbol(t.name)) {
          const SymbolDecl& decl = voc_.symbol(*sym);
          if (!decl.is_function()) {
            Report(t.loc, "predicate '" + t.name + "' used as a term");
            return Dummy(t);
          }
          if (decl.arity() != 0) {
            Report(t.loc, "'" + t.name + "' expects " + std::to_string(decl.arity()) +
                              " argument(s)");
            return Dummy(t);
          }
          out->kind = TermKind::kApply;
          out->symbol = *sym;
          out->type = decl.result;
          return out;
        }
        Element e = Element::Constant(t.name);
        if (expected && !voc_.IsIntegerType(*expected)) {
          if (domains_.Contains(*expected, e)) return ast::Constant(e, *expected, t.loc);
          Report(t.loc, "'" + t.name + "' is not an element of type '" +
                            voc_.type(*expected).name + "'");
          return Dummy(t);
        }
        std::vector<TypeId> types = domains_.TypesContaining(e);
        if (types.size() == 1) return ast::Constant(e, types[0], t.loc);
        Report(t.loc, types.empty() ? "unknown identifier '" + t.name + "'"
                                    : "ambiguous constant '" + t.name + "'");
        return Dummy(t);
      }
      case TermKind::kVariable:
        return out;
      case TermKind::kConstant:
        if (out->value.is_integer()) out->type = kIntType;
        return out;
      case TermKind::kApply: {
        auto sym = voc_.FindSymbol(t.name);
        if (!sym) {
          Report(t.loc, "unknown symbol '" + t.name + "'");
          return Dummy(t);
        }
        const SymbolDecl& decl = voc_.symbol(*sym);
        if (!decl.is_function()) {
          Report(t.loc, "predicate '" + t.name + "' used as a term");
          return Dummy(t);
        }
        out->symbol = *sym;
        out->type = decl.result;
        out->args = CheckArgs(decl, t.args, t.loc);
        return out;
      }
      case TermKind::kArith:
        for (auto& a : out->args) a = RequireInteger(*a, "arithmetic operand");
        out->type = kIntType;
        return out;
      case TermKind::kAggregate: {
        std::size_t mark = scope_.size();
        out->binders = Bind(t.binders, *t.cond, t.args.empty() ? nullptr : t.args[0].get());
        out->cond = CheckFormula(*t.cond);
        if (!t.args.empty()) out->args[0] = RequireInteger(*t.args[0], "aggregate weight");
        scope_.resize(mark);
        out->type = kIntType;
        return out;
      }
    }
    throw Error(ErrorKind::kInternal, "bad term kind");
  }

 private:
  void Report(SourceLoc loc, std::string msg) { errors_.push_back({loc, std::move(msg)}); }

  TermPtr Dummy(const Term& t) {
    auto out = std::make_shared<Term>(t);
    out->kind = TermKind::kConstant;
    out->value = Element::Integer(0);
    out->type = kIntType;
    return out;
  }

  const VarDecl* Lookup(const std::string& name) const {
    for (auto it = scope_.rbegin(); it != scope_.rend(); ++it) {
      if (it->name == name) return &*it;
    }
    return nullptr;
  }

  bool Compatible(TypeId have, TypeId want) const {
    return have == want || (voc_.IsIntegerType(have) && voc_.IsIntegerType(want));
  }

  TermPtr RequireInteger(const Term& t, const char* what) {
    TermPtr out = CheckTerm(t, kIntType);
    if (!voc_.IsIntegerType(out->type)) {
      Report(t.loc, std::string(what) + " must be an integer");
    }
    return out;
  }

  std::vector<TermPtr> CheckArgs(const SymbolDecl& decl, const std::vector<TermPtr>& args,
                                 SourceLoc loc) {
    std::vector<TermPtr> out;
    if (args.size() != decl.arity()) {
      Report(loc, "'" + decl.name + "' expects " + std::to_string(decl.arity()) +
                      " argument(s), got " + std::to_string(args.size()));
      return out;
    }
    for (std::size_t i = 0; i < args.size(); ++i) {
      TermPtr a = CheckTerm(*args[i], decl.args[i]);
      if (!Compatible(a->type, decl.args[i])) {
        Report(args[i]->loc, "argument " + std::to_string(i + 1) + " of '" + decl.name +
                                 "' must be of type '" + voc_.type(decl.args[i]).name +
                                 "', not '" + voc_.type(a->type).name + "'");
      }
      out.push_back(std::move(a));
    }
    return out;
  }

  FormulaPtr CheckAtom(const Formula& f) {
    auto out = std::make_shared<Formula>(f);
    if (const VarDecl* v = f.args.empty() ? Lookup(f.name) : nullptr) {
      Report(f.loc, "variable '" + v->name + "' used as a formula");
      return out;
    }
    auto sym = voc_.FindSymbol(f.name);
    if (!sym) {
      Report(f.loc, "unknown symbol '" + f.name + "'");
      return out;
    }
    const SymbolDecl& decl = voc_.symbol(*sym);
    if (decl.is_function()) {
      Report(f.loc, "function '" + f.name + "' used as a formula");
      return out;
    }
    out->symbol = *sym;
    out->args = CheckArgs(decl, f.args, f.loc);
    return out;
  }

  // Bare identifiers that are neither variables nor symbols are constants
  // whose type comes from the other side of the comparison.
  bool IsBareConstant(const Term& t) const {
    return t.kind == TermKind::kName && !Lookup(t.name) && !voc_.FindSymbol(t.name);
  }

  FormulaPtr CheckCompare(const Formula& f) {
    auto out = std::make_shared<Formula>(f);
    const Term& l = *f.args[0];
    const Term& r = *f.args[1];
    if (IsBareConstant(l) && !IsBareConstant(r)) {
      out->args[1] = CheckTerm(r, std::nullopt);
      out->args[0] = CheckTerm(l, out->args[1]->type);
    } else {
      out->args[0] = CheckTerm(l, std::nullopt);
      out->args[1] = CheckTerm(r, out->args[0]->type);
    }
    TypeId a = out->args[0]->type;
    TypeId b = out->args[1]->type;
    bool ints = voc_.IsIntegerType(a) && voc_.IsIntegerType(b);
    if (f.cmp == CompareOp::kEq || f.cmp == CompareOp::kNe) {
      if (!ints && a != b) {
        Report(f.loc, "cannot compare '" + voc_.type(a).name + "' with '" + voc_.type(b).name +
                          "'");
      }
    } else if (!ints) {
      Report(f.loc, std::string("'") + CompareOpName(f.cmp) + "' needs integer operands");
    }
    return out;
  }

  // Infers the type of an untyped variable from its first use as a symbol
  // argument.
  std::optional<TypeId> InferIn(const Term& t, const std::string& name) const {
    if (t.kind == TermKind::kApply) {
      if (auto r = InferArgs(t.name, t.args, name)) return r;
    }
    for (const auto& b : t.binders) {
      if (b.name == name) return std::nullopt;
    }
    for (const auto& a : t.args) {
      if (auto r = InferIn(*a, name)) return r;
    }
    if (t.cond) return InferIn(*t.cond, name);
    return std::nullopt;
  }

  std::optional<TypeId> InferIn(const Formula& f, const std::string& name) const {
    for (const auto& v : f.vars) {
      if (v.name == name) return std::nullopt;
    }
    if (f.kind == FormulaKind::kAtom) {
      if (auto r = InferArgs(f.name, f.args, name)) return r;
    }
    if (f.kind == FormulaKind::kCompare) {
      for (int i = 0; i < 2; ++i) {
        const Term& self = *f.args[i];
        const Term& other = *f.args[1 - i];
        if (self.kind == TermKind::kName && self.name == name && other.kind != TermKind::kName) {
          if (other.kind == TermKind::kApply) {
            if (auto sym = voc_.FindSymbol(other.name); sym && voc_.symbol(*sym).is_function()) {
              return voc_.symbol(*sym).result;
            }
          }
          if (other.kind != TermKind::kVariable) return kIntType;
        }
      }
    }
    for (const auto& a : f.args) {
      if (auto r = InferIn(*a, name)) return r;
    }
    for (const auto& c : f.children) {
      if (auto r = InferIn(*c, name)) return r;
    }
    return std::nullopt;
  }

  std::optional<TypeId> InferArgs(const std::string& symbol, const std::vector<TermPtr>& args,
                                  const std::string& name) const {
    auto sym = voc_.FindSymbol(symbol);
    if (!sym || voc_.symbol(*sym).arity() != args.size()) return std::nullopt;
    for (std::size_t i = 0; i < args.size(); ++i) {
      if (args[i]->kind == TermKind::kName && args[i]->name == name) {
        return voc_.symbol(*sym).args[i];
      }
    }
    return std::nullopt;
  }

  std::vector<VarDecl> Bind(const std::vector<VarDecl>& vars, const Formula& body,
                            const Term* weight) {
    std::vector<VarDecl> out;
    for (const VarDecl& raw : vars) {
      VarDecl v = raw;
      if (!v.type_name.empty()) {
        auto type = voc_.FindType(v.type_name);
        if (!type) {
          Report(v.loc, "unknown type '" + v.type_name + "'");
          v.type = kIntType;
        } else {
          v.type = *type;
        }
      } else {
        std::optional<TypeId> type = InferIn(body, v.name);
        if (!type && weight) type = InferIn(*weight, v.name);
        if (!type) {
          Report(v.loc, "cannot infer the type of '" + v.name + "'; write " + v.name + "[type]");
          v.type = kIntType;
        } else {
          v.type = *type;
        }
        v.type_name = voc_.type(v.type).name;
      }
      v.slot = next_slot_++;
      out.push_back(v);
    }
    // Bind after inference so that inference sees the raw body.
    for (const VarDecl& v : out) scope_.push_back(v);
    return out;
  }

  const Domains& domains_;
  const Vocabulary& voc_;
  std::vector<VarDecl> scope_;
  std::vector<Diagnostic> errors_;
  int next_slot_ = 0;
};

}  // namespace

Problem Typecheck(const Problem& problem) {
  Checker checker(problem.structure.domains());
  Problem out{problem.vocabulary, Theory{}, problem.structure};
  for (const Sentence& s : problem.theory.sentences) {
    checker.ResetSlots();
    Sentence typed = s;
    typed.formula = checker.CheckFormula(*s.formula);
    typed.num_slots = checker.num_slots();
    out.theory.sentences.push_back(std::move(typed));
  }
  if (!checker.errors().empty()) throw Error(ErrorKind::kType, checker.errors());
  out.theory.typed = true;
  return out;
}

FormulaPtr TypecheckFormula(const Domains& domains, const FormulaPtr& raw, int* num_slots) {
  Checker checker(domains);
  FormulaPtr out = checker.CheckFormula(*raw);
  if (!checker.errors().empty()) throw Error(ErrorKind::kType, checker.errors());
  if (num_slots) *num_slots = checker.num_slots();
  return out;
}

TermPtr TypecheckTerm(const Domains& domains, const TermPtr& raw, int* num_slots) {
  Checker checker(domains);
  TermPtr out = checker.CheckTerm(*raw, std::nullopt);
  if (!checker.errors().empty()) throw Error(ErrorKind::kType, checker.errors());
  if (num_slots) *num_slots = checker.num_slots();
  return out;
}

}  // namespace cfgkb

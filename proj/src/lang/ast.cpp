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

#include "cfgkb/ast.hpp"

namespace cfgkb {

const char* AggOpName(AggOp op) {
  switch (op) {
    case AggOp::kSum: return "sum";
    case AggOp::kCard: return "card";
    case AggOp::kMin: return "min";
    case AggOp::kMax: return "max";
    case AggOp::kProd: return "prod";
  }
  return "?";
}

const char* CompareOpName(CompareOp op) {
  switch (op) {
    case CompareOp::kEq: return "=";
    case CompareOp::kNe: return "~=";
    case CompareOp::kLt: return "<";
    case CompareOp::kLe: return "=<";
    case CompareOp::kGt: return ">";
    case CompareOp::kGe: return ">=";
  }
  return "?";
}

bool CompareHolds(CompareOp op, const Element& a, const Element& b) {
  switch (op) {
    case CompareOp::kEq: return a == b;
    case CompareOp::kNe: return a != b;
    default: break;
  }
  std::int64_t x = a.integer();
  std::int64_t y = b.integer();
  switch (op) {
    case CompareOp::kLt: return x < y;
    case CompareOp::kLe: return x <= y;
    case CompareOp::kGt: return x > y;
    case CompareOp::kGe: return x >= y;
    default: return false;
  }
}

const Sentence* Theory::Find(const std::string& label) const {
  for (const Sentence& s : sentences) {
    if (s.label == label) return &s;
  }
  return nullptr;
}

namespace ast {

TermPtr Name(std::string name, SourceLoc loc) {
  auto t = std::make_shared<Term>();
  t->kind = TermKind::kName;
  t->name = std::move(name);
  t->loc = loc;
  return t;
}

TermPtr Variable(const VarDecl& decl) {
  auto t = std::make_shared<Term>();
  t->kind = TermKind::kVariable;
  t->name = decl.name;
  t->slot = decl.slot;
  t->type = decl.type;
  t->loc = decl.loc;
  return t;
}

TermPtr Constant(Element value, TypeId type, SourceLoc loc) {
  auto t = std::make_shared<Term>();
  t->kind = TermKind::kConstant;
  t->name = value.ToString();
  t->value = std::move(value);
  t->type = type;
  t->loc = loc;
  return t;
}

TermPtr Apply(std::string name, std::vector<TermPtr> args, SourceLoc loc) {
  auto t = std::make_shared<Term>();
  t->kind = TermKind::kApply;
  t->name = std::move(name);
  t->args = std::move(args);
  t->loc = loc;
  return t;
}

TermPtr Arith(ArithOp op, TermPtr lhs, TermPtr rhs, SourceLoc loc) {
  auto t = std::make_shared<Term>();
  t->kind = TermKind::kArith;
  t->arith = op;
  t->args = {std::move(lhs), std::move(rhs)};
  t->loc = loc;
  return t;
}

TermPtr Aggregate(AggOp op, std::vector<VarDecl> binders, TermPtr weight, FormulaPtr cond,
                  SourceLoc loc) {
  auto t = std::make_shared<Term>();
  t->kind = TermKind::kAggregate;
  t->agg = op;
  t->binders = std::move(binders);
  if (weight) t->args.push_back(std::move(weight));
  t->cond = std::move(cond);
  t->loc = loc;
  return t;
}

namespace {

FormulaPtr Make(FormulaKind kind, SourceLoc loc) {
  auto f = std::make_shared<Formula>();
  f->kind = kind;
  f->loc = loc;
  return f;
}

FormulaPtr Nary(FormulaKind kind, std::vector<FormulaPtr> fs, SourceLoc loc) {
  auto f = std::make_shared<Formula>();
  f->kind = kind;
  f->loc = loc;
  for (auto& c : fs) {
    if (c->kind == kind) {
      f->children.insert(f->children.end(), c->children.begin(), c->children.end());
    } else {
      f->children.push_back(std::move(c));
    }
  }
  return f;
}

}  // namespace

FormulaPtr True(SourceLoc loc) { return Make(FormulaKind::kTrue, loc); }
FormulaPtr False(SourceLoc loc) { return Make(FormulaKind::kFalse, loc); }

FormulaPtr Atom(std::string name, std::vector<TermPtr> args, SourceLoc loc) {
  auto f = std::make_shared<Formula>();
  f->kind = FormulaKind::kAtom;
  f->name = std::move(name);
  f->args = std::move(args);
  f->loc = loc;
  return f;
}

FormulaPtr Compare(CompareOp op, TermPtr lhs, TermPtr rhs, SourceLoc loc) {
  auto f = std::make_shared<Formula>();
  f->kind = FormulaKind::kCompare;
  f->cmp = op;
  f->args = {std::move(lhs), std::move(rhs)};
  f->loc = loc;
  return f;
}

FormulaPtr Not(FormulaPtr g, SourceLoc loc) {
  auto f = std::make_shared<Formula>();
  f->kind = FormulaKind::kNot;
  f->children = {std::move(g)};
  f->loc = loc;
  return f;
}

FormulaPtr And(std::vector<FormulaPtr> fs, SourceLoc loc) {
  return Nary(FormulaKind::kAnd, std::move(fs), loc);
}
FormulaPtr Or(std::vector<FormulaPtr> fs, SourceLoc loc) {
  return Nary(FormulaKind::kOr, std::move(fs), loc);
}

FormulaPtr Implies(FormulaPtr a, FormulaPtr b, SourceLoc loc) {
  auto f = std::make_shared<Formula>();
  f->kind = FormulaKind::kImplies;
  f->children = {std::move(a), std::move(b)};
  f->loc = loc;
  return f;
}

FormulaPtr Equiv(FormulaPtr a, FormulaPtr b, SourceLoc loc) {
  auto f = std::make_shared<Formula>();
  f->kind = FormulaKind::kEquiv;
  f->children = {std::move(a), std::move(b)};
  f->loc = loc;
  return f;
}

FormulaPtr Forall(std::vector<VarDecl> vars, FormulaPtr body, SourceLoc loc) {
  auto f = std::make_shared<Formula>();
  f->kind = FormulaKind::kForall;
  f->vars = std::move(vars);
  f->children = {std::move(body)};
  f->loc = loc;
  return f;
}

FormulaPtr Exists(std::vector<VarDecl> vars, FormulaPtr body, SourceLoc loc) {
  auto f = std::make_shared<Formula>();
  f->kind = FormulaKind::kExists;
  f->vars = std::move(vars);
  f->children = {std::move(body)};
  f->loc = loc;
  return f;
}

namespace {

using Env = std::vector<std::optional<Element>>;

TermPtr SubstituteTerm(const TermPtr& t, const Env& env) {
  if (t->kind == TermKind::kVariable) {
    if (t->slot >= 0 && static_cast<std::size_t>(t->slot) < env.size() && env[t->slot]) {
      return Constant(*env[t->slot], t->type, t->loc);
    }
    return t;
  }
  if (t->args.empty() && !t->cond) return t;
  auto copy = std::make_shared<Term>(*t);
  for (auto& a : copy->args) a = SubstituteTerm(a, env);
  if (copy->cond) copy->cond = Substitute(copy->cond, env);
  return copy;
}

}  // namespace

FormulaPtr Substitute(const FormulaPtr& f, const Env& env) {
  if (f->args.empty() && f->children.empty()) return f;
  auto copy = std::make_shared<Formula>(*f);
  for (auto& a : copy->args) a = SubstituteTerm(a, env);
  for (auto& c : copy->children) c = Substitute(c, env);
  return copy;
}

}  // namespace ast

namespace {

std::string DeclsToString(const std::vector<VarDecl>& vars) {
  std::string out;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (i > 0) out += " ";
    out += vars[i].name;
    if (!vars[i].type_name.empty()) out += "[" + vars[i].type_name + "]";
  }
  return out;
}

int Precedence(const Formula& f) {
  switch (f.kind) {
    case FormulaKind::kEquiv: return 1;
    case FormulaKind::kImplies: return 2;
    case FormulaKind::kOr: return 3;
    case FormulaKind::kAnd: return 4;
    case FormulaKind::kForall:
    case FormulaKind::kExists: return 0;
    default: return 10;
  }
}

std::string Wrapped(const Formula& f, int min_prec) {
  std::string s = ToString(f);
  return Precedence(f) < min_prec ? "(" + s + ")" : s;
}

std::string WrappedTerm(const Term& t) {
  std::string s = ToString(t);
  return t.kind == TermKind::kArith ? "(" + s + ")" : s;
}

}  // namespace

std::string ToString(const Term& t) {
  switch (t.kind) {
    case TermKind::kName:
    case TermKind::kVariable:
      return t.name;
    case TermKind::kConstant:
      return t.value.ToString();
    case TermKind::kApply: {
      std::string out = t.name;
      if (!t.args.empty()) {
        out += "(";
        for (std::size_t i = 0; i < t.args.size(); ++i) {
          if (i > 0) out += ",";
          out += ToString(*t.args[i]);
        }
        out += ")";
      }
      return out;
    }
    case TermKind::kArith: {
      const char* op = t.arith == ArithOp::kAdd ? " + " : t.arith == ArithOp::kSub ? " - " : " * ";
      return WrappedTerm(*t.args[0]) + op + WrappedTerm(*t.args[1]);
    }
    case TermKind::kAggregate: {
      std::string out = std::string(AggOpName(t.agg)) + "{";
      if (t.agg == AggOp::kCard) {
        out += DeclsToString(t.binders);
      } else {
        out += "(";
        for (const VarDecl& v : t.binders) {
          out += v.name;
          if (!v.type_name.empty()) out += "[" + v.type_name + "]";
          out += ", ";
        }
        out += ToString(*t.args[0]) + ")";
      }
      return out + " | " + ToString(*t.cond) + "}";
    }
  }
  return {};
}

std::string ToString(const Formula& f) {
  switch (f.kind) {
    case FormulaKind::kTrue: return "true";
    case FormulaKind::kFalse: return "false";
    case FormulaKind::kAtom: {
      std::string out = f.name;
      if (!f.args.empty()) {
        out += "(";
        for (std::size_t i = 0; i < f.args.size(); ++i) {
          if (i > 0) out += ",";
          out += ToString(*f.args[i]);
        }
        out += ")";
      }
      return out;
    }
    case FormulaKind::kCompare:
      return ToString(*f.args[0]) + " " + CompareOpName(f.cmp) + " " + ToString(*f.args[1]);
    case FormulaKind::kNot:
      return "~" + Wrapped(*f.children[0], 10);
    case FormulaKind::kAnd:
    case FormulaKind::kOr: {
      const char* op = f.kind == FormulaKind::kAnd ? " & " : " | ";
      int prec = Precedence(f);
      std::string out;
      for (std::size_t i = 0; i < f.children.size(); ++i) {
        if (i > 0) out += op;
        out += Wrapped(*f.children[i], prec + 1);
      }
      return out;
    }
    case FormulaKind::kImplies:
      return Wrapped(*f.children[0], 3) + " => " + Wrapped(*f.children[1], 2);
    case FormulaKind::kEquiv:
      return Wrapped(*f.children[0], 2) + " <=> " + Wrapped(*f.children[1], 2);
    case FormulaKind::kForall:
    case FormulaKind::kExists:
      return std::string(f.kind == FormulaKind::kForall ? "!" : "?") + DeclsToString(f.vars) +
             ": " + ToString(*f.children[0]);
  }
  return {};
}

}  // namespace cfgkb

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

#ifndef CFGKB_AST_HPP_
#define CFGKB_AST_HPP_

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cfgkb/element.hpp"
#include "cfgkb/error.hpp"
#include "cfgkb/vocabulary.hpp"

namespace cfgkb {

struct Term;
struct Formula;
using TermPtr = std::shared_ptr<const Term>;
using FormulaPtr = std::shared_ptr<const Formula>;

// A variable introduced by a quantifier, aggregate or set expression. The
// typechecker fills in `type` and assigns each binder of a sentence a
// distinct environment slot.
struct VarDecl {
  std::string name;
  std::string type_name;  // empty when the source leaves the type implicit
  TypeId type = kIntType;
  int slot = -1;
  SourceLoc loc;
};

enum class TermKind {
  kName,       // identifier not yet resolved (parser output only)
  kVariable,
  kConstant,
  kApply,      // F(t1..tn), including 0-ary F
  kArith,
  kAggregate,
};

enum class ArithOp { kAdd, kSub, kMul };
enum class AggOp { kSum, kCard, kMin, kMax, kProd };

const char* AggOpName(AggOp op);

struct Term {
  TermKind kind = TermKind::kName;
  SourceLoc loc;
  std::string name;          // identifier, variable or symbol name
  Element value;             // kConstant
  SymbolId symbol = 0;       // kApply
  int slot = -1;             // kVariable
  ArithOp arith = ArithOp::kAdd;
  AggOp agg = AggOp::kSum;
  std::vector<TermPtr> args; // kApply arguments; kArith operands; kAggregate weight (absent for card)
  std::vector<VarDecl> binders;
  FormulaPtr cond;           // kAggregate
  TypeId type = kIntType;    // set by the typechecker
};

enum class FormulaKind {
  kTrue,
  kFalse,
  kAtom,     // P(t1..tn)
  kCompare,  // args[0] op args[1]
  kNot,
  kAnd,
  kOr,
  kImplies,  // children[0] => children[1]
  kEquiv,
  kForall,
  kExists,
};

enum class CompareOp { kEq, kNe, kLt, kLe, kGt, kGe };

const char* CompareOpName(CompareOp op);
bool CompareHolds(CompareOp op, const Element& a, const Element& b);

struct Formula {
  FormulaKind kind = FormulaKind::kTrue;
  SourceLoc loc;
  std::string name;        // kAtom symbol name
  SymbolId symbol = 0;     // kAtom
  CompareOp cmp = CompareOp::kEq;
  std::vector<TermPtr> args;
  std::vector<FormulaPtr> children;
  std::vector<VarDecl> vars;  // kForall / kExists
};

struct Sentence {
  std::string label;
  FormulaPtr formula;
  SourceLoc loc;
  int num_slots = 0;
};

struct Theory {
  std::vector<Sentence> sentences;
  bool typed = false;

  const Sentence* Find(const std::string& label) const;
};

// {x1..xn | phi}
struct SetExpression {
  std::vector<VarDecl> vars;
  FormulaPtr cond;
  int num_slots = 0;
};

namespace ast {

TermPtr Name(std::string name, SourceLoc loc = {});
TermPtr Variable(const VarDecl& decl);
TermPtr Constant(Element value, TypeId type, SourceLoc loc = {});
TermPtr Apply(std::string name, std::vector<TermPtr> args, SourceLoc loc = {});
TermPtr Arith(ArithOp op, TermPtr lhs, TermPtr rhs, SourceLoc loc = {});
TermPtr Aggregate(AggOp op, std::vector<VarDecl> binders, TermPtr weight, FormulaPtr cond,
                  SourceLoc loc = {});

FormulaPtr True(SourceLoc loc = {});
FormulaPtr False(SourceLoc loc = {});
FormulaPtr Atom(std::string name, std::vector<TermPtr> args, SourceLoc loc = {});
FormulaPtr Compare(CompareOp op, TermPtr lhs, TermPtr rhs, SourceLoc loc = {});
FormulaPtr Not(FormulaPtr f, SourceLoc loc = {});
FormulaPtr And(std::vector<FormulaPtr> fs, SourceLoc loc = {});
FormulaPtr Or(std::vector<FormulaPtr> fs, SourceLoc loc = {});
FormulaPtr Implies(FormulaPtr a, FormulaPtr b, SourceLoc loc = {});
FormulaPtr Equiv(FormulaPtr a, FormulaPtr b, SourceLoc loc = {});
FormulaPtr Forall(std::vector<VarDecl> vars, FormulaPtr body, SourceLoc loc = {});
FormulaPtr Exists(std::vector<VarDecl> vars, FormulaPtr body, SourceLoc loc = {});

// Replaces variables whose slot is bound in `env` by constants.
FormulaPtr Substitute(const FormulaPtr& f, const std::vector<std::optional<Element>>& env);

}  // namespace ast

std::string ToString(const Term& t);
std::string ToString(const Formula& f);

}  // namespace cfgkb

#endif  // CFGKB_AST_HPP_

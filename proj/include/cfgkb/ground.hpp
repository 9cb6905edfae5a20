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

#ifndef CFGKB_GROUND_HPP_
#define CFGKB_GROUND_HPP_

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cfgkb/ast.hpp"
#include "cfgkb/sat.hpp"
#include "cfgkb/structure.hpp"

namespace cfgkb {

// A named group of clauses that explanations can include or leave out.
struct Unit {
  enum class Kind { kSentence, kData };
  Kind kind = Kind::kSentence;
  std::string id;      // "prereq[Office,Windows]", "data:PreReq(Office,Windows)"
  std::string label;   // sentence label, or "data:<symbol>"
  int sentence = -1;   // index into the theory
  int instance = 0;    // position among the sentence's ground instances
  FormulaPtr formula;  // ground instance (sentences) or literal sentence (data)
  ValueLiteral literal;  // data units
};

struct AtomRef {
  SymbolId symbol = 0;
  std::size_t tuple = 0;
  std::size_t value = 0;  // result index; 1 for predicate atoms
};

// Propositional variables of the value atoms of symbols that are not fixed
// by the grounding structure.
class VarMap {
 public:
  VarMap() = default;
  VarMap(const Domains& d, const std::vector<bool>& fixed, int first_var);

  bool HasSymbol(SymbolId sym) const { return base_[sym] != 0; }
  // Variable of the atom; predicates only have value index 1.
  int Var(SymbolId sym, std::size_t tuple, std::size_t value) const;
  std::optional<AtomRef> Atom(int var) const;
  int first_var() const { return first_; }
  int end_var() const { return end_; }

 private:
  std::vector<int> base_;
  std::vector<std::size_t> width_;
  std::vector<bool> predicate_;
  std::vector<SymbolId> order_;
  int first_ = 1;
  int end_ = 1;
};

struct Objective {
  DomainTerm term;
  std::vector<std::pair<Element, int>> cases;  // exactly one literal holds
};

struct GroundOptions {
  // kTotalSymbols fixes every symbol that the structure fully interprets;
  // kWeightsOnly fixes only those needed for aggregate weights, so that the
  // remaining data become explainable unit clauses.
  enum class Fixing { kTotalSymbols, kWeightsOnly };
  Fixing fixing = Fixing::kTotalSymbols;
  std::vector<DomainTerm> observables;
};

struct GroundProblem {
  std::shared_ptr<const Domains> domains;
  std::shared_ptr<const PartialStructure> base;
  std::vector<bool> fixed;  // per symbol: inlined as data
  VarMap varmap;
  int top = 0;  // variable forced true
  int num_vars = 0;
  std::vector<sat::Clause> clauses;
  std::vector<int> provenance;  // unit index per clause, -1 for structural clauses
  std::vector<Unit> units;
  std::vector<Objective> objectives;

  const Vocabulary& vocabulary() const { return domains->vocabulary(); }
  int FindUnit(const std::string& id) const;
};

GroundProblem Ground(const Theory& theory, const PartialStructure& s,
                     const GroundOptions& options = {});

// Literal for (term = value); the constant top literal or its negation for
// terms of fixed symbols.
int EncodeAssignment(const GroundProblem& g, const Assignment& a);

// Exactly-one case split of an integer function term.
std::vector<std::pair<Element, int>> TermCases(const GroundProblem& g, const DomainTerm& t);

PartialStructure DecodeModel(const GroundProblem& g, const std::vector<std::uint8_t>& model);

std::string ToDimacs(const GroundProblem& g);

}  // namespace cfgkb

#endif  // CFGKB_GROUND_HPP_

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

#ifndef CFGKB_STRUCTURE_HPP_
#define CFGKB_STRUCTURE_HPP_

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "cfgkb/element.hpp"
#include "cfgkb/vocabulary.hpp"

namespace cfgkb {

// The domain structure S_D: a finite domain per type and the table layout of
// every symbol over those domains. Immutable and shared between structures.
class Domains {
 public:
  // `per_type[t]` lists the domain of constant type t; integer types with a
  // declared range are filled in from the range and may be left empty.
  Domains(std::shared_ptr<const Vocabulary> voc, std::vector<std::vector<Element>> per_type);

  const Vocabulary& vocabulary() const { return *voc_; }
  const std::shared_ptr<const Vocabulary>& vocabulary_ptr() const { return voc_; }

  const std::vector<Element>& of(TypeId type) const { return domains_.at(type); }
  std::optional<std::size_t> IndexOf(TypeId type, const Element& e) const;
  bool Contains(TypeId type, const Element& e) const { return IndexOf(type, e).has_value(); }
  // Constant types whose domain holds `e`.
  std::vector<TypeId> TypesContaining(const Element& e) const;

  // Result values of a symbol: {false, true} for predicates.
  const std::vector<Element>& ResultDomain(SymbolId sym) const;
  std::size_t NumTuples(SymbolId sym) const { return layouts_.at(sym).num_tuples; }
  Tuple TupleAt(SymbolId sym, std::size_t index) const;
  std::optional<std::size_t> TupleIndex(SymbolId sym, const Tuple& args) const;
  std::optional<std::size_t> ResultIndex(SymbolId sym, const Element& value) const;

  friend bool operator==(const Domains& a, const Domains& b);

 private:
  struct Layout {
    std::vector<std::size_t> radix;
    std::size_t num_tuples = 1;
  };

  std::shared_ptr<const Vocabulary> voc_;
  std::vector<std::vector<Element>> domains_;
  std::vector<std::unordered_map<Element, std::size_t, ElementHash>> index_;
  std::vector<Layout> layouts_;
  std::vector<Element> booleans_;
};

// A domain atom P(d) or domain term F(d).
struct DomainTerm {
  SymbolId symbol = 0;
  Tuple args;

  friend bool operator==(const DomainTerm& a, const DomainTerm& b) {
    return a.symbol == b.symbol && a.args == b.args;
  }
  friend bool operator<(const DomainTerm& a, const DomainTerm& b) {
    if (a.symbol != b.symbol) return a.symbol < b.symbol;
    return a.args < b.args;
  }
};

// t = value; for predicate atoms the value is a boolean element.
struct Assignment {
  DomainTerm term;
  Element value;

  friend bool operator==(const Assignment& a, const Assignment& b) {
    return a.term == b.term && a.value == b.value;
  }
  friend bool operator<(const Assignment& a, const Assignment& b) {
    if (!(a.term == b.term)) return a.term < b.term;
    return a.value < b.value;
  }
};

// (t = value) or its negation; one literal sentence of an associated theory.
struct ValueLiteral {
  Assignment atom;
  bool positive = true;

  friend bool operator==(const ValueLiteral& a, const ValueLiteral& b) {
    return a.atom == b.atom && a.positive == b.positive;
  }
};

using ParameterSet = std::vector<DomainTerm>;

std::string ToString(const Vocabulary& voc, const DomainTerm& t);
std::string ToString(const Vocabulary& voc, const Assignment& a);
std::string ToString(const Vocabulary& voc, const ValueLiteral& l);

// Three-valued interpretation of every symbol over a fixed domain structure.
// Predicate tables hold one entry per argument tuple; function tables hold one
// entry per (argument tuple, result value) pair.
class PartialStructure {
 public:
  explicit PartialStructure(std::shared_ptr<const Domains> domains);

  const Domains& domains() const { return *domains_; }
  const std::shared_ptr<const Domains>& domains_ptr() const { return domains_; }
  const Vocabulary& vocabulary() const { return domains_->vocabulary(); }

  // Truth of (sym(tuple) = result value #value_index).
  Truth ValueTruth(SymbolId sym, std::size_t tuple, std::size_t value_index) const;
  void SetValueTruth(SymbolId sym, std::size_t tuple, std::size_t value_index, Truth t);

  Truth Value(const Assignment& a) const;
  bool IsUninterpreted(const DomainTerm& t) const;
  // The unique value not ruled out, if there is exactly one.
  std::optional<Element> ForcedValue(const DomainTerm& t) const;
  std::optional<Element> ForcedValue(SymbolId sym, std::size_t tuple) const;

  bool IsTotal() const;
  bool SymbolTotal(SymbolId sym) const;

  // Checks per-tuple functional consistency and completes tuples with a true
  // value by setting the other values false. Throws kConflict on violation.
  void Normalize();

  std::size_t TupleIndexOrThrow(const DomainTerm& t) const;
  std::size_t ResultIndexOrThrow(const DomainTerm& t, const Element& value) const;

  friend bool operator==(const PartialStructure& a, const PartialStructure& b);

 private:
  std::size_t Offset(SymbolId sym, std::size_t tuple, std::size_t value_index) const;

  std::shared_ptr<const Domains> domains_;
  // Per symbol. Predicates: truth of P(d). Functions: tuple-major, result-minor.
  std::vector<std::vector<Truth>> tables_;
};

// a <=_p b. Throws kDomain ("incomparable structures") on domain mismatch.
bool PrecisionLeq(const PartialStructure& a, const PartialStructure& b);

PartialStructure Extend(const PartialStructure& s, const Assignment& a);
PartialStructure Erase(const PartialStructure& s, const DomainTerm& t);

// Domain terms with at least one Unknown result value, in declaration order.
ParameterSet OpenTermsUniverse(const PartialStructure& s);

// Every decided entry of `s` as a literal, in table order.
std::vector<ValueLiteral> DecidedLiterals(const PartialStructure& s);

// Structure with the same domains and every entry Unknown.
PartialStructure DomainStructure(const PartialStructure& s);

}  // namespace cfgkb

#endif  // CFGKB_STRUCTURE_HPP_

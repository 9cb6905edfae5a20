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

#include "cfgkb/structure.hpp"

#include <algorithm>

#include "cfgkb/error.hpp"

namespace cfgkb {

Domains::Domains(std::shared_ptr<const Vocabulary> voc, std::vector<std::vector<Element>> per_type)
    : voc_(std::move(voc)), domains_(std::move(per_type)) {
  domains_.resize(voc_->num_types());
  index_.resize(voc_->num_types());
  booleans_ = {Element::Boolean(false), Element::Boolean(true)};
  for (TypeId t = 0; t < voc_->num_types(); ++t) {
    const TypeDecl& decl = voc_->type(t);
    if (decl.integer && decl.range && domains_[t].empty()) {
      for (std::int64_t v = decl.range->lo; v <= decl.range->hi; ++v) {
        domains_[t].push_back(Element::Integer(v));
      }
    }
    for (std::size_t i = 0; i < domains_[t].size(); ++i) {
      const Element& e = domains_[t][i];
      if (decl.integer != e.is_integer()) {
        throw Error(ErrorKind::kDomain, "element '" + e.ToString() + "' does not fit type '" +
                                            decl.name + "'");
      }
      if (!index_[t].emplace(e, i).second) {
        throw Error(ErrorKind::kDomain,
                    "duplicate element '" + e.ToString() + "' in type '" + decl.name + "'");
      }
    }
  }
  layouts_.resize(voc_->num_symbols());
  for (SymbolId s = 0; s < voc_->num_symbols(); ++s) {
    const SymbolDecl& decl = voc_->symbol(s);
    std::vector<TypeId> used = decl.args;
    if (decl.is_function()) used.push_back(decl.result);
    for (TypeId t : used) {
      if (domains_[t].empty()) {
        throw Error(ErrorKind::kDomain, {{decl.loc, "type '" + voc_->type(t).name +
                                                         "' used by '" + decl.name +
                                                         "' has no domain"}});
      }
    }
    Layout& layout = layouts_[s];
    layout.radix.reserve(decl.args.size());
    for (TypeId t : decl.args) {
      layout.radix.push_back(domains_[t].size());
      layout.num_tuples *= domains_[t].size();
    }
  }
}

std::optional<std::size_t> Domains::IndexOf(TypeId type, const Element& e) const {
  const auto& idx = index_.at(type);
  auto it = idx.find(e);
  if (it == idx.end()) return std::nullopt;
  return it->second;
}

std::vector<TypeId> Domains::TypesContaining(const Element& e) const {
  std::vector<TypeId> out;
  for (TypeId t = 0; t < domains_.size(); ++t) {
    if (index_[t].count(e)) out.push_back(t);
  }
  return out;
}

const std::vector<Element>& Domains::ResultDomain(SymbolId sym) const {
  const SymbolDecl& decl = voc_->symbol(sym);
  return decl.is_function() ? domains_[decl.result] : booleans_;
}

Tuple Domains::TupleAt(SymbolId sym, std::size_t index) const {
  const SymbolDecl& decl = voc_->symbol(sym);
  const Layout& layout = layouts_[sym];
  Tuple out(decl.args.size());
  for (std::size_t i = decl.args.size(); i-- > 0;) {
    std::size_t n = layout.radix[i];
    out[i] = domains_[decl.args[i]][index % n];
    index /= n;
  }
  return out;
}

std::optional<std::size_t> Domains::TupleIndex(SymbolId sym, const Tuple& args) const {
  const SymbolDecl& decl = voc_->symbol(sym);
  if (args.size() != decl.args.size()) return std::nullopt;
  std::size_t index = 0;
  for (std::size_t i = 0; i < args.size(); ++i) {
    auto pos = IndexOf(decl.args[i], args[i]);
    if (!pos) return std::nullopt;
    index = index * layouts_[sym].radix[i] + *pos;
  }
  return index;
}

std::optional<std::size_t> Domains::ResultIndex(SymbolId sym, const Element& value) const {
  const SymbolDecl& decl = voc_->symbol(sym);
  if (!decl.is_function()) {
    if (!value.is_boolean()) return std::nullopt;
    return value.boolean() ? 1 : 0;
  }
  return IndexOf(decl.result, value);
}

bool operator==(const Domains& a, const Domains& b) {
  if (&a == &b) return true;
  if (a.voc_ != b.voc_) {
    const Vocabulary& x = *a.voc_;
    const Vocabulary& y = *b.voc_;
    if (x.num_types() != y.num_types() || x.num_symbols() != y.num_symbols()) return false;
    for (TypeId t = 0; t < x.num_types(); ++t) {
      if (x.type(t).name != y.type(t).name || x.type(t).integer != y.type(t).integer) {
        return false;
      }
    }
    for (SymbolId s = 0; s < x.num_symbols(); ++s) {
      const SymbolDecl& p = x.symbol(s);
      const SymbolDecl& q = y.symbol(s);
      if (p.name != q.name || p.kind != q.kind || p.args != q.args ||
          (p.is_function() && p.result != q.result)) {
        return false;
      }
    }
  }
  return a.domains_ == b.domains_;
}

std::string ToString(const Vocabulary& voc, const DomainTerm& t) {
  std::string out = voc.symbol(t.symbol).name;
  if (!t.args.empty()) out += TupleToString(t.args);
  return out;
}

std::string ToString(const Vocabulary& voc, const Assignment& a) {
  return ToString(voc, a.term) + "=" + a.value.ToString();
}

std::string ToString(const Vocabulary& voc, const ValueLiteral& l) {
  const SymbolDecl& decl = voc.symbol(l.atom.term.symbol);
  if (!decl.is_function()) {
    bool truth = l.atom.value.boolean() == l.positive;
    return (truth ? "" : "~") + ToString(voc, l.atom.term);
  }
  return ToString(voc, l.atom.term) + (l.positive ? "=" : "~=") + l.atom.value.ToString();
}

PartialStructure::PartialStructure(std::shared_ptr<const Domains> domains)
    : domains_(std::move(domains)) {
  const Vocabulary& voc = domains_->vocabulary();
  tables_.resize(voc.num_symbols());
  for (SymbolId s = 0; s < voc.num_symbols(); ++s) {
    std::size_t n = domains_->NumTuples(s);
    if (voc.symbol(s).is_function()) n *= domains_->ResultDomain(s).size();
    tables_[s].assign(n, Truth::kUnknown);
  }
}

std::size_t PartialStructure::Offset(SymbolId sym, std::size_t tuple,
                                     std::size_t value_index) const {
  return tuple * domains_->ResultDomain(sym).size() + value_index;
}

Truth PartialStructure::ValueTruth(SymbolId sym, std::size_t tuple,
                                   std::size_t value_index) const {
  if (!vocabulary().symbol(sym).is_function()) {
    Truth t = tables_[sym][tuple];
    return value_index == 1 ? t : Not(t);
  }
  return tables_[sym][Offset(sym, tuple, value_index)];
}

void PartialStructure::SetValueTruth(SymbolId sym, std::size_t tuple, std::size_t value_index,
                                     Truth t) {
  if (!vocabulary().symbol(sym).is_function()) {
    tables_[sym][tuple] = value_index == 1 ? t : Not(t);
    return;
  }
  tables_[sym][Offset(sym, tuple, value_index)] = t;
}

std::size_t PartialStructure::TupleIndexOrThrow(const DomainTerm& t) const {
  auto idx = domains_->TupleIndex(t.symbol, t.args);
  if (!idx) {
    throw Error(ErrorKind::kDomain, "unknown term '" + ToString(vocabulary(), t) + "'");
  }
  return *idx;
}

std::size_t PartialStructure::ResultIndexOrThrow(const DomainTerm& t, const Element& value) const {
  auto idx = domains_->ResultIndex(t.symbol, value);
  if (!idx) {
    throw Error(ErrorKind::kDomain, "value '" + value.ToString() + "' is not in the domain of '" +
                                        ToString(vocabulary(), t) + "'");
  }
  return *idx;
}

Truth PartialStructure::Value(const Assignment& a) const {
  return ValueTruth(a.term.symbol, TupleIndexOrThrow(a.term), ResultIndexOrThrow(a.term, a.value));
}

bool PartialStructure::IsUninterpreted(const DomainTerm& t) const {
  std::size_t tuple = TupleIndexOrThrow(t);
  std::size_t n = domains_->ResultDomain(t.symbol).size();
  for (std::size_t v = 0; v < n; ++v) {
    if (ValueTruth(t.symbol, tuple, v) == Truth::kUnknown) return true;
  }
  return false;
}

std::optional<Element> PartialStructure::ForcedValue(SymbolId sym, std::size_t tuple) const {
  const auto& values = domains_->ResultDomain(sym);
  std::optional<std::size_t> candidate;
  for (std::size_t v = 0; v < values.size(); ++v) {
    Truth t = ValueTruth(sym, tuple, v);
    if (t == Truth::kTrue) return values[v];
    if (t == Truth::kUnknown) {
      if (candidate) return std::nullopt;
      candidate = v;
    }
  }
  if (!candidate) return std::nullopt;
  return values[*candidate];
}

std::optional<Element> PartialStructure::ForcedValue(const DomainTerm& t) const {
  return ForcedValue(t.symbol, TupleIndexOrThrow(t));
}

bool PartialStructure::SymbolTotal(SymbolId sym) const {
  return std::none_of(tables_[sym].begin(), tables_[sym].end(),
                      [](Truth t) { return t == Truth::kUnknown; });
}

bool PartialStructure::IsTotal() const {
  for (SymbolId s = 0; s < tables_.size(); ++s) {
    if (!SymbolTotal(s)) return false;
  }
  return true;
}

void PartialStructure::Normalize() {
  const Vocabulary& voc = vocabulary();
  for (SymbolId s = 0; s < voc.num_symbols(); ++s) {
    if (!voc.symbol(s).is_function()) continue;
    std::size_t n = domains_->ResultDomain(s).size();
    for (std::size_t tuple = 0; tuple < domains_->NumTuples(s); ++tuple) {
      std::size_t trues = 0;
      std::size_t falses = 0;
      for (std::size_t v = 0; v < n; ++v) {
        Truth t = ValueTruth(s, tuple, v);
        trues += t == Truth::kTrue;
        falses += t == Truth::kFalse;
      }
      DomainTerm term{s, domains_->TupleAt(s, tuple)};
      if (trues > 1 || falses == n) {
        throw Error(ErrorKind::kConflict,
                    "conflicting assignment: '" + ToString(voc, term) + "' has no single value");
      }
      if (trues == 1) {
        for (std::size_t v = 0; v < n; ++v) {
          if (ValueTruth(s, tuple, v) == Truth::kUnknown) SetValueTruth(s, tuple, v, Truth::kFalse);
        }
      }
    }
  }
}

bool operator==(const PartialStructure& a, const PartialStructure& b) {
  return *a.domains_ == *b.domains_ && a.tables_ == b.tables_;
}

bool PrecisionLeq(const PartialStructure& a, const PartialStructure& b) {
  if (!(a.domains() == b.domains())) {
    throw Error(ErrorKind::kDomain, "incomparable structures");
  }
  const Vocabulary& voc = a.vocabulary();
  for (SymbolId s = 0; s < voc.num_symbols(); ++s) {
    std::size_t n = a.domains().ResultDomain(s).size();
    for (std::size_t tuple = 0; tuple < a.domains().NumTuples(s); ++tuple) {
      for (std::size_t v = 0; v < n; ++v) {
        if (!PrecisionLeq(a.ValueTruth(s, tuple, v), b.ValueTruth(s, tuple, v))) return false;
      }
    }
  }
  return true;
}

PartialStructure Extend(const PartialStructure& s, const Assignment& a) {
  std::size_t tuple = s.TupleIndexOrThrow(a.term);
  std::size_t value = s.ResultIndexOrThrow(a.term, a.value);
  Truth current = s.ValueTruth(a.term.symbol, tuple, value);
  if (current == Truth::kTrue) return s;
  if (current == Truth::kFalse) {
    throw Error(ErrorKind::kConflict, "conflicting assignment '" + ToString(s.vocabulary(), a) + "'");
  }
  PartialStructure out = s;
  std::size_t n = s.domains().ResultDomain(a.term.symbol).size();
  for (std::size_t v = 0; v < n; ++v) {
    out.SetValueTruth(a.term.symbol, tuple, v, ToTruth(v == value));
  }
  return out;
}

PartialStructure Erase(const PartialStructure& s, const DomainTerm& t) {
  std::size_t tuple = s.TupleIndexOrThrow(t);
  PartialStructure out = s;
  std::size_t n = s.domains().ResultDomain(t.symbol).size();
  for (std::size_t v = 0; v < n; ++v) out.SetValueTruth(t.symbol, tuple, v, Truth::kUnknown);
  return out;
}

ParameterSet OpenTermsUniverse(const PartialStructure& s) {
  ParameterSet out;
  const Vocabulary& voc = s.vocabulary();
  for (SymbolId sym = 0; sym < voc.num_symbols(); ++sym) {
    std::size_t n = s.domains().ResultDomain(sym).size();
    for (std::size_t tuple = 0; tuple < s.domains().NumTuples(sym); ++tuple) {
      for (std::size_t v = 0; v < n; ++v) {
        if (s.ValueTruth(sym, tuple, v) == Truth::kUnknown) {
          out.push_back(DomainTerm{sym, s.domains().TupleAt(sym, tuple)});
          break;
        }
      }
    }
  }
  return out;
}

std::vector<ValueLiteral> DecidedLiterals(const PartialStructure& s) {
  std::vector<ValueLiteral> out;
  const Vocabulary& voc = s.vocabulary();
  for (SymbolId sym = 0; sym < voc.num_symbols(); ++sym) {
    const auto& values = s.domains().ResultDomain(sym);
    bool function = voc.symbol(sym).is_function();
    for (std::size_t tuple = 0; tuple < s.domains().NumTuples(sym); ++tuple) {
      DomainTerm term{sym, s.domains().TupleAt(sym, tuple)};
      if (!function) {
        Truth t = s.ValueTruth(sym, tuple, 1);
        if (t != Truth::kUnknown) {
          out.push_back({{term, Element::Boolean(true)}, t == Truth::kTrue});
        }
        continue;
      }
      for (std::size_t v = 0; v < values.size(); ++v) {
        Truth t = s.ValueTruth(sym, tuple, v);
        if (t != Truth::kUnknown) out.push_back({{term, values[v]}, t == Truth::kTrue});
      }
    }
  }
  return out;
}

PartialStructure DomainStructure(const PartialStructure& s) {
  return PartialStructure(s.domains_ptr());
}

}  // namespace cfgkb

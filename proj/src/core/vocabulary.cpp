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

#include "cfgkb/vocabulary.hpp"

#include <algorithm>

namespace cfgkb {

Vocabulary::Vocabulary() {
  types_.push_back(TypeDecl{"int", true, std::nullopt});
  type_index_["int"] = kIntType;
}

void Vocabulary::CheckFresh(const std::string& name, SourceLoc loc) const {
  if (type_index_.count(name) || symbol_index_.count(name)) {
    throw Error(ErrorKind::kSyntax, {{loc, "duplicate symbol '" + name + "'"}});
  }
}

TypeId Vocabulary::AddType(std::string name, SourceLoc loc) {
  CheckFresh(name, loc);
  TypeId id = static_cast<TypeId>(types_.size());
  type_index_[name] = id;
  types_.push_back(TypeDecl{std::move(name), false, std::nullopt});
  return id;
}

TypeId Vocabulary::AddIntType(std::string name, IntRange range, SourceLoc loc) {
  if (range.lo > range.hi) {
    throw Error(ErrorKind::kSyntax, {{loc, "empty integer range for '" + name + "'"}});
  }
  if (name == "int") {
    if (int_declared_) {
      throw Error(ErrorKind::kSyntax, {{loc, "duplicate symbol 'int'"}});
    }
    int_declared_ = true;
    types_[kIntType].range = range;
    return kIntType;
  }
  CheckFresh(name, loc);
  TypeId id = static_cast<TypeId>(types_.size());
  type_index_[name] = id;
  types_.push_back(TypeDecl{std::move(name), true, range});
  return id;
}

SymbolId Vocabulary::AddPredicate(std::string name, std::vector<TypeId> args, SourceLoc loc) {
  CheckFresh(name, loc);
  SymbolId id = static_cast<SymbolId>(symbols_.size());
  symbol_index_[name] = id;
  symbols_.push_back(SymbolDecl{std::move(name), SymbolKind::kPredicate, std::move(args),
                                kIntType, loc});
  return id;
}

SymbolId Vocabulary::AddFunction(std::string name, std::vector<TypeId> args, TypeId result,
                                 SourceLoc loc) {
  CheckFresh(name, loc);
  SymbolId id = static_cast<SymbolId>(symbols_.size());
  symbol_index_[name] = id;
  symbols_.push_back(
      SymbolDecl{std::move(name), SymbolKind::kFunction, std::move(args), result, loc});
  return id;
}

std::optional<TypeId> Vocabulary::FindType(std::string_view name) const {
  auto it = type_index_.find(std::string(name));
  if (it == type_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<SymbolId> Vocabulary::FindSymbol(std::string_view name) const {
  auto it = symbol_index_.find(std::string(name));
  if (it == symbol_index_.end()) return std::nullopt;
  return it->second;
}

TypeId Vocabulary::TypeByName(std::string_view name) const {
  auto t = FindType(name);
  if (!t) throw Error(ErrorKind::kDomain, "unknown type '" + std::string(name) + "'");
  return *t;
}

SymbolId Vocabulary::SymbolByName(std::string_view name) const {
  auto s = FindSymbol(name);
  if (!s) throw Error(ErrorKind::kDomain, "unknown symbol '" + std::string(name) + "'");
  return *s;
}

std::size_t Vocabulary::num_predicates() const {
  return static_cast<std::size_t>(std::count_if(
      symbols_.begin(), symbols_.end(), [](const SymbolDecl& s) { return !s.is_function(); }));
}

std::size_t Vocabulary::num_functions() const { return symbols_.size() - num_predicates(); }

}  // namespace cfgkb

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

#ifndef CFGKB_VOCABULARY_HPP_
#define CFGKB_VOCABULARY_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "cfgkb/error.hpp"

namespace cfgkb {

using TypeId = std::uint32_t;
using SymbolId = std::uint32_t;

// The built-in integer type always has id 0.
inline constexpr TypeId kIntType = 0;

struct IntRange {
  std::int64_t lo = 0;
  std::int64_t hi = 0;
  bool Contains(std::int64_t v) const { return lo <= v && v <= hi; }
};

struct TypeDecl {
  std::string name;
  // Set for integer types; constant types get their domain from a structure.
  bool integer = false;
  std::optional<IntRange> range;
};

enum class SymbolKind { kPredicate, kFunction };

struct SymbolDecl {
  std::string name;
  SymbolKind kind = SymbolKind::kPredicate;
  std::vector<TypeId> args;
  TypeId result = kIntType;  // meaningful for functions only
  SourceLoc loc;

  bool is_function() const { return kind == SymbolKind::kFunction; }
  std::size_t arity() const { return args.size(); }
};

class Vocabulary {
 public:
  Vocabulary();

  // Declares a constant type; redeclaring "int" with a range restricts the
  // built-in integer type.
  TypeId AddType(std::string name, SourceLoc loc = {});
  TypeId AddIntType(std::string name, IntRange range, SourceLoc loc = {});
  SymbolId AddPredicate(std::string name, std::vector<TypeId> args, SourceLoc loc = {});
  SymbolId AddFunction(std::string name, std::vector<TypeId> args, TypeId result,
                       SourceLoc loc = {});

  std::optional<TypeId> FindType(std::string_view name) const;
  std::optional<SymbolId> FindSymbol(std::string_view name) const;
  TypeId TypeByName(std::string_view name) const;
  SymbolId SymbolByName(std::string_view name) const;

  const TypeDecl& type(TypeId id) const { return types_.at(id); }
  const SymbolDecl& symbol(SymbolId id) const { return symbols_.at(id); }
  std::size_t num_types() const { return types_.size(); }
  std::size_t num_symbols() const { return symbols_.size(); }
  const std::vector<TypeDecl>& types() const { return types_; }
  const std::vector<SymbolDecl>& symbols() const { return symbols_; }

  bool IsIntegerType(TypeId id) const { return types_.at(id).integer; }
  // Range of the built-in int type, if declared.
  const std::optional<IntRange>& int_range() const { return types_[kIntType].range; }

  std::size_t num_predicates() const;
  std::size_t num_functions() const;

 private:
  void CheckFresh(const std::string& name, SourceLoc loc) const;

  std::vector<TypeDecl> types_;
  std::vector<SymbolDecl> symbols_;
  std::unordered_map<std::string, TypeId> type_index_;
  std::unordered_map<std::string, SymbolId> symbol_index_;
  bool int_declared_ = false;
};

}  // namespace cfgkb

#endif  // CFGKB_VOCABULARY_HPP_

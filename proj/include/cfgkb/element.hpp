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

#ifndef CFGKB_ELEMENT_HPP_
#define CFGKB_ELEMENT_HPP_

#include <cstdint>
#include <functional>
#include <string>
#include <variant>
#include <vector>

namespace cfgkb {

// Three-valued truth. Precision order: Unknown below both True and False.
enum class Truth : std::uint8_t { kFalse = 0, kTrue = 1, kUnknown = 2 };

inline Truth ToTruth(bool b) { return b ? Truth::kTrue : Truth::kFalse; }
inline bool PrecisionLeq(Truth a, Truth b) { return a == Truth::kUnknown || a == b; }

// Kleene connectives.
inline Truth Not(Truth a) {
  if (a == Truth::kUnknown) return a;
  return a == Truth::kTrue ? Truth::kFalse : Truth::kTrue;
}
inline Truth And(Truth a, Truth b) {
  if (a == Truth::kFalse || b == Truth::kFalse) return Truth::kFalse;
  if (a == Truth::kTrue && b == Truth::kTrue) return Truth::kTrue;
  return Truth::kUnknown;
}
inline Truth Or(Truth a, Truth b) { return Not(And(Not(a), Not(b))); }

const char* TruthName(Truth t);

// A domain element: a named constant, an integer, or a boolean (the result
// values of predicate atoms).
class Element {
 public:
  enum class Kind { kBoolean = 0, kInteger = 1, kConstant = 2 };

  Element() : value_(false) {}
  static Element Boolean(bool b) { return Element(Value(b)); }
  static Element Integer(std::int64_t i) { return Element(Value(i)); }
  static Element Constant(std::string name) { return Element(Value(std::move(name))); }

  Kind kind() const { return static_cast<Kind>(value_.index()); }
  bool is_boolean() const { return kind() == Kind::kBoolean; }
  bool is_integer() const { return kind() == Kind::kInteger; }
  bool is_constant() const { return kind() == Kind::kConstant; }

  bool boolean() const { return std::get<bool>(value_); }
  std::int64_t integer() const { return std::get<std::int64_t>(value_); }
  const std::string& name() const { return std::get<std::string>(value_); }

  std::string ToString() const;

  friend bool operator==(const Element& a, const Element& b) { return a.value_ == b.value_; }
  friend bool operator!=(const Element& a, const Element& b) { return !(a == b); }
  friend bool operator<(const Element& a, const Element& b) { return a.value_ < b.value_; }

  std::size_t Hash() const;

 private:
  using Value = std::variant<bool, std::int64_t, std::string>;
  explicit Element(Value v) : value_(std::move(v)) {}
  Value value_;
};

using Tuple = std::vector<Element>;

std::string TupleToString(const Tuple& t);

struct ElementHash {
  std::size_t operator()(const Element& e) const { return e.Hash(); }
};

}  // namespace cfgkb

#endif  // CFGKB_ELEMENT_HPP_

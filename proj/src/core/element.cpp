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

#include "cfgkb/element.hpp"

namespace cfgkb {

const char* TruthName(Truth t) {
  switch (t) {
    case Truth::kTrue: return "true";
    case Truth::kFalse: return "false";
    case Truth::kUnknown: return "unknown";
  }
  return "?";
}

std::string Element::ToString() const {
  switch (kind()) {
    case Kind::kBoolean: return boolean() ? "true" : "false";
    case Kind::kInteger: return std::to_string(integer());
    case Kind::kConstant: return name();
  }
  return {};
}

std::size_t Element::Hash() const {
  std::size_t h = std::hash<std::size_t>{}(value_.index());
  std::size_t v = 0;
  switch (kind()) {
    case Kind::kBoolean: v = boolean() ? 1 : 0; break;
    case Kind::kInteger: v = std::hash<std::int64_t>{}(integer()); break;
    case Kind::kConstant: v = std::hash<std::string>{}(name()); break;
  }
  return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

std::string TupleToString(const Tuple& t) {
  std::string out = "(";
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i > 0) out += ",";
    out += t[i].ToString();
  }
  return out + ")";
}

}  // namespace cfgkb

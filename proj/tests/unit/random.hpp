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

#ifndef CFGKB_TESTS_UNIT_RANDOM_HPP_
#define CFGKB_TESTS_UNIT_RANDOM_HPP_

#include <random>

#include "cfgkb/structure.hpp"

namespace cfgkb::unit {

// Vocabulary with a 0-ary predicate, a constant and small tables: 18 entries.
inline constexpr const char* kSmallSource = R"(
vocabulary { type A; type B; Flag. P(A). Q(A,B). F(A):B. c:B. }
structure { A = {a1; a2} B = {b1; b2; b3} }
)";

// Two-valued structure over the domains of `shape`.
inline PartialStructure RandomTotal(const PartialStructure& shape, std::mt19937_64& rng) {
  PartialStructure s = DomainStructure(shape);
  const Domains& d = s.domains();
  for (SymbolId sym = 0; sym < s.vocabulary().num_symbols(); ++sym) {
    std::size_t n = d.ResultDomain(sym).size();
    for (std::size_t t = 0; t < d.NumTuples(sym); ++t) {
      std::size_t pick = std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
      for (std::size_t v = 0; v < n; ++v) {
        s.SetValueTruth(sym, t, v, v == pick ? Truth::kTrue : Truth::kFalse);
      }
    }
  }
  return s;
}

// Forgets each entry of `s` with probability p; the result is <=_p s.
inline PartialStructure RandomCoarsen(const PartialStructure& s, double p, std::mt19937_64& rng) {
  PartialStructure out = s;
  const Domains& d = s.domains();
  std::bernoulli_distribution forget(p);
  for (SymbolId sym = 0; sym < s.vocabulary().num_symbols(); ++sym) {
    bool fn = s.vocabulary().symbol(sym).is_function();
    std::size_t n = fn ? d.ResultDomain(sym).size() : 2;
    for (std::size_t t = 0; t < d.NumTuples(sym); ++t) {
      if (!fn) {
        if (forget(rng)) out.SetValueTruth(sym, t, 1, Truth::kUnknown);
        continue;
      }
      for (std::size_t v = 0; v < n; ++v) {
        if (forget(rng)) out.SetValueTruth(sym, t, v, Truth::kUnknown);
      }
    }
  }
  out.Normalize();
  return out;
}

}  // namespace cfgkb::unit

#endif  // CFGKB_TESTS_UNIT_RANDOM_HPP_

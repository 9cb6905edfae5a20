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

#ifndef CFGKB_LANG_HPP_
#define CFGKB_LANG_HPP_

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "cfgkb/ast.hpp"
#include "cfgkb/structure.hpp"

namespace cfgkb {

// A knowledge base: vocabulary, theory and initial partial structure.
struct Problem {
  std::shared_ptr<const Vocabulary> vocabulary;
  Theory theory;
  PartialStructure structure;
};

// Parses `vocabulary { } theory { } structure { }` blocks; any block may be
// absent. The theory is returned untyped. Throws Error(kSyntax) with
// line/column diagnostics.
Problem Parse(std::string_view text);

// Resolves names, checks arities and types and assigns variable slots.
// Throws Error(kType) carrying every diagnostic found.
Problem Typecheck(const Problem& problem);

// Parse followed by Typecheck.
Problem Load(std::string_view text);

// A `structure { ... }` block (the keyword and braces are optional) over an
// existing vocabulary.
PartialStructure ParseStructure(std::string_view text, std::shared_ptr<const Vocabulary> voc);

std::string SerializeStructure(const PartialStructure& s);

FormulaPtr ParseFormula(std::string_view text);
TermPtr ParseTerm(std::string_view text);

// Typechecks a standalone formula or term against the problem's vocabulary
// and domains. Free variables are not allowed.
FormulaPtr TypecheckFormula(const Domains& domains, const FormulaPtr& raw, int* num_slots);
TermPtr TypecheckTerm(const Domains& domains, const TermPtr& raw, int* num_slots);
SetExpression ParseSetExpression(std::string_view text, const Domains& domains);

// "Install(Windows)", "Requester", "PriceOf(Office)".
DomainTerm ParseTermPath(std::string_view text, const Domains& domains);
// "true"/"false" for predicate atoms, a constant or an integer otherwise.
Element ParseValue(std::string_view text, const DomainTerm& term, const Domains& domains);
Assignment ParseAssignment(std::string_view text, const Domains& domains);  // "TERM=VALUE"

}  // namespace cfgkb

#endif  // CFGKB_LANG_HPP_

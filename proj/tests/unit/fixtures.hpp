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

#ifndef CFGKB_TESTS_UNIT_FIXTURES_HPP_
#define CFGKB_TESTS_UNIT_FIXTURES_HPP_

#include <fstream>
#include <sstream>
#include <string>

#include "cfgkb/eval.hpp"
#include "cfgkb/lang.hpp"
#include "cfgkb/structure.hpp"

#ifndef CFGKB_PRESETS_DIR
#define CFGKB_PRESETS_DIR "presets"
#endif

namespace cfgkb::unit {

inline std::string ReadPreset(const std::string& name) {
  std::ifstream in(std::string(CFGKB_PRESETS_DIR) + "/" + name + ".cfg");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline Problem Software() { return Load(ReadPreset("software")); }
inline Problem Printer() { return Load(ReadPreset("printer")); }

// Printer structures: S0 knows only the domains, S1 is the preset, S2 is total.
inline PartialStructure PrinterS0() { return DomainStructure(Printer().structure); }
inline PartialStructure PrinterS1() { return Printer().structure; }
inline PartialStructure PrinterS2() {
  Problem p = Printer();
  return ParseStructure(R"(structure {
  printer = {P1; P2}
  connection = {USB; LAN}
  PrinterConnection = {(P1,USB)->T; (P1,LAN)->F; (P2,USB)->T; (P2,LAN)->F}
})",
                        p.vocabulary);
}

inline DomainTerm T(const PartialStructure& s, const std::string& path) {
  return ParseTermPath(path, s.domains());
}

inline Assignment A(const PartialStructure& s, const std::string& text) {
  return ParseAssignment(text, s.domains());
}

inline FormulaPtr F(const PartialStructure& s, const std::string& text) {
  int slots = 0;
  return TypecheckFormula(s.domains(), ParseFormula(text), &slots);
}

inline TermPtr Tm(const PartialStructure& s, const std::string& text) {
  int slots = 0;
  return TypecheckTerm(s.domains(), ParseTerm(text), &slots);
}

inline PartialStructure With(PartialStructure s, const std::vector<std::string>& choices) {
  for (const auto& c : choices) s = Extend(s, A(s, c));
  return s;
}

}  // namespace cfgkb::unit

#endif  // CFGKB_TESTS_UNIT_FIXTURES_HPP_

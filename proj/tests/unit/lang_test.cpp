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

#include <random>
#include <string>

#include "cfgkb/error.hpp"
#include "cfgkb/ground.hpp"
#include "cfgkb/lang.hpp"
#include "doctest.h"
#include "fixtures.hpp"
#include "random.hpp"

namespace cfgkb::unit {
namespace {

ErrorKind KindOf(const std::string& source) {
  try {
    Load(source);
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::kInternal;
}

std::string WithTheory(const std::string& sentence) {
  std::string text = ReadPreset("software");
  return text.replace(text.find("theory {") + 8, 0, "\n  " + sentence + "\n");
}

TEST_CASE("parse the software specification") {
  Problem p = Parse(ReadPreset("software"));
  CHECK(p.vocabulary->num_types() == 3);
  CHECK(p.vocabulary->num_predicates() == 3);
  CHECK(p.vocabulary->num_functions() == 4);
  REQUIRE(p.theory.sentences.size() == 5);
  CHECK(p.theory.sentences[0].label == "prereq");
  CHECK(p.theory.sentences[0].loc.line > 0);
  const Sentence* costdef = p.theory.Find("costdef");
  REQUIRE(costdef != nullptr);
  REQUIRE(costdef->formula->kind == FormulaKind::kCompare);
  CHECK(costdef->formula->cmp == CompareOp::kEq);
  const Term& agg = *costdef->formula->args[1];
  CHECK(agg.kind == TermKind::kAggregate);
  CHECK(agg.agg == AggOp::kSum);
  CHECK(agg.binders.size() == 1);
  CHECK(Typecheck(p).theory.typed);
}

TEST_CASE("empty specification") {
  Problem p = Load("vocabulary { } theory { } structure { }");
  CHECK(p.theory.sentences.empty());
  CHECK(p.vocabulary->num_symbols() == 0);
  CHECK(Load("").theory.sentences.empty());
}

TEST_CASE("typecheck errors carry locations") {
  try {
    Load(WithTheory("bad: Install(Secretary)."));
    FAIL("expected a type error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kType);
    REQUIRE_FALSE(e.diagnostics().empty());
    CHECK(e.diagnostics()[0].loc.line == 9);
  }
  CHECK(KindOf(WithTheory("Install(Windows, Linux).")) == ErrorKind::kType);
  CHECK(KindOf(WithTheory("Requester < Requester.")) == ErrorKind::kType);
  CHECK(KindOf(WithTheory("Install(s).")) == ErrorKind::kType);
  CHECK(KindOf(WithTheory("Unknown(Windows).")) == ErrorKind::kType);
  CHECK(KindOf("vocabulary { type a; P(a). P(a). }") != ErrorKind::kInternal);
  CHECK(KindOf("vocabulary { P(nosuch). }") != ErrorKind::kInternal);
}

TEST_CASE("syntax errors carry line and column") {
  try {
    Load("vocabulary {\n  type a;\n  P(a.\n}");
    FAIL("expected a syntax error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kSyntax);
    REQUIRE_FALSE(e.diagnostics().empty());
    CHECK(e.diagnostics()[0].loc.line == 3);
    CHECK(e.diagnostics()[0].loc.column >= 1);
  }
  try {
    Load("vocabulary {\n  type a;\n  P(a).\n}");
    FAIL("expected a missing domain");
  } catch (const Error& e) {
    REQUIRE_FALSE(e.diagnostics().empty());
    CHECK(e.diagnostics()[0].loc.line == 3);
    CHECK(std::string(e.what()).find("has no domain") != std::string::npos);
  }
}

TEST_CASE("function composition is an integer term") {
  PartialStructure s = Software().structure;
  TermPtr t = Tm(s, "MaxCost(Requester)");
  CHECK(t->kind == TermKind::kApply);
  CHECK(s.vocabulary().IsIntegerType(t->type));
  CHECK(F(s, "Cost =< MaxCost(Requester)")->kind == FormulaKind::kCompare);
}

TEST_CASE("structure serialization") {
  std::string text = SerializeStructure(PrinterS1());
  CHECK(text.find("PrinterConnection = {(P1,USB)->T; (P2,LAN)->F}") != std::string::npos);
  std::string total = SerializeStructure(PrinterS2());
  CHECK(total.find("(P1,USB)->T; (P1,LAN)->F; (P2,USB)->T; (P2,LAN)->F") != std::string::npos);
  std::string empty = SerializeStructure(PrinterS0());
  CHECK(empty.find("PrinterConnection") == std::string::npos);
  CHECK(empty.find("printer = {P1; P2}") != std::string::npos);
  Problem p = Printer();
  CHECK(ParseStructure(text, p.vocabulary) == PrinterS1());
  CHECK(ParseStructure(total, p.vocabulary) == PrinterS2());
  CHECK(ParseStructure(empty, p.vocabulary) == PrinterS0());
  PartialStructure sw = Software().structure;
  CHECK(ParseStructure(SerializeStructure(sw), sw.domains().vocabulary_ptr()) == sw);
}

TEST_CASE("serialization round trip on random structures") {
  std::mt19937_64 rng(21);
  Problem p = Load(kSmallSource);
  for (int i = 0; i < 300; ++i) {
    PartialStructure s = RandomCoarsen(RandomTotal(p.structure, rng), 0.5, rng);
    std::string text = SerializeStructure(s);
    CHECK_MESSAGE(ParseStructure(text, p.vocabulary) == s, text);
  }
  PartialStructure flag = Extend(p.structure, A(p.structure, "Flag=true"));
  std::string text = SerializeStructure(flag);
  CHECK(text.find("Flag") != std::string::npos);
  CHECK(ParseStructure(text, p.vocabulary) == flag);
}

TEST_CASE("two-valued shorthand declares the complement false") {
  PartialStructure s = Software().structure;
  CHECK(s.Value(A(s, "IsOS(Windows)=true")) == Truth::kTrue);
  CHECK(s.Value(A(s, "IsOS(Office)=true")) == Truth::kFalse);
  CHECK(s.Value(A(s, "PreReq(Office,Windows)=true")) == Truth::kTrue);
  CHECK(s.Value(A(s, "PreReq(Windows,Office)=true")) == Truth::kFalse);
}

TEST_CASE("sentence identifiers are stable under re-parsing") {
  std::string text = ReadPreset("software");
  Problem a = Load(text);
  Problem b = Load(text);
  GroundProblem ga = Ground(a.theory, a.structure);
  GroundProblem gb = Ground(b.theory, b.structure);
  REQUIRE(ga.units.size() == gb.units.size());
  for (std::size_t i = 0; i < ga.units.size(); ++i) CHECK(ga.units[i].id == gb.units[i].id);
  CHECK(ga.FindUnit("prereq[Office,Windows]") >= 0);
}

}  // namespace
}  // namespace cfgkb::unit

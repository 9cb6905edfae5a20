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

#include <algorithm>
#include <random>
#include <set>

#include "cfgkb/error.hpp"
#include "cfgkb/eval.hpp"
#include "doctest.h"
#include "fixtures.hpp"
#include "oracle.hpp"
#include "classical.hpp"
#include "random.hpp"

namespace cfgkb::unit {
namespace {

std::set<std::string> Names(const PartialStructure& s, const ParameterSet& terms) {
  std::set<std::string> out;
  for (const auto& t : terms) out.insert(ToString(s.vocabulary(), t));
  return out;
}

std::set<std::string> Rows(const std::vector<Tuple>& tuples) {
  std::set<std::string> out;
  for (const auto& t : tuples) out.insert(TupleToString(t));
  return out;
}

TEST_CASE("precision order on the printer structures") {
  PartialStructure s0 = PrinterS0(), s1 = PrinterS1(), s2 = PrinterS2();
  CHECK(PrecisionLeq(s0, s1));
  CHECK(PrecisionLeq(s1, s1));
  CHECK(PrecisionLeq(s1, s2));
  CHECK_FALSE(PrecisionLeq(s2, s1));
  PartialStructure sw = Software().structure;
  try {
    PrecisionLeq(s1, sw);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kDomain);
    CHECK(std::string(e.what()).find("incomparable structures") != std::string::npos);
  }
}

TEST_CASE("extend and erase") {
  PartialStructure s0 = PrinterS0(), s1 = PrinterS1();
  Assignment a = A(s0, "PrinterConnection(P1,USB)=true");
  PartialStructure e = Extend(s0, a);
  CHECK(e.Value(a) == Truth::kTrue);
  CHECK(e.Value(a) == s1.Value(a));
  CHECK(Extend(e, a) == e);
  CHECK(PrecisionLeq(s0, e));

  PartialStructure sw = Software().structure;
  PartialStructure m = Extend(sw, A(sw, "Requester=Manager"));
  CHECK(m.Value(A(sw, "Requester=Secretary")) == Truth::kFalse);
  CHECK(m.Value(A(sw, "Requester=Manager")) == Truth::kTrue);

  CHECK_THROWS_AS(Extend(s1, A(s1, "PrinterConnection(P1,USB)=false")), Error);
  try {
    Extend(s1, A(s1, "PrinterConnection(P1,USB)=false"));
  } catch (const Error& err) {
    CHECK(err.kind() == ErrorKind::kConflict);
  }

  DomainTerm lan = T(s1, "PrinterConnection(P2,LAN)");
  PartialStructure r = Erase(s1, lan);
  CHECK(PrecisionLeq(r, s1));
  CHECK(r.IsUninterpreted(lan));
  CHECK(r.Value(A(s1, "PrinterConnection(P1,USB)=true")) == Truth::kTrue);
  CHECK(Erase(e, a.term) == s0);
  CHECK(Erase(s0, a.term) == s0);
}

TEST_CASE("formula and term evaluation") {
  PartialStructure s1 = PrinterS1(), s2 = PrinterS2();
  CHECK(EvalFormula(s1, *F(s1, "PrinterConnection(P1,USB)")) == Truth::kTrue);
  CHECK(EvalFormula(s1, *F(s1, "PrinterConnection(P2,USB)")) == Truth::kUnknown);
  CHECK(EvalFormula(s1, *F(s1, "PrinterConnection(P2,LAN)")) == Truth::kFalse);
  CHECK(EvalFormula(s2, *F(s2, "!p[printer]: ?c[connection]: PrinterConnection(p,c)")) ==
        Truth::kTrue);

  PartialStructure sw = Software().structure;
  PartialStructure installed = With(sw, {"Install(Windows)=true", "Install(Office)=true",
                                         "Install(Linux)=false", "Install(LaTeX)=false",
                                         "Install(DualBoot)=false"});
  auto cost = Tm(sw, "sum{(s, PriceOf(s)) | Install(s)}");
  REQUIRE(EvalTerm(installed, *cost).has_value());
  CHECK(EvalTerm(installed, *cost)->integer() == 90);
  CHECK(EvalTerm(sw, *Tm(sw, "sum{(s, PriceOf(s)) | false}"))->integer() == 0);
  CHECK_FALSE(EvalTerm(sw, *Tm(sw, "Cost")).has_value());
  CHECK_FALSE(EvalTerm(sw, *cost).has_value());
  CHECK(EvalTerm(sw, *Tm(sw, "MaxCost(Secretary)"))->integer() == 100);

  Problem small = Load(R"(
    vocabulary { type item; type int[0..50]; W(item):int. }
    structure { item = {x; y} W = {x->30; y->40} })");
  auto total = Tm(small.structure, "sum{(i, W(i)) | true}");
  try {
    EvalTerm(small.structure, *total);
    FAIL("expected range error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kRange);
    CHECK(std::string(e.what()).find("range exceeded") != std::string::npos);
  }
}

TEST_CASE("unknown equality stays unknown") {
  PartialStructure sw = Software().structure;
  CHECK(EvalFormula(sw, *F(sw, "Cost = Cost")) == Truth::kUnknown);
}

TEST_CASE("query") {
  PartialStructure s1 = PrinterS1(), s2 = PrinterS2();
  auto e = ParseSetExpression("{p, c | PrinterConnection(p,c)}", s1.domains());
  CHECK(Rows(Query(s1, e)) == std::set<std::string>{"(P1,USB)"});
  CHECK(Query(s1, ParseSetExpression("{x[printer] | false}", s1.domains())).empty());
  auto some = ParseSetExpression("{p[printer] | ?c: PrinterConnection(p,c)}", s2.domains());
  CHECK(Rows(Query(s2, some)) == std::set<std::string>{"(P1)", "(P2)"});
}

TEST_CASE("associated theory") {
  PartialStructure s0 = PrinterS0(), s1 = PrinterS1(), s2 = PrinterS2();
  CHECK(AssociatedTheory(s0).sentences.empty());
  Theory t1 = AssociatedTheory(s1);
  REQUIRE(t1.sentences.size() == 2);
  std::set<std::string> text;
  for (const auto& s : t1.sentences) text.insert(ToString(*s.formula));
  CHECK(text == std::set<std::string>{"PrinterConnection(P1,USB)", "~PrinterConnection(P2,LAN)"});
  Theory t2 = AssociatedTheory(s2);
  CHECK(t2.sentences.size() == 4);
  auto models = testing::BruteModels(testing::Sentences(t2), s0);
  REQUIRE(models.size() == 1);
  CHECK(models[0] == s2);
}

TEST_CASE("open terms universe") {
  PartialStructure sw = Software().structure;
  CHECK(Names(sw, OpenTermsUniverse(sw)) ==
        std::set<std::string>{"Requester", "Install(Windows)", "Install(Linux)",
                              "Install(Office)", "Install(LaTeX)", "Install(DualBoot)", "Cost"});
  CHECK(OpenTermsUniverse(PrinterS2()).empty());
  PartialStructure s1 = PrinterS1();
  CHECK(Names(s1, OpenTermsUniverse(s1)) ==
        std::set<std::string>{"PrinterConnection(P1,LAN)", "PrinterConnection(P2,USB)"});
}

TEST_CASE("precision order is a partial order on random tables") {
  std::mt19937_64 rng(11);
  PartialStructure shape = Load(kSmallSource).structure;
  for (int i = 0; i < 200; ++i) {
    PartialStructure t = RandomTotal(shape, rng);
    PartialStructure b = RandomCoarsen(t, 0.4, rng);
    PartialStructure a = RandomCoarsen(b, 0.4, rng);
    PartialStructure other = RandomCoarsen(RandomTotal(shape, rng), 0.5, rng);
    CHECK(PrecisionLeq(a, a));
    CHECK(PrecisionLeq(a, b));
    CHECK(PrecisionLeq(b, t));
    CHECK(PrecisionLeq(a, t));
    if (PrecisionLeq(a, other) && PrecisionLeq(other, a)) CHECK(a == other);
    if (PrecisionLeq(b, other)) CHECK(PrecisionLeq(a, other));
  }
}

TEST_CASE("extend then erase restores the structure") {
  std::mt19937_64 rng(12);
  PartialStructure shape = Load(kSmallSource).structure;
  for (int i = 0; i < 200; ++i) {
    PartialStructure t = RandomTotal(shape, rng);
    PartialStructure s = RandomCoarsen(t, 0.6, rng);
    for (const DomainTerm& term : OpenTermsUniverse(s)) {
      bool fresh = true;
      const auto& values = s.domains().ResultDomain(term.symbol);
      std::size_t tuple = s.TupleIndexOrThrow(term);
      for (std::size_t v = 0; v < values.size(); ++v) {
        if (s.ValueTruth(term.symbol, tuple, v) != Truth::kUnknown) fresh = false;
      }
      if (!fresh) continue;
      Assignment a{term, *t.ForcedValue(term)};
      CHECK(Erase(Extend(s, a), term) == s);
    }
  }
}

// Random formulas from generated specifications over random refinements.
TEST_CASE("Kleene monotonicity and classical agreement") {
  std::mt19937_64 rng(13);
  int compared = 0;
  for (int i = 0; i < 150; ++i) {
    Problem p = Load(testing::GenerateInstance(rng).source);
    std::vector<PartialStructure> totals;
    testing::ForEachExtension(p.structure, [&](const PartialStructure& t) {
      totals.push_back(t);
      return totals.size() < 64;
    });
    std::shuffle(totals.begin(), totals.end(), rng);
    if (totals.size() > 4) totals.erase(totals.begin() + 4, totals.end());
    for (const PartialStructure& t : totals) {
      PartialStructure mid = RandomCoarsen(t, 0.3, rng);
      PartialStructure low = RandomCoarsen(mid, 0.3, rng);
      for (const Sentence& s : p.theory.sentences) {
        bool classical = false;
        try {
          classical = testing::ClassicalHolds(t, *s.formula);
        } catch (const Error&) {
          CHECK_THROWS_AS(EvalFormula(t, *s.formula), Error);
          continue;
        }
        CHECK(EvalFormula(t, *s.formula) == ToTruth(classical));
        ++compared;
        try {
          Truth lo = EvalFormula(low, *s.formula);
          Truth mi = EvalFormula(mid, *s.formula);
          CHECK(PrecisionLeq(lo, mi));
          CHECK(PrecisionLeq(mi, ToTruth(classical)));
        } catch (const Error&) {
        }
      }
    }
  }
  CHECK(compared > 500);
}

TEST_CASE("associated theory round trip on small structures") {
  std::mt19937_64 rng(14);
  PartialStructure shape = Load(kSmallSource).structure;
  PartialStructure domain = DomainStructure(shape);
  for (int i = 0; i < 12; ++i) {
    PartialStructure s = RandomCoarsen(RandomTotal(shape, rng), 0.5, rng);
    auto formulas = testing::Sentences(AssociatedTheory(s));
    auto models = testing::BruteModels(formulas, domain);
    CHECK(models.size() == testing::NumExtensions(s));
    for (const auto& m : models) CHECK(PrecisionLeq(s, m));
  }
}

}  // namespace
}  // namespace cfgkb::unit

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
#include <set>

#include "cfgkb/configure.hpp"
#include "cfgkb/error.hpp"
#include "cfgkb/infer.hpp"
#include "doctest.h"
#include "fixtures.hpp"
#include "oracle.hpp"

namespace cfgkb::unit {
namespace {

std::shared_ptr<const KnowledgeBase> SoftwareKb() {
  static auto kb = KnowledgeBase::Create(Software());
  return kb;
}

Configurator Session(const std::vector<std::string>& choices) {
  auto kb = SoftwareKb();
  std::vector<Assignment> parsed;
  for (const auto& c : choices) parsed.push_back(A(kb->base, c));
  return Configurator(kb, parsed);
}

std::set<std::string> Names(const Vocabulary& voc, const ParameterSet& terms) {
  std::set<std::string> out;
  for (const auto& t : terms) out.insert(ToString(voc, t));
  return out;
}

std::set<std::string> Values(const std::vector<Element>& values) {
  std::set<std::string> out;
  for (const auto& v : values) out.insert(v.ToString());
  return out;
}

std::set<std::string> Assigned(const Vocabulary& voc, const std::vector<Assignment>& as) {
  std::set<std::string> out;
  for (const auto& a : as) out.insert(ToString(voc, a));
  return out;
}

std::int64_t CostOf(const PartialStructure& s) {
  return s.ForcedValue(T(s, "Cost"))->integer();
}

ErrorKind KindOf(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::kInternal;
}

const std::vector<std::string> kSubtask7 = {"Requester=Secretary", "Install(Office)=true",
                                            "Install(Linux)=true"};

TEST_CASE("modelexpand") {
  Problem printer = Printer();
  auto m = ModelExpand(printer.theory, printer.structure);
  REQUIRE(m.has_value());
  CHECK(*m == PrinterS2());

  Problem p = Software();
  auto model = ModelExpand(p.theory, With(p.structure, {"Requester=Secretary",
                                                        "Install(Office)=true"}));
  REQUIRE(model.has_value());
  CHECK(model->IsTotal());
  CHECK(model->Value(A(p.structure, "Install(Windows)=true")) == Truth::kTrue);
  CHECK(ModelCheck(p.theory, *model));
  CHECK_FALSE(ModelExpand(p.theory, With(p.structure, kSubtask7)).has_value());
}

TEST_CASE("modelcheck") {
  Problem p = Software();
  std::vector<std::string> cheapest = {"Requester=Secretary", "Install(Windows)=true",
                                       "Install(Office)=true", "Install(Linux)=false",
                                       "Install(LaTeX)=false", "Install(DualBoot)=false"};
  auto with_cost = [&](const std::string& cost) {
    auto all = cheapest;
    all.push_back("Cost=" + cost);
    return With(p.structure, all);
  };
  CHECK(ModelCheck(p.theory, with_cost("90")));
  CHECK_FALSE(ModelCheck(p.theory, with_cost("80")));
  Problem printer = Printer();
  CHECK(ModelCheck(printer.theory, PrinterS2()));
  try {
    ModelCheck(p.theory, p.structure);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("structure not total") != std::string::npos);
  }
}

TEST_CASE("minimize") {
  Problem p = Software();
  DomainTerm cost = T(p.structure, "Cost");
  auto m = Minimize(p.theory, With(p.structure, {"Requester=Secretary", "Install(Office)=true"}),
                    cost);
  REQUIRE(m.has_value());
  CHECK(CostOf(*m) == 90);
  CHECK(m->Value(A(p.structure, "Install(DualBoot)=true")) == Truth::kFalse);
  CHECK(ModelCheck(p.theory, *m));
  auto manager = Minimize(p.theory, With(p.structure, {"Requester=Manager"}), cost);
  REQUIRE(manager.has_value());
  CHECK(CostOf(*manager) == 20);
  auto fixed = Minimize(p.theory, With(p.structure, {"Cost=130"}), cost);
  REQUIRE(fixed.has_value());
  CHECK(CostOf(*fixed) == 130);
  CHECK_THROWS_AS(Minimize(p.theory, p.structure, T(p.structure, "Requester")), Error);
}

TEST_CASE("propagate") {
  Problem p = Software();
  auto r = Propagate(p.theory, With(p.structure, {"Requester=Secretary", "Install(Office)=true"}));
  CHECK(r.structure.Value(A(p.structure, "Install(Windows)=true")) == Truth::kTrue);
  CHECK(r.structure.Value(A(p.structure, "Install(Linux)=true")) == Truth::kFalse);
  CHECK(r.structure.Value(A(p.structure, "Install(LaTeX)=true")) == Truth::kFalse);
  for (const auto& e : r.derived) CHECK(e.truth != Truth::kUnknown);

  auto w = Propagate(p.theory, With(p.structure, {"Requester=Secretary", "Install(Windows)=true"}));
  std::set<std::string> derived;
  for (const auto& e : w.derived) {
    derived.insert(ToString(p.structure.vocabulary(), e.term) + "=" + e.value.ToString() + ":" +
                   TruthName(e.truth));
  }
  CHECK(derived.count("Install(LaTeX)=true:false") == 1);
  CHECK(derived.count("Install(Linux)=true:false") == 1);

  Theory empty;
  empty.typed = true;
  auto same = Propagate(empty, p.structure);
  CHECK(same.structure == p.structure);
  CHECK(same.derived.empty());

  auto again = Propagate(p.theory, r.structure);
  CHECK(again.structure == r.structure);
  CHECK(again.derived.empty());

  try {
    Propagate(p.theory, With(p.structure, kSubtask7));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kInconsistent);
    CHECK(std::string(e.what()).find("inconsistent state") != std::string::npos);
  }
}

TEST_CASE("open terms") {
  Configurator c = Session({"Requester=Manager", "Install(Windows)=true", "Install(Linux)=false"});
  CHECK(Names(*c.kb().vocabulary, c.OpenTerms()) ==
        std::set<std::string>{"Install(Office)", "Install(DualBoot)", "Cost"});
  CHECK(Session({}).OpenTerms().size() == 7);
  Problem printer = Printer();
  CHECK(GetOpenTerms(printer.theory, PrinterS2()).empty());
}

TEST_CASE("consistent values") {
  const Vocabulary& voc = *SoftwareKb()->vocabulary;
  PartialStructure base = SoftwareKb()->base;
  CHECK(Values(Session({}).ConsistentValues(T(base, "Requester"))) ==
        std::set<std::string>{"Secretary", "Manager"});
  CHECK(Values(Session({"Requester=Secretary", "Install(Linux)=true", "Install(Windows)=false"})
                   .ConsistentValues(T(base, "Cost"))) ==
        std::set<std::string>{"20", "30", "60", "70"});
  CHECK(Values(Session({"Install(Windows)=true", "Install(LaTeX)=true"})
                   .ConsistentValues(T(base, "Requester"))) == std::set<std::string>{"Manager"});
  Configurator s = Session({"Requester=Secretary"});
  for (const DomainTerm& t : s.OpenTerms()) {
    auto values = s.ConsistentValues(t);
    CHECK(values.size() >= 2);
    for (const Element& v : s.kb().base.domains().ResultDomain(t.symbol)) {
      bool listed = std::find(values.begin(), values.end(), v) != values.end();
      CHECK_MESSAGE(s.CheckConsistency(t, v) == listed, ToString(voc, t));
    }
  }
}

TEST_CASE("consequences") {
  Configurator s = Session({"Requester=Secretary"});
  PartialStructure base = s.kb().base;
  const Vocabulary& voc = base.vocabulary();
  ConsequenceSet c = s.Consequences(T(base, "Install(Windows)"), Element::Boolean(true));
  auto pos = Assigned(voc, c.positive);
  auto neg = Assigned(voc, c.negative);
  CHECK(pos.count("Install(LaTeX)=false") == 1);
  CHECK(neg.count("Install(LaTeX)=true") == 1);
  for (const auto& x : pos) CHECK(neg.count(x) == 0);
  for (const auto& a : c.positive) CHECK_FALSE(a.term == T(base, "Install(Windows)"));

  Problem printer = Printer();
  Theory empty;
  empty.typed = true;
  ConsequenceSet none = Consequences(empty, PrinterS1(), T(PrinterS1(), "PrinterConnection(P2,USB)"),
                                     Element::Boolean(true));
  CHECK(none.positive.empty());
  CHECK(none.negative.empty());
}

TEST_CASE("check consistency") {
  PartialStructure base = SoftwareKb()->base;
  Configurator s = Session({"Install(Windows)=true", "Install(LaTeX)=true"});
  CHECK_FALSE(s.CheckConsistency(T(base, "Requester"), Element::Constant("Secretary")));
  CHECK(s.CheckConsistency(T(base, "Requester"), Element::Constant("Manager")));
  Theory empty;
  empty.typed = true;
  CHECK(CheckConsistency(empty, PrinterS1(), T(PrinterS1(), "PrinterConnection(P2,USB)"),
                         Element::Boolean(false)));
}

TEST_CASE("autocomplete") {
  Configurator s = Session({"Requester=Secretary", "Install(Office)=true"});
  auto any = s.Autocomplete(std::nullopt);
  REQUIRE(any.has_value());
  CHECK(any->IsTotal());
  CHECK(ModelCheck(s.kb().theory, *any));
  auto best = s.Autocomplete(T(s.kb().base, "Cost"));
  REQUIRE(best.has_value());
  CHECK(CostOf(*best) == 90);
  Problem printer = Printer();
  auto same = Autocomplete(printer.theory, PrinterS2(), std::nullopt);
  REQUIRE(same.has_value());
  CHECK(*same == PrinterS2());
}

TEST_CASE("minimal unsat theory") {
  Configurator s = Session(kSubtask7);
  const Vocabulary& voc = *s.kb().vocabulary;
  Explanation e = s.MinimalUnsatTheory();
  std::set<std::string> ids;
  for (const auto& x : e.sentences) ids.insert(x.id);
  CHECK(ids == std::set<std::string>{"prereq[Office,Windows]", "costdef", "budget"});
  CHECK(Assigned(voc, e.choices) ==
        std::set<std::string>{"Requester=Secretary", "Install(Office)=true",
                              "Install(Linux)=true"});
  std::string why;
  CHECK_MESSAGE(testing::VerifyExplanation(s.kb(), e, {}, &why), why);

  std::vector<std::string> all = {"prereq", "costdef", "budget", "needos", "dual"};
  Explanation b = s.MinimalUnsatTheory(all);
  CHECK(b.sentences.empty());
  CHECK(b.background == all);
  CHECK(Assigned(voc, b.choices) ==
        std::set<std::string>{"Requester=Secretary", "Install(Office)=true",
                              "Install(Linux)=true"});
  CHECK_MESSAGE(testing::VerifyExplanation(s.kb(), b, all, &why), why);

  CHECK(KindOf([] { Session({"Requester=Secretary"}).MinimalUnsatTheory(); }) ==
        ErrorKind::kConsistent);
  CHECK(KindOf([&] { s.MinimalUnsatTheory({"nosuch"}); }) == ErrorKind::kDomain);

  Problem bad = Load(R"(
    vocabulary { P. Q. }
    theory { a: P. b: ~P. c: Q. })");
  CHECK(KindOf([&] { MinimalUnsatTheory(bad.theory, bad.structure, {"a", "b"}); }) ==
        ErrorKind::kInconsistent);
}

std::set<std::string> Elements(const Vocabulary& voc, const Explanation& e) {
  std::set<std::string> out;
  for (const auto& x : e.sentences) out.insert(x.id);
  for (const auto& x : e.data) out.insert("data:" + ToString(voc, x));
  for (const auto& x : e.choices) out.insert("choice:" + ToString(voc, x));
  return out;
}

TEST_CASE("enumerated explanations") {
  Configurator s = Session(kSubtask7);
  const Vocabulary& voc = *s.kb().vocabulary;
  auto all = s.MinimalUnsatTheories({}, 20);
  REQUIRE_FALSE(all.empty());
  CHECK(Elements(voc, all[0]) == Elements(voc, s.MinimalUnsatTheory()));
  for (std::size_t i = 0; i < all.size(); ++i) {
    std::string why;
    CHECK_MESSAGE(testing::VerifyExplanation(s.kb(), all[i], {}, &why), why);
    for (std::size_t j = 0; j < all.size(); ++j) {
      if (i == j) continue;
      auto a = Elements(voc, all[i]), b = Elements(voc, all[j]);
      CHECK_FALSE(std::includes(b.begin(), b.end(), a.begin(), a.end()));
    }
  }
  CHECK(s.MinimalUnsatTheories({}, 1).size() == 1);

  Problem two = Load(R"(
    vocabulary { P. Q. }
    theory { a: P. b: ~P. c: Q. d: ~Q. })");
  auto pairs = MinimalUnsatTheories(two.theory, two.structure, {}, 10);
  REQUIRE(pairs.size() == 2);
  std::set<std::set<std::string>> found;
  for (const auto& e : pairs) {
    std::set<std::string> labels;
    for (const auto& x : e.sentences) labels.insert(x.label);
    found.insert(labels);
  }
  CHECK(found == std::set<std::set<std::string>>{{"a", "b"}, {"c", "d"}});
  auto guarded = MinimalUnsatTheories(two.theory, two.structure, {"a", "c"}, 10);
  REQUIRE(guarded.size() == 2);
  for (const auto& e : guarded) CHECK(e.sentences.size() == 1);
}

TEST_CASE("minimum unsat theory") {
  Configurator s = Session(kSubtask7);
  Explanation minimal = s.MinimalUnsatTheory();
  Explanation minimum = s.MinimumUnsatTheory();
  CHECK(minimum.size() <= minimal.size());
  std::string why;
  CHECK_MESSAGE(testing::VerifyExplanation(s.kb(), minimum, {}, &why), why);
  CHECK(minimum.size() == 6);

  Problem pair = Load(R"(
    vocabulary { P. Q. R. }
    theory { a: P | Q. b: ~P. c: R. d: ~R. e: Q | R. })");
  Explanation e = MinimumUnsatTheory(pair.theory, pair.structure, {});
  std::set<std::string> ids;
  for (const auto& x : e.sentences) ids.insert(x.label);
  CHECK(ids == std::set<std::string>{"c", "d"});

  ConfigOptions tight;
  tight.minimum_core_limit = 2;
  Configurator limited(s.kb_ptr(), s.choices(), tight);
  CHECK(KindOf([&] { limited.MinimumUnsatTheory(); }) == ErrorKind::kLimit);
}

TEST_CASE("unsat substructure") {
  Configurator s = Session(kSubtask7);
  PartialStructure sub = s.UnsatSubstructure();
  const KnowledgeBase& kb = s.kb();
  CHECK(PrecisionLeq(sub, s.structure()));
  for (const std::string& c : kSubtask7) CHECK(sub.Value(A(sub, c)) == Truth::kTrue);
  CHECK_FALSE(ModelExpand(kb.theory, sub).has_value());
  for (const std::string& c : kSubtask7) {
    PartialStructure without = Erase(sub, A(sub, c).term);
    CHECK(ModelExpand(kb.theory, without).has_value());
  }

  Problem f = Load(R"(
    vocabulary { type a; P(a). }
    theory { never: false. }
    structure { a = {x; y} P = {x} })");
  PartialStructure empty = UnsatSubstructure(f.theory, f.structure);
  CHECK(DecidedLiterals(empty).empty());
  CHECK(KindOf([] { Session({}).UnsatSubstructure(); }) == ErrorKind::kConsistent);
}

TEST_CASE("backtrack suggestions") {
  Configurator s = Session({"Requester=Secretary", "Install(Windows)=true"});
  PartialStructure base = s.kb().base;
  auto r = s.BacktrackSuggest(T(base, "Install(LaTeX)"), Element::Boolean(true));
  REQUIRE(r.size() == 1);
  CHECK(ToString(base.vocabulary(), r[0]) == "Requester=Secretary");
  Configurator retracted = s.Retract(r[0].term);
  CHECK(retracted.CheckConsistency(T(base, "Install(LaTeX)"), Element::Boolean(true)));

  Configurator d = Session({"Requester=Secretary"});
  CHECK(KindOf([&] { d.BacktrackSuggest(T(base, "PriceOf(Windows)"), Element::Integer(5)); }) ==
        ErrorKind::kConflict);
}

TEST_CASE("retract") {
  PartialStructure base = SoftwareKb()->base;
  Configurator one = Session({"Requester=Secretary"});
  CHECK(one.Retract(T(base, "Requester")).structure() == base);

  Configurator three = Session({"Requester=Manager", "Install(Windows)=true",
                                "Install(Office)=true"});
  Configurator middle = three.Retract(T(base, "Install(Windows)"));
  CHECK(middle.choices().size() == 2);
  CHECK(middle.Choose(A(base, "Install(Windows)=true")).structure() == three.structure());

  auto [s, rest] = Retract(base, three.choices(), T(base, "Install(Office)"));
  CHECK(rest.size() == 2);
  CHECK(s == Session({"Requester=Manager", "Install(Windows)=true"}).structure());
  CHECK(KindOf([&] { Retract(base, three.choices(), T(base, "PriceOf(Windows)")); }) ==
        ErrorKind::kDomain);
  CHECK(KindOf([&] { Retract(base, three.choices(), T(base, "Install(LaTeX)")); }) ==
        ErrorKind::kDomain);
  CHECK(KindOf([&] { Session({"Requester=Manager", "Requester=Secretary"}); }) ==
        ErrorKind::kConflict);
}

}  // namespace
}  // namespace cfgkb::unit

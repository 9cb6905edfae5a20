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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cfgkb/configure.hpp"
#include "cfgkb/ground.hpp"
#include "cfgkb/infer.hpp"
#include "cfgkb/lang.hpp"
#include "cfgkb/server.hpp"

namespace py = pybind11;

namespace cfgkb {
namespace {

using Pair = std::pair<std::string, std::string>;

class PySession {
 public:
  PySession(std::shared_ptr<const KnowledgeBase> kb, std::vector<Assignment> choices,
            std::uint64_t seed)
      : seed_(seed), session_(kb, std::move(choices), Options(seed)) {}

  const Domains& domains() const { return session_.kb().base.domains(); }
  const Vocabulary& voc() const { return *session_.kb().vocabulary; }

  DomainTerm Term(const std::string& text) const { return ParseTermPath(text, domains()); }
  Assignment Choice(const std::string& term, const std::string& value) const {
    DomainTerm t = Term(term);
    return {t, ParseValue(value, t, domains())};
  }

  std::vector<Pair> Pairs(const std::vector<Assignment>& as) const {
    std::vector<Pair> out;
    for (const Assignment& a : as) out.emplace_back(ToString(voc(), a.term), a.value.ToString());
    return out;
  }

  std::optional<std::map<std::string, std::string>> ModelMap(
      const std::optional<PartialStructure>& model) const {
    if (!model) return std::nullopt;
    std::map<std::string, std::string> out;
    for (const DomainTerm& t : OpenTermsUniverse(session_.kb().base)) {
      if (auto v = model->ForcedValue(t)) out[ToString(voc(), t)] = v->ToString();
    }
    return out;
  }

  static ConfigOptions Options(std::uint64_t seed) {
    ConfigOptions o;
    o.infer.seed = seed;
    return o;
  }

  std::uint64_t seed_;
  Configurator session_;
};

class PyKnowledgeBase {
 public:
  explicit PyKnowledgeBase(const std::string& source) : kb_(KnowledgeBase::Create(Load(source))) {}

  PySession Session(const std::vector<std::string>& choices, std::uint64_t seed) const {
    std::vector<Assignment> parsed;
    for (const std::string& c : choices) parsed.push_back(ParseAssignment(c, kb_->base.domains()));
    return PySession(kb_, std::move(parsed), seed);
  }

  std::shared_ptr<const KnowledgeBase> kb_;
};

py::dict ExplanationDict(const Vocabulary& voc, const Explanation& e) {
  return py::module_::import("json").attr("loads")(ToJson(voc, e).dump());
}

}  // namespace
}  // namespace cfgkb

PYBIND11_MODULE(_core, m) {
  using namespace cfgkb;
  m.doc() = "Knowledge-base configuration engine";

  py::register_exception<Error>(m, "CfgkbError", PyExc_RuntimeError);

  py::class_<PySession>(m, "Session")
      .def("choices",
           [](const PySession& s) { return s.Pairs(s.session_.choices()); })
      .def("consistent", [](PySession& s) { return s.session_.Consistent(); })
      .def("open_terms",
           [](PySession& s) {
             std::vector<std::string> out;
             for (const DomainTerm& t : s.session_.OpenTerms()) out.push_back(ToString(s.voc(), t));
             return out;
           })
      .def("values",
           [](PySession& s, const std::string& term) {
             std::vector<std::string> out;
             for (const Element& v : s.session_.ConsistentValues(s.Term(term))) {
               out.push_back(v.ToString());
             }
             return out;
           },
           py::arg("term"))
      .def("consequences",
           [](PySession& s, const std::string& term, const std::string& value) {
             Assignment a = s.Choice(term, value);
             ConsequenceSet c = s.session_.Consequences(a.term, a.value);
             return std::make_pair(s.Pairs(c.positive), s.Pairs(c.negative));
           },
           py::arg("term"), py::arg("value"))
      .def("check",
           [](PySession& s, const std::string& term, const std::string& value) {
             Assignment a = s.Choice(term, value);
             return s.session_.CheckConsistency(a.term, a.value);
           },
           py::arg("term"), py::arg("value"))
      .def("expand", [](PySession& s) { return s.ModelMap(s.session_.Autocomplete(std::nullopt)); })
      .def("minimize",
           [](PySession& s, const std::string& objective) {
             return s.ModelMap(s.session_.Autocomplete(s.Term(objective)));
           },
           py::arg("objective"))
      .def("propagate",
           [](PySession& s) {
             std::vector<std::tuple<std::string, std::string, bool>> out;
             for (const DerivedEntry& e : s.session_.Propagate().derived) {
               out.emplace_back(ToString(s.voc(), e.term), e.value.ToString(),
                                e.truth == Truth::kTrue);
             }
             return out;
           })
      .def("structure", [](const PySession& s) { return SerializeStructure(s.session_.structure()); })
      .def("explain",
           [](PySession& s, const std::vector<std::string>& background, bool minimum) {
             Explanation e = minimum ? s.session_.MinimumUnsatTheory(background)
                                     : s.session_.MinimalUnsatTheory(background);
             return ExplanationDict(s.voc(), e);
           },
           py::arg("background") = std::vector<std::string>{}, py::arg("minimum") = false)
      .def("explanations",
           [](PySession& s, std::size_t limit, const std::vector<std::string>& background) {
             py::list out;
             for (const Explanation& e : s.session_.MinimalUnsatTheories(background, limit)) {
               out.append(ExplanationDict(s.voc(), e));
             }
             return out;
           },
           py::arg("limit"), py::arg("background") = std::vector<std::string>{})
      .def("unsat_substructure",
           [](PySession& s) { return SerializeStructure(s.session_.UnsatSubstructure()); })
      .def("backtrack",
           [](PySession& s, const std::string& term, const std::string& value) {
             Assignment a = s.Choice(term, value);
             return s.Pairs(s.session_.BacktrackSuggest(a.term, a.value));
           },
           py::arg("term"), py::arg("value"))
      .def("choose",
           [](const PySession& s, const std::string& term, const std::string& value) {
             std::vector<Assignment> next = s.session_.choices();
             next.push_back(s.Choice(term, value));
             return PySession(s.session_.kb_ptr(), std::move(next), s.seed_);
           },
           py::arg("term"), py::arg("value"))
      .def("retract",
           [](const PySession& s, const std::string& term) {
             auto [structure, remaining] =
                 Retract(s.session_.kb().base, s.session_.choices(), s.Term(term));
             return PySession(s.session_.kb_ptr(), std::move(remaining), s.seed_);
           },
           py::arg("term"));

  py::class_<PyKnowledgeBase>(m, "KnowledgeBase")
      .def(py::init<const std::string&>(), py::arg("source"))
      .def("session", &PyKnowledgeBase::Session, py::arg("choices") = std::vector<std::string>{},
           py::arg("seed") = 0)
      .def("labels",
           [](const PyKnowledgeBase& k) {
             std::vector<std::string> out;
             for (const Sentence& s : k.kb_->theory.sentences) out.push_back(s.label);
             return out;
           })
      .def("structure", [](const PyKnowledgeBase& k) { return SerializeStructure(k.kb_->base); })
      .def("dimacs", [](const PyKnowledgeBase& k) { return ToDimacs(*k.kb_->ground); })
      .def("model_check",
           [](const PyKnowledgeBase& k, const std::string& structure) {
             return ModelCheck(k.kb_->theory, ParseStructure(structure, k.kb_->vocabulary));
           },
           py::arg("structure"));

  py::class_<Service>(m, "Service")
      .def(py::init([](const std::string& presets, double timeout) {
             return std::make_unique<Service>(ServiceOptions{presets, timeout});
           }),
           py::arg("presets") = "", py::arg("timeout") = 10.0)
      .def("handle", &Service::HandleText, py::arg("request"),
           py::call_guard<py::gil_scoped_release>())
      .def("presets",
           [](const Service& s) { return s.Presets().at("presets").get<std::vector<std::string>>(); })
      .def("add_preset", &Service::AddPreset, py::arg("name"), py::arg("source"));
}

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

#include <chrono>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cfgkb/infer.hpp"
#include "cfgkb/lang.hpp"
#include "cfgkb/server.hpp"

namespace cfgkb {

using nlohmann::json;

namespace {

std::string ReadFile(const std::filesystem::path& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const json& Require(const json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) {
    throw Error(ErrorKind::kUsage, std::string("missing field '") + key + "'");
  }
  return obj.at(key);
}

std::string ValueText(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  throw Error(ErrorKind::kUsage, "value must be a string, boolean or integer");
}

Assignment ParseChoice(const json& c, const Domains& d) {
  DomainTerm term = ParseTermPath(Require(c, "term").get<std::string>(), d);
  return {term, ParseValue(ValueText(Require(c, "value")), term, d)};
}

json ErrorJson(const Error& e) {
  json out{{"kind", ErrorKindName(e.kind())}, {"message", e.what()}};
  if (!e.diagnostics().empty()) {
    json diags = json::array();
    for (const Diagnostic& dg : e.diagnostics()) {
      diags.push_back({{"line", dg.loc.line}, {"column", dg.loc.column}, {"message", dg.message}});
    }
    out["diagnostics"] = diags;
  }
  return out;
}

json TermsJson(const Vocabulary& voc, const ParameterSet& terms) {
  json out = json::array();
  for (const DomainTerm& t : terms) out.push_back(ToString(voc, t));
  return out;
}

json AssignmentsJson(const Vocabulary& voc, const std::vector<Assignment>& as) {
  json out = json::array();
  for (const Assignment& a : as) out.push_back(ToJson(voc, a));
  return out;
}

json ModelJson(const KnowledgeBase& kb, const PartialStructure& model) {
  std::vector<Assignment> values;
  for (const DomainTerm& t : OpenTermsUniverse(kb.base)) {
    if (auto v = model.ForcedValue(t)) values.push_back({t, *v});
  }
  return {{"assignments", AssignmentsJson(*kb.vocabulary, values)},
          {"structure", SerializeStructure(model)}};
}

struct Unsat {
  json explanation;
};

json ExplainSession(Configurator& session) {
  return ToJson(*session.kb().vocabulary, session.MinimalUnsatTheory({}));
}

void RequireConsistent(Configurator& session) {
  if (!session.Consistent()) throw Unsat{ExplainSession(session)};
}

json Dispatch(const std::string& op, const json& args, const json& request,
              Configurator& session) {
  const KnowledgeBase& kb = session.kb();
  const Vocabulary& voc = *kb.vocabulary;
  const Domains& d = kb.base.domains();
  auto term_arg = [&]() {
    return ParseTermPath(Require(args, "term").get<std::string>(), d);
  };
  auto choice_arg = [&]() { return ParseChoice(args, d); };

  if (op == "open_terms") {
    RequireConsistent(session);
    return {{"terms", TermsJson(voc, session.OpenTerms())}};
  }
  if (op == "values") {
    RequireConsistent(session);
    DomainTerm t = term_arg();
    json values = json::array();
    for (const Element& v : session.ConsistentValues(t)) values.push_back(v.ToString());
    return {{"term", ToString(voc, t)}, {"values", values}};
  }
  if (op == "consequences") {
    RequireConsistent(session);
    Assignment a = choice_arg();
    if (!session.CheckConsistency(a.term, a.value)) {
      Configurator hypothetical = session.Choose(a);
      throw Unsat{ExplainSession(hypothetical)};
    }
    ConsequenceSet c = session.Consequences(a.term, a.value);
    return {{"positive", AssignmentsJson(voc, c.positive)},
            {"negative", AssignmentsJson(voc, c.negative)}};
  }
  if (op == "check") {
    if (args.is_object() && args.contains("term")) {
      Assignment a = choice_arg();
      return {{"consistent", session.CheckConsistency(a.term, a.value)}};
    }
    return {{"consistent", session.Consistent()}};
  }
  if (op == "modelcheck") {
    PartialStructure s =
        ParseStructure(Require(args, "structure").get<std::string>(), kb.vocabulary);
    return {{"model", ModelCheck(kb.theory, s)}};
  }
  if (op == "expand" || op == "minimize") {
    std::optional<DomainTerm> objective;
    if (op == "minimize") {
      const json& src = args.is_object() && args.contains("objective") ? args : request;
      objective = ParseTermPath(Require(src, "objective").get<std::string>(), d);
    }
    std::optional<PartialStructure> model = session.Autocomplete(objective);
    if (!model) throw Unsat{ExplainSession(session)};
    json out = ModelJson(kb, *model);
    if (objective) {
      out["objective"] = {{"term", ToString(voc, *objective)},
                          {"value", model->ForcedValue(*objective)->ToString()}};
    }
    return out;
  }
  if (op == "propagate") {
    RequireConsistent(session);
    PropagationResult r = session.Propagate();
    json derived = json::array();
    for (const DerivedEntry& e : r.derived) {
      derived.push_back({{"term", ToString(voc, e.term)},
                         {"value", e.value.ToString()},
                         {"truth", e.truth == Truth::kTrue}});
    }
    return {{"derived", derived}, {"structure", SerializeStructure(r.structure)}};
  }
  if (op == "explain") {
    std::string kind = "minimal";
    std::vector<std::string> background;
    std::size_t count = 0;
    if (args.is_object()) {
      if (args.contains("kind")) kind = args.at("kind").get<std::string>();
      if (args.contains("count")) count = args.at("count").get<std::size_t>();
      if (args.contains("background")) {
        background = args.at("background").get<std::vector<std::string>>();
      }
    }
    if (session.Consistent() && background.empty()) return {{"consistent", true}};
    if (kind == "substructure") {
      return {{"consistent", false}, {"structure", SerializeStructure(session.UnsatSubstructure())}};
    }
    if (kind == "minimal" && count > 0) {
      json all = json::array();
      for (const Explanation& e : session.MinimalUnsatTheories(background, count)) {
        all.push_back(ToJson(voc, e));
      }
      return {{"consistent", false}, {"explanation", all[0]}, {"explanations", all}};
    }
    Explanation e;
    if (kind == "minimal") {
      e = session.MinimalUnsatTheory(background);
    } else if (kind == "minimum") {
      e = session.MinimumUnsatTheory(background);
    } else {
      throw Error(ErrorKind::kUsage, "unknown explanation kind '" + kind + "'");
    }
    return {{"consistent", false}, {"explanation", ToJson(voc, e)}};
  }
  if (op == "backtrack") {
    Assignment a = choice_arg();
    return {{"retract", AssignmentsJson(voc, session.BacktrackSuggest(a.term, a.value))}};
  }
  throw Error(ErrorKind::kUsage, "unknown op '" + op + "'");
}

}  // namespace

json ToJson(const Vocabulary& voc, const Assignment& a) {
  return {{"term", ToString(voc, a.term)}, {"value", a.value.ToString()}};
}

json ToJson(const Vocabulary& voc, const Explanation& e) {
  json sentences = json::array();
  for (const ExplainedSentence& s : e.sentences) {
    sentences.push_back({{"id", s.id}, {"label", s.label}, {"formula", ToString(*s.formula)}});
  }
  json data = json::array();
  for (const ValueLiteral& l : e.data) {
    json item = ToJson(voc, l.atom);
    item["positive"] = l.positive;
    data.push_back(item);
  }
  return {{"sentences", sentences},
          {"data", data},
          {"choices", AssignmentsJson(voc, e.choices)},
          {"background", e.background}};
}

Service::Service(ServiceOptions options) : options_(std::move(options)) {
  if (options_.presets_dir.empty()) return;
  namespace fs = std::filesystem;
  if (!fs::is_directory(options_.presets_dir)) {
    throw Error(ErrorKind::kUsage, "presets directory '" + options_.presets_dir + "' not found");
  }
  for (const auto& entry : fs::directory_iterator(options_.presets_dir)) {
    if (entry.path().extension() == ".cfg") {
      AddPreset(entry.path().stem().string(), ReadFile(entry.path()));
    }
  }
}

void Service::AddPreset(const std::string& name, const std::string& source) {
  std::lock_guard<std::mutex> lock(mu_);
  presets_[name] = source;
}

json Service::Presets() const {
  std::lock_guard<std::mutex> lock(mu_);
  json out = json::array();
  for (const auto& [name, source] : presets_) out.push_back(name);
  return {{"presets", out}};
}

std::shared_ptr<const KnowledgeBase> Service::Resolve(const json& problem) {
  std::string source;
  if (problem.is_object() && problem.contains("preset")) {
    std::string name = problem.at("preset").get<std::string>();
    std::lock_guard<std::mutex> lock(mu_);
    auto it = presets_.find(name);
    if (it == presets_.end()) throw Error(ErrorKind::kUsage, "unknown preset '" + name + "'");
    source = it->second;
  } else {
    source = Require(problem, "source").get<std::string>();
  }
  std::size_t key = std::hash<std::string>{}(source);
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = cache_.find(key);
    if (it != cache_.end() && it->second.first == source) return it->second.second;
  }
  auto kb = KnowledgeBase::Create(Load(source));
  std::lock_guard<std::mutex> lock(mu_);
  cache_[key] = {source, kb};
  return kb;
}

json Service::Handle(const json& request) {
  auto start = std::chrono::steady_clock::now();
  json response;
  try {
    std::string op = Require(request, "op").get<std::string>();
    auto kb = Resolve(Require(request, "problem"));
    json args = request.value("args", json::object());
    std::vector<Assignment> choices;
    for (const json& c : request.value("choices", json::array())) {
      choices.push_back(ParseChoice(c, kb->base.domains()));
    }
    ConfigOptions options;
    if (request.contains("seed")) {
      options.infer.seed = request.at("seed").get<std::uint64_t>();
    } else {
      options.infer.seed = std::hash<std::string>{}(request.dump());
    }
    double timeout = request.value("timeout", options_.timeout_seconds);
    options.infer.deadline =
        start + std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                    std::chrono::duration<double>(timeout));
    Configurator session(kb, std::move(choices), options);
    try {
      response = {{"status", "ok"}, {"payload", Dispatch(op, args, request, session)}};
    } catch (const Unsat& u) {
      response = {{"status", "unsat"}, {"payload", {{"explanation", u.explanation}}}};
    }
  } catch (const Error& e) {
    response = {{"status", "error"}, {"error", ErrorJson(e)}};
  } catch (const json::exception& e) {
    response = {{"status", "error"},
                {"error", {{"kind", "usage"}, {"message", std::string("bad request: ") + e.what()}}}};
  }
  response["ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  return response;
}

std::string Service::HandleText(const std::string& body) {
  json request;
  try {
    request = json::parse(body);
  } catch (const json::exception& e) {
    return json{{"status", "error"},
                {"error", {{"kind", "syntax"}, {"message", std::string("invalid JSON: ") + e.what()}}},
                {"ms", 0}}
        .dump();
  }
  return Handle(request).dump();
}

}  // namespace cfgkb

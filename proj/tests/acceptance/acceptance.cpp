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
#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "../support/oracle.hpp"
#include "cfgkb/configure.hpp"
#include "cfgkb/infer.hpp"
#include "cfgkb/lang.hpp"
#include "cfgkb/sat.hpp"

namespace cfgkb {
namespace {

using testing::BruteModels;
using testing::BruteSatisfiable;
using Clock = std::chrono::steady_clock;

double Seconds(Clock::time_point since) {
  return std::chrono::duration<double>(Clock::now() - since).count();
}

// Collects failed checks of one criterion.
class Checks {
 public:
  void Expect(bool ok, const std::string& what) {
    ++total_;
    if (!ok && failures_.size() < 12) failures_.push_back(what);
    if (!ok) ++failed_;
  }
  bool ok() const { return failed_ == 0; }
  int total() const { return total_; }
  int failed() const { return failed_; }
  const std::vector<std::string>& failures() const { return failures_; }

 private:
  int total_ = 0;
  int failed_ = 0;
  std::vector<std::string> failures_;
};

bool Report(const std::string& name, const Checks& c, const std::string& summary) {
  std::cout << (c.ok() ? "PASS " : "FAIL ") << name << ": " << summary << " (" << c.total() - c.failed()
            << "/" << c.total() << " checks)\n";
  for (const std::string& f : c.failures()) std::cout << "    " << f << "\n";
  return c.ok();
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool SameStructure(const PartialStructure& a, const PartialStructure& b) {
  return PrecisionLeq(a, b) && PrecisionLeq(b, a);
}

// ---- golden suite -----------------------------------------------------------

bool GoldenSuite(const std::string& presets) {
  Checks c;
  Problem p = Load(ReadFile(presets + "/software.cfg"));
  auto kb = KnowledgeBase::Create(p);
  const Domains& d = p.structure.domains();
  const Vocabulary& voc = *p.vocabulary;
  auto choice = [&](const char* text) { return ParseAssignment(text, d); };
  auto term = [&](const char* text) { return ParseTermPath(text, d); };

  auto start = Clock::now();
  Configurator open(kb, {choice("Requester=Manager"), choice("Install(Windows)=true"),
                         choice("Install(Linux)=false")});
  std::set<std::string> terms;
  for (const DomainTerm& t : open.OpenTerms()) terms.insert(ToString(voc, t));
  double open_time = Seconds(start);
  c.Expect(terms == std::set<std::string>{"Install(Office)", "Install(DualBoot)", "Cost"},
           "open terms after Manager, Windows, not Linux");
  c.Expect(open_time < 1.0, "open terms runtime " + std::to_string(open_time) + " s");

  std::vector<Element> values = Configurator(kb, {}).ConsistentValues(term("Requester"));
  c.Expect(values.size() == 2 &&
               std::set<std::string>{values[0].ToString(), values[1].ToString()} ==
                   std::set<std::string>{"Secretary", "Manager"},
           "values of Requester");

  ConsequenceSet cs = Configurator(kb, {choice("Requester=Secretary")})
                          .Consequences(term("Install(Windows)"), Element::Boolean(true));
  Assignment latex_false = choice("Install(LaTeX)=false");
  Assignment latex_true = choice("Install(LaTeX)=true");
  c.Expect(std::find(cs.positive.begin(), cs.positive.end(), latex_false) != cs.positive.end(),
           "LaTeX false among positive consequences");
  c.Expect(std::find(cs.negative.begin(), cs.negative.end(), latex_true) != cs.negative.end(),
           "LaTeX true among negative consequences");

  Configurator both(kb, {choice("Install(Windows)=true"), choice("Install(LaTeX)=true")});
  c.Expect(!both.CheckConsistency(term("Requester"), choice("Requester=Secretary").value),
           "Secretary inconsistent with Windows and LaTeX");
  c.Expect(both.CheckConsistency(term("Requester"), choice("Requester=Manager").value),
           "Manager consistent with Windows and LaTeX");

  auto model = Configurator(kb, {choice("Requester=Secretary"), choice("Install(Office)=true")})
                   .Autocomplete(term("Cost"));
  c.Expect(model.has_value(), "minimize finds a model");
  if (model) {
    c.Expect(model->ForcedValue(term("Install(Windows)")) == Element::Boolean(true),
             "minimum installs Windows");
    c.Expect(model->ForcedValue(term("Install(DualBoot)")) == Element::Boolean(false),
             "minimum skips DualBoot");
    // Independent minimum: enumerate the models with the evaluator.
    PartialStructure s = Extend(Extend(p.structure, choice("Requester=Secretary")),
                                choice("Install(Office)=true"));
    std::optional<std::int64_t> best;
    for (const PartialStructure& m : BruteModels(testing::Sentences(p.theory), s)) {
      std::int64_t v = m.ForcedValue(term("Cost"))->integer();
      if (!best || v < *best) best = v;
    }
    c.Expect(best && *best == 90, "enumerated minimum is 90");
    c.Expect(best && model->ForcedValue(term("Cost"))->integer() == *best,
             "minimize equals enumerated minimum");
  }

  start = Clock::now();
  Configurator conflict(kb, {choice("Requester=Secretary"), choice("Install(Office)=true"),
                             choice("Install(Linux)=true")});
  Explanation e = conflict.MinimalUnsatTheory({});
  double mus_time = Seconds(start);
  std::set<std::string> ids;
  for (const ExplainedSentence& s : e.sentences) ids.insert(s.id);
  c.Expect(ids == std::set<std::string>{"prereq[Office,Windows]", "costdef", "budget"},
           "theory part of the minimal core");
  c.Expect(mus_time < 2.0, "minimal core runtime " + std::to_string(mus_time) + " s");
  std::string why;
  c.Expect(testing::VerifyExplanation(*kb, e, {}, &why), "core re-verification: " + why);
  std::ostringstream summary;
  summary << "open terms " << open_time << " s, minimal core " << mus_time << " s";
  return Report("golden software preset", c, summary.str());
}

// ---- oracle suite ------------------------------------------------------------

struct OracleStats {
  int instances = 0;
  int sat = 0;
  int unsat = 0;
  int explanations = 0;
  int backtracks = 0;
};

std::vector<Assignment> RandomChoices(std::mt19937_64& rng, const PartialStructure& s, int k) {
  ParameterSet open = OpenTermsUniverse(s);
  std::shuffle(open.begin(), open.end(), rng);
  std::vector<Assignment> out;
  PartialStructure current = s;
  const Domains& d = s.domains();
  for (const DomainTerm& t : open) {
    if (static_cast<int>(out.size()) >= k) break;
    std::vector<Element> candidates;
    std::size_t tuple = s.TupleIndexOrThrow(t);
    if (!s.vocabulary().symbol(t.symbol).is_function()) {
      candidates = {Element::Boolean(false), Element::Boolean(true)};
    } else {
      const auto& results = d.ResultDomain(t.symbol);
      for (std::size_t v = 0; v < results.size(); ++v) {
        if (s.ValueTruth(t.symbol, tuple, v) != Truth::kFalse) candidates.push_back(results[v]);
      }
    }
    Element v = candidates[std::uniform_int_distribution<std::size_t>(0, candidates.size() - 1)(rng)];
    current = Extend(current, {t, v});
    out.push_back({t, v});
  }
  return out;
}

void CheckSession(Checks& c, OracleStats& st, std::mt19937_64& rng, const std::string& tag,
                  const std::shared_ptr<const KnowledgeBase>& kb,
                  const std::vector<Assignment>& choices, const std::string& objective) {
  const Vocabulary& voc = *kb->vocabulary;
  ConfigOptions options;
  options.infer.seed = rng();
  Configurator session(kb, choices, options);
  const PartialStructure& current = session.structure();
  std::vector<FormulaPtr> sentences = testing::Sentences(kb->theory);
  std::vector<PartialStructure> models = BruteModels(sentences, current);

  c.Expect(session.Consistent() == !models.empty(), tag + ": consistency");
  std::optional<PartialStructure> expanded = session.Autocomplete(std::nullopt);
  c.Expect(expanded.has_value() == !models.empty(), tag + ": expand satisfiability");
  if (!models.empty()) {
    ++st.sat;
    if (expanded) {
      c.Expect(ModelCheck(kb->theory, *expanded), tag + ": expanded model fails modelcheck");
      c.Expect(PrecisionLeq(current, *expanded), tag + ": expanded model does not extend state");
    }
    PartialStructure meet = testing::Intersection(models, current);
    c.Expect(SameStructure(session.Propagate().structure, meet),
             tag + ": propagate differs from the model intersection");
    std::set<std::string> open_expected;
    for (const DomainTerm& t : OpenTermsUniverse(kb->base)) {
      if (!meet.ForcedValue(t)) open_expected.insert(ToString(voc, t));
      std::vector<Element> values = session.ConsistentValues(t);
      c.Expect(values == testing::Projection(models, t),
               tag + ": values of " + ToString(voc, t));
    }
    std::set<std::string> open_got;
    for (const DomainTerm& t : session.OpenTerms()) open_got.insert(ToString(voc, t));
    c.Expect(open_got == open_expected, tag + ": open terms");
    if (!objective.empty()) {
      DomainTerm obj = ParseTermPath(objective, kb->base.domains());
      std::optional<PartialStructure> best = session.Autocomplete(obj);
      std::int64_t expected = testing::Projection(models, obj).front().integer();
      c.Expect(best && best->ForcedValue(obj) && best->ForcedValue(obj)->integer() == expected,
               tag + ": minimize differs from enumerated minimum");
      if (best) c.Expect(ModelCheck(kb->theory, *best), tag + ": minimized model fails modelcheck");
    }
    ParameterSet open = session.OpenTerms();
    if (!open.empty()) {
      DomainTerm t = open[std::uniform_int_distribution<std::size_t>(0, open.size() - 1)(rng)];
      std::vector<Element> values = session.ConsistentValues(t);
      Element v = values[std::uniform_int_distribution<std::size_t>(0, values.size() - 1)(rng)];
      ConsequenceSet cs = session.Consequences(t, v);
      std::vector<PartialStructure> sub;
      for (const PartialStructure& m : models) {
        if (m.ForcedValue(t) == v) sub.push_back(m);
      }
      PartialStructure after = testing::Intersection(sub, current);
      std::set<std::string> pos;
      std::set<std::string> neg;
      const Domains& d = current.domains();
      for (const DomainTerm& q : open) {
        if (q == t) continue;
        std::size_t tuple = current.TupleIndexOrThrow(q);
        if (!voc.symbol(q.symbol).is_function()) {
          Truth truth = after.ValueTruth(q.symbol, tuple, 1);
          if (truth == Truth::kUnknown || meet.ValueTruth(q.symbol, tuple, 1) != Truth::kUnknown) {
            continue;
          }
          bool b = truth == Truth::kTrue;
          pos.insert(ToString(voc, Assignment{q, Element::Boolean(b)}));
          neg.insert(ToString(voc, Assignment{q, Element::Boolean(!b)}));
          continue;
        }
        const auto& results = d.ResultDomain(q.symbol);
        for (std::size_t k = 0; k < results.size(); ++k) {
          if (meet.ValueTruth(q.symbol, tuple, k) != Truth::kUnknown) continue;
          Truth truth = after.ValueTruth(q.symbol, tuple, k);
          if (truth == Truth::kTrue) pos.insert(ToString(voc, Assignment{q, results[k]}));
          if (truth == Truth::kFalse) neg.insert(ToString(voc, Assignment{q, results[k]}));
        }
      }
      std::set<std::string> got_pos;
      std::set<std::string> got_neg;
      for (const Assignment& a : cs.positive) got_pos.insert(ToString(voc, a));
      for (const Assignment& a : cs.negative) got_neg.insert(ToString(voc, a));
      c.Expect(got_pos == pos && got_neg == neg, tag + ": consequences of " + ToString(voc, Assignment{t, v}));
    }
    return;
  }

  ++st.unsat;
  bool threw = false;
  try {
    session.Propagate();
  } catch (const Error& e) {
    threw = e.kind() == ErrorKind::kInconsistent;
  }
  c.Expect(threw, tag + ": propagate must report inconsistency");

  std::string why;
  Explanation minimal = session.MinimalUnsatTheory({});
  ++st.explanations;
  c.Expect(testing::VerifyExplanation(*kb, minimal, {}, &why), tag + ": minimal explanation: " + why);
  try {
    Explanation minimum = session.MinimumUnsatTheory({});
    c.Expect(minimum.size() <= minimal.size(), tag + ": minimum larger than minimal");
    c.Expect(testing::VerifyExplanation(*kb, minimum, {}, &why), tag + ": minimum explanation: " + why);
  } catch (const Error& e) {
    c.Expect(e.kind() == ErrorKind::kLimit, tag + ": minimum explanation error " + e.what());
  }
  if (st.unsat % 3 == 0) {
    std::vector<Explanation> all = session.MinimalUnsatTheories({}, 3);
    c.Expect(!all.empty() && all[0].size() == minimal.size(), tag + ": enumeration must start with the minimal explanation");
    for (const Explanation& e : all) {
      ++st.explanations;
      c.Expect(testing::VerifyExplanation(*kb, e, {}, &why), tag + ": enumerated explanation: " + why);
    }
  }

  // Background variant.
  std::vector<std::string> background;
  for (const Sentence& s : kb->theory.sentences) {
    if (std::bernoulli_distribution(0.4)(rng)) background.push_back(s.label);
  }
  if (!background.empty()) {
    PartialStructure fixed = testing::ExplanationStructure(*kb, Explanation{});
    bool bg_sat = BruteSatisfiable(testing::BackgroundFormulas(kb->theory, background), fixed);
    try {
      Explanation e = session.MinimalUnsatTheory(background);
      c.Expect(bg_sat, tag + ": background is inconsistent but was accepted");
      c.Expect(testing::VerifyExplanation(*kb, e, background, &why), tag + ": background explanation: " + why);
      ++st.explanations;
    } catch (const Error& e) {
      c.Expect(!bg_sat && e.kind() == ErrorKind::kInconsistent,
               tag + ": background explanation error " + e.what());
    }
  }

  PartialStructure sub = session.UnsatSubstructure();
  c.Expect(!BruteSatisfiable(sentences, sub), tag + ": unsat substructure is satisfiable");
  c.Expect(PrecisionLeq(sub, current), tag + ": unsat substructure is not below the state");
}

void CheckBacktrack(Checks& c, OracleStats& st, std::mt19937_64& rng, const std::string& tag,
                    const std::shared_ptr<const KnowledgeBase>& kb) {
  std::vector<FormulaPtr> sentences = testing::Sentences(kb->theory);
  int k = std::uniform_int_distribution<int>(2, 10)(rng);
  std::vector<Assignment> choices = RandomChoices(rng, kb->base, k + 1);
  if (choices.size() < 2) return;
  Assignment target = choices.back();
  choices.pop_back();
  auto sat_without = [&](const std::vector<std::size_t>& removed) {
    PartialStructure s = kb->base;
    for (std::size_t i = 0; i < choices.size(); ++i) {
      if (!std::binary_search(removed.begin(), removed.end(), i)) s = Extend(s, choices[i]);
    }
    return BruteSatisfiable(sentences, Extend(s, target));
  };
  bool target_ok = BruteSatisfiable(sentences, Extend(kb->base, target));
  ConfigOptions options;
  options.infer.seed = rng();
  Configurator session(kb, choices, options);
  std::vector<Assignment> retract;
  try {
    retract = session.BacktrackSuggest(target.term, target.value);
  } catch (const Error& e) {
    c.Expect(!target_ok && e.kind() == ErrorKind::kConflict, tag + ": backtrack error " + e.what());
    return;
  }
  c.Expect(target_ok, tag + ": backtrack accepted a value that conflicts with the data");
  ++st.backtracks;
  std::vector<std::size_t> removed;
  for (const Assignment& a : retract) {
    auto it = std::find(choices.begin(), choices.end(), a);
    c.Expect(it != choices.end(), tag + ": retraction is not a choice");
    if (it != choices.end()) removed.push_back(static_cast<std::size_t>(it - choices.begin()));
  }
  std::sort(removed.begin(), removed.end());
  c.Expect(sat_without(removed), tag + ": retraction does not restore consistency");
  // No smaller retraction works.
  std::size_t n = choices.size();
  bool smaller = false;
  for (std::uint32_t mask = 0; mask < (1u << n) && !smaller; ++mask) {
    if (static_cast<std::size_t>(__builtin_popcount(mask)) >= removed.size()) continue;
    std::vector<std::size_t> subset;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask >> i & 1) subset.push_back(i);
    }
    smaller = sat_without(subset);
  }
  c.Expect(!smaller, tag + ": a smaller retraction exists");
}

bool OracleSuite(int count, std::uint64_t seed) {
  Checks c;
  OracleStats st;
  std::mt19937_64 rng(seed);
  int generated = 0;
  while (st.instances < count) {
    ++generated;
    testing::RandomInstance inst = testing::GenerateInstance(rng);
    std::string tag = "instance " + std::to_string(generated);
    std::shared_ptr<const KnowledgeBase> kb;
    try {
      kb = KnowledgeBase::Create(Load(inst.source));
    } catch (const Error& e) {
      c.Expect(false, tag + ": load failed: " + e.what() + "\n" + inst.source);
      continue;
    }
    ++st.instances;
    try {
      CheckSession(c, st, rng, tag, kb, {}, inst.objective);
      std::uniform_int_distribution<int> nchoices(1, 4);
      CheckSession(c, st, rng, tag + " with choices", kb,
                   RandomChoices(rng, kb->base, nchoices(rng)), inst.objective);
      CheckBacktrack(c, st, rng, tag, kb);
    } catch (const Error& e) {
      c.Expect(false, tag + ": unexpected error: " + e.what() + "\n" + inst.source);
    }
  }
  std::ostringstream summary;
  summary << st.instances << " instances, " << st.sat << " sat / " << st.unsat
          << " unsat states, " << st.explanations << " explanations, " << st.backtracks
          << " backtracks";
  return Report("oracle equivalence", c, summary.str());
}

// ---- performance -------------------------------------------------------------

bool PerformanceSuite(std::uint64_t seed) {
  Checks c;
  testing::PerfInstance inst = testing::GeneratePerfInstance(seed, 32);
  Problem p = Load(inst.source);
  auto build_start = Clock::now();
  auto kb = KnowledgeBase::Create(p);
  double build = Seconds(build_start);
  std::size_t params = OpenTermsUniverse(kb->base).size();
  std::size_t constraints = 0;
  for (const Unit& u : kb->ground->units) constraints += u.kind == Unit::Kind::kSentence;
  c.Expect(params >= 300, "parameters " + std::to_string(params));
  c.Expect(constraints >= 650, "ground constraints " + std::to_string(constraints));

  std::mt19937_64 rng(seed);
  std::vector<Assignment> choices;
  std::vector<double> steps;
  std::optional<DomainTerm> next;
  std::vector<Element> next_values;
  for (int step = 0; step < 20; ++step) {
    auto start = Clock::now();
    if (next && !next_values.empty()) {
      choices.push_back(
          {*next, next_values[std::uniform_int_distribution<std::size_t>(0, next_values.size() - 1)(rng)]});
    }
    ConfigOptions options;
    options.infer.seed = step;
    Configurator session(kb, choices, options);
    PropagationResult r = session.Propagate();
    ParameterSet open = session.OpenTerms();
    next.reset();
    next_values.clear();
    if (!open.empty()) {
      next = open[std::uniform_int_distribution<std::size_t>(0, open.size() - 1)(rng)];
      next_values = session.ConsistentValues(*next);
    }
    steps.push_back(Seconds(start));
    c.Expect(!open.empty() || step > 0, "session ran out of open terms");
  }
  std::vector<double> sorted = steps;
  std::sort(sorted.begin(), sorted.end());
  double median = (sorted[9] + sorted[10]) / 2;
  double max = sorted.back();
  c.Expect(median <= 0.5, "median step " + std::to_string(median) + " s");
  c.Expect(max <= 2.0, "max step " + std::to_string(max) + " s");
  std::ostringstream summary;
  summary << params << " parameters, " << constraints << " ground constraints, grounding "
          << build << " s, step median " << median << " s, max " << max << " s";
  return Report("interactive performance", c, summary.str());
}

// ---- SAT core ----------------------------------------------------------------

bool SatSuite(int count, std::uint64_t seed) {
  Checks c;
  std::mt19937_64 rng(seed);
  int sat = 0;
  int cores = 0;
  for (int inst = 0; inst < count; ++inst) {
    int n = std::uniform_int_distribution<int>(1, 20)(rng);
    int m = std::uniform_int_distribution<int>(1, 5 * n)(rng);
    std::vector<std::vector<int>> clauses;
    std::vector<std::uint32_t> pos;
    std::vector<std::uint32_t> neg;
    for (int i = 0; i < m; ++i) {
      int len = std::uniform_int_distribution<int>(1, 4)(rng);
      std::vector<int> cl;
      std::uint32_t p = 0;
      std::uint32_t q = 0;
      for (int j = 0; j < len; ++j) {
        int v = std::uniform_int_distribution<int>(1, n)(rng);
        bool s = std::bernoulli_distribution(0.5)(rng);
        cl.push_back(s ? v : -v);
        (s ? p : q) |= 1u << (v - 1);
      }
      clauses.push_back(cl);
      pos.push_back(p);
      neg.push_back(q);
    }
    std::vector<int> assumptions;
    std::uint32_t amask_on = 0;
    std::uint32_t amask_off = 0;
    for (int v = 1; v <= n; ++v) {
      if (std::bernoulli_distribution(0.15)(rng)) {
        bool s = std::bernoulli_distribution(0.5)(rng);
        assumptions.push_back(s ? v : -v);
        (s ? amask_on : amask_off) |= 1u << (v - 1);
      }
    }
    auto table = [&](std::uint32_t on, std::uint32_t off) {
      for (std::uint32_t a = 0; a < (1u << n); ++a) {
        if ((a & on) != on || (a & off) != 0) continue;
        bool all = true;
        for (std::size_t i = 0; i < pos.size() && all; ++i) {
          all = (a & pos[i]) || (~a & neg[i]);
        }
        if (all) return true;
      }
      return false;
    };
    bool expected = table(amask_on, amask_off);
    sat::Solver solver(rng());
    solver.EnsureVars(n);
    for (const auto& cl : clauses) solver.AddClause(cl);
    sat::Result r = solver.Solve(assumptions);
    std::string tag = "cnf " + std::to_string(inst);
    c.Expect((r == sat::Result::kSat) == expected && r != sat::Result::kUnknown,
             tag + ": disagrees with the truth table");
    if (r == sat::Result::kSat) {
      ++sat;
      bool ok = true;
      for (const auto& cl : clauses) {
        ok &= std::any_of(cl.begin(), cl.end(), [&](int l) { return solver.ModelLiteral(l); });
      }
      for (int l : assumptions) ok &= solver.ModelLiteral(l);
      c.Expect(ok, tag + ": model violates a clause or assumption");
    } else if (r == sat::Result::kUnsat) {
      ++cores;
      std::uint32_t on = 0;
      std::uint32_t off = 0;
      bool subset = true;
      for (int l : solver.core()) {
        subset &= std::find(assumptions.begin(), assumptions.end(), l) != assumptions.end();
        (l > 0 ? on : off) |= 1u << (std::abs(l) - 1);
      }
      c.Expect(subset, tag + ": core is not a subset of the assumptions");
      c.Expect(!table(on, off), tag + ": core does not re-verify");
    }
  }
  std::ostringstream summary;
  summary << count << " random CNFs, " << sat << " sat, " << cores << " unsat cores";
  return Report("SAT truth-table agreement", c, summary.str());
}

}  // namespace
}  // namespace cfgkb

int main(int argc, char** argv) {
  std::string presets = argc > 1 ? argv[1] : "presets";
  std::set<std::string> only(argv + std::min(argc, 2), argv + argc);
  auto run = [&](const char* name) { return only.empty() || only.count(name) > 0; };
  bool ok = true;
  try {
    if (run("golden")) ok &= cfgkb::GoldenSuite(presets);
    if (run("oracle")) ok &= cfgkb::OracleSuite(600, 20261019);
    if (run("performance")) ok &= cfgkb::PerformanceSuite(7);
    if (run("sat")) ok &= cfgkb::SatSuite(1000, 42);
  } catch (const std::exception& e) {
    std::cout << "FAIL acceptance aborted: " << e.what() << "\n";
    return 1;
  }
  return ok ? 0 : 1;
}

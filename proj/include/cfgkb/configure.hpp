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

#ifndef CFGKB_CONFIGURE_HPP_
#define CFGKB_CONFIGURE_HPP_

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cfgkb/ground.hpp"
#include "cfgkb/infer.hpp"
#include "cfgkb/lang.hpp"

namespace cfgkb {

// Theory and base structure together with their grounding.
struct KnowledgeBase {
  std::shared_ptr<const Vocabulary> vocabulary;
  Theory theory;
  PartialStructure base;
  std::shared_ptr<const GroundProblem> ground;

  static std::shared_ptr<const KnowledgeBase> Create(const Problem& problem);
  static std::shared_ptr<const KnowledgeBase> Create(const Theory& theory,
                                                     const PartialStructure& base);
};

struct ConsequenceSet {
  std::vector<Assignment> positive;  // forced by the hypothesis
  std::vector<Assignment> negative;  // ruled out by the hypothesis
};

struct ExplainedSentence {
  std::string id;
  std::string label;
  FormulaPtr formula;
};

struct Explanation {
  std::vector<ExplainedSentence> sentences;
  std::vector<ValueLiteral> data;
  std::vector<Assignment> choices;
  std::vector<std::string> background;

  std::size_t size() const { return sentences.size() + data.size() + choices.size(); }
};

struct ConfigOptions {
  InferOptions infer;
  std::size_t minimum_core_limit = 24;
  std::size_t hitting_set_limit = 24;
};

// A base problem plus an ordered list of user choices.
class Configurator {
 public:
  Configurator(std::shared_ptr<const KnowledgeBase> kb, std::vector<Assignment> choices,
               ConfigOptions options = {});

  const KnowledgeBase& kb() const { return *kb_; }
  const std::shared_ptr<const KnowledgeBase>& kb_ptr() const { return kb_; }
  const std::vector<Assignment>& choices() const { return choices_; }
  // Base structure extended by the choices.
  const PartialStructure& structure() const { return current_; }

  bool Consistent();
  PropagationResult Propagate();
  ParameterSet OpenTerms();
  std::vector<Element> ConsistentValues(const DomainTerm& term);
  ConsequenceSet Consequences(const DomainTerm& term, const Element& value);
  bool CheckConsistency(const DomainTerm& term, const Element& value);
  std::optional<PartialStructure> Autocomplete(const std::optional<DomainTerm>& objective);

  // `background` names sentence labels or unit ids that are never blamed.
  Explanation MinimalUnsatTheory(const std::vector<std::string>& background = {});
  Explanation MinimumUnsatTheory(const std::vector<std::string>& background = {});
  // Up to `limit` distinct subset-minimal explanations; the first one equals
  // MinimalUnsatTheory.
  std::vector<Explanation> MinimalUnsatTheories(const std::vector<std::string>& background,
                                                std::size_t limit);
  PartialStructure UnsatSubstructure();

  // Minimum set of choices whose retraction admits term = value.
  std::vector<Assignment> BacktrackSuggest(const DomainTerm& term, const Element& value);
  Configurator Retract(const DomainTerm& term) const;
  Configurator Choose(const Assignment& choice) const;

 private:
  struct Candidates;

  Engine& Plain();
  Engine& Guarded(bool fine);
  std::vector<int> ChoiceLits() const;
  Candidates Collect(const GroundProblem& g, const std::vector<std::string>& background,
                     bool data_only) const;
  Explanation Build(const GroundProblem& g, const Candidates& c,
                    const std::vector<std::size_t>& picked) const;
  std::vector<std::size_t> Shrink(Engine& engine, const std::vector<int>& fixed,
                                  const std::vector<int>& items,
                                  std::vector<std::size_t> subset);
  Explanation Explain(const std::vector<std::string>& background, bool minimum);

  std::shared_ptr<const KnowledgeBase> kb_;
  std::vector<Assignment> choices_;
  ConfigOptions options_;
  PartialStructure current_;
  std::shared_ptr<const GroundProblem> fine_ground_;
  std::unique_ptr<Engine> plain_;
  std::unique_ptr<Engine> guarded_;
  std::unique_ptr<Engine> fine_guarded_;
  std::optional<PropagationResult> propagated_;
};

// Single-structure forms: `s` plays the role of the base with no choices.
ParameterSet GetOpenTerms(const Theory& theory, const PartialStructure& s);
std::vector<Element> GetConsistentValues(const Theory& theory, const PartialStructure& s,
                                         const DomainTerm& term);
ConsequenceSet Consequences(const Theory& theory, const PartialStructure& s,
                            const DomainTerm& term, const Element& value);
bool CheckConsistency(const Theory& theory, const PartialStructure& s, const DomainTerm& term,
                      const Element& value);
std::optional<PartialStructure> Autocomplete(const Theory& theory, const PartialStructure& s,
                                             const std::optional<DomainTerm>& objective);
Explanation MinimalUnsatTheory(const Theory& theory, const PartialStructure& s,
                               const std::vector<std::string>& background);
Explanation MinimumUnsatTheory(const Theory& theory, const PartialStructure& s,
                               const std::vector<std::string>& background);
std::vector<Explanation> MinimalUnsatTheories(const Theory& theory, const PartialStructure& s,
                                              const std::vector<std::string>& background,
                                              std::size_t limit);
PartialStructure UnsatSubstructure(const Theory& theory, const PartialStructure& s);
std::vector<Assignment> BacktrackSuggest(const Theory& theory, const PartialStructure& base,
                                         const std::vector<Assignment>& choices,
                                         const DomainTerm& term, const Element& value);
std::pair<PartialStructure, std::vector<Assignment>> Retract(const PartialStructure& base,
                                                             const std::vector<Assignment>& choices,
                                                             const DomainTerm& term);

}  // namespace cfgkb

#endif  // CFGKB_CONFIGURE_HPP_

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

#ifndef CFGKB_INFER_HPP_
#define CFGKB_INFER_HPP_

#include <chrono>
#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "cfgkb/ground.hpp"
#include "cfgkb/sat.hpp"
#include "cfgkb/structure.hpp"

namespace cfgkb {

struct InferOptions {
  std::uint64_t seed = 0;
  std::optional<std::chrono::steady_clock::time_point> deadline;
};

struct DerivedEntry {
  DomainTerm term;
  Element value;  // true for predicate atoms
  Truth truth = Truth::kUnknown;
};

struct PropagationResult {
  PartialStructure structure;
  std::vector<DerivedEntry> derived;
};

// A solver loaded with a ground problem. In guarded mode every clause of a
// unit carries that unit's selector, so units can be switched on by
// assumption.
class Engine {
 public:
  Engine(std::shared_ptr<const GroundProblem> ground, const InferOptions& options,
         bool guarded = false);

  const GroundProblem& ground() const { return *ground_; }
  sat::Solver& solver() { return solver_; }

  // Throws kTimeout when the deadline passes.
  bool Solve(const std::vector<int>& assumptions);
  const std::vector<int>& core() const { return solver_.core(); }
  PartialStructure Model() const;
  int Selector(int unit) const;

  // Clause active only under the returned literal.
  int AddTemporaryClause(sat::Clause clause);
  void Retire(int activation);

  bool guarded() const { return guarded_; }

 private:
  std::shared_ptr<const GroundProblem> ground_;
  sat::Solver solver_;
  bool guarded_;
  int first_selector_ = 0;
};

// `current` must be the grounding structure extended by the assumptions.
PropagationResult PropagateWith(Engine& engine, const PartialStructure& current,
                                const std::vector<int>& assumptions);
std::optional<PartialStructure> ExpandWith(Engine& engine, const std::vector<int>& assumptions);
std::optional<PartialStructure> MinimizeWith(Engine& engine, const std::vector<int>& assumptions,
                                             const DomainTerm& objective);
// Values of `term` realized by some model.
std::vector<Element> ValuesWith(Engine& engine, const PartialStructure& current,
                                const std::vector<int>& assumptions, const DomainTerm& term);

std::optional<PartialStructure> ModelExpand(const Theory& theory, const PartialStructure& s,
                                            const InferOptions& options = {});
bool ModelCheck(const Theory& theory, const PartialStructure& s);
std::optional<PartialStructure> Minimize(const Theory& theory, const PartialStructure& s,
                                         const DomainTerm& objective,
                                         const InferOptions& options = {});
PropagationResult Propagate(const Theory& theory, const PartialStructure& s,
                            const InferOptions& options = {});

}  // namespace cfgkb

#endif  // CFGKB_INFER_HPP_

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

#ifndef CFGKB_SAT_HPP_
#define CFGKB_SAT_HPP_

#include <chrono>
#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

namespace cfgkb::sat {

// Literals at the interface are DIMACS integers: variable v > 0 is `v`,
// its negation `-v`.
using Clause = std::vector<int>;

enum class Result { kSat, kUnsat, kUnknown };

struct Stats {
  std::uint64_t solves = 0;
  std::uint64_t conflicts = 0;
  std::uint64_t decisions = 0;
  std::uint64_t propagations = 0;
  std::uint64_t restarts = 0;
};

class Solver {
 public:
  explicit Solver(std::uint64_t seed = 0);
  ~Solver();
  Solver(const Solver&) = delete;
  Solver& operator=(const Solver&) = delete;

  int NewVar();
  // Makes variables 1..n exist.
  void EnsureVars(int n);
  int num_vars() const;
  std::size_t num_clauses() const;

  // Returns false once the clause database is unsatisfiable at level 0.
  bool AddClause(Clause clause);
  bool okay() const;

  Result Solve(const std::vector<int>& assumptions = {});

  // Valid after kSat: value of variable v in the model.
  bool ModelValue(int var) const;
  bool ModelLiteral(int lit) const { return ModelValue(lit > 0 ? lit : -lit) == (lit > 0); }
  const std::vector<std::uint8_t>& model() const;

  // Valid after kUnsat: a subset of the assumptions that is unsatisfiable
  // together with the clauses (empty when the clauses alone are).
  const std::vector<int>& core() const;

  // Literals fixed without any decision.
  std::optional<bool> FixedValue(int var) const;

  // Unit-propagates the assumptions alone. Returns false on a conflict;
  // otherwise `implied` receives every literal on the resulting trail.
  bool PropagateAssumptions(const std::vector<int>& assumptions, std::vector<int>* implied);

  void SetDeadline(std::optional<std::chrono::steady_clock::time_point> deadline);
  void SetConflictBudget(std::int64_t conflicts);  // < 0: unlimited

  // Preferred sign of the literal's variable at its next decision.
  void SetPhase(int lit);

  const Stats& stats() const;

 private:
  class Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace cfgkb::sat

#endif  // CFGKB_SAT_HPP_

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
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

#include "cfgkb/sat.hpp"

namespace cfgkb::sat {
namespace {

using Lit = std::uint32_t;  // 2 * var + (negated ? 1 : 0)
using CRef = std::uint32_t;

constexpr CRef kNoRef = std::numeric_limits<CRef>::max();
constexpr Lit kNoLit = std::numeric_limits<Lit>::max();
constexpr std::uint8_t kFalse = 0;
constexpr std::uint8_t kTrue = 1;
constexpr std::uint8_t kUndef = 2;

inline Lit MkLit(int var, bool neg) { return 2 * static_cast<Lit>(var) + (neg ? 1 : 0); }
inline int VarOf(Lit l) { return static_cast<int>(l >> 1); }
inline bool SignOf(Lit l) { return l & 1; }
inline Lit Neg(Lit l) { return l ^ 1; }
inline Lit FromDimacs(int x) { return x > 0 ? MkLit(x - 1, false) : MkLit(-x - 1, true); }
inline int ToDimacs(Lit l) { return SignOf(l) ? -(VarOf(l) + 1) : VarOf(l) + 1; }

double Luby(double y, int x) {
  int size = 1;
  int seq = 0;
  while (size < x + 1) {
    ++seq;
    size = 2 * size + 1;
  }
  while (size - 1 != x) {
    size = (size - 1) >> 1;
    --seq;
    x = x % size;
  }
  return std::pow(y, seq);
}

struct ClauseData {
  std::vector<Lit> lits;
  bool learnt = false;
  bool deleted = false;
  double activity = 0;
};

struct Watcher {
  CRef cref;
  Lit blocker;
};

// Binary max-heap of variables ordered by activity.
class VarHeap {
 public:
  explicit VarHeap(const std::vector<double>& act) : act_(act) {}

  bool Empty() const { return heap_.empty(); }
  bool Contains(int v) const { return v < static_cast<int>(pos_.size()) && pos_[v] >= 0; }

  void Insert(int v) {
    if (v >= static_cast<int>(pos_.size())) pos_.resize(v + 1, -1);
    pos_[v] = static_cast<int>(heap_.size());
    heap_.push_back(v);
    Up(pos_[v]);
  }

  void Increased(int v) {
    if (Contains(v)) Up(pos_[v]);
  }

  int RemoveMax() {
    int top = heap_[0];
    heap_[0] = heap_.back();
    pos_[heap_[0]] = 0;
    pos_[top] = -1;
    heap_.pop_back();
    if (!heap_.empty()) Down(0);
    return top;
  }

 private:
  bool Less(int a, int b) const { return act_[a] > act_[b] || (act_[a] == act_[b] && a < b); }

  void Up(int i) {
    int v = heap_[i];
    while (i > 0) {
      int parent = (i - 1) >> 1;
      if (!Less(v, heap_[parent])) break;
      heap_[i] = heap_[parent];
      pos_[heap_[i]] = i;
      i = parent;
    }
    heap_[i] = v;
    pos_[v] = i;
  }

  void Down(int i) {
    int v = heap_[i];
    int n = static_cast<int>(heap_.size());
    while (2 * i + 1 < n) {
      int child = 2 * i + 1;
      if (child + 1 < n && Less(heap_[child + 1], heap_[child])) ++child;
      if (!Less(heap_[child], v)) break;
      heap_[i] = heap_[child];
      pos_[heap_[i]] = i;
      i = child;
    }
    heap_[i] = v;
    pos_[v] = i;
  }

  const std::vector<double>& act_;
  std::vector<int> heap_;
  std::vector<int> pos_;
};

}  // namespace

class Solver::Impl {
 public:
  explicit Impl(std::uint64_t seed) : rng_(seed), randomize_(seed != 0), heap_(activity_) {}

  void SetPhase(int v, bool negative) { polarity_[v] = negative ? 1 : 0; }

  int NewVar() {
    int v = num_vars_++;
    assigns_.push_back(kUndef);
    level_.push_back(0);
    reason_.push_back(kNoRef);
    polarity_.push_back(1);
    seen_.push_back(0);
    activity_.push_back(randomize_ ? std::uniform_real_distribution<double>(0, 1e-5)(rng_) : 0);
    watches_.emplace_back();
    watches_.emplace_back();
    heap_.Insert(v);
    return v + 1;
  }

  void EnsureVars(int n) {
    while (num_vars_ < n) NewVar();
  }

  bool AddClause(Clause clause) {
    if (!ok_) return false;
    std::vector<Lit> lits;
    lits.reserve(clause.size());
    for (int x : clause) {
      if (x == 0) throw std::invalid_argument("literal 0");
      EnsureVars(std::abs(x));
      lits.push_back(FromDimacs(x));
    }
    std::sort(lits.begin(), lits.end());
    lits.erase(std::unique(lits.begin(), lits.end()), lits.end());
    std::size_t j = 0;
    for (std::size_t i = 0; i < lits.size(); ++i) {
      if (i + 1 < lits.size() && lits[i + 1] == Neg(lits[i])) return true;  // tautology
      std::uint8_t v = Value(lits[i]);
      if (v == kTrue) return true;
      if (v == kFalse) continue;
      lits[j++] = lits[i];
    }
    lits.resize(j);
    ++num_original_;
    if (lits.empty()) return ok_ = false;
    if (lits.size() == 1) {
      Enqueue(lits[0], kNoRef);
      if (Propagate() != kNoRef) ok_ = false;
      return ok_;
    }
    CRef cref = Store(std::move(lits), false);
    Attach(cref);
    return true;
  }

  Result Solve(const std::vector<int>& assumptions) {
    ++stats_.solves;
    model_.clear();
    core_.clear();
    if (!ok_) return Result::kUnsat;
    assumptions_.clear();
    for (int x : assumptions) {
      if (x == 0 || std::abs(x) > num_vars_) {
        throw std::invalid_argument("assumption refers to unknown variable " + std::to_string(x));
      }
      assumptions_.push_back(FromDimacs(x));
    }
    conflicts_at_start_ = stats_.conflicts;
    max_learnts_ = std::max<double>(num_original_ / 3.0, 2000);
    Status status = Status::kRestart;
    int restarts = 0;
    while (status == Status::kRestart) {
      double budget = Luby(2, restarts) * 100;
      status = Search(static_cast<int>(budget));
      ++restarts;
      ++stats_.restarts;
      max_learnts_ *= 1.05;
    }
    Result result = Result::kUnknown;
    if (status == Status::kSat) {
      model_.assign(assigns_.begin(), assigns_.end());
      result = Result::kSat;
    } else if (status == Status::kUnsat) {
      result = Result::kUnsat;
    }
    CancelUntil(0);
    return result;
  }

  bool PropagateAssumptions(const std::vector<int>& assumptions, std::vector<int>* implied) {
    if (!ok_) return false;
    bool ok = true;
    for (int x : assumptions) {
      Lit p = FromDimacs(x);
      if (VarOf(p) >= num_vars_) throw std::invalid_argument("unknown variable");
      std::uint8_t v = Value(p);
      if (v == kTrue) continue;
      if (v == kFalse) {
        ok = false;
        break;
      }
      trail_lim_.push_back(static_cast<int>(trail_.size()));
      Enqueue(p, kNoRef);
      if (Propagate() != kNoRef) {
        ok = false;
        break;
      }
    }
    if (ok && implied) {
      implied->clear();
      for (Lit l : trail_) implied->push_back(ToDimacs(l));
    }
    CancelUntil(0);
    return ok;
  }

  std::optional<bool> FixedValue(int var) const {
    int v = var - 1;
    if (v < 0 || v >= num_vars_ || assigns_[v] == kUndef || level_[v] != 0) return std::nullopt;
    return assigns_[v] == kTrue;
  }

  bool ModelValue(int var) const { return model_.at(var - 1) == kTrue; }

  int num_vars_ = 0;
  std::size_t num_original_ = 0;
  bool ok_ = true;
  std::vector<std::uint8_t> model_;
  std::vector<int> core_;
  Stats stats_;
  std::optional<std::chrono::steady_clock::time_point> deadline_;
  std::int64_t conflict_budget_ = -1;

 private:
  enum class Status { kSat, kUnsat, kRestart, kAbort };

  std::uint8_t Value(Lit p) const {
    std::uint8_t a = assigns_[VarOf(p)];
    return a == kUndef ? kUndef : static_cast<std::uint8_t>(a ^ (SignOf(p) ? 1 : 0));
  }
  int DecisionLevel() const { return static_cast<int>(trail_lim_.size()); }

  CRef Store(std::vector<Lit> lits, bool learnt) {
    CRef cref = static_cast<CRef>(clauses_.size());
    clauses_.push_back(ClauseData{std::move(lits), learnt, false, 0});
    if (learnt) learnts_.push_back(cref);
    return cref;
  }

  void Attach(CRef cref) {
    const auto& lits = clauses_[cref].lits;
    watches_[lits[0]].push_back({cref, lits[1]});
    watches_[lits[1]].push_back({cref, lits[0]});
  }

  void Enqueue(Lit p, CRef from) {
    int v = VarOf(p);
    assigns_[v] = SignOf(p) ? kFalse : kTrue;
    level_[v] = DecisionLevel();
    reason_[v] = from;
    trail_.push_back(p);
  }

  // Watches are indexed by the literal whose falsification triggers a visit.
  CRef Propagate() {
    CRef confl = kNoRef;
    while (qhead_ < trail_.size()) {
      Lit p = trail_[qhead_++];
      Lit false_lit = Neg(p);
      std::vector<Watcher>& ws = watches_[false_lit];
      ++stats_.propagations;
      std::size_t i = 0;
      std::size_t j = 0;
      while (i < ws.size()) {
        Watcher w = ws[i];
        if (Value(w.blocker) == kTrue) {
          ws[j++] = ws[i++];
          continue;
        }
        ClauseData& c = clauses_[w.cref];
        ++i;
        if (c.deleted) continue;
        std::vector<Lit>& lits = c.lits;
        if (lits[0] == false_lit) std::swap(lits[0], lits[1]);
        Lit first = lits[0];
        Watcher nw{w.cref, first};
        if (first != w.blocker && Value(first) == kTrue) {
          ws[j++] = nw;
          continue;
        }
        bool moved = false;
        for (std::size_t k = 2; k < lits.size(); ++k) {
          if (Value(lits[k]) != kFalse) {
            lits[1] = lits[k];
            lits[k] = false_lit;
            watches_[lits[1]].push_back(nw);
            moved = true;
            break;
          }
        }
        if (moved) continue;
        ws[j++] = nw;
        if (Value(first) == kFalse) {
          confl = w.cref;
          qhead_ = trail_.size();
          while (i < ws.size()) ws[j++] = ws[i++];
        } else {
          Enqueue(first, w.cref);
        }
      }
      ws.resize(j);
      if (confl != kNoRef) break;
    }
    return confl;
  }

  void BumpVar(int v) {
    if ((activity_[v] += var_inc_) > 1e100) {
      for (double& a : activity_) a *= 1e-100;
      var_inc_ *= 1e-100;
    }
    heap_.Increased(v);
  }

  void BumpClause(ClauseData& c) {
    if ((c.activity += cla_inc_) > 1e20) {
      for (CRef r : learnts_) clauses_[r].activity *= 1e-20;
      cla_inc_ *= 1e-20;
    }
  }

  std::uint32_t AbstractLevel(int v) const { return 1u << (level_[v] & 31); }

  bool LitRedundant(Lit p, std::uint32_t abstract_levels) {
    stack_.clear();
    stack_.push_back(p);
    std::size_t top = to_clear_.size();
    while (!stack_.empty()) {
      Lit q = stack_.back();
      stack_.pop_back();
      const ClauseData& c = clauses_[reason_[VarOf(q)]];
      for (std::size_t i = 1; i < c.lits.size(); ++i) {
        Lit l = c.lits[i];
        int v = VarOf(l);
        if (seen_[v] || level_[v] == 0) continue;
        if (reason_[v] != kNoRef && (AbstractLevel(v) & abstract_levels) != 0) {
          seen_[v] = 1;
          stack_.push_back(l);
          to_clear_.push_back(l);
        } else {
          for (std::size_t j = top; j < to_clear_.size(); ++j) seen_[VarOf(to_clear_[j])] = 0;
          to_clear_.resize(top);
          return false;
        }
      }
    }
    return true;
  }

  void Analyze(CRef confl, std::vector<Lit>& out, int& bt_level) {
    int path = 0;
    Lit p = kNoLit;
    out.clear();
    out.push_back(kNoLit);
    int index = static_cast<int>(trail_.size()) - 1;
    do {
      ClauseData& c = clauses_[confl];
      if (c.learnt) BumpClause(c);
      for (std::size_t j = (p == kNoLit ? 0 : 1); j < c.lits.size(); ++j) {
        Lit q = c.lits[j];
        int v = VarOf(q);
        if (!seen_[v] && level_[v] > 0) {
          BumpVar(v);
          seen_[v] = 1;
          if (level_[v] >= DecisionLevel()) {
            ++path;
          } else {
            out.push_back(q);
          }
        }
      }
      while (!seen_[VarOf(trail_[index--])]) {
      }
      p = trail_[index + 1];
      confl = reason_[VarOf(p)];
      seen_[VarOf(p)] = 0;
      --path;
    } while (path > 0);
    out[0] = Neg(p);

    to_clear_.assign(out.begin(), out.end());
    std::uint32_t abstract_levels = 0;
    for (std::size_t i = 1; i < out.size(); ++i) abstract_levels |= AbstractLevel(VarOf(out[i]));
    std::size_t j = 1;
    for (std::size_t i = 1; i < out.size(); ++i) {
      if (reason_[VarOf(out[i])] == kNoRef || !LitRedundant(out[i], abstract_levels)) {
        out[j++] = out[i];
      }
    }
    out.resize(j);

    bt_level = 0;
    if (out.size() > 1) {
      std::size_t max_i = 1;
      for (std::size_t i = 2; i < out.size(); ++i) {
        if (level_[VarOf(out[i])] > level_[VarOf(out[max_i])]) max_i = i;
      }
      std::swap(out[1], out[max_i]);
      bt_level = level_[VarOf(out[1])];
    }
    for (Lit l : to_clear_) seen_[VarOf(l)] = 0;
  }

  // Collects the assumptions responsible for `p` being false.
  void AnalyzeFinal(Lit p) {
    core_.clear();
    core_.push_back(ToDimacs(Neg(p)));
    if (DecisionLevel() == 0) return;
    seen_[VarOf(p)] = 1;
    for (int i = static_cast<int>(trail_.size()) - 1; i >= trail_lim_[0]; --i) {
      int v = VarOf(trail_[i]);
      if (!seen_[v]) continue;
      if (reason_[v] == kNoRef) {
        core_.push_back(ToDimacs(trail_[i]));
      } else {
        const ClauseData& c = clauses_[reason_[v]];
        for (std::size_t j = 1; j < c.lits.size(); ++j) {
          if (level_[VarOf(c.lits[j])] > 0) seen_[VarOf(c.lits[j])] = 1;
        }
      }
      seen_[v] = 0;
    }
    seen_[VarOf(p)] = 0;
    std::sort(core_.begin(), core_.end());
    core_.erase(std::unique(core_.begin(), core_.end()), core_.end());
  }

  void CancelUntil(int level) {
    if (DecisionLevel() <= level) return;
    for (int c = static_cast<int>(trail_.size()) - 1; c >= trail_lim_[level]; --c) {
      int v = VarOf(trail_[c]);
      assigns_[v] = kUndef;
      reason_[v] = kNoRef;
      polarity_[v] = SignOf(trail_[c]) ? 1 : 0;
      if (!heap_.Contains(v)) heap_.Insert(v);
    }
    trail_.resize(trail_lim_[level]);
    trail_lim_.resize(level);
    qhead_ = trail_.size();
  }

  Lit PickBranch() {
    while (!heap_.Empty()) {
      int v = heap_.RemoveMax();
      if (assigns_[v] == kUndef) return MkLit(v, polarity_[v] != 0);
    }
    return kNoLit;
  }

  bool Locked(CRef cref) const {
    const ClauseData& c = clauses_[cref];
    int v = VarOf(c.lits[0]);
    return reason_[v] == cref && Value(c.lits[0]) == kTrue;
  }

  void ReduceDb() {
    std::vector<CRef> live;
    for (CRef r : learnts_) {
      if (!clauses_[r].deleted) live.push_back(r);
    }
    std::sort(live.begin(), live.end(), [&](CRef a, CRef b) {
      const ClauseData& x = clauses_[a];
      const ClauseData& y = clauses_[b];
      if ((x.lits.size() > 2) != (y.lits.size() > 2)) return x.lits.size() > 2;
      return x.activity < y.activity;
    });
    std::size_t half = live.size() / 2;
    learnts_.clear();
    for (std::size_t i = 0; i < live.size(); ++i) {
      ClauseData& c = clauses_[live[i]];
      if (i < half && c.lits.size() > 2 && !Locked(live[i])) {
        c.deleted = true;
        c.lits.clear();
        c.lits.shrink_to_fit();
      } else {
        learnts_.push_back(live[i]);
      }
    }
    for (auto& ws : watches_) {
      ws.erase(std::remove_if(ws.begin(), ws.end(),
                              [&](const Watcher& w) { return clauses_[w.cref].deleted; }),
               ws.end());
    }
  }

  bool OutOfBudget() const {
    if (conflict_budget_ >= 0 &&
        stats_.conflicts - conflicts_at_start_ >= static_cast<std::uint64_t>(conflict_budget_)) {
      return true;
    }
    return deadline_ && std::chrono::steady_clock::now() > *deadline_;
  }

  Status Search(int nof_conflicts) {
    int conflicts = 0;
    std::vector<Lit> learnt;
    while (true) {
      CRef confl = Propagate();
      if (confl != kNoRef) {
        ++stats_.conflicts;
        ++conflicts;
        if (DecisionLevel() == 0) {
          ok_ = false;
          return Status::kUnsat;
        }
        int bt_level = 0;
        Analyze(confl, learnt, bt_level);
        CancelUntil(bt_level);
        if (learnt.size() == 1) {
          Enqueue(learnt[0], kNoRef);
        } else {
          CRef cref = Store(learnt, true);
          Attach(cref);
          BumpClause(clauses_[cref]);
          Enqueue(learnt[0], cref);
        }
        var_inc_ /= 0.95;
        cla_inc_ /= 0.999;
        if ((stats_.conflicts & 63) == 0 && OutOfBudget()) return Status::kAbort;
        continue;
      }
      if (conflicts >= nof_conflicts) {
        CancelUntil(0);
        return Status::kRestart;
      }
      if (static_cast<double>(learnts_.size()) >= max_learnts_ + trail_.size()) ReduceDb();
      Lit next = kNoLit;
      while (DecisionLevel() < static_cast<int>(assumptions_.size())) {
        Lit p = assumptions_[DecisionLevel()];
        std::uint8_t v = Value(p);
        if (v == kTrue) {
          trail_lim_.push_back(static_cast<int>(trail_.size()));
        } else if (v == kFalse) {
          AnalyzeFinal(Neg(p));
          return Status::kUnsat;
        } else {
          next = p;
          break;
        }
      }
      if (next == kNoLit) {
        ++stats_.decisions;
        if ((stats_.decisions & 1023) == 0 && OutOfBudget()) return Status::kAbort;
        next = PickBranch();
        if (next == kNoLit) return Status::kSat;
      }
      trail_lim_.push_back(static_cast<int>(trail_.size()));
      Enqueue(next, kNoRef);
    }
  }

  std::mt19937_64 rng_;
  bool randomize_;
  std::vector<std::uint8_t> assigns_;
  std::vector<int> level_;
  std::vector<CRef> reason_;
  std::vector<std::uint8_t> polarity_;
  std::vector<std::uint8_t> seen_;
  std::vector<double> activity_;
  std::vector<std::vector<Watcher>> watches_;
  std::vector<ClauseData> clauses_;
  std::vector<CRef> learnts_;
  std::vector<Lit> trail_;
  std::vector<int> trail_lim_;
  std::size_t qhead_ = 0;
  std::vector<Lit> assumptions_;
  std::vector<Lit> stack_;
  std::vector<Lit> to_clear_;
  VarHeap heap_;
  double var_inc_ = 1;
  double cla_inc_ = 1;
  double max_learnts_ = 0;
  std::uint64_t conflicts_at_start_ = 0;
};

Solver::Solver(std::uint64_t seed) : impl_(std::make_unique<Impl>(seed)) {}
Solver::~Solver() = default;

int Solver::NewVar() { return impl_->NewVar(); }
void Solver::EnsureVars(int n) { impl_->EnsureVars(n); }
int Solver::num_vars() const { return impl_->num_vars_; }
std::size_t Solver::num_clauses() const { return impl_->num_original_; }
bool Solver::AddClause(Clause clause) { return impl_->AddClause(std::move(clause)); }
bool Solver::okay() const { return impl_->ok_; }
Result Solver::Solve(const std::vector<int>& assumptions) { return impl_->Solve(assumptions); }
bool Solver::ModelValue(int var) const { return impl_->ModelValue(var); }
const std::vector<std::uint8_t>& Solver::model() const { return impl_->model_; }
const std::vector<int>& Solver::core() const { return impl_->core_; }
std::optional<bool> Solver::FixedValue(int var) const { return impl_->FixedValue(var); }
bool Solver::PropagateAssumptions(const std::vector<int>& assumptions,
                                  std::vector<int>* implied) {
  return impl_->PropagateAssumptions(assumptions, implied);
}
void Solver::SetDeadline(std::optional<std::chrono::steady_clock::time_point> deadline) {
  impl_->deadline_ = deadline;
}
void Solver::SetConflictBudget(std::int64_t conflicts) { impl_->conflict_budget_ = conflicts; }
const Stats& Solver::stats() const { return impl_->stats_; }
void Solver::SetPhase(int lit) {
  int v = std::abs(lit) - 1;
  if (v < 0 || v >= impl_->num_vars_) throw std::invalid_argument("unknown variable");
  impl_->SetPhase(v, lit < 0);
}

}  // namespace cfgkb::sat

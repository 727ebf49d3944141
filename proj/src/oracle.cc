// Copyright 2026 The Dominion Authors.
//
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

#include <bit>
#include <vector>

#include "dominion/exact_simplex.h"
#include "dominion/iterated_dominance.h"

namespace dominion {
namespace {

struct OutOfBudget {};

// Literal weak dominance on the payoff tensor: quantifies over every
// opponent profile drawn from the remaining actions.
class NormalFormOracle {
 public:
  NormalFormOracle(NormalFormGame nf, DominanceKind kind,
                   std::uint64_t max_nodes)
      : nf_(std::move(nf)), kind_(kind), max_nodes_(max_nodes) {}

  bool Solvable(std::vector<ActionSet>& remaining) {
    if (++nodes_ > max_nodes_) throw OutOfBudget{};
    bool terminal = true;
    for (ActionSet s : remaining) terminal &= std::popcount(s) == 1;
    if (terminal) return true;
    for (int i = 0; i < nf_.num_players; ++i) {
      if (std::popcount(remaining[i]) < 2) continue;
      for (int d = 0; d < nf_.num_actions; ++d) {
        if (!((remaining[i] >> d) & 1u)) continue;
        if (!Dominated(remaining, i, d)) continue;
        remaining[i] &= ~(ActionSet{1} << d);
        const bool ok = Solvable(remaining);
        remaining[i] |= ActionSet{1} << d;
        if (ok) return true;
      }
    }
    return false;
  }

 private:
  // Profiles with player i's coordinate fixed to `own`, others remaining.
  std::vector<std::uint64_t> OpponentProfiles(
      const std::vector<ActionSet>& remaining, int i, int own) const {
    std::vector<std::uint64_t> out;
    for (std::uint64_t p = 0; p < nf_.NumProfiles(); ++p) {
      const std::vector<int> profile = nf_.Profile(p);
      if (profile[i] != own) continue;
      bool ok = true;
      for (int j = 0; j < nf_.num_players && ok; ++j) {
        if (j != i) ok = (remaining[j] >> profile[j]) & 1u;
      }
      if (ok) out.push_back(p);
    }
    return out;
  }

  std::uint64_t Replace(std::uint64_t profile, int i, int action) const {
    std::vector<int> p = nf_.Profile(profile);
    p[i] = action;
    return nf_.Index(p);
  }

  bool Dominated(const std::vector<ActionSet>& remaining, int i, int d) const {
    const auto base = OpponentProfiles(remaining, i, d);
    std::vector<int> others;
    for (int a = 0; a < nf_.num_actions; ++a) {
      if (a != d && ((remaining[i] >> a) & 1u)) others.push_back(a);
    }
    for (int a : others) {
      bool weak = true;
      bool strict = false;
      for (std::uint64_t p : base) {
        const Rational& mine = nf_.At(p, i);
        const Rational& theirs = nf_.At(Replace(p, i, a), i);
        if (theirs < mine) {
          weak = false;
          break;
        }
        strict |= mine < theirs;
      }
      if (weak && strict) return true;
    }
    if (kind_ == DominanceKind::kPure) return false;

    LinearProgram lp;
    lp.num_variables = static_cast<int>(others.size());
    lp.objective.assign(others.size(), 0);
    Rational baseline = 0;
    for (std::uint64_t p : base) {
      LinearConstraint c;
      c.relation = Relation::kGreaterEqual;
      c.rhs = nf_.At(p, i);
      baseline += c.rhs;
      for (std::size_t v = 0; v < others.size(); ++v) {
        const Rational& payoff = nf_.At(Replace(p, i, others[v]), i);
        c.coefficients.push_back(payoff);
        lp.objective[v] += payoff;
      }
      lp.constraints.push_back(std::move(c));
    }
    LinearConstraint sum;
    sum.coefficients.assign(others.size(), 1);
    sum.relation = Relation::kEqual;
    sum.rhs = 1;
    lp.constraints.push_back(std::move(sum));
    const LpSolution sol = Maximize(lp);
    return sol.status == LpStatus::kOptimal && sol.value > baseline;
  }

  NormalFormGame nf_;
  DominanceKind kind_;
  std::uint64_t max_nodes_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

Verdict OracleIds(const AnonymousGame& game, DominanceKind kind,
                  const OracleLimits& limits) {
  NormalFormOracle oracle(ExpandNormalForm(game, limits), kind,
                          limits.max_nodes);
  std::vector<ActionSet> remaining = GameState::Initial(game).remaining();
  try {
    return oracle.Solvable(remaining) ? Verdict::kYes : Verdict::kNo;
  } catch (const OutOfBudget&) {
    return Verdict::kUnknown;
  }
}

}  // namespace dominion

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

#include "dominion/dominance.h"

#include <algorithm>

#include "dominion/exact_simplex.h"

namespace dominion {
namespace {

void RequirePresent(const GameState& state, int player, int action) {
  if (player < 0 || player >= state.game().num_players()) {
    throw Error("unknown player " + std::to_string(player));
  }
  if (action < 0 || action >= state.game().num_actions() ||
      !state.Has(player, action)) {
    throw Error("action " + std::to_string(action) + " of player " +
                std::to_string(player) + " is not in the subgame");
  }
}

std::optional<DominanceWitness> PureDominatesOver(
    const GameState& state, const std::vector<CommutativeImage>& images,
    int player, int dominator, int dominated) {
  const AnonymousGame& game = state.game();
  const CommutativeImage* strict = nullptr;
  for (const auto& y : images) {
    const Rational& better = game.Payoff(player, dominator, y);
    const Rational& worse = game.Payoff(player, dominated, y);
    if (better < worse) return std::nullopt;
    if (strict == nullptr && worse < better) strict = &y;
  }
  if (strict == nullptr) return std::nullopt;
  return DominanceWitness{player, dominated, MixedStrategy::Pure(dominator),
                          *strict};
}

struct LpOutcome {
  Rational slack;
  MixedStrategy strategy;
};

// Among weakly dominating mixtures, the one maximizing the smallest
// per-image gain, ties broken by total gain. `lp` is the feasibility
// program built below: one >= row per image, then the simplex row.
std::vector<Rational> MostRobustWeights(const LinearProgram& lp) {
  const int vars = lp.num_variables;
  const std::size_t images = lp.constraints.size() - 1;

  LinearProgram robust;
  robust.num_variables = vars + 1;  // last variable: the smallest gain
  robust.objective.assign(vars + 1, 0);
  robust.objective[vars] = 1;
  for (std::size_t y = 0; y < images; ++y) {
    LinearConstraint c = lp.constraints[y];
    c.coefficients.push_back(-1);
    robust.constraints.push_back(std::move(c));
  }
  LinearConstraint simplex = lp.constraints.back();
  simplex.coefficients.push_back(0);
  robust.constraints.push_back(std::move(simplex));
  const LpSolution best = Maximize(robust);
  if (best.status != LpStatus::kOptimal) {
    throw Error("dominance refinement lost feasibility");
  }

  LinearProgram tie = lp;
  for (std::size_t y = 0; y < images; ++y) tie.constraints[y].rhs += best.value;
  const LpSolution sol = Maximize(tie);
  if (sol.status != LpStatus::kOptimal) {
    throw Error("dominance refinement lost feasibility");
  }
  return sol.x;
}

std::optional<LpOutcome> SolveDominanceLp(
    const GameState& state, const std::vector<CommutativeImage>& images,
    int player, int dominated) {
  const AnonymousGame& game = state.game();
  std::vector<int> support;
  for (int a = 0; a < game.num_actions(); ++a) {
    if (a != dominated && state.Has(player, a)) support.push_back(a);
  }
  if (support.empty()) return std::nullopt;

  LinearProgram lp;
  lp.num_variables = static_cast<int>(support.size());
  lp.objective.assign(support.size(), 0);
  Rational baseline = 0;
  for (const auto& y : images) {
    LinearConstraint c;
    c.relation = Relation::kGreaterEqual;
    c.rhs = game.Payoff(player, dominated, y);
    baseline += c.rhs;
    for (std::size_t v = 0; v < support.size(); ++v) {
      const Rational& p = game.Payoff(player, support[v], y);
      c.coefficients.push_back(p);
      lp.objective[v] += p;
    }
    lp.constraints.push_back(std::move(c));
  }
  LinearConstraint simplex;
  simplex.coefficients.assign(support.size(), 1);
  simplex.relation = Relation::kEqual;
  simplex.rhs = 1;
  lp.constraints.push_back(std::move(simplex));

  const LpSolution sol = Maximize(lp);
  if (sol.status != LpStatus::kOptimal) return std::nullopt;
  LpOutcome out;
  out.slack = sol.value - baseline;
  std::vector<Rational> weights = sol.x;
  if (out.slack > 0) weights = MostRobustWeights(lp);
  for (std::size_t v = 0; v < support.size(); ++v) {
    if (weights[v] != 0) out.strategy.weights.emplace_back(support[v], weights[v]);
  }
  return out;
}

std::optional<DominanceWitness> MixedDominatedOver(
    const GameState& state, const std::vector<CommutativeImage>& images,
    int player, int dominated) {
  auto outcome = SolveDominanceLp(state, images, player, dominated);
  if (!outcome || outcome->slack <= 0) return std::nullopt;

  DominanceWitness w{player, dominated, std::move(outcome->strategy), {}};
  const AnonymousGame& game = state.game();
  for (const auto& y : images) {
    Rational mixed = 0;
    for (const auto& [a, weight] : w.dominator.weights) {
      mixed += weight * game.Payoff(player, a, y);
    }
    if (mixed > game.Payoff(player, dominated, y)) {
      w.strict_at = y;
      return w;
    }
  }
  throw Error("positive LP slack without a strict image");
}

}  // namespace

std::optional<DominanceWitness> PureDominates(const GameState& state,
                                              int player, int dominator,
                                              int dominated) {
  RequirePresent(state, player, dominator);
  RequirePresent(state, player, dominated);
  if (dominator == dominated) {
    throw Error("an action cannot dominate itself");
  }
  return PureDominatesOver(state, FeasibleImages(state, player), player,
                           dominator, dominated);
}

std::optional<Rational> DominanceSlack(const GameState& state, int player,
                                       int dominated) {
  RequirePresent(state, player, dominated);
  const auto images = FeasibleImages(state, player);
  auto outcome = SolveDominanceLp(state, images, player, dominated);
  if (!outcome) return std::nullopt;
  return outcome->slack;
}

std::optional<DominanceWitness> MixedDominated(const GameState& state,
                                               int player, int dominated) {
  RequirePresent(state, player, dominated);
  return MixedDominatedOver(state, FeasibleImages(state, player), player,
                            dominated);
}

std::optional<DominanceWitness> FindDominator(const GameState& state,
                                              int player, int dominated,
                                              DominanceKind kind) {
  RequirePresent(state, player, dominated);
  return FindDominator(state, FeasibleImages(state, player), player, dominated,
                       kind);
}

std::optional<DominanceWitness> FindDominator(
    const GameState& state, const std::vector<CommutativeImage>& images,
    int player, int dominated, DominanceKind kind) {
  RequirePresent(state, player, dominated);
  if (state.NumRemaining(player) < 2) return std::nullopt;
  for (int a = 0; a < state.game().num_actions(); ++a) {
    if (a == dominated || !state.Has(player, a)) continue;
    if (auto w = PureDominatesOver(state, images, player, a, dominated)) {
      return w;
    }
  }
  if (kind == DominanceKind::kPure) return std::nullopt;
  return MixedDominatedOver(state, images, player, dominated);
}

bool VerifyWitness(const GameState& state, const DominanceWitness& witness) {
  const AnonymousGame& game = state.game();
  const int player = witness.player;
  if (player < 0 || player >= game.num_players()) return false;
  const int k = game.num_actions();
  if (witness.dominated < 0 || witness.dominated >= k ||
      !state.Has(player, witness.dominated)) {
    return false;
  }
  Rational total = 0;
  for (const auto& [a, weight] : witness.dominator.weights) {
    if (a < 0 || a >= k || a == witness.dominated || !state.Has(player, a) ||
        weight < 0) {
      return false;
    }
    total += weight;
  }
  if (total != 1) return false;

  const auto images = FeasibleImages(state, player);
  if (std::find(images.begin(), images.end(), witness.strict_at) ==
      images.end()) {
    return false;
  }
  for (const auto& y : images) {
    Rational mixed = 0;
    for (const auto& [a, weight] : witness.dominator.weights) {
      mixed += weight * game.Payoff(player, a, y);
    }
    const Rational& base = game.Payoff(player, witness.dominated, y);
    if (mixed < base) return false;
    if (y == witness.strict_at && !(mixed > base)) return false;
  }
  return true;
}

}  // namespace dominion

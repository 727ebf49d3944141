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

#ifndef DOMINION_DOMINANCE_H_
#define DOMINION_DOMINANCE_H_

#include <optional>
#include <utility>
#include <vector>

#include "dominion/core.h"
#include "dominion/game_model.h"

namespace dominion {

enum class DominanceKind { kPure, kMixed };

// Sparse distribution over one player's actions, sorted by action.
struct MixedStrategy {
  std::vector<std::pair<int, Rational>> weights;

  static MixedStrategy Pure(int action) { return {{{action, Rational(1)}}}; }
  bool IsPure() const {
    return weights.size() == 1 && weights.front().second == 1;
  }
  friend bool operator==(const MixedStrategy&, const MixedStrategy&) = default;
};

struct DominanceWitness {
  int player = 0;
  int dominated = 0;
  MixedStrategy dominator;
  CommutativeImage strict_at;  // opponent image with strict improvement

  friend bool operator==(const DominanceWitness&,
                         const DominanceWitness&) = default;
};

// `dominator` weakly dominates `dominated` for `player` over every feasible
// opponent image of `state`.
std::optional<DominanceWitness> PureDominates(const GameState& state,
                                              int player, int dominator,
                                              int dominated);

// Weak dominance by a mixed strategy over the other remaining actions, decided
// by one exact LP that maximizes total slack. A player with a single
// remaining action is never dominated.
std::optional<DominanceWitness> MixedDominated(const GameState& state,
                                               int player, int dominated);

// Optimal total slack of the dominance LP, or nullopt if no mixture is even
// very weakly dominating. Zero means very weak but not weak dominance.
std::optional<Rational> DominanceSlack(const GameState& state, int player,
                                       int dominated);

// Pure mode: first pure dominator by action index. Mixed mode: a pure
// dominator when one exists, else the LP witness.
std::optional<DominanceWitness> FindDominator(const GameState& state,
                                              int player, int dominated,
                                              DominanceKind kind);

// Same, with the feasible opponent images of `player` precomputed.
std::optional<DominanceWitness> FindDominator(
    const GameState& state, const std::vector<CommutativeImage>& images,
    int player, int dominated, DominanceKind kind);

// Replays the inequalities from scratch against `state`.
bool VerifyWitness(const GameState& state, const DominanceWitness& witness);

}  // namespace dominion

#endif  // DOMINION_DOMINANCE_H_

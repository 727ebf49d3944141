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

#ifndef DOMINION_GENERATORS_H_
#define DOMINION_GENERATORS_H_

#include <cstdint>
#include <random>

#include "dominion/game_model.h"
#include "dominion/matched_path.h"
#include "dominion/matrix_elim.h"

namespace dominion {

// The only source of randomness.
using Rng = std::mt19937_64;

struct GameSpec {
  AnonymityClass cls = AnonymityClass::kSelfAnonymous;
  int players = 2;
  int actions = 2;
  // Integer payoffs drawn uniformly from [min_payoff, max_payoff].
  int min_payoff = 0;
  int max_payoff = 2;
  // Non-symmetric classes: when positive, players draw their tables from a
  // pool of this many, so some players share payoffs.
  int table_pool = 0;
};

AnonymousGame RandomGame(const GameSpec& spec, Rng& rng);

// Entries uniform in [0, max_entry].
EliminationMatrix RandomMatrix(int rows, int cols, int max_entry, Rng& rng);

struct LabelingSpec {
  int m = 4;
  int n = 4;
  int labels = 4;
  bool directed_convex = false;
  bool backward_closed = false;
  bool forward_closed = false;
  // Unit label sets, each label on at most two edges.
  bool restricted = false;
  // Unstructured mode: chance of each label on each edge.
  double density = 0.3;
};

// Generates until every requested property holds, as judged by the
// detectors. Throws Error when the requests look contradictory (no success
// within a fixed number of attempts).
GridLabeling RandomLabeling(const LabelingSpec& spec, Rng& rng);

// 5 x 4 matrix with columns a, b, c, d.
EliminationMatrix Fig1Matrix();
// Three players, actions "1", "2", "3", self-anonymous. Player 0 is the
// pictured player; player 1 earns the number of players on "2" and player 2
// the number on "1".
AnonymousGame Fig3Game();

}  // namespace dominion

#endif  // DOMINION_GENERATORS_H_

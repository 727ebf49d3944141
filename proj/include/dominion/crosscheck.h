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

#ifndef DOMINION_CROSSCHECK_H_
#define DOMINION_CROSSCHECK_H_

#include <cstdint>
#include <string>
#include <vector>

#include "dominion/core.h"
#include "dominion/iterated_dominance.h"

namespace dominion {

struct CrosscheckConfig {
  int instances = 200;
  std::uint64_t seed = 1;
  SearchBudget budget;
};

struct CrosscheckSummary {
  std::string battery;
  int instances = 0;
  std::int64_t checks = 0;
  int mismatches = 0;
  int unknown = 0;  // a side ran out of budget; not compared
  // Checks answered "yes" (or, for property batteries, non-vacuous).
  std::int64_t positives = 0;
  // Offending instances, serialized, at most a handful.
  std::vector<std::string> counterexamples;

  bool ok() const { return mismatches == 0 && unknown == 0; }
};

// Two-action self-anonymous games, payoffs in {0, 1, 2}: stepwise IDS against
// ME of the derived matrix, and IDE of each (player, action) against CE of
// the player's column on the matching side. Certificates are translated
// both ways and replayed.
CrosscheckSummary CrosscheckIdsMe(const CrosscheckConfig& config,
                                  int max_players = 5);

// ME at every length against MP from the source of the reduced labeling.
CrosscheckSummary CrosscheckMeMp(const CrosscheckConfig& config,
                                 int max_rows = 6, int max_cols = 5);

// Every reduced labeling is directed convex.
CrosscheckSummary CrosscheckReducedConvexity(const CrosscheckConfig& config,
                                             int max_rows = 6,
                                             int max_cols = 5);

// ME and CE against exhaustive enumeration.
CrosscheckSummary CrosscheckMeOracle(const CrosscheckConfig& config,
                                     int max_rows = 4, int max_cols = 3,
                                     int max_entry = 2);

// Stepwise IDS, pure and mixed, against the normal-form oracle on games of
// every class with players * actions <= max_size.
CrosscheckSummary CrosscheckIdsOracle(const CrosscheckConfig& config,
                                      int max_size = 8);

// Closed solver against general search on directed-convex labelings that
// are backward or forward closed, at every length.
CrosscheckSummary CrosscheckClosedMp(const CrosscheckConfig& config,
                                     int max_side = 6);

// Canonical-state solver against the general one on symmetric games.
CrosscheckSummary CrosscheckSymmetric(const CrosscheckConfig& config,
                                      int max_players = 6,
                                      int max_actions = 3);

// Pure and mixed dominance agree on two-action games and on games with two
// payoff values, over random subgames.
CrosscheckSummary CrosscheckDominanceCoincidence(
    const CrosscheckConfig& config);

struct ScalingPoint {
  int size = 0;
  double nodes = 0;
};

struct ScalingResult {
  std::vector<ScalingPoint> points;
  double exponent = 0;  // least-squares slope of log nodes on log size
};

double FitExponent(const std::vector<ScalingPoint>& points);

// Closed solver on square grids of each size, length equal to the side,
// mean nodes over `samples` labelings.
ScalingResult ClosedMpScaling(const std::vector<int>& sizes, int samples,
                              std::uint64_t seed);

// Reachable canonical states of two-action symmetric games where action 1
// earns 0 or 1 at random and action 0 always earns 0; mean over `samples`
// games per player count.
ScalingResult SymmetricScaling(const std::vector<int>& players, int samples,
                               std::uint64_t seed, EliminationMode mode);

}  // namespace dominion

#endif  // DOMINION_CROSSCHECK_H_

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

#ifndef DOMINION_ITERATED_DOMINANCE_H_
#define DOMINION_ITERATED_DOMINANCE_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "dominion/core.h"
#include "dominion/dominance.h"
#include "dominion/game_model.h"

namespace dominion {

enum class EliminationMode { kStepwise, kBatch };

struct Elimination {
  int player = 0;
  int action = 0;
  // Recorded against the state just before the enclosing batch.
  std::optional<DominanceWitness> witness;

  friend bool operator==(const Elimination&, const Elimination&) = default;
};

struct EliminationSequence {
  std::vector<std::vector<Elimination>> batches;

  bool IsStepwise() const;
  std::size_t NumEliminations() const;
  friend bool operator==(const EliminationSequence&,
                         const EliminationSequence&) = default;
};

// Replays `sequence` from the initial state. Attached witnesses are verified
// as given (pure mode additionally requires them to be pure); eliminations
// without a witness are re-decided under `kind`.
ValidationResult ValidateSequence(const AnonymousGame& game,
                                  const EliminationSequence& sequence,
                                  DominanceKind kind);

// Final state after replaying a sequence. Throws on removed actions.
GameState ApplySequence(const AnonymousGame& game,
                        const EliminationSequence& sequence);

struct SolveOptions {
  EliminationMode mode = EliminationMode::kStepwise;
  DominanceKind dominance = DominanceKind::kPure;
  SearchBudget budget;
};

struct SolveResult {
  Verdict verdict = Verdict::kUnknown;
  std::optional<EliminationSequence> sequence;  // set iff kYes
  std::uint64_t nodes = 0;
};

// Dominated actions of every player in `state`, ordered by (player, action).
std::vector<Elimination> DominatedActions(const GameState& state,
                                          DominanceKind kind);

// Iterated dominance solvability by depth-first search with memoized failed
// states. Players sharing a payoff table are interchangeable in the memo key.
// Batch mode branches over every nonempty subset of the dominated set.
SolveResult SolveIds(const AnonymousGame& game, const SolveOptions& options);

struct EliminationTarget {
  int player = 0;
  int action = 0;
};

// Searches for a valid sequence after which `target` is dominated. With
// `require_removal`, the returned sequence also removes the target in a final
// batch.
SolveResult SolveIde(const AnonymousGame& game, EliminationTarget target,
                     const SolveOptions& options,
                     bool require_removal = false);

// Solvability for symmetric games over canonical states: the multiset of
// remaining action sets. `nodes` counts distinct canonical states expanded.
// Throws Error unless the game classifies as symmetric.
SolveResult SolveIdsSymmetric(const AnonymousGame& game,
                              const SolveOptions& options);

// Canonical states reachable from the initial one, terminal states included.
// Throws BudgetExceeded past the node budget.
std::uint64_t CountCanonicalStates(const AnonymousGame& game,
                                   const SolveOptions& options);

// Ground truth: exhaustive search over every stepwise elimination order, with
// dominance decided on the expanded normal form. No memoization.
Verdict OracleIds(const AnonymousGame& game, DominanceKind kind,
                  const OracleLimits& limits = {});

}  // namespace dominion

#endif  // DOMINION_ITERATED_DOMINANCE_H_

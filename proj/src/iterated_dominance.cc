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

#include "dominion/iterated_dominance.h"

#include <algorithm>
#include <set>
#include <string>
#include <unordered_set>
#include <utility>

namespace dominion {

bool EliminationSequence::IsStepwise() const {
  return std::all_of(batches.begin(), batches.end(),
                     [](const auto& b) { return b.size() == 1; });
}

std::size_t EliminationSequence::NumEliminations() const {
  std::size_t total = 0;
  for (const auto& b : batches) total += b.size();
  return total;
}

ValidationResult ValidateSequence(const AnonymousGame& game,
                                  const EliminationSequence& sequence,
                                  DominanceKind kind) {
  std::vector<ActionSet> remaining = GameState::Initial(game).remaining();
  std::set<std::pair<int, int>> seen;
  for (std::size_t b = 0; b < sequence.batches.size(); ++b) {
    const auto& batch = sequence.batches[b];
    const std::string where = "batch " + std::to_string(b) + ": ";
    if (batch.empty()) return ValidationResult::Fail(where + "empty batch");
    const GameState before(game, remaining);
    for (const Elimination& e : batch) {
      const std::string what = where + "player " + std::to_string(e.player) +
                               " action " + std::to_string(e.action);
      if (e.player < 0 || e.player >= game.num_players() || e.action < 0 ||
          e.action >= game.num_actions()) {
        return ValidationResult::Fail(what + " out of range");
      }
      if (!seen.emplace(e.player, e.action).second) {
        return ValidationResult::Fail(what + " eliminated twice");
      }
      if (!before.Has(e.player, e.action)) {
        return ValidationResult::Fail(what + " already removed");
      }
      if (e.witness) {
        const DominanceWitness& w = *e.witness;
        if (w.player != e.player || w.dominated != e.action) {
          return ValidationResult::Fail(what + " witness names another action");
        }
        if (kind == DominanceKind::kPure && !w.dominator.IsPure()) {
          return ValidationResult::Fail(what + " witness is not pure");
        }
        if (!VerifyWitness(before, w)) {
          return ValidationResult::Fail(what + " witness does not verify");
        }
      } else if (!FindDominator(before, e.player, e.action, kind)) {
        return ValidationResult::Fail(what + " is not dominated");
      }
      remaining[e.player] &= ~(ActionSet{1} << e.action);
      if (remaining[e.player] == 0) {
        return ValidationResult::Fail(what + " leaves the player no action");
      }
    }
  }
  return ValidationResult::Ok();
}

GameState ApplySequence(const AnonymousGame& game,
                        const EliminationSequence& sequence) {
  GameState state = GameState::Initial(game);
  for (const auto& batch : sequence.batches) {
    for (const Elimination& e : batch) state = state.Without(e.player, e.action);
  }
  return state;
}

std::vector<Elimination> DominatedActions(const GameState& state,
                                          DominanceKind kind) {
  std::vector<Elimination> out;
  const AnonymousGame& game = state.game();
  for (int i = 0; i < game.num_players(); ++i) {
    if (state.NumRemaining(i) < 2) continue;
    const auto images = FeasibleImages(state, i);
    for (int a = 0; a < game.num_actions(); ++a) {
      if (!state.Has(i, a)) continue;
      if (auto w = FindDominator(state, images, i, a, kind)) {
        out.push_back(Elimination{i, a, std::move(*w)});
      }
    }
  }
  return out;
}

namespace {

struct OutOfBudget {};

struct KeyHash {
  std::size_t operator()(const std::vector<std::uint32_t>& key) const {
    std::size_t h = key.size();
    for (std::uint32_t v : key) {
      h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};

class EliminationSearch {
 public:
  EliminationSearch(const AnonymousGame& game, const SolveOptions& options,
                    std::optional<EliminationTarget> target)
      : game_(game), options_(options), target_(target) {}

  SolveResult Run() {
    SolveResult result;
    try {
      const bool found = Dfs(GameState::Initial(game_));
      result.verdict = found ? Verdict::kYes : Verdict::kNo;
      if (found) result.sequence = EliminationSequence{path_};
    } catch (const OutOfBudget&) {
      result.verdict = Verdict::kUnknown;
    }
    result.nodes = nodes_;
    return result;
  }

  const std::optional<DominanceWitness>& goal_witness() const {
    return goal_witness_;
  }

 private:
  bool IsGoal(const GameState& state) {
    if (!target_) return state.IsTerminal();
    if (!state.Has(target_->player, target_->action)) return false;
    goal_witness_ = FindDominator(state, target_->player, target_->action,
                                  options_.dominance);
    return goal_witness_.has_value();
  }

  // Players sharing a payoff table are interchangeable; the target player
  // keeps its identity.
  std::vector<std::uint32_t> Key(const GameState& state) const {
    std::vector<std::pair<int, ActionSet>> tagged;
    tagged.reserve(game_.num_players());
    for (int i = 0; i < game_.num_players(); ++i) {
      const int group =
          (target_ && target_->player == i) ? -1 : game_.table_id(i);
      tagged.emplace_back(group, state.Remaining(i));
    }
    std::sort(tagged.begin(), tagged.end());
    std::vector<std::uint32_t> key;
    key.reserve(2 * tagged.size());
    for (const auto& [group, mask] : tagged) {
      key.push_back(static_cast<std::uint32_t>(group + 1));
      key.push_back(mask);
    }
    return key;
  }

  bool Dfs(const GameState& state) {
    if (++nodes_ > options_.budget.max_nodes) throw OutOfBudget{};
    if (IsGoal(state)) return true;
    auto key = Key(state);
    if (failed_.contains(key)) return false;

    const std::vector<Elimination> moves =
        DominatedActions(state, options_.dominance);
    if (options_.mode == EliminationMode::kStepwise) {
      for (const Elimination& move : moves) {
        path_.push_back({move});
        if (Dfs(state.Without(move.player, move.action))) return true;
        path_.pop_back();
      }
    } else if (!moves.empty()) {
      const std::size_t d = moves.size();
      if (d >= 63) throw OutOfBudget{};
      // Descending bitmask order, starting with the whole dominated set.
      for (std::uint64_t mask = (std::uint64_t{1} << d) - 1; mask > 0;
           --mask) {
        std::vector<Elimination> batch;
        GameState next = state;
        for (std::size_t b = 0; b < d; ++b) {
          if (!((mask >> b) & 1u)) continue;
          batch.push_back(moves[b]);
          next = next.Without(moves[b].player, moves[b].action);
        }
        path_.push_back(std::move(batch));
        if (Dfs(next)) return true;
        path_.pop_back();
      }
    }
    failed_.insert(std::move(key));
    return false;
  }

  const AnonymousGame& game_;
  SolveOptions options_;
  std::optional<EliminationTarget> target_;
  std::unordered_set<std::vector<std::uint32_t>, KeyHash> failed_;
  std::vector<std::vector<Elimination>> path_;
  std::optional<DominanceWitness> goal_witness_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

SolveResult SolveIds(const AnonymousGame& game, const SolveOptions& options) {
  return EliminationSearch(game, options, std::nullopt).Run();
}

SolveResult SolveIde(const AnonymousGame& game, EliminationTarget target,
                     const SolveOptions& options, bool require_removal) {
  if (target.player < 0 || target.player >= game.num_players() ||
      target.action < 0 || target.action >= game.num_actions()) {
    throw Error("elimination target is not part of the game");
  }
  EliminationSearch search(game, options, target);
  SolveResult result = search.Run();
  if (require_removal && result.verdict == Verdict::kYes) {
    result.sequence->batches.push_back(
        {Elimination{target.player, target.action, search.goal_witness()}});
  }
  return result;
}

}  // namespace dominion

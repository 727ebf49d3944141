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

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <utility>

#include "dominion/iterated_dominance.h"

namespace dominion {
namespace {

struct OutOfBudget {};

// Number of players per remaining action set.
using CanonicalState = std::map<ActionSet, int>;

// One class-level move: `count` players whose remaining set is `from` each
// remove every action in `removed`.
struct ClassMove {
  ActionSet from = 0;
  ActionSet removed = 0;
  int count = 0;
};

class SymmetricSearch {
 public:
  SymmetricSearch(const AnonymousGame& game, const SolveOptions& options,
                  bool exhaustive = false)
      : game_(game), options_(options), exhaustive_(exhaustive) {}

  SolveResult Run() {
    SolveResult result;
    const GameState initial = GameState::Initial(game_);
    CanonicalState start;
    start[initial.Remaining(0)] = game_.num_players();
    try {
      const bool found = Dfs(start);
      result.verdict = found ? Verdict::kYes : Verdict::kNo;
      if (found) result.sequence = Reconstruct();
    } catch (const OutOfBudget&) {
      result.verdict = Verdict::kUnknown;
    }
    result.nodes = expanded_;
    return result;
  }

  std::uint64_t visited() const { return visited_.size(); }

 private:
  // Players take the classes in ascending mask order.
  GameState Materialize(const CanonicalState& state) const {
    std::vector<ActionSet> remaining;
    remaining.reserve(game_.num_players());
    for (const auto& [mask, count] : state) {
      remaining.insert(remaining.end(), count, mask);
    }
    return GameState(game_, std::move(remaining));
  }

  static bool IsTerminal(const CanonicalState& state) {
    return std::all_of(state.begin(), state.end(), [](const auto& entry) {
      return std::popcount(entry.first) == 1;
    });
  }

  // Dominated actions of one representative per class. Every member of a
  // class faces the same opponent multiset, so the answer is class-wide.
  std::vector<std::pair<ActionSet, ActionSet>> DominatedByClass(
      const CanonicalState& state) const {
    const GameState concrete = Materialize(state);
    std::vector<std::pair<ActionSet, ActionSet>> out;
    int representative = 0;
    for (const auto& [mask, count] : state) {
      if (std::popcount(mask) >= 2) {
        const auto images = FeasibleImages(concrete, representative);
        ActionSet dominated = 0;
        for (int a = 0; a < game_.num_actions(); ++a) {
          if (!((mask >> a) & 1u)) continue;
          if (FindDominator(concrete, images, representative, a,
                            options_.dominance)) {
            dominated |= ActionSet{1} << a;
          }
        }
        if (dominated != 0) out.emplace_back(mask, dominated);
      }
      representative += count;
    }
    return out;
  }

  static CanonicalState Apply(const CanonicalState& state,
                              const std::vector<ClassMove>& moves) {
    CanonicalState next = state;
    for (const ClassMove& m : moves) {
      if ((next[m.from] -= m.count) == 0) next.erase(m.from);
      next[m.from & ~m.removed] += m.count;
    }
    return next;
  }

  // Every way to let players of each class remove a nonempty subset of the
  // class's dominated actions, with at least one player moving overall.
  std::vector<std::vector<ClassMove>> BatchMoves(
      const CanonicalState& state,
      const std::vector<std::pair<ActionSet, ActionSet>>& dominated) const {
    // Per class: all distributions of at most `count` players over the
    // nonempty subsets of the dominated set.
    std::vector<std::vector<std::vector<ClassMove>>> per_class;
    for (const auto& [mask, dom] : dominated) {
      std::vector<ActionSet> subsets;
      for (ActionSet s = dom;; s = (s - 1) & dom) {
        if (s != 0) subsets.push_back(s);
        if (s == 0) break;
      }
      std::vector<std::vector<ClassMove>> options;
      std::vector<ClassMove> current;
      const int available = state.at(mask);
      auto distribute = [&](auto&& self, std::size_t index, int left) -> void {
        if (index == subsets.size()) {
          options.push_back(current);
          return;
        }
        for (int c = left; c >= 0; --c) {
          if (c > 0) current.push_back(ClassMove{mask, subsets[index], c});
          self(self, index + 1, left - c);
          if (c > 0) current.pop_back();
        }
      };
      distribute(distribute, 0, available);
      per_class.push_back(std::move(options));
    }
    std::vector<std::vector<ClassMove>> out;
    std::vector<ClassMove> current;
    auto combine = [&](auto&& self, std::size_t index) -> void {
      if (index == per_class.size()) {
        if (!current.empty()) out.push_back(current);
        return;
      }
      for (const auto& option : per_class[index]) {
        const std::size_t mark = current.size();
        current.insert(current.end(), option.begin(), option.end());
        self(self, index + 1);
        current.resize(mark);
      }
    };
    combine(combine, 0);
    return out;
  }

  bool Dfs(const CanonicalState& state) {
    if (IsTerminal(state) && !exhaustive_) return true;
    if (visited_.contains(state)) return false;
    visited_.insert(state);
    if (++expanded_ > options_.budget.max_nodes) throw OutOfBudget{};
    if (IsTerminal(state)) return false;

    const auto dominated = DominatedByClass(state);
    if (options_.mode == EliminationMode::kStepwise) {
      for (const auto& [mask, dom] : dominated) {
        for (int a = 0; a < game_.num_actions(); ++a) {
          if (!((dom >> a) & 1u)) continue;
          std::vector<ClassMove> batch = {
              ClassMove{mask, ActionSet{1} << a, 1}};
          path_.push_back(batch);
          if (Dfs(Apply(state, batch))) return true;
          path_.pop_back();
        }
      }
    } else {
      for (auto& batch : BatchMoves(state, dominated)) {
        path_.push_back(batch);
        if (Dfs(Apply(state, batch))) return true;
        path_.pop_back();
      }
    }
    return false;
  }

  // Replays the class moves on concrete players, lowest index first.
  EliminationSequence Reconstruct() const {
    EliminationSequence sequence;
    GameState state = GameState::Initial(game_);
    for (const auto& moves : path_) {
      std::vector<Elimination> batch;
      std::vector<bool> taken(game_.num_players(), false);
      for (const ClassMove& m : moves) {
        int left = m.count;
        for (int i = 0; i < game_.num_players() && left > 0; ++i) {
          if (taken[i] || state.Remaining(i) != m.from) continue;
          taken[i] = true;
          --left;
          for (int a = 0; a < game_.num_actions(); ++a) {
            if (!((m.removed >> a) & 1u)) continue;
            batch.push_back(Elimination{
                i, a, FindDominator(state, i, a, options_.dominance)});
          }
        }
      }
      for (const Elimination& e : batch) {
        state = state.Without(e.player, e.action);
      }
      sequence.batches.push_back(std::move(batch));
    }
    return sequence;
  }

  const AnonymousGame& game_;
  SolveOptions options_;
  bool exhaustive_;
  std::set<CanonicalState> visited_;
  std::vector<std::vector<ClassMove>> path_;
  std::uint64_t expanded_ = 0;
};

}  // namespace

SolveResult SolveIdsSymmetric(const AnonymousGame& game,
                              const SolveOptions& options) {
  if (!DetectClasses(game).Contains(AnonymityClass::kSymmetric)) {
    throw Error("the symmetric solver requires a symmetric game");
  }
  return SymmetricSearch(game, options).Run();
}

std::uint64_t CountCanonicalStates(const AnonymousGame& game,
                                   const SolveOptions& options) {
  if (!DetectClasses(game).Contains(AnonymityClass::kSymmetric)) {
    throw Error("canonical states require a symmetric game");
  }
  SymmetricSearch search(game, options, /*exhaustive=*/true);
  if (search.Run().verdict == Verdict::kUnknown) {
    throw BudgetExceeded("canonical state space exceeds the budget");
  }
  return search.visited();
}

}  // namespace dominion

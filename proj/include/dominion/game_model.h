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

#ifndef DOMINION_GAME_MODEL_H_
#define DOMINION_GAME_MODEL_H_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dominion/core.h"

namespace dominion {

// Number of players choosing each action. Length is the number of actions.
struct CommutativeImage {
  std::vector<int> counts;

  int Total() const;
  int NumActions() const { return static_cast<int>(counts.size()); }
  CommutativeImage Plus(int action) const;

  friend bool operator==(const CommutativeImage&,
                         const CommutativeImage&) = default;
};

// Colexicographic order: compare the last coordinate first. For two actions
// this sorts images by how many players choose action 1.
bool ColexLess(const CommutativeImage& a, const CommutativeImage& b);

// Number of images of `total` players over `num_actions` actions.
std::size_t NumImages(int total, int num_actions);
std::size_t ColexRank(const CommutativeImage& image);
// All images of `total` players over `num_actions` actions, colex order.
std::vector<CommutativeImage> ImagesColex(int total, int num_actions);

// Throws Error on an action outside [0, num_actions).
CommutativeImage ImageOf(std::span<const int> profile, int num_actions);

enum class AnonymityClass {
  kAnonymous,
  kSymmetric,
  kSelfAnonymous,
  kSelfSymmetric,
};

std::string_view ClassName(AnonymityClass c);
AnonymityClass ParseClassName(std::string_view name);

// Small set over the four classes.
class ClassSet {
 public:
  ClassSet() = default;
  void Insert(AnonymityClass c) { bits_ |= Bit(c); }
  bool Contains(AnonymityClass c) const { return bits_ & Bit(c); }
  bool Empty() const { return bits_ == 0; }
  std::string ToString() const;
  friend bool operator==(ClassSet, ClassSet) = default;

  static ClassSet All();

 private:
  static unsigned Bit(AnonymityClass c) { return 1u << static_cast<int>(c); }
  unsigned bits_ = 0;
};

// Payoff function of one player. Self-anonymous tables are keyed by the full
// image of all n players; anonymous tables by (own action, image of the n-1
// opponents). Both are laid out in colex order.
class PayoffTable {
 public:
  enum class Kind { kFullImage, kOwnAction };

  static PayoffTable FullImage(int num_players, int num_actions,
                               std::vector<Rational> by_image);
  static PayoffTable OwnAction(int num_players, int num_actions,
                               std::vector<std::vector<Rational>> by_action);

  Kind kind() const { return kind_; }
  int num_players() const { return num_players_; }
  int num_actions() const { return num_actions_; }

  // `opponents` must total num_players - 1.
  const Rational& Payoff(int own_action,
                         const CommutativeImage& opponents) const;
  // Only for kFullImage tables.
  const Rational& PayoffOfImage(const CommutativeImage& full) const;

  const std::vector<Rational>& values() const { return values_; }
  std::size_t ContentHash() const;

  friend bool operator==(const PayoffTable& a, const PayoffTable& b);

 private:
  PayoffTable(Kind kind, int n, int k, std::vector<Rational> values)
      : kind_(kind), num_players_(n), num_actions_(k),
        values_(std::move(values)) {}

  Kind kind_;
  int num_players_;
  int num_actions_;
  // kOwnAction: action-major, opponent image colex rank minor.
  std::vector<Rational> values_;
};

// Anonymous game with a common action set. Payoff tables are shared between
// players with identical content.
class AnonymousGame {
 public:
  // Self-anonymous and self-symmetric tags require kFullImage tables,
  // the others kOwnAction tables. Symmetric tags require identical tables.
  AnonymousGame(int num_players, std::vector<std::string> action_names,
                AnonymityClass tag, std::vector<PayoffTable> per_player);

  int num_players() const { return num_players_; }
  int num_actions() const { return static_cast<int>(action_names_.size()); }
  const std::vector<std::string>& action_names() const { return action_names_; }
  int ActionIndex(std::string_view name) const;
  AnonymityClass tag() const { return tag_; }

  const PayoffTable& table(int player) const {
    return tables_[table_of_player_[player]];
  }
  int table_id(int player) const { return table_of_player_[player]; }
  int num_distinct_tables() const { return static_cast<int>(tables_.size()); }

  const Rational& Payoff(int player, int action,
                         const CommutativeImage& opponents) const;

 private:
  int num_players_;
  std::vector<std::string> action_names_;
  AnonymityClass tag_;
  std::vector<PayoffTable> tables_;
  std::vector<int> table_of_player_;
};

// Classes whose defining equalities hold for the tables of `game`.
ClassSet DetectClasses(const AnonymousGame& game);

using ActionSet = std::uint32_t;  // bit a set <=> action a remains
inline constexpr int kMaxActions = 32;

// Induced subgame: per-player remaining actions. Never empty.
class GameState {
 public:
  static GameState Initial(const AnonymousGame& game);
  GameState(const AnonymousGame& game, std::vector<ActionSet> remaining);

  const AnonymousGame& game() const { return *game_; }
  const std::vector<ActionSet>& remaining() const { return remaining_; }
  ActionSet Remaining(int player) const { return remaining_[player]; }
  bool Has(int player, int action) const {
    return (remaining_[player] >> action) & 1u;
  }
  int NumRemaining(int player) const;
  bool IsTerminal() const;

  GameState Without(int player, int action) const;

  friend bool operator==(const GameState& a, const GameState& b) {
    return a.game_ == b.game_ && a.remaining_ == b.remaining_;
  }

 private:
  const AnonymousGame* game_;
  std::vector<ActionSet> remaining_;
};

// Opponent images realizable when every j != player picks from its remaining
// actions. Computed by convolving per-player count sets. Colex order.
std::vector<CommutativeImage> FeasibleImages(const GameState& state,
                                             int player);

// Checked lookup: throws when `action` was removed or `opponents` is not
// realizable in `state`.
Rational StatePayoff(const GameState& state, int player, int action,
                     const CommutativeImage& opponents);

// Explicit payoff tensor. Profile index encodes player 0 as the most
// significant base-k digit.
struct NormalFormGame {
  int num_players = 0;
  int num_actions = 0;
  std::vector<Rational> payoffs;  // [profile * num_players + player]

  std::uint64_t NumProfiles() const;
  std::vector<int> Profile(std::uint64_t index) const;
  std::uint64_t Index(std::span<const int> profile) const;
  const Rational& At(std::uint64_t profile, int player) const {
    return payoffs[profile * num_players + player];
  }
};

NormalFormGame ExpandNormalForm(const AnonymousGame& game,
                                const OracleLimits& limits = {});

// Maximal set of anonymity classes whose equalities hold, checked
// exhaustively over profiles. Throws Error on an incomplete table.
ClassSet Classify(const NormalFormGame& game);

}  // namespace dominion

#endif  // DOMINION_GAME_MODEL_H_

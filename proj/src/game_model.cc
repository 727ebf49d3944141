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

#include "dominion/game_model.h"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <utility>

namespace dominion {

int CommutativeImage::Total() const {
  return std::accumulate(counts.begin(), counts.end(), 0);
}

CommutativeImage CommutativeImage::Plus(int action) const {
  CommutativeImage out = *this;
  ++out.counts[action];
  return out;
}

bool ColexLess(const CommutativeImage& a, const CommutativeImage& b) {
  return std::lexicographical_compare(a.counts.rbegin(), a.counts.rend(),
                                      b.counts.rbegin(), b.counts.rend());
}

std::size_t NumImages(int total, int num_actions) {
  if (total < 0) return 0;
  if (num_actions == 0) return total == 0 ? 1 : 0;
  // C(total + k - 1, k - 1)
  std::size_t result = 1;
  for (int i = 1; i < num_actions; ++i) {
    result = result * static_cast<std::size_t>(total + i) / i;
  }
  return result;
}

std::size_t ColexRank(const CommutativeImage& image) {
  const int k = image.NumActions();
  int remaining = image.Total();
  std::size_t rank = 0;
  for (int j = k - 1; j >= 1; --j) {
    for (int v = 0; v < image.counts[j]; ++v) {
      rank += NumImages(remaining - v, j);
    }
    remaining -= image.counts[j];
  }
  return rank;
}

std::vector<CommutativeImage> ImagesColex(int total, int num_actions) {
  std::vector<CommutativeImage> out;
  out.reserve(NumImages(total, num_actions));
  CommutativeImage current{std::vector<int>(num_actions, 0)};
  std::function<void(int, int)> fill = [&](int index, int left) {
    if (index == 0) {
      current.counts[0] = left;
      out.push_back(current);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      current.counts[index] = v;
      fill(index - 1, left - v);
    }
  };
  if (num_actions == 0) {
    if (total == 0) out.push_back(current);
    return out;
  }
  fill(num_actions - 1, total);
  return out;
}

CommutativeImage ImageOf(std::span<const int> profile, int num_actions) {
  CommutativeImage image{std::vector<int>(num_actions, 0)};
  for (int a : profile) {
    if (a < 0 || a >= num_actions) {
      throw Error("unknown action index " + std::to_string(a));
    }
    ++image.counts[a];
  }
  return image;
}

std::string_view ClassName(AnonymityClass c) {
  switch (c) {
    case AnonymityClass::kAnonymous:
      return "anonymous";
    case AnonymityClass::kSymmetric:
      return "symmetric";
    case AnonymityClass::kSelfAnonymous:
      return "self-anonymous";
    case AnonymityClass::kSelfSymmetric:
      return "self-symmetric";
  }
  return "anonymous";
}

AnonymityClass ParseClassName(std::string_view name) {
  for (AnonymityClass c :
       {AnonymityClass::kAnonymous, AnonymityClass::kSymmetric,
        AnonymityClass::kSelfAnonymous, AnonymityClass::kSelfSymmetric}) {
    if (ClassName(c) == name) return c;
  }
  throw Error("unknown anonymity class '" + std::string(name) + "'");
}

ClassSet ClassSet::All() {
  ClassSet s;
  s.Insert(AnonymityClass::kAnonymous);
  s.Insert(AnonymityClass::kSymmetric);
  s.Insert(AnonymityClass::kSelfAnonymous);
  s.Insert(AnonymityClass::kSelfSymmetric);
  return s;
}

std::string ClassSet::ToString() const {
  std::string out = "{";
  bool first = true;
  for (AnonymityClass c :
       {AnonymityClass::kAnonymous, AnonymityClass::kSymmetric,
        AnonymityClass::kSelfAnonymous, AnonymityClass::kSelfSymmetric}) {
    if (!Contains(c)) continue;
    if (!first) out += ",";
    out += ClassName(c);
    first = false;
  }
  return out + "}";
}

// ---------------------------------------------------------------------------
// PayoffTable

PayoffTable PayoffTable::FullImage(int num_players, int num_actions,
                                   std::vector<Rational> by_image) {
  if (by_image.size() != NumImages(num_players, num_actions)) {
    throw Error("full-image payoff table has " +
                std::to_string(by_image.size()) + " entries, expected " +
                std::to_string(NumImages(num_players, num_actions)));
  }
  return PayoffTable(Kind::kFullImage, num_players, num_actions,
                     std::move(by_image));
}

PayoffTable PayoffTable::OwnAction(
    int num_players, int num_actions,
    std::vector<std::vector<Rational>> by_action) {
  if (static_cast<int>(by_action.size()) != num_actions) {
    throw Error("payoff table needs one row per action");
  }
  const std::size_t per = NumImages(num_players - 1, num_actions);
  std::vector<Rational> flat;
  flat.reserve(per * num_actions);
  for (auto& row : by_action) {
    if (row.size() != per) {
      throw Error("payoff row has " + std::to_string(row.size()) +
                  " entries, expected " + std::to_string(per));
    }
    for (auto& v : row) flat.push_back(std::move(v));
  }
  return PayoffTable(Kind::kOwnAction, num_players, num_actions,
                     std::move(flat));
}

const Rational& PayoffTable::Payoff(int own_action,
                                    const CommutativeImage& opponents) const {
  if (kind_ == Kind::kFullImage) {
    return values_[ColexRank(opponents.Plus(own_action))];
  }
  const std::size_t per = NumImages(num_players_ - 1, num_actions_);
  return values_[own_action * per + ColexRank(opponents)];
}

const Rational& PayoffTable::PayoffOfImage(const CommutativeImage& full) const {
  if (kind_ != Kind::kFullImage) {
    throw Error("payoff by full image requires a self-anonymous table");
  }
  return values_[ColexRank(full)];
}

std::size_t PayoffTable::ContentHash() const {
  std::size_t h = std::hash<int>()(static_cast<int>(kind_));
  for (const Rational& v : values_) {
    const std::size_t x = std::hash<std::string>()(v.get_str());
    h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

bool operator==(const PayoffTable& a, const PayoffTable& b) {
  return a.kind_ == b.kind_ && a.num_players_ == b.num_players_ &&
         a.num_actions_ == b.num_actions_ && a.values_ == b.values_;
}

// ---------------------------------------------------------------------------
// AnonymousGame

AnonymousGame::AnonymousGame(int num_players,
                             std::vector<std::string> action_names,
                             AnonymityClass tag,
                             std::vector<PayoffTable> per_player)
    : num_players_(num_players),
      action_names_(std::move(action_names)),
      tag_(tag) {
  if (num_players < 1) throw Error("a game needs at least one player");
  if (action_names_.empty()) throw Error("a game needs at least one action");
  if (num_actions() > kMaxActions) {
    throw Error("at most " + std::to_string(kMaxActions) +
                " actions are supported");
  }
  if (static_cast<int>(per_player.size()) != num_players) {
    throw Error("expected one payoff table per player");
  }
  const bool self = tag == AnonymityClass::kSelfAnonymous ||
                    tag == AnonymityClass::kSelfSymmetric;
  const bool symmetric = tag == AnonymityClass::kSymmetric ||
                         tag == AnonymityClass::kSelfSymmetric;
  const auto want = self ? PayoffTable::Kind::kFullImage
                         : PayoffTable::Kind::kOwnAction;
  std::multimap<std::size_t, int> by_hash;
  for (PayoffTable& t : per_player) {
    if (t.kind() != want || t.num_players() != num_players ||
        t.num_actions() != num_actions()) {
      throw Error(std::string("payoff table shape does not match class ") +
                  std::string(ClassName(tag)));
    }
    const std::size_t h = t.ContentHash();
    int id = -1;
    auto [lo, hi] = by_hash.equal_range(h);
    for (auto it = lo; it != hi; ++it) {
      if (tables_[it->second] == t) {
        id = it->second;
        break;
      }
    }
    if (id < 0) {
      id = static_cast<int>(tables_.size());
      by_hash.emplace(h, id);
      tables_.push_back(std::move(t));
    }
    table_of_player_.push_back(id);
  }
  if (symmetric && tables_.size() != 1) {
    throw Error("symmetric game with differing payoff tables");
  }
}

int AnonymousGame::ActionIndex(std::string_view name) const {
  for (int a = 0; a < num_actions(); ++a) {
    if (action_names_[a] == name) return a;
  }
  throw Error("unknown action '" + std::string(name) + "'");
}

const Rational& AnonymousGame::Payoff(int player, int action,
                                      const CommutativeImage& opponents) const {
  return table(player).Payoff(action, opponents);
}

ClassSet DetectClasses(const AnonymousGame& game) {
  const int n = game.num_players();
  const int k = game.num_actions();
  const auto opponent_images = ImagesColex(n - 1, k);

  bool self_anonymous = true;
  for (int t = 0; t < game.num_distinct_tables() && self_anonymous; ++t) {
    int player = 0;
    while (game.table_id(player) != t) ++player;
    const PayoffTable& table = game.table(player);
    if (table.kind() == PayoffTable::Kind::kFullImage) continue;
    std::vector<const Rational*> by_full(NumImages(n, k), nullptr);
    for (int a = 0; a < k && self_anonymous; ++a) {
      for (const auto& y : opponent_images) {
        const Rational& v = table.Payoff(a, y);
        const Rational*& slot = by_full[ColexRank(y.Plus(a))];
        if (slot == nullptr) {
          slot = &v;
        } else if (*slot != v) {
          self_anonymous = false;
          break;
        }
      }
    }
  }

  bool symmetric = true;
  for (int i = 1; i < n && symmetric; ++i) {
    if (game.table_id(i) == game.table_id(0)) continue;
    for (int a = 0; a < k && symmetric; ++a) {
      for (const auto& y : opponent_images) {
        if (game.Payoff(i, a, y) != game.Payoff(0, a, y)) {
          symmetric = false;
          break;
        }
      }
    }
  }

  ClassSet out;
  out.Insert(AnonymityClass::kAnonymous);
  if (symmetric) out.Insert(AnonymityClass::kSymmetric);
  if (self_anonymous) out.Insert(AnonymityClass::kSelfAnonymous);
  if (symmetric && self_anonymous) out.Insert(AnonymityClass::kSelfSymmetric);
  return out;
}

// ---------------------------------------------------------------------------
// GameState

GameState GameState::Initial(const AnonymousGame& game) {
  const ActionSet all = game.num_actions() == kMaxActions
                            ? ~ActionSet{0}
                            : (ActionSet{1} << game.num_actions()) - 1;
  return GameState(game, std::vector<ActionSet>(game.num_players(), all));
}

GameState::GameState(const AnonymousGame& game, std::vector<ActionSet> remaining)
    : game_(&game), remaining_(std::move(remaining)) {
  if (static_cast<int>(remaining_.size()) != game.num_players()) {
    throw Error("state needs one action set per player");
  }
  const ActionSet all = game.num_actions() == kMaxActions
                            ? ~ActionSet{0}
                            : (ActionSet{1} << game.num_actions()) - 1;
  for (ActionSet s : remaining_) {
    if (s == 0) throw Error("a player has no remaining action");
    if ((s & ~all) != 0) throw Error("remaining set names an unknown action");
  }
}

int GameState::NumRemaining(int player) const {
  return std::popcount(remaining_[player]);
}

bool GameState::IsTerminal() const {
  return std::all_of(remaining_.begin(), remaining_.end(),
                     [](ActionSet s) { return std::popcount(s) == 1; });
}

GameState GameState::Without(int player, int action) const {
  if (!Has(player, action)) {
    throw Error("action " + std::to_string(action) + " of player " +
                std::to_string(player) + " was already removed");
  }
  std::vector<ActionSet> next = remaining_;
  next[player] &= ~(ActionSet{1} << action);
  return GameState(*game_, std::move(next));
}

std::vector<CommutativeImage> FeasibleImages(const GameState& state,
                                             int player) {
  const int k = state.game().num_actions();
  std::set<std::vector<int>> reachable = {std::vector<int>(k, 0)};
  for (int j = 0; j < state.game().num_players(); ++j) {
    if (j == player) continue;
    std::set<std::vector<int>> next;
    const ActionSet s = state.Remaining(j);
    for (const auto& counts : reachable) {
      for (int a = 0; a < k; ++a) {
        if (!((s >> a) & 1u)) continue;
        std::vector<int> c = counts;
        ++c[a];
        next.insert(std::move(c));
      }
    }
    reachable = std::move(next);
  }
  std::vector<CommutativeImage> out;
  out.reserve(reachable.size());
  for (const auto& c : reachable) out.push_back(CommutativeImage{c});
  std::sort(out.begin(), out.end(), ColexLess);
  return out;
}

Rational StatePayoff(const GameState& state, int player, int action,
                     const CommutativeImage& opponents) {
  if (!state.Has(player, action)) {
    throw Error("action " + std::to_string(action) + " of player " +
                std::to_string(player) + " is not in the subgame");
  }
  const auto feasible = FeasibleImages(state, player);
  if (std::find(feasible.begin(), feasible.end(), opponents) ==
      feasible.end()) {
    throw Error("opponent image is not realizable in the subgame");
  }
  return state.game().Payoff(player, action, opponents);
}

// ---------------------------------------------------------------------------
// Normal form

std::uint64_t NormalFormGame::NumProfiles() const {
  std::uint64_t total = 1;
  for (int i = 0; i < num_players; ++i) total *= num_actions;
  return total;
}

std::vector<int> NormalFormGame::Profile(std::uint64_t index) const {
  std::vector<int> profile(num_players);
  for (int i = num_players - 1; i >= 0; --i) {
    profile[i] = static_cast<int>(index % num_actions);
    index /= num_actions;
  }
  return profile;
}

std::uint64_t NormalFormGame::Index(std::span<const int> profile) const {
  std::uint64_t index = 0;
  for (int a : profile) index = index * num_actions + a;
  return index;
}

NormalFormGame ExpandNormalForm(const AnonymousGame& game,
                                const OracleLimits& limits) {
  NormalFormGame nf;
  nf.num_players = game.num_players();
  nf.num_actions = game.num_actions();
  std::uint64_t profiles = 1;
  for (int i = 0; i < nf.num_players; ++i) {
    profiles *= nf.num_actions;
    if (profiles > limits.max_profiles) {
      throw BudgetExceeded("normal-form expansion exceeds " +
                           std::to_string(limits.max_profiles) + " profiles");
    }
  }
  nf.payoffs.resize(profiles * nf.num_players);
  std::vector<int> opponents;
  for (std::uint64_t p = 0; p < profiles; ++p) {
    const std::vector<int> profile = nf.Profile(p);
    for (int i = 0; i < nf.num_players; ++i) {
      opponents.clear();
      for (int j = 0; j < nf.num_players; ++j) {
        if (j != i) opponents.push_back(profile[j]);
      }
      nf.payoffs[p * nf.num_players + i] =
          game.Payoff(i, profile[i], ImageOf(opponents, nf.num_actions));
    }
  }
  return nf;
}

namespace {

// True iff all (player, profile) pairs with equal key carry equal payoff. Keys
// are per player unless `across_players`.
template <typename KeyFn>
bool EqualWithinKeys(const NormalFormGame& g, bool across_players, KeyFn key) {
  std::map<std::pair<int, std::vector<int>>, const Rational*> seen;
  for (std::uint64_t p = 0; p < g.NumProfiles(); ++p) {
    const std::vector<int> profile = g.Profile(p);
    for (int i = 0; i < g.num_players; ++i) {
      auto slot = std::make_pair(across_players ? -1 : i, key(i, profile));
      const Rational& v = g.At(p, i);
      auto [it, inserted] = seen.emplace(std::move(slot), &v);
      if (!inserted && *it->second != v) return false;
    }
  }
  return true;
}

}  // namespace

ClassSet Classify(const NormalFormGame& game) {
  if (game.num_players < 1 || game.num_actions < 1 ||
      game.payoffs.size() != game.NumProfiles() * game.num_players) {
    throw Error("incomplete payoff table");
  }
  const int k = game.num_actions;
  auto own_and_opponents = [k](int i, const std::vector<int>& profile) {
    std::vector<int> key(k + 1, 0);
    key[0] = profile[i];
    for (std::size_t j = 0; j < profile.size(); ++j) {
      if (static_cast<int>(j) != i) ++key[1 + profile[j]];
    }
    return key;
  };
  auto full = [k](int, const std::vector<int>& profile) {
    return ImageOf(profile, k).counts;
  };
  ClassSet out;
  if (EqualWithinKeys(game, false, own_and_opponents)) {
    out.Insert(AnonymityClass::kAnonymous);
  }
  if (EqualWithinKeys(game, true, own_and_opponents)) {
    out.Insert(AnonymityClass::kSymmetric);
  }
  if (EqualWithinKeys(game, false, full)) {
    out.Insert(AnonymityClass::kSelfAnonymous);
  }
  if (EqualWithinKeys(game, true, full)) {
    out.Insert(AnonymityClass::kSelfSymmetric);
  }
  return out;
}

}  // namespace dominion

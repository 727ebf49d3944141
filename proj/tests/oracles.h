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

// Brute-force reference implementations used only by the tests. They follow
// the definitions literally and share no code with the solvers beyond the
// data types and raw payoff lookup.

#ifndef DOMINION_TESTS_ORACLES_H_
#define DOMINION_TESTS_ORACLES_H_

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "dominion/game_model.h"
#include "dominion/matched_path.h"
#include "dominion/matrix_elim.h"

namespace oracle {

using dominion::AnonymousGame;
using dominion::CommutativeImage;
using dominion::Direction;
using dominion::GameState;
using dominion::GridLabeling;
using dominion::Rational;
using dominion::Vertex;

// Every profile in which player j picks from allowed[j].
inline void ForEachProfile(const std::vector<std::vector<int>>& allowed,
                           const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> profile(allowed.size());
  std::function<void(std::size_t)> rec = [&](std::size_t j) {
    if (j == allowed.size()) {
      f(profile);
      return;
    }
    for (int a : allowed[j]) {
      profile[j] = a;
      rec(j + 1);
    }
  };
  rec(0);
}

inline std::vector<int> Actions(const GameState& s, int player) {
  std::vector<int> out;
  for (int a = 0; a < s.game().num_actions(); ++a) {
    if (s.Has(player, a)) out.push_back(a);
  }
  return out;
}

inline CommutativeImage Count(const std::vector<int>& actions, int k) {
  CommutativeImage image{std::vector<int>(k, 0)};
  for (int a : actions) ++image.counts[a];
  return image;
}

// Opponent images by enumerating opponent profiles.
inline std::set<std::vector<int>> Images(const GameState& s, int player) {
  std::vector<std::vector<int>> allowed;
  for (int j = 0; j < s.game().num_players(); ++j) {
    if (j != player) allowed.push_back(Actions(s, j));
  }
  std::set<std::vector<int>> out;
  ForEachProfile(allowed, [&](const std::vector<int>& p) {
    out.insert(Count(p, s.game().num_actions()).counts);
  });
  return out;
}

// Weak dominance by a pure action, quantified over opponent profiles.
inline bool PureDominates(const GameState& s, int player, int a, int d) {
  std::vector<std::vector<int>> allowed;
  for (int j = 0; j < s.game().num_players(); ++j) {
    if (j != player) allowed.push_back(Actions(s, j));
  }
  bool weak = true;
  bool strict = false;
  const int k = s.game().num_actions();
  ForEachProfile(allowed, [&](const std::vector<int>& p) {
    const CommutativeImage y = Count(p, k);
    const Rational pa = s.game().Payoff(player, a, y);
    const Rational pd = s.game().Payoff(player, d, y);
    weak &= pa >= pd;
    strict |= pa > pd;
  });
  return weak && strict;
}

// Mixed dominance with at most two candidate dominators, solved in closed
// form: each image bounds the weight t on the first candidate to an interval.
inline bool MixedOnSegment(const GameState& s, int player, int dominated) {
  std::vector<int> others;
  for (int a : oracle::Actions(s, player)) {
    if (a != dominated) others.push_back(a);
  }
  if (others.size() > 2) throw std::logic_error("segment oracle needs k <= 3");
  if (others.empty()) return false;
  if (others.size() == 1) {
    return oracle::PureDominates(s, player, others[0], dominated);
  }
  const AnonymousGame& g = s.game();
  std::vector<std::pair<Rational, Rational>> lines;  // f(t) = c0 + c1 t
  for (const auto& counts : oracle::Images(s, player)) {
    const CommutativeImage y{counts};
    const Rational u = g.Payoff(player, others[0], y);
    const Rational v = g.Payoff(player, others[1], y);
    const Rational w = g.Payoff(player, dominated, y);
    lines.emplace_back(v - w, u - v);
  }
  Rational lo = 0, hi = 1;
  for (const auto& [c0, c1] : lines) {
    if (c1 == 0) {
      if (c0 < 0) return false;
    } else if (c1 > 0) {
      lo = std::max(lo, Rational(-c0 / c1));
    } else {
      hi = std::min(hi, Rational(-c0 / c1));
    }
  }
  if (lo > hi) return false;
  for (const auto& [c0, c1] : lines) {
    if (c0 + c1 * lo > 0 || c0 + c1 * hi > 0) return true;
  }
  return false;
}

// +1 increasing, -1 decreasing, 0 inactive on rows [first, last].
inline int Status(const std::vector<std::vector<std::int64_t>>& x, int first,
                  int last, int col) {
  bool up = true, down = true;
  for (int i = first; i < last; ++i) {
    up &= x[i + 1][col] >= x[i][col];
    down &= x[i + 1][col] <= x[i][col];
  }
  if (up && x[last][col] > x[first][col]) return 1;
  if (down && x[last][col] < x[first][col]) return -1;
  return 0;
}

struct MeQuery {
  int length = -1;                // -1: only the prefix constraints below
  std::optional<int> use_column;  // sequence must contain this column
  std::optional<int> column_side; // ... eliminated on this side (0 top)
  std::optional<int> top;         // exact rows removed from the top
  std::optional<int> bottom;      // exact rows removed from the bottom
};

// Enumerates every valid (c, r) pair by plain recursion.
inline bool MeExists(const std::vector<std::vector<std::int64_t>>& x,
                     const MeQuery& q) {
  const int m = static_cast<int>(x.size());
  const int n = static_cast<int>(x[0].size());
  std::vector<bool> used(n, false);
  std::function<bool(int, int, int, bool)> rec = [&](int t, int b, int len,
                                                     bool hit) -> bool {
    const bool length_ok = q.length < 0 || len == q.length;
    const bool counts_ok =
        (!q.top || *q.top == t) && (!q.bottom || *q.bottom == b);
    if (length_ok && counts_ok && (!q.use_column || hit)) return true;
    if (q.length >= 0 && len >= q.length) return false;
    for (int c = 0; c < n; ++c) {
      if (used[c]) continue;
      const int st = Status(x, t, m - 1 - b, c);
      if (st == 0) continue;
      const int side = st > 0 ? 0 : 1;
      const bool here = q.use_column && *q.use_column == c &&
                        (!q.column_side || *q.column_side == side);
      used[c] = true;
      const bool ok = rec(t + (side == 0), b + (side == 1), len + 1, hit || here);
      used[c] = false;
      if (ok) return true;
    }
    return false;
  };
  return rec(0, 0, 0, false);
}

inline std::vector<std::vector<std::int64_t>> Rows(
    const dominion::EliminationMatrix& m) {
  std::vector<std::vector<std::int64_t>> rows(m.rows());
  for (int i = 0; i < m.rows(); ++i) {
    for (int c = 0; c < m.cols(); ++c) rows[i].push_back(m.at(i, c));
  }
  return rows;
}

// Injective choice of one label per edge, by backtracking.
inline bool HasMatching(const std::vector<std::vector<int>>& sets,
                        const std::vector<int>& required) {
  std::vector<int> chosen;
  std::function<bool(std::size_t)> rec = [&](std::size_t i) -> bool {
    if (i == sets.size()) {
      for (int r : required) {
        if (std::find(chosen.begin(), chosen.end(), r) == chosen.end()) {
          return false;
        }
      }
      return true;
    }
    for (int l : sets[i]) {
      if (std::find(chosen.begin(), chosen.end(), l) != chosen.end()) continue;
      chosen.push_back(l);
      if (rec(i + 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  return rec(0);
}

// Every path of the given length from every admissible start.
inline bool MpExists(const GridLabeling& g, int length,
                     std::optional<Vertex> start = std::nullopt,
                     std::optional<Vertex> end = std::nullopt,
                     const std::vector<int>& required = {}) {
  std::vector<std::vector<int>> sets;
  std::function<bool(Vertex)> rec = [&](Vertex v) -> bool {
    if (static_cast<int>(sets.size()) == length) {
      return (!end || *end == v) && HasMatching(sets, required);
    }
    for (Direction d : {Direction::kSouth, Direction::kEast}) {
      if (!g.HasEdge(v, d)) continue;
      sets.push_back(g.Labels(v, d));
      const bool ok = rec(GridLabeling::Head(v, d));
      sets.pop_back();
      if (ok) return true;
    }
    return false;
  };
  for (int i = 0; i <= g.m(); ++i) {
    for (int j = 0; j <= g.n(); ++j) {
      if (start && !(*start == Vertex{i, j})) continue;
      if (rec({i, j})) return true;
    }
  }
  return false;
}

struct Edge {
  Vertex tail;
  Direction dir;
};

inline std::vector<Edge> AllEdges(const GridLabeling& g) {
  std::vector<Edge> out;
  for (int i = 0; i <= g.m(); ++i) {
    for (int j = 0; j <= g.n(); ++j) {
      for (Direction d : {Direction::kSouth, Direction::kEast}) {
        if (g.HasEdge({i, j}, d)) out.push_back({{i, j}, d});
      }
    }
  }
  return out;
}

inline bool Reachable(Vertex from, Vertex to) {
  return from.row <= to.row && from.col <= to.col;
}

// The definition over all edge triples.
inline bool DirectedConvex(const GridLabeling& g) {
  const auto edges = AllEdges(g);
  for (int l = 0; l < static_cast<int>(g.alphabet().size()); ++l) {
    for (const Edge& e1 : edges) {
      if (!g.HasLabel(e1.tail, e1.dir, l)) continue;
      for (const Edge& e3 : edges) {
        if (!g.HasLabel(e3.tail, e3.dir, l)) continue;
        if (!Reachable(e1.tail, e3.tail)) continue;
        if (e1.dir != e3.dir) return false;
        for (const Edge& e2 : edges) {
          if (!Reachable(e1.tail, e2.tail) || !Reachable(e2.tail, e3.tail)) {
            continue;
          }
          if (g.HasLabel(e2.tail, e2.dir, l) != (e2.dir == e1.dir)) {
            return false;
          }
        }
      }
    }
  }
  return true;
}

// Perfect matching of positions 1..k by augmenting paths.
inline bool IntervalMatchingExists(int positions,
                                   const std::vector<std::pair<int, int>>& iv) {
  std::vector<int> owner(positions + 1, -1);
  std::function<bool(int, std::vector<bool>&)> try_label =
      [&](int l, std::vector<bool>& seen) -> bool {
    for (int p = iv[l].first; p <= iv[l].second; ++p) {
      if (p < 1 || p > positions || seen[p]) continue;
      seen[p] = true;
      if (owner[p] < 0 || try_label(owner[p], seen)) {
        owner[p] = l;
        return true;
      }
    }
    return false;
  };
  int matched = 0;
  for (int l = 0; l < static_cast<int>(iv.size()); ++l) {
    std::vector<bool> seen(positions + 1, false);
    matched += try_label(l, seen);
  }
  return matched == positions;
}

}  // namespace oracle

#endif  // DOMINION_TESTS_ORACLES_H_

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

#include "dominion/generators.h"

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace dominion {
namespace {

constexpr int kMaxAttempts = 2000;

int Uniform(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

std::vector<std::string> NumberedNames(int count, int first) {
  std::vector<std::string> names;
  for (int i = 0; i < count; ++i) names.push_back(std::to_string(first + i));
  return names;
}

PayoffTable RandomTable(const GameSpec& spec, bool full_image, Rng& rng) {
  const int n = spec.players;
  const int k = spec.actions;
  if (full_image) {
    std::vector<Rational> values(NumImages(n, k));
    for (auto& v : values) v = Uniform(rng, spec.min_payoff, spec.max_payoff);
    return PayoffTable::FullImage(n, k, std::move(values));
  }
  std::vector<std::vector<Rational>> by_action(k);
  for (auto& row : by_action) {
    row.resize(NumImages(n - 1, k));
    for (auto& v : row) v = Uniform(rng, spec.min_payoff, spec.max_payoff);
  }
  return PayoffTable::OwnAction(n, k, std::move(by_action));
}

std::vector<std::string> LabelNames(int count) {
  std::vector<std::string> names;
  for (int i = 0; i < count; ++i) names.push_back(DefaultColumnName(i));
  return names;
}

// Tails of all edges of one direction.
std::vector<Vertex> Tails(const GridLabeling& g, Direction dir) {
  std::vector<Vertex> out;
  for (int i = 0; i <= g.m(); ++i) {
    for (int j = 0; j <= g.n(); ++j) {
      if (g.HasEdge({i, j}, dir)) out.push_back({i, j});
    }
  }
  return out;
}

Direction RandomDirection(const GridLabeling& g, Rng& rng) {
  if (g.m() == 0) return Direction::kEast;
  if (g.n() == 0) return Direction::kSouth;
  return Uniform(rng, 0, 1) ? Direction::kEast : Direction::kSouth;
}

bool Leq(Vertex a, Vertex b) { return a.row <= b.row && a.col <= b.col; }

// Each label on a down-set of one direction's edges containing the source
// edge: non-increasing extent per column (south) or per row (east).
void Staircases(GridLabeling& g, int labels, Rng& rng) {
  for (int l = 0; l < labels; ++l) {
    const Direction dir = RandomDirection(g, rng);
    const bool south = dir == Direction::kSouth;
    const int lines = south ? g.n() + 1 : g.m() + 1;
    const int reach = south ? g.m() : g.n();
    int extent = Uniform(rng, 1, reach);
    for (int line = 0; line < lines && extent > 0; ++line) {
      for (int x = 0; x < extent; ++x) {
        g.AddLabel(south ? Vertex{x, line} : Vertex{line, x}, dir, l);
      }
      extent = Uniform(rng, 0, extent);
    }
  }
}

// Each label on the edges of one direction whose tails lie in a random box.
void Boxes(GridLabeling& g, int labels, Rng& rng) {
  for (int l = 0; l < labels; ++l) {
    const Direction dir = RandomDirection(g, rng);
    const auto tails = Tails(g, dir);
    const Vertex a = tails[Uniform(rng, 0, static_cast<int>(tails.size()) - 1)];
    const Vertex b = tails[Uniform(rng, 0, static_cast<int>(tails.size()) - 1)];
    const Vertex lo{std::min(a.row, b.row), std::min(a.col, b.col)};
    const Vertex hi{std::max(a.row, b.row), std::max(a.col, b.col)};
    for (Vertex v : tails) {
      if (Leq(lo, v) && Leq(v, hi)) g.AddLabel(v, dir, l);
    }
  }
}

// Unit label sets, each label on one or two edges.
void Restricted(GridLabeling& g, int labels, bool convex, Rng& rng) {
  std::vector<std::pair<Vertex, Direction>> free;
  for (Direction d : {Direction::kSouth, Direction::kEast}) {
    for (Vertex v : Tails(g, d)) free.emplace_back(v, d);
  }
  std::shuffle(free.begin(), free.end(), rng);
  auto is_free = [&](Vertex v, Direction d) {
    return g.HasEdge(v, d) && g.Labels(v, d).empty();
  };
  for (int l = 0; l < labels; ++l) {
    while (!free.empty() && !is_free(free.back().first, free.back().second)) {
      free.pop_back();
    }
    if (free.empty()) return;
    const auto [v, d] = free.back();
    free.pop_back();
    g.AddLabel(v, d, l);
    if (Uniform(rng, 0, 1) == 0) continue;
    if (convex) {
      // The next edge in the same direction keeps the pair contiguous.
      const Vertex w = GridLabeling::Head(v, d);
      if (is_free(w, d)) g.AddLabel(w, d, l);
    } else {
      while (!free.empty() &&
             !is_free(free.back().first, free.back().second)) {
        free.pop_back();
      }
      if (free.empty()) return;
      g.AddLabel(free.back().first, free.back().second, l);
      free.pop_back();
    }
  }
}

bool IsRestricted(const GridLabeling& g) {
  std::map<int, int> occurrences;
  for (int i = 0; i <= g.m(); ++i) {
    for (int j = 0; j <= g.n(); ++j) {
      for (Direction d : {Direction::kSouth, Direction::kEast}) {
        if (!g.HasEdge({i, j}, d)) continue;
        const auto& set = g.Labels({i, j}, d);
        if (set.size() > 1) return false;
        for (int l : set) {
          if (++occurrences[l] > 2) return false;
        }
      }
    }
  }
  return true;
}

bool Satisfies(const GridLabeling& g, const LabelingSpec& spec) {
  return (!spec.directed_convex || IsDirectedConvex(g)) &&
         (!spec.backward_closed || IsBackwardClosed(g)) &&
         (!spec.forward_closed || IsForwardClosed(g)) &&
         (!spec.restricted || IsRestricted(g));
}

}  // namespace

AnonymousGame RandomGame(const GameSpec& spec, Rng& rng) {
  if (spec.players < 1 || spec.actions < 1 || spec.actions > kMaxActions) {
    throw Error("game needs at least one player and 1..32 actions");
  }
  if (spec.min_payoff > spec.max_payoff) throw Error("empty payoff range");
  const bool full = spec.cls == AnonymityClass::kSelfAnonymous ||
                    spec.cls == AnonymityClass::kSelfSymmetric;
  const bool shared = spec.cls == AnonymityClass::kSymmetric ||
                      spec.cls == AnonymityClass::kSelfSymmetric;
  std::vector<PayoffTable> tables;
  if (shared) {
    tables.assign(spec.players, RandomTable(spec, full, rng));
  } else if (spec.table_pool > 0) {
    std::vector<PayoffTable> pool;
    for (int i = 0; i < spec.table_pool; ++i) {
      pool.push_back(RandomTable(spec, full, rng));
    }
    for (int p = 0; p < spec.players; ++p) {
      tables.push_back(pool[Uniform(rng, 0, spec.table_pool - 1)]);
    }
  } else {
    for (int p = 0; p < spec.players; ++p) {
      tables.push_back(RandomTable(spec, full, rng));
    }
  }
  return AnonymousGame(spec.players, NumberedNames(spec.actions, 0), spec.cls,
                       std::move(tables));
}

EliminationMatrix RandomMatrix(int rows, int cols, int max_entry, Rng& rng) {
  if (rows < 1 || cols < 1 || max_entry < 0) {
    throw Error("matrix needs rows, cols >= 1 and max_entry >= 0");
  }
  std::vector<std::int64_t> entries(static_cast<std::size_t>(rows) * cols);
  for (auto& e : entries) e = Uniform(rng, 0, max_entry);
  return EliminationMatrix(rows, cols, std::move(entries));
}

GridLabeling RandomLabeling(const LabelingSpec& spec, Rng& rng) {
  if (spec.m < 0 || spec.n < 0 || spec.labels < 0) {
    throw Error("grid dimensions and label count must be non-negative");
  }
  if (spec.m + spec.n == 0 && spec.labels > 0) {
    throw Error("a single-vertex grid carries no labels");
  }
  const bool closed = spec.backward_closed || spec.forward_closed;
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    GridLabeling g(spec.m, spec.n, LabelNames(spec.labels));
    if (spec.restricted) {
      Restricted(g, spec.labels, spec.directed_convex || closed, rng);
    } else if (closed) {
      Staircases(g, spec.labels, rng);
      if (!spec.backward_closed) g = Rotate(g);
    } else if (spec.directed_convex) {
      Boxes(g, spec.labels, rng);
    } else {
      std::bernoulli_distribution coin(spec.density);
      for (int i = 0; i <= g.m(); ++i) {
        for (int j = 0; j <= g.n(); ++j) {
          for (Direction d : {Direction::kSouth, Direction::kEast}) {
            if (!g.HasEdge({i, j}, d)) continue;
            for (int l = 0; l < spec.labels; ++l) {
              if (coin(rng)) g.AddLabel({i, j}, d, l);
            }
          }
        }
      }
    }
    if (Satisfies(g, spec)) return g;
  }
  throw Error("requested labeling properties could not be met together");
}

EliminationMatrix Fig1Matrix() {
  return EliminationMatrix::FromRows({{1, 3, 2, 1},
                                      {0, 2, 2, 1},
                                      {0, 2, 3, 0},
                                      {0, 2, 3, 0},
                                      {3, 2, 3, 0}});
}

AnonymousGame Fig3Game() {
  constexpr int n = 3;
  constexpr int k = 3;
  // Player 0, keyed by (x1, x2, x3).
  const std::map<std::vector<int>, int> pictured = {
      {{3, 0, 0}, 1}, {{2, 1, 0}, 0}, {{2, 0, 1}, 0}, {{1, 2, 0}, 1},
      {{1, 1, 1}, 0}, {{1, 0, 2}, 0}, {{0, 3, 0}, 0}, {{0, 2, 1}, 1},
      {{0, 1, 2}, 0}, {{0, 0, 3}, 1}};
  std::vector<Rational> p0, p1, p2;
  for (const auto& image : ImagesColex(n, k)) {
    p0.push_back(pictured.at(image.counts));
    p1.push_back(image.counts[1]);
    p2.push_back(image.counts[0]);
  }
  std::vector<PayoffTable> tables;
  tables.push_back(PayoffTable::FullImage(n, k, std::move(p0)));
  tables.push_back(PayoffTable::FullImage(n, k, std::move(p1)));
  tables.push_back(PayoffTable::FullImage(n, k, std::move(p2)));
  return AnonymousGame(n, NumberedNames(k, 1), AnonymityClass::kSelfAnonymous,
                       std::move(tables));
}

}  // namespace dominion

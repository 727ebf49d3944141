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

#include <numeric>
#include <random>
#include <set>

#include "doctest.h"
#include "dominion/generators.h"
#include "dominion/matched_path.h"
#include "oracles.h"

using namespace dominion;

namespace {

std::vector<int> Names(const GridLabeling& g, std::string_view letters) {
  std::vector<int> out;
  for (char c : letters) out.push_back(g.LabelIndex(std::string(1, c)));
  return out;
}

std::vector<Direction> Steps(std::string_view s) {
  std::vector<Direction> out;
  for (char c : s) out.push_back(c == 'E' ? Direction::kEast : Direction::kSouth);
  return out;
}

MpQuery Query(int length, std::optional<Vertex> start = std::nullopt) {
  MpQuery q;
  q.length = length;
  q.start = start;
  return q;
}

// Each label's edges must share one weak component of the graph formed by
// them and every edge of the other direction(s).
bool ConnectedByDefinition(const GridLabeling& g) {
  const auto edges = oracle::AllEdges(g);
  for (int l = 0; l < static_cast<int>(g.alphabet().size()); ++l) {
    bool south = false, east = false;
    for (const auto& e : edges) {
      if (!g.HasLabel(e.tail, e.dir, l)) continue;
      (e.dir == Direction::kSouth ? south : east) = true;
    }
    if (!south && !east) continue;
    std::vector<oracle::Edge> kept;
    for (const auto& e : edges) {
      const bool other = e.dir == Direction::kSouth ? east : south;
      if (other || g.HasLabel(e.tail, e.dir, l)) kept.push_back(e);
    }
    const int w = g.n() + 1;
    std::vector<int> parent((g.m() + 1) * w);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int v) {
      return parent[v] == v ? v : parent[v] = find(parent[v]);
    };
    for (const auto& e : kept) {
      const Vertex h = GridLabeling::Head(e.tail, e.dir);
      parent[find(e.tail.row * w + e.tail.col)] = find(h.row * w + h.col);
    }
    std::set<int> roots;
    for (const auto& e : edges) {
      if (g.HasLabel(e.tail, e.dir, l)) roots.insert(find(e.tail.row * w + e.tail.col));
    }
    if (roots.size() > 1) return false;
  }
  return true;
}

bool BackwardByDefinition(const GridLabeling& g) {
  std::set<int> out;
  for (Direction d : {Direction::kSouth, Direction::kEast}) {
    if (!g.HasEdge({0, 0}, d)) continue;
    for (int l : g.Labels({0, 0}, d)) out.insert(l);
  }
  const auto used = g.UsedLabels();
  return out == std::set<int>(used.begin(), used.end());
}

bool ForwardByDefinition(const GridLabeling& g) {
  std::set<int> in;
  if (g.m() > 0) for (int l : g.Labels({g.m() - 1, g.n()}, Direction::kSouth)) in.insert(l);
  if (g.n() > 0) for (int l : g.Labels({g.m(), g.n() - 1}, Direction::kEast)) in.insert(l);
  const auto used = g.UsedLabels();
  return in == std::set<int>(used.begin(), used.end());
}

}  // namespace

TEST_CASE("reduction of the fig1 matrix") {
  const auto x = Fig1Matrix();
  const auto g = ReduceMeToMp(x);
  REQUIRE(g.m() == 4);
  REQUIRE(g.n() == 4);
  SUBCASE("bold path") {
    MatchedPathCertificate c{{0, 0}, Steps("EESE"), Names(g, "bacd")};
    CHECK(VerifyMatchedPath(g, c, Query(4, Vertex{0, 0})));
    const auto seq = MeSequenceFromPath(c);
    CHECK(ValidateMeSequence(x, seq));
    CHECK(PathFromMeSequence(seq) == c);
    const auto r = SolveMp(g, Query(4, Vertex{0, 0}));
    REQUIRE(r.verdict == Verdict::kYes);
    CHECK(VerifyMatchedPath(g, *r.certificate, Query(4, Vertex{0, 0})));
    CHECK(ValidateMeSequence(x, MeSequenceFromPath(*r.certificate)));
  }
  SUBCASE("edge label sets follow column status") {
    CHECK(g.Labels({0, 1}, Direction::kEast) == Names(g, "abd"));
    const auto rows = oracle::Rows(x);
    for (int t = 0; t <= g.m(); ++t) {
      for (int b = 0; b <= g.n(); ++b) {
        for (Direction d : {Direction::kSouth, Direction::kEast}) {
          if (!g.HasEdge({t, b}, d)) continue;
          std::vector<int> expected;
          if (t + b <= x.rows() - 2) {
            for (int col = 0; col < x.cols(); ++col) {
              const int st = oracle::Status(rows, t, x.rows() - 1 - b, col);
              if (st == (d == Direction::kSouth ? 1 : -1)) expected.push_back(col);
            }
          }
          CHECK(g.Labels({t, b}, d) == expected);
        }
      }
    }
  }
  SUBCASE("structure") {
    CHECK(IsDirectedConvex(g));
    CHECK(oracle::DirectedConvex(g));
    CHECK_FALSE(IsBackwardClosed(g));
    CHECK_FALSE(BackwardByDefinition(g));
  }
  SUBCASE("certificate rejection") {
    const auto q = Query(4, Vertex{0, 0});
    CHECK_FALSE(VerifyMatchedPath(g, {{0, 0}, Steps("EESE"), Names(g, "babd")}, q));
    CHECK_FALSE(VerifyMatchedPath(g, {{0, 0}, Steps("EESE"), Names(g, "abcd")}, q));
    CHECK_FALSE(VerifyMatchedPath(g, {{0, 0}, Steps("EES"), Names(g, "bac")}, q));
    CHECK_FALSE(VerifyMatchedPath(g, {{0, 1}, Steps("EESE"), Names(g, "bacd")}, q));
    CHECK_FALSE(VerifyMatchedPath(g, {{0, 0}, Steps("EEEEE"), Names(g, "bacda")}, Query(5)));
    MatchedPathCertificate short_labels{{0, 0}, Steps("EE"), Names(g, "b")};
    CHECK_FALSE(VerifyMatchedPath(g, short_labels, Query(2)));
    MpQuery needs_c = q;
    needs_c.required = Names(g, "c");
    CHECK(VerifyMatchedPath(g, {{0, 0}, Steps("EESE"), Names(g, "bacd")}, needs_c));
    needs_c.end = Vertex{1, 3};
    CHECK(VerifyMatchedPath(g, {{0, 0}, Steps("EESE"), Names(g, "bacd")}, needs_c));
    needs_c.end = Vertex{0, 4};
    CHECK_FALSE(VerifyMatchedPath(g, {{0, 0}, Steps("EESE"), Names(g, "bacd")}, needs_c));
  }
  SUBCASE("free start differs from anchored start") {
    CHECK_THROWS_AS(MeSequenceFromPath({{0, 1}, Steps("E"), Names(g, "a")}), Error);
  }
}

TEST_CASE("reduction properties on random matrices") {
  Rng rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    const auto x = RandomMatrix(2 + trial % 5, 1 + trial % 4, 2, rng);
    const auto g = ReduceMeToMp(x);
    CHECK(oracle::DirectedConvex(g));
    CHECK(IsDirectedConvex(g));
    for (int len = 0; len <= FullLength(x); ++len) {
      oracle::MeQuery q;
      q.length = len;
      CHECK(oracle::MeExists(oracle::Rows(x), q) ==
            oracle::MpExists(g, len, Vertex{0, 0}));
    }
  }
  SUBCASE("all columns active at the start") {
    const auto y = EliminationMatrix::FromRows({{0, 3, 1}, {1, 2, 1}, {1, 1, 2}, {2, 0, 2}});
    CHECK(IsBackwardClosed(ReduceMeToMp(y)));
  }
  SUBCASE("constant matrix") {
    const auto g = ReduceMeToMp(EliminationMatrix::FromRows({{1, 1}, {1, 1}, {1, 1}}));
    CHECK(g.UsedLabels().empty());
    CHECK(SolveMp(g, Query(1)).verdict == Verdict::kNo);
    CHECK(SolveMp(g, Query(0)).verdict == Verdict::kYes);
  }
}

TEST_CASE("general search") {
  SUBCASE("trivial lengths") {
    GridLabeling g(2, 2, {"x"});
    CHECK(SolveMp(g, Query(0)).verdict == Verdict::kYes);
    CHECK(SolveMp(g, Query(1)).verdict == Verdict::kNo);
    g.AddLabel({1, 1}, Direction::kEast, 0);
    const auto r = SolveMp(g, Query(1));
    REQUIRE(r.verdict == Verdict::kYes);
    CHECK(r.certificate->start == Vertex{1, 1});
    CHECK(SolveMp(g, Query(2)).verdict == Verdict::kNo);
    CHECK(SolveMp(g, Query(5)).verdict == Verdict::kNo);
  }
  SUBCASE("restricted instances against enumeration") {
    Rng rng(5);
    int yes = 0;
    for (int trial = 0; trial < 150; ++trial) {
      LabelingSpec spec;
      spec.m = 4;
      spec.n = 4;
      spec.labels = 4 + trial % 5;
      spec.restricted = true;
      const auto g = RandomLabeling(spec, rng);
      for (const auto& e : oracle::AllEdges(g)) {
        CHECK(g.Labels(e.tail, e.dir).size() <= 1);
      }
      for (int len = 0; len <= 8; ++len) {
        const bool expected = oracle::MpExists(g, len);
        const auto r = SolveMp(g, Query(len));
        REQUIRE(r.verdict != Verdict::kUnknown);
        CHECK((r.verdict == Verdict::kYes) == expected);
        if (r.certificate) CHECK(VerifyMatchedPath(g, *r.certificate, Query(len)));
        yes += expected && len >= 3;
      }
    }
    CHECK(yes > 0);
  }
  SUBCASE("endpoint and required-label variants") {
    Rng rng(9);
    std::mt19937_64 pick(9);
    for (int trial = 0; trial < 150; ++trial) {
      LabelingSpec spec;
      spec.m = 3;
      spec.n = 3;
      spec.labels = 5;
      spec.density = 0.35;
      const auto g = RandomLabeling(spec, rng);
      std::uniform_int_distribution<int> coord(0, 3);
      const int len = 1 + trial % 4;
      MpQuery q = Query(len);
      if (trial % 3 == 0) q.start = Vertex{coord(pick) % 2, coord(pick) % 2};
      if (trial % 3 == 1) q.end = Vertex{coord(pick), coord(pick)};
      if (trial % 2 == 0) q.required = {static_cast<int>(pick() % 5)};
      const bool expected = oracle::MpExists(g, len, q.start, q.end, q.required);
      const auto r = SolveMp(g, q);
      CHECK((r.verdict == Verdict::kYes) == expected);
      if (r.certificate) CHECK(VerifyMatchedPath(g, *r.certificate, q));
    }
  }
  SUBCASE("budget") {
    const auto g = ReduceMeToMp(Fig1Matrix());
    SearchBudget one;
    one.max_nodes = 1;
    CHECK(SolveMp(g, Query(4), one).verdict == Verdict::kUnknown);
  }
}

TEST_CASE("convex bipartite matching") {
  SUBCASE("worked example") {
    const std::vector<LabelInterval> iv = {{1, 1, 2}, {2, 1, 1}, {3, 2, 3}};
    const auto r = ConvexBipartiteMatching(3, iv);
    REQUIRE(r.has_value());
    CHECK(*r == std::vector<int>{2, 1, 3});
  }
  SUBCASE("trivial and Hall violation") {
    const std::vector<LabelInterval> one = {{0, 1, 1}};
    CHECK(ConvexBipartiteMatching(1, one) == std::vector<int>{0});
    const std::vector<LabelInterval> crowded = {{0, 1, 1}, {1, 1, 1}};
    CHECK_FALSE(ConvexBipartiteMatching(2, crowded).has_value());
    CHECK(ConvexBipartiteMatching(0, crowded) == std::vector<int>{});
  }
  SUBCASE("candidate lists must be intervals") {
    const std::vector<std::vector<int>> gap = {{1, 3}, {2}};
    CHECK_THROWS_AS(ConvexBipartiteMatching(3, gap), Error);
    const std::vector<std::vector<int>> fine = {{1, 2, 3}, {2}, {}};
    const auto r = ConvexBipartiteMatching(3, fine);
    CHECK_FALSE(r.has_value());
    const std::vector<std::vector<int>> ok = {{1, 2, 3}, {2}, {3}};
    CHECK(ConvexBipartiteMatching(3, ok) == std::vector<int>{0, 1, 2});
  }
  SUBCASE("random instances against augmenting paths") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 500; ++trial) {
      const int k = 1 + trial % 7;
      const int labels = 1 + static_cast<int>(rng() % 8);
      std::vector<LabelInterval> iv;
      std::vector<std::pair<int, int>> plain;
      for (int l = 0; l < labels; ++l) {
        int a = 1 + static_cast<int>(rng() % k), b = 1 + static_cast<int>(rng() % k);
        if (a > b) std::swap(a, b);
        iv.push_back({l, a, b});
        plain.emplace_back(a, b);
      }
      const auto r = ConvexBipartiteMatching(k, iv);
      CHECK(r.has_value() == oracle::IntervalMatchingExists(k, plain));
      if (r) {
        std::set<int> distinct(r->begin(), r->end());
        CHECK(distinct.size() == r->size());
        for (int p = 1; p <= k; ++p) {
          const auto& chosen = iv[(*r)[p - 1]];
          CHECK(chosen.first <= p);
          CHECK(p <= chosen.last);
        }
      }
    }
  }
}

TEST_CASE("structural detectors") {
  SUBCASE("empty labeling") {
    GridLabeling g(3, 3, {});
    CHECK(IsDirectedConvex(g));
    CHECK(IsConnectedLabeling(g));
    CHECK(IsBackwardClosed(g));
    CHECK(IsForwardClosed(g));
  }
  SUBCASE("mixed directions on a path") {
    GridLabeling g(2, 2, {"x"});
    g.AddLabel({0, 0}, Direction::kEast, 0);
    g.AddLabel({0, 1}, Direction::kSouth, 0);
    CHECK_FALSE(IsDirectedConvex(g));
    CHECK_FALSE(oracle::DirectedConvex(g));
  }
  SUBCASE("gap between same-direction occurrences") {
    GridLabeling g(0, 3, {"x"});
    g.AddLabel({0, 0}, Direction::kEast, 0);
    g.AddLabel({0, 2}, Direction::kEast, 0);
    CHECK_FALSE(IsDirectedConvex(g));
    CHECK_FALSE(oracle::DirectedConvex(g));
    // No south edges in a single row, so the two occurrences stay apart.
    CHECK_FALSE(IsConnectedLabeling(g));
    CHECK_FALSE(ConnectedByDefinition(g));
    g.AddLabel({0, 1}, Direction::kEast, 0);
    CHECK(IsDirectedConvex(g));
    CHECK(IsConnectedLabeling(g));
  }
  SUBCASE("closure") {
    GridLabeling g(2, 2, {"x", "y"});
    g.AddLabel({0, 0}, Direction::kEast, 0);
    g.AddLabel({0, 0}, Direction::kSouth, 1);
    g.AddLabel({1, 1}, Direction::kSouth, 1);
    CHECK(IsBackwardClosed(g));
    CHECK_FALSE(IsForwardClosed(g));
    CHECK(IsForwardClosed(Rotate(g)));
    CHECK(Rotate(Rotate(g)) == g);
  }
  SUBCASE("random labelings against the definitions") {
    Rng rng(77);
    int convex = 0, connected = 0;
    for (int trial = 0; trial < 400; ++trial) {
      LabelingSpec spec;
      spec.m = trial % 4;
      spec.n = 1 + trial % 3;
      spec.labels = 1 + trial % 3;
      spec.density = 0.15;
      spec.directed_convex = trial % 4 == 0;
      spec.backward_closed = trial % 8 == 0;
      const auto g = RandomLabeling(spec, rng);
      const bool c = oracle::DirectedConvex(g);
      CHECK(IsDirectedConvex(g) == c);
      CHECK(IsBackwardClosed(g) == BackwardByDefinition(g));
      CHECK(IsForwardClosed(g) == ForwardByDefinition(g));
      const bool k = ConnectedByDefinition(g);
      CHECK(IsConnectedLabeling(g) == k);
      convex += c;
      connected += k;
      if (spec.directed_convex) CHECK(c);
      if (spec.backward_closed) CHECK(BackwardByDefinition(g));
    }
    CHECK(convex > 0);
    CHECK(convex < 400);
    CHECK(connected > 0);
    CHECK(connected < 400);
  }
  SUBCASE("closed convex instances are connected and single-direction") {
    Rng rng(15);
    for (int trial = 0; trial < 200; ++trial) {
      LabelingSpec spec;
      spec.m = 1 + trial % 5;
      spec.n = 1 + (trial / 5) % 5;
      spec.labels = 1 + trial % 6;
      spec.directed_convex = true;
      (trial % 2 ? spec.backward_closed : spec.forward_closed) = true;
      const auto g = RandomLabeling(spec, rng);
      CHECK(IsConnectedLabeling(g));
      CHECK(ConnectedByDefinition(g));
      for (int l : g.UsedLabels()) {
        bool south = false, east = false;
        for (const auto& e : oracle::AllEdges(g)) {
          if (g.HasLabel(e.tail, e.dir, l)) (e.dir == Direction::kSouth ? south : east) = true;
        }
        CHECK_FALSE((south && east));
      }
    }
  }
  SUBCASE("contradictory requests are refused") {
    Rng rng(1);
    LabelingSpec spec;
    spec.m = 0;
    spec.n = 0;
    spec.labels = 2;
    spec.backward_closed = true;
    CHECK_THROWS_AS(RandomLabeling(spec, rng), Error);
  }
}

TEST_CASE("closed-case solver") {
  SUBCASE("preconditions") {
    GridLabeling g(2, 2, {"x"});
    g.AddLabel({0, 0}, Direction::kEast, 0);
    g.AddLabel({0, 1}, Direction::kSouth, 0);
    CHECK_THROWS_AS(SolveMpClosed(g, 1), Error);
    GridLabeling open(2, 2, {"x"});
    open.AddLabel({1, 0}, Direction::kEast, 0);
    CHECK_THROWS_AS(SolveMpClosed(open, 1), Error);
    CHECK_THROWS_AS(SolveMpClosed(GridLabeling(1, 1, {}), -1), Error);
  }
  SUBCASE("k = 0") {
    const auto r = SolveMpClosed(GridLabeling(2, 2, {}), 0);
    CHECK(r.verdict == Verdict::kYes);
    REQUIRE(r.certificate.has_value());
    CHECK(r.certificate->length() == 0);
  }
  SUBCASE("single row") {
    GridLabeling g(0, 4, {"p", "q", "r"});
    g.SetLabels({0, 0}, Direction::kEast, {0, 1, 2});
    g.SetLabels({0, 1}, Direction::kEast, {1, 2});
    g.SetLabels({0, 2}, Direction::kEast, {2});
    for (int k = 0; k <= 4; ++k) {
      const auto r = SolveMpClosed(g, k);
      CHECK((r.verdict == Verdict::kYes) == (k <= 3));
      CHECK((r.verdict == Verdict::kYes) == oracle::MpExists(g, k));
      if (r.certificate) CHECK(VerifyMatchedPath(g, *r.certificate, Query(k)));
    }
  }
  SUBCASE("random closed instances against enumeration") {
    Rng rng(44);
    int yes = 0;
    for (int trial = 0; trial < 200; ++trial) {
      LabelingSpec spec;
      spec.m = 1 + trial % 4;
      spec.n = 1 + (trial / 4) % 4;
      spec.labels = 1 + trial % (spec.m + spec.n);
      spec.directed_convex = true;
      (trial % 2 ? spec.backward_closed : spec.forward_closed) = true;
      const auto g = RandomLabeling(spec, rng);
      for (int k = 0; k <= spec.m + spec.n; ++k) {
        const auto r = SolveMpClosed(g, k);
        const bool expected = oracle::MpExists(g, k);
        CHECK((r.verdict == Verdict::kYes) == expected);
        CHECK((SolveMp(g, Query(k)).verdict == Verdict::kYes) == expected);
        if (r.certificate) CHECK(VerifyMatchedPath(g, *r.certificate, Query(k)));
        yes += expected && k > 0;
      }
    }
    CHECK(yes > 0);
  }
}

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

#include <random>

#include "doctest.h"
#include "dominion/generators.h"
#include "dominion/matrix_elim.h"
#include "oracles.h"

using namespace dominion;

namespace {

MatrixElimSequence Seq(const EliminationMatrix& x, std::string_view cols,
                       std::vector<int> sides) {
  MatrixElimSequence s;
  for (char c : cols) s.columns.push_back(x.ColumnIndex(std::string(1, c)));
  for (int r : sides) s.sides.push_back(static_cast<RowSide>(r));
  return s;
}

bool BruteSides(const EliminationMatrix& x, const std::vector<int>& cols) {
  const auto rows = oracle::Rows(x);
  const int k = static_cast<int>(cols.size());
  for (int mask = 0; mask < (1 << k); ++mask) {
    int t = 0, b = 0;
    bool ok = true;
    for (int i = 0; i < k && ok; ++i) {
      const int side = (mask >> i) & 1;
      if (t + b >= x.rows() - 1) ok = false;
      else ok = oracle::Status(rows, t, x.rows() - 1 - b, cols[i]) == (side ? -1 : 1);
      (side ? b : t)++;
    }
    if (ok) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("column status") {
  const auto x = Fig1Matrix();
  const int a = x.ColumnIndex("a"), b = x.ColumnIndex("b"), c = x.ColumnIndex("c");
  CHECK(StatusIn(x, {0, 4}, b) == ColumnStatus::kDecreasing);
  CHECK(StatusIn(x, {1, 4}, b) == ColumnStatus::kInactive);
  CHECK(StatusIn(x, {0, 2}, c) == ColumnStatus::kIncreasing);
  CHECK(StatusIn(x, {0, 4}, a) == ColumnStatus::kInactive);
  for (int r = 0; r < x.rows(); ++r) {
    for (int col = 0; col < x.cols(); ++col) {
      CHECK(StatusIn(x, {r, r}, col) == ColumnStatus::kInactive);
    }
  }
  CHECK_THROWS_AS(StatusIn(x, {0, 5}, a), Error);
  CHECK_THROWS_AS(StatusIn(x, {2, 1}, a), Error);
  CHECK_THROWS_AS(StatusIn(x, {0, 1}, 4), Error);
  CHECK(FullLength(x) == 4);
  CHECK(x.Delta(0, b) == -1);
  CHECK(x.Delta(3, a) == 1);
}

TEST_CASE("column life cycle") {
  Rng rng(2);
  for (int trial = 0; trial < 60; ++trial) {
    const auto x = RandomMatrix(7, 3, 2, rng);
    for (int col = 0; col < x.cols(); ++col) {
      for (int i0 = 0; i0 < x.rows(); ++i0) {
        for (int i1 = i0; i1 < x.rows(); ++i1) {
          const auto outer = StatusIn(x, {i0, i1}, col);
          if (outer == ColumnStatus::kInactive) continue;
          for (int j0 = i0; j0 < x.rows() && j0 <= i1; ++j0) {
            for (int j1 = j0; j1 <= i1; ++j1) {
              const auto inner = StatusIn(x, {j0, j1}, col);
              if (inner == ColumnStatus::kInactive) continue;
              CHECK(inner == outer);
              for (int k0 = i0; k0 <= j0; ++k0) {
                for (int k1 = j1; k1 <= i1; ++k1) {
                  CHECK(StatusIn(x, {k0, k1}, col) == outer);
                }
              }
            }
          }
        }
      }
    }
  }
}

TEST_CASE("sequence validation") {
  const auto x = Fig1Matrix();
  const auto full = Seq(x, "bacd", {1, 1, 0, 1});
  CHECK(ValidateMeSequence(x, full));
  for (std::size_t k = 0; k <= full.size(); ++k) {
    MatrixElimSequence prefix;
    prefix.columns.assign(full.columns.begin(), full.columns.begin() + k);
    prefix.sides.assign(full.sides.begin(), full.sides.begin() + k);
    CHECK(ValidateMeSequence(x, prefix));
  }
  const auto stalled = Seq(x, "ca", {0, 0});
  CHECK(ValidateMeSequence(x, stalled));
  for (char next : std::string("bd")) {
    for (int side = 0; side < 2; ++side) {
      auto longer = stalled;
      longer.columns.push_back(x.ColumnIndex(std::string(1, next)));
      longer.sides.push_back(static_cast<RowSide>(side));
      CHECK_FALSE(ValidateMeSequence(x, longer));
    }
  }
  CHECK_FALSE(ValidateMeSequence(x, Seq(x, "bb", {1, 1})));
  CHECK_FALSE(ValidateMeSequence(x, Seq(x, "b", {0})));
  CHECK_FALSE(ValidateMeSequence(x, Seq(x, "ba", {1})));
  MatrixElimSequence bad;
  bad.columns = {9};
  bad.sides = {RowSide::kTop};
  CHECK_FALSE(ValidateMeSequence(x, bad));
}

TEST_CASE("solvers on fixtures") {
  const auto x = Fig1Matrix();
  SUBCASE("fig1") {
    const auto r = SolveMe(x);
    REQUIRE(r.verdict == Verdict::kYes);
    CHECK(r.sequence->size() == 4);
    CHECK(ValidateMeSequence(x, *r.sequence));
    CHECK(OracleMe(x) == Verdict::kYes);
    const auto ce = SolveCe(x, x.ColumnIndex("d"));
    REQUIRE(ce.verdict == Verdict::kYes);
    CHECK(ValidateMeSequence(x, *ce.sequence));
    CHECK(std::count(ce.sequence->columns.begin(), ce.sequence->columns.end(),
                     x.ColumnIndex("d")) == 1);
  }
  SUBCASE("reach") {
    CHECK(Reach(x, 0, 0).verdict == Verdict::kYes);
    CHECK(Reach(x, 1, 3).verdict == Verdict::kYes);
    CHECK(Reach(x, 2, 0).verdict == Verdict::kYes);
    CHECK(Reach(x, 3, 0).verdict == Verdict::kNo);
    const auto r = Reach(x, 2, 0);
    REQUIRE(r.sequence.has_value());
    CHECK(ValidateMeSequence(x, *r.sequence));
    CHECK_THROWS_AS(Reach(x, 3, 2), Error);
    CHECK_THROWS_AS(Reach(x, -1, 0), Error);
  }
  SUBCASE("constant column") {
    const auto y = EliminationMatrix::FromRows({{0, 1, 5}, {1, 1, 4}, {2, 1, 3}, {3, 1, 2}});
    CHECK(SolveMe(y).verdict == Verdict::kNo);
    CHECK(OracleMe(y) == Verdict::kNo);
    CHECK(SolveCe(y, 1).verdict == Verdict::kNo);
    CHECK(SolveCe(y, 0).verdict == Verdict::kYes);
    const auto r = SolveMe(y);
    CHECK(r.longest.size() == 2);
    CHECK(ValidateMeSequence(y, r.longest));
  }
  SUBCASE("two rows") {
    CHECK(OracleMe(EliminationMatrix::FromRows({{0}, {1}})) == Verdict::kYes);
    CHECK(SolveMe(EliminationMatrix::FromRows({{0}, {1}})).verdict == Verdict::kYes);
    const auto same = EliminationMatrix::FromRows({{0, 0}, {1, 2}});
    CHECK(OracleMe(same) == Verdict::kYes);
    // Only one row can go, so two columns in the same direction cannot both.
    const auto three = EliminationMatrix::FromRows({{0, 0}, {1, 2}, {1, 2}});
    CHECK(OracleMe(three) == Verdict::kNo);
    CHECK(SolveMe(three).verdict == Verdict::kNo);
  }
  SUBCASE("single row") {
    const auto y = EliminationMatrix::FromRows({{4, 2}});
    CHECK(FullLength(y) == 0);
    CHECK(SolveMe(y).verdict == Verdict::kYes);
  }
  SUBCASE("bad input") {
    CHECK_THROWS_AS(EliminationMatrix(2, 2, {0, 1, 2}), Error);
    CHECK_THROWS_AS(EliminationMatrix(2, 1, {0, -1}), Error);
    CHECK_THROWS_AS(SolveCe(x, 4), Error);
  }
}

TEST_CASE("solvers agree with enumeration") {
  Rng rng(13);
  for (int trial = 0; trial < 400; ++trial) {
    const int m = 2 + trial % 4;
    const int n = 1 + (trial / 4) % 4;
    const auto x = RandomMatrix(m, n, 2, rng);
    const auto rows = oracle::Rows(x);
    oracle::MeQuery q;
    q.length = FullLength(x);
    const bool me = oracle::MeExists(rows, q);
    const auto r = SolveMe(x);
    REQUIRE(r.verdict != Verdict::kUnknown);
    CHECK((r.verdict == Verdict::kYes) == me);
    CHECK(OracleMe(x) == r.verdict);
    if (me) {
      CHECK(ValidateMeSequence(x, *r.sequence));
      CHECK(static_cast<int>(r.sequence->size()) == FullLength(x));
    }
    CHECK(ValidateMeSequence(x, r.longest));
    for (int col = 0; col < n; ++col) {
      oracle::MeQuery cq;
      cq.use_column = col;
      const bool ce = oracle::MeExists(rows, cq);
      const auto c = SolveCe(x, col);
      CHECK((c.verdict == Verdict::kYes) == ce);
      CHECK(OracleCe(x, col) == c.verdict);
      for (int side = 0; side < 2; ++side) {
        cq.column_side = side;
        const auto cs = SolveCe(x, col, static_cast<RowSide>(side));
        CHECK((cs.verdict == Verdict::kYes) == oracle::MeExists(rows, cq));
        if (cs.sequence) {
          CHECK(ValidateMeSequence(x, *cs.sequence));
          const auto at = std::find(cs.sequence->columns.begin(),
                                    cs.sequence->columns.end(), col);
          REQUIRE(at != cs.sequence->columns.end());
          CHECK(static_cast<int>(cs.sequence->sides[at - cs.sequence->columns.begin()]) == side);
        }
      }
      if (me) {
        const auto& cols = r.sequence->columns;
        if (std::find(cols.begin(), cols.end(), col) != cols.end()) CHECK(ce);
      }
    }
    for (int t = 0; t < m; ++t) {
      for (int b = 0; t + b < m; ++b) {
        oracle::MeQuery rq;
        rq.top = t;
        rq.bottom = b;
        CHECK((Reach(x, t, b).verdict == Verdict::kYes) == oracle::MeExists(rows, rq));
      }
    }
  }
}

TEST_CASE("column-wise eliminability does not imply full elimination") {
  // Search random 4 x 3 matrices for one where every column of some
  // full-size set is eliminable on its own, yet no full sequence exists.
  Rng rng(99);
  bool found = false;
  for (int trial = 0; trial < 5000 && !found; ++trial) {
    const auto x = RandomMatrix(4, 3, 2, rng);
    if (OracleMe(x) != Verdict::kNo) continue;
    bool all = true;
    for (int col = 0; col < 3; ++col) all &= OracleCe(x, col) == Verdict::kYes;
    if (!all) continue;
    found = true;
    CHECK(SolveMe(x).verdict == Verdict::kNo);
    for (int col = 0; col < 3; ++col) CHECK(SolveCe(x, col).verdict == Verdict::kYes);
  }
  CHECK(found);
}

TEST_CASE("side recovery") {
  const auto x = Fig1Matrix();
  const auto sides = RecoverSides(x, Seq(x, "bacd", {}).columns);
  REQUIRE(sides.has_value());
  CHECK(ValidateMeSequence(x, *sides));
  CHECK_FALSE(RecoverSides(x, Seq(x, "cab", {}).columns).has_value());
  Rng rng(4);
  std::mt19937_64 shuffle(4);
  for (int trial = 0; trial < 300; ++trial) {
    const auto y = RandomMatrix(4 + trial % 3, 3, 2, rng);
    std::vector<int> cols = {0, 1, 2};
    std::shuffle(cols.begin(), cols.end(), shuffle);
    cols.resize(1 + trial % 3);
    const auto got = RecoverSides(y, cols);
    CHECK(got.has_value() == BruteSides(y, cols));
    if (got) {
      CHECK(got->columns == cols);
      CHECK(ValidateMeSequence(y, *got));
    }
  }
}

TEST_CASE("game bridge") {
  SUBCASE("fig1 round trip") {
    const auto x = Fig1Matrix();
    const auto g = MatrixToGame(x);
    const auto back = GameToMatrix(g);
    for (int i = 0; i < x.rows(); ++i) {
      for (int j = 0; j < x.cols(); ++j) CHECK(back.at(i, j) == x.at(i, j));
    }
    const auto seq = Seq(x, "bacd", {1, 1, 0, 1});
    const auto game_seq = GameSequenceFromMatrix(g, seq);
    CHECK(ValidateSequence(g, game_seq, DominanceKind::kPure));
    CHECK(game_seq.batches[0][0].player == 1);
    CHECK(game_seq.batches[0][0].action == 1);
    CHECK(MatrixSequenceFromGame(g, game_seq) == seq);
    CHECK_THROWS_AS(MatrixToGame(EliminationMatrix::FromRows({{1, 2}})), Error);
  }
  SUBCASE("constant game maps to constant columns") {
    const AnonymousGame g(3, {"0", "1"}, AnonymityClass::kSymmetric,
                          std::vector<PayoffTable>(
                              3, PayoffTable::OwnAction(3, 2, {{Rational(-1, 2), Rational(-1, 2), Rational(-1, 2)},
                                                               {Rational(-1, 2), Rational(-1, 2), Rational(-1, 2)}})));
    const auto x = GameToMatrix(g);
    for (int j = 0; j < 3; ++j) {
      CHECK(StatusIn(x, {0, x.rows() - 1}, j) == ColumnStatus::kInactive);
    }
    CHECK(SolveMe(x).verdict == Verdict::kNo);
  }
  SUBCASE("stepwise solving matches matrix elimination") {
    Rng rng(21);
    constexpr AnonymityClass kAll[] = {
        AnonymityClass::kAnonymous, AnonymityClass::kSymmetric,
        AnonymityClass::kSelfAnonymous, AnonymityClass::kSelfSymmetric};
    for (int trial = 0; trial < 200; ++trial) {
      GameSpec spec;
      spec.cls = kAll[trial % 4];
      spec.players = 1 + trial % 6;
      spec.actions = 2;
      spec.min_payoff = -1;
      spec.max_payoff = 2;
      const auto g = RandomGame(spec, rng);
      const auto x = GameToMatrix(g);
      REQUIRE(x.rows() == spec.players + 1);
      const auto ids = SolveIds(g, {});
      const auto me = SolveMe(x);
      CHECK(ids.verdict == me.verdict);
      if (me.sequence) {
        CHECK(ValidateSequence(g, GameSequenceFromMatrix(g, *me.sequence),
                               DominanceKind::kPure));
      }
      if (ids.sequence) {
        CHECK(ValidateMeSequence(x, MatrixSequenceFromGame(g, *ids.sequence)));
      }
      const auto rows = oracle::Rows(x);
      for (int j = 0; j < spec.players; ++j) {
        for (int a = 0; a < 2; ++a) {
          oracle::MeQuery q;
          q.use_column = j;
          q.column_side = a;
          const auto ide = SolveIde(g, {j, a}, {});
          CHECK((ide.verdict == Verdict::kYes) == oracle::MeExists(rows, q));
        }
      }
    }
  }
  SUBCASE("sign pattern") {
    Rng rng(6);
    GameSpec spec;
    spec.cls = AnonymityClass::kAnonymous;
    spec.players = 4;
    spec.actions = 2;
    spec.min_payoff = -3;
    spec.max_payoff = 3;
    for (int trial = 0; trial < 50; ++trial) {
      const auto g = RandomGame(spec, rng);
      const auto x = GameToMatrix(g);
      for (int j = 0; j < 4; ++j) {
        for (int i = 0; i < 4; ++i) {
          const CommutativeImage opp{{3 - i, i}};
          const Rational d = g.Payoff(j, 1, opp) - g.Payoff(j, 0, opp);
          CHECK(x.Delta(i, j) == sgn(d));
        }
      }
    }
    GameSpec three = spec;
    three.actions = 3;
    CHECK_THROWS_AS(GameToMatrix(RandomGame(three, rng)), Error);
  }
}

TEST_CASE("budget") {
  const auto x = Fig1Matrix();
  SearchBudget small;
  for (std::uint64_t nodes = 1; nodes <= 3; ++nodes) {
    small.max_nodes = nodes;
    const auto r = SolveMe(x, small);
    CHECK(r.verdict == Verdict::kUnknown);
    CHECK_FALSE(r.sequence.has_value());
  }
  // A too-small budget may still settle an instance, but never wrongly.
  Rng rng(7);
  small.max_nodes = 4;
  for (int trial = 0; trial < 50; ++trial) {
    const auto y = RandomMatrix(6, 5, 2, rng);
    const auto r = SolveMe(y, small);
    if (r.verdict != Verdict::kUnknown) CHECK(r.verdict == SolveMe(y).verdict);
  }
}

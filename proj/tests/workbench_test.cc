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

#include <cmath>
#include <set>

#include "doctest.h"
#include "dominion/crosscheck.h"
#include "dominion/generators.h"
#include "dominion/io.h"
#include "dominion/iterated_dominance.h"
#include "dominion/matched_path.h"

using namespace dominion;

namespace {

constexpr AnonymityClass kAll[] = {
    AnonymityClass::kAnonymous, AnonymityClass::kSymmetric,
    AnonymityClass::kSelfAnonymous, AnonymityClass::kSelfSymmetric};

void CheckSameGame(const AnonymousGame& a, const AnonymousGame& b) {
  CHECK(a.num_players() == b.num_players());
  CHECK(a.action_names() == b.action_names());
  CHECK(a.tag() == b.tag());
  CHECK(ExpandNormalForm(a).payoffs == ExpandNormalForm(b).payoffs);
}

int ParseLine(const std::string& text) {
  try {
    ReadGame(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return -1;
}

}  // namespace

TEST_CASE("game files round trip") {
  Rng rng(1);
  for (int i = 0; i < 40; ++i) {
    GameSpec spec;
    spec.cls = kAll[i % 4];
    spec.players = 1 + i % 4;
    spec.actions = 1 + (i / 4) % 3;
    spec.min_payoff = -2;
    spec.table_pool = i % 3;
    const auto g = RandomGame(spec, rng);
    const auto text = WriteGame(g);
    CHECK(PeekFormat(text) == kGameFormat);
    const auto back = ReadGame(text);
    CheckSameGame(g, back);
    CHECK(WriteGame(back) == text);
  }
  CheckSameGame(Fig3Game(), ReadGame(WriteGame(Fig3Game())));
}

TEST_CASE("rational payoffs survive serialization") {
  const AnonymousGame g(1, {"lo", "hi"}, AnonymityClass::kSymmetric,
                        {PayoffTable::OwnAction(1, 2, {{Rational(-1, 3)}, {Rational(7, 2)}})});
  const auto back = ReadGame(WriteGame(g));
  CHECK(back.Payoff(0, 0, CommutativeImage{{0, 0}}) == Rational(-1, 3));
  CHECK(back.Payoff(0, 1, CommutativeImage{{0, 0}}) == Rational(7, 2));
  CHECK(back.ActionIndex("hi") == 1);
}

TEST_CASE("matrix and labeling files round trip") {
  Rng rng(2);
  for (int i = 0; i < 20; ++i) {
    const auto x = RandomMatrix(1 + i % 6, 1 + i % 4, 5, rng);
    CHECK(ReadMatrix(WriteMatrix(x)) == x);
    LabelingSpec spec;
    spec.m = i % 4;
    spec.n = 1 + i % 3;
    spec.labels = 3;
    const auto g = RandomLabeling(spec, rng);
    CHECK(ReadLabeling(WriteLabeling(g)) == g);
  }
  CHECK(ReadMatrix(WriteMatrix(Fig1Matrix())) == Fig1Matrix());
  const auto reduced = ReduceMeToMp(Fig1Matrix());
  CHECK(ReadLabeling(WriteLabeling(reduced)) == reduced);
}

TEST_CASE("certificates round trip") {
  SUBCASE("elimination with a mixed witness") {
    const auto g = Fig3Game();
    SolveOptions o;
    o.dominance = DominanceKind::kMixed;
    const auto r = SolveIde(g, {0, 0}, o, true);
    REQUIRE(r.verdict == Verdict::kYes);
    EliminationCertificate cert{Problem::kIde, EliminationTarget{0, 0}, *r.sequence};
    const auto text = WriteEliminationCertificate(g, cert);
    CHECK(PeekFormat(text) == kCertificateFormat);
    const auto back = ReadEliminationCertificate(g, text);
    CHECK(back.problem == Problem::kIde);
    REQUIRE(back.target.has_value());
    CHECK(back.target->player == 0);
    CHECK(back.sequence == cert.sequence);
    CHECK(ValidateSequence(g, back.sequence, DominanceKind::kMixed));
  }
  SUBCASE("matrix") {
    const auto x = Fig1Matrix();
    const auto r = SolveCe(x, 2);
    REQUIRE(r.sequence.has_value());
    MatrixCertificate cert{Problem::kCe, 2, *r.sequence};
    const auto back = ReadMatrixCertificate(x, WriteMatrixCertificate(x, cert));
    CHECK(back.problem == Problem::kCe);
    CHECK(back.column == std::optional<int>(2));
    CHECK(back.sequence == cert.sequence);
  }
  SUBCASE("path") {
    const auto g = ReduceMeToMp(Fig1Matrix());
    MpQuery q;
    q.length = 4;
    q.start = Vertex{0, 0};
    const auto r = SolveMp(g, q);
    REQUIRE(r.certificate.has_value());
    CHECK(ReadPathCertificate(g, WritePathCertificate(g, *r.certificate)) == *r.certificate);
  }
}

TEST_CASE("malformed input is reported with a position") {
  CHECK(ParseLine("{\n  \"format\": \"dominion-game/1\",\n  \"players\": ,\n}") == 3);
  CHECK_THROWS_AS(ReadGame(WriteMatrix(Fig1Matrix())), ParseError);
  CHECK_THROWS_AS(ReadMatrix(WriteGame(Fig3Game())), ParseError);
  CHECK_THROWS_AS(ReadMatrix(R"({"format": "dominion-matrix/2", "m": 1, "n": 1, "rows": [[0]]})"),
                  ParseError);
  CHECK_THROWS_AS(ReadMatrix(R"({"format": "dominion-matrix/1", "m": 2, "n": 1, "rows": [[0]]})"),
                  Error);
  CHECK_THROWS_AS(ReadMatrix(R"({"format": "dominion-matrix/1", "m": 1, "n": 1, "rows": [[-1]]})"),
                  Error);
  CHECK_THROWS_AS(ReadMatrix(R"({"format": "dominion-matrix/1", "m": 1, "n": 0, "rows": [[]]})"),
                  Error);
  CHECK_THROWS_AS(PeekFormat("[1, 2]"), ParseError);
  CHECK_THROWS_AS(ParseProblem("XYZ"), Error);
  CHECK(ParseProblem(ProblemName(Problem::kCe)) == Problem::kCe);
}

TEST_CASE("generators") {
  SUBCASE("determinism") {
    Rng a(42), b(42), c(43);
    const auto x = WriteMatrix(RandomMatrix(5, 4, 3, a));
    CHECK(x == WriteMatrix(RandomMatrix(5, 4, 3, b)));
    CHECK(x != WriteMatrix(RandomMatrix(5, 4, 3, c)));
    LabelingSpec spec;
    spec.directed_convex = true;
    spec.backward_closed = true;
    Rng d(7), e(7);
    CHECK(WriteLabeling(RandomLabeling(spec, d)) == WriteLabeling(RandomLabeling(spec, e)));
    GameSpec gs;
    gs.players = 4;
    Rng f(9), h(9);
    CHECK(WriteGame(RandomGame(gs, f)) == WriteGame(RandomGame(gs, h)));
  }
  SUBCASE("fixtures") {
    const auto x = Fig1Matrix();
    CHECK(x.rows() == 5);
    CHECK(x.cols() == 4);
    CHECK(x.column_names() == std::vector<std::string>{"a", "b", "c", "d"});
    const std::vector<std::vector<std::int64_t>> rows = {
        {1, 3, 2, 1}, {0, 2, 2, 1}, {0, 2, 3, 0}, {0, 2, 3, 0}, {3, 2, 3, 0}};
    CHECK(x == EliminationMatrix::FromRows(rows, {"a", "b", "c", "d"}));
    const auto g = Fig3Game();
    CHECK(g.num_players() == 3);
    CHECK(g.action_names() == std::vector<std::string>{"1", "2", "3"});
    CHECK(DetectClasses(g).Contains(AnonymityClass::kSelfAnonymous));
  }
  SUBCASE("self-anonymous games with two payoffs") {
    Rng rng(5);
    GameSpec spec;
    spec.cls = AnonymityClass::kSelfAnonymous;
    spec.players = 4;
    spec.actions = 3;
    spec.min_payoff = 0;
    spec.max_payoff = 1;
    for (int i = 0; i < 10; ++i) {
      const auto g = RandomGame(spec, rng);
      const auto nf = ExpandNormalForm(g);
      CHECK(Classify(nf).Contains(AnonymityClass::kSelfAnonymous));
      CHECK(Classify(ExpandNormalForm(ReadGame(WriteGame(g)))) == Classify(nf));
      const std::set<Rational> values(nf.payoffs.begin(), nf.payoffs.end());
      CHECK(values.size() == 2);
    }
  }
  SUBCASE("restricted labelings") {
    Rng rng(6);
    LabelingSpec spec;
    spec.m = 5;
    spec.n = 5;
    spec.labels = 12;
    spec.restricted = true;
    for (int i = 0; i < 20; ++i) {
      const auto g = RandomLabeling(spec, rng);
      std::vector<int> uses(spec.labels, 0);
      for (int r = 0; r <= g.m(); ++r) {
        for (int c = 0; c <= g.n(); ++c) {
          for (Direction d : {Direction::kSouth, Direction::kEast}) {
            if (!g.HasEdge({r, c}, d)) continue;
            CHECK(g.Labels({r, c}, d).size() <= 1);
            for (int l : g.Labels({r, c}, d)) ++uses[l];
          }
        }
      }
      for (int u : uses) CHECK(u <= 2);
    }
  }
  SUBCASE("impossible requests") {
    Rng rng(1);
    LabelingSpec spec;
    spec.m = 0;
    spec.n = 0;
    spec.labels = 1;
    spec.forward_closed = true;
    CHECK_THROWS_AS(RandomLabeling(spec, rng), Error);
    CHECK_THROWS_AS(RandomMatrix(3, 0, 2, rng), Error);
  }
}

TEST_CASE("crosscheck batteries on small ensembles") {
  CrosscheckConfig config;
  config.instances = 20;
  config.seed = 3;
  for (const auto& s : {CrosscheckIdsMe(config), CrosscheckMeMp(config),
                        CrosscheckReducedConvexity(config), CrosscheckMeOracle(config),
                        CrosscheckIdsOracle(config), CrosscheckClosedMp(config),
                        CrosscheckSymmetric(config),
                        CrosscheckDominanceCoincidence(config)}) {
    INFO(s.battery);
    CHECK(s.ok());
    CHECK(s.instances == 20);
    CHECK(s.checks >= 20);
    CHECK(s.positives > 0);
    CHECK(s.counterexamples.empty());
  }
}

TEST_CASE("scaling fit") {
  std::vector<ScalingPoint> cube;
  for (int n : {2, 4, 8, 16}) cube.push_back({n, std::pow(n, 3.0) * 5});
  CHECK(FitExponent(cube) == doctest::Approx(3.0));
  const auto r = SymmetricScaling({2, 4}, 2, 1, EliminationMode::kStepwise);
  CHECK(r.points.size() == 2);
  CHECK(r.points[0].nodes > 0);
}

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

#include "dominion/crosscheck.h"

#include <cmath>
#include <string>

#include "dominion/dominance.h"
#include "dominion/generators.h"
#include "dominion/io.h"
#include "dominion/matched_path.h"
#include "dominion/matrix_elim.h"

namespace dominion {
namespace {

constexpr std::size_t kMaxCounterexamples = 5;

int Uniform(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

void Mismatch(CrosscheckSummary& summary, const std::string& what,
              const std::string& instance) {
  ++summary.mismatches;
  if (summary.counterexamples.size() < kMaxCounterexamples) {
    summary.counterexamples.push_back(what + "\n" + instance);
  }
}

bool AnyUnknown(std::initializer_list<Verdict> verdicts) {
  for (Verdict v : verdicts) {
    if (v == Verdict::kUnknown) return true;
  }
  return false;
}

bool SolvesGame(const AnonymousGame& game, const EliminationSequence& seq,
                DominanceKind kind) {
  return ValidateSequence(game, seq, kind).valid &&
         ApplySequence(game, seq).IsTerminal();
}

}  // namespace

CrosscheckSummary CrosscheckIdsMe(const CrosscheckConfig& config,
                                  int max_players) {
  CrosscheckSummary summary;
  summary.battery = "ids-me";
  Rng rng(config.seed);
  SolveOptions options;
  options.budget = config.budget;
  for (int i = 0; i < config.instances; ++i) {
    GameSpec spec;
    spec.cls = AnonymityClass::kSelfAnonymous;
    spec.players = Uniform(rng, 1, max_players);
    spec.actions = 2;
    const AnonymousGame game = RandomGame(spec, rng);
    const EliminationMatrix matrix = GameToMatrix(game);
    ++summary.instances;

    const SolveResult ids = SolveIds(game, options);
    const MeResult me = SolveMe(matrix, config.budget);
    ++summary.checks;
    summary.positives += ids.verdict == Verdict::kYes;
    if (AnyUnknown({ids.verdict, me.verdict})) {
      ++summary.unknown;
      continue;
    }
    if (ids.verdict != me.verdict) {
      Mismatch(summary, "IDS and ME disagree", WriteGame(game));
      continue;
    }
    if (ids.sequence) {
      const auto translated = MatrixSequenceFromGame(game, *ids.sequence);
      if (!ValidateMeSequence(matrix, translated) ||
          static_cast<int>(translated.size()) != FullLength(matrix)) {
        Mismatch(summary, "IDS certificate does not translate",
                 WriteGame(game));
      }
    }
    if (me.sequence) {
      const auto translated = GameSequenceFromMatrix(game, *me.sequence);
      if (!SolvesGame(game, translated, DominanceKind::kPure)) {
        Mismatch(summary, "ME certificate does not translate",
                 WriteGame(game));
      }
    }

    for (int player = 0; player < game.num_players(); ++player) {
      bool either = false;
      bool unknown = false;
      for (int action = 0; action < 2; ++action) {
        const SolveResult ide = SolveIde(game, {player, action}, options);
        const MeResult ce =
            SolveCe(matrix, player, action == 0 ? RowSide::kTop
                                                : RowSide::kBottom,
                    config.budget);
        ++summary.checks;
        summary.positives += ide.verdict == Verdict::kYes;
        if (AnyUnknown({ide.verdict, ce.verdict})) {
          ++summary.unknown;
          unknown = true;
          continue;
        }
        either |= ide.verdict == Verdict::kYes;
        if (ide.verdict != ce.verdict) {
          Mismatch(summary,
                   "IDE and CE disagree for player " + std::to_string(player) +
                       " action " + std::to_string(action),
                   WriteGame(game));
        }
      }
      const MeResult ce_any = SolveCe(matrix, player, std::nullopt,
                                      config.budget);
      ++summary.checks;
      if (unknown || ce_any.verdict == Verdict::kUnknown) continue;
      if ((ce_any.verdict == Verdict::kYes) != either) {
        Mismatch(summary,
                 "CE is not the disjunction of IDE for player " +
                     std::to_string(player),
                 WriteGame(game));
      }
    }
  }
  return summary;
}

CrosscheckSummary CrosscheckMeMp(const CrosscheckConfig& config, int max_rows,
                                 int max_cols) {
  CrosscheckSummary summary;
  summary.battery = "me-mp";
  Rng rng(config.seed);
  for (int i = 0; i < config.instances; ++i) {
    const EliminationMatrix matrix = RandomMatrix(
        Uniform(rng, 1, max_rows), Uniform(rng, 1, max_cols), 3, rng);
    const GridLabeling grid = ReduceMeToMp(matrix);
    ++summary.instances;
    for (int length = 0; length <= FullLength(matrix); ++length) {
      const MeResult me = SolveMeLength(matrix, length, config.budget);
      MpQuery query;
      query.length = length;
      query.start = Vertex{0, 0};
      const MpResult mp = SolveMp(grid, query, config.budget);
      ++summary.checks;
      summary.positives += mp.verdict == Verdict::kYes;
      if (AnyUnknown({me.verdict, mp.verdict})) {
        ++summary.unknown;
        continue;
      }
      const std::string at = " at length " + std::to_string(length);
      if (me.verdict != mp.verdict) {
        Mismatch(summary, "ME and MP disagree" + at, WriteMatrix(matrix));
        continue;
      }
      if (me.sequence &&
          !VerifyMatchedPath(grid, PathFromMeSequence(*me.sequence), query)) {
        Mismatch(summary, "ME certificate is not a matched path" + at,
                 WriteMatrix(matrix));
      }
      if (mp.certificate &&
          !ValidateMeSequence(matrix, MeSequenceFromPath(*mp.certificate))) {
        Mismatch(summary, "matched path is not an elimination sequence" + at,
                 WriteMatrix(matrix));
      }
    }
  }
  return summary;
}

CrosscheckSummary CrosscheckReducedConvexity(const CrosscheckConfig& config,
                                             int max_rows, int max_cols) {
  CrosscheckSummary summary;
  summary.battery = "reduced-convexity";
  Rng rng(config.seed);
  for (int i = 0; i < config.instances; ++i) {
    const EliminationMatrix matrix = RandomMatrix(
        Uniform(rng, 1, max_rows), Uniform(rng, 1, max_cols), 3, rng);
    ++summary.instances;
    ++summary.checks;
    const GridLabeling grid = ReduceMeToMp(matrix);
    summary.positives += !grid.UsedLabels().empty();
    if (!IsDirectedConvex(grid)) {
      Mismatch(summary, "reduced labeling is not directed convex",
               WriteMatrix(matrix));
    }
  }
  return summary;
}

CrosscheckSummary CrosscheckMeOracle(const CrosscheckConfig& config,
                                     int max_rows, int max_cols,
                                     int max_entry) {
  CrosscheckSummary summary;
  summary.battery = "me-oracle";
  Rng rng(config.seed);
  for (int i = 0; i < config.instances; ++i) {
    const EliminationMatrix matrix = RandomMatrix(
        Uniform(rng, 1, max_rows), Uniform(rng, 1, max_cols), max_entry, rng);
    ++summary.instances;
    const MeResult me = SolveMe(matrix, config.budget);
    const Verdict oracle = OracleMe(matrix);
    ++summary.checks;
    summary.positives += oracle == Verdict::kYes;
    if (AnyUnknown({me.verdict, oracle})) {
      ++summary.unknown;
    } else if (me.verdict != oracle) {
      Mismatch(summary, "ME disagrees with the oracle", WriteMatrix(matrix));
    }
    for (int c = 0; c < matrix.cols(); ++c) {
      const MeResult ce = SolveCe(matrix, c, std::nullopt, config.budget);
      const Verdict ce_oracle = OracleCe(matrix, c);
      ++summary.checks;
      summary.positives += ce_oracle == Verdict::kYes;
      if (AnyUnknown({ce.verdict, ce_oracle})) {
        ++summary.unknown;
      } else if (ce.verdict != ce_oracle) {
        Mismatch(summary,
                 "CE disagrees with the oracle on column " +
                     matrix.column_name(c),
                 WriteMatrix(matrix));
      }
    }
  }
  return summary;
}

CrosscheckSummary CrosscheckIdsOracle(const CrosscheckConfig& config,
                                      int max_size) {
  CrosscheckSummary summary;
  summary.battery = "ids-oracle";
  Rng rng(config.seed);
  constexpr AnonymityClass kClasses[] = {
      AnonymityClass::kAnonymous, AnonymityClass::kSymmetric,
      AnonymityClass::kSelfAnonymous, AnonymityClass::kSelfSymmetric};
  for (int i = 0; i < config.instances; ++i) {
    GameSpec spec;
    spec.cls = kClasses[Uniform(rng, 0, 3)];
    spec.actions = Uniform(rng, 1, std::min(4, max_size));
    spec.players = Uniform(rng, 1, max_size / spec.actions);
    spec.table_pool = Uniform(rng, 0, 2);
    const AnonymousGame game = RandomGame(spec, rng);
    ++summary.instances;
    for (DominanceKind kind : {DominanceKind::kPure, DominanceKind::kMixed}) {
      SolveOptions options;
      options.dominance = kind;
      options.budget = config.budget;
      const SolveResult ids = SolveIds(game, options);
      const Verdict oracle = OracleIds(game, kind);
      ++summary.checks;
      summary.positives += oracle == Verdict::kYes;
      const std::string mode = kind == DominanceKind::kPure ? "pure" : "mixed";
      if (AnyUnknown({ids.verdict, oracle})) {
        ++summary.unknown;
      } else if (ids.verdict != oracle) {
        Mismatch(summary, "IDS (" + mode + ") disagrees with the oracle",
                 WriteGame(game));
      } else if (ids.sequence && !SolvesGame(game, *ids.sequence, kind)) {
        Mismatch(summary, "IDS (" + mode + ") certificate does not replay",
                 WriteGame(game));
      }
    }
  }
  return summary;
}

CrosscheckSummary CrosscheckClosedMp(const CrosscheckConfig& config,
                                     int max_side) {
  CrosscheckSummary summary;
  summary.battery = "closed-mp";
  Rng rng(config.seed);
  for (int i = 0; i < config.instances; ++i) {
    LabelingSpec spec;
    spec.m = Uniform(rng, 1, max_side);
    spec.n = Uniform(rng, 1, max_side);
    spec.labels = Uniform(rng, 1, spec.m + spec.n);
    spec.directed_convex = true;
    (i % 2 == 0 ? spec.backward_closed : spec.forward_closed) = true;
    const GridLabeling grid = RandomLabeling(spec, rng);
    ++summary.instances;
    for (int length = 0; length <= spec.m + spec.n; ++length) {
      const ClosedMpResult closed = SolveMpClosed(grid, length);
      MpQuery query;
      query.length = length;
      const MpResult general = SolveMp(grid, query, config.budget);
      ++summary.checks;
      summary.positives += general.verdict == Verdict::kYes;
      if (general.verdict == Verdict::kUnknown) {
        ++summary.unknown;
      } else if (closed.verdict != general.verdict) {
        Mismatch(summary,
                 "closed and general solvers disagree at length " +
                     std::to_string(length),
                 WriteLabeling(grid));
      }
    }
  }
  return summary;
}

CrosscheckSummary CrosscheckSymmetric(const CrosscheckConfig& config,
                                      int max_players, int max_actions) {
  CrosscheckSummary summary;
  summary.battery = "symmetric";
  Rng rng(config.seed);
  for (int i = 0; i < config.instances; ++i) {
    GameSpec spec;
    spec.cls = Uniform(rng, 0, 1) ? AnonymityClass::kSymmetric
                                  : AnonymityClass::kSelfSymmetric;
    spec.players = Uniform(rng, 1, max_players);
    spec.actions = Uniform(rng, 1, max_actions);
    spec.max_payoff = Uniform(rng, 1, 2);
    const AnonymousGame game = RandomGame(spec, rng);
    ++summary.instances;
    SolveOptions options;
    options.budget = config.budget;
    const SolveResult fast = SolveIdsSymmetric(game, options);
    const SolveResult general = SolveIds(game, options);
    ++summary.checks;
    summary.positives += general.verdict == Verdict::kYes;
    if (AnyUnknown({fast.verdict, general.verdict})) {
      ++summary.unknown;
    } else if (fast.verdict != general.verdict) {
      Mismatch(summary, "symmetric and general solvers disagree",
               WriteGame(game));
    } else if (fast.sequence &&
               !SolvesGame(game, *fast.sequence, DominanceKind::kPure)) {
      Mismatch(summary, "symmetric certificate does not replay",
               WriteGame(game));
    }
  }
  return summary;
}

CrosscheckSummary CrosscheckDominanceCoincidence(
    const CrosscheckConfig& config) {
  CrosscheckSummary summary;
  summary.battery = "dominance-coincidence";
  Rng rng(config.seed);
  constexpr AnonymityClass kClasses[] = {
      AnonymityClass::kAnonymous, AnonymityClass::kSymmetric,
      AnonymityClass::kSelfAnonymous, AnonymityClass::kSelfSymmetric};
  for (int i = 0; i < config.instances; ++i) {
    GameSpec spec;
    spec.cls = kClasses[Uniform(rng, 0, 3)];
    if (i % 2 == 0) {
      spec.actions = 2;
      spec.players = Uniform(rng, 1, 5);
      spec.max_payoff = 3;
    } else {
      spec.actions = Uniform(rng, 2, 4);
      spec.players = Uniform(rng, 1, 4);
      spec.max_payoff = 1;
    }
    const AnonymousGame game = RandomGame(spec, rng);
    std::vector<ActionSet> remaining;
    for (int p = 0; p < game.num_players(); ++p) {
      const ActionSet full = (ActionSet{1} << spec.actions) - 1;
      remaining.push_back(static_cast<ActionSet>(
          Uniform(rng, 1, static_cast<int>(full))));
    }
    const GameState state(game, remaining);
    ++summary.instances;
    for (int p = 0; p < game.num_players(); ++p) {
      for (int d = 0; d < spec.actions; ++d) {
        if (!state.Has(p, d) || state.NumRemaining(p) < 2) continue;
        bool pure = false;
        for (int a = 0; a < spec.actions && !pure; ++a) {
          pure = a != d && state.Has(p, a) &&
                 PureDominates(state, p, a, d).has_value();
        }
        const bool mixed = MixedDominated(state, p, d).has_value();
        ++summary.checks;
        summary.positives += mixed;
        if (pure != mixed) {
          Mismatch(summary,
                   "pure and mixed dominance disagree for player " +
                       std::to_string(p) + " action " + std::to_string(d),
                   WriteGame(game));
        }
      }
    }
  }
  return summary;
}

double FitExponent(const std::vector<ScalingPoint>& points) {
  if (points.size() < 2) throw Error("need at least two points to fit");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const auto& p : points) {
    if (p.size <= 0 || p.nodes <= 0) throw Error("cannot fit non-positive data");
    const double x = std::log(p.size);
    const double y = std::log(p.nodes);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double n = static_cast<double>(points.size());
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

ScalingResult ClosedMpScaling(const std::vector<int>& sizes, int samples,
                              std::uint64_t seed) {
  ScalingResult result;
  Rng rng(seed);
  for (int size : sizes) {
    double total = 0;
    for (int s = 0; s < samples; ++s) {
      LabelingSpec spec;
      spec.m = size;
      spec.n = size;
      spec.labels = size;
      spec.directed_convex = true;
      spec.backward_closed = true;
      total += static_cast<double>(
          SolveMpClosed(RandomLabeling(spec, rng), size).nodes);
    }
    result.points.push_back({size, total / samples});
  }
  result.exponent = FitExponent(result.points);
  return result;
}

ScalingResult SymmetricScaling(const std::vector<int>& players, int samples,
                               std::uint64_t seed, EliminationMode mode) {
  ScalingResult result;
  Rng rng(seed);
  for (int n : players) {
    double total = 0;
    for (int s = 0; s < samples; ++s) {
      // p(0, x) = 0 and p(1, x) in {0, 1}: action 0 stays weakly dominated
      // on most opponent ranges, so long elimination chains exist.
      std::vector<std::vector<Rational>> by_action(2);
      by_action[0].assign(n, 0);
      for (int x = 0; x < n; ++x) by_action[1].push_back(Uniform(rng, 0, 1));
      const AnonymousGame game(
          n, {"0", "1"}, AnonymityClass::kSymmetric,
          std::vector<PayoffTable>(n, PayoffTable::OwnAction(n, 2, by_action)));
      SolveOptions options;
      options.mode = mode;
      total += static_cast<double>(CountCanonicalStates(game, options));
    }
    result.points.push_back({n, total / samples});
  }
  result.exponent = FitExponent(result.points);
  return result;
}

}  // namespace dominion

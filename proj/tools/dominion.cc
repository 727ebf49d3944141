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

// dominion: solve, verify, convert, generate, cross-check and benchmark
// elimination problems.
//
// Exit codes: 0 yes/valid, 1 no/invalid, 2 unknown (budget exhausted),
// 64 usage, 65 malformed input, 66 unreadable input, 70 internal error.

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "dominion/crosscheck.h"
#include "dominion/dominance.h"
#include "dominion/generators.h"
#include "dominion/io.h"
#include "dominion/iterated_dominance.h"
#include "dominion/matched_path.h"
#include "dominion/matrix_elim.h"

namespace {

using namespace dominion;

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitUnknown = 2;
constexpr int kExitUsage = 64;
constexpr int kExitData = 65;
constexpr int kExitNoInput = 66;
constexpr int kExitSoftware = 70;

class UsageError : public Error {
 public:
  using Error::Error;
};

class InputError : public Error {
 public:
  using Error::Error;
};

// Key/value report, one pair per line; --human aligns it for reading.
class Report {
 public:
  void Add(const std::string& key, const std::string& value) {
    rows_.emplace_back(key, value);
  }
  void Print(bool human) const {
    std::size_t width = 0;
    for (const auto& [k, v] : rows_) width = std::max(width, k.size());
    for (const auto& [k, v] : rows_) {
      if (human) {
        std::cout << k << std::string(width - k.size() + 2, ' ') << v << "\n";
      } else {
        std::cout << k << "=" << v << "\n";
      }
    }
  }

 private:
  std::vector<std::pair<std::string, std::string>> rows_;
};

int ExitFor(Verdict v) {
  switch (v) {
    case Verdict::kYes: return kExitYes;
    case Verdict::kNo: return kExitNo;
    case Verdict::kUnknown: return kExitUnknown;
  }
  return kExitSoftware;
}

std::string Load(const std::string& path) {
  try {
    if (path == "-") {
      std::ostringstream out;
      out << std::cin.rdbuf();
      return out.str();
    }
    return ReadFile(path);
  } catch (const Error& e) {
    throw InputError(e.what());
  }
}

void Save(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
  } else {
    WriteFile(path, text);
  }
}

SearchBudget BudgetFrom(std::optional<std::uint64_t> flag) {
  SearchBudget budget;
  if (flag) {
    budget.max_nodes = *flag;
  } else if (const char* env = std::getenv("DOMINION_BUDGET")) {
    try {
      budget.max_nodes = std::stoull(env);
    } catch (const std::exception&) {
      throw UsageError("DOMINION_BUDGET must be a node count");
    }
  }
  return budget;
}

std::optional<Vertex> ParseVertex(const std::string& text) {
  if (text.empty()) return std::nullopt;
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw UsageError("vertices are given as ROW,COL");
  try {
    return Vertex{std::stoi(text.substr(0, comma)),
                  std::stoi(text.substr(comma + 1))};
  } catch (const std::exception&) {
    throw UsageError("vertices are given as ROW,COL");
  }
}

int CellOrName(const std::string& text, int count,
               const std::function<int(std::string_view)>& by_name) {
  try {
    return by_name(text);
  } catch (const Error&) {
  }
  try {
    std::size_t used = 0;
    const int v = std::stoi(text, &used);
    if (used == text.size() && v >= 0 && v < count) return v;
  } catch (const std::exception&) {
  }
  throw UsageError("unknown name or index '" + text + "'");
}

// --- solve -----------------------------------------------------------------

struct SolveArgs {
  std::string file;
  std::string problem;
  std::string player;
  std::string action;
  std::string column;
  std::string side;
  int length = -1;
  std::string start;
  std::string end;
  std::vector<std::string> required;
  std::string dom = "pure";
  std::string mode = "stepwise";
  std::optional<std::uint64_t> budget;
  std::string cert;
  bool symmetric = false;
  bool closed = false;
  bool human = false;
};

SolveOptions OptionsFrom(const SolveArgs& a) {
  SolveOptions o;
  o.dominance = a.dom == "mixed" ? DominanceKind::kMixed : DominanceKind::kPure;
  o.mode = a.mode == "batch" ? EliminationMode::kBatch
                             : EliminationMode::kStepwise;
  o.budget = BudgetFrom(a.budget);
  return o;
}

void Verified(const ValidationResult& r) {
  if (!r) throw std::logic_error("solver certificate rejected: " + r.reason);
}

int SolveGame(const SolveArgs& a, const AnonymousGame& game, Problem problem,
              Report& report) {
  const SolveOptions options = OptionsFrom(a);
  EliminationCertificate cert;
  cert.problem = problem;
  SolveResult result;
  if (problem == Problem::kIds) {
    result = a.symmetric ? SolveIdsSymmetric(game, options)
                         : SolveIds(game, options);
  } else {
    if (a.player.empty() || a.action.empty()) {
      throw UsageError("IDE needs --player and --action");
    }
    EliminationTarget target;
    target.player = CellOrName(a.player, game.num_players(),
                               [](std::string_view) -> int { throw Error(""); });
    target.action = CellOrName(a.action, game.num_actions(),
                               [&](std::string_view s) { return game.ActionIndex(s); });
    cert.target = target;
    result = SolveIde(game, target, options);
  }
  if (result.sequence) {
    cert.sequence = *result.sequence;
    Verified(ValidateSequence(game, cert.sequence, options.dominance));
    const GameState end = ApplySequence(game, cert.sequence);
    if (problem == Problem::kIds && !end.IsTerminal()) {
      throw std::logic_error("solver sequence does not solve the game");
    }
    if (problem == Problem::kIde &&
        !FindDominator(end, cert.target->player, cert.target->action,
                       options.dominance)) {
      throw std::logic_error("solver sequence leaves the target undominated");
    }
    report.Add("eliminations", std::to_string(cert.sequence.NumEliminations()));
    report.Add("batches", std::to_string(cert.sequence.batches.size()));
    if (!a.cert.empty()) Save(a.cert, WriteEliminationCertificate(game, cert));
  }
  report.Add("verdict", std::string(VerdictName(result.verdict)));
  report.Add("nodes", std::to_string(result.nodes));
  return ExitFor(result.verdict);
}

int SolveMatrix(const SolveArgs& a, const EliminationMatrix& matrix,
                Problem problem, Report& report) {
  const SearchBudget budget = BudgetFrom(a.budget);
  MatrixCertificate cert;
  cert.problem = problem;
  MeResult result;
  if (problem == Problem::kMe) {
    result = a.length >= 0 ? SolveMeLength(matrix, a.length, budget)
                           : SolveMe(matrix, budget);
  } else {
    if (a.column.empty()) throw UsageError("CE needs --column");
    const int col = CellOrName(a.column, matrix.cols(), [&](std::string_view s) {
      return matrix.ColumnIndex(s);
    });
    std::optional<RowSide> side;
    if (a.side == "top") side = RowSide::kTop;
    if (a.side == "bottom") side = RowSide::kBottom;
    cert.column = col;
    result = SolveCe(matrix, col, side, budget);
  }
  if (result.sequence) {
    cert.sequence = *result.sequence;
    Verified(ValidateMeSequence(matrix, cert.sequence));
    report.Add("length", std::to_string(cert.sequence.size()));
    if (!a.cert.empty()) Save(a.cert, WriteMatrixCertificate(matrix, cert));
  }
  report.Add("verdict", std::string(VerdictName(result.verdict)));
  report.Add("nodes", std::to_string(result.nodes));
  return ExitFor(result.verdict);
}

int SolveLabeling(const SolveArgs& a, const GridLabeling& grid,
                  bool from_matrix, Report& report) {
  MpQuery query;
  query.length = a.length;
  if (query.length < 0) throw UsageError("MP needs --length");
  query.start = ParseVertex(a.start);
  if (!query.start && from_matrix) query.start = Vertex{0, 0};
  query.end = ParseVertex(a.end);
  for (const auto& r : a.required) {
    query.required.push_back(CellOrName(r, static_cast<int>(grid.alphabet().size()),
                                        [&](std::string_view s) {
                                          return grid.LabelIndex(s);
                                        }));
  }
  std::optional<MatchedPathCertificate> cert;
  Verdict verdict;
  std::uint64_t nodes;
  if (a.closed) {
    if (query.start || query.end || !query.required.empty()) {
      throw UsageError("--closed takes no endpoint or label constraints");
    }
    const ClosedMpResult r = SolveMpClosed(grid, query.length);
    cert = r.certificate;
    verdict = r.verdict;
    nodes = r.nodes;
  } else {
    const MpResult r = SolveMp(grid, query, BudgetFrom(a.budget));
    cert = r.certificate;
    verdict = r.verdict;
    nodes = r.nodes;
  }
  if (cert) {
    Verified(VerifyMatchedPath(grid, *cert, query));
    std::string steps;
    for (Direction d : cert->steps) steps += d == Direction::kEast ? 'E' : 'S';
    report.Add("start", std::to_string(cert->start.row) + "," +
                            std::to_string(cert->start.col));
    report.Add("steps", steps.empty() ? "-" : steps);
    if (!a.cert.empty()) Save(a.cert, WritePathCertificate(grid, *cert));
  }
  report.Add("verdict", std::string(VerdictName(verdict)));
  report.Add("nodes", std::to_string(nodes));
  return ExitFor(verdict);
}

int RunSolve(const SolveArgs& a) {
  const std::string text = Load(a.file);
  const std::string format = PeekFormat(text);
  std::string name = a.problem;
  for (auto& c : name) c = static_cast<char>(std::toupper(c));
  Report report;
  report.Add("instance", a.file);
  const auto started = std::chrono::steady_clock::now();
  int code;
  if (format == kGameFormat) {
    const AnonymousGame game = ReadGame(text);
    const Problem problem = name.empty() ? Problem::kIds : ParseProblem(name);
    report.Add("problem", std::string(ProblemName(problem)));
    if (problem == Problem::kIds || problem == Problem::kIde) {
      code = SolveGame(a, game, problem, report);
    } else if (problem == Problem::kMp) {
      code = SolveLabeling(a, ReduceMeToMp(GameToMatrix(game)), true, report);
    } else {
      code = SolveMatrix(a, GameToMatrix(game), problem, report);
    }
  } else if (format == kMatrixFormat) {
    const EliminationMatrix matrix = ReadMatrix(text);
    const Problem problem = name.empty() ? Problem::kMe : ParseProblem(name);
    report.Add("problem", std::string(ProblemName(problem)));
    if (problem == Problem::kMp) {
      code = SolveLabeling(a, ReduceMeToMp(matrix), true, report);
    } else if (problem == Problem::kMe || problem == Problem::kCe) {
      code = SolveMatrix(a, matrix, problem, report);
    } else {
      throw UsageError("matrix files support ME, CE and MP");
    }
  } else if (format == kLabelingFormat) {
    const GridLabeling grid = ReadLabeling(text);
    const Problem problem = name.empty() ? Problem::kMp : ParseProblem(name);
    if (problem != Problem::kMp) throw UsageError("labeling files support MP");
    report.Add("problem", "MP");
    code = SolveLabeling(a, grid, false, report);
  } else {
    throw ParseError("unsupported format '" + format + "'");
  }
  const double ms = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - started)
                        .count();
  report.Add("certificate", a.cert.empty() ? "none" : a.cert);
  std::ostringstream t;
  t.precision(3);
  t << std::fixed << ms;
  report.Add("time_ms", t.str());
  report.Print(a.human);
  return code;
}

// --- verify ----------------------------------------------------------------

int RunVerify(const std::string& instance_path, const std::string& cert_path,
              const std::string& dom, bool human) {
  const std::string text = Load(instance_path);
  const std::string cert_text = Load(cert_path);
  const std::string format = PeekFormat(text);
  const DominanceKind kind =
      dom == "mixed" ? DominanceKind::kMixed : DominanceKind::kPure;
  ValidationResult result;
  std::string problem;
  if (format == kGameFormat) {
    const AnonymousGame game = ReadGame(text);
    const EliminationCertificate cert =
        ReadEliminationCertificate(game, cert_text);
    problem = ProblemName(cert.problem);
    result = ValidateSequence(game, cert.sequence, kind);
    if (result) {
      const GameState end = ApplySequence(game, cert.sequence);
      if (cert.problem == Problem::kIds && !end.IsTerminal()) {
        result = ValidationResult::Fail("players keep more than one action");
      }
      if (cert.problem == Problem::kIde) {
        const auto& t = *cert.target;
        bool removed = false;
        for (const auto& batch : cert.sequence.batches) {
          for (const auto& e : batch) {
            removed |= e.player == t.player && e.action == t.action;
          }
        }
        if (!removed && !FindDominator(end, t.player, t.action, kind)) {
          result = ValidationResult::Fail("target is never dominated");
        }
      }
    }
  } else if (format == kMatrixFormat) {
    const EliminationMatrix matrix = ReadMatrix(text);
    const MatrixCertificate cert = ReadMatrixCertificate(matrix, cert_text);
    problem = ProblemName(cert.problem);
    result = ValidateMeSequence(matrix, cert.sequence);
    if (result && cert.problem == Problem::kMe &&
        static_cast<int>(cert.sequence.size()) != FullLength(matrix)) {
      result = ValidationResult::Fail("sequence does not delete the matrix");
    }
    if (result && cert.problem == Problem::kCe) {
      const auto& cols = cert.sequence.columns;
      if (std::find(cols.begin(), cols.end(), *cert.column) == cols.end()) {
        result = ValidationResult::Fail("sequence never uses the column");
      }
    }
  } else if (format == kLabelingFormat) {
    const GridLabeling grid = ReadLabeling(text);
    const MatchedPathCertificate cert = ReadPathCertificate(grid, cert_text);
    problem = "MP";
    MpQuery query;
    query.length = static_cast<int>(cert.length());
    result = VerifyMatchedPath(grid, cert, query);
  } else {
    throw ParseError("unsupported format '" + format + "'");
  }
  Report report;
  report.Add("instance", instance_path);
  report.Add("certificate", cert_path);
  report.Add("problem", problem);
  report.Add("valid", result ? "yes" : "no");
  if (!result) report.Add("reason", result.reason);
  report.Print(human);
  return result ? kExitYes : kExitNo;
}

// --- convert ---------------------------------------------------------------

int RunConvert(const std::string& in, const std::string& to,
               const std::string& out) {
  const std::string text = Load(in);
  const std::string format = PeekFormat(text);
  if (to == "game") {
    if (format != kMatrixFormat) throw UsageError("only matrices convert to games");
    Save(out, WriteGame(MatrixToGame(ReadMatrix(text))));
  } else if (to == "matrix") {
    if (format != kGameFormat) throw UsageError("only games convert to matrices");
    Save(out, WriteMatrix(GameToMatrix(ReadGame(text))));
  } else if (to == "mp") {
    if (format == kGameFormat) {
      Save(out, WriteLabeling(ReduceMeToMp(GameToMatrix(ReadGame(text)))));
    } else if (format == kMatrixFormat) {
      Save(out, WriteLabeling(ReduceMeToMp(ReadMatrix(text))));
    } else {
      throw UsageError("only games and matrices convert to labelings");
    }
  } else {
    throw UsageError("--to must be game, matrix or mp");
  }
  return kExitYes;
}

// --- gen -------------------------------------------------------------------

struct GenArgs {
  std::string kind;
  std::string name;
  std::uint64_t seed = 1;
  std::string out;
  std::string cls = "self-anonymous";
  int players = 3;
  int actions = 2;
  int min_payoff = 0;
  int max_payoff = 2;
  int pool = 0;
  int rows = 5;
  int cols = 4;
  int max_entry = 3;
  int labels = 4;
  bool convex = false;
  bool backward = false;
  bool forward = false;
  bool restricted = false;
  double density = 0.3;
};

int RunGen(const GenArgs& a) {
  Rng rng(a.seed);
  if (a.kind == "game") {
    GameSpec spec;
    spec.cls = ParseClassName(a.cls);
    spec.players = a.players;
    spec.actions = a.actions;
    spec.min_payoff = a.min_payoff;
    spec.max_payoff = a.max_payoff;
    spec.table_pool = a.pool;
    Save(a.out, WriteGame(RandomGame(spec, rng)));
  } else if (a.kind == "matrix") {
    Save(a.out, WriteMatrix(RandomMatrix(a.rows, a.cols, a.max_entry, rng)));
  } else if (a.kind == "labeling") {
    LabelingSpec spec;
    spec.m = a.rows;
    spec.n = a.cols;
    spec.labels = a.labels;
    spec.directed_convex = a.convex;
    spec.backward_closed = a.backward;
    spec.forward_closed = a.forward;
    spec.restricted = a.restricted;
    spec.density = a.density;
    Save(a.out, WriteLabeling(RandomLabeling(spec, rng)));
  } else if (a.kind == "fixture") {
    if (a.name == "fig1") {
      Save(a.out, WriteMatrix(Fig1Matrix()));
    } else if (a.name == "fig3") {
      Save(a.out, WriteGame(Fig3Game()));
    } else {
      throw UsageError("fixtures: fig1, fig3");
    }
  } else {
    throw UsageError("kinds: game, matrix, labeling, fixture");
  }
  return kExitYes;
}

// --- crosscheck ------------------------------------------------------------

int RunCrosscheck(const std::string& battery, int instances,
                  std::uint64_t seed, std::optional<std::uint64_t> budget,
                  bool human) {
  CrosscheckConfig config;
  config.seed = seed;
  config.budget = BudgetFrom(budget);
  auto count = [&](int fallback) { return instances > 0 ? instances : fallback; };
  struct Entry {
    std::string name;
    std::function<CrosscheckSummary()> run;
  };
  const std::vector<Entry> all = {
      {"ids-me", [&] { config.instances = count(200); return CrosscheckIdsMe(config); }},
      {"me-mp", [&] { config.instances = count(200); return CrosscheckMeMp(config); }},
      {"reduced-convexity", [&] { config.instances = count(500); return CrosscheckReducedConvexity(config); }},
      {"me-oracle", [&] { config.instances = count(1000); return CrosscheckMeOracle(config); }},
      {"ids-oracle", [&] { config.instances = count(200); return CrosscheckIdsOracle(config); }},
      {"closed-mp", [&] { config.instances = count(200); return CrosscheckClosedMp(config); }},
      {"symmetric", [&] { config.instances = count(100); return CrosscheckSymmetric(config); }},
      {"dominance-coincidence", [&] { config.instances = count(500); return CrosscheckDominanceCoincidence(config); }},
  };
  bool ok = true;
  bool found = false;
  for (const auto& entry : all) {
    if (battery != "all" && battery != entry.name) continue;
    found = true;
    const auto started = std::chrono::steady_clock::now();
    const CrosscheckSummary s = entry.run();
    const double seconds = std::chrono::duration<double>(
                               std::chrono::steady_clock::now() - started)
                               .count();
    Report report;
    report.Add("battery", s.battery);
    report.Add("instances", std::to_string(s.instances));
    report.Add("checks", std::to_string(s.checks));
    report.Add("positives", std::to_string(s.positives));
    report.Add("mismatches", std::to_string(s.mismatches));
    report.Add("unknown", std::to_string(s.unknown));
    std::ostringstream t;
    t.precision(3);
    t << std::fixed << seconds;
    report.Add("time_s", t.str());
    report.Print(human);
    for (const auto& c : s.counterexamples) std::cout << "counterexample:\n" << c;
    std::cout << "\n";
    ok &= s.ok();
  }
  if (!found) throw UsageError("unknown battery '" + battery + "'");
  return ok ? kExitYes : kExitNo;
}

// --- bench -----------------------------------------------------------------

int RunBench(int samples, std::uint64_t seed, bool human) {
  auto print = [&](const std::string& name, const ScalingResult& r) {
    Report report;
    report.Add("ladder", name);
    for (const auto& p : r.points) {
      std::ostringstream v;
      v << p.nodes;
      report.Add("nodes@" + std::to_string(p.size), v.str());
    }
    std::ostringstream e;
    e.precision(3);
    e << std::fixed << r.exponent;
    report.Add("exponent", e.str());
    report.Print(human);
    std::cout << "\n";
  };
  print("closed-mp", ClosedMpScaling({5, 10, 15, 20}, samples, seed));
  print("symmetric-stepwise",
        SymmetricScaling({4, 8, 12, 16}, samples, seed, EliminationMode::kStepwise));
  print("symmetric-batch",
        SymmetricScaling({4, 8, 12, 16}, samples, seed, EliminationMode::kBatch));
  return kExitYes;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Iterated dominance, matrix elimination and matched paths."};
  app.require_subcommand(1);
  app.fallthrough();
  bool human = false;
  app.add_flag("--human", human, "Aligned, human-readable report");

  SolveArgs solve;
  auto* s = app.add_subcommand("solve", "Solve an instance file");
  s->add_option("file", solve.file, "Game, matrix or labeling file")->required();
  s->add_option("-p,--problem", solve.problem, "IDS, IDE, ME, CE or MP");
  s->add_option("--player", solve.player, "IDE target player");
  s->add_option("--action", solve.action, "IDE target action");
  s->add_option("--column", solve.column, "CE column");
  s->add_option("--side", solve.side, "CE side")->check(CLI::IsMember({"top", "bottom"}));
  s->add_option("--length", solve.length, "ME/MP length");
  s->add_option("--start", solve.start, "MP start vertex ROW,COL");
  s->add_option("--end", solve.end, "MP end vertex ROW,COL");
  s->add_option("--require", solve.required, "MP labels the matching must use")->delimiter(',');
  s->add_option("--dom", solve.dom, "Dominance notion")->check(CLI::IsMember({"pure", "mixed"}));
  s->add_option("--mode", solve.mode, "Elimination mode")->check(CLI::IsMember({"stepwise", "batch"}));
  s->add_option("--budget", solve.budget, "Node budget (overrides DOMINION_BUDGET)");
  s->add_option("--cert", solve.cert, "Write the certificate here ('-' for stdout)");
  s->add_flag("--symmetric", solve.symmetric, "IDS over canonical states");
  s->add_flag("--closed", solve.closed, "MP by the closed-labeling algorithm");

  std::string v_instance, v_cert, v_dom = "pure";
  auto* v = app.add_subcommand("verify", "Check a certificate against an instance");
  v->add_option("instance", v_instance)->required();
  v->add_option("certificate", v_cert)->required();
  v->add_option("--dom", v_dom)->check(CLI::IsMember({"pure", "mixed"}));

  std::string c_in, c_to, c_out;
  auto* c = app.add_subcommand("convert", "Game <-> matrix -> labeling");
  c->add_option("file", c_in)->required();
  c->add_option("--to", c_to)->required()->check(CLI::IsMember({"game", "matrix", "mp"}));
  c->add_option("-o,--out", c_out);

  GenArgs gen;
  auto* g = app.add_subcommand("gen", "Generate an instance");
  g->add_option("kind", gen.kind, "game, matrix, labeling or fixture")->required();
  g->add_option("name", gen.name, "Fixture name: fig1, fig3");
  g->add_option("--seed", gen.seed);
  g->add_option("-o,--out", gen.out);
  g->add_option("--class", gen.cls);
  g->add_option("--players", gen.players);
  g->add_option("--actions", gen.actions);
  g->add_option("--min-payoff", gen.min_payoff);
  g->add_option("--max-payoff", gen.max_payoff);
  g->add_option("--pool", gen.pool, "Players draw tables from a pool this size");
  g->add_option("--rows", gen.rows);
  g->add_option("--cols", gen.cols);
  g->add_option("--max-entry", gen.max_entry);
  g->add_option("--labels", gen.labels);
  g->add_flag("--convex", gen.convex);
  g->add_flag("--backward", gen.backward);
  g->add_flag("--forward", gen.forward);
  g->add_flag("--restricted", gen.restricted, "Unit label sets, two edges per label");
  g->add_option("--density", gen.density);

  std::string x_battery = "all";
  int x_instances = 0;
  std::uint64_t x_seed = 1;
  std::optional<std::uint64_t> x_budget;
  auto* x = app.add_subcommand("crosscheck", "Run equivalence batteries");
  x->add_option("--battery", x_battery);
  x->add_option("--instances", x_instances);
  x->add_option("--seed", x_seed);
  x->add_option("--budget", x_budget);

  int b_samples = 5;
  std::uint64_t b_seed = 1;
  auto* b = app.add_subcommand("bench", "Node-count scaling ladders");
  b->add_option("--samples", b_samples);
  b->add_option("--seed", b_seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*s) {
      solve.human = human;
      return RunSolve(solve);
    }
    if (*v) return RunVerify(v_instance, v_cert, v_dom, human);
    if (*c) return RunConvert(c_in, c_to, c_out);
    if (*g) return RunGen(gen);
    if (*x) return RunCrosscheck(x_battery, x_instances, x_seed, x_budget, human);
    if (*b) return RunBench(b_samples, b_seed, human);
  } catch (const UsageError& e) {
    std::cerr << "dominion: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InputError& e) {
    std::cerr << "dominion: " << e.what() << "\n";
    return kExitNoInput;
  } catch (const ParseError& e) {
    std::cerr << "dominion: parse error: " << e.what() << "\n";
    return kExitData;
  } catch (const BudgetExceeded& e) {
    std::cerr << "dominion: " << e.what() << "\n";
    return kExitUnknown;
  } catch (const Error& e) {
    std::cerr << "dominion: " << e.what() << "\n";
    return kExitData;
  } catch (const std::exception& e) {
    std::cerr << "dominion: internal error: " << e.what() << "\n";
    return kExitSoftware;
  }
  return kExitUsage;
}

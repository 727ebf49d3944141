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

#include "dominion/matrix_elim.h"

#include <algorithm>
#include <utility>

namespace dominion {

std::string DefaultColumnName(int col) {
  if (col < 26) return std::string(1, static_cast<char>('a' + col));
  return "c" + std::to_string(col);
}

EliminationMatrix::EliminationMatrix(int rows, int cols,
                                     std::vector<std::int64_t> entries,
                                     std::vector<std::string> column_names)
    : rows_(rows), cols_(cols), entries_(std::move(entries)),
      names_(std::move(column_names)) {
  if (rows < 1 || cols < 1) throw Error("a matrix needs m >= 1 and n >= 1");
  if (entries_.size() != static_cast<std::size_t>(rows) * cols) {
    throw Error("matrix entry count does not match its dimensions");
  }
  for (std::int64_t v : entries_) {
    if (v < 0) throw Error("matrix entries must be natural numbers");
  }
  if (names_.empty()) {
    for (int c = 0; c < cols; ++c) names_.push_back(DefaultColumnName(c));
  }
  if (static_cast<int>(names_.size()) != cols) {
    throw Error("one name per column is required");
  }
}

EliminationMatrix EliminationMatrix::FromRows(
    const std::vector<std::vector<std::int64_t>>& rows,
    std::vector<std::string> column_names) {
  if (rows.empty()) throw Error("a matrix needs at least one row");
  const std::size_t n = rows.front().size();
  std::vector<std::int64_t> flat;
  for (const auto& row : rows) {
    if (row.size() != n) throw Error("ragged matrix rows");
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return EliminationMatrix(static_cast<int>(rows.size()), static_cast<int>(n),
                           std::move(flat), std::move(column_names));
}

int EliminationMatrix::Delta(int row, int col) const {
  const std::int64_t d = at(row + 1, col) - at(row, col);
  return (d > 0) - (d < 0);
}

int EliminationMatrix::ColumnIndex(std::string_view name) const {
  for (int c = 0; c < cols_; ++c) {
    if (names_[c] == name) return c;
  }
  throw Error("unknown column '" + std::string(name) + "'");
}

ColumnStatus StatusIn(const EliminationMatrix& matrix, RowInterval interval,
                      int col) {
  if (interval.first < 0 || interval.first > interval.last ||
      interval.last >= matrix.rows() || col < 0 || col >= matrix.cols()) {
    throw Error("interval or column out of range");
  }
  bool up = false;
  bool down = false;
  for (int r = interval.first; r < interval.last; ++r) {
    const int d = matrix.Delta(r, col);
    up |= d > 0;
    down |= d < 0;
  }
  if (up && !down) return ColumnStatus::kIncreasing;
  if (down && !up) return ColumnStatus::kDecreasing;
  return ColumnStatus::kInactive;
}

int FullLength(const EliminationMatrix& matrix) {
  return std::min(matrix.rows() - 1, matrix.cols());
}

namespace {

ColumnStatus WantedStatus(RowSide side) {
  return side == RowSide::kTop ? ColumnStatus::kIncreasing
                               : ColumnStatus::kDecreasing;
}

}  // namespace

ValidationResult ValidateMeSequence(const EliminationMatrix& matrix,
                                    const MatrixElimSequence& sequence) {
  if (sequence.columns.size() != sequence.sides.size()) {
    return ValidationResult::Fail("column and side sequences differ in length");
  }
  IntervalState state{0, 0, std::vector<bool>(matrix.cols(), false)};
  for (std::size_t i = 0; i < sequence.size(); ++i) {
    const int c = sequence.columns[i];
    const std::string step = "step " + std::to_string(i) + ": ";
    if (c < 0 || c >= matrix.cols()) {
      return ValidationResult::Fail(step + "column out of range");
    }
    if (state.used[c]) {
      return ValidationResult::Fail(step + "column " + matrix.column_name(c) +
                                    " used twice");
    }
    if (state.top_removed + state.bottom_removed >= matrix.rows() - 1) {
      return ValidationResult::Fail(step + "no rows left to remove");
    }
    const RowSide side = sequence.sides[i];
    if (StatusIn(matrix, state.Interval(matrix.rows()), c) !=
        WantedStatus(side)) {
      return ValidationResult::Fail(
          step + "column " + matrix.column_name(c) + " is not " +
          (side == RowSide::kTop ? "increasing" : "decreasing"));
    }
    state.used[c] = true;
    (side == RowSide::kTop ? state.top_removed : state.bottom_removed) += 1;
  }
  return ValidationResult::Ok();
}

std::optional<MatrixElimSequence> RecoverSides(const EliminationMatrix& matrix,
                                               const std::vector<int>& columns) {
  MatrixElimSequence out;
  int top = 0;
  int bottom = 0;
  for (int c : columns) {
    if (c < 0 || c >= matrix.cols() || top + bottom >= matrix.rows() - 1) {
      return std::nullopt;
    }
    const ColumnStatus s =
        StatusIn(matrix, {top, matrix.rows() - 1 - bottom}, c);
    if (s == ColumnStatus::kInactive) return std::nullopt;
    const RowSide side =
        s == ColumnStatus::kIncreasing ? RowSide::kTop : RowSide::kBottom;
    out.columns.push_back(c);
    out.sides.push_back(side);
    (side == RowSide::kTop ? top : bottom) += 1;
  }
  if (!ValidateMeSequence(matrix, out)) return std::nullopt;
  return out;
}

namespace {

struct OutOfBudget {};

// Shared search over side sequences. Every live prefix carries a perfect
// matching between its positions and distinct columns.
class SideSearch {
 public:
  struct Goal {
    int length = -1;                 // stop at this many steps
    int top = -1;                    // with Reach: exact row counts
    int bottom = -1;
    int column = -1;                 // with CE: column that must be used
    std::optional<RowSide> side;     // with CE: required side for it
  };

  SideSearch(const EliminationMatrix& matrix, Goal goal,
             const SearchBudget& budget)
      : matrix_(matrix), goal_(goal), budget_(budget),
        status_(static_cast<std::size_t>(matrix.rows()) * matrix.rows() *
                matrix.cols()),
        column_owner_(matrix.cols(), -1) {
    const int m = matrix.rows();
    for (int t = 0; t < m; ++t) {
      for (int b = 0; t + b < m; ++b) {
        for (int c = 0; c < matrix.cols(); ++c) {
          status_[Slot(t, b, c)] = StatusIn(matrix, {t, m - 1 - b}, c);
        }
      }
    }
    max_length_ = FullLength(matrix);
    if (goal_.length >= 0) max_length_ = std::min(max_length_, goal_.length);
    if (goal_.top >= 0) {
      max_length_ = std::min(max_length_, goal_.top + goal_.bottom);
    }
  }

  MeResult Run() {
    MeResult result;
    try {
      const bool found = Dfs(0, 0);
      result.verdict = found ? Verdict::kYes : Verdict::kNo;
      if (found) result.sequence = Current();
    } catch (const OutOfBudget&) {
      result.verdict = Verdict::kUnknown;
    }
    result.longest = longest_;
    result.nodes = nodes_;
    return result;
  }

 private:
  std::size_t Slot(int t, int b, int c) const {
    return (static_cast<std::size_t>(t) * matrix_.rows() + b) * matrix_.cols() +
           c;
  }

  bool Candidate(std::size_t position, int col) const {
    const auto& [t, b, side] = steps_[position];
    return status_[Slot(t, b, col)] == WantedStatus(side);
  }

  bool Augment(std::size_t position, std::vector<bool>& seen) {
    for (int c = 0; c < matrix_.cols(); ++c) {
      if (seen[c] || !Candidate(position, c)) continue;
      seen[c] = true;
      if (column_owner_[c] < 0 || Augment(column_owner_[c], seen)) {
        column_owner_[c] = static_cast<int>(position);
        owned_[position] = c;
        return true;
      }
    }
    return false;
  }

  MatrixElimSequence Current() const {
    MatrixElimSequence seq;
    for (std::size_t p = 0; p < steps_.size(); ++p) {
      seq.columns.push_back(owned_[p]);
      seq.sides.push_back(std::get<2>(steps_[p]));
    }
    return seq;
  }

  bool AtGoal(int top, int bottom) const {
    const int length = top + bottom;
    if (goal_.column >= 0) return false;
    if (goal_.top >= 0) return top == goal_.top && bottom == goal_.bottom;
    return length == max_length_;
  }

  bool Dfs(int top, int bottom) {
    if (++nodes_ > budget_.max_nodes) throw OutOfBudget{};
    if (steps_.size() > longest_.size()) longest_ = Current();
    if (AtGoal(top, bottom)) return true;
    if (static_cast<int>(steps_.size()) >= max_length_) return false;

    for (RowSide side : {RowSide::kTop, RowSide::kBottom}) {
      const int next_top = top + (side == RowSide::kTop);
      const int next_bottom = bottom + (side == RowSide::kBottom);
      if (goal_.top >= 0 &&
          (next_top > goal_.top || next_bottom > goal_.bottom)) {
        continue;
      }
      const std::size_t position = steps_.size();
      steps_.emplace_back(top, bottom, side);
      owned_.push_back(-1);

      if (goal_.column >= 0 && Candidate(position, goal_.column) &&
          (!goal_.side || *goal_.side == side)) {
        // The prefix is perfectly matched and the target is unused, so the
        // new position can take it directly.
        column_owner_[goal_.column] = static_cast<int>(position);
        owned_[position] = goal_.column;
        if (steps_.size() > longest_.size()) longest_ = Current();
        return true;
      }

      std::vector<bool> seen(matrix_.cols(), false);
      if (Augment(position, seen)) {
        if (Dfs(next_top, next_bottom)) return true;
        column_owner_[owned_[position]] = -1;
      }
      steps_.pop_back();
      owned_.pop_back();
    }
    return false;
  }

  const EliminationMatrix& matrix_;
  Goal goal_;
  SearchBudget budget_;
  std::vector<ColumnStatus> status_;
  int max_length_ = 0;
  std::vector<std::tuple<int, int, RowSide>> steps_;
  std::vector<int> owned_;
  std::vector<int> column_owner_;
  MatrixElimSequence longest_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

MeResult SolveMeLength(const EliminationMatrix& matrix, int length,
                       const SearchBudget& budget) {
  if (length < 0 || length > FullLength(matrix)) {
    MeResult r;
    r.verdict = Verdict::kNo;
    return r;
  }
  SideSearch::Goal goal;
  goal.length = length;
  return SideSearch(matrix, goal, budget).Run();
}

MeResult SolveMe(const EliminationMatrix& matrix, const SearchBudget& budget) {
  return SolveMeLength(matrix, FullLength(matrix), budget);
}

MeResult SolveCe(const EliminationMatrix& matrix, int col,
                 std::optional<RowSide> side, const SearchBudget& budget) {
  if (col < 0 || col >= matrix.cols()) throw Error("column out of range");
  SideSearch::Goal goal;
  goal.column = col;
  goal.side = side;
  return SideSearch(matrix, goal, budget).Run();
}

MeResult Reach(const EliminationMatrix& matrix, int top, int bottom,
               const SearchBudget& budget) {
  if (top < 0 || bottom < 0 || top + bottom > matrix.rows() - 1) {
    throw Error("row counts out of range");
  }
  if (top + bottom > matrix.cols()) {
    MeResult r;
    r.verdict = Verdict::kNo;
    return r;
  }
  SideSearch::Goal goal;
  goal.top = top;
  goal.bottom = bottom;
  return SideSearch(matrix, goal, budget).Run();
}

namespace {

// Plain enumeration of (column, side) choices, no matching.
class Enumerator {
 public:
  Enumerator(const EliminationMatrix& matrix, int target_col,
             std::uint64_t max_nodes)
      : matrix_(matrix), target_col_(target_col), max_nodes_(max_nodes) {}

  bool Run(IntervalState& state, int length) {
    if (++nodes_ > max_nodes_) throw OutOfBudget{};
    if (target_col_ < 0 && length == FullLength(matrix_)) return true;
    if (state.top_removed + state.bottom_removed >= matrix_.rows() - 1) {
      return false;
    }
    const RowInterval interval = state.Interval(matrix_.rows());
    for (int c = 0; c < matrix_.cols(); ++c) {
      if (state.used[c]) continue;
      const ColumnStatus s = StatusIn(matrix_, interval, c);
      if (s == ColumnStatus::kInactive) continue;
      if (c == target_col_) return true;
      int& counter = s == ColumnStatus::kIncreasing ? state.top_removed
                                                    : state.bottom_removed;
      state.used[c] = true;
      ++counter;
      const bool ok = Run(state, length + 1);
      --counter;
      state.used[c] = false;
      if (ok) return true;
    }
    return false;
  }

 private:
  const EliminationMatrix& matrix_;
  int target_col_;
  std::uint64_t max_nodes_;
  std::uint64_t nodes_ = 0;
};

Verdict RunEnumerator(const EliminationMatrix& matrix, int col,
                      const OracleLimits& limits) {
  IntervalState state{0, 0, std::vector<bool>(matrix.cols(), false)};
  try {
    return Enumerator(matrix, col, limits.max_nodes).Run(state, 0)
               ? Verdict::kYes
               : Verdict::kNo;
  } catch (const OutOfBudget&) {
    return Verdict::kUnknown;
  }
}

}  // namespace

Verdict OracleMe(const EliminationMatrix& matrix, const OracleLimits& limits) {
  return RunEnumerator(matrix, -1, limits);
}

Verdict OracleCe(const EliminationMatrix& matrix, int col,
                 const OracleLimits& limits) {
  if (col < 0 || col >= matrix.cols()) throw Error("column out of range");
  return RunEnumerator(matrix, col, limits);
}

// ---------------------------------------------------------------------------
// Bridge to two-action games

EliminationMatrix GameToMatrix(const AnonymousGame& game) {
  if (game.num_actions() != 2) {
    throw Error("only two-action games map to matrices");
  }
  const int n = game.num_players();
  const int m = n + 1;
  std::vector<std::int64_t> entries(static_cast<std::size_t>(m) * n);

  bool literal = true;
  for (int j = 0; j < n && literal; ++j) {
    const PayoffTable& t = game.table(j);
    if (t.kind() != PayoffTable::Kind::kFullImage) {
      literal = false;
      break;
    }
    for (const Rational& v : t.values()) {
      if (v.get_den() != 1 || v < 0 || !v.get_num().fits_slong_p()) {
        literal = false;
        break;
      }
    }
  }
  for (int j = 0; j < n; ++j) {
    if (literal) {
      const PayoffTable& t = game.table(j);
      for (int i = 0; i < m; ++i) {
        entries[i * n + j] = t.PayoffOfImage({{n - i, i}}).get_num().get_si();
      }
      continue;
    }
    entries[j] = n;
    for (int i = 0; i + 1 < m; ++i) {
      const CommutativeImage opponents{{n - 1 - i, i}};
      const Rational d =
          game.Payoff(j, 1, opponents) - game.Payoff(j, 0, opponents);
      entries[(i + 1) * n + j] = entries[i * n + j] + sgn(d);
    }
  }
  return EliminationMatrix(m, n, std::move(entries));
}

AnonymousGame MatrixToGame(const EliminationMatrix& matrix) {
  const int n = matrix.cols();
  if (matrix.rows() != n + 1) {
    throw Error("only (n + 1) x n matrices describe n-player games");
  }
  std::vector<PayoffTable> tables;
  for (int j = 0; j < n; ++j) {
    // Full images (n - i, i) in colex order are i = 0, 1, ..., n.
    std::vector<Rational> by_image;
    for (int i = 0; i <= n; ++i) by_image.emplace_back(matrix.at(i, j));
    tables.push_back(PayoffTable::FullImage(n, 2, std::move(by_image)));
  }
  return AnonymousGame(n, {"0", "1"}, AnonymityClass::kSelfAnonymous,
                       std::move(tables));
}

EliminationSequence GameSequenceFromMatrix(const AnonymousGame& game,
                                           const MatrixElimSequence& sequence) {
  if (game.num_actions() != 2) {
    throw Error("only two-action games map to matrices");
  }
  EliminationSequence out;
  GameState state = GameState::Initial(game);
  for (std::size_t i = 0; i < sequence.size(); ++i) {
    const int player = sequence.columns[i];
    const int action = sequence.sides[i] == RowSide::kTop ? 0 : 1;
    if (player < 0 || player >= game.num_players() ||
        !state.Has(player, action) || state.NumRemaining(player) < 2) {
      throw Error("matrix sequence does not map to a game sequence");
    }
    out.batches.push_back({Elimination{
        player, action,
        FindDominator(state, player, action, DominanceKind::kPure)}});
    state = state.Without(player, action);
  }
  return out;
}

MatrixElimSequence MatrixSequenceFromGame(const AnonymousGame& game,
                                          const EliminationSequence& sequence) {
  if (game.num_actions() != 2 || !sequence.IsStepwise()) {
    throw Error("only stepwise two-action sequences map to matrices");
  }
  MatrixElimSequence out;
  for (const auto& batch : sequence.batches) {
    out.columns.push_back(batch.front().player);
    out.sides.push_back(batch.front().action == 0 ? RowSide::kTop
                                                  : RowSide::kBottom);
  }
  return out;
}

}  // namespace dominion

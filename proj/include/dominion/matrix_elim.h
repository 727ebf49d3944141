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

#ifndef DOMINION_MATRIX_ELIM_H_
#define DOMINION_MATRIX_ELIM_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dominion/core.h"
#include "dominion/game_model.h"
#include "dominion/iterated_dominance.h"

namespace dominion {

// m x n matrix of naturals. Only the signs of vertical differences matter
// for elimination.
class EliminationMatrix {
 public:
  EliminationMatrix(int rows, int cols, std::vector<std::int64_t> entries,
                    std::vector<std::string> column_names = {});
  static EliminationMatrix FromRows(
      const std::vector<std::vector<std::int64_t>>& rows,
      std::vector<std::string> column_names = {});

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  std::int64_t at(int row, int col) const { return entries_[row * cols_ + col]; }
  // Sign of at(row + 1, col) - at(row, col); row in [0, rows - 2].
  int Delta(int row, int col) const;

  const std::string& column_name(int col) const { return names_[col]; }
  const std::vector<std::string>& column_names() const { return names_; }
  int ColumnIndex(std::string_view name) const;

  friend bool operator==(const EliminationMatrix&,
                         const EliminationMatrix&) = default;

 private:
  int rows_;
  int cols_;
  std::vector<std::int64_t> entries_;
  std::vector<std::string> names_;
};

// Default column names: a, b, ..., z, then c26, c27, ...
std::string DefaultColumnName(int col);

// Zero-based inclusive row interval.
struct RowInterval {
  int first = 0;
  int last = 0;
};

enum class ColumnStatus { kIncreasing, kDecreasing, kInactive };

// Increasing: monotone nondecreasing on the interval with a strict rise
// between its ends. Decreasing symmetric. Throws on bad ranges.
ColumnStatus StatusIn(const EliminationMatrix& matrix, RowInterval interval,
                      int col);

// kTop removes the top row together with an increasing column; kBottom the
// bottom row with a decreasing one.
enum class RowSide : std::uint8_t { kTop = 0, kBottom = 1 };

struct MatrixElimSequence {
  std::vector<int> columns;
  std::vector<RowSide> sides;

  std::size_t size() const { return columns.size(); }
  friend bool operator==(const MatrixElimSequence&,
                         const MatrixElimSequence&) = default;
};

// Rows removed from the top and bottom, plus the columns spent so far.
struct IntervalState {
  int top_removed = 0;
  int bottom_removed = 0;
  std::vector<bool> used;

  RowInterval Interval(int rows) const {
    return {top_removed, rows - 1 - bottom_removed};
  }
};

// Length of a sequence that deletes the whole matrix: min(m - 1, n).
int FullLength(const EliminationMatrix& matrix);

ValidationResult ValidateMeSequence(const EliminationMatrix& matrix,
                                    const MatrixElimSequence& sequence);

// Given only the column order, the side of every step is forced: a column
// cannot be increasing and decreasing on the same interval.
std::optional<MatrixElimSequence> RecoverSides(const EliminationMatrix& matrix,
                                               const std::vector<int>& columns);

struct MeResult {
  Verdict verdict = Verdict::kUnknown;
  std::optional<MatrixElimSequence> sequence;  // set iff kYes
  MatrixElimSequence longest;                  // longest valid one seen
  std::uint64_t nodes = 0;
};

// Depth-first search over side sequences (lattice paths of interval states).
// Columns are assigned by a position/column bipartite matching that is
// augmented once per step; a step that cannot be augmented is pruned.
MeResult SolveMeLength(const EliminationMatrix& matrix, int length,
                       const SearchBudget& budget = {});
MeResult SolveMe(const EliminationMatrix& matrix,
                 const SearchBudget& budget = {});

// A valid sequence that uses `col`, optionally on the given side.
MeResult SolveCe(const EliminationMatrix& matrix, int col,
                 std::optional<RowSide> side = std::nullopt,
                 const SearchBudget& budget = {});

// A valid sequence removing exactly `top` rows from the top and `bottom`
// from the bottom.
MeResult Reach(const EliminationMatrix& matrix, int top, int bottom,
               const SearchBudget& budget = {});

// Exhaustive enumeration of all (columns, sides) pairs.
Verdict OracleMe(const EliminationMatrix& matrix,
                 const OracleLimits& limits = {});
Verdict OracleCe(const EliminationMatrix& matrix, int col,
                 const OracleLimits& limits = {});

// Two-action anonymous game to matrix: column j belongs to player j, row i
// to i players choosing action 1. Self-anonymous games with natural payoffs
// map to their literal payoff matrix; otherwise columns integrate the signs of
// p_j(1, x) - p_j(0, x) starting from n. Throws unless the game has exactly
// two actions.
EliminationMatrix GameToMatrix(const AnonymousGame& game);

// Inverse of the literal case: an (n + 1) x n matrix as the self-anonymous
// n-player game with p_j(i players on action 1) = x_{i,j}.
AnonymousGame MatrixToGame(const EliminationMatrix& matrix);

// Removing action 0 (action 1 dominates) is a top step; removing action 1 is
// a bottom step. Witnesses are recomputed on the fly.
EliminationSequence GameSequenceFromMatrix(const AnonymousGame& game,
                                           const MatrixElimSequence& sequence);
MatrixElimSequence MatrixSequenceFromGame(const AnonymousGame& game,
                                          const EliminationSequence& sequence);

}  // namespace dominion

#endif  // DOMINION_MATRIX_ELIM_H_

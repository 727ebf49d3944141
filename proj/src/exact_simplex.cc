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

#include "dominion/exact_simplex.h"

#include <cstddef>
#include <optional>

namespace dominion {
namespace {

class Tableau {
 public:
  // Columns: structural, then slack/surplus, then artificial. The last entry
  // of every row is the right-hand side.
  Tableau(const LinearProgram& lp) : num_structural_(lp.num_variables) {
    const std::size_t m = lp.constraints.size();
    int slacks = 0;
    int artificials = 0;
    for (const auto& c : lp.constraints) {
      if (c.coefficients.size() != static_cast<std::size_t>(num_structural_)) {
        throw Error("constraint width does not match variable count");
      }
      const bool flip = c.rhs < 0;
      Relation rel = c.relation;
      if (flip && rel != Relation::kEqual) {
        rel = rel == Relation::kLessEqual ? Relation::kGreaterEqual
                                          : Relation::kLessEqual;
      }
      if (rel != Relation::kEqual) ++slacks;
      if (rel != Relation::kLessEqual) ++artificials;
    }
    first_artificial_ = num_structural_ + slacks;
    num_columns_ = first_artificial_ + artificials;
    rows_.assign(m, std::vector<Rational>(num_columns_ + 1));
    basis_.assign(m, -1);

    int next_slack = num_structural_;
    int next_artificial = first_artificial_;
    for (std::size_t r = 0; r < m; ++r) {
      const auto& c = lp.constraints[r];
      const bool flip = c.rhs < 0;
      Relation rel = c.relation;
      if (flip && rel != Relation::kEqual) {
        rel = rel == Relation::kLessEqual ? Relation::kGreaterEqual
                                          : Relation::kLessEqual;
      }
      auto& row = rows_[r];
      for (int j = 0; j < num_structural_; ++j) {
        row[j] = flip ? -c.coefficients[j] : c.coefficients[j];
      }
      row[num_columns_] = flip ? -c.rhs : c.rhs;
      if (rel == Relation::kLessEqual) {
        row[next_slack] = 1;
        basis_[r] = next_slack++;
      } else if (rel == Relation::kGreaterEqual) {
        row[next_slack++] = -1;
        row[next_artificial] = 1;
        basis_[r] = next_artificial++;
      } else {
        row[next_artificial] = 1;
        basis_[r] = next_artificial++;
      }
    }
  }

  // Returns false when the feasible region is empty.
  bool PhaseOne() {
    // maximize -sum(artificial)
    objective_.assign(num_columns_ + 1, 0);
    for (int j = first_artificial_; j < num_columns_; ++j) objective_[j] = 1;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      if (basis_[r] >= first_artificial_) SubtractRow(objective_, rows_[r], 1);
    }
    Run(num_columns_);
    if (objective_[num_columns_] != 0) return false;
    DriveOutArtificials();
    return true;
  }

  // Returns false when unbounded.
  bool PhaseTwo(const std::vector<Rational>& c) {
    objective_.assign(num_columns_ + 1, 0);
    for (int j = 0; j < num_structural_; ++j) objective_[j] = -c[j];
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const int b = basis_[r];
      if (objective_[b] != 0) {
        const Rational factor = objective_[b];
        SubtractRow(objective_, rows_[r], factor);
      }
    }
    return Run(first_artificial_);
  }

  Rational Value() const { return objective_[num_columns_]; }

  std::vector<Rational> Solution() const {
    std::vector<Rational> x(num_structural_);
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      if (basis_[r] < num_structural_) x[basis_[r]] = rows_[r][num_columns_];
    }
    return x;
  }

  int pivots() const { return pivots_; }

 private:
  static void SubtractRow(std::vector<Rational>& target,
                          const std::vector<Rational>& row,
                          const Rational& factor) {
    for (std::size_t j = 0; j < target.size(); ++j) {
      if (row[j] != 0) target[j] -= factor * row[j];
    }
  }

  void Pivot(std::size_t pivot_row, int column) {
    auto& row = rows_[pivot_row];
    const Rational inv = 1 / row[column];
    for (auto& v : row) {
      if (v != 0) v *= inv;
    }
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      if (r == pivot_row || rows_[r][column] == 0) continue;
      const Rational factor = rows_[r][column];
      SubtractRow(rows_[r], row, factor);
    }
    if (objective_[column] != 0) {
      const Rational factor = objective_[column];
      SubtractRow(objective_, row, factor);
    }
    basis_[pivot_row] = column;
    ++pivots_;
  }

  // Columns >= `limit` never enter. Returns false when unbounded.
  bool Run(int limit) {
    while (true) {
      int entering = -1;
      for (int j = 0; j < limit; ++j) {
        if (objective_[j] < 0) {
          entering = j;
          break;
        }
      }
      if (entering < 0) return true;
      std::optional<std::size_t> leaving;
      Rational best_ratio;
      for (std::size_t r = 0; r < rows_.size(); ++r) {
        const Rational& a = rows_[r][entering];
        if (a <= 0) continue;
        Rational ratio = rows_[r][num_columns_] / a;
        if (!leaving || ratio < best_ratio ||
            (ratio == best_ratio && basis_[r] < basis_[*leaving])) {
          leaving = r;
          best_ratio = std::move(ratio);
        }
      }
      if (!leaving) return false;
      Pivot(*leaving, entering);
    }
  }

  void DriveOutArtificials() {
    for (std::size_t r = 0; r < rows_.size();) {
      if (basis_[r] < first_artificial_) {
        ++r;
        continue;
      }
      int column = -1;
      for (int j = 0; j < first_artificial_; ++j) {
        if (rows_[r][j] != 0) {
          column = j;
          break;
        }
      }
      if (column >= 0) {
        Pivot(r, column);
        ++r;
      } else {
        // Redundant equality.
        rows_.erase(rows_.begin() + static_cast<std::ptrdiff_t>(r));
        basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(r));
      }
    }
  }

  int num_structural_;
  int first_artificial_ = 0;
  int num_columns_ = 0;
  std::vector<std::vector<Rational>> rows_;
  std::vector<int> basis_;
  std::vector<Rational> objective_;
  int pivots_ = 0;
};

}  // namespace

LpSolution Maximize(const LinearProgram& lp) {
  if (lp.objective.size() != static_cast<std::size_t>(lp.num_variables)) {
    throw Error("objective width does not match variable count");
  }
  Tableau tableau(lp);
  LpSolution out;
  if (!tableau.PhaseOne()) {
    out.status = LpStatus::kInfeasible;
    out.pivots = tableau.pivots();
    return out;
  }
  if (!tableau.PhaseTwo(lp.objective)) {
    out.status = LpStatus::kUnbounded;
    out.pivots = tableau.pivots();
    return out;
  }
  out.status = LpStatus::kOptimal;
  out.value = tableau.Value();
  out.x = tableau.Solution();
  out.pivots = tableau.pivots();
  return out;
}

}  // namespace dominion

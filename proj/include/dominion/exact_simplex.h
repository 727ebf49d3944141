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

#ifndef DOMINION_EXACT_SIMPLEX_H_
#define DOMINION_EXACT_SIMPLEX_H_

#include <vector>

#include "dominion/core.h"

namespace dominion {

enum class Relation { kLessEqual, kGreaterEqual, kEqual };

struct LinearConstraint {
  std::vector<Rational> coefficients;
  Relation relation = Relation::kLessEqual;
  Rational rhs;
};

// maximize objective . x  subject to constraints, x >= 0.
struct LinearProgram {
  int num_variables = 0;
  std::vector<Rational> objective;
  std::vector<LinearConstraint> constraints;
};

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

struct LpSolution {
  LpStatus status = LpStatus::kInfeasible;
  Rational value;
  std::vector<Rational> x;
  int pivots = 0;
};

// Two-phase dense tableau simplex in exact arithmetic. Bland's rule for both
// entering and leaving variables, so it terminates on degenerate programs.
LpSolution Maximize(const LinearProgram& lp);

}  // namespace dominion

#endif  // DOMINION_EXACT_SIMPLEX_H_

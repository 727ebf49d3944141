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

#ifndef DOMINION_CORE_H_
#define DOMINION_CORE_H_

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace dominion {

// Payoffs, strategy weights and LP quantities are exact.
using Rational = mpq_class;

// Accepts "p/q", "p", and plain integers with optional sign.
Rational ParseRational(std::string_view text);

// Always renders as "p/q" with q >= 1.
std::string FormatRational(const Rational& value);

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised by oracles and expansions that refuse oversized inputs up front.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

enum class Verdict { kYes, kNo, kUnknown };

std::string_view VerdictName(Verdict verdict);

// Result of certificate or sequence replay. A false result always carries a
// reason.
struct ValidationResult {
  bool valid = true;
  std::string reason;

  static ValidationResult Ok() { return {}; }
  static ValidationResult Fail(std::string why) {
    return {false, std::move(why)};
  }
  explicit operator bool() const { return valid; }
};

// Node budget shared by every search. Exhausting it yields kUnknown.
struct SearchBudget {
  std::uint64_t max_nodes = 5'000'000;
};

// Oracle size limits. These are configuration, not constants.
struct OracleLimits {
  std::uint64_t max_profiles = 1'000'000;   // k^n for normal-form expansion
  std::uint64_t max_nodes = 50'000'000;     // DFS nodes for exhaustive oracles
};

}  // namespace dominion

#endif  // DOMINION_CORE_H_

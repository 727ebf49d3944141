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

#ifndef DOMINION_IO_H_
#define DOMINION_IO_H_

#include <optional>
#include <string>
#include <string_view>

#include "dominion/core.h"
#include "dominion/game_model.h"
#include "dominion/iterated_dominance.h"
#include "dominion/matched_path.h"
#include "dominion/matrix_elim.h"

namespace dominion {

inline constexpr std::string_view kGameFormat = "dominion-game/1";
inline constexpr std::string_view kMatrixFormat = "dominion-matrix/1";
inline constexpr std::string_view kLabelingFormat = "dominion-mp/1";
inline constexpr std::string_view kCertificateFormat = "dominion-cert/1";

// Syntax errors carry a 1-based line and column; structural errors name the
// offending field and leave both at 0.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line = 0, int column = 0);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

enum class Problem { kIds, kIde, kMe, kCe, kMp };
std::string_view ProblemName(Problem problem);
Problem ParseProblem(std::string_view name);

// The mandatory "format" field of any document.
std::string PeekFormat(std::string_view text);

AnonymousGame ReadGame(std::string_view text);
std::string WriteGame(const AnonymousGame& game);

EliminationMatrix ReadMatrix(std::string_view text);
std::string WriteMatrix(const EliminationMatrix& matrix);

GridLabeling ReadLabeling(std::string_view text);
std::string WriteLabeling(const GridLabeling& labeling);

struct EliminationCertificate {
  Problem problem = Problem::kIds;
  std::optional<EliminationTarget> target;  // IDE only
  EliminationSequence sequence;
};
std::string WriteEliminationCertificate(const AnonymousGame& game,
                                        const EliminationCertificate& cert);
EliminationCertificate ReadEliminationCertificate(const AnonymousGame& game,
                                                  std::string_view text);

struct MatrixCertificate {
  Problem problem = Problem::kMe;
  std::optional<int> column;  // CE only
  MatrixElimSequence sequence;
};
std::string WriteMatrixCertificate(const EliminationMatrix& matrix,
                                   const MatrixCertificate& cert);
MatrixCertificate ReadMatrixCertificate(const EliminationMatrix& matrix,
                                        std::string_view text);

std::string WritePathCertificate(const GridLabeling& labeling,
                                 const MatchedPathCertificate& cert);
MatchedPathCertificate ReadPathCertificate(const GridLabeling& labeling,
                                           std::string_view text);

std::string ReadFile(const std::string& path);
void WriteFile(const std::string& path, std::string_view contents);

}  // namespace dominion

#endif  // DOMINION_IO_H_

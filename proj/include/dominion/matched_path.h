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

#ifndef DOMINION_MATCHED_PATH_H_
#define DOMINION_MATCHED_PATH_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dominion/core.h"
#include "dominion/matrix_elim.h"

namespace dominion {

struct Vertex {
  int row = 0;
  int col = 0;
  friend bool operator==(Vertex, Vertex) = default;
};

enum class Direction : std::uint8_t { kSouth, kEast };

// Complete m x n layered grid graph on vertices [m]_0 x [n]_0 with a label
// set per edge. Labels are indices into `alphabet`; an empty set is
// equivalent to a missing edge.
class GridLabeling {
 public:
  GridLabeling(int m, int n, std::vector<std::string> alphabet);

  int m() const { return m_; }
  int n() const { return n_; }
  const std::vector<std::string>& alphabet() const { return alphabet_; }
  int LabelIndex(std::string_view name) const;

  bool HasEdge(Vertex from, Direction dir) const;
  static Vertex Head(Vertex from, Direction dir) {
    return dir == Direction::kSouth ? Vertex{from.row + 1, from.col}
                                    : Vertex{from.row, from.col + 1};
  }
  // Sorted, duplicate-free.
  const std::vector<int>& Labels(Vertex from, Direction dir) const;
  bool HasLabel(Vertex from, Direction dir, int label) const;
  void SetLabels(Vertex from, Direction dir, std::vector<int> labels);
  void AddLabel(Vertex from, Direction dir, int label);

  // The alphabet in use: union of all edge label sets.
  std::vector<int> UsedLabels() const;

  friend bool operator==(const GridLabeling&, const GridLabeling&) = default;

 private:
  std::size_t EdgeIndex(Vertex from, Direction dir) const;

  int m_;
  int n_;
  std::vector<std::string> alphabet_;
  std::vector<std::vector<int>> east_;   // (m + 1) x n
  std::vector<std::vector<int>> south_;  // m x (n + 1)
};

struct MatchedPathCertificate {
  Vertex start;
  std::vector<Direction> steps;
  std::vector<int> labels;  // labels[i] matched to the i-th edge

  std::size_t length() const { return steps.size(); }
  friend bool operator==(const MatchedPathCertificate&,
                         const MatchedPathCertificate&) = default;
};

struct MpQuery {
  int length = 0;
  std::optional<Vertex> start;
  std::optional<Vertex> end;
  std::vector<int> required;  // labels the matching must use
};

// Contiguity, edge existence, label membership, injectivity, and the query's
// endpoint and required-label constraints.
ValidationResult VerifyMatchedPath(const GridLabeling& labeling,
                                   const MatchedPathCertificate& certificate,
                                   const MpQuery& query);

struct MpResult {
  Verdict verdict = Verdict::kUnknown;
  std::optional<MatchedPathCertificate> certificate;
  std::uint64_t nodes = 0;
};

// Depth-first search over paths with an edge/label matching augmented once
// per step; an edge that cannot be augmented is pruned.
MpResult SolveMp(const GridLabeling& labeling, const MpQuery& query,
                 const SearchBudget& budget = {});

// Per label, the positions it may take; must be an interval.
struct LabelInterval {
  int label = 0;
  int first = 0;  // 1-based, inclusive
  int last = 0;
};

// Greedy matching for convex bipartite graphs: scan positions 1..positions
// and give each the available label whose interval ends first (ties by
// label). Returns the label of every position iff all positions are matched.
std::optional<std::vector<int>> ConvexBipartiteMatching(
    int positions, std::span<const LabelInterval> intervals);
// Same, from explicit candidate position sets. Throws Error when a set is not
// contiguous.
std::optional<std::vector<int>> ConvexBipartiteMatching(
    int positions, const std::vector<std::vector<int>>& candidates);

bool IsDirectedConvex(const GridLabeling& labeling);
bool IsBackwardClosed(const GridLabeling& labeling);
// Every label occurs on an edge entering the sink (m, n).
bool IsForwardClosed(const GridLabeling& labeling);
// For every label, its edges stay in one weakly connected component of the
// graph formed by them and all edges of the other direction.
bool IsConnectedLabeling(const GridLabeling& labeling);

// Vertex (i, j) -> (m - i, n - j); an edge u -> v becomes rot(v) -> rot(u)
// with the same direction. Swaps backward and forward closure.
GridLabeling Rotate(const GridLabeling& labeling);

struct ClosedMpResult {
  Verdict verdict = Verdict::kNo;
  std::optional<MatchedPathCertificate> certificate;
  std::uint64_t nodes = 0;  // dynamic-programming cells evaluated
};

// Polynomial algorithm for directed-convex labelings that are backward or
// forward closed. Every label then lives on one direction and the path can
// be anchored at the source (backward) or sink (forward); for each split of
// the length into east and south steps a reachability sweep checks Hall's
// condition per step, and greedy convex matchings build the certificate.
// Throws Error when the preconditions fail.
ClosedMpResult SolveMpClosed(const GridLabeling& labeling, int length);

// Vertex (t, b) is the row interval after removing t rows at the top and b at
// the bottom. South edges carry the columns increasing on the source
// interval, east edges the decreasing ones. The grid is (m-1) x (m-1); edges
// leaving vertices with t + b > m - 2 carry nothing.
GridLabeling ReduceMeToMp(const EliminationMatrix& matrix);

// South <-> top step, east <-> bottom step; the path starts at (0, 0).
MatchedPathCertificate PathFromMeSequence(const MatrixElimSequence& sequence);
MatrixElimSequence MeSequenceFromPath(const MatchedPathCertificate& path);

}  // namespace dominion

#endif  // DOMINION_MATCHED_PATH_H_

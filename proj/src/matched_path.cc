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

#include "dominion/matched_path.h"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <utility>

namespace dominion {

GridLabeling::GridLabeling(int m, int n, std::vector<std::string> alphabet)
    : m_(m), n_(n), alphabet_(std::move(alphabet)),
      east_(static_cast<std::size_t>(m + 1) * std::max(n, 0)),
      south_(static_cast<std::size_t>(std::max(m, 0)) * (n + 1)) {
  if (m < 0 || n < 0) throw Error("grid dimensions must be non-negative");
}

int GridLabeling::LabelIndex(std::string_view name) const {
  for (std::size_t i = 0; i < alphabet_.size(); ++i) {
    if (alphabet_[i] == name) return static_cast<int>(i);
  }
  throw Error("unknown label '" + std::string(name) + "'");
}

bool GridLabeling::HasEdge(Vertex from, Direction dir) const {
  if (from.row < 0 || from.col < 0 || from.row > m_ || from.col > n_) {
    return false;
  }
  return dir == Direction::kSouth ? from.row < m_ : from.col < n_;
}

std::size_t GridLabeling::EdgeIndex(Vertex from, Direction dir) const {
  if (!HasEdge(from, dir)) throw Error("edge outside the grid");
  return dir == Direction::kSouth
             ? static_cast<std::size_t>(from.row) * (n_ + 1) + from.col
             : static_cast<std::size_t>(from.row) * n_ + from.col;
}

const std::vector<int>& GridLabeling::Labels(Vertex from, Direction dir) const {
  const std::size_t e = EdgeIndex(from, dir);
  return dir == Direction::kSouth ? south_[e] : east_[e];
}

bool GridLabeling::HasLabel(Vertex from, Direction dir, int label) const {
  if (!HasEdge(from, dir)) return false;
  const auto& set = Labels(from, dir);
  return std::binary_search(set.begin(), set.end(), label);
}

void GridLabeling::SetLabels(Vertex from, Direction dir,
                             std::vector<int> labels) {
  for (int l : labels) {
    if (l < 0 || l >= static_cast<int>(alphabet_.size())) {
      throw Error("label index outside the alphabet");
    }
  }
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  const std::size_t e = EdgeIndex(from, dir);
  (dir == Direction::kSouth ? south_[e] : east_[e]) = std::move(labels);
}

void GridLabeling::AddLabel(Vertex from, Direction dir, int label) {
  std::vector<int> set = Labels(from, dir);
  set.push_back(label);
  SetLabels(from, dir, std::move(set));
}

std::vector<int> GridLabeling::UsedLabels() const {
  std::set<int> used;
  for (const auto& s : east_) used.insert(s.begin(), s.end());
  for (const auto& s : south_) used.insert(s.begin(), s.end());
  return {used.begin(), used.end()};
}

// ---------------------------------------------------------------------------
// Certificates

ValidationResult VerifyMatchedPath(const GridLabeling& labeling,
                                   const MatchedPathCertificate& certificate,
                                   const MpQuery& query) {
  if (certificate.steps.size() != certificate.labels.size()) {
    return ValidationResult::Fail("one label per edge is required");
  }
  if (static_cast<int>(certificate.length()) != query.length) {
    return ValidationResult::Fail("path has the wrong length");
  }
  Vertex v = certificate.start;
  if (v.row < 0 || v.col < 0 || v.row > labeling.m() || v.col > labeling.n()) {
    return ValidationResult::Fail("start vertex outside the grid");
  }
  if (query.start && !(*query.start == v)) {
    return ValidationResult::Fail("path starts at the wrong vertex");
  }
  std::set<int> used;
  for (std::size_t i = 0; i < certificate.steps.size(); ++i) {
    const Direction dir = certificate.steps[i];
    const int label = certificate.labels[i];
    if (!labeling.HasEdge(v, dir)) {
      return ValidationResult::Fail("edge " + std::to_string(i) +
                                    " leaves the grid");
    }
    if (!labeling.HasLabel(v, dir, label)) {
      return ValidationResult::Fail("edge " + std::to_string(i) +
                                    " does not carry its label");
    }
    if (!used.insert(label).second) {
      return ValidationResult::Fail("label used twice");
    }
    v = GridLabeling::Head(v, dir);
  }
  if (query.end && !(*query.end == v)) {
    return ValidationResult::Fail("path ends at the wrong vertex");
  }
  for (int r : query.required) {
    if (!used.contains(r)) {
      return ValidationResult::Fail("required label missing from matching");
    }
  }
  return ValidationResult::Ok();
}

// ---------------------------------------------------------------------------
// General search

namespace {

struct OutOfBudget {};

class PathSearch {
 public:
  PathSearch(const GridLabeling& labeling, const MpQuery& query,
             const SearchBudget& budget)
      : labeling_(labeling), query_(query), budget_(budget),
        label_owner_(labeling.alphabet().size(), -1) {}

  MpResult Run() {
    MpResult result;
    if (query_.length < 0 ||
        query_.length > labeling_.m() + labeling_.n() ||
        query_.required.size() > static_cast<std::size_t>(query_.length)) {
      result.verdict = Verdict::kNo;
      return result;
    }
    std::vector<Vertex> starts;
    if (query_.start) {
      starts.push_back(*query_.start);
    } else {
      for (int i = 0; i <= labeling_.m(); ++i) {
        for (int j = 0; j <= labeling_.n(); ++j) starts.push_back({i, j});
      }
    }
    try {
      for (Vertex s : starts) {
        start_ = s;
        if (Dfs(s)) {
          result.verdict = Verdict::kYes;
          result.certificate = certificate_;
          result.nodes = nodes_;
          return result;
        }
      }
      result.verdict = Verdict::kNo;
    } catch (const OutOfBudget&) {
      result.verdict = Verdict::kUnknown;
    }
    result.nodes = nodes_;
    return result;
  }

 private:
  const std::vector<int>& Candidates(std::size_t position) const {
    return labeling_.Labels(edges_[position].first, edges_[position].second);
  }

  bool Augment(std::size_t position, std::vector<bool>& seen) {
    for (int l : Candidates(position)) {
      if (seen[l]) continue;
      seen[l] = true;
      if (label_owner_[l] < 0 || Augment(label_owner_[l], seen)) {
        label_owner_[l] = static_cast<int>(position);
        owned_[position] = l;
        return true;
      }
    }
    return false;
  }

  // Matching of the finished path that also covers every required label:
  // saturate the required labels first, then augment from positions, which
  // never unmatches a label.
  std::optional<std::vector<int>> MatchWithRequired() const {
    const std::size_t k = edges_.size();
    std::vector<int> owner(labeling_.alphabet().size(), -1);
    std::vector<int> owned(k, -1);
    std::vector<bool> seen_pos;
    std::vector<bool> seen_label;

    std::function<bool(int)> from_label = [&](int l) -> bool {
      for (std::size_t p = 0; p < k; ++p) {
        if (seen_pos[p]) continue;
        const auto& c = Candidates(p);
        if (!std::binary_search(c.begin(), c.end(), l)) continue;
        seen_pos[p] = true;
        if (owned[p] < 0 || from_label(owned[p])) {
          owned[p] = l;
          owner[l] = static_cast<int>(p);
          return true;
        }
      }
      return false;
    };
    std::function<bool(std::size_t)> from_position =
        [&](std::size_t p) -> bool {
      for (int l : Candidates(p)) {
        if (seen_label[l]) continue;
        seen_label[l] = true;
        if (owner[l] < 0 || from_position(owner[l])) {
          owner[l] = static_cast<int>(p);
          owned[p] = l;
          return true;
        }
      }
      return false;
    };
    for (int r : query_.required) {
      if (r < 0 || r >= static_cast<int>(owner.size())) return std::nullopt;
      if (owner[r] >= 0) continue;
      seen_pos.assign(k, false);
      if (!from_label(r)) return std::nullopt;
    }
    for (std::size_t p = 0; p < k; ++p) {
      if (owned[p] >= 0) continue;
      seen_label.assign(owner.size(), false);
      if (!from_position(p)) return std::nullopt;
    }
    return owned;
  }

  bool Finish(Vertex at) {
    if (query_.end && !(*query_.end == at)) return false;
    std::vector<int> labels = owned_;
    if (!query_.required.empty()) {
      auto matched = MatchWithRequired();
      if (!matched) return false;
      labels = std::move(*matched);
    }
    certificate_.start = start_;
    certificate_.steps.clear();
    for (const auto& e : edges_) certificate_.steps.push_back(e.second);
    certificate_.labels = std::move(labels);
    return true;
  }

  bool Dfs(Vertex at) {
    if (++nodes_ > budget_.max_nodes) throw OutOfBudget{};
    const int left = query_.length - static_cast<int>(edges_.size());
    if (left == 0) return Finish(at);
    if (query_.end) {
      const int dr = query_.end->row - at.row;
      const int dc = query_.end->col - at.col;
      if (dr < 0 || dc < 0 || dr + dc != left) return false;
    }
    for (Direction dir : {Direction::kEast, Direction::kSouth}) {
      if (!labeling_.HasEdge(at, dir) || labeling_.Labels(at, dir).empty()) {
        continue;
      }
      const std::size_t position = edges_.size();
      edges_.emplace_back(at, dir);
      owned_.push_back(-1);
      std::vector<bool> seen(labeling_.alphabet().size(), false);
      if (Augment(position, seen)) {
        if (Dfs(GridLabeling::Head(at, dir))) return true;
        label_owner_[owned_[position]] = -1;
      }
      edges_.pop_back();
      owned_.pop_back();
    }
    return false;
  }

  const GridLabeling& labeling_;
  const MpQuery& query_;
  SearchBudget budget_;
  Vertex start_;
  std::vector<std::pair<Vertex, Direction>> edges_;
  std::vector<int> owned_;
  std::vector<int> label_owner_;
  MatchedPathCertificate certificate_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

MpResult SolveMp(const GridLabeling& labeling, const MpQuery& query,
                 const SearchBudget& budget) {
  return PathSearch(labeling, query, budget).Run();
}

// ---------------------------------------------------------------------------
// Convex bipartite matching

std::optional<std::vector<int>> ConvexBipartiteMatching(
    int positions, std::span<const LabelInterval> intervals) {
  for (const auto& iv : intervals) {
    if (iv.first > iv.last) throw Error("empty label interval");
  }
  std::vector<bool> used(intervals.size(), false);
  std::vector<int> out;
  out.reserve(positions);
  for (int p = 1; p <= positions; ++p) {
    int best = -1;
    for (std::size_t i = 0; i < intervals.size(); ++i) {
      const auto& iv = intervals[i];
      if (used[i] || iv.first > p || iv.last < p) continue;
      if (best < 0 || iv.last < intervals[best].last ||
          (iv.last == intervals[best].last &&
           iv.label < intervals[best].label)) {
        best = static_cast<int>(i);
      }
    }
    if (best < 0) return std::nullopt;
    used[best] = true;
    out.push_back(intervals[best].label);
  }
  return out;
}

std::optional<std::vector<int>> ConvexBipartiteMatching(
    int positions, const std::vector<std::vector<int>>& candidates) {
  std::vector<LabelInterval> intervals;
  for (std::size_t l = 0; l < candidates.size(); ++l) {
    std::vector<int> set = candidates[l];
    if (set.empty()) continue;
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());
    if (set.back() - set.front() + 1 != static_cast<int>(set.size())) {
      throw Error("candidate positions of label " + std::to_string(l) +
                  " are not an interval");
    }
    intervals.push_back({static_cast<int>(l), set.front(), set.back()});
  }
  return ConvexBipartiteMatching(positions, intervals);
}

// ---------------------------------------------------------------------------
// Structural detectors

namespace {

// occurrence[dir][vertex] for one label.
struct Occurrences {
  int rows;
  int cols;
  std::vector<char> south;
  std::vector<char> east;

  std::size_t At(int i, int j) const {
    return static_cast<std::size_t>(i) * cols + j;
  }
};

Occurrences Collect(const GridLabeling& g, int label) {
  Occurrences o{g.m() + 1, g.n() + 1, {}, {}};
  o.south.assign(static_cast<std::size_t>(o.rows) * o.cols, 0);
  o.east.assign(o.south.size(), 0);
  for (int i = 0; i <= g.m(); ++i) {
    for (int j = 0; j <= g.n(); ++j) {
      o.south[o.At(i, j)] = g.HasLabel({i, j}, Direction::kSouth, label);
      o.east[o.At(i, j)] = g.HasLabel({i, j}, Direction::kEast, label);
    }
  }
  return o;
}

// below[v]: some marked vertex u <= v. above[v]: some marked u >= v.
std::pair<std::vector<char>, std::vector<char>> Sweep(
    const Occurrences& o, const std::vector<char>& marks) {
  std::vector<char> below(marks.size(), 0), above(marks.size(), 0);
  for (int i = 0; i < o.rows; ++i) {
    for (int j = 0; j < o.cols; ++j) {
      char v = marks[o.At(i, j)];
      if (i > 0) v |= below[o.At(i - 1, j)];
      if (j > 0) v |= below[o.At(i, j - 1)];
      below[o.At(i, j)] = v;
    }
  }
  for (int i = o.rows - 1; i >= 0; --i) {
    for (int j = o.cols - 1; j >= 0; --j) {
      char v = marks[o.At(i, j)];
      if (i + 1 < o.rows) v |= above[o.At(i + 1, j)];
      if (j + 1 < o.cols) v |= above[o.At(i, j + 1)];
      above[o.At(i, j)] = v;
    }
  }
  return {std::move(below), std::move(above)};
}

}  // namespace

bool IsDirectedConvex(const GridLabeling& labeling) {
  for (int label : labeling.UsedLabels()) {
    const Occurrences o = Collect(labeling, label);
    const auto [south_below, south_above] = Sweep(o, o.south);
    const auto [east_below, east_above] = Sweep(o, o.east);
    for (int i = 0; i < o.rows; ++i) {
      for (int j = 0; j < o.cols; ++j) {
        const std::size_t v = o.At(i, j);
        // A south and an east occurrence on one monotone path.
        if (o.east[v] && (south_below[v] || south_above[v])) return false;
        // Between two occurrences every edge of their direction carries the
        // label and, by the check above, none of the other direction does.
        if (south_below[v] && south_above[v] &&
            labeling.HasEdge({i, j}, Direction::kSouth) && !o.south[v]) {
          return false;
        }
        if (east_below[v] && east_above[v] &&
            labeling.HasEdge({i, j}, Direction::kEast) && !o.east[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

namespace {

bool CoversUsed(const GridLabeling& labeling,
                std::initializer_list<std::pair<Vertex, Direction>> edges) {
  std::set<int> seen;
  for (const auto& [from, dir] : edges) {
    if (!labeling.HasEdge(from, dir)) continue;
    const auto& l = labeling.Labels(from, dir);
    seen.insert(l.begin(), l.end());
  }
  for (int label : labeling.UsedLabels()) {
    if (!seen.contains(label)) return false;
  }
  return true;
}

}  // namespace

bool IsBackwardClosed(const GridLabeling& labeling) {
  return CoversUsed(labeling, {{{0, 0}, Direction::kSouth},
                               {{0, 0}, Direction::kEast}});
}

bool IsForwardClosed(const GridLabeling& labeling) {
  const int m = labeling.m();
  const int n = labeling.n();
  return CoversUsed(labeling, {{{m - 1, n}, Direction::kSouth},
                               {{m, n - 1}, Direction::kEast}});
}

bool IsConnectedLabeling(const GridLabeling& labeling) {
  const int rows = labeling.m() + 1;
  const int cols = labeling.n() + 1;
  auto id = [cols](Vertex v) { return v.row * cols + v.col; };
  for (int label : labeling.UsedLabels()) {
    std::vector<std::pair<Vertex, Direction>> carrying;
    bool has_south = false;
    bool has_east = false;
    for (int i = 0; i < rows; ++i) {
      for (int j = 0; j < cols; ++j) {
        for (Direction d : {Direction::kSouth, Direction::kEast}) {
          if (labeling.HasLabel({i, j}, d, label)) {
            carrying.emplace_back(Vertex{i, j}, d);
            (d == Direction::kSouth ? has_south : has_east) = true;
          }
        }
      }
    }
    std::vector<int> parent(static_cast<std::size_t>(rows) * cols);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
      return parent[x] == x ? x : parent[x] = find(parent[x]);
    };
    auto join = [&](Vertex a, Vertex b) { parent[find(id(a))] = find(id(b)); };
    for (const auto& [v, d] : carrying) join(v, GridLabeling::Head(v, d));
    // Edges of the direction opposite to some carrying edge.
    for (int i = 0; i < rows; ++i) {
      for (int j = 0; j < cols; ++j) {
        if (has_east && labeling.HasEdge({i, j}, Direction::kSouth)) {
          join({i, j}, {i + 1, j});
        }
        if (has_south && labeling.HasEdge({i, j}, Direction::kEast)) {
          join({i, j}, {i, j + 1});
        }
      }
    }
    const int root = find(id(carrying.front().first));
    for (const auto& [v, d] : carrying) {
      if (find(id(v)) != root) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Reduction from matrix elimination

GridLabeling ReduceMeToMp(const EliminationMatrix& matrix) {
  const int m = matrix.rows();
  GridLabeling g(m - 1, m - 1, matrix.column_names());
  for (int t = 0; t <= m - 2; ++t) {
    for (int b = 0; t + b <= m - 2; ++b) {
      std::vector<int> south, east;
      for (int c = 0; c < matrix.cols(); ++c) {
        switch (StatusIn(matrix, {t, m - 1 - b}, c)) {
          case ColumnStatus::kIncreasing:
            south.push_back(c);
            break;
          case ColumnStatus::kDecreasing:
            east.push_back(c);
            break;
          case ColumnStatus::kInactive:
            break;
        }
      }
      g.SetLabels({t, b}, Direction::kSouth, std::move(south));
      g.SetLabels({t, b}, Direction::kEast, std::move(east));
    }
  }
  return g;
}

MatchedPathCertificate PathFromMeSequence(const MatrixElimSequence& sequence) {
  MatchedPathCertificate path;
  path.start = {0, 0};
  for (std::size_t i = 0; i < sequence.size(); ++i) {
    path.steps.push_back(sequence.sides[i] == RowSide::kTop ? Direction::kSouth
                                                            : Direction::kEast);
    path.labels.push_back(sequence.columns[i]);
  }
  return path;
}

MatrixElimSequence MeSequenceFromPath(const MatchedPathCertificate& path) {
  if (!(path.start == Vertex{0, 0})) {
    throw Error("only paths from the source map to elimination sequences");
  }
  MatrixElimSequence seq;
  for (std::size_t i = 0; i < path.steps.size(); ++i) {
    seq.sides.push_back(path.steps[i] == Direction::kSouth ? RowSide::kTop
                                                           : RowSide::kBottom);
    seq.columns.push_back(path.labels[i]);
  }
  return seq;
}

}  // namespace dominion

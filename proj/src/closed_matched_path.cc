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

#include <algorithm>
#include <utility>

#include "dominion/matched_path.h"

namespace dominion {

GridLabeling Rotate(const GridLabeling& g) {
  GridLabeling r(g.m(), g.n(), g.alphabet());
  for (int i = 0; i <= g.m(); ++i) {
    for (int j = 0; j <= g.n(); ++j) {
      for (Direction d : {Direction::kSouth, Direction::kEast}) {
        if (!g.HasEdge({i, j}, d)) continue;
        const Vertex head = GridLabeling::Head({i, j}, d);
        r.SetLabels({g.m() - head.row, g.n() - head.col}, d,
                    g.Labels({i, j}, d));
      }
    }
  }
  return r;
}

namespace {

MatchedPathCertificate Unrotate(const GridLabeling& g,
                                const MatchedPathCertificate& path) {
  Vertex end = path.start;
  for (Direction d : path.steps) end = GridLabeling::Head(end, d);
  MatchedPathCertificate out;
  out.start = {g.m() - end.row, g.n() - end.col};
  out.steps.assign(path.steps.rbegin(), path.steps.rend());
  out.labels.assign(path.labels.rbegin(), path.labels.rend());
  return out;
}

// Matching of the steps of one direction along a fixed path. Under the
// preconditions every label's positions form a prefix.
std::optional<std::vector<int>> MatchDirection(
    const GridLabeling& g, const std::vector<Vertex>& tails, Direction dir) {
  std::vector<std::vector<int>> candidates(g.alphabet().size());
  for (std::size_t p = 0; p < tails.size(); ++p) {
    for (int l : g.Labels(tails[p], dir)) {
      candidates[l].push_back(static_cast<int>(p) + 1);
    }
  }
  return ConvexBipartiteMatching(static_cast<int>(tails.size()), candidates);
}

// Paths from (0, 0) only; valid when every label's edges form a down-set.
ClosedMpResult Anchored(const GridLabeling& g, int k) {
  ClosedMpResult result;
  for (int e = std::max(0, k - g.m()); e <= std::min(k, g.n()); ++e) {
    const int s = k - e;
    // reach[i][j]: some monotone path (0,0) -> (i,j) whose every edge
    // passes Hall's test for a nested family.
    std::vector<std::vector<char>> reach(s + 1, std::vector<char>(e + 1, 0));
    for (int i = 0; i <= s; ++i) {
      for (int j = 0; j <= e; ++j) {
        ++result.nodes;
        if (i == 0 && j == 0) {
          reach[i][j] = 1;
          continue;
        }
        if (i > 0 && reach[i - 1][j] &&
            static_cast<int>(g.Labels({i - 1, j}, Direction::kSouth).size()) >=
                s - (i - 1)) {
          reach[i][j] = 1;
        }
        if (j > 0 && reach[i][j - 1] &&
            static_cast<int>(g.Labels({i, j - 1}, Direction::kEast).size()) >=
                e - (j - 1)) {
          reach[i][j] = 1;
        }
      }
    }
    if (!reach[s][e]) continue;

    std::vector<Direction> steps;
    for (int i = s, j = e; i > 0 || j > 0;) {
      if (j > 0 && reach[i][j - 1] &&
          static_cast<int>(g.Labels({i, j - 1}, Direction::kEast).size()) >=
              e - (j - 1)) {
        steps.push_back(Direction::kEast);
        --j;
      } else {
        steps.push_back(Direction::kSouth);
        --i;
      }
    }
    std::reverse(steps.begin(), steps.end());

    std::vector<Vertex> east_tails, south_tails;
    Vertex v{0, 0};
    for (Direction d : steps) {
      (d == Direction::kEast ? east_tails : south_tails).push_back(v);
      v = GridLabeling::Head(v, d);
    }
    auto east = MatchDirection(g, east_tails, Direction::kEast);
    auto south = MatchDirection(g, south_tails, Direction::kSouth);
    if (!east || !south) throw Error("closed labeling violates nesting");

    MatchedPathCertificate cert;
    cert.start = {0, 0};
    cert.steps = steps;
    std::size_t ei = 0, si = 0;
    for (Direction d : steps) {
      cert.labels.push_back(d == Direction::kEast ? (*east)[ei++]
                                                  : (*south)[si++]);
    }
    result.verdict = Verdict::kYes;
    result.certificate = std::move(cert);
    return result;
  }
  result.verdict = Verdict::kNo;
  return result;
}

}  // namespace

ClosedMpResult SolveMpClosed(const GridLabeling& labeling, int length) {
  if (!IsDirectedConvex(labeling)) {
    throw Error("labeling is not directed convex");
  }
  const bool backward = IsBackwardClosed(labeling);
  if (!backward && !IsForwardClosed(labeling)) {
    throw Error("labeling is neither backward nor forward closed");
  }
  if (length < 0) throw Error("negative path length");
  if (length > labeling.m() + labeling.n()) return {};

  ClosedMpResult result;
  if (backward) {
    result = Anchored(labeling, length);
  } else {
    result = Anchored(Rotate(labeling), length);
    if (result.certificate) {
      result.certificate = Unrotate(labeling, *result.certificate);
    }
  }
  MpQuery query;
  query.length = length;
  if (result.certificate &&
      !VerifyMatchedPath(labeling, *result.certificate, query)) {
    throw Error("closed solver produced an invalid certificate");
  }
  return result;
}

}  // namespace dominion

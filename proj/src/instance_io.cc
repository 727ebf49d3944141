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

#include <set>
#include <string>
#include <vector>

#include "dominion/io.h"
#include "json_util.h"

namespace dominion {

using json_util::ArrayField;
using json_util::Field;
using json_util::IntField;
using json_util::IntOf;
using json_util::Json;
using json_util::OrderedJson;
using json_util::StringOf;

namespace {

Problem ProblemOf(const Json& doc) {
  try {
    return ParseProblem(StringOf(Field(doc, "problem"), "problem"));
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(e.what());
  }
}

int ColumnOf(const EliminationMatrix& matrix, const Json& value,
             const std::string& where) {
  const std::string name = StringOf(value, where);
  try {
    return matrix.ColumnIndex(name);
  } catch (const Error& e) {
    throw ParseError(where + ": " + e.what());
  }
}

int LabelOf(const GridLabeling& labeling, const Json& value,
            const std::string& where) {
  const std::string name = StringOf(value, where);
  try {
    return labeling.LabelIndex(name);
  } catch (const Error& e) {
    throw ParseError(where + ": " + e.what());
  }
}

}  // namespace

EliminationMatrix ReadMatrix(std::string_view text) {
  const Json doc = json_util::ParseDocument(text, kMatrixFormat);
  const int m = IntField(doc, "m");
  const int n = IntField(doc, "n");
  if (m < 1 || n < 1) throw ParseError("matrix needs m, n >= 1");
  const Json& rows = ArrayField(doc, "rows");
  if (rows.size() != static_cast<std::size_t>(m)) {
    throw ParseError("'rows' must have m entries");
  }
  std::vector<std::int64_t> entries;
  for (int i = 0; i < m; ++i) {
    const std::string where = "rows[" + std::to_string(i) + "]";
    if (!rows[i].is_array() || rows[i].size() != static_cast<std::size_t>(n)) {
      throw ParseError(where + " must have n entries");
    }
    for (const auto& v : rows[i]) {
      if (!v.is_number_integer() || v.get<std::int64_t>() < 0) {
        throw ParseError(where + " entries must be natural numbers");
      }
      entries.push_back(v.get<std::int64_t>());
    }
  }
  std::vector<std::string> names;
  if (doc.contains("columns")) {
    for (const auto& c : ArrayField(doc, "columns")) {
      names.push_back(StringOf(c, "column name"));
    }
  }
  try {
    return EliminationMatrix(m, n, std::move(entries), std::move(names));
  } catch (const Error& e) {
    throw ParseError(e.what());
  }
}

std::string WriteMatrix(const EliminationMatrix& matrix) {
  OrderedJson doc;
  doc["format"] = kMatrixFormat;
  doc["m"] = matrix.rows();
  doc["n"] = matrix.cols();
  bool default_names = true;
  for (int c = 0; c < matrix.cols(); ++c) {
    default_names &= matrix.column_name(c) == DefaultColumnName(c);
  }
  if (!default_names) doc["columns"] = matrix.column_names();
  OrderedJson rows = OrderedJson::array();
  for (int i = 0; i < matrix.rows(); ++i) {
    OrderedJson row = OrderedJson::array();
    for (int c = 0; c < matrix.cols(); ++c) row.push_back(matrix.at(i, c));
    rows.push_back(std::move(row));
  }
  doc["rows"] = std::move(rows);
  return json_util::Dump(doc);
}

GridLabeling ReadLabeling(std::string_view text) {
  const Json doc = json_util::ParseDocument(text, kLabelingFormat);
  const int m = IntField(doc, "m");
  const int n = IntField(doc, "n");
  if (m < 0 || n < 0) throw ParseError("grid needs m, n >= 0");
  std::vector<std::string> alphabet;
  std::set<std::string> seen;
  for (const auto& a : ArrayField(doc, "alphabet")) {
    alphabet.push_back(StringOf(a, "label name"));
    if (!seen.insert(alphabet.back()).second) {
      throw ParseError("duplicate label '" + alphabet.back() + "'");
    }
  }
  GridLabeling g(m, n, std::move(alphabet));
  auto read = [&](const char* field, Direction dir, int rows, int cols) {
    const Json& grid = ArrayField(doc, field);
    if (grid.size() != static_cast<std::size_t>(rows)) {
      throw ParseError(std::string("'") + field + "' must have " +
                       std::to_string(rows) + " rows");
    }
    for (int i = 0; i < rows; ++i) {
      const std::string where = std::string(field) + "[" + std::to_string(i) + "]";
      if (!grid[i].is_array() ||
          grid[i].size() != static_cast<std::size_t>(cols)) {
        throw ParseError(where + " must have " + std::to_string(cols) +
                         " entries");
      }
      for (int j = 0; j < cols; ++j) {
        const std::string cell = where + "[" + std::to_string(j) + "]";
        if (!grid[i][j].is_array()) {
          throw ParseError(cell + " must be a label list");
        }
        std::vector<int> labels;
        for (const auto& l : grid[i][j]) labels.push_back(LabelOf(g, l, cell));
        g.SetLabels({i, j}, dir, std::move(labels));
      }
    }
  };
  read("east", Direction::kEast, m + 1, n);
  read("south", Direction::kSouth, m, n + 1);
  return g;
}

std::string WriteLabeling(const GridLabeling& labeling) {
  OrderedJson doc;
  doc["format"] = kLabelingFormat;
  doc["m"] = labeling.m();
  doc["n"] = labeling.n();
  doc["alphabet"] = labeling.alphabet();
  auto write = [&](Direction dir, int rows, int cols) {
    OrderedJson grid = OrderedJson::array();
    for (int i = 0; i < rows; ++i) {
      OrderedJson row = OrderedJson::array();
      for (int j = 0; j < cols; ++j) {
        OrderedJson cell = OrderedJson::array();
        for (int l : labeling.Labels({i, j}, dir)) {
          cell.push_back(labeling.alphabet()[l]);
        }
        row.push_back(std::move(cell));
      }
      grid.push_back(std::move(row));
    }
    return grid;
  };
  doc["east"] = write(Direction::kEast, labeling.m() + 1, labeling.n());
  doc["south"] = write(Direction::kSouth, labeling.m(), labeling.n() + 1);
  return json_util::Dump(doc);
}

std::string WriteMatrixCertificate(const EliminationMatrix& matrix,
                                   const MatrixCertificate& cert) {
  OrderedJson doc;
  doc["format"] = kCertificateFormat;
  doc["problem"] = ProblemName(cert.problem);
  if (cert.column) doc["column"] = matrix.column_name(*cert.column);
  OrderedJson columns = OrderedJson::array();
  OrderedJson sides = OrderedJson::array();
  for (std::size_t i = 0; i < cert.sequence.size(); ++i) {
    columns.push_back(matrix.column_name(cert.sequence.columns[i]));
    sides.push_back(static_cast<int>(cert.sequence.sides[i]));
  }
  doc["columns"] = std::move(columns);
  doc["sides"] = std::move(sides);
  return json_util::Dump(doc);
}

MatrixCertificate ReadMatrixCertificate(const EliminationMatrix& matrix,
                                        std::string_view text) {
  const Json doc = json_util::ParseDocument(text, kCertificateFormat);
  MatrixCertificate cert;
  cert.problem = ProblemOf(doc);
  if (cert.problem != Problem::kMe && cert.problem != Problem::kCe) {
    throw ParseError("certificate is not for a matrix problem");
  }
  if (cert.problem == Problem::kCe) {
    cert.column = ColumnOf(matrix, Field(doc, "column"), "column");
  }
  const Json& columns = ArrayField(doc, "columns");
  const Json& sides = ArrayField(doc, "sides");
  if (columns.size() != sides.size()) {
    throw ParseError("'columns' and 'sides' differ in length");
  }
  for (std::size_t i = 0; i < columns.size(); ++i) {
    cert.sequence.columns.push_back(ColumnOf(matrix, columns[i], "columns"));
    const int side = IntOf(sides[i], "sides");
    if (side != 0 && side != 1) throw ParseError("sides must be 0 or 1");
    cert.sequence.sides.push_back(side == 0 ? RowSide::kTop : RowSide::kBottom);
  }
  return cert;
}

std::string WritePathCertificate(const GridLabeling& labeling,
                                 const MatchedPathCertificate& cert) {
  OrderedJson doc;
  doc["format"] = kCertificateFormat;
  doc["problem"] = ProblemName(Problem::kMp);
  doc["start"] = {cert.start.row, cert.start.col};
  std::string steps;
  for (Direction d : cert.steps) steps += d == Direction::kEast ? 'E' : 'S';
  doc["steps"] = steps;
  OrderedJson labels = OrderedJson::array();
  for (int l : cert.labels) labels.push_back(labeling.alphabet().at(l));
  doc["labels"] = std::move(labels);
  return json_util::Dump(doc);
}

MatchedPathCertificate ReadPathCertificate(const GridLabeling& labeling,
                                           std::string_view text) {
  const Json doc = json_util::ParseDocument(text, kCertificateFormat);
  if (ProblemOf(doc) != Problem::kMp) {
    throw ParseError("certificate is not for a matched-path problem");
  }
  MatchedPathCertificate cert;
  const Json& start = ArrayField(doc, "start");
  if (start.size() != 2) throw ParseError("'start' must be [row, col]");
  cert.start = {IntOf(start[0], "start"), IntOf(start[1], "start")};
  for (char c : StringOf(Field(doc, "steps"), "steps")) {
    if (c == 'E') {
      cert.steps.push_back(Direction::kEast);
    } else if (c == 'S') {
      cert.steps.push_back(Direction::kSouth);
    } else {
      throw ParseError("'steps' may only contain E and S");
    }
  }
  for (const auto& l : ArrayField(doc, "labels")) {
    cert.labels.push_back(LabelOf(labeling, l, "labels"));
  }
  if (cert.labels.size() != cert.steps.size()) {
    throw ParseError("one label per step is required");
  }
  return cert;
}

}  // namespace dominion

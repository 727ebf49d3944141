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

#include "json_util.h"

#include <algorithm>
#include <fstream>
#include <limits>
#include <sstream>

namespace dominion {

ParseError::ParseError(const std::string& what, int line, int column)
    : Error(line > 0 ? std::to_string(line) + ":" + std::to_string(column) +
                           ": " + what
                     : what),
      line_(line), column_(column) {}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void WriteFile(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  out << contents;
}

namespace json_util {

Json Parse(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    // e.byte is 1-based and points just past the offending character.
    const std::size_t end = std::min<std::size_t>(
        e.byte == 0 ? 0 : e.byte - 1, text.size());
    int line = 1;
    int column = 1;
    for (std::size_t i = 0; i < end; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    std::string what = e.what();
    if (auto p = what.find("syntax error"); p != std::string::npos) {
      what = what.substr(p);
    }
    throw ParseError(what, line, column);
  }
}

Json ParseDocument(std::string_view text, std::string_view format) {
  Json doc = Parse(text);
  if (!doc.is_object()) throw ParseError("document must be a JSON object");
  const std::string found = StringOf(Field(doc, "format"), "format");
  if (found != format) {
    throw ParseError("format version mismatch: expected " +
                     std::string(format) + ", found " + found);
  }
  return doc;
}

const Json& Field(const Json& object, const char* name) {
  auto it = object.find(name);
  if (it == object.end()) {
    throw ParseError(std::string("missing field '") + name + "'");
  }
  return *it;
}

int IntField(const Json& object, const char* name) {
  return IntOf(Field(object, name), name);
}

const Json& ArrayField(const Json& object, const char* name) {
  const Json& v = Field(object, name);
  if (!v.is_array()) {
    throw ParseError(std::string("field '") + name + "' must be an array");
  }
  return v;
}

std::string StringOf(const Json& value, const std::string& where) {
  if (!value.is_string()) throw ParseError(where + " must be a string");
  return value.get<std::string>();
}

int IntOf(const Json& value, const std::string& where) {
  if (!value.is_number_integer()) {
    throw ParseError(where + " must be an integer");
  }
  const auto v = value.get<std::int64_t>();
  if (v < std::numeric_limits<int>::min() ||
      v > std::numeric_limits<int>::max()) {
    throw ParseError(where + " is out of range");
  }
  return static_cast<int>(v);
}

Rational RationalOf(const Json& value, const std::string& where) {
  try {
    if (value.is_number_integer()) {
      return ParseRational(value.dump());
    }
    if (value.is_string()) return ParseRational(value.get<std::string>());
  } catch (const Error& e) {
    throw ParseError(where + ": " + e.what());
  }
  throw ParseError(where + " must be an integer or a \"p/q\" string");
}

OrderedJson RationalJson(const Rational& value) {
  if (value.get_den() == 1 && value.get_num().fits_slong_p()) {
    return static_cast<std::int64_t>(value.get_num().get_si());
  }
  return FormatRational(value);
}

namespace {

bool IsScalar(const OrderedJson& v) {
  return !v.is_array() && !v.is_object();
}

void DumpTo(const OrderedJson& v, int indent, std::string& out) {
  const std::string pad(indent, ' ');
  const std::string inner(indent + 2, ' ');
  if (v.is_object()) {
    if (v.empty()) {
      out += "{}";
      return;
    }
    out += "{\n";
    bool first = true;
    for (auto it = v.begin(); it != v.end(); ++it) {
      if (!first) out += ",\n";
      first = false;
      out += inner + OrderedJson(it.key()).dump() + ": ";
      DumpTo(it.value(), indent + 2, out);
    }
    out += "\n" + pad + "}";
  } else if (v.is_array()) {
    if (std::all_of(v.begin(), v.end(), IsScalar)) {
      out += "[";
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (i > 0) out += ", ";
        out += v[i].dump();
      }
      out += "]";
      return;
    }
    out += "[\n";
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i > 0) out += ",\n";
      out += inner;
      DumpTo(v[i], indent + 2, out);
    }
    out += "\n" + pad + "]";
  } else {
    out += v.dump();
  }
}

}  // namespace

std::string Dump(const OrderedJson& document) {
  std::string out;
  DumpTo(document, 0, out);
  out += "\n";
  return out;
}

}  // namespace json_util

std::string_view ProblemName(Problem problem) {
  switch (problem) {
    case Problem::kIds: return "IDS";
    case Problem::kIde: return "IDE";
    case Problem::kMe: return "ME";
    case Problem::kCe: return "CE";
    case Problem::kMp: return "MP";
  }
  return "?";
}

Problem ParseProblem(std::string_view name) {
  for (Problem p : {Problem::kIds, Problem::kIde, Problem::kMe, Problem::kCe,
                    Problem::kMp}) {
    if (ProblemName(p) == name) return p;
  }
  throw Error("unknown problem '" + std::string(name) + "'");
}

std::string PeekFormat(std::string_view text) {
  json_util::Json doc = json_util::Parse(text);
  if (!doc.is_object()) throw ParseError("document must be a JSON object");
  return json_util::StringOf(json_util::Field(doc, "format"), "format");
}

}  // namespace dominion

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

#ifndef DOMINION_SRC_JSON_UTIL_H_
#define DOMINION_SRC_JSON_UTIL_H_

#include <string>
#include <string_view>

#include "dominion/io.h"
#include "json.hpp"

namespace dominion::json_util {

using Json = nlohmann::json;
using OrderedJson = nlohmann::ordered_json;

// Parses `text`; syntax errors become ParseError with line and column.
Json Parse(std::string_view text);
// Parses and checks the format field.
Json ParseDocument(std::string_view text, std::string_view format);

const Json& Field(const Json& object, const char* name);
int IntField(const Json& object, const char* name);
const Json& ArrayField(const Json& object, const char* name);
std::string StringOf(const Json& value, const std::string& where);
int IntOf(const Json& value, const std::string& where);

Rational RationalOf(const Json& value, const std::string& where);
// Integral values become JSON integers when they fit, others "p/q".
OrderedJson RationalJson(const Rational& value);

// Serialization used by every writer: two-space indentation, with arrays of
// scalars kept on one line.
std::string Dump(const OrderedJson& document);

}  // namespace dominion::json_util

#endif  // DOMINION_SRC_JSON_UTIL_H_

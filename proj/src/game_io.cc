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

std::vector<Rational> RationalArray(const Json& value, std::size_t expected,
                                    const std::string& where) {
  if (!value.is_array()) throw ParseError(where + " must be an array");
  if (value.size() != expected) {
    throw ParseError(where + " has " + std::to_string(value.size()) +
                     " entries, expected " + std::to_string(expected));
  }
  std::vector<Rational> out;
  out.reserve(expected);
  for (std::size_t i = 0; i < value.size(); ++i) {
    out.push_back(json_util::RationalOf(
        value[i], where + "[" + std::to_string(i) + "]"));
  }
  return out;
}

PayoffTable FullImageTable(const Json& value, int n, int k,
                           const std::string& where) {
  return PayoffTable::FullImage(n, k,
                                RationalArray(value, NumImages(n, k), where));
}

PayoffTable OwnActionTable(const Json& value, int n,
                           const std::vector<std::string>& names,
                           const std::string& where) {
  if (!value.is_object()) {
    throw ParseError(where + " must map action names to arrays");
  }
  const int k = static_cast<int>(names.size());
  if (value.size() != names.size()) {
    throw ParseError(where + " must have one entry per action");
  }
  std::vector<std::vector<Rational>> by_action;
  for (const auto& name : names) {
    auto it = value.find(name);
    if (it == value.end()) {
      throw ParseError(where + " lacks action '" + name + "'");
    }
    by_action.push_back(
        RationalArray(*it, NumImages(n - 1, k), where + "." + name));
  }
  return PayoffTable::OwnAction(n, k, std::move(by_action));
}

OrderedJson TableJson(const PayoffTable& table,
                      const std::vector<std::string>& names) {
  const auto& values = table.values();
  if (table.kind() == PayoffTable::Kind::kFullImage) {
    OrderedJson arr = OrderedJson::array();
    for (const auto& v : values) arr.push_back(json_util::RationalJson(v));
    return arr;
  }
  const std::size_t per = values.size() / names.size();
  OrderedJson obj = OrderedJson::object();
  for (std::size_t a = 0; a < names.size(); ++a) {
    OrderedJson arr = OrderedJson::array();
    for (std::size_t i = 0; i < per; ++i) {
      arr.push_back(json_util::RationalJson(values[a * per + i]));
    }
    obj[names[a]] = std::move(arr);
  }
  return obj;
}

int ActionOf(const AnonymousGame& game, const Json& value,
             const std::string& where) {
  try {
    return game.ActionIndex(StringOf(value, where));
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(where + ": " + e.what());
  }
}

int PlayerOf(const AnonymousGame& game, const Json& value,
             const std::string& where) {
  const int p = IntOf(value, where);
  if (p < 0 || p >= game.num_players()) {
    throw ParseError(where + " is not a player");
  }
  return p;
}

}  // namespace

AnonymousGame ReadGame(std::string_view text) {
  const Json doc = json_util::ParseDocument(text, kGameFormat);
  const int n = IntField(doc, "players");
  if (n < 1) throw ParseError("'players' must be positive");
  std::vector<std::string> names;
  std::set<std::string> seen;
  for (const auto& a : ArrayField(doc, "actions")) {
    names.push_back(StringOf(a, "action name"));
    if (!seen.insert(names.back()).second) {
      throw ParseError("duplicate action name '" + names.back() + "'");
    }
  }
  const int k = static_cast<int>(names.size());
  if (k < 1 || k > kMaxActions) {
    throw ParseError("between 1 and " + std::to_string(kMaxActions) +
                     " actions are required");
  }
  AnonymityClass tag;
  try {
    tag = ParseClassName(StringOf(Field(doc, "class"), "class"));
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(e.what());
  }
  const Json& payoffs = Field(doc, "payoffs");
  std::vector<PayoffTable> tables;
  try {
    switch (tag) {
      case AnonymityClass::kSelfSymmetric:
        tables.assign(n, FullImageTable(payoffs, n, k, "payoffs"));
        break;
      case AnonymityClass::kSymmetric:
        tables.assign(n, OwnActionTable(payoffs, n, names, "payoffs"));
        break;
      case AnonymityClass::kSelfAnonymous:
      case AnonymityClass::kAnonymous: {
        if (!payoffs.is_array() || payoffs.size() != static_cast<size_t>(n)) {
          throw ParseError("'payoffs' must hold one table per player");
        }
        for (int p = 0; p < n; ++p) {
          const std::string where = "payoffs[" + std::to_string(p) + "]";
          tables.push_back(tag == AnonymityClass::kSelfAnonymous
                               ? FullImageTable(payoffs[p], n, k, where)
                               : OwnActionTable(payoffs[p], n, names, where));
        }
        break;
      }
    }
    return AnonymousGame(n, std::move(names), tag, std::move(tables));
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(e.what());
  }
}

std::string WriteGame(const AnonymousGame& game) {
  OrderedJson doc;
  doc["format"] = kGameFormat;
  doc["players"] = game.num_players();
  doc["actions"] = game.action_names();
  doc["class"] = ClassName(game.tag());
  const bool shared = game.tag() == AnonymityClass::kSymmetric ||
                      game.tag() == AnonymityClass::kSelfSymmetric;
  if (shared) {
    doc["payoffs"] = TableJson(game.table(0), game.action_names());
  } else {
    OrderedJson all = OrderedJson::array();
    for (int p = 0; p < game.num_players(); ++p) {
      all.push_back(TableJson(game.table(p), game.action_names()));
    }
    doc["payoffs"] = std::move(all);
  }
  return json_util::Dump(doc);
}

std::string WriteEliminationCertificate(const AnonymousGame& game,
                                        const EliminationCertificate& cert) {
  const auto& names = game.action_names();
  OrderedJson doc;
  doc["format"] = kCertificateFormat;
  doc["problem"] = ProblemName(cert.problem);
  if (cert.target) {
    doc["target"] = {{"player", cert.target->player},
                     {"action", names.at(cert.target->action)}};
  }
  OrderedJson batches = OrderedJson::array();
  for (const auto& batch : cert.sequence.batches) {
    OrderedJson b = OrderedJson::array();
    for (const auto& e : batch) {
      OrderedJson item;
      item["player"] = e.player;
      item["action"] = names.at(e.action);
      if (e.witness) {
        OrderedJson dominator = OrderedJson::array();
        for (const auto& [a, w] : e.witness->dominator.weights) {
          dominator.push_back({names.at(a), FormatRational(w)});
        }
        item["dominator"] = std::move(dominator);
        item["strict_at"] = e.witness->strict_at.counts;
      }
      b.push_back(std::move(item));
    }
    batches.push_back(std::move(b));
  }
  doc["batches"] = std::move(batches);
  return json_util::Dump(doc);
}

EliminationCertificate ReadEliminationCertificate(const AnonymousGame& game,
                                                  std::string_view text) {
  const Json doc = json_util::ParseDocument(text, kCertificateFormat);
  EliminationCertificate cert;
  try {
    cert.problem = ParseProblem(StringOf(Field(doc, "problem"), "problem"));
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(e.what());
  }
  if (cert.problem != Problem::kIds && cert.problem != Problem::kIde) {
    throw ParseError("certificate is not for a game problem");
  }
  if (cert.problem == Problem::kIde) {
    const Json& t = Field(doc, "target");
    cert.target = EliminationTarget{PlayerOf(game, Field(t, "player"), "target.player"),
                                    ActionOf(game, Field(t, "action"), "target.action")};
  }
  const Json& batches = ArrayField(doc, "batches");
  for (std::size_t bi = 0; bi < batches.size(); ++bi) {
    if (!batches[bi].is_array()) throw ParseError("each batch must be an array");
    std::vector<Elimination> batch;
    for (std::size_t ei = 0; ei < batches[bi].size(); ++ei) {
      const Json& item = batches[bi][ei];
      const std::string where =
          "batches[" + std::to_string(bi) + "][" + std::to_string(ei) + "]";
      Elimination e;
      e.player = PlayerOf(game, Field(item, "player"), where + ".player");
      e.action = ActionOf(game, Field(item, "action"), where + ".action");
      if (item.contains("dominator")) {
        DominanceWitness w;
        w.player = e.player;
        w.dominated = e.action;
        const Json& dom = ArrayField(item, "dominator");
        for (const auto& pair : dom) {
          if (!pair.is_array() || pair.size() != 2) {
            throw ParseError(where + ".dominator entries are [action, weight]");
          }
          w.dominator.weights.emplace_back(
              ActionOf(game, pair[0], where + ".dominator"),
              json_util::RationalOf(pair[1], where + ".dominator"));
        }
        std::sort(w.dominator.weights.begin(), w.dominator.weights.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        for (const auto& c : ArrayField(item, "strict_at")) {
          w.strict_at.counts.push_back(IntOf(c, where + ".strict_at"));
        }
        e.witness = std::move(w);
      }
      batch.push_back(std::move(e));
    }
    cert.sequence.batches.push_back(std::move(batch));
  }
  return cert;
}

}  // namespace dominion

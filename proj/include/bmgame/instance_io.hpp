// Copyright 2026 The bmgame Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Text formats for instances, payoff vectors and coalitions.
//
//   instance:  {"u_side": [ids], "v_side": [ids], "capacities": {id: int},
//               "edges": [{"u": id, "v": id, "w": int | "num/den"}],
//               "provenance": {...}   (optional)}
//   payoff:    {id: int | "num/den", ...}
//   coalition: [ids]

#ifndef BMGAME_INSTANCE_IO_HPP
#define BMGAME_INSTANCE_IO_HPP

#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "bmgame/instance.hpp"
#include "bmgame/json_io.hpp"

namespace bmgame {

namespace detail {

[[noreturn]] inline void parse_fail(const std::string& where, const std::string& what) {
  throw Error(ErrorKind::kParse, where + ": " + what);
}

inline const Json& require_field(const Json& obj, const char* key, const std::string& where) {
  if (!obj.contains(key)) parse_fail(where, std::string("missing field \"") + key + "\"");
  return obj.at(key);
}

inline void reject_unknown_fields(const Json& obj, std::initializer_list<std::string_view> known,
                                  const std::string& where) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    if (std::find(known.begin(), known.end(), it.key()) == known.end()) {
      parse_fail(where, "unexpected field \"" + it.key() + "\"");
    }
  }
}

inline std::vector<std::string> id_array(const Json& j, const std::string& where) {
  if (!j.is_array()) parse_fail(where, "expected an array of vertex ids");
  std::vector<std::string> ids;
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_string()) {
      parse_fail(where + "[" + std::to_string(i) + "]", "vertex id must be a string");
    }
    ids.push_back(j[i].get<std::string>());
  }
  return ids;
}

inline Rational rational_field(const Json& j, const std::string& where) {
  auto r = json_to_rational(j);
  if (!r) parse_fail(where, "expected an integer or a \"num/den\" string");
  return *r;
}

inline Capacity capacity_value(const Json& j, const std::string& where) {
  auto n = json_to_bigint(j);
  if (!n) parse_fail(where, "capacity must be an integer");
  if (*n < 0) {
    throw Error(ErrorKind::kInvalid, where + ": negative capacity");
  }
  if (!fits_int64(*n)) parse_fail(where, "capacity out of range");
  return static_cast<Capacity>(*n);
}

// Re-raises invariant violations from the constructor with a document prefix.
template <class F>
auto with_location(const std::string& where, F&& f) {
  try {
    return f();
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::kParse) throw;
    const std::string msg = e.what();
    const auto colon = msg.find(": ");
    throw Error(e.kind(), where + "." + msg.substr(colon == std::string::npos ? 0 : colon + 2));
  }
}

}  // namespace detail

inline GameInstance instance_from_json(const Json& doc, const std::string& where = "instance") {
  using detail::parse_fail;
  if (!doc.is_object()) parse_fail(where, "expected an object");
  detail::reject_unknown_fields(doc, {"u_side", "v_side", "capacities", "edges", "provenance"},
                                where);
  auto u_side = detail::id_array(detail::require_field(doc, "u_side", where), where + ".u_side");
  auto v_side = detail::id_array(detail::require_field(doc, "v_side", where), where + ".v_side");

  const Json& caps_json = detail::require_field(doc, "capacities", where);
  if (!caps_json.is_object()) parse_fail(where + ".capacities", "expected an object");
  std::map<std::string, Capacity, std::less<>> caps;
  for (auto it = caps_json.begin(); it != caps_json.end(); ++it) {
    caps.emplace(it.key(),
                 detail::capacity_value(it.value(), where + ".capacities[\"" + it.key() + "\"]"));
  }

  const Json& edges_json = detail::require_field(doc, "edges", where);
  if (!edges_json.is_array()) parse_fail(where + ".edges", "expected an array");
  std::vector<EdgeSpec> edges;
  for (std::size_t k = 0; k < edges_json.size(); ++k) {
    const std::string at = where + ".edges[" + std::to_string(k) + "]";
    const Json& e = edges_json[k];
    if (!e.is_object()) parse_fail(at, "expected an object {u, v, w}");
    detail::reject_unknown_fields(e, {"u", "v", "w"}, at);
    const Json& u = detail::require_field(e, "u", at);
    const Json& v = detail::require_field(e, "v", at);
    if (!u.is_string() || !v.is_string()) parse_fail(at, "endpoints must be vertex id strings");
    edges.push_back({u.get<std::string>(), v.get<std::string>(),
                     detail::rational_field(detail::require_field(e, "w", at), at + ".w")});
  }

  Json provenance = doc.contains("provenance") ? doc.at("provenance") : Json(nullptr);
  return detail::with_location(where, [&] {
    return GameInstance(std::move(u_side), std::move(v_side), caps, edges,
                        std::move(provenance));
  });
}

inline Json instance_to_json(const GameInstance& g) {
  Json doc = Json::object();
  doc["u_side"] = g.u_side();
  doc["v_side"] = g.v_side();
  Json caps = Json::object();
  for (AgentIndex i = 0; i < g.agent_count(); ++i) caps[g.id(i)] = g.capacity(i);
  doc["capacities"] = std::move(caps);
  Json edges = Json::array();
  for (const auto& e : g.edges()) {
    Json rec = Json::object();
    rec["u"] = g.id(e.u);
    rec["v"] = g.id(e.v);
    rec["w"] = rational_to_json(e.w);
    edges.push_back(std::move(rec));
  }
  doc["edges"] = std::move(edges);
  if (!g.provenance().is_null()) doc["provenance"] = g.provenance();
  return doc;
}

inline GameInstance parse_instance(std::string_view text) {
  return instance_from_json(parse_json(text));
}

inline std::string serialize_instance(const GameInstance& g) {
  return write_json(instance_to_json(g));
}

inline PayoffVector payoff_from_json(const Json& doc, const std::string& where = "payoff") {
  if (!doc.is_object()) detail::parse_fail(where, "expected an object mapping ids to payoffs");
  PayoffVector p;
  for (auto it = doc.begin(); it != doc.end(); ++it) {
    const std::string at = where + "[\"" + it.key() + "\"]";
    Rational v = detail::rational_field(it.value(), at);
    if (v < 0) throw Error(ErrorKind::kInvalid, at + ": negative payoff");
    p.set(it.key(), std::move(v));
  }
  return p;
}

inline PayoffVector parse_payoff(std::string_view text) {
  return payoff_from_json(parse_json(text));
}

/// Entries in agent order of g when given, else in insertion order.
inline Json payoff_to_json(const PayoffVector& p, const GameInstance* g = nullptr) {
  Json doc = Json::object();
  if (g != nullptr) {
    for (const auto& id : g->agents()) {
      if (p.contains(id)) doc[id] = rational_to_json(p.at(id));
    }
  }
  for (const auto& [id, v] : p.entries()) {
    if (!doc.contains(id)) doc[id] = rational_to_json(v);
  }
  return doc;
}

inline std::string serialize_payoff(const PayoffVector& p, const GameInstance* g = nullptr) {
  return write_json(payoff_to_json(p, g));
}

inline Coalition parse_coalition(std::string_view text) {
  return Coalition(detail::id_array(parse_json(text), "coalition"));
}

inline std::string serialize_coalition(const Coalition& s) {
  return write_json(Json(s.members()));
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::kParse, "cannot open \"" + path + "\"");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::kInvalid, "cannot write \"" + path + "\"");
  out << text;
}

}  // namespace bmgame

#endif  // BMGAME_INSTANCE_IO_HPP

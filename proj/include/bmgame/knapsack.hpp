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

// 0-1 knapsack decision problem: is there an item set with total weight at
// most C and total value strictly greater than A?
//
// File format: {"items": [{"c": weight, "a": value}, ...], "C": int, "A": int}

#ifndef BMGAME_KNAPSACK_HPP
#define BMGAME_KNAPSACK_HPP

#include <algorithm>
#include <string>
#include <string_view>
#include <vector>

#include "bmgame/instance_io.hpp"
#include "bmgame/json_io.hpp"
#include "bmgame/rational.hpp"

namespace bmgame {

struct KnapsackItem {
  BigInt weight;  // c_i >= 1
  BigInt value;   // a_i >= 0

  friend bool operator==(const KnapsackItem&, const KnapsackItem&) = default;
};

struct KnapsackInstance {
  std::vector<KnapsackItem> items;
  BigInt capacity = 0;  // C
  BigInt goal = 0;      // A

  friend bool operator==(const KnapsackInstance&, const KnapsackInstance&) = default;
};

inline void validate(const KnapsackInstance& k) {
  for (std::size_t i = 0; i < k.items.size(); ++i) {
    const std::string at = "items[" + std::to_string(i) + "]";
    if (k.items[i].weight < 1) throw Error(ErrorKind::kInvalid, at + ".c: weight must be >= 1");
    if (k.items[i].value < 0) throw Error(ErrorKind::kInvalid, at + ".a: value must be >= 0");
  }
  if (k.capacity < 0) throw Error(ErrorKind::kInvalid, "C: capacity must be >= 0");
  if (k.goal < 0) throw Error(ErrorKind::kInvalid, "A: goal must be >= 0");
}

struct KnapsackResult {
  BigInt best_value = 0;
  bool yes = false;                 // best_value > A
  std::vector<std::size_t> witness; // item indices achieving best_value
};

inline constexpr std::size_t kKnapsackBudget = 10'000'000;

/// Capacity-indexed dynamic program.
inline KnapsackResult solve_knapsack(const KnapsackInstance& k,
                                     std::size_t budget = kKnapsackBudget) {
  validate(k);
  const std::size_t n = k.items.size();
  // Items heavier than C can never be packed; only the remaining capacity
  // range matters for the budget.
  BigInt useful_cap = 0;
  for (const auto& item : k.items) {
    if (item.weight <= k.capacity) useful_cap += item.weight;
  }
  useful_cap = std::min(useful_cap, k.capacity);
  if (BigInt(n) * (useful_cap + 1) > budget) {
    throw Error(ErrorKind::kGuard, "knapsack DP needs n*(C+1) = " +
                                       (BigInt(n) * (useful_cap + 1)).str() +
                                       " cells; budget " + std::to_string(budget));
  }
  const auto cap = static_cast<std::size_t>(useful_cap);
  std::vector<BigInt> best(cap + 1, 0);
  std::vector<std::vector<bool>> take(n, std::vector<bool>(cap + 1, false));
  for (std::size_t i = 0; i < n; ++i) {
    if (k.items[i].weight > useful_cap) continue;
    const auto c = static_cast<std::size_t>(k.items[i].weight);
    for (std::size_t r = cap; r >= c; --r) {
      BigInt with = best[r - c] + k.items[i].value;
      if (with > best[r]) {
        best[r] = std::move(with);
        take[i][r] = true;
      }
      if (r == c) break;
    }
  }
  KnapsackResult result;
  result.best_value = best[cap];
  result.yes = result.best_value > k.goal;
  std::size_t r = cap;
  for (std::size_t i = n; i-- > 0;) {
    if (take[i][r]) {
      result.witness.push_back(i);
      r -= static_cast<std::size_t>(k.items[i].weight);
    }
  }
  std::reverse(result.witness.begin(), result.witness.end());
  return result;
}

inline KnapsackInstance knapsack_from_json(const Json& doc, const std::string& where = "knapsack") {
  using detail::parse_fail;
  if (!doc.is_object()) parse_fail(where, "expected an object");
  detail::reject_unknown_fields(doc, {"items", "C", "A"}, where);
  const auto integer = [&](const Json& j, const std::string& at) {
    auto v = json_to_bigint(j);
    if (!v) parse_fail(at, "expected an integer");
    return *v;
  };
  KnapsackInstance k;
  const Json& items = detail::require_field(doc, "items", where);
  if (!items.is_array()) parse_fail(where + ".items", "expected an array");
  for (std::size_t i = 0; i < items.size(); ++i) {
    const std::string at = where + ".items[" + std::to_string(i) + "]";
    if (!items[i].is_object()) parse_fail(at, "expected an object {c, a}");
    detail::reject_unknown_fields(items[i], {"c", "a"}, at);
    k.items.push_back({integer(detail::require_field(items[i], "c", at), at + ".c"),
                       integer(detail::require_field(items[i], "a", at), at + ".a")});
  }
  k.capacity = integer(detail::require_field(doc, "C", where), where + ".C");
  k.goal = integer(detail::require_field(doc, "A", where), where + ".A");
  detail::with_location(where, [&] {
    validate(k);
    return 0;
  });
  return k;
}

inline Json knapsack_to_json(const KnapsackInstance& k) {
  Json doc = Json::object();
  Json items = Json::array();
  for (const auto& item : k.items) {
    Json rec = Json::object();
    rec["c"] = bigint_to_json(item.weight);
    rec["a"] = bigint_to_json(item.value);
    items.push_back(std::move(rec));
  }
  doc["items"] = std::move(items);
  doc["C"] = bigint_to_json(k.capacity);
  doc["A"] = bigint_to_json(k.goal);
  return doc;
}

inline KnapsackInstance parse_knapsack(std::string_view text) {
  return knapsack_from_json(parse_json(text));
}

inline std::string serialize_knapsack(const KnapsackInstance& k) {
  return write_json(knapsack_to_json(k));
}

}  // namespace bmgame

#endif  // BMGAME_KNAPSACK_HPP

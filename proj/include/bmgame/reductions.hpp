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

// Hardness gadgets and their exact verifiers.
//
//  * knapsack_to_star: knapsack item i becomes leaf v_i with b = c_i,
//    w = a_i + 1, p = c_i(a_i + 1) - a_i; the center u gets b = C, p = A.
//  * star_to_bipartite_gadget: adds x (center's side, joined to every leaf)
//    and y (leaf side, joined to the center) so that the extended payoff
//    vector becomes an imputation.
//  * partner_duplication: gives every agent a partner on the opposite side
//    and pays everyone the same amount p*.
//
// Generated instances carry a "provenance" object naming the construction
// and the roles of the added vertices; the verifiers read it back.

#ifndef BMGAME_REDUCTIONS_HPP
#define BMGAME_REDUCTIONS_HPP

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "bmgame/game.hpp"
#include "bmgame/instance.hpp"
#include "bmgame/instance_io.hpp"
#include "bmgame/knapsack.hpp"

namespace bmgame {

struct ReductionCheck {
  std::string name;
  Rational expected;
  Rational actual;
  bool pass = false;
};

struct ReductionReport {
  std::string name;
  std::vector<ReductionCheck> checks;

  void add(std::string check_name, Rational expected, Rational actual) {
    const bool pass = expected == actual;
    checks.push_back({std::move(check_name), std::move(expected), std::move(actual), pass});
  }

  [[nodiscard]] bool passed() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const ReductionCheck& c) { return c.pass; });
  }

  [[nodiscard]] const ReductionCheck* find(std::string_view check_name) const {
    for (const auto& c : checks) {
      if (c.name == check_name) return &c;
    }
    return nullptr;
  }
};

inline Json report_to_json(const ReductionReport& r) {
  Json doc = Json::object();
  doc["report"] = r.name;
  doc["passed"] = r.passed();
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json rec = Json::object();
    rec["name"] = c.name;
    rec["expected"] = rational_to_json(c.expected);
    rec["actual"] = rational_to_json(c.actual);
    rec["pass"] = c.pass;
    checks.push_back(std::move(rec));
  }
  doc["checks"] = std::move(checks);
  return doc;
}

inline std::string serialize_report(const ReductionReport& r) {
  return write_json(report_to_json(r));
}

struct GameWithPayoff {
  GameInstance game;
  PayoffVector payoff;
};

namespace detail {

inline std::string fresh_id(const std::vector<std::string>& taken, std::string id) {
  while (std::find(taken.begin(), taken.end(), id) != taken.end()) id += "'";
  return id;
}

inline const Json& provenance_for(const GameInstance& g, std::string_view reduction) {
  const Json& prov = g.provenance();
  if (!prov.is_object() || !prov.contains("reduction") ||
      prov.at("reduction") != std::string(reduction)) {
    throw Error(ErrorKind::kPrecondition,
                "instance lacks a \"" + std::string(reduction) + "\" provenance block");
  }
  return prov;
}

inline std::string provenance_id(const Json& prov, const char* key) {
  if (!prov.contains(key) || !prov.at(key).is_string()) {
    throw Error(ErrorKind::kPrecondition, std::string("provenance lacks \"") + key + "\"");
  }
  return prov.at(key).get<std::string>();
}

inline Rational sum_over(const std::vector<Rational>& values, CoalitionMask mask) {
  Rational total = 0;
  for (CoalitionMask rest = mask; rest != 0; rest &= rest - 1) {
    total += values[static_cast<std::size_t>(__builtin_ctzll(rest))];
  }
  return total;
}

inline Rational edge_weight_between(const GameInstance& g, AgentIndex a, AgentIndex b) {
  if (auto k = g.edge_between(a, b)) return g.edges()[*k].w;
  return 0;
}

}  // namespace detail

/// Star instance and profit share encoding a knapsack instance. The profit
/// share is generally not an imputation.
inline GameWithPayoff knapsack_to_star(const KnapsackInstance& k) {
  validate(k);
  if (!fits_int64(k.capacity)) throw Error(ErrorKind::kPrecondition, "C out of range");
  std::vector<std::string> leaves;
  std::map<std::string, Capacity, std::less<>> caps{{"u", static_cast<Capacity>(k.capacity)}};
  std::vector<EdgeSpec> edges;
  PayoffVector p;
  p.set("u", Rational(k.goal));
  for (std::size_t i = 0; i < k.items.size(); ++i) {
    const auto& item = k.items[i];
    if (!fits_int64(item.weight)) {
      throw Error(ErrorKind::kPrecondition, "item weight out of range");
    }
    std::string id = "v" + std::to_string(i + 1);
    caps.emplace(id, static_cast<Capacity>(item.weight));
    edges.push_back({"u", id, Rational(item.value + 1)});
    p.set(id, Rational(item.weight * (item.value + 1) - item.value));
    leaves.push_back(std::move(id));
  }
  Json prov = Json::object();
  prov["reduction"] = "knapsack-to-star";
  prov["center"] = "u";
  prov["leaves"] = leaves;
  prov["knapsack"] = knapsack_to_json(k);
  GameInstance g({"u"}, leaves, caps, edges, std::move(prov));
  return {std::move(g), std::move(p)};
}

/// Checks the two lemmas behind the knapsack reduction on every coalition:
///  - if every leaf of S is fully matched in the solver's matching of S,
///    nu(S) - p(S) = sum_{i in S} a_i - A;
///  - if leaf v is not fully matched, dropping v raises nu - p by >= 1.
/// Also checks max_S (nu(S) - p(S)) = max(0, best knapsack value - A).
/// a_i and A are read off the star (a_i = w_i - 1, A = p_u).
inline ReductionReport verify_fully_matched_lemmas(const GameInstance& g, const PayoffVector& p,
                                                   std::size_t max_agents = 20) {
  const AgentIndex center = require_star(g);
  detail::check_agent_guard(g, max_agents);
  const auto pay = aligned_payoffs(g, p);
  const auto leaves = star_leaves(g, center);

  std::vector<Rational> item_value(g.agent_count(), Rational(0));
  std::vector<std::optional<std::size_t>> leaf_edge(g.agent_count());
  KnapsackInstance k;
  k.capacity = g.capacity(center);
  k.goal = numerator_of(pay[center]);
  for (const AgentIndex v : leaves) {
    leaf_edge[v] = g.edge_between(center, v);
    const Rational w = leaf_edge[v] ? g.edges()[*leaf_edge[v]].w : Rational(0);
    const Rational a = w - 1;
    if (!leaf_edge[v] || !is_integral(w) || a < 0 || g.capacity(v) < 1 ||
        pay[v] != g.capacity(v) * w - a) {
      throw Error(ErrorKind::kPrecondition,
                  "leaf \"" + g.id(v) + "\" is not of the form b=c, w=a+1, p=c(a+1)-a");
    }
    item_value[v] = a;
    k.items.push_back({BigInt(g.capacity(v)), numerator_of(a)});
  }
  if (!is_integral(pay[center])) {
    throw Error(ErrorKind::kPrecondition, "center payoff must be an integer goal A");
  }

  ReductionReport report{"fully-matched-lemmas", {}};
  if (const Json& prov = g.provenance(); prov.is_object() && prov.contains("knapsack")) {
    const KnapsackInstance source = knapsack_from_json(prov.at("knapsack"), "provenance.knapsack");
    report.add("construction matches the source knapsack", 1, source == k ? 1 : 0);
  }

  MaskWorth nu(g);
  const std::size_t n = g.agent_count();
  std::vector<Capacity> mult;
  std::vector<Rational> deficit(std::size_t{1} << n);
  std::vector<std::vector<AgentIndex>> short_leaves(std::size_t{1} << n);
  for (CoalitionMask mask = 0; mask < (CoalitionMask{1} << n); ++mask) {
    deficit[mask] = nu(mask, &mult) - detail::sum_over(pay, mask);
    for (const AgentIndex v : leaves) {
      if (!(mask >> v & 1U)) continue;
      const Capacity used = leaf_edge[v] ? mult[*leaf_edge[v]] : 0;
      if (used < g.capacity(v)) short_leaves[mask].push_back(v);
    }
  }

  std::size_t value_total = 0;
  std::size_t value_ok = 0;
  std::size_t removal_total = 0;
  std::size_t removal_ok = 0;
  std::size_t detailed = 0;
  Rational best = 0;
  for (CoalitionMask mask = 0; mask < (CoalitionMask{1} << n); ++mask) {
    best = std::max(best, deficit[mask]);
    if ((mask >> center & 1U) && short_leaves[mask].empty()) {
      ++value_total;
      const Rational expected = detail::sum_over(item_value, mask) - pay[center];
      if (deficit[mask] == expected) {
        ++value_ok;
      } else if (detailed++ < 5) {
        report.add("value of " + format_coalition(from_mask(g, mask)),
                   expected, deficit[mask]);
      }
    }
    for (const AgentIndex v : short_leaves[mask]) {
      ++removal_total;
      const CoalitionMask without = mask & ~(CoalitionMask{1} << v);
      if (deficit[mask] <= deficit[without] - 1) {
        ++removal_ok;
      } else if (detailed++ < 5) {
        report.add("removing " + g.id(v) + " from " + format_coalition(from_mask(g, mask)),
                   deficit[without] - 1, deficit[mask]);
      }
    }
  }
  report.add("fully matched coalitions with nu(S)-p(S) = sum a_i - A", value_total, value_ok);
  report.add("unsaturated-leaf removals raising nu-p by at least 1", removal_total, removal_ok);

  const KnapsackResult ks = solve_knapsack(k);
  report.add("max deficit = max(0, best knapsack value - A)",
             std::max(Rational(0), Rational(ks.best_value - k.goal)), best);
  return report;
}

/// Embeds a star and profit share into a bipartite game whose extended
/// payoff is an imputation.
///
/// Requires at least one leaf and every leaf weight w_i < p(G*) + 2; the
/// added payoffs p_x = (b_x - 1) w_x + 1 and p_y = (b_y - 1) w_y + 1 must be
/// nonnegative. Inputs outside this range are rejected.
inline GameWithPayoff star_to_bipartite_gadget(const GameInstance& star, const PayoffVector& p) {
  const AgentIndex center = require_star(star);
  const auto pay = aligned_payoffs(star, p);
  const auto leaves = star_leaves(star, center);
  if (leaves.empty()) {
    throw Error(ErrorKind::kPrecondition, "star has no leaves");
  }
  Rational leaf_pay = 0;
  Capacity leaf_cap = 0;
  for (const AgentIndex v : leaves) {
    leaf_pay += pay[v];
    leaf_cap += star.capacity(v);
  }
  const Rational total_pay = leaf_pay + pay[center];
  for (const auto& e : star.edges()) {
    if (e.w >= total_pay + 2) {
      const AgentIndex v = e.u == center ? e.v : e.u;
      throw Error(ErrorKind::kPrecondition,
                  "leaf \"" + star.id(v) + "\" has weight " + format_rational(e.w) +
                      " >= p(G*) + 2 = " + format_rational(total_pay + 2));
    }
  }
  const Rational w_x = leaf_pay + 1;
  const Rational w_y = pay[center] + 1;
  const Capacity b_x = leaf_cap;
  const Capacity b_y = star.capacity(center);
  const Rational p_x = (b_x - 1) * w_x + 1;
  const Rational p_y = (b_y - 1) * w_y + 1;
  if (p_x < 0 || p_y < 0) {
    throw Error(ErrorKind::kPrecondition,
                "gadget payoffs would be negative (p_x = " + format_rational(p_x) +
                    ", p_y = " + format_rational(p_y) + ")");
  }

  const std::string x = detail::fresh_id(star.agents(), "x");
  std::vector<std::string> taken = star.agents();
  taken.push_back(x);
  const std::string y = detail::fresh_id(taken, "y");

  const bool center_on_u = star.side(center) == Side::kU;
  std::vector<std::string> u_side = star.u_side();
  std::vector<std::string> v_side = star.v_side();
  (center_on_u ? u_side : v_side).push_back(x);
  (center_on_u ? v_side : u_side).push_back(y);

  auto caps = star.capacity_map();
  caps.emplace(x, b_x);
  caps.emplace(y, b_y);

  auto edges = star.edge_specs();
  std::vector<std::string> leaf_ids;
  for (const AgentIndex v : leaves) {
    leaf_ids.push_back(star.id(v));
    if (center_on_u) {
      edges.push_back({x, star.id(v), w_x});
    } else {
      edges.push_back({star.id(v), x, w_x});
    }
  }
  if (center_on_u) {
    edges.push_back({star.id(center), y, w_y});
  } else {
    edges.push_back({y, star.id(center), w_y});
  }

  Json prov = Json::object();
  prov["reduction"] = "star-to-bipartite";
  prov["center"] = star.id(center);
  prov["leaves"] = leaf_ids;
  prov["x"] = x;
  prov["y"] = y;
  if (!star.provenance().is_null()) prov["source"] = star.provenance();

  PayoffVector extended;
  for (AgentIndex i = 0; i < star.agent_count(); ++i) extended.set(star.id(i), pay[i]);
  extended.set(x, p_x);
  extended.set(y, p_y);
  GameInstance g(std::move(u_side), std::move(v_side), caps, edges, std::move(prov));
  return {std::move(g), std::move(extended)};
}

struct GadgetCheckOptions {
  bool brute_force = true;
  std::size_t max_agents = 20;
};

/// Exact checks on a generated gadget: the construction parameters, the
/// identities p(G) = nu(G) = b_x w_x + b_y w_y, p({u,y}) = nu({u,y}) and
/// p({x} + leaves) = nu({x} + leaves), that the solver's optimum avoids every
/// center-leaf edge, and (by enumeration) how unstable coalitions relate to
/// x, y and the underlying star.
inline ReductionReport verify_gadget(const GameInstance& g, const PayoffVector& p,
                                     const GadgetCheckOptions& options = {}) {
  const Json& prov = detail::provenance_for(g, "star-to-bipartite");
  const AgentIndex u = g.index_of(detail::provenance_id(prov, "center"));
  const AgentIndex x = g.index_of(detail::provenance_id(prov, "x"));
  const AgentIndex y = g.index_of(detail::provenance_id(prov, "y"));
  std::vector<AgentIndex> leaves;
  for (const auto& id : prov.at("leaves")) leaves.push_back(g.index_of(id.get<std::string>()));
  const auto pay = aligned_payoffs(g, p);

  Rational leaf_pay = 0;
  Capacity leaf_cap = 0;
  for (const AgentIndex v : leaves) {
    leaf_pay += pay[v];
    leaf_cap += g.capacity(v);
  }
  const Capacity b_u = g.capacity(u);
  const Rational w_x = leaf_pay + 1;
  const Rational w_y = pay[u] + 1;
  const Capacity b_x = g.capacity(x);
  const Capacity b_y = g.capacity(y);

  ReductionReport report{"gadget", {}};
  std::size_t x_edges_ok = 0;
  for (const AgentIndex v : leaves) {
    if (auto k = g.edge_between(x, v); k && g.edges()[*k].w == w_x) ++x_edges_ok;
  }
  report.add("x-leaf edges weighing sum p_i + 1", leaves.size(), x_edges_ok);
  report.add("w_y = p_u + 1", w_y, detail::edge_weight_between(g, u, y));
  report.add("b_x = sum b_i", leaf_cap, b_x);
  report.add("b_y = b_u", b_u, b_y);
  report.add("p_x = (b_x - 1) w_x + 1", (b_x - 1) * w_x + 1, pay[x]);
  report.add("p_y = (b_y - 1) w_y + 1", (b_y - 1) * w_y + 1, pay[y]);

  const Rational target = b_x * w_x + b_y * w_y;
  Rational p_total = 0;
  for (const auto& v : pay) p_total += v;
  const BMatching best = max_weight_b_matching(g);
  report.add("p(G) = b_x w_x + b_y w_y", target, p_total);
  report.add("nu(G) = b_x w_x + b_y w_y", target, best.total_weight);
  Capacity center_leaf_units = 0;
  for (const AgentIndex v : leaves) {
    if (auto k = g.edge_between(u, v)) center_leaf_units += best.multiplicities[*k];
  }
  report.add("center-leaf edge units in the optimal matching", 0, center_leaf_units);

  const Coalition uy{g.id(u), g.id(y)};
  report.add("p({u,y}) = b_u p_u + b_u", b_u * pay[u] + b_u, pay[u] + pay[y]);
  report.add("nu({u,y}) = b_u p_u + b_u", b_u * pay[u] + b_u, worth(g, uy));

  std::vector<std::string> x_side{g.id(x)};
  for (const AgentIndex v : leaves) x_side.push_back(g.id(v));
  const Rational leaves_target = leaf_cap * (leaf_pay + 1);
  report.add("p({x} + leaves) = (sum b_i)(sum p_i + 1)", leaves_target, leaf_pay + pay[x]);
  report.add("nu({x} + leaves) = (sum b_i)(sum p_i + 1)", leaves_target,
             worth(g, Coalition(std::move(x_side))));

  if (!options.brute_force) return report;
  detail::check_agent_guard(g, options.max_agents);

  // Enumerate once, keeping the sign and maximum of nu(S) - p(S).
  const CoalitionMask xy = (CoalitionMask{1} << x) | (CoalitionMask{1} << y);
  std::size_t with_xy = 0;
  std::size_t star_part_stable = 0;
  bool unstable_in_g = false;
  bool unstable_in_star = false;
  BigInt best_g = 0;
  BigInt best_star = 0;
  std::vector<signed char> sign(std::size_t{1} << g.agent_count(), 0);
  const BigInt scale = detail::enumerate_deficits(g, pay, [&](CoalitionMask mask, const auto& d) {
    sign[mask] = d > 0 ? 1 : (d < 0 ? -1 : 0);
    if (d > best_g) best_g = detail::to_big(d);
    if ((mask & xy) == 0 && d > best_star) best_star = detail::to_big(d);
    if (d > 0) {
      unstable_in_g = true;
      if (mask & xy) {
        ++with_xy;
      } else {
        unstable_in_star = true;
      }
    }
    return true;
  });
  for (CoalitionMask mask = 0; mask < sign.size(); ++mask) {
    if (sign[mask] > 0 && sign[mask & ~xy] <= 0) ++star_part_stable;
  }
  report.add("unstable coalitions containing x or y", 0, with_xy);
  report.add("unstable coalitions whose star part is stable", 0, star_part_stable);
  report.add("unstable coalition exists: star vs gadget", unstable_in_star ? 1 : 0,
             unstable_in_g ? 1 : 0);
  report.add("max deficit: star vs gadget", Rational(best_star, scale), Rational(best_g, scale));
  return report;
}

/// Doubles every agent v with a partner v' on the opposite side joined by
/// an edge of weight 2p* - p_v, where p* = 1 + max(max_v p_v, max_e w_e).
/// Originals get capacity b_v + 1, partners 1, and everyone is paid p*.
inline GameWithPayoff partner_duplication(const GameInstance& g, const PayoffVector& p) {
  const auto pay = aligned_payoffs(g, p);
  if (!is_imputation(g, p)) {
    throw Error(ErrorKind::kNotImputation,
                "partner duplication needs p(N) = nu(N) = " + format_rational(grand_worth(g)));
  }
  Rational top = 0;
  for (const auto& v : pay) top = std::max(top, v);
  for (const auto& e : g.edges()) top = std::max(top, e.w);
  const Rational p_star = top + 1;

  std::vector<std::string> taken = g.agents();
  std::vector<std::string> partner(g.agent_count());
  for (AgentIndex i = 0; i < g.agent_count(); ++i) {
    partner[i] = detail::fresh_id(taken, g.id(i) + "'");
    taken.push_back(partner[i]);
  }

  std::vector<std::string> u_side = g.u_side();
  std::vector<std::string> v_side = g.v_side();
  for (AgentIndex i = 0; i < g.agent_count(); ++i) {
    (g.side(i) == Side::kU ? v_side : u_side).push_back(partner[i]);
  }
  std::map<std::string, Capacity, std::less<>> caps;
  for (AgentIndex i = 0; i < g.agent_count(); ++i) {
    caps.emplace(g.id(i), g.capacity(i) + 1);
    caps.emplace(partner[i], 1);
  }
  auto edges = g.edge_specs();
  for (AgentIndex i = 0; i < g.agent_count(); ++i) {
    const Rational w = 2 * p_star - pay[i];
    if (g.side(i) == Side::kU) {
      edges.push_back({g.id(i), partner[i], w});
    } else {
      edges.push_back({partner[i], g.id(i), w});
    }
  }

  Json partners = Json::object();
  for (AgentIndex i = 0; i < g.agent_count(); ++i) partners[g.id(i)] = partner[i];
  Json prov = Json::object();
  prov["reduction"] = "partner";
  prov["p_star"] = rational_to_json(p_star);
  prov["partners"] = std::move(partners);
  prov["source_instance"] = instance_to_json(g);
  prov["source_payoff"] = payoff_to_json(p, &g);

  GameInstance doubled(std::move(u_side), std::move(v_side), caps, edges, std::move(prov));
  PayoffVector uniform;
  for (const auto& id : doubled.agents()) uniform.set(id, p_star);
  return {std::move(doubled), std::move(uniform)};
}

/// Reads the source game of a partner-duplicated instance from provenance.
inline GameWithPayoff partner_source(const GameInstance& doubled) {
  const Json& prov = detail::provenance_for(doubled, "partner");
  if (!prov.contains("source_instance") || !prov.contains("source_payoff")) {
    throw Error(ErrorKind::kPrecondition, "partner provenance lacks the source game");
  }
  return {instance_from_json(prov.at("source_instance"), "provenance.source_instance"),
          payoff_from_json(prov.at("source_payoff"), "provenance.source_payoff")};
}

/// Exhaustively compares core membership of (g, p) and its partner
/// duplication (g2, p2), and checks p2 is an imputation. When p is outside
/// the core, its maximum-deficit coalition S is doubled to S' and
/// nu'(S') = nu(S) + 2|S|p* - p(S) is checked, which makes the deficit of S'
/// equal that of S.
inline ReductionReport verify_partner_equivalence(const GameInstance& g, const PayoffVector& p,
                                                  const GameInstance& g2,
                                                  const PayoffVector& p2,
                                                  std::size_t max_agents = 10) {
  detail::check_agent_guard(g, max_agents);
  const Json& prov = detail::provenance_for(g2, "partner");
  const auto pay = aligned_payoffs(g, p);
  const auto pay2 = aligned_payoffs(g2, p2);
  const auto p_star_json = json_to_rational(prov.at("p_star"));
  if (!p_star_json) throw Error(ErrorKind::kPrecondition, "provenance p_star unreadable");
  const Rational p_star = *p_star_json;
  std::vector<AgentIndex> partner_of(g.agent_count());
  for (AgentIndex i = 0; i < g.agent_count(); ++i) {
    const Json& partners = prov.at("partners");
    if (!partners.contains(g.id(i))) {
      throw Error(ErrorKind::kPrecondition, "no partner recorded for \"" + g.id(i) + "\"");
    }
    partner_of[i] = g2.index_of(partners.at(g.id(i)).get<std::string>());
  }

  ReductionReport report{"partner-equivalence", {}};
  std::size_t uniform = 0;
  for (const auto& v : pay2) uniform += v == p_star ? 1 : 0;
  report.add("agents paid p*", g2.agent_count(), uniform);

  Rational p2_total = 0;
  for (const auto& v : pay2) p2_total += v;
  const Rational nu2 = grand_worth(g2);
  Rational partner_sum = 0;
  for (const auto& v : pay) partner_sum += 2 * p_star - v;
  report.add("nu'(G') = nu(G) + sum (2p* - p_v)", grand_worth(g) + partner_sum, nu2);
  report.add("p'(G') = nu'(G')", nu2, p2_total);

  const CoreVerdict original = check_core_bruteforce(g, p, {false, max_agents});
  const auto doubled_unstable = first_unstable_coalition(g2, p2, 2 * max_agents);
  report.add("core verdicts agree (1 = in core)", original.in_core ? 1 : 0,
             doubled_unstable ? 0 : 1);

  if (original.witness) {
    const auto& s = original.witness->coalition;
    std::vector<std::string> doubled;
    for (const auto& id : s.members()) {
      doubled.push_back(id);
      doubled.push_back(g2.id(partner_of[g.index_of(id)]));
    }
    const Coalition s2(std::move(doubled));
    const Rational nu_s2 = worth(g2, s2);
    const Rational p_s = payoff_sum(p, s);
    report.add("nu'(S') = nu(S) + 2|S|p* - p(S)",
               worth(g, s) + 2 * static_cast<std::int64_t>(s.size()) * p_star - p_s, nu_s2);
    report.add("deficit of doubled witness", original.witness->deficit,
               nu_s2 - payoff_sum(p2, s2));
  }
  return report;
}

}  // namespace bmgame

#endif  // BMGAME_REDUCTIONS_HPP

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

// Data model of a bipartite b-matching game: the weighted bipartite graph
// with vertex capacities, coalitions, profit shares and b-matchings.
//
// Agents are indexed u_side first, then v_side, in input order. That index is
// also the bit position used when coalitions are encoded as bitmasks.

#ifndef BMGAME_INSTANCE_HPP
#define BMGAME_INSTANCE_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "bmgame/error.hpp"
#include "bmgame/json_io.hpp"
#include "bmgame/rational.hpp"

namespace bmgame {

using AgentIndex = std::size_t;
using Capacity = std::int64_t;
using CoalitionMask = std::uint64_t;

inline constexpr std::size_t kMaxMaskAgents = 63;

enum class Side { kU, kV };

/// Edge as given by the user, referring to vertices by id.
struct EdgeSpec {
  std::string u;
  std::string v;
  Rational w;
};

/// Edge resolved to agent indices.
struct Edge {
  AgentIndex u;
  AgentIndex v;
  Rational w;

  friend bool operator==(const Edge&, const Edge&) = default;
};

class GameInstance {
 public:
  GameInstance() = default;

  /// Validates every invariant; throws Error(kInvalid) naming the offender.
  GameInstance(std::vector<std::string> u_side, std::vector<std::string> v_side,
               const std::map<std::string, Capacity, std::less<>>& capacities,
               const std::vector<EdgeSpec>& edges, Json provenance = nullptr)
      : u_side_(std::move(u_side)),
        v_side_(std::move(v_side)),
        provenance_(std::move(provenance)) {
    ids_.reserve(u_side_.size() + v_side_.size());
    for (const auto& id : u_side_) add_agent(id);
    for (const auto& id : v_side_) add_agent(id);

    capacity_.assign(ids_.size(), 0);
    std::vector<bool> seen(ids_.size(), false);
    for (const auto& [id, cap] : capacities) {
      const auto it = index_.find(id);
      if (it == index_.end()) {
        throw Error(ErrorKind::kInvalid,
                    "capacities[\"" + id + "\"]: not a vertex of the instance");
      }
      if (cap < 0) {
        throw Error(ErrorKind::kInvalid, "capacities[\"" + id + "\"]: negative capacity");
      }
      capacity_[it->second] = cap;
      seen[it->second] = true;
    }
    for (AgentIndex i = 0; i < ids_.size(); ++i) {
      if (!seen[i]) {
        throw Error(ErrorKind::kInvalid, "capacities: missing entry for \"" + ids_[i] + "\"");
      }
    }

    edges_.reserve(edges.size());
    std::map<std::pair<AgentIndex, AgentIndex>, std::size_t> edge_at;
    for (std::size_t k = 0; k < edges.size(); ++k) {
      const auto& e = edges[k];
      const std::string where = "edges[" + std::to_string(k) + "]";
      const auto ui = index_.find(e.u);
      const auto vi = index_.find(e.v);
      if (ui == index_.end() || vi == index_.end()) {
        throw Error(ErrorKind::kInvalid, where + ": unknown endpoint");
      }
      if (side(ui->second) != Side::kU || side(vi->second) != Side::kV) {
        throw Error(ErrorKind::kInvalid,
                    where + ": edge (" + e.u + ", " + e.v +
                        ") does not join a u_side vertex to a v_side vertex");
      }
      if (e.w < 0) {
        throw Error(ErrorKind::kInvalid, where + ": negative weight");
      }
      const auto [it, fresh] = edge_at.emplace(std::pair{ui->second, vi->second}, k);
      if (!fresh) {
        throw Error(ErrorKind::kInvalid, where + ": duplicate edge (" + e.u + ", " + e.v +
                                             "), first listed at edges[" +
                                             std::to_string(it->second) + "]");
      }
      edges_.push_back(Edge{ui->second, vi->second, e.w});
    }
  }

  [[nodiscard]] const std::vector<std::string>& u_side() const { return u_side_; }
  [[nodiscard]] const std::vector<std::string>& v_side() const { return v_side_; }
  [[nodiscard]] const std::vector<Edge>& edges() const { return edges_; }
  [[nodiscard]] const Json& provenance() const { return provenance_; }

  [[nodiscard]] std::size_t agent_count() const { return ids_.size(); }
  [[nodiscard]] const std::string& id(AgentIndex i) const { return ids_.at(i); }
  [[nodiscard]] const std::vector<std::string>& agents() const { return ids_; }
  [[nodiscard]] Capacity capacity(AgentIndex i) const { return capacity_.at(i); }
  [[nodiscard]] Side side(AgentIndex i) const {
    return i < u_side_.size() ? Side::kU : Side::kV;
  }

  [[nodiscard]] std::optional<AgentIndex> find(std::string_view id) const {
    const auto it = index_.find(std::string(id));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  [[nodiscard]] AgentIndex index_of(std::string_view id) const {
    if (auto i = find(id)) return *i;
    throw Error(ErrorKind::kUnknownAgent, "\"" + std::string(id) + "\"");
  }

  [[nodiscard]] Capacity capacity(std::string_view id) const {
    return capacity_[index_of(id)];
  }

  /// Index into edges() of the edge joining the two agents, if any.
  [[nodiscard]] std::optional<std::size_t> edge_between(AgentIndex a, AgentIndex b) const {
    for (std::size_t k = 0; k < edges_.size(); ++k) {
      const auto& e = edges_[k];
      if ((e.u == a && e.v == b) || (e.u == b && e.v == a)) return k;
    }
    return std::nullopt;
  }

  [[nodiscard]] std::map<std::string, Capacity, std::less<>> capacity_map() const {
    std::map<std::string, Capacity, std::less<>> out;
    for (AgentIndex i = 0; i < ids_.size(); ++i) out.emplace(ids_[i], capacity_[i]);
    return out;
  }

  [[nodiscard]] std::vector<EdgeSpec> edge_specs() const {
    std::vector<EdgeSpec> out;
    out.reserve(edges_.size());
    for (const auto& e : edges_) out.push_back({ids_[e.u], ids_[e.v], e.w});
    return out;
  }

  friend bool operator==(const GameInstance& a, const GameInstance& b) {
    return a.u_side_ == b.u_side_ && a.v_side_ == b.v_side_ &&
           a.capacity_ == b.capacity_ && a.edges_ == b.edges_ &&
           a.provenance_ == b.provenance_;
  }

 private:
  void add_agent(const std::string& id) {
    if (id.empty()) throw Error(ErrorKind::kInvalid, "empty vertex id");
    if (!index_.emplace(id, ids_.size()).second) {
      throw Error(ErrorKind::kInvalid, "vertex \"" + id + "\" listed twice");
    }
    ids_.push_back(id);
  }

  std::vector<std::string> u_side_;
  std::vector<std::string> v_side_;
  std::vector<std::string> ids_;
  std::unordered_map<std::string, AgentIndex> index_;
  std::vector<Capacity> capacity_;
  std::vector<Edge> edges_;
  Json provenance_;
};

/// A set of agents. Members are kept sorted and unique.
class Coalition {
 public:
  Coalition() = default;
  Coalition(std::initializer_list<std::string> members)
      : Coalition(std::vector<std::string>(members)) {}
  explicit Coalition(std::vector<std::string> members) : members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  }

  [[nodiscard]] const std::vector<std::string>& members() const { return members_; }
  [[nodiscard]] bool contains(std::string_view id) const {
    return std::binary_search(members_.begin(), members_.end(), id);
  }
  [[nodiscard]] std::size_t size() const { return members_.size(); }
  [[nodiscard]] bool empty() const { return members_.empty(); }

  friend bool operator==(const Coalition&, const Coalition&) = default;

 private:
  std::vector<std::string> members_;
};

/// "[a, b, c]" with members in sorted order.
inline std::string format_coalition(const Coalition& s) {
  std::string out = "[";
  for (std::size_t i = 0; i < s.members().size(); ++i) {
    if (i != 0) out += ", ";
    out += s.members()[i];
  }
  return out + "]";
}

/// Per-agent membership flags, validated against g.
inline std::vector<bool> membership(const GameInstance& g, const Coalition& s) {
  std::vector<bool> in(g.agent_count(), false);
  for (const auto& id : s.members()) in[g.index_of(id)] = true;
  return in;
}

inline CoalitionMask to_mask(const GameInstance& g, const Coalition& s) {
  if (g.agent_count() > kMaxMaskAgents) {
    throw Error(ErrorKind::kGuard, "bitmask coalitions support at most 63 agents");
  }
  CoalitionMask mask = 0;
  for (const auto& id : s.members()) mask |= CoalitionMask{1} << g.index_of(id);
  return mask;
}

inline Coalition from_mask(const GameInstance& g, CoalitionMask mask) {
  std::vector<std::string> members;
  for (AgentIndex i = 0; i < g.agent_count(); ++i) {
    if (mask >> i & 1U) members.push_back(g.id(i));
  }
  return Coalition(std::move(members));
}

inline Coalition grand_coalition(const GameInstance& g) { return Coalition(g.agents()); }

/// Profit share: exact, nonnegative payoff per agent.
class PayoffVector {
 public:
  PayoffVector() = default;
  PayoffVector(std::initializer_list<std::pair<const std::string, Rational>> entries) {
    for (const auto& [id, value] : entries) set(id, value);
  }

  void set(const std::string& id, Rational value) {
    if (value < 0) {
      throw Error(ErrorKind::kInvalid, "payoff of \"" + id + "\" is negative");
    }
    const auto [it, fresh] = index_.emplace(id, entries_.size());
    if (fresh) {
      entries_.emplace_back(id, std::move(value));
    } else {
      entries_[it->second].second = std::move(value);
    }
  }

  [[nodiscard]] const Rational& at(std::string_view id) const {
    const auto it = index_.find(std::string(id));
    if (it == index_.end()) {
      throw Error(ErrorKind::kUnknownAgent, "no payoff for \"" + std::string(id) + "\"");
    }
    return entries_[it->second].second;
  }
  [[nodiscard]] bool contains(std::string_view id) const {
    return index_.count(std::string(id)) != 0;
  }
  [[nodiscard]] std::size_t size() const { return entries_.size(); }
  [[nodiscard]] const std::vector<std::pair<std::string, Rational>>& entries() const {
    return entries_;
  }

  friend bool operator==(const PayoffVector& a, const PayoffVector& b) {
    if (a.size() != b.size()) return false;
    for (const auto& [id, v] : a.entries_) {
      if (!b.contains(id) || b.at(id) != v) return false;
    }
    return true;
  }

 private:
  std::vector<std::pair<std::string, Rational>> entries_;
  std::unordered_map<std::string, std::size_t> index_;
};

/// Payoffs laid out in agent-index order. Throws unless the domain of p is
/// exactly the agent set of g.
inline std::vector<Rational> aligned_payoffs(const GameInstance& g, const PayoffVector& p) {
  std::vector<Rational> out;
  out.reserve(g.agent_count());
  for (const auto& id : g.agents()) {
    if (!p.contains(id)) {
      throw Error(ErrorKind::kInvalid, "payoff vector has no entry for \"" + id + "\"");
    }
    out.push_back(p.at(id));
  }
  if (p.size() != g.agent_count()) {
    for (const auto& [id, v] : p.entries()) {
      if (!g.find(id)) {
        throw Error(ErrorKind::kUnknownAgent, "payoff for \"" + id + "\" which is not an agent");
      }
    }
  }
  return out;
}

/// p(S): total payoff of the coalition.
inline Rational payoff_sum(const PayoffVector& p, const Coalition& s) {
  Rational total = 0;
  for (const auto& id : s.members()) total += p.at(id);
  return total;
}

/// Multiplicity per edge (aligned with GameInstance::edges()) and the total.
struct BMatching {
  std::vector<Capacity> multiplicities;
  Rational total_weight = 0;
};

/// Checks capacity feasibility and that total_weight is the exact weighted
/// sum. Returns a description of the first violation, or nullopt.
inline std::optional<std::string> b_matching_violation(const GameInstance& g,
                                                       const BMatching& m) {
  if (m.multiplicities.size() != g.edges().size()) {
    return "multiplicity vector has " + std::to_string(m.multiplicities.size()) +
           " entries for " + std::to_string(g.edges().size()) + " edges";
  }
  std::vector<Capacity> load(g.agent_count(), 0);
  Rational total = 0;
  for (std::size_t k = 0; k < g.edges().size(); ++k) {
    const auto x = m.multiplicities[k];
    if (x < 0) return "negative multiplicity on edge " + std::to_string(k);
    const auto& e = g.edges()[k];
    load[e.u] += x;
    load[e.v] += x;
    total += e.w * x;
  }
  for (AgentIndex i = 0; i < g.agent_count(); ++i) {
    if (load[i] > g.capacity(i)) {
      return "vertex \"" + g.id(i) + "\" matched " + std::to_string(load[i]) +
             " times, capacity " + std::to_string(g.capacity(i));
    }
  }
  if (total != m.total_weight) {
    return "total_weight " + format_rational(m.total_weight) + " differs from sum " +
           format_rational(total);
  }
  return std::nullopt;
}

/// Induced sub-instance on the members of s. Vertex and edge order follow g.
inline GameInstance restrict(const GameInstance& g, const Coalition& s) {
  const auto in = membership(g, s);
  std::vector<std::string> u_side;
  std::vector<std::string> v_side;
  std::map<std::string, Capacity, std::less<>> caps;
  for (AgentIndex i = 0; i < g.agent_count(); ++i) {
    if (!in[i]) continue;
    (g.side(i) == Side::kU ? u_side : v_side).push_back(g.id(i));
    caps.emplace(g.id(i), g.capacity(i));
  }
  std::vector<EdgeSpec> edges;
  for (const auto& e : g.edges()) {
    if (in[e.u] && in[e.v]) edges.push_back({g.id(e.u), g.id(e.v), e.w});
  }
  return GameInstance(std::move(u_side), std::move(v_side), caps, edges);
}

/// Star: one side is a single vertex (the center). When both sides are
/// singletons the u-side vertex is the center.
inline std::optional<AgentIndex> star_center(const GameInstance& g) {
  if (g.u_side().size() == 1) return AgentIndex{0};
  if (g.v_side().size() == 1) return g.u_side().size();
  return std::nullopt;
}

inline AgentIndex require_star(const GameInstance& g) {
  if (auto c = star_center(g)) return *c;
  throw Error(ErrorKind::kNotStar,
              "neither side is a single vertex (|U|=" + std::to_string(g.u_side().size()) +
                  ", |V|=" + std::to_string(g.v_side().size()) + ")");
}

/// Leaves of a star in agent order.
inline std::vector<AgentIndex> star_leaves(const GameInstance& g, AgentIndex center) {
  std::vector<AgentIndex> leaves;
  for (AgentIndex i = 0; i < g.agent_count(); ++i) {
    if (i != center) leaves.push_back(i);
  }
  return leaves;
}

}  // namespace bmgame

#endif  // BMGAME_INSTANCE_HPP

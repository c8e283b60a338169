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

// Maximum-weight b-matching on bipartite graphs with unbounded edge
// multiplicity (the transportation problem).
//
// Weights are scaled by the lcm of their denominators and the flow runs on
// integers: int64 when a magnitude bound shows nothing can overflow, cpp_int
// otherwise. Network: source -> u (cap b(u)), u -> v (cap min(b(u), b(v)),
// gain w(u,v)), v -> sink (cap b(v)). We augment along a maximum-gain
// residual path while its gain is strictly positive. Each path is computed
// with a label-correcting (queue-based Bellman-Ford) longest-path search;
// the residual graph never holds a positive-gain cycle because every flow
// we produce is gain-optimal for its value.

#ifndef BMGAME_TRANSPORT_SOLVER_HPP
#define BMGAME_TRANSPORT_SOLVER_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "bmgame/instance.hpp"
#include "bmgame/rational.hpp"

namespace bmgame {

namespace detail {

template <class Int>
class GainNetwork {
 public:
  void reset(std::size_t nodes) {
    adj_.resize(nodes);
    for (auto& a : adj_) a.clear();
    arcs_.clear();
    dist_.resize(nodes);
    reached_.assign(nodes, 0);
    queued_.assign(nodes, 0);
    parent_.assign(nodes, 0);
    enqueues_.assign(nodes, 0);
  }

  /// Returns the id of the forward arc; id ^ 1 is its reverse.
  std::size_t add_arc(std::size_t from, std::size_t to, Capacity cap, const Int& gain) {
    const std::size_t id = arcs_.size();
    arcs_.push_back({to, cap, gain});
    arcs_.push_back({from, 0, -gain});
    adj_[from].push_back(id);
    adj_[to].push_back(id + 1);
    return id;
  }

  [[nodiscard]] Capacity flow(std::size_t arc) const { return arcs_[arc ^ 1U].residual; }

  /// Successive maximum-gain augmentation; returns the total gain.
  Int maximize(std::size_t source, std::size_t sink) {
    Int total = 0;
    while (longest_path(source, sink)) {
      Capacity push = std::numeric_limits<Capacity>::max();
      for (std::size_t x = sink; x != source; x = arcs_[parent_[x] ^ 1U].to) {
        push = std::min(push, arcs_[parent_[x]].residual);
      }
      for (std::size_t x = sink; x != source; x = arcs_[parent_[x] ^ 1U].to) {
        arcs_[parent_[x]].residual -= push;
        arcs_[parent_[x] ^ 1U].residual += push;
      }
      total += dist_[sink] * push;
    }
    return total;
  }

 private:
  struct Arc {
    std::size_t to;
    Capacity residual;
    Int gain;
  };

  bool longest_path(std::size_t source, std::size_t sink) {
    const std::size_t n = adj_.size();
    std::fill(reached_.begin(), reached_.end(), 0);
    std::fill(queued_.begin(), queued_.end(), 0);
    std::fill(enqueues_.begin(), enqueues_.end(), 0);
    queue_.clear();
    dist_[source] = 0;
    reached_[source] = 1;
    queue_.push_back(source);
    queued_[source] = 1;
    for (std::size_t head = 0; head < queue_.size(); ++head) {
      const std::size_t x = queue_[head];
      queued_[x] = 0;
      for (const std::size_t id : adj_[x]) {
        const Arc& a = arcs_[id];
        if (a.residual <= 0) continue;
        Int candidate = dist_[x] + a.gain;
        if (reached_[a.to] && !(candidate > dist_[a.to])) continue;
        dist_[a.to] = std::move(candidate);
        reached_[a.to] = 1;
        parent_[a.to] = id;
        if (!queued_[a.to]) {
          if (++enqueues_[a.to] > n) {
            throw std::logic_error("positive-gain residual cycle");
          }
          queued_[a.to] = 1;
          queue_.push_back(a.to);
        }
      }
    }
    return reached_[sink] && dist_[sink] > 0;
  }

  std::vector<Arc> arcs_;
  std::vector<std::vector<std::size_t>> adj_;
  std::vector<Int> dist_;
  std::vector<char> reached_;
  std::vector<char> queued_;
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> enqueues_;
  std::vector<std::size_t> queue_;  // FIFO; entries are never popped
};

inline bool small_magnitude(const BigInt& bound) { return bound < int64_safe_bound(); }

/// Calls f with a value of the chosen integer type (int64 or BigInt).
template <class F>
decltype(auto) with_integer_type(bool use_int64, F&& f) {
  if (use_int64) return f(std::int64_t{});
  return f(BigInt{});
}

inline std::vector<Rational> edge_weights(const GameInstance& g) {
  std::vector<Rational> w;
  w.reserve(g.edges().size());
  for (const auto& e : g.edges()) w.push_back(e.w);
  return w;
}

/// Bound on any gain or matching value the solver can form.
inline BigInt matching_magnitude_bound(const GameInstance& g, const ScaledValues& w) {
  BigInt max_w = 0;
  for (const auto& v : w.scaled) max_w = std::max(max_w, v);
  BigInt caps = 0;
  for (AgentIndex i = 0; i < g.agent_count(); ++i) caps += g.capacity(i);
  return max_w * (caps + g.agent_count() + 2);
}

/// Worth of induced sub-instances, reusing one network.
template <class Int>
class CoalitionSolver {
 public:
  CoalitionSolver(const GameInstance& g, const std::vector<BigInt>& scaled_weights)
      : g_(g) {
    for (std::size_t k = 0; k < g.edges().size(); ++k) {
      if (scaled_weights[k] <= 0) continue;  // zero-weight edges never help
      const auto& e = g.edges()[k];
      arcs_.push_back({e.u, e.v, from_big<Int>(scaled_weights[k]),
                       std::min(g.capacity(e.u), g.capacity(e.v)), k});
    }
  }

  /// Optimal scaled value of the sub-instance induced by `in(agent)`.
  /// When `multiplicities` is non-null it receives one entry per edge of g.
  template <class Member>
  Int solve(Member&& in, std::vector<Capacity>* multiplicities = nullptr) {
    constexpr std::size_t kSource = 0;
    constexpr std::size_t kSink = 1;
    net_.reset(g_.agent_count() + 2);
    bool any_arc = false;
    arc_ids_.clear();
    for (const auto& a : arcs_) {
      if (a.cap <= 0 || !in(a.u) || !in(a.v)) continue;
      arc_ids_.emplace_back(a.edge, net_.add_arc(a.u + 2, a.v + 2, a.cap, a.w));
      any_arc = true;
    }
    if (multiplicities != nullptr) multiplicities->assign(g_.edges().size(), 0);
    if (!any_arc) return Int{0};
    for (AgentIndex i = 0; i < g_.agent_count(); ++i) {
      if (!in(i) || g_.capacity(i) <= 0) continue;
      if (g_.side(i) == Side::kU) {
        net_.add_arc(kSource, i + 2, g_.capacity(i), Int{0});
      } else {
        net_.add_arc(i + 2, kSink, g_.capacity(i), Int{0});
      }
    }
    Int total = net_.maximize(kSource, kSink);
    if (multiplicities != nullptr) {
      for (const auto& [edge, arc] : arc_ids_) (*multiplicities)[edge] = net_.flow(arc);
    }
    return total;
  }

  Int solve_mask(CoalitionMask mask) {
    return solve([mask](AgentIndex i) { return (mask >> i & 1U) != 0; });
  }

 private:
  struct ArcSpec {
    AgentIndex u;
    AgentIndex v;
    Int w;
    Capacity cap;
    std::size_t edge;
  };

  const GameInstance& g_;
  std::vector<ArcSpec> arcs_;
  std::vector<std::pair<std::size_t, std::size_t>> arc_ids_;
  GainNetwork<Int> net_;
};

}  // namespace detail

/// Maximum-weight b-matching of the whole instance. Multiplicities are
/// integral; zero-weight edges are never used.
inline BMatching max_weight_b_matching(const GameInstance& g) {
  const auto weights = detail::edge_weights(g);
  const ScaledValues w = scale_to_integers(weights);
  const bool small = detail::small_magnitude(detail::matching_magnitude_bound(g, w));
  return detail::with_integer_type(small, [&](auto tag) {
    using Int = decltype(tag);
    detail::CoalitionSolver<Int> solver(g, w.scaled);
    BMatching m;
    const Int total = solver.solve([](AgentIndex) { return true; }, &m.multiplicities);
    m.total_weight = Rational(detail::to_big(total), w.scale);
    return m;
  });
}

/// Greedy on stars: heaviest edges first (ties by leaf order), each leaf up
/// to its capacity, until the center's capacity is used up.
inline BMatching greedy_star_matching(const GameInstance& g) {
  const AgentIndex center = require_star(g);
  std::vector<std::size_t> order;
  for (std::size_t k = 0; k < g.edges().size(); ++k) {
    if (g.edges()[k].w > 0) order.push_back(k);
  }
  // Edges are unique per leaf, so sorting edges sorts leaves.
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const auto leaf = [&](std::size_t k) {
      const auto& e = g.edges()[k];
      return e.u == center ? e.v : e.u;
    };
    if (g.edges()[a].w != g.edges()[b].w) return g.edges()[a].w > g.edges()[b].w;
    return leaf(a) < leaf(b);
  });
  BMatching m;
  m.multiplicities.assign(g.edges().size(), 0);
  Capacity remaining = g.capacity(center);
  for (const auto k : order) {
    if (remaining == 0) break;
    const auto& e = g.edges()[k];
    const AgentIndex leaf = e.u == center ? e.v : e.u;
    const Capacity take = std::min(g.capacity(leaf), remaining);
    m.multiplicities[k] = take;
    m.total_weight += e.w * take;
    remaining -= take;
  }
  return m;
}

/// Exhaustive enumeration of every capacity-feasible multiplicity vector.
/// Test oracle; refuses instances whose u-side capacity exceeds the guard.
inline BMatching brute_force_matching(const GameInstance& g, Capacity max_u_capacity = 16) {
  Capacity u_total = 0;
  for (AgentIndex i = 0; i < g.u_side().size(); ++i) u_total += g.capacity(i);
  if (u_total > max_u_capacity) {
    throw Error(ErrorKind::kGuard, "total u-side capacity " + std::to_string(u_total) +
                                       " exceeds brute-force limit " +
                                       std::to_string(max_u_capacity));
  }
  const auto weights = detail::edge_weights(g);
  const ScaledValues w = scale_to_integers(weights);
  const bool small = detail::small_magnitude(detail::matching_magnitude_bound(g, w));
  return detail::with_integer_type(small, [&](auto tag) {
    using Int = decltype(tag);
    std::vector<Int> weight;
    for (const auto& v : w.scaled) weight.push_back(detail::from_big<Int>(v));
    std::vector<Capacity> residual(g.agent_count());
    for (AgentIndex i = 0; i < g.agent_count(); ++i) residual[i] = g.capacity(i);
    std::vector<Capacity> current(g.edges().size(), 0);
    std::vector<Capacity> best_x(g.edges().size(), 0);
    Int best = 0;
    Int value = 0;
    const auto& edges = g.edges();
    auto dfs = [&](auto&& self, std::size_t k) -> void {
      if (k == edges.size()) {
        if (value > best) {
          best = value;
          best_x = current;
        }
        return;
      }
      const auto& e = edges[k];
      const Capacity most = std::min(residual[e.u], residual[e.v]);
      for (Capacity x = 0; x <= most; ++x) {
        current[k] = x;
        residual[e.u] -= x;
        residual[e.v] -= x;
        value += weight[k] * x;
        self(self, k + 1);
        value -= weight[k] * x;
        residual[e.u] += x;
        residual[e.v] += x;
      }
      current[k] = 0;
    };
    dfs(dfs, 0);
    BMatching m;
    m.multiplicities = std::move(best_x);
    m.total_weight = Rational(detail::to_big(best), w.scale);
    return m;
  });
}

}  // namespace bmgame

#endif  // BMGAME_TRANSPORT_SOLVER_HPP

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


// Shared fixtures and hand-rolled random generators for the test suites.

#ifndef BMGAME_TESTS_SUPPORT_HPP
#define BMGAME_TESTS_SUPPORT_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "bmgame/bmgame.hpp"

namespace bmgame::testing {

using Caps = std::map<std::string, Capacity, std::less<>>;

inline Rational R(long long n, long long d = 1) { return Rational(n, d); }

/// u(b=2); v1(w=3, b=1); v2(w=2, b=2).
inline GameInstance star_a() {
  return GameInstance({"u"}, {"v1", "v2"}, Caps{{"u", 2}, {"v1", 1}, {"v2", 2}},
                      {{"u", "v1", R(3)}, {"u", "v2", R(2)}});
}

inline KnapsackInstance worked_knapsack(long long goal) {
  return KnapsackInstance{{{BigInt(2), BigInt(3)}, {BigInt(1), BigInt(4)}}, BigInt(2), BigInt(goal)};
}

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  long long range(long long lo, long long hi) {
    return std::uniform_int_distribution<long long>(lo, hi)(rng_);
  }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }
  std::mt19937_64& engine() { return rng_; }

  /// Random bipartite instance; weights are integers unless `fractional`.
  GameInstance bipartite(int max_u, int max_v, Capacity max_cap, long long max_w,
                         double edge_p = 0.6, bool fractional = false, int min_side = 1) {
    const int nu = static_cast<int>(range(min_side, max_u));
    const int nv = static_cast<int>(range(min_side, max_v));
    std::vector<std::string> us, vs;
    Caps caps;
    for (int i = 0; i < nu; ++i) {
      us.push_back("u" + std::to_string(i + 1));
      caps[us.back()] = range(0, max_cap);
    }
    for (int j = 0; j < nv; ++j) {
      vs.push_back("v" + std::to_string(j + 1));
      caps[vs.back()] = range(0, max_cap);
    }
    std::vector<EdgeSpec> edges;
    for (const auto& u : us) {
      for (const auto& v : vs) {
        if (!coin(edge_p)) continue;
        Rational w = fractional ? Rational(range(0, max_w * 6), range(1, 6)) : R(range(0, max_w));
        edges.push_back({u, v, w});
      }
    }
    return GameInstance(us, vs, caps, edges);
  }

  /// Star with center "u" on the u side and leaves "v1".."vn".
  GameInstance star(int min_leaves, int max_leaves, Capacity max_cap, long long max_w,
                    Capacity min_cap = 0) {
    const int n = static_cast<int>(range(min_leaves, max_leaves));
    std::vector<std::string> vs;
    Caps caps{{"u", range(min_cap, max_cap)}};
    std::vector<EdgeSpec> edges;
    for (int j = 0; j < n; ++j) {
      vs.push_back("v" + std::to_string(j + 1));
      caps[vs.back()] = range(min_cap, max_cap);
      edges.push_back({"u", vs.back(), R(range(0, max_w))});
    }
    return GameInstance({"u"}, vs, caps, edges);
  }

  /// Random nonnegative split of `total` over the agents with denominators up to `den`.
  PayoffVector imputation(const GameInstance& g, const Rational& total, int den = 4) {
    PayoffVector p;
    const auto n = g.agent_count();
    if (n == 0) return p;
    std::vector<Rational> raw(n);
    Rational sum = 0;
    for (auto& r : raw) {
      r = coin(0.2) ? R(0) : R(range(1, 8 * den), den);
      sum += r;
    }
    for (std::size_t i = 0; i < n; ++i) {
      Rational share;
      if (sum == 0) {
        share = i == 0 ? total : R(0);
      } else {
        share = total * raw[i] / sum;
      }
      p.set(g.id(i), share);
    }
    return p;
  }

  PayoffVector profit_share(const GameInstance& g, long long max_v, int den = 2) {
    PayoffVector p;
    for (const auto& id : g.agents()) p.set(id, R(range(0, max_v * den), den));
    return p;
  }

 private:
  std::mt19937_64 rng_;
};

/// Test-side oracle: tries every multiplicity vector on the induced subgraph,
/// in plain Rational arithmetic.
inline Rational oracle_worth(const GameInstance& g, const Coalition& s) {
  const auto in = membership(g, s);
  std::vector<const Edge*> edges;
  for (const auto& e : g.edges()) {
    if (in[e.u] && in[e.v]) edges.push_back(&e);
  }
  std::vector<Capacity> left(g.agent_count());
  for (AgentIndex i = 0; i < g.agent_count(); ++i) left[i] = g.capacity(i);
  Rational best = 0;
  auto go = [&](auto&& self, std::size_t k, const Rational& acc) -> void {
    if (k == edges.size()) {
      if (acc > best) best = acc;
      return;
    }
    const Edge& e = *edges[k];
    const Capacity top = std::min(left[e.u], left[e.v]);
    for (Capacity x = 0; x <= top; ++x) {
      left[e.u] -= x;
      left[e.v] -= x;
      self(self, k + 1, acc + e.w * x);
      left[e.u] += x;
      left[e.v] += x;
    }
  };
  go(go, 0, Rational(0));
  return best;
}

inline Rational oracle_worth(const GameInstance& g) { return oracle_worth(g, grand_coalition(g)); }

/// Test-side oracle: max over all coalitions of nu(S) - p(S), with the
/// empty coalition contributing 0.
inline Rational oracle_max_deficit(const GameInstance& g, const PayoffVector& p) {
  Rational best = 0;
  const CoalitionMask full = (CoalitionMask{1} << g.agent_count()) - 1;
  for (CoalitionMask m = 1; m <= full; ++m) {
    const Coalition s = from_mask(g, m);
    const Rational d = oracle_worth(g, s) - payoff_sum(p, s);
    if (d > best) best = d;
  }
  return best;
}

}  // namespace bmgame::testing

#endif  // BMGAME_TESTS_SUPPORT_HPP

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

// Core analysis specialised to star graphs.
//
// On a star an imputation is in the core iff no leaf is paid more than its
// marginal utility. Under general profit shares the search for an unstable
// coalition is knapsack-like; star_max_deficit_with_center solves it with a
// pseudo-polynomial DP over (leaf, units of center capacity consumed).

#ifndef BMGAME_STAR_ANALYSIS_HPP
#define BMGAME_STAR_ANALYSIS_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "bmgame/game.hpp"
#include "bmgame/instance.hpp"

namespace bmgame {

/// Core test for imputations on stars: compares each leaf's payoff with its
/// marginal utility. A violating leaf v yields the witness N \ {v}, whose
/// deficit is p(v) - mu(v); the largest such deficit is reported (ties by
/// leaf order).
inline CoreVerdict check_core_star(const GameInstance& g, const PayoffVector& p) {
  const AgentIndex center = require_star(g);
  (void)aligned_payoffs(g, p);
  const Rational total = grand_worth(g);
  if (!is_imputation(g, p)) {
    throw Error(ErrorKind::kNotImputation,
                "payoffs do not sum to nu(N) = " + format_rational(total));
  }
  CoreVerdict verdict;
  std::optional<AgentIndex> worst;
  Rational worst_excess = 0;
  for (const AgentIndex leaf : star_leaves(g, center)) {
    const Rational excess = p.at(g.id(leaf)) - marginal_utility(g, g.id(leaf));
    if (excess > worst_excess) {
      worst_excess = excess;
      worst = leaf;
    }
  }
  if (worst) {
    std::vector<std::string> rest;
    for (AgentIndex i = 0; i < g.agent_count(); ++i) {
      if (i != *worst) rest.push_back(g.id(i));
    }
    verdict.in_core = false;
    verdict.witness = UnstableWitness{Coalition(std::move(rest)), worst_excess};
  }
  return verdict;
}

struct DiminishingViolation {
  Coalition base;       // S, contains the center
  std::string added;    // v
  std::string other;    // v'
  Rational gain_alone;  // nu(S + v) - nu(S)
  Rational gain_with;   // nu(S + v + v') - nu(S + v')
};

struct DiminishingMarginalsResult {
  bool holds = true;
  bool exhaustive = false;
  std::size_t triples_checked = 0;
  std::optional<DiminishingViolation> violation;
};

inline constexpr std::size_t kExhaustiveTripleLimit = 4096;

/// Checks nu(S+v) - nu(S) >= nu(S+v+v') - nu(S+v') for triples with the
/// center in S and distinct leaves v, v' outside S. All triples are checked
/// when there are at most 4096 of them; otherwise `trials` random ones.
inline DiminishingMarginalsResult verify_diminishing_marginals(const GameInstance& g,
                                                               std::size_t trials,
                                                               std::uint64_t seed = 0) {
  const AgentIndex center = require_star(g);
  const auto leaves = star_leaves(g, center);
  const std::size_t l = leaves.size();
  DiminishingMarginalsResult result;
  if (l < 2) {
    result.exhaustive = true;
    return result;
  }

  // Triple count l(l-1)2^(l-2); compare in floating point to avoid overflow.
  const double count = static_cast<double>(l) * static_cast<double>(l - 1) *
                       std::ldexp(1.0, static_cast<int>(l) - 2);
  result.exhaustive = count <= static_cast<double>(kExhaustiveTripleLimit);

  auto coalition_of = [&](const std::vector<bool>& chosen) {
    std::vector<std::string> ids{g.id(center)};
    for (std::size_t j = 0; j < l; ++j) {
      if (chosen[j]) ids.push_back(g.id(leaves[j]));
    }
    return Coalition(std::move(ids));
  };

  auto check = [&](std::vector<bool> chosen, std::size_t a, std::size_t b) {
    ++result.triples_checked;
    const Rational base = worth(g, coalition_of(chosen));
    chosen[a] = true;
    const Rational with_a = worth(g, coalition_of(chosen));
    chosen[b] = true;
    const Rational with_both = worth(g, coalition_of(chosen));
    chosen[a] = false;
    const Rational with_b = worth(g, coalition_of(chosen));
    chosen[b] = false;
    const Rational alone = with_a - base;
    const Rational together = with_both - with_b;
    if (alone < together) {
      result.holds = false;
      result.violation = DiminishingViolation{coalition_of(chosen), g.id(leaves[a]),
                                              g.id(leaves[b]), alone, together};
      return false;
    }
    return true;
  };

  if (result.exhaustive) {
    for (std::size_t a = 0; a < l; ++a) {
      for (std::size_t b = 0; b < l; ++b) {
        if (a == b) continue;
        const std::size_t rest = l - 2;
        for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << rest); ++bits) {
          std::vector<bool> chosen(l, false);
          std::size_t pos = 0;
          for (std::size_t j = 0; j < l; ++j) {
            if (j == a || j == b) continue;
            chosen[j] = (bits >> pos++ & 1U) != 0;
          }
          if (!check(std::move(chosen), a, b)) return result;
        }
      }
    }
    return result;
  }

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, l - 1);
  std::bernoulli_distribution coin(0.5);
  for (std::size_t t = 0; t < trials; ++t) {
    const std::size_t a = pick(rng);
    std::size_t b = pick(rng);
    while (b == a) b = pick(rng);
    std::vector<bool> chosen(l, false);
    for (std::size_t j = 0; j < l; ++j) {
      if (j != a && j != b) chosen[j] = coin(rng);
    }
    if (!check(std::move(chosen), a, b)) return result;
  }
  return result;
}

inline constexpr std::size_t kStarDpBudget = 1'000'000;

/// Maximum of nu(S) - p(S) over coalitions S containing the center, by DP.
/// Requires integral weights and payoffs. Leaves are taken heaviest first
/// (ties by agent order), each consuming min(b(v), remaining) units of the
/// center's capacity, which reproduces the greedy star matching of S.
inline DeficitResult star_max_deficit_with_center(const GameInstance& g, const PayoffVector& p,
                                                  std::size_t budget = kStarDpBudget) {
  const AgentIndex center = require_star(g);
  const auto payoffs = aligned_payoffs(g, p);
  const auto leaves = star_leaves(g, center);

  std::vector<Rational> leaf_weight(g.agent_count(), Rational(0));
  for (const auto& e : g.edges()) leaf_weight[e.u == center ? e.v : e.u] = e.w;
  for (AgentIndex i = 0; i < g.agent_count(); ++i) {
    if (!is_integral(leaf_weight[i]) || !is_integral(payoffs[i])) {
      throw Error(ErrorKind::kInvalid,
                  "star DP needs integer weights and payoffs (agent \"" + g.id(i) + "\")");
    }
  }
  const auto units = static_cast<std::size_t>(g.capacity(center));
  if (static_cast<double>(leaves.size() + 1) * static_cast<double>(units + 1) >
      static_cast<double>(budget)) {
    throw Error(ErrorKind::kGuard, "star DP state space (leaves+1)*(b(center)+1) exceeds " +
                                       std::to_string(budget));
  }

  std::vector<AgentIndex> order = leaves;
  std::stable_sort(order.begin(), order.end(), [&](AgentIndex a, AgentIndex b) {
    return leaf_weight[a] > leaf_weight[b];
  });

  BigInt bound = 0;
  for (AgentIndex i = 0; i < g.agent_count(); ++i) {
    bound += numerator_of(leaf_weight[i]) * (units + 1) + numerator_of(payoffs[i]);
  }

  return detail::with_integer_type(detail::small_magnitude(bound), [&](auto tag) {
    using Int = decltype(tag);
    const std::size_t l = order.size();
    const std::size_t width = units + 1;
    std::vector<Int> value((l + 1) * width, Int{0});
    std::vector<bool> reached((l + 1) * width, false);
    std::vector<std::size_t> from((l + 1) * width, 0);
    std::vector<bool> took((l + 1) * width, false);
    reached[0] = true;
    for (std::size_t i = 0; i < l; ++i) {
      const AgentIndex leaf = order[i];
      const Int w = detail::from_big<Int>(numerator_of(leaf_weight[leaf]));
      const Int pay = detail::from_big<Int>(numerator_of(payoffs[leaf]));
      const std::size_t row = i * width;
      const std::size_t next = (i + 1) * width;
      for (std::size_t k = 0; k < width; ++k) {
        if (!reached[row + k]) continue;
        reached[next + k] = true;
        value[next + k] = value[row + k];
        from[next + k] = k;
        took[next + k] = false;
      }
      for (std::size_t k = 0; k < width; ++k) {
        if (!reached[row + k]) continue;
        const auto t = std::min<std::size_t>(static_cast<std::size_t>(g.capacity(leaf)),
                                             units - k);
        const std::size_t to = k + t;
        Int candidate = value[row + k] + w * static_cast<std::int64_t>(t) - pay;
        if (!reached[next + to] || candidate > value[next + to]) {
          reached[next + to] = true;
          value[next + to] = std::move(candidate);
          from[next + to] = k;
          took[next + to] = true;
        }
      }
    }
    std::size_t best_k = 0;
    for (std::size_t k = 1; k < width; ++k) {
      const std::size_t at = l * width + k;
      if (reached[at] && (!reached[l * width + best_k] || value[at] > value[l * width + best_k])) {
        best_k = k;
      }
    }
    std::vector<std::string> members{g.id(center)};
    std::size_t k = best_k;
    for (std::size_t i = l; i > 0; --i) {
      const std::size_t at = i * width + k;
      if (took[at]) members.push_back(g.id(order[i - 1]));
      k = from[at];
    }
    const BigInt best = detail::to_big(value[l * width + best_k]) - numerator_of(payoffs[center]);
    return DeficitResult{Coalition(std::move(members)), Rational(best)};
  });
}

/// A coalition with strictly positive deficit, or nullopt when none exists.
/// Coalitions without the center have worth 0 and never qualify.
inline std::optional<DeficitResult> star_unstable_coalition_dp(
    const GameInstance& g, const PayoffVector& p, std::size_t budget = kStarDpBudget) {
  auto best = star_max_deficit_with_center(g, p, budget);
  if (best.deficit > 0) return best;
  return std::nullopt;
}

}  // namespace bmgame

#endif  // BMGAME_STAR_ANALYSIS_HPP

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

// The transportation game: characteristic function, imputations, marginal
// utilities and exhaustive core analysis.

#ifndef BMGAME_GAME_HPP
#define BMGAME_GAME_HPP

#include <optional>
#include <string>
#include <string_view>
#include <type_traits>
#include <variant>
#include <vector>

#include "bmgame/instance.hpp"
#include "bmgame/transport_solver.hpp"

namespace bmgame {

inline constexpr std::size_t kDefaultMaxAgents = 24;

/// nu(S): weight of a maximum-weight b-matching on the sub-instance induced
/// by S. nu of the empty coalition is 0.
inline Rational worth(const GameInstance& g, const Coalition& s) {
  if (s.empty()) {
    return 0;
  }
  return max_weight_b_matching(restrict(g, s)).total_weight;
}

inline Rational grand_worth(const GameInstance& g) {
  return max_weight_b_matching(g).total_weight;
}

/// True iff p is defined on exactly the agents of g, nonnegative, and sums
/// to nu(N).
inline bool is_imputation(const GameInstance& g, const PayoffVector& p) {
  if (p.size() != g.agent_count()) return false;
  Rational total = 0;
  for (const auto& id : g.agents()) {
    if (!p.contains(id) || p.at(id) < 0) return false;
    total += p.at(id);
  }
  return total == grand_worth(g);
}

/// mu(i) = nu(N) - nu(N \ {i}).
inline Rational marginal_utility(const GameInstance& g, std::string_view agent) {
  const AgentIndex skip = g.index_of(agent);
  std::vector<std::string> others;
  for (AgentIndex i = 0; i < g.agent_count(); ++i) {
    if (i != skip) others.push_back(g.id(i));
  }
  return grand_worth(g) - worth(g, Coalition(std::move(others)));
}

struct UnstableWitness {
  Coalition coalition;
  Rational deficit;  // nu(S) - p(S) > 0
};

struct CoreVerdict {
  bool in_core = true;
  std::optional<UnstableWitness> witness;
};

struct DeficitResult {
  Coalition coalition;
  Rational deficit;
};

namespace detail {

inline void check_agent_guard(const GameInstance& g, std::size_t max_agents) {
  const std::size_t limit = std::min(max_agents, kMaxMaskAgents);
  if (g.agent_count() > limit) {
    throw Error(ErrorKind::kGuard, std::to_string(g.agent_count()) +
                                       " agents; coalition enumeration is limited to " +
                                       std::to_string(limit));
  }
}

/// Visits nu(S) - p(S) for every coalition in increasing bitmask order, as
/// an integer scaled by the returned factor. visit(mask, deficit) returns
/// false to stop early.
template <class Visit>
BigInt enumerate_deficits(const GameInstance& g, const std::vector<Rational>& payoffs,
                          Visit&& visit) {
  std::vector<Rational> values = edge_weights(g);
  const std::size_t m = values.size();
  values.insert(values.end(), payoffs.begin(), payoffs.end());
  ScaledValues scaled = scale_to_integers(values);
  std::vector<BigInt> weights(scaled.scaled.begin(), scaled.scaled.begin() + m);
  BigInt bound = matching_magnitude_bound(g, ScaledValues{scaled.scale, weights});
  for (std::size_t i = m; i < scaled.scaled.size(); ++i) bound += scaled.scaled[i];

  with_integer_type(small_magnitude(bound), [&](auto tag) {
    using Int = decltype(tag);
    CoalitionSolver<Int> solver(g, weights);
    std::vector<Int> pay;
    for (std::size_t i = m; i < scaled.scaled.size(); ++i) {
      pay.push_back(from_big<Int>(scaled.scaled[i]));
    }
    const std::size_t n = g.agent_count();
    const CoalitionMask end = CoalitionMask{1} << n;
    for (CoalitionMask mask = 0; mask < end; ++mask) {
      Int d = solver.solve_mask(mask);
      for (CoalitionMask rest = mask; rest != 0; rest &= rest - 1) {
        d -= pay[static_cast<std::size_t>(__builtin_ctzll(rest))];
      }
      if (!visit(mask, static_cast<const Int&>(d))) break;
    }
    return 0;
  });
  return scaled.scale;
}

}  // namespace detail

/// nu(S) for every coalition S, indexed by bitmask.
inline std::vector<Rational> coalition_worths(const GameInstance& g,
                                              std::size_t max_agents = kDefaultMaxAgents) {
  detail::check_agent_guard(g, max_agents);
  std::vector<Rational> out;
  out.reserve(std::size_t{1} << g.agent_count());
  const std::vector<Rational> zero(g.agent_count(), Rational(0));
  const BigInt scale = detail::enumerate_deficits(g, zero, [&](CoalitionMask, const auto& d) {
    out.emplace_back(detail::to_big(d));
    return true;
  });
  for (auto& v : out) v /= scale;
  return out;
}

/// argmax and max of nu(S) - p(S) over all coalitions, the empty one
/// included (deficit 0). Ties go to the smallest bitmask.
inline DeficitResult max_deficit(const GameInstance& g, const PayoffVector& p,
                                 std::size_t max_agents = kDefaultMaxAgents) {
  detail::check_agent_guard(g, max_agents);
  const auto payoffs = aligned_payoffs(g, p);
  BigInt best = 0;
  CoalitionMask best_mask = 0;
  const BigInt scale = detail::enumerate_deficits(g, payoffs, [&](CoalitionMask mask, const auto& d) {
    if (d > best) {
      best = detail::to_big(d);
      best_mask = mask;
    }
    return true;
  });
  return {from_mask(g, best_mask), Rational(best, scale)};
}

/// Worth of coalitions given as bitmasks, with the integer representation
/// chosen once per instance. Keeps a reference to `g`.
class MaskWorth {
 public:
  explicit MaskWorth(const GameInstance& g) {
    const auto weights = detail::edge_weights(g);
    const ScaledValues w = scale_to_integers(weights);
    scale_ = w.scale;
    if (detail::small_magnitude(detail::matching_magnitude_bound(g, w))) {
      solver_.emplace<1>(g, w.scaled);
    } else {
      solver_.emplace<2>(g, w.scaled);
    }
  }

  /// nu(S); fills the solver's witness multiplicities when requested.
  Rational operator()(CoalitionMask mask, std::vector<Capacity>* multiplicities = nullptr) {
    return std::visit(
        [&](auto& solver) -> Rational {
          if constexpr (std::is_same_v<std::decay_t<decltype(solver)>, std::monostate>) {
            return Rational(0);
          } else {
              const auto v = solver.solve([mask](AgentIndex i) { return (mask >> i & 1U) != 0; },
                                        multiplicities);
            return Rational(detail::to_big(v), scale_);
          }
        },
        solver_);
  }

 private:
  BigInt scale_ = 1;
  std::variant<std::monostate, detail::CoalitionSolver<std::int64_t>,
               detail::CoalitionSolver<BigInt>>
      solver_;
};

/// Smallest-bitmask coalition with p(S) < nu(S), stopping at the first one.
inline std::optional<CoalitionMask> first_unstable_coalition(
    const GameInstance& g, const PayoffVector& p, std::size_t max_agents = kDefaultMaxAgents) {
  detail::check_agent_guard(g, max_agents);
  std::optional<CoalitionMask> found;
  detail::enumerate_deficits(g, aligned_payoffs(g, p), [&](CoalitionMask mask, const auto& d) {
    if (d > 0) {
      found = mask;
      return false;
    }
    return true;
  });
  return found;
}

struct CoreCheckOptions {
  // Accept profit shares that do not sum to nu(N).
  bool allow_profit_share = false;
  std::size_t max_agents = kDefaultMaxAgents;
};

/// Exhaustive core test. The witness, when present, is a maximum-deficit
/// coalition.
inline CoreVerdict check_core_bruteforce(const GameInstance& g, const PayoffVector& p,
                                         const CoreCheckOptions& options = {}) {
  detail::check_agent_guard(g, options.max_agents);
  (void)aligned_payoffs(g, p);
  if (!options.allow_profit_share && !is_imputation(g, p)) {
    throw Error(ErrorKind::kNotImputation,
                "payoffs do not sum to nu(N) = " + format_rational(grand_worth(g)));
  }
  auto [coalition, deficit] = max_deficit(g, p, options.max_agents);
  CoreVerdict verdict;
  if (deficit > 0) {
    verdict.in_core = false;
    verdict.witness = UnstableWitness{std::move(coalition), std::move(deficit)};
  }
  return verdict;
}

}  // namespace bmgame

#endif  // BMGAME_GAME_HPP

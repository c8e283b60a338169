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


#include <gtest/gtest.h>

#include "support.hpp"

namespace bmgame {
namespace {

using testing::Caps;
using testing::R;

Rational weight(const GameInstance& g, const std::string& a, const std::string& b) {
  const auto k = g.edge_between(g.index_of(a), g.index_of(b));
  return k ? g.edges()[*k].w : Rational(-1);
}

void expect_check(const ReductionReport& r, const std::string& name, const Rational& expected,
                  const Rational& actual) {
  const auto* c = r.find(name);
  ASSERT_NE(c, nullptr) << name;
  EXPECT_EQ(c->expected, expected) << name;
  EXPECT_EQ(c->actual, actual) << name;
}

std::string failures(const ReductionReport& r) {
  std::string out;
  for (const auto& c : r.checks) {
    if (!c.pass) {
      out += c.name + ": expected " + format_rational(c.expected) + ", got " +
             format_rational(c.actual) + "\n";
    }
  }
  return out;
}

TEST(KnapsackToStar, WorkedExample) {
  const auto [g, p] = knapsack_to_star(testing::worked_knapsack(3));
  EXPECT_EQ(g.u_side(), (std::vector<std::string>{"u"}));
  EXPECT_EQ(g.v_side(), (std::vector<std::string>{"v1", "v2"}));
  EXPECT_EQ(g.capacity("u"), 2);
  EXPECT_EQ(g.capacity("v1"), 2);
  EXPECT_EQ(g.capacity("v2"), 1);
  EXPECT_EQ(weight(g, "u", "v1"), R(4));
  EXPECT_EQ(weight(g, "u", "v2"), R(5));
  EXPECT_EQ(p, (PayoffVector{{"u", R(3)}, {"v1", R(5)}, {"v2", R(1)}}));
  EXPECT_EQ(g.provenance().at("reduction"), "knapsack-to-star");
  EXPECT_EQ(parse_instance(serialize_instance(g)), g);
}

TEST(KnapsackToStar, EmptyItemList) {
  const auto [g, p] = knapsack_to_star(KnapsackInstance{{}, 5, 0});
  EXPECT_EQ(g.agent_count(), 1U);
  EXPECT_FALSE(star_unstable_coalition_dp(g, p));
  EXPECT_FALSE(solve_knapsack(KnapsackInstance{{}, 5, 0}).yes);
}

TEST(KnapsackToStar, SingleZeroValueItem) {
  const KnapsackInstance k{{{1, 0}}, 1, 0};
  const auto [g, p] = knapsack_to_star(k);
  EXPECT_EQ(weight(g, "u", "v1"), R(1));
  EXPECT_EQ(p.at("v1"), R(1));
  EXPECT_EQ(p.at("u"), R(0));
  EXPECT_EQ(worth(g, Coalition{"u", "v1"}), R(1));
  EXPECT_EQ(testing::oracle_max_deficit(g, p), R(0));
  EXPECT_FALSE(solve_knapsack(k).yes);
}

TEST(FullyMatchedLemmas, WorkedStar) {
  const auto [g, p] = knapsack_to_star(testing::worked_knapsack(3));
  // S = {u, v2}: nu = 5, p = 4, sum a - A = 1.
  EXPECT_EQ(worth(g, Coalition{"u", "v2"}), R(5));
  EXPECT_EQ(payoff_sum(p, Coalition{"u", "v2"}), R(4));
  // S = {u, v1}: both units of v1 used, nu = 8 = p.
  EXPECT_EQ(worth(g, Coalition{"u", "v1"}), R(8));
  EXPECT_EQ(payoff_sum(p, Coalition{"u", "v1"}), R(8));
  // S = N: v1 cannot be saturated; dropping it raises the deficit.
  const Rational full = worth(g, grand_coalition(g)) - payoff_sum(p, grand_coalition(g));
  EXPECT_LE(full, R(1) - 1);

  const auto report = verify_fully_matched_lemmas(g, p);
  EXPECT_TRUE(report.passed()) << failures(report);
  expect_check(report, "max deficit = max(0, best knapsack value - A)", R(1), R(1));
  expect_check(report, "construction matches the source knapsack", R(1), R(1));
}

TEST(FullyMatchedLemmas, RandomKnapsacks) {
  testing::Gen gen(51);
  for (int t = 0; t < 60; ++t) {
    KnapsackInstance k;
    const int n = static_cast<int>(gen.range(0, 5));
    for (int i = 0; i < n; ++i) k.items.push_back({gen.range(1, 3), gen.range(0, 4)});
    k.capacity = gen.range(0, 6);
    k.goal = gen.range(0, 12);
    const auto [g, p] = knapsack_to_star(k);
    const auto report = verify_fully_matched_lemmas(g, p);
    ASSERT_TRUE(report.passed()) << serialize_knapsack(k) << failures(report);
  }
}

TEST(FullyMatchedLemmas, RejectsNonReductionStars) {
  EXPECT_THROW((void)verify_fully_matched_lemmas(
                   testing::star_a(), {{"u", R(3)}, {"v1", R(1)}, {"v2", R(1)}}),
               Error);
}

TEST(Gadget, WorkedExample) {
  const auto star = knapsack_to_star(testing::worked_knapsack(3));
  const auto [g, p] = star_to_bipartite_gadget(star.game, star.payoff);
  EXPECT_EQ(weight(g, "x", "v1"), R(7));
  EXPECT_EQ(weight(g, "x", "v2"), R(7));
  EXPECT_EQ(weight(g, "u", "y"), R(4));
  EXPECT_EQ(g.capacity("x"), 3);
  EXPECT_EQ(g.capacity("y"), 2);
  EXPECT_EQ(p.at("x"), R(15));
  EXPECT_EQ(p.at("y"), R(5));
  EXPECT_EQ(payoff_sum(p, grand_coalition(g)), R(29));
  const auto best = max_weight_b_matching(g);
  EXPECT_EQ(best.total_weight, R(29));
  EXPECT_EQ(best.total_weight, testing::oracle_worth(g));
  EXPECT_EQ(testing::oracle_worth(g, Coalition{"u", "y"}), R(8));
  EXPECT_EQ(payoff_sum(p, Coalition{"u", "y"}), R(8));
  EXPECT_EQ(testing::oracle_worth(g, Coalition{"x", "v1", "v2"}), R(21));
  EXPECT_EQ(payoff_sum(p, Coalition{"x", "v1", "v2"}), R(21));

  const auto report = verify_gadget(g, p);
  EXPECT_TRUE(report.passed()) << failures(report);
  expect_check(report, "p({u,y}) = b_u p_u + b_u", R(8), R(8));
  expect_check(report, "nu({x} + leaves) = (sum b_i)(sum p_i + 1)", R(21), R(21));
  expect_check(report, "max deficit: star vs gadget", R(1), R(1));

  const auto worst = max_deficit(g, p);
  EXPECT_EQ(worst.coalition, (Coalition{"u", "v2"}));
  EXPECT_EQ(worst.deficit, R(1));
}

TEST(Gadget, PreconditionsAreEnforced) {
  // Weight 20 >= p(G*) + 2 = 4.
  const GameInstance heavy({"u"}, {"v1"}, Caps{{"u", 1}, {"v1", 1}}, {{"u", "v1", R(20)}});
  EXPECT_THROW((void)star_to_bipartite_gadget(heavy, {{"u", R(1)}, {"v1", R(1)}}), Error);
  const GameInstance lonely({"u"}, {}, Caps{{"u", 1}}, {});
  EXPECT_THROW((void)star_to_bipartite_gadget(lonely, {{"u", R(0)}}), Error);
  // C = 0 with A > 0 gives p_y = -A.
  const auto zero = knapsack_to_star(KnapsackInstance{{{1, 1}}, 0, 2});
  EXPECT_THROW((void)star_to_bipartite_gadget(zero.game, zero.payoff), Error);
}

TEST(Gadget, FreshIdsAvoidCollisions) {
  const GameInstance star({"x"}, {"y"}, Caps{{"x", 1}, {"y", 1}}, {{"x", "y", R(1)}});
  const auto [g, p] = star_to_bipartite_gadget(star, {{"x", R(1)}, {"y", R(0)}});
  EXPECT_EQ(g.agent_count(), 4U);
  EXPECT_TRUE(verify_gadget(g, p, {false, 20}).passed());
  EXPECT_EQ(parse_instance(serialize_instance(g)), g);
}

TEST(PartnerDuplication, WorkedExample) {
  const auto g = testing::star_a();
  const PayoffVector p{{"u", R(3)}, {"v1", R(1)}, {"v2", R(1)}};
  const auto [g2, p2] = partner_duplication(g, p);
  EXPECT_EQ(g2.agent_count(), 6U);
  EXPECT_EQ(weight(g2, "u", "u'"), R(5));
  EXPECT_EQ(weight(g2, "v1'", "v1"), R(7));
  EXPECT_EQ(weight(g2, "v2'", "v2"), R(7));
  EXPECT_EQ(g2.capacity("u"), 3);
  EXPECT_EQ(g2.capacity("v1"), 2);
  EXPECT_EQ(g2.capacity("v2"), 3);
  for (const auto& id : {"u'", "v1'", "v2'"}) EXPECT_EQ(g2.capacity(id), 1);
  for (const auto& id : g2.agents()) EXPECT_EQ(p2.at(id), R(4));
  EXPECT_EQ(grand_worth(g2), R(24));
  EXPECT_EQ(testing::oracle_worth(g2), R(24));
  EXPECT_TRUE(is_imputation(g2, p2));
  EXPECT_EQ(partner_source(g2).game, g);
  EXPECT_EQ(partner_source(g2).payoff, p);
}

TEST(PartnerDuplication, InCoreSourceCanLeaveTheCore) {
  // p is in the core of star A, yet {u, v1, v2, v1', v2'} blocks p': the
  // center keeps all three units on original edges (3 + 2 + 2) while both
  // leaf partners are matched (7 + 7), 21 > 20.
  const auto g = testing::star_a();
  const PayoffVector p{{"u", R(3)}, {"v1", R(1)}, {"v2", R(1)}};
  ASSERT_TRUE(check_core_bruteforce(g, p).in_core);
  const auto [g2, p2] = partner_duplication(g, p);
  const Coalition blocking{"u", "v1", "v2", "v1'", "v2'"};
  EXPECT_EQ(testing::oracle_worth(g2, blocking), R(21));
  EXPECT_EQ(payoff_sum(p2, blocking), R(20));
  EXPECT_FALSE(check_core_bruteforce(g2, p2).in_core);

  const auto report = verify_partner_equivalence(g, p, g2, p2);
  EXPECT_FALSE(report.passed());
  expect_check(report, "core verdicts agree (1 = in core)", R(1), R(0));
  expect_check(report, "p'(G') = nu'(G')", R(24), R(24));
}

TEST(PartnerDuplication, OutOfCoreSourceStaysOut) {
  const auto g = testing::star_a();
  const PayoffVector p{{"u", R(5, 2)}, {"v1", R(3, 2)}, {"v2", R(1)}};
  const auto [g2, p2] = partner_duplication(g, p);
  EXPECT_EQ(g2.provenance().at("p_star"), 4);
  const Coalition doubled{"u", "v2", "u'", "v2'"};
  // nu'(S') = nu(S) + 2|S| p* - p(S) = 4 + 16 - 7/2.
  EXPECT_EQ(testing::oracle_worth(g2, doubled), R(33, 2));
  EXPECT_EQ(payoff_sum(p2, doubled), R(16));
  const auto report = verify_partner_equivalence(g, p, g2, p2);
  EXPECT_TRUE(report.passed()) << failures(report);
}

TEST(PartnerDuplication, SingleEdgeGame) {
  const GameInstance g({"a"}, {"b"}, Caps{{"a", 1}, {"b", 1}}, {{"a", "b", R(6)}});
  for (const auto& p : {PayoffVector{{"a", R(6)}, {"b", R(0)}},
                        PayoffVector{{"a", R(0)}, {"b", R(6)}}}) {
    const auto [g2, p2] = partner_duplication(g, p);
    const auto report = verify_partner_equivalence(g, p, g2, p2);
    EXPECT_TRUE(report.passed()) << failures(report);
  }
}

TEST(PartnerDuplication, RequiresImputation) {
  EXPECT_THROW(
      (void)partner_duplication(testing::star_a(), {{"u", R(1)}, {"v1", R(1)}, {"v2", R(1)}}),
      Error);
}

TEST(Report, SerializesDeterministically) {
  ReductionReport r{"demo", {}};
  r.add("one half", R(1, 2), R(1, 2));
  r.add("mismatch", R(1), R(2));
  EXPECT_FALSE(r.passed());
  const std::string text = serialize_report(r);
  EXPECT_EQ(text, serialize_report(r));
  const Json doc = parse_json(text);
  EXPECT_EQ(doc.at("checks")[0].at("expected"), "1/2");
  EXPECT_EQ(doc.at("passed"), false);
}

}  // namespace
}  // namespace bmgame

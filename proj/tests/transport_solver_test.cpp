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

Capacity multiplicity(const GameInstance& g, const BMatching& m, const std::string& u,
                      const std::string& v) {
  for (std::size_t k = 0; k < g.edges().size(); ++k) {
    const auto& e = g.edges()[k];
    if (g.id(e.u) == u && g.id(e.v) == v) return m.multiplicities[k];
  }
  return -1;
}

TEST(MaxWeightBMatching, StarA) {
  const auto g = testing::star_a();
  const auto m = max_weight_b_matching(g);
  EXPECT_EQ(m.total_weight, R(5));
  EXPECT_EQ(m.total_weight, testing::oracle_worth(g));
  EXPECT_EQ(multiplicity(g, m, "u", "v1"), 1);
  EXPECT_EQ(multiplicity(g, m, "u", "v2"), 1);
  EXPECT_FALSE(b_matching_violation(g, m));
}

TEST(MaxWeightBMatching, TwoUVerticesOneV) {
  const GameInstance g({"u1", "u2"}, {"v1"}, Caps{{"u1", 1}, {"u2", 2}, {"v1", 2}},
                       {{"u1", "v1", R(2)}, {"u2", "v1", R(3)}});
  const auto m = max_weight_b_matching(g);
  EXPECT_EQ(m.total_weight, R(6));
  EXPECT_EQ(m.total_weight, testing::oracle_worth(g));
  EXPECT_EQ(multiplicity(g, m, "u2", "v1"), 2);
  EXPECT_EQ(multiplicity(g, m, "u1", "v1"), 0);
}

TEST(MaxWeightBMatching, AllZeroWeights) {
  const GameInstance g({"a", "b"}, {"c"}, Caps{{"a", 3}, {"b", 1}, {"c", 4}},
                       {{"a", "c", R(0)}, {"b", "c", R(0)}});
  const auto m = max_weight_b_matching(g);
  EXPECT_EQ(m.total_weight, R(0));
  EXPECT_FALSE(b_matching_violation(g, m));
}

TEST(MaxWeightBMatching, NeedsAugmentingReroute) {
  // Greedy on the heavy middle edge is suboptimal; the solver must undo it.
  const GameInstance g({"a", "b"}, {"c", "d"}, Caps{{"a", 1}, {"b", 1}, {"c", 1}, {"d", 1}},
                       {{"a", "c", R(5)}, {"a", "d", R(4)}, {"b", "c", R(4)}});
  EXPECT_EQ(max_weight_b_matching(g).total_weight, R(8));
}

TEST(MaxWeightBMatching, FractionalAndHugeWeights) {
  const GameInstance frac({"a"}, {"b", "c"}, Caps{{"a", 2}, {"b", 1}, {"c", 1}},
                          {{"a", "b", R(1, 3)}, {"a", "c", R(1, 6)}});
  EXPECT_EQ(max_weight_b_matching(frac).total_weight, R(1, 2));
  const BigInt big("1000000000000000000000000000000");
  const GameInstance huge({"a"}, {"b"}, Caps{{"a", 3}, {"b", 2}}, {{"a", "b", Rational(big)}});
  EXPECT_EQ(max_weight_b_matching(huge).total_weight, Rational(big * 2));
}

TEST(MaxWeightBMatching, EmptyAndEdgeless) {
  EXPECT_EQ(max_weight_b_matching(GameInstance({}, {}, {}, {})).total_weight, R(0));
  const GameInstance g({"a"}, {"b"}, Caps{{"a", 1}, {"b", 1}}, {});
  EXPECT_EQ(max_weight_b_matching(g).total_weight, R(0));
}

TEST(MaxWeightBMatching, AgreesWithOracleOnRandomInstances) {
  testing::Gen gen(11);
  for (int k = 0; k < 300; ++k) {
    const auto g = gen.bipartite(3, 3, 3, 10, 0.6, /*fractional=*/k % 3 == 0);
    const auto m = max_weight_b_matching(g);
    ASSERT_FALSE(b_matching_violation(g, m)) << serialize_instance(g);
    ASSERT_EQ(m.total_weight, testing::oracle_worth(g)) << serialize_instance(g);
  }
}

TEST(GreedyStarMatching, Examples) {
  EXPECT_EQ(greedy_star_matching(testing::star_a()).total_weight, R(5));
  const GameInstance closed({"u"}, {"v1", "v2"}, Caps{{"u", 0}, {"v1", 3}, {"v2", 1}},
                            {{"u", "v1", R(9)}, {"u", "v2", R(4)}});
  EXPECT_EQ(greedy_star_matching(closed).total_weight, R(0));
  const GameInstance single({"u"}, {"v1"}, Caps{{"u", 3}, {"v1", 2}}, {{"u", "v1", R(4)}});
  const auto m = greedy_star_matching(single);
  EXPECT_EQ(m.total_weight, R(8));
  EXPECT_EQ(m.multiplicities, (std::vector<Capacity>{2}));
}

TEST(GreedyStarMatching, CenterOnVSide) {
  const GameInstance g({"a", "b"}, {"c"}, Caps{{"a", 1}, {"b", 2}, {"c", 2}},
                       {{"a", "c", R(2)}, {"b", "c", R(3)}});
  EXPECT_EQ(greedy_star_matching(g).total_weight, R(6));
}

TEST(GreedyStarMatching, RejectsNonStars) {
  const GameInstance g({"a", "b"}, {"c", "d"}, Caps{{"a", 1}, {"b", 1}, {"c", 1}, {"d", 1}},
                       {{"a", "c", R(1)}});
  EXPECT_THROW((void)greedy_star_matching(g), Error);
}

TEST(GreedyStarMatching, AgreesWithSolverOnRandomStars) {
  testing::Gen gen(12);
  for (int k = 0; k < 300; ++k) {
    const auto g = gen.star(0, 7, 4, 10);
    const auto greedy = greedy_star_matching(g);
    ASSERT_FALSE(b_matching_violation(g, greedy));
    ASSERT_EQ(greedy.total_weight, max_weight_b_matching(g).total_weight) << serialize_instance(g);
  }
}

TEST(BruteForceMatching, Examples) {
  const GameInstance one({"a"}, {"b"}, Caps{{"a", 1}, {"b", 1}}, {{"a", "b", R(7)}});
  EXPECT_EQ(brute_force_matching(one).total_weight, R(7));
  const GameInstance none({"a"}, {"b"}, Caps{{"a", 1}, {"b", 1}}, {});
  EXPECT_EQ(brute_force_matching(none).total_weight, R(0));
}

TEST(BruteForceMatching, ThreeByThreeAgreesWithSolver) {
  testing::Gen gen(13);
  for (int k = 0; k < 100; ++k) {
    const auto g = gen.bipartite(3, 3, 2, 10, 0.8, false, 3);
    const auto brute = brute_force_matching(g);
    ASSERT_FALSE(b_matching_violation(g, brute));
    ASSERT_EQ(brute.total_weight, max_weight_b_matching(g).total_weight) << serialize_instance(g);
  }
}

TEST(BruteForceMatching, GuardRefusesLargeInstances) {
  const GameInstance g({"a"}, {"b"}, Caps{{"a", 40}, {"b", 40}}, {{"a", "b", R(1)}});
  EXPECT_THROW((void)brute_force_matching(g), Error);
}

}  // namespace
}  // namespace bmgame

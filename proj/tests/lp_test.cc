// Copyright 2026 The ufpath Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ufp/lp.h"

#include <gtest/gtest.h>

#include "brute.h"
#include "fixtures.h"
#include "ufp/errors.h"
#include "ufp/generators.h"

namespace ufp {
namespace {

using testing::Q;

LpProblem Dense(std::vector<Rational> objective,
                std::vector<std::pair<std::vector<Rational>, Rational>> rows) {
  LpProblem lp;
  lp.objective = std::move(objective);
  for (std::size_t v = 0; v < lp.objective.size(); ++v) {
    lp.variable_ids.push_back(static_cast<int>(v));
  }
  for (auto& [coeffs, rhs] : rows) {
    LpRow row;
    row.rhs = rhs;
    for (std::size_t v = 0; v < coeffs.size(); ++v) {
      if (coeffs[v] != 0) row.coeffs.emplace_back(v, coeffs[v]);
    }
    lp.rows.push_back(std::move(row));
  }
  return lp;
}

TEST(SolveLpBasicTest, DuplicateRowsPickBetterVariable) {
  const LpProblem lp = Dense({2, 3}, {{{1, 1}, 1}, {{1, 1}, 1}});
  ASSERT_EQ(brute::VertexMax(lp), Rational(3));
  const BasicSolution s = SolveLpBasic(lp);
  EXPECT_EQ(s.objective, 3);
  EXPECT_EQ(s.values, (std::vector<Rational>{0, 1}));
  EXPECT_EQ(CountFractional(s), 0U);
}

TEST(SolveLpBasicTest, ZeroObjective) {
  const LpProblem lp = Dense({0, 0}, {{{1, 1}, 1}});
  const BasicSolution s = SolveLpBasic(lp);
  EXPECT_EQ(s.objective, 0);
  EXPECT_TRUE(SatisfiesConstraints(lp, s.values));
}

TEST(SolveLpBasicTest, OneFractionalEntry) {
  const LpProblem lp = Dense({1, 1}, {{{1, 1}, Q("3/2")}, {{1, 0}, 1}, {{0, 1}, 1}});
  ASSERT_EQ(brute::VertexMax(lp), Q("3/2"));
  const BasicSolution s = SolveLpBasic(lp);
  EXPECT_EQ(s.objective, Q("3/2"));
  EXPECT_EQ(CountFractional(s), 1U);
  EXPECT_TRUE(SatisfiesConstraints(lp, s.values));
}

TEST(CountFractionalTest, Examples) {
  BasicSolution s;
  s.values = {0, 1};
  EXPECT_EQ(CountFractional(s), 0U);
  s.values = {Q("1/2"), 1};
  EXPECT_EQ(CountFractional(s), 1U);
}

TEST(SolveLpBasicTest, MatchesVertexEnumeration) {
  SplitMix64 rng(99);
  for (int round = 0; round < 300; ++round) {
    const int n = static_cast<int>(rng.Uniform(1, 3));
    const int extra = static_cast<int>(rng.Uniform(0, 3));
    std::vector<Rational> objective;
    for (int j = 0; j < n; ++j) objective.push_back(static_cast<long>(rng.Uniform(-3, 6)));
    std::vector<std::pair<std::vector<Rational>, Rational>> rows;
    for (int j = 0; j < n; ++j) {
      std::vector<Rational> box(n, Rational(0));
      box[j] = 1;
      rows.emplace_back(box, Rational(static_cast<long>(rng.Uniform(1, 4))));
    }
    for (int r = 0; r < extra; ++r) {
      std::vector<Rational> c;
      for (int j = 0; j < n; ++j) {
        c.push_back(testing::Frac(static_cast<long>(rng.Uniform(-2, 4)),
                                  static_cast<unsigned long>(rng.Uniform(1, 3))));
      }
      rows.emplace_back(c, Rational(static_cast<long>(rng.Uniform(-2, 6))));
    }
    const LpProblem lp = Dense(objective, rows);
    const std::optional<Rational> best = brute::VertexMax(lp);
    if (!best) {
      EXPECT_THROW(SolveLpBasic(lp), LpInfeasibleError) << "round " << round;
      continue;
    }
    const BasicSolution s = SolveLpBasic(lp);
    EXPECT_EQ(s.objective, *best) << "round " << round;
    EXPECT_TRUE(SatisfiesConstraints(lp, s.values));
  }
}

TEST(SolveLpBasicTest, UnboundedAndInfeasible) {
  EXPECT_THROW(SolveLpBasic(Dense({1}, {})), LpUnboundedError);
  EXPECT_THROW(SolveLpBasic(Dense({1}, {{{1}, -1}})), LpInfeasibleError);
}

TEST(SolveLpBasicTest, NegativeRhsNeedsPhaseOne) {
  // x + y >= 1 written as -x - y <= -1, with x, y <= 1; min x + 2y.
  const LpProblem lp =
      Dense({-1, -2}, {{{-1, -1}, -1}, {{1, 0}, 1}, {{0, 1}, 1}});
  const BasicSolution s = SolveLpBasic(lp);
  EXPECT_EQ(s.objective, -1);
  EXPECT_EQ(s.values, (std::vector<Rational>{1, 0}));
}

TEST(SolveLpBasicTest, BealeCyclingExampleTerminates) {
  const LpProblem lp = Dense(
      {Q("3/4"), -150, Q("1/50"), -6},
      {{{Q("1/4"), -60, Q("-1/25"), 9}, 0},
       {{Q("1/2"), -90, Q("-1/50"), 3}, 0},
       {{0, 0, 1, 0}, 1}});
  ASSERT_EQ(brute::VertexMax(lp), Q("1/20"));
  const BasicSolution s = SolveLpBasic(lp);
  EXPECT_EQ(s.objective, Q("1/20"));
}

TEST(BuildBagLpTest, E2FixedFirstTask) {
  const LpProblem lp = BuildBagLp(testing::E2(), TaskSet{1}, 16, Q("1/2"));
  EXPECT_EQ(lp.variable_ids, std::vector<int>{2});
  EXPECT_EQ(lp.objective, std::vector<Rational>{6});
  ASSERT_EQ(lp.rows.size(), 3U);
  EXPECT_EQ(lp.rows[0].rhs, 2);
  EXPECT_TRUE(lp.rows[0].coeffs.empty());
  EXPECT_EQ(lp.rows[1].rhs, 4);
  ASSERT_EQ(lp.rows[1].coeffs.size(), 1U);
  EXPECT_EQ(lp.rows[1].coeffs[0].second, 4);
  EXPECT_EQ(lp.rows[2].rhs, 1);
}

TEST(BuildBagLpTest, EmptyFixedSetUsesEveryBag) {
  const LpProblem lp = BuildBagLp(testing::E2(), TaskSet{}, 16, Q("1/2"));
  EXPECT_EQ(lp.variable_ids, (std::vector<int>{2, 3}));
  EXPECT_EQ(lp.rows.size(), 4U);
}

TEST(BuildBagLpTest, TinyGuessHasNoVariables) {
  const LpProblem lp = BuildBagLp(testing::E2(), TaskSet{}, 1, Q("1/2"));
  EXPECT_EQ(lp.num_variables(), 0U);
  EXPECT_EQ(SolveLpBasic(lp).objective, 0);
}

TEST(BuildBagLpTest, InfeasibleFixedSetIsRejected) {
  EXPECT_THROW(BuildBagLp(testing::E2(), TaskSet{1, 3}, 16, Q("1/2")),
               PreconditionError);
  EXPECT_THROW(BuildBagLp(testing::E2(), TaskSet{2, 3}, 16, Q("1/2")),
               PreconditionError);
}

TEST(BuildBagLpTest, BasicOptimaAreSparse) {
  for (uint64_t seed = 1; seed <= 60; ++seed) {
    const int m = 1 + static_cast<int>(seed % 3);
    const BagInstance inst = testing::RandomBag(seed, 12, m, 3 + static_cast<int>(seed % 4));
    for (long opt : {8L, 64L, 512L}) {
      const LpProblem lp = BuildBagLp(inst, TaskSet{}, opt, Q("1/4"));
      const BasicSolution s = SolveLpBasic(lp);
      EXPECT_TRUE(SatisfiesConstraints(lp, s.values));
      EXPECT_LE(CountFractional(s), 2U * m) << "seed " << seed;
    }
  }
}

TEST(ParseLpProblemTest, RowListFormat) {
  const LpProblem lp =
      ParseLpProblem("# example\nvars 4 9\nmax 2 3\nrow 1 1 <= 1\nrow 1 0 <= 1/2\n");
  EXPECT_EQ(lp.variable_ids, (std::vector<int>{4, 9}));
  ASSERT_EQ(lp.rows.size(), 2U);
  EXPECT_EQ(lp.rows[1].rhs, Q("1/2"));
  EXPECT_EQ(SolveLpBasic(lp).objective, 3);
  EXPECT_THROW(ParseLpProblem("row 1 <= 1\n"), InputError);
  EXPECT_THROW(ParseLpProblem("max 1 1\nrow 1 <= 1\n"), InputError);
  EXPECT_THROW(ParseLpProblem("max 1\nrow 1 >= 1\n"), InputError);
}

}  // namespace
}  // namespace ufp

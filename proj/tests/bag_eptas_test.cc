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

#include "ufp/bag_eptas.h"

#include <gtest/gtest.h>

#include "brute.h"
#include "fixtures.h"
#include "ufp/errors.h"

namespace ufp {
namespace {

using testing::E2;
using testing::Q;

TEST(HeavyTasksTest, E2AllHeavy) {
  // Threshold eps * opt / m = 4.
  EXPECT_EQ(HeavyTasks(E2(), Q("1/2"), 16), (TaskSet{1, 2, 3}));
}

TEST(HeavyTasksTest, HighThresholdGivesNothing) {
  EXPECT_TRUE(HeavyTasks(E2(), Q("1/2"), 40).empty());
  EXPECT_THROW(HeavyTasks(E2(), Q("1/2"), 0), PreconditionError);
}

TEST(HeavyTasksTest, ShrinksAsOptGrows) {
  for (uint64_t seed = 1; seed <= 30; ++seed) {
    const BagInstance inst = testing::RandomBag(seed, 10, 3, 4);
    for (long opt = 1; opt <= 256; opt *= 2) {
      EXPECT_TRUE(HeavyTasks(inst, Q("1/4"), 2 * opt)
                      .IsSubsetOf(HeavyTasks(inst, Q("1/4"), opt)));
    }
  }
}

TEST(EtaTest, FormulaValues) {
  // (1/2)^3 = 1/8 <= (1/2) / 4 < (1/2)^2.
  EXPECT_EQ(Eta(Q("1/2"), 2), 3);
  for (const char* eps : {"1/4", "1/3", "1/28", "2/9"}) {
    for (int m = 1; m <= 4; ++m) {
      const Rational e = Q(eps);
      const int eta = Eta(e, m);
      EXPECT_LE(Pow(1 - e, eta), e / (2 * m));
      EXPECT_GT(Pow(1 - e, eta - 1), e / (2 * m));
    }
  }
}

TEST(QParameterTest, FormulaValues) {
  EXPECT_EQ(QParameter(Q("1/2"), 2), 32);
  EXPECT_EQ(QParameter(Q("1/3"), 1), 108);
  // ceil(4 * (5/2)^3) with ceil(1 / (2/5)) = 3.
  EXPECT_EQ(QParameter(Q("2/5"), 1), 63);
}

TEST(ClassLevelTest, Brackets) {
  const int eta = Eta(Q("1/2"), 2);
  // 10 / 32 lies in (1/4, 1/2].
  EXPECT_EQ(ClassLevel(10, 16, Q("1/2"), eta), 2);
  EXPECT_EQ(ClassLevel(32, 16, Q("1/2"), eta), 1);
  EXPECT_EQ(ClassLevel(16, 16, Q("1/2"), eta), 2);
  EXPECT_EQ(ClassLevel(33, 16, Q("1/2"), eta), std::nullopt);
  EXPECT_EQ(ClassLevel(4, 16, Q("1/2"), eta), std::nullopt);
  EXPECT_EQ(ClassLevel(5, 16, Q("1/2"), eta), 3);
}

TEST(BuildClassesTest, E2Partition) {
  const ClassPartition p = BuildClasses(E2(), Q("1/2"), 16);
  EXPECT_EQ(p.eta, 3);
  ASSERT_EQ(p.class_count(), 3U);
  EXPECT_EQ(p.classes.at(ClassKey{{1, 1}, 2}), std::vector<int>{1});
  EXPECT_EQ(p.classes.at(ClassKey{{2, 2}, 3}), std::vector<int>{2});
  EXPECT_EQ(p.classes.at(ClassKey{{1, 2}, 3}), std::vector<int>{3});
}

TEST(BuildClassesTest, HeavyTasksAreClassedForGoodGuess) {
  for (uint64_t seed = 1; seed <= 40; ++seed) {
    const BagInstance inst = testing::RandomBag(seed, 10, 3, 4);
    const Rational opt = brute::BagOpt(inst).value;
    Rational guess = 1;
    while (2 * guess <= opt) guess *= 2;
    const Rational eps = Q("1/4");
    const ClassPartition p = BuildClasses(inst, eps, guess);
    TaskSet classed;
    for (const auto& [key, ids] : p.classes) {
      for (int id : ids) classed.Insert(id);
    }
    EXPECT_TRUE(HeavyTasks(inst, eps, opt).IsSubsetOf(classed)) << "seed " << seed;
    EXPECT_LE(Rational(static_cast<unsigned long>(p.class_count())),
              ClassCountBound(eps, 3));
  }
}

TEST(RepSetTest, TakesEveryActiveBagBelowQ) {
  const Instance base(2, {10, 10},
                      {Task{1, {1, 2}, 3, 10}, Task{2, {1, 2}, 1, 10},
                       Task{3, {1, 2}, 2, 9}});
  const BagInstance inst(base, {Bag{1, {1}}, Bag{2, {2}}, Bag{3, {3}}});
  const RepSetResult r = RepSet(inst, Q("1/2"), 16);
  EXPECT_EQ(r.q, 32);
  ASSERT_EQ(r.classes.size(), 1U);
  EXPECT_EQ(r.classes[0].active_bags, 3U);
  EXPECT_EQ(r.classes[0].picks,
            (std::vector<std::pair<int, int>>{{2, 2}, {3, 3}, {1, 1}}));
  EXPECT_EQ(r.reps, (TaskSet{1, 2, 3}));
}

TEST(RepSetTest, KeepsQLowestDemandBags) {
  // m = 1, eps = 1/2: q = 16, one class spread over 17 bags.
  std::vector<Task> tasks;
  std::vector<Bag> bags;
  for (int i = 1; i <= 17; ++i) {
    tasks.push_back(Task{i, {1, 1}, 18 - i, 20});
    bags.push_back(Bag{i, {i}});
  }
  const BagInstance inst(Instance(1, {100}, tasks), bags);
  const RepSetResult r = RepSet(inst, Q("1/2"), 16);
  ASSERT_EQ(r.q, 16);
  ASSERT_EQ(r.classes.size(), 1U);
  EXPECT_EQ(r.classes[0].active_bags, 17U);
  EXPECT_EQ(r.reps.size(), 16U);
  EXPECT_FALSE(r.reps.Contains(1));
}

TEST(RepSetTest, OneOfferPerBagAndClass) {
  const Instance base(1, {10},
                      {Task{1, {1, 1}, 3, 10}, Task{2, {1, 1}, 2, 10},
                       Task{3, {1, 1}, 2, 10}});
  const BagInstance inst(base, {Bag{1, {1, 2, 3}}});
  const RepSetResult r = RepSet(inst, Q("1/2"), 16);
  EXPECT_EQ(r.reps, (TaskSet{2}));
}

TEST(RepSetTest, EmptyInstanceHasNoClasses) {
  const BagInstance none(Instance(1, {1}, {}), {});
  const RepSetResult r = RepSet(none, Q("1/2"), 1);
  EXPECT_EQ(r.class_count, 0U);
  EXPECT_TRUE(r.reps.empty());
}

TEST(SolveBagUfpTest, E2ReachesOptimum) {
  const BagResult r = SolveBagUfp(E2(), Q("1/2"));
  EXPECT_EQ(r.stats.core_epsilon, Q("1/14"));
  EXPECT_EQ(r.weight, brute::BagOpt(E2()).value);
  EXPECT_EQ(r.weight, 16);
  EXPECT_EQ(r.selection, (TaskSet{1, 2}));
}

TEST(SolveBagUfpTest, SingletonBagsWithRoomTakeEverything) {
  const Instance base(3, {100, 100, 100},
                      {Task{1, {1, 2}, 3, 5}, Task{2, {2, 3}, 4, 1},
                       Task{3, {1, 3}, 2, 7}, Task{4, {3, 3}, 1, 2}});
  const BagResult r = SolveBagUfp(SingletonBags(base), Q("1/3"));
  EXPECT_EQ(r.selection, (TaskSet{1, 2, 3, 4}));
}

TEST(SolveBagUfpTest, RejectsEpsilonOutOfRange) {
  EXPECT_THROW(SolveBagUfp(E2(), Q("0")), InputError);
  EXPECT_THROW(SolveBagUfp(E2(), Q("3/5")), InputError);
  EXPECT_THROW(SolveBagUfpCore(E2(), Q("1/2")), InputError);
}

TEST(SolveBagUfpTest, FractionalWeightsAreScaled) {
  const Instance base(2, {5, 4},
                      {Task{1, {1, 1}, 3, Q("1/2")}, Task{2, {2, 2}, 4, Q("1/3")},
                       Task{3, {1, 2}, 2, Q("2/5")}});
  const BagInstance inst(base, {Bag{1, {1, 3}}, Bag{2, {2}}});
  const BagResult r = SolveBagUfp(inst, Q("1/4"));
  EXPECT_EQ(r.stats.weight_scale, 30);
  EXPECT_EQ(r.weight, Q("5/6"));
}

TEST(SolveBagUfpTest, WithinGuaranteeOnSmallInstances) {
  for (uint64_t seed = 1; seed <= 30; ++seed) {
    const int n = 3 + static_cast<int>(seed % 6);
    const BagInstance inst = testing::RandomBag(seed, n, 1 + static_cast<int>(seed % 3),
                                                2 + static_cast<int>(seed % 3));
    const Rational eps = Q("1/3");
    const BagResult r = SolveBagUfp(inst, eps);
    EXPECT_TRUE(CheckFeasible(inst, r.selection).feasible);
    EXPECT_GE(r.weight, (1 - eps) * brute::BagOpt(inst).value) << "seed " << seed;
    EXPECT_EQ(r.stats.sparsity_violations, 0U);
    EXPECT_TRUE(r.stats.rep_set_within_bound);
  }
}

TEST(VerifyRepresentativeTest, E2) {
  const RepresentativeCheck c = VerifyRepresentative(E2(), Q("1/2"), 25);
  EXPECT_EQ(c.opt, 16);
  EXPECT_EQ(c.opt_guess, 16);
  EXPECT_TRUE(c.found);
  EXPECT_EQ(c.witness, (TaskSet{1, 2}));
  EXPECT_TRUE(c.within_bound);
}

}  // namespace
}  // namespace ufp

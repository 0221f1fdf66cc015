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

#include "ufp/knapsack.h"

#include <algorithm>
#include <optional>

#include <gtest/gtest.h>

#include "brute.h"
#include "fixtures.h"
#include "ufp/errors.h"
#include "ufp/generators.h"
#include "ufp/oracle.h"

namespace ufp {
namespace {

// Lexicographically smallest id set of minimum demand reaching `threshold`.
TaskSet ReferenceEntry(const std::vector<ProfitItem>& items, int64_t threshold) {
  std::optional<Rational> best;
  std::vector<int> best_ids;
  for (uint32_t mask = 0; mask < (1U << items.size()); ++mask) {
    Rational d = 0;
    int64_t p = 0;
    std::vector<int> ids;
    for (std::size_t i = 0; i < items.size(); ++i) {
      if (mask >> i & 1U) {
        d += items[i].demand;
        p += items[i].profit;
        ids.push_back(items[i].id);
      }
    }
    std::sort(ids.begin(), ids.end());
    if (p < threshold) continue;
    if (!best || d < *best || (d == *best && ids < best_ids)) {
      best = d;
      best_ids = ids;
    }
  }
  return TaskSet::FromIds(best_ids);
}

TEST(BuildPathTableTest, TwoItems) {
  const std::vector<ProfitItem> items{{1, 2, 3}, {2, 3, 4}};
  const PathTable t = BuildPathTable({1, 1}, items);
  ASSERT_EQ(t.total_profit, 7);
  ASSERT_EQ(t.entries.size(), 8U);
  EXPECT_EQ(t.entries[0].subset, TaskSet{});
  EXPECT_EQ(t.entries[3].subset, (TaskSet{1}));
  EXPECT_EQ(t.entries[4].subset, (TaskSet{2}));
  EXPECT_EQ(t.entries[7].subset, (TaskSet{1, 2}));
  for (int64_t p : {0, 3, 4, 7}) {
    EXPECT_EQ(t.entries[p].subset, ReferenceEntry(items, p)) << p;
  }
}

TEST(BuildPathTableTest, EmptyAndSingle) {
  const PathTable empty = BuildPathTable({1, 1}, {});
  ASSERT_EQ(empty.entries.size(), 1U);
  EXPECT_EQ(empty.entries[0].subset, TaskSet{});
  EXPECT_EQ(empty.entries[0].demand, 0);
  const PathTable single = BuildPathTable({1, 1}, {{1, 5, 2}});
  ASSERT_EQ(single.entries.size(), 3U);
  EXPECT_EQ(single.entries[1].subset, (TaskSet{1}));
  EXPECT_EQ(single.entries[2].subset, (TaskSet{1}));
  EXPECT_EQ(single.entries[2].demand, 5);
}

TEST(SolTablesTest, LookupReturnsCachedValues) {
  const SolTables tables({BuildPathTable({1, 1}, {{1, 2, 3}, {2, 3, 4}})});
  const SolEntry& e = tables.Lookup(0, 4);
  EXPECT_EQ(e.subset, (TaskSet{2}));
  EXPECT_EQ(e.demand, 3);
  EXPECT_EQ(e.profit, 4);
  EXPECT_EQ(tables.Lookup(0, 0).subset, TaskSet{});
  EXPECT_EQ(tables.Lookup(0, 7).subset, ExactMinDemandSubset({{1, 2, 3}, {2, 3, 4}}, 7));
  EXPECT_THROW(tables.Lookup(0, 8), PreconditionError);
  EXPECT_THROW(tables.Lookup(0, -1), PreconditionError);
  EXPECT_EQ(tables.CellCount(), 2U * 8U);
}

TEST(BuildPathTableTest, MatchesEnumerationAndIsMonotone) {
  SplitMix64 rng(4242);
  for (int round = 0; round < 150; ++round) {
    const int count = static_cast<int>(rng.Uniform(0, 9));
    std::vector<ProfitItem> items;
    std::vector<brute::Item> ref;
    for (int i = 0; i < count; ++i) {
      const int id = 3 * i + static_cast<int>(rng.Uniform(1, 3));
      const Rational d = testing::Frac(static_cast<long>(rng.Uniform(0, 12)),
                                       static_cast<unsigned long>(rng.Uniform(1, 3)));
      const int64_t p = rng.Uniform(0, 7);
      items.push_back({id, d, p});
      ref.push_back({id, d, p});
    }
    const PathTable t = BuildPathTable({1, 2}, items);
    for (int64_t p = 0; p <= t.total_profit; ++p) {
      const SolEntry& e = t.entries[p];
      ASSERT_EQ(e.demand, *brute::MinDemand(ref, p)) << "round " << round;
      EXPECT_EQ(e.subset, ReferenceEntry(items, p));
      EXPECT_GE(e.profit, p);
      if (p > 0) EXPECT_LE(t.entries[p - 1].demand, e.demand);
    }
  }
}

TEST(BuildProfitTablesTest, OneTablePerUniquePath) {
  const Instance e1 = testing::E1();
  const SolTables tables = BuildProfitTables(e1, {2, 1, 3});
  ASSERT_EQ(tables.num_paths(), 3U);
  EXPECT_EQ(tables.table(0).path, (Subpath{1, 1}));
  EXPECT_EQ(tables.table(0).task_ids, std::vector<int>{1});
  EXPECT_EQ(tables.table(1).task_ids, std::vector<int>{3});
  EXPECT_EQ(tables.table(2).task_ids, std::vector<int>{2});
  EXPECT_EQ(tables.table(1).total_profit, 3);
}

}  // namespace
}  // namespace ufp

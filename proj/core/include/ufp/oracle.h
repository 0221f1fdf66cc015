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

#ifndef UFP_ORACLE_H_
#define UFP_ORACLE_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "ufp/model.h"
#include "ufp/rational.h"

namespace ufp {

inline constexpr std::size_t kDefaultOracleLimit = 25;

// Task cap for exhaustive routines: UFP_ORACLE_LIMIT if set, else
// kDefaultOracleLimit.
std::size_t OracleLimitFromEnv();

struct OptResult {
  Rational value;
  TaskSet witness;
  uint64_t explored = 0;  // search nodes visited
};

// Depth-first search over tasks in id order; a branch is cut as soon as a
// partial load exceeds a capacity, or when the remaining weight cannot reach
// the incumbent. Ties go to the lexicographically smallest id set. Throws
// LimitError when the task count exceeds `limit`.
OptResult ExactUfp(const Instance& instance,
                   std::size_t limit = kDefaultOracleLimit);
OptResult ExactBagUfp(const BagInstance& instance,
                      std::size_t limit = kDefaultOracleLimit);

struct ProfitItem {
  int id = 0;
  Rational demand;
  int64_t profit = 0;
};

// Minimum-demand subset reaching `threshold` profit by plain subset
// enumeration; ties go to the lexicographically smallest id set. Throws
// PreconditionError if the threshold exceeds the total profit, LimitError for
// more than 24 items.
TaskSet ExactMinDemandSubset(const std::vector<ProfitItem>& items,
                             int64_t threshold);

// Calls `visit` once per feasible task set (capacities and bag rule). Returns
// the number of sets visited.
uint64_t ForEachFeasible(const BagInstance& instance, std::size_t limit,
                         const std::function<void(const TaskSet&)>& visit);
uint64_t ForEachFeasible(const Instance& instance, std::size_t limit,
                         const std::function<void(const TaskSet&)>& visit);

std::vector<TaskSet> EnumerateFeasible(
    const BagInstance& instance, std::size_t limit = kDefaultOracleLimit);

}  // namespace ufp

#endif  // UFP_ORACLE_H_

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

#ifndef UFP_KNAPSACK_H_
#define UFP_KNAPSACK_H_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "ufp/model.h"
#include "ufp/oracle.h"
#include "ufp/rational.h"

namespace ufp {

// Integer profit per task, aligned with Instance::tasks() positions.
using ProfitVector = std::vector<int64_t>;

struct SolEntry {
  TaskSet subset;
  Rational demand;
  int64_t profit = 0;
};

// Minimum-demand table for the tasks sharing one subpath: entries[p] is the
// least-demand subset whose profit is at least p, for p in [0, total_profit].
// Equal demands resolve to the lexicographically smallest id set.
struct PathTable {
  Subpath path;
  std::vector<int> task_ids;
  int64_t total_profit = 0;
  std::vector<SolEntry> entries;
};

class SolTables {
 public:
  SolTables() = default;
  explicit SolTables(std::vector<PathTable> tables)
      : tables_(std::move(tables)) {}

  std::size_t num_paths() const { return tables_.size(); }
  const PathTable& table(std::size_t path_index) const {
    return tables_[path_index];
  }
  const std::vector<PathTable>& tables() const { return tables_; }

  // Throws PreconditionError unless 0 <= profit <= total_profit.
  const SolEntry& Lookup(std::size_t path_index, int64_t profit) const;

  // Sum over paths of |T_phi| * (p_phi + 1) cells.
  uint64_t CellCount() const;

 private:
  std::vector<PathTable> tables_;
};

// Profit-indexed dynamic program over `items` (any order; reconstruction is
// by id). Profits must be non-negative.
PathTable BuildPathTable(const Subpath& path, std::vector<ProfitItem> items);

// One table per subpath of UniquePaths(instance), in that order.
SolTables BuildProfitTables(const Instance& instance,
                            const ProfitVector& profits);

}  // namespace ufp

#endif  // UFP_KNAPSACK_H_

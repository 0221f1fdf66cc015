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
#include <map>
#include <string>

#include "ufp/errors.h"

namespace ufp {
namespace {

struct Cell {
  bool reachable = false;
  bool empty = true;
  Rational demand;
};

}  // namespace

const SolEntry& SolTables::Lookup(std::size_t path_index,
                                  int64_t profit) const {
  if (path_index >= tables_.size()) {
    throw PreconditionError("path index out of range");
  }
  const PathTable& t = tables_[path_index];
  if (profit < 0 || profit > t.total_profit) {
    throw PreconditionError("profit threshold " + std::to_string(profit) +
                            " outside [0, " + std::to_string(t.total_profit) +
                            "]");
  }
  return t.entries[static_cast<std::size_t>(profit)];
}

uint64_t SolTables::CellCount() const {
  uint64_t cells = 0;
  for (const PathTable& t : tables_) {
    cells += t.task_ids.size() * static_cast<uint64_t>(t.total_profit + 1);
  }
  return cells;
}

PathTable BuildPathTable(const Subpath& path, std::vector<ProfitItem> items) {
  std::sort(items.begin(), items.end(),
            [](const ProfitItem& a, const ProfitItem& b) { return a.id < b.id; });
  PathTable table;
  table.path = path;
  for (const ProfitItem& it : items) {
    if (it.profit < 0) throw PreconditionError("negative profit");
    table.task_ids.push_back(it.id);
    table.total_profit += it.profit;
  }
  const auto width = static_cast<std::size_t>(table.total_profit) + 1;
  const std::size_t count = items.size();

  // Items are folded in from the highest id down, so the choice made for
  // item j sees the best completion over items j+1.. and the lexicographic
  // tie-break reduces to "prefer taking j unless the alternative is empty".
  std::vector<Cell> next(width);
  next[0].reachable = true;
  next[0].demand = 0;
  std::vector<std::vector<bool>> take(count, std::vector<bool>(width, false));
  std::vector<Cell> cur(width);
  for (std::size_t j = count; j-- > 0;) {
    const ProfitItem& item = items[j];
    for (std::size_t p = 0; p < width; ++p) {
      const std::size_t rest =
          p > static_cast<std::size_t>(item.profit)
              ? p - static_cast<std::size_t>(item.profit)
              : 0;
      const Cell& skip = next[p];
      const Cell& sub = next[rest];
      bool use = false;
      if (sub.reachable) {
        if (!skip.reachable) {
          use = true;
        } else {
          const Rational with = sub.demand + item.demand;
          const int c = cmp(with, skip.demand);
          use = c < 0 || (c == 0 && !skip.empty);
        }
      }
      take[j][p] = use;
      if (use) {
        cur[p].reachable = true;
        cur[p].empty = false;
        cur[p].demand = sub.demand + item.demand;
      } else {
        cur[p] = skip;
      }
    }
    std::swap(cur, next);
  }

  table.entries.resize(width);
  for (std::size_t p = 0; p < width; ++p) {
    SolEntry& entry = table.entries[p];
    entry.demand = 0;
    std::size_t need = p;
    std::vector<int> ids;
    for (std::size_t j = 0; j < count; ++j) {
      if (!take[j][need]) continue;
      ids.push_back(items[j].id);
      entry.demand += items[j].demand;
      entry.profit += items[j].profit;
      const auto pj = static_cast<std::size_t>(items[j].profit);
      need = need > pj ? need - pj : 0;
    }
    entry.subset = TaskSet::FromIds(std::move(ids));
  }
  return table;
}

SolTables BuildProfitTables(const Instance& instance,
                            const ProfitVector& profits) {
  if (profits.size() != instance.num_tasks()) {
    throw PreconditionError("profit vector size does not match task count");
  }
  const std::vector<Subpath> paths = UniquePaths(instance);
  std::map<Subpath, std::vector<ProfitItem>> by_path;
  for (std::size_t i = 0; i < instance.num_tasks(); ++i) {
    const Task& t = instance.tasks()[i];
    by_path[t.path].push_back(ProfitItem{t.id, t.demand, profits[i]});
  }
  std::vector<PathTable> tables;
  tables.reserve(paths.size());
  for (const Subpath& path : paths) {
    tables.push_back(BuildPathTable(path, std::move(by_path[path])));
  }
  return SolTables(std::move(tables));
}

}  // namespace ufp

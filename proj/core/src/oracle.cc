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

#include "ufp/oracle.h"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "ufp/errors.h"

namespace ufp {
namespace {

void CheckLimit(std::size_t n, std::size_t limit) {
  if (n > limit) {
    throw LimitError("exhaustive search refused: " + std::to_string(n) +
                     " tasks exceed the limit of " + std::to_string(limit));
  }
}

// Shared depth-first search. `bag_of` is empty for plain UFP.
class SubsetSearch {
 public:
  SubsetSearch(const Instance& instance, std::vector<int> bag_of,
               std::size_t num_bags)
      : instance_(instance),
        bag_of_(std::move(bag_of)),
        bag_used_(num_bags, false),
        load_(instance.num_edges(), Rational(0)),
        suffix_weight_(instance.num_tasks() + 1, Rational(0)) {
    const auto& tasks = instance.tasks();
    for (std::size_t i = tasks.size(); i-- > 0;) {
      suffix_weight_[i] = suffix_weight_[i + 1] + tasks[i].weight;
    }
  }

  OptResult Maximize() {
    best_value_ = -1;
    Maximize(0, Rational(0));
    OptResult result;
    result.value = best_value_;
    result.witness = TaskSet::FromIds(best_ids_);
    result.explored = explored_;
    return result;
  }

  uint64_t Enumerate(const std::function<void(const TaskSet&)>& visit) {
    uint64_t count = 0;
    Enumerate(0, visit, count);
    return count;
  }

 private:
  bool Fits(const Task& t) const {
    for (int e = t.path.first; e <= t.path.last; ++e) {
      if (load_[e - 1] + t.demand > instance_.capacity(e)) return false;
    }
    return true;
  }

  bool BagFree(std::size_t i) const {
    return bag_of_.empty() || !bag_used_[bag_of_[i]];
  }

  void Take(std::size_t i, bool take) {
    const Task& t = instance_.tasks()[i];
    for (int e = t.path.first; e <= t.path.last; ++e) {
      if (take) {
        load_[e - 1] += t.demand;
      } else {
        load_[e - 1] -= t.demand;
      }
    }
    if (!bag_of_.empty()) bag_used_[bag_of_[i]] = take;
    if (take) {
      current_.push_back(t.id);
    } else {
      current_.pop_back();
    }
  }

  void Maximize(std::size_t i, const Rational& weight) {
    ++explored_;
    if (weight + suffix_weight_[i] < best_value_) return;
    const auto& tasks = instance_.tasks();
    if (i == tasks.size()) {
      if (weight > best_value_ ||
          (weight == best_value_ && current_ < best_ids_)) {
        best_value_ = weight;
        best_ids_ = current_;
      }
      return;
    }
    if (BagFree(i) && Fits(tasks[i])) {
      Take(i, true);
      Maximize(i + 1, weight + tasks[i].weight);
      Take(i, false);
    }
    Maximize(i + 1, weight);
  }

  void Enumerate(std::size_t i,
                 const std::function<void(const TaskSet&)>& visit,
                 uint64_t& count) {
    const auto& tasks = instance_.tasks();
    if (i == tasks.size()) {
      ++count;
      visit(TaskSet::FromIds(current_));
      return;
    }
    Enumerate(i + 1, visit, count);
    if (BagFree(i) && Fits(tasks[i])) {
      Take(i, true);
      Enumerate(i + 1, visit, count);
      Take(i, false);
    }
  }

  const Instance& instance_;
  std::vector<int> bag_of_;
  std::vector<bool> bag_used_;
  std::vector<Rational> load_;
  std::vector<Rational> suffix_weight_;
  std::vector<int> current_;
  std::vector<int> best_ids_;
  Rational best_value_;
  uint64_t explored_ = 0;
};

std::vector<int> BagIndexVector(const BagInstance& instance) {
  std::vector<int> bag_of(instance.base().num_tasks());
  for (std::size_t i = 0; i < bag_of.size(); ++i) {
    bag_of[i] = instance.bag_of_index(i);
  }
  return bag_of;
}

}  // namespace

std::size_t OracleLimitFromEnv() {
  const char* raw = std::getenv("UFP_ORACLE_LIMIT");
  if (raw == nullptr || *raw == '\0') return kDefaultOracleLimit;
  char* end = nullptr;
  const long long value = std::strtoll(raw, &end, 10);
  if (end == raw || *end != '\0' || value < 0) {
    throw InputError(std::string("invalid UFP_ORACLE_LIMIT: '") + raw + "'");
  }
  return static_cast<std::size_t>(value);
}

OptResult ExactUfp(const Instance& instance, std::size_t limit) {
  CheckLimit(instance.num_tasks(), limit);
  SubsetSearch search(instance, {}, 0);
  return search.Maximize();
}

OptResult ExactBagUfp(const BagInstance& instance, std::size_t limit) {
  CheckLimit(instance.base().num_tasks(), limit);
  SubsetSearch search(instance.base(), BagIndexVector(instance),
                      instance.bags().size());
  return search.Maximize();
}

TaskSet ExactMinDemandSubset(const std::vector<ProfitItem>& items,
                             int64_t threshold) {
  if (items.size() > 24) {
    throw LimitError("ExactMinDemandSubset supports at most 24 items");
  }
  int64_t total = 0;
  for (const ProfitItem& it : items) total += it.profit;
  if (threshold > total) {
    throw PreconditionError("threshold " + std::to_string(threshold) +
                            " exceeds total profit " + std::to_string(total));
  }
  bool have_best = false;
  Rational best_demand;
  std::vector<int> best_ids;
  const uint32_t count = 1u << items.size();
  for (uint32_t mask = 0; mask < count; ++mask) {
    int64_t profit = 0;
    Rational demand = 0;
    std::vector<int> ids;
    for (std::size_t j = 0; j < items.size(); ++j) {
      if (mask & (1u << j)) {
        profit += items[j].profit;
        demand += items[j].demand;
        ids.push_back(items[j].id);
      }
    }
    if (profit < threshold) continue;
    std::sort(ids.begin(), ids.end());
    if (!have_best || demand < best_demand ||
        (demand == best_demand && ids < best_ids)) {
      have_best = true;
      best_demand = demand;
      best_ids = std::move(ids);
    }
  }
  return TaskSet::FromIds(std::move(best_ids));
}

uint64_t ForEachFeasible(const BagInstance& instance, std::size_t limit,
                         const std::function<void(const TaskSet&)>& visit) {
  CheckLimit(instance.base().num_tasks(), limit);
  SubsetSearch search(instance.base(), BagIndexVector(instance),
                      instance.bags().size());
  return search.Enumerate(visit);
}

uint64_t ForEachFeasible(const Instance& instance, std::size_t limit,
                         const std::function<void(const TaskSet&)>& visit) {
  CheckLimit(instance.num_tasks(), limit);
  SubsetSearch search(instance, {}, 0);
  return search.Enumerate(visit);
}

std::vector<TaskSet> EnumerateFeasible(const BagInstance& instance,
                                       std::size_t limit) {
  std::vector<TaskSet> out;
  ForEachFeasible(instance, limit,
                  [&out](const TaskSet& s) { out.push_back(s); });
  return out;
}

}  // namespace ufp

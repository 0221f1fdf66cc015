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

#ifndef UFP_MODEL_H_
#define UFP_MODEL_H_

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "ufp/rational.h"

namespace ufp {

// Inclusive interval of 1-based edge indices.
struct Subpath {
  int first = 1;
  int last = 1;

  bool Covers(int edge) const { return first <= edge && edge <= last; }
  int length() const { return last - first + 1; }

  friend auto operator<=>(const Subpath&, const Subpath&) = default;
  friend bool operator==(const Subpath&, const Subpath&) = default;
};

struct Task {
  int id = 0;
  Subpath path;
  Rational demand;
  Rational weight;

  friend bool operator==(const Task&, const Task&) = default;
};

// Sorted, duplicate-free set of task ids. Comparison is lexicographic on the
// sorted id sequence, which is the tie-break order used by every solver.
class TaskSet {
 public:
  TaskSet() = default;
  TaskSet(std::initializer_list<int> ids);
  static TaskSet FromIds(std::vector<int> ids);

  void Insert(int id);
  bool Contains(int id) const;
  TaskSet Union(const TaskSet& other) const;
  TaskSet Intersection(const TaskSet& other) const;
  bool IsSubsetOf(const TaskSet& other) const;

  const std::vector<int>& ids() const { return ids_; }
  std::size_t size() const { return ids_.size(); }
  bool empty() const { return ids_.empty(); }
  auto begin() const { return ids_.begin(); }
  auto end() const { return ids_.end(); }

  std::string DebugString() const;

  friend auto operator<=>(const TaskSet&, const TaskSet&) = default;
  friend bool operator==(const TaskSet&, const TaskSet&) = default;

 private:
  std::vector<int> ids_;
};

// A UFP instance: a path with `num_edges` edges, per-edge capacities and a
// task list. Tasks are kept sorted by id, so position order equals id order.
// Immutable after construction.
class Instance {
 public:
  Instance() = default;
  // Throws InputError when capacities mismatch the edge count, a subpath is
  // out of range, a value is negative or ids repeat.
  Instance(int num_edges, std::vector<Rational> capacities,
           std::vector<Task> tasks);

  int num_edges() const { return num_edges_; }
  const std::vector<Rational>& capacities() const { return capacities_; }
  const Rational& capacity(int edge) const { return capacities_[edge - 1]; }
  const std::vector<Task>& tasks() const { return tasks_; }
  std::size_t num_tasks() const { return tasks_.size(); }

  bool HasTask(int id) const;
  // Position of `id` in tasks(). Throws InputError for unknown ids.
  std::size_t IndexOf(int id) const;
  const Task& task(int id) const { return tasks_[IndexOf(id)]; }

  friend bool operator==(const Instance&, const Instance&) = default;

 private:
  int num_edges_ = 0;
  std::vector<Rational> capacities_;
  std::vector<Task> tasks_;
};

struct Bag {
  int id = 0;
  std::vector<int> task_ids;  // sorted

  friend bool operator==(const Bag&, const Bag&) = default;
};

// UFP instance plus a partition of its tasks into non-empty bags.
class BagInstance {
 public:
  BagInstance() = default;
  // Throws InputError unless the bags partition the task ids exactly.
  BagInstance(Instance base, std::vector<Bag> bags);

  const Instance& base() const { return base_; }
  const std::vector<Bag>& bags() const { return bags_; }
  // Position in bags() of the bag holding task position `task_index`.
  int bag_of_index(std::size_t task_index) const {
    return bag_of_index_[task_index];
  }
  int bag_of(int task_id) const { return bag_of_index_[base_.IndexOf(task_id)]; }

  friend bool operator==(const BagInstance& a, const BagInstance& b) {
    return a.base_ == b.base_ && a.bags_ == b.bags_;
  }

 private:
  Instance base_;
  std::vector<Bag> bags_;
  std::vector<int> bag_of_index_;
};

// Every singleton bag: BagUFP view of a plain UFP instance.
BagInstance SingletonBags(const Instance& instance);

struct EdgeViolation {
  int edge = 0;
  Rational load;
  Rational capacity;

  friend bool operator==(const EdgeViolation&, const EdgeViolation&) = default;
};

struct FeasibilityReport {
  bool feasible = true;
  std::vector<EdgeViolation> violated_edges;
  std::vector<int> violated_bags;  // bag ids
};

// Unknown ids throw InputError.
FeasibilityReport CheckFeasible(const Instance& instance, const TaskSet& sel);
FeasibilityReport CheckFeasible(const BagInstance& instance, const TaskSet& sel);

Rational TotalWeight(const Instance& instance, const TaskSet& sel);
Rational TotalDemand(const Instance& instance, const TaskSet& sel);

// Load on the 1-based `edge`; throws InputError if the edge is out of range.
Rational EdgeLoad(const Instance& instance, const TaskSet& sel, int edge);
std::vector<Rational> EdgeLoads(const Instance& instance, const TaskSet& sel);

// Distinct task subpaths in (first, last) order.
std::vector<Subpath> UniquePaths(const Instance& instance);

// u(e) minus the load of `used`. Throws PreconditionError if any residual is
// negative.
std::vector<Rational> ResidualCapacities(const Instance& instance,
                                         const TaskSet& used);

// min over the edges of `path` of the capacity.
Rational BottleneckCapacity(const Instance& instance, const Subpath& path);

struct DroppedTask {
  enum class Reason { kZeroWeight, kExceedsCapacity };
  int id = 0;
  Reason reason = Reason::kZeroWeight;
};

std::string ToString(DroppedTask::Reason reason);

template <typename InstanceType>
struct Preprocessed {
  InstanceType instance;
  std::vector<DroppedTask> dropped;
};

// Removes tasks of weight zero and tasks whose demand exceeds the bottleneck
// capacity of their own path: neither can contribute to a solution of
// positive weight. Bags emptied by the pass are removed.
Preprocessed<Instance> Preprocess(const Instance& instance);
Preprocessed<BagInstance> Preprocess(const BagInstance& instance);

}  // namespace ufp

#endif  // UFP_MODEL_H_

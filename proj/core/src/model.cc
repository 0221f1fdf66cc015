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

#include "ufp/model.h"

#include <algorithm>
#include <sstream>
#include <utility>

#include "ufp/errors.h"

namespace ufp {

TaskSet::TaskSet(std::initializer_list<int> ids)
    : TaskSet(FromIds(std::vector<int>(ids))) {}

TaskSet TaskSet::FromIds(std::vector<int> ids) {
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  TaskSet out;
  out.ids_ = std::move(ids);
  return out;
}

void TaskSet::Insert(int id) {
  auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
  if (it == ids_.end() || *it != id) ids_.insert(it, id);
}

bool TaskSet::Contains(int id) const {
  return std::binary_search(ids_.begin(), ids_.end(), id);
}

TaskSet TaskSet::Union(const TaskSet& other) const {
  TaskSet out;
  std::set_union(ids_.begin(), ids_.end(), other.ids_.begin(),
                 other.ids_.end(), std::back_inserter(out.ids_));
  return out;
}

TaskSet TaskSet::Intersection(const TaskSet& other) const {
  TaskSet out;
  std::set_intersection(ids_.begin(), ids_.end(), other.ids_.begin(),
                        other.ids_.end(), std::back_inserter(out.ids_));
  return out;
}

bool TaskSet::IsSubsetOf(const TaskSet& other) const {
  return std::includes(other.ids_.begin(), other.ids_.end(), ids_.begin(),
                       ids_.end());
}

std::string TaskSet::DebugString() const {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < ids_.size(); ++i) {
    if (i > 0) os << ',';
    os << ids_[i];
  }
  os << '}';
  return os.str();
}

Instance::Instance(int num_edges, std::vector<Rational> capacities,
                   std::vector<Task> tasks)
    : num_edges_(num_edges),
      capacities_(std::move(capacities)),
      tasks_(std::move(tasks)) {
  if (num_edges_ < 1) throw InputError("edge count must be at least 1");
  if (static_cast<int>(capacities_.size()) != num_edges_) {
    throw InputError("capacity count mismatch: expected " +
                     std::to_string(num_edges_) + ", got " +
                     std::to_string(capacities_.size()));
  }
  for (const Rational& c : capacities_) {
    if (c < 0) throw InputError("negative capacity " + ToString(c));
  }
  std::sort(tasks_.begin(), tasks_.end(),
            [](const Task& a, const Task& b) { return a.id < b.id; });
  for (std::size_t i = 0; i < tasks_.size(); ++i) {
    const Task& t = tasks_[i];
    if (t.id < 0) throw InputError("negative task id " + std::to_string(t.id));
    if (i > 0 && tasks_[i - 1].id == t.id) {
      throw InputError("duplicate task id " + std::to_string(t.id));
    }
    if (t.path.first < 1 || t.path.first > t.path.last ||
        t.path.last > num_edges_) {
      throw InputError("task " + std::to_string(t.id) +
                       " has out-of-range subpath [" +
                       std::to_string(t.path.first) + "," +
                       std::to_string(t.path.last) + "]");
    }
    if (t.demand < 0 || t.weight < 0) {
      throw InputError("task " + std::to_string(t.id) +
                       " has a negative demand or weight");
    }
  }
}

bool Instance::HasTask(int id) const {
  auto it = std::lower_bound(
      tasks_.begin(), tasks_.end(), id,
      [](const Task& t, int key) { return t.id < key; });
  return it != tasks_.end() && it->id == id;
}

std::size_t Instance::IndexOf(int id) const {
  auto it = std::lower_bound(
      tasks_.begin(), tasks_.end(), id,
      [](const Task& t, int key) { return t.id < key; });
  if (it == tasks_.end() || it->id != id) {
    throw InputError("unknown task id " + std::to_string(id));
  }
  return static_cast<std::size_t>(it - tasks_.begin());
}

BagInstance::BagInstance(Instance base, std::vector<Bag> bags)
    : base_(std::move(base)), bags_(std::move(bags)) {
  std::sort(bags_.begin(), bags_.end(),
            [](const Bag& a, const Bag& b) { return a.id < b.id; });
  bag_of_index_.assign(base_.num_tasks(), -1);
  for (std::size_t b = 0; b < bags_.size(); ++b) {
    Bag& bag = bags_[b];
    if (b > 0 && bags_[b - 1].id == bag.id) {
      throw InputError("duplicate bag id " + std::to_string(bag.id));
    }
    if (bag.task_ids.empty()) {
      throw InputError("bag " + std::to_string(bag.id) + " is empty");
    }
    std::sort(bag.task_ids.begin(), bag.task_ids.end());
    for (int id : bag.task_ids) {
      if (!base_.HasTask(id)) {
        throw InputError("bag " + std::to_string(bag.id) +
                         " covers unknown task id " + std::to_string(id));
      }
      int& slot = bag_of_index_[base_.IndexOf(id)];
      if (slot != -1) {
        throw InputError("task " + std::to_string(id) +
                         " appears in more than one bag");
      }
      slot = static_cast<int>(b);
    }
  }
  for (std::size_t i = 0; i < bag_of_index_.size(); ++i) {
    if (bag_of_index_[i] == -1) {
      throw InputError("task " + std::to_string(base_.tasks()[i].id) +
                       " is not in any bag");
    }
  }
}

BagInstance SingletonBags(const Instance& instance) {
  std::vector<Bag> bags;
  bags.reserve(instance.num_tasks());
  for (const Task& t : instance.tasks()) bags.push_back(Bag{t.id, {t.id}});
  return BagInstance(instance, std::move(bags));
}

std::vector<Rational> EdgeLoads(const Instance& instance, const TaskSet& sel) {
  std::vector<Rational> loads(instance.num_edges(), Rational(0));
  for (int id : sel) {
    const Task& t = instance.task(id);
    for (int e = t.path.first; e <= t.path.last; ++e) loads[e - 1] += t.demand;
  }
  return loads;
}

FeasibilityReport CheckFeasible(const Instance& instance, const TaskSet& sel) {
  FeasibilityReport report;
  const std::vector<Rational> loads = EdgeLoads(instance, sel);
  for (int e = 1; e <= instance.num_edges(); ++e) {
    if (loads[e - 1] > instance.capacity(e)) {
      report.violated_edges.push_back(
          EdgeViolation{e, loads[e - 1], instance.capacity(e)});
    }
  }
  report.feasible = report.violated_edges.empty();
  return report;
}

FeasibilityReport CheckFeasible(const BagInstance& instance,
                                const TaskSet& sel) {
  FeasibilityReport report = CheckFeasible(instance.base(), sel);
  std::vector<int> per_bag(instance.bags().size(), 0);
  for (int id : sel) ++per_bag[instance.bag_of(id)];
  for (std::size_t b = 0; b < per_bag.size(); ++b) {
    if (per_bag[b] > 1) report.violated_bags.push_back(instance.bags()[b].id);
  }
  report.feasible =
      report.violated_edges.empty() && report.violated_bags.empty();
  return report;
}

Rational TotalWeight(const Instance& instance, const TaskSet& sel) {
  Rational sum = 0;
  for (int id : sel) sum += instance.task(id).weight;
  return sum;
}

Rational TotalDemand(const Instance& instance, const TaskSet& sel) {
  Rational sum = 0;
  for (int id : sel) sum += instance.task(id).demand;
  return sum;
}

Rational EdgeLoad(const Instance& instance, const TaskSet& sel, int edge) {
  if (edge < 1 || edge > instance.num_edges()) {
    throw InputError("edge index out of range: " + std::to_string(edge));
  }
  Rational load = 0;
  for (int id : sel) {
    const Task& t = instance.task(id);
    if (t.path.Covers(edge)) load += t.demand;
  }
  return load;
}

std::vector<Subpath> UniquePaths(const Instance& instance) {
  std::vector<Subpath> paths;
  paths.reserve(instance.num_tasks());
  for (const Task& t : instance.tasks()) paths.push_back(t.path);
  std::sort(paths.begin(), paths.end());
  paths.erase(std::unique(paths.begin(), paths.end()), paths.end());
  return paths;
}

std::vector<Rational> ResidualCapacities(const Instance& instance,
                                         const TaskSet& used) {
  std::vector<Rational> residual = EdgeLoads(instance, used);
  for (int e = 1; e <= instance.num_edges(); ++e) {
    Rational& r = residual[e - 1];
    r = instance.capacity(e) - r;
    if (r < 0) {
      throw PreconditionError("residual capacity of edge " +
                              std::to_string(e) + " is negative (" +
                              ToString(r) + ")");
    }
  }
  return residual;
}

Rational BottleneckCapacity(const Instance& instance, const Subpath& path) {
  Rational best = instance.capacity(path.first);
  for (int e = path.first + 1; e <= path.last; ++e) {
    if (instance.capacity(e) < best) best = instance.capacity(e);
  }
  return best;
}

std::string ToString(DroppedTask::Reason reason) {
  switch (reason) {
    case DroppedTask::Reason::kZeroWeight:
      return "zero-weight";
    case DroppedTask::Reason::kExceedsCapacity:
      return "exceeds-capacity";
  }
  return "unknown";
}

namespace {

std::vector<DroppedTask> FindDroppable(const Instance& instance) {
  std::vector<DroppedTask> dropped;
  for (const Task& t : instance.tasks()) {
    if (t.weight == 0) {
      dropped.push_back({t.id, DroppedTask::Reason::kZeroWeight});
    } else if (t.demand > BottleneckCapacity(instance, t.path)) {
      dropped.push_back({t.id, DroppedTask::Reason::kExceedsCapacity});
    }
  }
  return dropped;
}

Instance WithoutTasks(const Instance& instance,
                      const std::vector<DroppedTask>& dropped) {
  std::vector<Task> kept;
  std::size_t next = 0;
  for (const Task& t : instance.tasks()) {
    if (next < dropped.size() && dropped[next].id == t.id) {
      ++next;
      continue;
    }
    kept.push_back(t);
  }
  return Instance(instance.num_edges(), instance.capacities(), std::move(kept));
}

}  // namespace

Preprocessed<Instance> Preprocess(const Instance& instance) {
  std::vector<DroppedTask> dropped = FindDroppable(instance);
  return {WithoutTasks(instance, dropped), std::move(dropped)};
}

Preprocessed<BagInstance> Preprocess(const BagInstance& instance) {
  std::vector<DroppedTask> dropped = FindDroppable(instance.base());
  Instance base = WithoutTasks(instance.base(), dropped);
  std::vector<Bag> bags;
  for (const Bag& bag : instance.bags()) {
    Bag kept{bag.id, {}};
    for (int id : bag.task_ids) {
      if (base.HasTask(id)) kept.task_ids.push_back(id);
    }
    if (!kept.task_ids.empty()) bags.push_back(std::move(kept));
  }
  return {BagInstance(std::move(base), std::move(bags)), std::move(dropped)};
}

}  // namespace ufp

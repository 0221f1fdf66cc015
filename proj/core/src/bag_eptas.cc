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

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <tuple>

#include "ufp/errors.h"
#include "ufp/lp.h"

namespace ufp {
namespace {

void RequireUnitEpsilon(const Rational& eps) {
  if (eps <= 0 || eps >= 1) {
    throw PreconditionError("eps must lie in (0, 1), got " + ToString(eps));
  }
}

// (1 - eps)^r for r = 0..eta.
std::vector<Rational> LevelPowers(const Rational& eps, int eta) {
  std::vector<Rational> powers;
  powers.reserve(static_cast<std::size_t>(eta) + 1);
  Rational p = 1;
  const Rational base = 1 - eps;
  for (int r = 0; r <= eta; ++r) {
    powers.push_back(p);
    p *= base;
  }
  return powers;
}

std::optional<int> LevelOf(const Rational& ratio,
                           const std::vector<Rational>& powers) {
  const int eta = static_cast<int>(powers.size()) - 1;
  if (ratio > powers[0] || ratio <= powers[eta]) return std::nullopt;
  // powers is decreasing; find the first r with ratio > powers[r].
  auto it = std::upper_bound(powers.begin(), powers.end(), ratio,
                             [](const Rational& v, const Rational& p) {
                               return v > p;
                             });
  return static_cast<int>(it - powers.begin());
}

// Feasible subsets F of `candidates` with |F| <= max_size, by cardinality and
// then lexicographically. A partial F that is already infeasible is not
// extended.
class FixedSetEnumerator {
 public:
  FixedSetEnumerator(const BagInstance& instance, const TaskSet& candidates)
      : instance_(instance), candidates_(candidates.ids()) {}

  void Run(std::size_t max_size,
           const std::function<void(const TaskSet&)>& visit) {
    const std::size_t top = std::min(max_size, candidates_.size());
    for (std::size_t size = 0; size <= top; ++size) {
      loads_.assign(instance_.base().num_edges(), Rational(0));
      bag_used_.assign(instance_.bags().size(), false);
      chosen_.clear();
      if (!Descend(0, size, visit)) break;
    }
  }

 private:
  // Returns whether any set of the requested size was reached.
  bool Descend(std::size_t start, std::size_t size,
               const std::function<void(const TaskSet&)>& visit) {
    if (chosen_.size() == size) {
      visit(TaskSet::FromIds(chosen_));
      return true;
    }
    bool reached = false;
    const std::size_t need = size - chosen_.size();
    for (std::size_t c = start; c + need <= candidates_.size(); ++c) {
      const Task& t = instance_.base().task(candidates_[c]);
      const int bag = instance_.bag_of(t.id);
      if (bag_used_[bag] || !Fits(t)) continue;
      Apply(t, bag, true);
      chosen_.push_back(t.id);
      reached = Descend(c + 1, size, visit) || reached;
      chosen_.pop_back();
      Apply(t, bag, false);
    }
    return reached;
  }

  bool Fits(const Task& t) const {
    for (int e = t.path.first; e <= t.path.last; ++e) {
      if (loads_[e - 1] + t.demand > instance_.base().capacity(e)) return false;
    }
    return true;
  }

  void Apply(const Task& t, int bag, bool add) {
    for (int e = t.path.first; e <= t.path.last; ++e) {
      if (add) {
        loads_[e - 1] += t.demand;
      } else {
        loads_[e - 1] -= t.demand;
      }
    }
    bag_used_[bag] = add;
  }

  const BagInstance& instance_;
  const std::vector<int>& candidates_;
  std::vector<Rational> loads_;
  std::vector<bool> bag_used_;
  std::vector<int> chosen_;
};

}  // namespace

TaskSet HeavyTasks(const BagInstance& instance, const Rational& eps,
                   const Rational& opt_value) {
  if (opt_value <= 0) throw PreconditionError("opt value must be positive");
  const Rational threshold = eps * opt_value / instance.base().num_edges();
  TaskSet heavy;
  for (const Task& t : instance.base().tasks()) {
    if (t.weight > threshold) heavy.Insert(t.id);
  }
  return heavy;
}

int Eta(const Rational& eps, int num_edges) {
  RequireUnitEpsilon(eps);
  const Rational target = eps / (2 * num_edges);
  const Rational base = 1 - eps;
  Rational p = base;
  int r = 1;
  while (p > target) {
    p *= base;
    ++r;
  }
  return r;
}

BigInt QParameter(const Rational& eps, int num_edges) {
  RequireUnitEpsilon(eps);
  const int64_t exponent = ToInt64(Ceil(1 / eps));
  const Rational inv = 1 / eps;
  return Ceil(4 * num_edges * Pow(inv, static_cast<unsigned long>(exponent)));
}

Rational ClassCountBound(const Rational& eps, int num_edges) {
  const Rational m = num_edges;
  return 3 * m * m * m / (eps * eps);
}

std::optional<int> ClassLevel(const Rational& weight, const Rational& opt_guess,
                              const Rational& eps, int eta) {
  RequireUnitEpsilon(eps);
  return LevelOf(weight / (2 * opt_guess), LevelPowers(eps, eta));
}

ClassPartition BuildClasses(const BagInstance& instance, const Rational& eps,
                            const Rational& opt_guess) {
  RequireUnitEpsilon(eps);
  if (opt_guess < 1) throw PreconditionError("opt guess must be at least 1");
  ClassPartition partition;
  partition.eta = Eta(eps, instance.base().num_edges());
  const std::vector<Rational> powers = LevelPowers(eps, partition.eta);
  for (const Task& t : instance.base().tasks()) {
    const std::optional<int> level = LevelOf(t.weight / (2 * opt_guess), powers);
    if (!level) continue;
    partition.classes[ClassKey{t.path, *level}].push_back(t.id);
  }
  return partition;
}

RepSetResult RepSet(const BagInstance& instance, const Rational& eps,
                    const Rational& opt_guess) {
  const ClassPartition partition = BuildClasses(instance, eps, opt_guess);
  const int m = instance.base().num_edges();
  RepSetResult result;
  result.q = QParameter(eps, m);
  result.class_count = partition.class_count();
  result.size_bound = ClassCountBound(eps, m) * Rational(result.q);

  for (const auto& [key, ids] : partition.classes) {
    // Minimum-demand task of each bag meeting the class; ids are sorted, so
    // the first one seen wins demand ties.
    std::map<int, int> best_of_bag;  // bag position -> task id
    for (int id : ids) {
      const int bag = instance.bag_of(id);
      auto it = best_of_bag.find(bag);
      if (it == best_of_bag.end()) {
        best_of_bag.emplace(bag, id);
      } else if (instance.base().task(id).demand <
                 instance.base().task(it->second).demand) {
        it->second = id;
      }
    }
    std::vector<std::tuple<Rational, int, int>> offers;  // demand, task, bag
    for (const auto& [bag, id] : best_of_bag) {
      offers.emplace_back(instance.base().task(id).demand, id,
                          instance.bags()[bag].id);
    }
    std::sort(offers.begin(), offers.end());
    ClassRepresentatives reps;
    reps.key = key;
    reps.active_bags = offers.size();
    const BigInt available = static_cast<unsigned long>(offers.size());
    const std::size_t take =
        result.q < available ? static_cast<std::size_t>(result.q.get_ui())
                             : offers.size();
    for (std::size_t i = 0; i < take; ++i) {
      const auto& [demand, id, bag_id] = offers[i];
      reps.picks.emplace_back(id, bag_id);
      result.reps.Insert(id);
    }
    result.classes.push_back(std::move(reps));
  }
  return result;
}

namespace {

BagInstance ScaleWeights(const BagInstance& instance, BigInt& scale) {
  const Instance& base = instance.base();
  scale = 1;
  for (const Task& t : base.tasks()) {
    mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), t.weight.get_den_mpz_t());
  }
  std::vector<Task> tasks = base.tasks();
  for (Task& t : tasks) t.weight *= Rational(scale);
  return BagInstance(
      Instance(base.num_edges(), base.capacities(), std::move(tasks)),
      instance.bags());
}

}  // namespace

RepresentativeCheck VerifyRepresentative(const BagInstance& instance,
                                         const Rational& eps,
                                         std::size_t limit) {
  BigInt scale;
  const BagInstance scaled = ScaleWeights(instance, scale);
  RepresentativeCheck check;
  check.weight_scale = Rational(scale);
  check.opt = ExactBagUfp(scaled, limit).value;
  if (check.opt == 0) {
    check.found = true;
    check.opt_guess = 0;
    check.required = 0;
    check.witness_weight = 0;
    return check;
  }
  const BigInt floor_opt = Floor(check.opt);
  check.opt_guess = 1;
  mpz_mul_2exp(check.opt_guess.get_num_mpz_t(),
               check.opt_guess.get_num_mpz_t(),
               mpz_sizeinbase(floor_opt.get_mpz_t(), 2) - 1);
  check.heavy = HeavyTasks(scaled, eps, check.opt);
  check.rep = RepSet(scaled, eps, check.opt_guess);
  check.within_bound =
      Rational(static_cast<unsigned long>(check.rep.reps.size())) <=
      check.rep.size_bound;
  check.required = (1 - 3 * eps) * check.opt;
  check.witness_weight = -1;
  check.sets_examined = ForEachFeasible(scaled, limit, [&](const TaskSet& s) {
    if (!s.Intersection(check.heavy).IsSubsetOf(check.rep.reps)) return;
    const Rational w = TotalWeight(scaled.base(), s);
    if (w >= check.required && w > check.witness_weight) {
      check.found = true;
      check.witness = s;
      check.witness_weight = w;
    }
  });
  if (!check.found) check.witness_weight = 0;
  return check;
}

BagResult SolveBagUfpCore(const BagInstance& instance, const Rational& eps) {
  if (eps <= 0 || eps >= Rational(1, 2)) {
    throw InputError("core eps must lie in (0, 1/2), got " + ToString(eps));
  }
  const Instance& base = instance.base();
  BagResult result;
  result.stats.core_epsilon = eps;
  result.stats.requested_epsilon = eps;
  result.stats.num_tasks = base.num_tasks();
  result.weight = 0;
  if (base.num_tasks() == 0) return result;

  for (const Task& t : base.tasks()) {
    if (t.weight <= 0 || !IsInteger(t.weight)) {
      throw PreconditionError("core requires positive integer weights");
    }
  }
  const BigInt total = Floor(TotalWeight(base, TaskSet::FromIds([&] {
    std::vector<int> ids;
    for (const Task& t : base.tasks()) ids.push_back(t.id);
    return ids;
  }())));
  const std::size_t max_exponent = mpz_sizeinbase(total.get_mpz_t(), 2) - 1;
  const int m = base.num_edges();
  const std::size_t max_fixed = static_cast<std::size_t>(ToInt64(Floor(m / eps)));
  result.stats.max_fixed_size = max_fixed;
  const Rational class_bound = ClassCountBound(eps, m);

  Rational best_weight = -1;
  for (std::size_t exponent = 0; exponent <= max_exponent; ++exponent) {
    Rational opt_guess = 1;
    mpz_mul_2exp(opt_guess.get_num_mpz_t(), opt_guess.get_num_mpz_t(),
                 exponent);
    ++result.stats.opt_guesses;

    const RepSetResult rep = RepSet(instance, eps, opt_guess);
    result.stats.max_rep_set = std::max(result.stats.max_rep_set, rep.reps.size());
    result.stats.max_class_count =
        std::max(result.stats.max_class_count, rep.class_count);
    if (Rational(static_cast<unsigned long>(rep.reps.size())) > rep.size_bound) {
      result.stats.rep_set_within_bound = false;
    }
    if (Rational(static_cast<unsigned long>(rep.class_count)) > class_bound) {
      result.stats.class_count_within_bound = false;
    }

    FixedSetEnumerator enumerator(instance, rep.reps);
    enumerator.Run(max_fixed, [&](const TaskSet& fixed) {
      ++result.stats.fixed_sets;
      const LpProblem lp = BuildBagLp(instance, fixed, opt_guess, eps);
      const BasicSolution sol = SolveLpBasic(lp);
      ++result.stats.lp_solves;
      const std::size_t fractional = CountFractional(sol);
      result.stats.max_fractional =
          std::max(result.stats.max_fractional, fractional);
      if (fractional > 2 * static_cast<std::size_t>(m)) {
        ++result.stats.sparsity_violations;
      }
      TaskSet candidate = fixed;
      for (std::size_t v = 0; v < sol.values.size(); ++v) {
        if (sol.values[v] == 1) candidate.Insert(lp.variable_ids[v]);
      }
      if (!CheckFeasible(instance, candidate).feasible) {
        throw std::logic_error("rounded candidate " + candidate.DebugString() +
                               " is infeasible");
      }
      const Rational weight = TotalWeight(base, candidate);
      if (weight > best_weight) {
        best_weight = weight;
        result.selection = std::move(candidate);
        result.stats.best_opt_guess = opt_guess;
        result.stats.best_fixed = fixed;
      }
    });
  }
  result.weight = best_weight < 0 ? Rational(0) : best_weight;
  return result;
}

BagResult SolveBagUfp(const BagInstance& instance, const Rational& eps) {
  if (eps <= 0 || eps > Rational(1, 2)) {
    throw InputError("eps must lie in (0, 1/2], got " + ToString(eps));
  }
  const Preprocessed<BagInstance> pre = Preprocess(instance);
  BigInt scale;
  const BagInstance scaled = ScaleWeights(pre.instance, scale);

  BagResult result = SolveBagUfpCore(scaled, eps / 7);
  result.stats.requested_epsilon = eps;
  result.stats.num_tasks = instance.base().num_tasks();
  result.stats.dropped_tasks = pre.dropped.size();
  result.stats.weight_scale = Rational(scale);
  result.weight = TotalWeight(instance.base(), result.selection);
  return result;
}

}  // namespace ufp

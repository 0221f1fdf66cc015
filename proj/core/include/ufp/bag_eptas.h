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

#ifndef UFP_BAG_EPTAS_H_
#define UFP_BAG_EPTAS_H_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "ufp/model.h"
#include "ufp/oracle.h"
#include "ufp/rational.h"

namespace ufp {

// Tasks with w(i) > eps * opt_value / m. Requires opt_value > 0.
TaskSet HeavyTasks(const BagInstance& instance, const Rational& eps,
                   const Rational& opt_value);

// Smallest r >= 1 with (1 - eps)^r <= eps / (2m). Requires 0 < eps < 1.
int Eta(const Rational& eps, int num_edges);

// ceil(4m * eps^(-ceil(1/eps))).
BigInt QParameter(const Rational& eps, int num_edges);

// 3 m^3 eps^-2, the bound on the number of classes.
Rational ClassCountBound(const Rational& eps, int num_edges);

struct ClassKey {
  Subpath path;
  int level = 1;
  friend auto operator<=>(const ClassKey&, const ClassKey&) = default;
  friend bool operator==(const ClassKey&, const ClassKey&) = default;
};

// Level r in [1, eta] with w / (2 opt_guess) in ((1-eps)^r, (1-eps)^(r-1)],
// or nothing when the ratio is above 1 or at most (1-eps)^eta.
std::optional<int> ClassLevel(const Rational& weight, const Rational& opt_guess,
                              const Rational& eps, int eta);

struct ClassPartition {
  int eta = 0;
  std::map<ClassKey, std::vector<int>> classes;  // task ids, sorted
  std::size_t class_count() const { return classes.size(); }
};

// Requires 0 < eps < 1 and opt_guess >= 1.
ClassPartition BuildClasses(const BagInstance& instance, const Rational& eps,
                            const Rational& opt_guess);

struct ClassRepresentatives {
  ClassKey key;
  std::vector<std::pair<int, int>> picks;  // (task id, bag id), in pick order
  std::size_t active_bags = 0;
};

struct RepSetResult {
  TaskSet reps;
  std::vector<ClassRepresentatives> classes;
  BigInt q;
  std::size_t class_count = 0;
  Rational size_bound;  // 3 m^3 eps^-2 q
};

// Per class: every bag meeting the class offers its minimum-demand task there
// (ties by task id); bags are ordered by (demand, task id, bag id) and the
// first min(q, #bags) offers are kept.
RepSetResult RepSet(const BagInstance& instance, const Rational& eps,
                    const Rational& opt_guess);

struct BagStats {
  Rational requested_epsilon;
  Rational core_epsilon;
  std::size_t num_tasks = 0;
  std::size_t dropped_tasks = 0;
  Rational weight_scale = 1;  // integer weights are w * weight_scale
  std::size_t opt_guesses = 0;
  std::size_t max_fixed_size = 0;  // floor(m / eps)
  uint64_t fixed_sets = 0;         // feasible F examined, over all guesses
  uint64_t lp_solves = 0;
  std::size_t max_fractional = 0;
  uint64_t sparsity_violations = 0;  // basic optima with > 2m fractional
  std::size_t max_rep_set = 0;
  std::size_t max_class_count = 0;
  bool rep_set_within_bound = true;
  bool class_count_within_bound = true;
  Rational best_opt_guess;  // in scaled weight units
  TaskSet best_fixed;
};

struct BagResult {
  TaskSet selection;
  Rational weight;
  BagStats stats;
};

struct RepresentativeCheck {
  Rational weight_scale = 1;  // weights below are w * weight_scale
  Rational opt;
  Rational opt_guess;  // power of two in (opt / 2, opt]; 0 when opt = 0
  TaskSet heavy;
  RepSetResult rep;
  Rational required;  // (1 - 3 eps) opt
  bool found = false;
  TaskSet witness;  // heaviest qualifying set, first in enumeration order
  Rational witness_weight;
  bool within_bound = true;  // |R| <= size bound
  uint64_t sets_examined = 0;
};

// Exhaustive check of the representative property for the guess in
// (opt / 2, opt]: some feasible S with S and H meeting only inside R has
// weight at least (1 - 3 eps) opt. Weights are scaled to integers first.
// Throws LimitError above `limit` tasks.
RepresentativeCheck VerifyRepresentative(const BagInstance& instance,
                                         const Rational& eps,
                                         std::size_t limit);

// Guess loop at `eps` exactly (0 < eps < 1/2) on a preprocessed instance with
// positive integer weights. Weight >= (1 - 7 eps) opt.
BagResult SolveBagUfpCore(const BagInstance& instance, const Rational& eps);

// Full scheme: validates 0 < eps <= 1/2, preprocesses, scales weights to
// integers and runs the core at eps / 7. Weight >= (1 - eps) opt.
BagResult SolveBagUfp(const BagInstance& instance, const Rational& eps);

}  // namespace ufp

#endif  // UFP_BAG_EPTAS_H_

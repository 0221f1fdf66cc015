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

#ifndef UFP_UFP_EPTAS_H_
#define UFP_UFP_EPTAS_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "ufp/knapsack.h"
#include "ufp/model.h"
#include "ufp/rational.h"

namespace ufp {

// How the guess vectors of one opt-guess are visited.
enum class GuessSearch {
  // Every composition is assembled and checked, in lexicographic order.
  kExhaustive,
  // Depth-first over paths. Guess values that select the same table entry
  // are collapsed onto the smallest one (it leaves the most budget for the
  // remaining paths), infeasible prefixes are cut (table demands only grow
  // with the threshold), and subtrees whose profit bound cannot beat the
  // incumbent are skipped. Returns the same solution as kExhaustive.
  kPruned,
};

struct UfpOptions {
  GuessSearch search = GuessSearch::kPruned;
};

struct UfpStats {
  Rational requested_epsilon;
  Rational core_epsilon;
  std::size_t num_tasks = 0;
  std::size_t dropped_tasks = 0;
  std::size_t num_paths = 0;
  int64_t guess_budget = 0;      // Y
  std::size_t opt_guesses = 0;   // number of powers of (1 + eps) tried
  // Guess vectors accounted for over all opt guesses. Collapsed and pruned
  // vectors are counted, so this equals opt_guesses * CountCompositions.
  BigInt guesses_tried;
  uint64_t guesses_evaluated = 0;  // vectors whose candidate was assembled
  uint64_t table_cells = 0;
  std::vector<int64_t> table_sizes;  // p_phi + 1 per path
  int64_t best_profit = 0;
  Rational best_opt_guess;
  std::vector<int64_t> best_guess;  // X* per path, empty if nothing found
};

struct UfpResult {
  TaskSet selection;
  Rational weight;
  int64_t profit = 0;  // rounded profit of the selection
  UfpStats stats;
};

// 1 / ceil(1 / eps).
Rational NormalizeEpsilon(const Rational& eps);

// floor(n * w(i) / (eps * w_max)) per task position. Requires eps > 0 and at
// least one task of positive weight.
ProfitVector RoundProfits(const Instance& instance, const Rational& eps);

// floor((1 + eps) / eps * num_paths).
int64_t CompositionBudget(std::size_t num_paths, const Rational& eps);

// Visits every vector of `k` non-negative integers with sum <= budget, in
// lexicographic order.
void EnumerateCompositions(
    int k, int64_t budget,
    const std::function<void(const std::vector<int64_t>&)>& visit);

// binomial(budget + k, k).
BigInt CountCompositions(int k, int64_t budget);

// ((1 + 2 eps) / eps * e)^k, in floating point; analysis only.
long double CompositionBound(int k, const Rational& eps);

// Powers (1 + eps)^t, t = 0, 1, ..., up to and including the first one that
// exceeds n^2 / eps.
std::vector<Rational> OptGuesses(std::size_t num_tasks, const Rational& eps);

// The guess-and-assemble scheme run at `eps` exactly (0 < eps < 1/10). The
// instance must already be preprocessed. Weight >= (1 - 2 eps) opt.
UfpResult SolveUfpCore(const Instance& instance, const Rational& eps,
                       const UfpOptions& options = {});

// Full scheme: validates 0 < eps < 1/10, preprocesses, replaces eps by
// NormalizeEpsilon(eps) / 2 and runs the core. Weight >= (1 - eps) opt.
UfpResult SolveUfp(const Instance& instance, const Rational& eps,
                   const UfpOptions& options = {});

}  // namespace ufp

#endif  // UFP_UFP_EPTAS_H_

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

#ifndef UFP_LP_H_
#define UFP_LP_H_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ufp/model.h"
#include "ufp/rational.h"

namespace ufp {

class LpInfeasibleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class LpUnboundedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct LpRow {
  // (variable index, coefficient); indices refer to LpProblem positions.
  std::vector<std::pair<std::size_t, Rational>> coeffs;
  Rational rhs;
};

// max objective . x  s.t.  row . x <= rhs for every row, x >= 0.
struct LpProblem {
  std::vector<int> variable_ids;  // external id per variable (task ids)
  std::vector<Rational> objective;
  std::vector<LpRow> rows;

  std::size_t num_variables() const { return objective.size(); }
};

struct BasicSolution {
  std::vector<Rational> values;  // per variable
  Rational objective;
  // Basic columns: variables are 0..n-1, the slack of row r is n + r.
  std::vector<std::size_t> basis;
  std::size_t pivots = 0;
};

// Dense tableau simplex in exact arithmetic with Bland's rule (lowest-index
// entering column, lowest-index leaving basic variable among ratio ties).
// Phase I runs only when some rhs is negative. Throws LpInfeasibleError or
// LpUnboundedError.
BasicSolution SolveLpBasic(const LpProblem& problem);

// Variables with value strictly inside (0, 1).
std::size_t CountFractional(const BasicSolution& solution);

// True when every row holds and every value is non-negative.
bool SatisfiesConstraints(const LpProblem& problem,
                          const std::vector<Rational>& values);

// Relaxation for the light tasks left after fixing `fixed`: variables are the
// tasks of weight at most (2 eps / m) * opt_guess in bags that hold no task of
// `fixed`; one capacity row per edge with the residual capacity; one row per
// such bag that has a variable; a unit row for any variable without a bag
// row. Throws PreconditionError when `fixed` is infeasible.
LpProblem BuildBagLp(const BagInstance& instance, const TaskSet& fixed,
                     const Rational& opt_guess, const Rational& eps);

// Text format for `lp-solve`:
//   vars <id_1> ... <id_n>          (optional; defaults to 0..n-1)
//   max <c_1> ... <c_n>
//   row <a_1> ... <a_n> <= <rhs>
LpProblem ParseLpProblem(std::string_view text);

}  // namespace ufp

#endif  // UFP_LP_H_

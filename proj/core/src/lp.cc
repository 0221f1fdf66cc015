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

#include "ufp/lp.h"

#include <algorithm>
#include <limits>
#include <optional>

#include "ufp/errors.h"
#include "ufp/io.h"

namespace ufp {
namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

class Tableau {
 public:
  // Columns: n structural, r slack, then one artificial per negative rhs.
  explicit Tableau(const LpProblem& problem)
      : n_(problem.num_variables()), r_(problem.rows.size()) {
    std::size_t artificial = 0;
    for (const LpRow& row : problem.rows) {
      if (row.rhs < 0) ++artificial;
    }
    cols_ = n_ + r_ + artificial;
    rows_.assign(r_, std::vector<Rational>(cols_ + 1, Rational(0)));
    basis_.assign(r_, 0);
    std::size_t next_artificial = n_ + r_;
    for (std::size_t i = 0; i < r_; ++i) {
      const LpRow& row = problem.rows[i];
      const bool flip = row.rhs < 0;
      for (const auto& [var, coeff] : row.coeffs) {
        if (var >= n_) throw PreconditionError("row refers to unknown variable");
        rows_[i][var] += flip ? Rational(-coeff) : coeff;
      }
      rows_[i][n_ + i] = flip ? -1 : 1;
      rows_[i][cols_] = flip ? Rational(-row.rhs) : row.rhs;
      if (flip) {
        rows_[i][next_artificial] = 1;
        basis_[i] = next_artificial++;
      } else {
        basis_[i] = n_ + i;
      }
    }
    allowed_.assign(cols_, true);
  }

  std::size_t num_columns() const { return cols_; }
  std::size_t first_artificial() const { return n_ + r_; }
  std::size_t pivots() const { return pivots_; }

  // Maximizes `cost` over the current basis. Returns false if unbounded.
  bool Optimize(const std::vector<Rational>& cost) {
    while (true) {
      const std::vector<Rational> reduced = ReducedCosts(cost);
      std::size_t enter = kNone;
      for (std::size_t j = 0; j < cols_; ++j) {
        if (allowed_[j] && reduced[j] > 0) {
          enter = j;
          break;
        }
      }
      if (enter == kNone) return true;
      std::size_t leave = kNone;
      Rational best_ratio;
      for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (rows_[i][enter] <= 0) continue;
        Rational ratio = rows_[i][cols_] / rows_[i][enter];
        if (leave == kNone || ratio < best_ratio ||
            (ratio == best_ratio && basis_[i] < basis_[leave])) {
          leave = i;
          best_ratio = std::move(ratio);
        }
      }
      if (leave == kNone) return false;
      Pivot(leave, enter);
    }
  }

  Rational Value(const std::vector<Rational>& cost) const {
    Rational z = 0;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      z += cost[basis_[i]] * rows_[i][cols_];
    }
    return z;
  }

  // After phase I: pivot zero-level artificials out of the basis, dropping
  // rows that are redundant, then forbid artificial columns.
  void RemoveArtificials() {
    const std::size_t first = first_artificial();
    for (std::size_t i = 0; i < rows_.size();) {
      if (basis_[i] < first) {
        ++i;
        continue;
      }
      std::size_t enter = kNone;
      for (std::size_t j = 0; j < first; ++j) {
        if (rows_[i][j] != 0) {
          enter = j;
          break;
        }
      }
      if (enter == kNone) {
        rows_.erase(rows_.begin() + static_cast<std::ptrdiff_t>(i));
        basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(i));
        continue;
      }
      Pivot(i, enter);
      ++i;
    }
    for (std::size_t j = first; j < cols_; ++j) allowed_[j] = false;
  }

  std::vector<Rational> ColumnValues() const {
    std::vector<Rational> values(cols_, Rational(0));
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      values[basis_[i]] = rows_[i][cols_];
    }
    return values;
  }

  std::vector<std::size_t> SortedBasis() const {
    std::vector<std::size_t> b = basis_;
    std::sort(b.begin(), b.end());
    return b;
  }

 private:
  std::vector<Rational> ReducedCosts(const std::vector<Rational>& cost) const {
    std::vector<Rational> reduced(cost.begin(), cost.end());
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const Rational& cb = cost[basis_[i]];
      if (cb == 0) continue;
      for (std::size_t j = 0; j < cols_; ++j) {
        if (rows_[i][j] != 0) reduced[j] -= cb * rows_[i][j];
      }
    }
    return reduced;
  }

  void Pivot(std::size_t row, std::size_t col) {
    ++pivots_;
    std::vector<Rational>& p = rows_[row];
    const Rational inv = 1 / p[col];
    for (Rational& v : p) {
      if (v != 0) v *= inv;
    }
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (i == row || rows_[i][col] == 0) continue;
      const Rational factor = rows_[i][col];
      for (std::size_t j = 0; j <= cols_; ++j) {
        if (p[j] != 0) rows_[i][j] -= factor * p[j];
      }
    }
    basis_[row] = col;
  }

  std::size_t n_;
  std::size_t r_;
  std::size_t cols_ = 0;
  std::vector<std::vector<Rational>> rows_;
  std::vector<std::size_t> basis_;
  std::vector<bool> allowed_;
  std::size_t pivots_ = 0;
};

}  // namespace

BasicSolution SolveLpBasic(const LpProblem& problem) {
  if (problem.variable_ids.size() != problem.num_variables()) {
    throw PreconditionError("variable id count does not match objective");
  }
  Tableau tableau(problem);
  const std::size_t cols = tableau.num_columns();
  const std::size_t first_artificial = tableau.first_artificial();
  if (first_artificial < cols) {
    std::vector<Rational> phase1(cols, Rational(0));
    for (std::size_t j = first_artificial; j < cols; ++j) phase1[j] = -1;
    tableau.Optimize(phase1);
    if (tableau.Value(phase1) < 0) {
      throw LpInfeasibleError("linear program is infeasible");
    }
    tableau.RemoveArtificials();
  }
  std::vector<Rational> cost(cols, Rational(0));
  for (std::size_t j = 0; j < problem.num_variables(); ++j) {
    cost[j] = problem.objective[j];
  }
  if (!tableau.Optimize(cost)) {
    throw LpUnboundedError("linear program is unbounded");
  }
  BasicSolution solution;
  const std::vector<Rational> column_values = tableau.ColumnValues();
  solution.values.assign(column_values.begin(),
                         column_values.begin() +
                             static_cast<std::ptrdiff_t>(problem.num_variables()));
  solution.objective = 0;
  for (std::size_t j = 0; j < problem.num_variables(); ++j) {
    solution.objective += problem.objective[j] * solution.values[j];
  }
  solution.basis = tableau.SortedBasis();
  solution.pivots = tableau.pivots();
  return solution;
}

std::size_t CountFractional(const BasicSolution& solution) {
  std::size_t count = 0;
  for (const Rational& v : solution.values) {
    if (v > 0 && v < 1) ++count;
  }
  return count;
}

bool SatisfiesConstraints(const LpProblem& problem,
                          const std::vector<Rational>& values) {
  if (values.size() != problem.num_variables()) return false;
  for (const Rational& v : values) {
    if (v < 0) return false;
  }
  for (const LpRow& row : problem.rows) {
    Rational lhs = 0;
    for (const auto& [var, coeff] : row.coeffs) lhs += coeff * values[var];
    if (lhs > row.rhs) return false;
  }
  return true;
}

LpProblem BuildBagLp(const BagInstance& instance, const TaskSet& fixed,
                     const Rational& opt_guess, const Rational& eps) {
  if (!CheckFeasible(instance, fixed).feasible) {
    throw PreconditionError("fixed task set " + fixed.DebugString() +
                            " is infeasible");
  }
  const Instance& base = instance.base();
  const std::vector<Rational> residual = ResidualCapacities(base, fixed);
  const Rational cutoff = 2 * eps * opt_guess / base.num_edges();

  std::vector<bool> bag_hit(instance.bags().size(), false);
  for (int id : fixed) bag_hit[instance.bag_of(id)] = true;

  LpProblem lp;
  std::vector<std::vector<std::size_t>> vars_in_bag(instance.bags().size());
  for (std::size_t i = 0; i < base.num_tasks(); ++i) {
    const Task& t = base.tasks()[i];
    const int bag = instance.bag_of_index(i);
    if (bag_hit[bag] || t.weight > cutoff) continue;
    vars_in_bag[bag].push_back(lp.objective.size());
    lp.variable_ids.push_back(t.id);
    lp.objective.push_back(t.weight);
  }
  for (int e = 1; e <= base.num_edges(); ++e) {
    LpRow row;
    row.rhs = residual[e - 1];
    for (std::size_t v = 0; v < lp.variable_ids.size(); ++v) {
      const Task& t = base.task(lp.variable_ids[v]);
      if (t.path.Covers(e) && t.demand != 0) row.coeffs.emplace_back(v, t.demand);
    }
    lp.rows.push_back(std::move(row));
  }
  std::vector<bool> has_bag_row(lp.variable_ids.size(), false);
  for (std::size_t b = 0; b < instance.bags().size(); ++b) {
    if (bag_hit[b] || vars_in_bag[b].empty()) continue;
    LpRow row;
    row.rhs = 1;
    for (std::size_t v : vars_in_bag[b]) {
      row.coeffs.emplace_back(v, Rational(1));
      has_bag_row[v] = true;
    }
    lp.rows.push_back(std::move(row));
  }
  for (std::size_t v = 0; v < lp.variable_ids.size(); ++v) {
    if (has_bag_row[v]) continue;
    LpRow row;
    row.rhs = 1;
    row.coeffs.emplace_back(v, Rational(1));
    lp.rows.push_back(std::move(row));
  }
  return lp;
}

LpProblem ParseLpProblem(std::string_view text) {
  LpProblem lp;
  std::optional<std::vector<int>> ids;
  bool have_objective = false;
  int line_no = 0;
  std::size_t pos = 0;
  std::vector<std::pair<std::vector<Rational>, Rational>> dense_rows;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    const auto tokens = Tokenize(text.substr(pos, nl - pos));
    pos = nl + 1;
    ++line_no;
    if (tokens.empty()) continue;
    const std::string where = "line " + std::to_string(line_no) + ": ";
    try {
      if (tokens[0] == "vars") {
        std::vector<int> v;
        for (std::size_t i = 1; i < tokens.size(); ++i) {
          v.push_back(ParseInt(tokens[i]));
        }
        ids = std::move(v);
      } else if (tokens[0] == "max") {
        if (have_objective) throw InputError("duplicate 'max' line");
        for (std::size_t i = 1; i < tokens.size(); ++i) {
          lp.objective.push_back(ParseRational(tokens[i]));
        }
        have_objective = true;
      } else if (tokens[0] == "row") {
        if (tokens.size() < 3 || tokens[tokens.size() - 2] != "<=") {
          throw InputError("expected 'row <a_1> ... <a_n> <= <rhs>'");
        }
        std::vector<Rational> coeffs;
        for (std::size_t i = 1; i + 2 < tokens.size(); ++i) {
          coeffs.push_back(ParseRational(tokens[i]));
        }
        dense_rows.emplace_back(std::move(coeffs),
                                ParseRational(tokens.back()));
      } else {
        throw InputError("unknown directive '" + std::string(tokens[0]) + "'");
      }
    } catch (const InputError& e) {
      throw InputError(where + e.what());
    }
  }
  if (!have_objective) throw InputError("missing 'max' line");
  const std::size_t n = lp.objective.size();
  if (ids) {
    if (ids->size() != n) throw InputError("'vars' count differs from 'max'");
    lp.variable_ids = *ids;
  } else {
    for (std::size_t v = 0; v < n; ++v) {
      lp.variable_ids.push_back(static_cast<int>(v));
    }
  }
  for (auto& [coeffs, rhs] : dense_rows) {
    if (coeffs.size() != n) {
      throw InputError("row has " + std::to_string(coeffs.size()) +
                       " coefficients, expected " + std::to_string(n));
    }
    LpRow row;
    row.rhs = rhs;
    for (std::size_t v = 0; v < n; ++v) {
      if (coeffs[v] != 0) row.coeffs.emplace_back(v, coeffs[v]);
    }
    lp.rows.push_back(std::move(row));
  }
  return lp;
}

}  // namespace ufp

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

#include "ufp/ufp_eptas.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>

#include "ufp/errors.h"

namespace ufp {
namespace {

constexpr int64_t kUnbounded = std::numeric_limits<int64_t>::max();

// Maximal range of consecutive table indices holding the same subset.
struct Run {
  std::size_t first = 0;
  std::size_t last = 0;
};

struct PathData {
  const PathTable* table = nullptr;
  std::vector<Run> runs;
  // prefix_max[p]: largest entry profit among indices 0..p.
  std::vector<int64_t> prefix_max;
};

std::vector<Run> BuildRuns(const PathTable& table) {
  std::vector<Run> runs;
  for (std::size_t p = 0; p < table.entries.size(); ++p) {
    if (!runs.empty() &&
        table.entries[runs.back().last].subset == table.entries[p].subset) {
      runs.back().last = p;
    } else {
      runs.push_back(Run{p, p});
    }
  }
  return runs;
}

int64_t ClampToInt64(const BigInt& value, int64_t cap) {
  if (value > cap) return cap;
  return ToInt64(value);
}

// Evaluates every guess vector of every opt guess against fixed tables and
// keeps the first candidate of maximum rounded profit in canonical order
// (opt guess ascending, then guess vector lexicographic).
class GuessEvaluator {
 public:
  GuessEvaluator(const Instance& instance, const SolTables& tables,
                 const Rational& eps, GuessSearch search)
      : instance_(instance),
        tables_(tables),
        eps_(eps),
        search_(search),
        k_(static_cast<int>(tables.num_paths())),
        budget_(CompositionBudget(tables.num_paths(), eps)),
        loads_(instance.num_edges(), Rational(0)),
        guess_(tables.num_paths(), 0) {
    for (const PathTable& t : tables.tables()) {
      PathData pd;
      pd.table = &t;
      pd.runs = BuildRuns(t);
      pd.prefix_max.resize(t.entries.size());
      int64_t running = 0;
      for (std::size_t p = 0; p < t.entries.size(); ++p) {
        running = std::max(running, t.entries[p].profit);
        pd.prefix_max[p] = running;
      }
      max_total_profit_ = std::max(max_total_profit_, t.total_profit);
      paths_.push_back(std::move(pd));
    }
  }

  void RunOptGuess(const Rational& opt_guess, std::size_t guess_index) {
    guess_index_ = guess_index;
    step_ = eps_ * opt_guess / k_;
    // Table index reached by guess value X, before clamping to p_phi.
    ceil_index_.assign(budget_ + 1, 0);
    for (int64_t x = 0; x <= budget_; ++x) {
      ceil_index_[x] = ClampToInt64(Ceil(step_ * x), max_total_profit_);
    }
    if (search_ == GuessSearch::kExhaustive) {
      EnumerateCompositions(k_, budget_,
                            [this](const std::vector<int64_t>& x) {
                              EvaluateLeaf(x);
                            });
      return;
    }
    ComputeRunBounds();
    Descend(0, budget_, 0);
  }

  int64_t budget() const { return budget_; }
  int64_t best_profit() const { return best_profit_; }
  std::size_t best_guess_index() const { return best_guess_index_; }
  const std::vector<int64_t>& best_guess() const { return best_guess_; }
  const BigInt& covered() const { return covered_; }
  uint64_t evaluated() const { return evaluated_; }

 private:
  std::size_t EntryIndex(std::size_t path, int64_t x) const {
    const int64_t p = std::min(paths_[path].table->total_profit,
                               ceil_index_[x]);
    return static_cast<std::size_t>(p);
  }

  bool FitsOnPath(const Subpath& path, const Rational& demand) const {
    if (demand == 0) return true;
    for (int e = path.first; e <= path.last; ++e) {
      if (loads_[e - 1] + demand > instance_.capacity(e)) return false;
    }
    return true;
  }

  void AddLoad(const Subpath& path, const Rational& demand, bool add) {
    if (demand == 0) return;
    for (int e = path.first; e <= path.last; ++e) {
      if (add) {
        loads_[e - 1] += demand;
      } else {
        loads_[e - 1] -= demand;
      }
    }
  }

  void Record(int64_t profit, const std::vector<int64_t>& guess) {
    if (profit > best_profit_) {
      best_profit_ = profit;
      best_guess_index_ = guess_index_;
      best_guess_ = guess;
    }
  }

  void EvaluateLeaf(const std::vector<int64_t>& x) {
    ++evaluated_;
    covered_ += 1;
    std::vector<Rational> loads(instance_.num_edges(), Rational(0));
    int64_t profit = 0;
    for (int j = 0; j < k_; ++j) {
      const SolEntry& entry = paths_[j].table->entries[EntryIndex(j, x[j])];
      profit += entry.profit;
      const Subpath& path = paths_[j].table->path;
      for (int e = path.first; e <= path.last; ++e) {
        loads[e - 1] += entry.demand;
      }
    }
    for (int e = 1; e <= instance_.num_edges(); ++e) {
      if (loads[e - 1] > instance_.capacity(e)) return;
    }
    Record(profit, x);
  }

  // Guess-value range [lo, hi] of each run under the current step.
  void ComputeRunBounds() {
    run_lo_.assign(k_, {});
    run_hi_.assign(k_, {});
    for (int j = 0; j < k_; ++j) {
      const PathData& pd = paths_[j];
      int64_t lo = 0;
      for (const Run& run : pd.runs) {
        int64_t hi = kUnbounded;
        if (static_cast<int64_t>(run.last) < pd.table->total_profit) {
          // ceil(X * step) <= b  <=>  X <= b / step.
          hi = ClampToInt64(Floor(Rational(static_cast<long>(run.last)) / step_),
                            kUnbounded - 1);
        }
        run_lo_[j].push_back(lo);
        run_hi_[j].push_back(hi);
        if (hi != kUnbounded) lo = std::max(lo, hi + 1);
      }
    }
  }

  // Number of guess vectors with the current coordinate in [lo, hi] and
  // `rest` free coordinates sharing what remains of `budget`.
  static BigInt CountRange(int64_t budget, int64_t lo, int64_t hi, int rest) {
    if (lo > hi) return BigInt(0);
    const auto r = static_cast<unsigned long>(rest);
    return Binomial(static_cast<unsigned long>(budget - lo) + r + 1, r + 1) -
           Binomial(static_cast<unsigned long>(budget - hi) + r, r + 1);
  }

  int64_t SuffixBound(int from, int64_t budget) const {
    int64_t bound = 0;
    for (int j = from; j < k_; ++j) {
      bound += paths_[j].prefix_max[EntryIndex(j, budget)];
    }
    return bound;
  }

  void Descend(int j, int64_t budget, int64_t profit) {
    if (j == k_) {
      ++evaluated_;
      covered_ += 1;
      Record(profit, guess_);
      return;
    }
    const PathData& pd = paths_[j];
    const int rest = k_ - j - 1;
    for (std::size_t r = 0; r < pd.runs.size(); ++r) {
      const int64_t lo = run_lo_[j][r];
      if (lo > budget) break;
      const int64_t hi = std::min(run_hi_[j][r], budget);
      if (lo > hi) continue;
      const SolEntry& entry = pd.table->entries[pd.runs[r].first];
      if (!FitsOnPath(pd.table->path, entry.demand)) {
        // Later runs only demand more.
        covered_ += CountRange(budget, lo, budget, rest);
        break;
      }
      if (profit + entry.profit + SuffixBound(j + 1, budget - lo) <=
          best_profit_) {
        covered_ += CountRange(budget, lo, hi, rest);
        continue;
      }
      covered_ += CountRange(budget, lo + 1, hi, rest);
      AddLoad(pd.table->path, entry.demand, true);
      guess_[j] = lo;
      Descend(j + 1, budget - lo, profit + entry.profit);
      guess_[j] = 0;
      AddLoad(pd.table->path, entry.demand, false);
    }
  }

  const Instance& instance_;
  const SolTables& tables_;
  Rational eps_;
  GuessSearch search_;
  int k_;
  int64_t budget_;
  int64_t max_total_profit_ = 0;
  std::vector<PathData> paths_;

  std::size_t guess_index_ = 0;
  Rational step_;
  std::vector<int64_t> ceil_index_;
  std::vector<std::vector<int64_t>> run_lo_;
  std::vector<std::vector<int64_t>> run_hi_;
  std::vector<Rational> loads_;
  std::vector<int64_t> guess_;

  int64_t best_profit_ = -1;
  std::size_t best_guess_index_ = 0;
  std::vector<int64_t> best_guess_;
  BigInt covered_ = 0;
  uint64_t evaluated_ = 0;
};

void CheckCoreEpsilon(const Rational& eps) {
  if (eps <= 0 || eps >= Rational(1, 10)) {
    throw InputError("epsilon must lie in (0, 1/10), got " + ToString(eps));
  }
}

}  // namespace

Rational NormalizeEpsilon(const Rational& eps) {
  if (eps <= 0) throw InputError("epsilon must be positive");
  return Rational(BigInt(1), Ceil(1 / eps));
}

ProfitVector RoundProfits(const Instance& instance, const Rational& eps) {
  if (eps <= 0) throw PreconditionError("epsilon must be positive");
  Rational w_max = 0;
  for (const Task& t : instance.tasks()) w_max = std::max(w_max, t.weight);
  if (w_max == 0) {
    throw PreconditionError("rounding needs a task of positive weight");
  }
  const Rational scale =
      Rational(static_cast<long>(instance.num_tasks())) / (eps * w_max);
  ProfitVector profits;
  profits.reserve(instance.num_tasks());
  for (const Task& t : instance.tasks()) {
    profits.push_back(ToInt64(Floor(scale * t.weight)));
  }
  return profits;
}

int64_t CompositionBudget(std::size_t num_paths, const Rational& eps) {
  return ToInt64(
      Floor((1 + eps) / eps * Rational(static_cast<long>(num_paths))));
}

void EnumerateCompositions(
    int k, int64_t budget,
    const std::function<void(const std::vector<int64_t>&)>& visit) {
  if (k < 1) throw PreconditionError("composition length must be >= 1");
  if (budget < 0) throw PreconditionError("composition budget must be >= 0");
  std::vector<int64_t> x(k, 0);
  std::function<void(int, int64_t)> rec = [&](int j, int64_t left) {
    if (j == k) {
      visit(x);
      return;
    }
    for (int64_t v = 0; v <= left; ++v) {
      x[j] = v;
      rec(j + 1, left - v);
    }
    x[j] = 0;
  };
  rec(0, budget);
}

BigInt CountCompositions(int k, int64_t budget) {
  if (k < 1) throw PreconditionError("composition length must be >= 1");
  if (budget < 0) throw PreconditionError("composition budget must be >= 0");
  return Binomial(static_cast<unsigned long>(budget + k),
                  static_cast<unsigned long>(k));
}

long double CompositionBound(int k, const Rational& eps) {
  const long double e = eps.get_d();
  return std::pow((1.0L + 2.0L * e) / e * std::exp(1.0L),
                  static_cast<long double>(k));
}

std::vector<Rational> OptGuesses(std::size_t num_tasks, const Rational& eps) {
  const Rational n(static_cast<long>(num_tasks));
  const Rational limit = n * n / eps;
  const Rational ratio = 1 + eps;
  std::vector<Rational> guesses;
  Rational g = 1;
  while (true) {
    guesses.push_back(g);
    if (g > limit) break;
    g *= ratio;
  }
  return guesses;
}

UfpResult SolveUfpCore(const Instance& instance, const Rational& eps,
                       const UfpOptions& options) {
  CheckCoreEpsilon(eps);
  UfpResult result;
  result.weight = 0;
  result.stats.requested_epsilon = eps;
  result.stats.core_epsilon = eps;
  result.stats.num_tasks = instance.num_tasks();
  result.stats.guesses_tried = 0;
  if (instance.num_tasks() == 0) return result;

  const ProfitVector profits = RoundProfits(instance, eps);
  const SolTables tables = BuildProfitTables(instance, profits);
  result.stats.num_paths = tables.num_paths();
  result.stats.table_cells = tables.CellCount();
  for (const PathTable& t : tables.tables()) {
    result.stats.table_sizes.push_back(t.total_profit + 1);
  }

  GuessEvaluator evaluator(instance, tables, eps, options.search);
  result.stats.guess_budget = evaluator.budget();
  const std::vector<Rational> guesses = OptGuesses(instance.num_tasks(), eps);
  result.stats.opt_guesses = guesses.size();
  for (std::size_t g = 0; g < guesses.size(); ++g) {
    evaluator.RunOptGuess(guesses[g], g);
  }
  result.stats.guesses_tried = evaluator.covered();
  result.stats.guesses_evaluated = evaluator.evaluated();

  // Rebuild the winning candidate once from (opt guess*, X*).
  const Rational best_guess = guesses[evaluator.best_guess_index()];
  const Rational step =
      eps * best_guess / static_cast<long>(tables.num_paths());
  const std::vector<int64_t>& x = evaluator.best_guess();
  TaskSet selection;
  int64_t profit = 0;
  for (std::size_t j = 0; j < tables.num_paths(); ++j) {
    const PathTable& t = tables.table(j);
    const int64_t index = std::min(
        t.total_profit, ClampToInt64(Ceil(step * x[j]), t.total_profit));
    const SolEntry& entry = tables.Lookup(j, index);
    selection = selection.Union(entry.subset);
    profit += entry.profit;
  }
  if (profit != evaluator.best_profit() ||
      !CheckFeasible(instance, selection).feasible) {
    throw std::logic_error("reconstructed candidate disagrees with search");
  }
  result.selection = std::move(selection);
  result.profit = profit;
  result.weight = TotalWeight(instance, result.selection);
  result.stats.best_profit = profit;
  result.stats.best_opt_guess = best_guess;
  result.stats.best_guess = x;
  return result;
}

UfpResult SolveUfp(const Instance& instance, const Rational& eps,
                   const UfpOptions& options) {
  CheckCoreEpsilon(eps);
  const Preprocessed<Instance> pre = Preprocess(instance);
  const Rational core = NormalizeEpsilon(eps) / 2;
  UfpResult result = SolveUfpCore(pre.instance, core, options);
  result.stats.requested_epsilon = eps;
  result.stats.dropped_tasks = pre.dropped.size();
  return result;
}

}  // namespace ufp

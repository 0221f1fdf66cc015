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

#include "ufp/reduction.h"

#include <algorithm>
#include <optional>
#include <sstream>

#include "ufp/errors.h"
#include "ufp/io.h"

namespace ufp {
namespace {

void RequireNormalized(const SsmInstance& ssm) {
  ValidateShape(ssm);
  if (!IsNormalized(ssm)) {
    throw PreconditionError("SSM instance is not normalized");
  }
}

void RequireIndexSum(const SsmInstance& ssm, int x) {
  if (x < ssm.k || x > ssm.k * ssm.n) {
    throw InputError("x = " + std::to_string(x) + " outside [" +
                     std::to_string(ssm.k) + ", " +
                     std::to_string(ssm.k * ssm.n) + "]");
  }
}

}  // namespace

void ValidateShape(const SsmInstance& ssm) {
  if (ssm.k < 1 || ssm.n < 1) throw InputError("SSM needs k >= 1 and n >= 1");
  if (ssm.sets.size() != static_cast<std::size_t>(ssm.k)) {
    throw InputError("SSM has " + std::to_string(ssm.sets.size()) +
                     " sets, expected " + std::to_string(ssm.k));
  }
  for (const auto& set : ssm.sets) {
    if (set.size() != static_cast<std::size_t>(ssm.n)) {
      throw InputError("SSM set has " + std::to_string(set.size()) +
                       " values, expected " + std::to_string(ssm.n));
    }
  }
}

Rational SsmMass(const SsmInstance& ssm) {
  Rational mass = 2 * ssm.target;
  for (const auto& set : ssm.sets) {
    for (const Rational& a : set) mass += a;
  }
  return mass;
}

bool IsNormalized(const SsmInstance& ssm) {
  if (2 * ssm.target >= 1 || SsmMass(ssm) >= 1) return false;
  const Rational cap = 2 * ssm.target / ssm.k;
  for (const auto& set : ssm.sets) {
    for (const Rational& a : set) {
      if (a <= 0 || a >= cap) return false;
    }
  }
  return true;
}

SsmInstance NormalizeSsm(const SsmInstance& raw) {
  ValidateShape(raw);
  if (raw.target <= 0) throw InputError("SSM target must be positive");
  Rational shift = 0;
  for (const auto& set : raw.sets) {
    for (const Rational& a : set) {
      if (a <= 0) throw InputError("SSM values must be positive");
      shift = std::max(shift, a);
    }
  }
  SsmInstance out = raw;
  Rational sum = 0;
  for (auto& set : out.sets) {
    for (Rational& a : set) {
      a += shift;
      sum += a;
    }
  }
  out.target += raw.k * shift;
  const Rational scale = 1 / (2 * (2 * out.target + sum));
  for (auto& set : out.sets) {
    for (Rational& a : set) a *= scale;
  }
  out.target *= scale;
  return out;
}

SsmInstance ParseSsm(std::string_view text) {
  SsmInstance ssm;
  std::optional<int> k;
  std::optional<int> n;
  std::optional<Rational> target;
  std::vector<std::optional<std::vector<Rational>>> sets;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    const auto tokens = Tokenize(text.substr(pos, nl - pos));
    pos = nl + 1;
    ++line_no;
    if (tokens.empty()) continue;
    try {
      if (tokens[0] == "k" || tokens[0] == "n") {
        if (tokens.size() != 2) throw InputError("expected one integer");
        const int v = ParseInt(tokens[1]);
        if (v < 1) throw InputError("value must be at least 1");
        (tokens[0] == "k" ? k : n) = v;
        if (tokens[0] == "k") sets.assign(v, std::nullopt);
      } else if (tokens[0] == "set") {
        if (!k || !n) throw InputError("'set' before 'k' and 'n'");
        if (tokens.size() != static_cast<std::size_t>(*n) + 2) {
          throw InputError("expected 'set <i>' and " + std::to_string(*n) +
                           " values");
        }
        const int i = ParseInt(tokens[1]);
        if (i < 1 || i > *k) throw InputError("set index out of range");
        if (sets[i - 1]) throw InputError("duplicate set " + std::to_string(i));
        std::vector<Rational> values;
        for (std::size_t t = 2; t < tokens.size(); ++t) {
          values.push_back(ParseRational(tokens[t]));
        }
        sets[i - 1] = std::move(values);
      } else if (tokens[0] == "target") {
        if (tokens.size() != 2) throw InputError("expected one rational");
        target = ParseRational(tokens[1]);
      } else {
        throw InputError("unknown directive '" + std::string(tokens[0]) + "'");
      }
    } catch (const InputError& e) {
      throw InputError("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  if (!k || !n || !target) throw InputError("SSM needs k, n and target");
  ssm.k = *k;
  ssm.n = *n;
  ssm.target = *target;
  for (int i = 0; i < *k; ++i) {
    if (!sets[i]) throw InputError("missing set " + std::to_string(i + 1));
    ssm.sets.push_back(*sets[i]);
  }
  return ssm;
}

std::string SerializeSsm(const SsmInstance& ssm) {
  std::ostringstream out;
  out << "k " << ssm.k << "\nn " << ssm.n << "\n";
  for (int i = 0; i < ssm.k; ++i) {
    out << "set " << i + 1;
    for (const Rational& a : ssm.sets[i]) out << ' ' << ToString(a);
    out << '\n';
  }
  out << "target " << ToString(ssm.target) << '\n';
  return out.str();
}

ReductionParams ComputeReductionParams(const SsmInstance& ssm) {
  RequireNormalized(ssm);
  ReductionParams p;
  const BigInt k = ssm.k;
  const BigInt kn = k * ssm.n;
  p.r = SsmMass(ssm);
  p.W = 1 + p.r;
  p.Q = 1 + Rational(kn + 1) * p.W;
  p.L = 2 * kn * kn + 1;
  p.H = 2 * k * k * p.L + 2 * k * k * ssm.n + 1;
  return p;
}

int ZTaskId(const SsmInstance& ssm, int i, int j) {
  return (i - 1) * ssm.n + j;
}

int QTaskId(const SsmInstance& ssm, int i, int j) {
  return ssm.k * ssm.n + (i - 1) * ssm.n + j;
}

int DeltaTaskId(const SsmInstance& ssm, int i) {
  return 2 * ssm.k * ssm.n + i;
}

Instance BuildUfpInstance(const SsmInstance& ssm, int x) {
  const ReductionParams p = ComputeReductionParams(ssm);
  RequireIndexSum(ssm, x);
  const int k = ssm.k;
  const int m = 2 * k + 1;
  const Rational base_cap = k * p.Q + x * p.W;
  std::vector<Rational> caps(m, base_cap + p.r);
  caps[0] = base_cap + ssm.target;      // e_0
  caps[m - 1] = base_cap + ssm.target;  // e_k

  const Rational L = p.L;
  const Rational H = p.H;
  std::vector<Task> tasks;
  for (int i = 1; i <= k; ++i) {
    for (int j = 1; j <= ssm.n; ++j) {
      const Rational& a = ssm.sets[i - 1][j - 1];
      tasks.push_back(Task{ZTaskId(ssm, i, j), Subpath{1, 2 * i - 1},
                           p.Q + j * p.W + a, H + i * L + i * j});
      tasks.push_back(Task{QTaskId(ssm, i, j), Subpath{2 * i + 1, m},
                           p.Q + j * p.W + 2 * ssm.target / k - a,
                           H + (k + 1 - i) * L + (k + 1 - i) * j});
    }
    tasks.push_back(Task{DeltaTaskId(ssm, i), Subpath{2 * i, 2 * i}, p.Q, H});
  }
  return Instance(m, std::move(caps), std::move(tasks));
}

Rational ProfitThreshold(const SsmInstance& ssm, int x) {
  const ReductionParams p = ComputeReductionParams(ssm);
  RequireIndexSum(ssm, x);
  const int k = ssm.k;
  return Rational(3 * k * p.H + k * (k + 1) * p.L) + k * (k + 1) * x;
}

Rational WitnessProfit(const SsmInstance& ssm, int x) {
  const ReductionParams p = ComputeReductionParams(ssm);
  RequireIndexSum(ssm, x);
  const int k = ssm.k;
  return Rational(3 * k * p.H + k * (k + 1) * p.L) + (k + 1) * x;
}

SsmDecision DecideSsmBruteforce(const SsmInstance& ssm, uint64_t limit) {
  ValidateShape(ssm);
  BigInt total = 1;
  for (int i = 0; i < ssm.k; ++i) total *= ssm.n;
  if (total > BigInt(static_cast<unsigned long>(limit))) {
    throw LimitError("n^k = " + ToString(total) + " exceeds limit " +
                     std::to_string(limit));
  }
  SsmDecision decision;
  std::vector<int> picks(ssm.k, 1);
  while (true) {
    ++decision.tuples;
    Rational sum = 0;
    for (int i = 0; i < ssm.k; ++i) sum += ssm.sets[i][picks[i] - 1];
    if (sum == ssm.target) {
      decision.yes = true;
      decision.witness = picks;
      return decision;
    }
    int i = ssm.k - 1;
    while (i >= 0 && picks[i] == ssm.n) picks[i--] = 1;
    if (i < 0) break;
    ++picks[i];
  }
  return decision;
}

UfpDecision DecideSsmViaUfp(const SsmInstance& ssm, std::size_t oracle_limit,
                            ThresholdRule rule) {
  RequireNormalized(ssm);
  const std::size_t tasks = 2 * static_cast<std::size_t>(ssm.k) * ssm.n + ssm.k;
  if (tasks > oracle_limit) {
    throw LimitError("reduction instance has " + std::to_string(tasks) +
                     " tasks, oracle limit is " + std::to_string(oracle_limit));
  }
  UfpDecision decision;
  for (int x = ssm.k; x <= ssm.k * ssm.n; ++x) {
    IndexSumResult r;
    r.x = x;
    r.stated_threshold = ProfitThreshold(ssm, x);
    r.threshold = rule == ThresholdRule::kStated ? r.stated_threshold
                                                 : WitnessProfit(ssm, x);
    r.opt = ExactUfp(BuildUfpInstance(ssm, x), oracle_limit);
    r.reaches = r.opt.value >= r.threshold;
    if (r.reaches && !decision.yes) {
      decision.yes = true;
      decision.first_x = x;
    }
    decision.per_x.push_back(std::move(r));
  }
  return decision;
}

TaskSet WitnessSelection(const SsmInstance& ssm, const std::vector<int>& picks) {
  ValidateShape(ssm);
  if (picks.size() != static_cast<std::size_t>(ssm.k)) {
    throw InputError("expected one pick per set");
  }
  TaskSet sel;
  for (int i = 1; i <= ssm.k; ++i) {
    const int j = picks[i - 1];
    if (j < 1 || j > ssm.n) throw InputError("pick out of range");
    sel.Insert(ZTaskId(ssm, i, j));
    sel.Insert(QTaskId(ssm, i, j));
    sel.Insert(DeltaTaskId(ssm, i));
  }
  return sel;
}

std::size_t MaxTasksOnEdge(const Instance& instance, const TaskSet& sel) {
  std::vector<std::size_t> count(instance.num_edges(), 0);
  for (int id : sel) {
    const Task& t = instance.task(id);
    for (int e = t.path.first; e <= t.path.last; ++e) ++count[e - 1];
  }
  return count.empty() ? 0 : *std::max_element(count.begin(), count.end());
}

}  // namespace ufp

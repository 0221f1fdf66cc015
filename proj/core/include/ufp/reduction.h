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

#ifndef UFP_REDUCTION_H_
#define UFP_REDUCTION_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ufp/model.h"
#include "ufp/oracle.h"
#include "ufp/rational.h"

namespace ufp {

// Subset sum with multiple choice: pick one number from each of the k sets
// so that the picks sum to `target` exactly.
struct SsmInstance {
  int k = 0;
  int n = 0;
  std::vector<std::vector<Rational>> sets;  // k rows of n values
  Rational target;
  friend bool operator==(const SsmInstance&, const SsmInstance&) = default;
};

// Throws InputError unless k, n >= 1 and the matrix is k x n.
void ValidateShape(const SsmInstance& ssm);

// 2B + sum of all values.
Rational SsmMass(const SsmInstance& ssm);

// All values positive, 2B < 1, mass < 1 and every value below 2B / k.
bool IsNormalized(const SsmInstance& ssm);

// Shifts every value by t = max value (the target by k t), then scales by
// 1 / (2 (2B' + sum')). Throws InputError on non-positive input.
SsmInstance NormalizeSsm(const SsmInstance& raw);

//   k <int>
//   n <int>
//   set <i> <r_1> ... <r_n>
//   target <r>
SsmInstance ParseSsm(std::string_view text);
std::string SerializeSsm(const SsmInstance& ssm);

struct ReductionParams {
  Rational r;  // mass
  Rational W;
  Rational Q;
  BigInt L;
  BigInt H;
};

// Requires a normalized instance (PreconditionError otherwise).
ReductionParams ComputeReductionParams(const SsmInstance& ssm);

// Task ids of the constructed instance, for 1 <= i <= k, 1 <= j <= n.
int ZTaskId(const SsmInstance& ssm, int i, int j);
int QTaskId(const SsmInstance& ssm, int i, int j);
int DeltaTaskId(const SsmInstance& ssm, int i);

// The instance for index sum x, on 2k + 1 edges: e_h sits at 2h + 1 and f_i
// at 2i. Requires a normalized instance; x outside [k, kn] is an InputError.
Instance BuildUfpInstance(const SsmInstance& ssm, int x);

// 3kH + k(k+1)L + k(k+1)x, the threshold as stated with the construction.
Rational ProfitThreshold(const SsmInstance& ssm, int x);

// 3kH + k(k+1)L + (k+1)x: the weight of {z^i_r(i), q^i_r(i), delta_i} when
// the picks sum to x, since the index terms add up to sum (k+1) r(i). Equals
// ProfitThreshold only for k = 1.
Rational WitnessProfit(const SsmInstance& ssm, int x);

enum class ThresholdRule { kWitnessProfit, kStated };

struct SsmDecision {
  bool yes = false;
  std::vector<int> witness;  // 1-based pick per set, lexicographically first
  uint64_t tuples = 0;
};

inline constexpr uint64_t kDefaultSsmLimit = 1000000;

// Enumerates all n^k pick vectors in lexicographic order. Throws LimitError
// when n^k exceeds `limit`.
SsmDecision DecideSsmBruteforce(const SsmInstance& ssm,
                                uint64_t limit = kDefaultSsmLimit);

struct IndexSumResult {
  int x = 0;
  Rational stated_threshold;
  Rational threshold;
  OptResult opt;
  bool reaches = false;
};

struct UfpDecision {
  bool yes = false;
  int first_x = 0;  // smallest x that reaches its threshold, 0 if none
  std::vector<IndexSumResult> per_x;
};

// Solves every U_x exactly and reports whether some optimum reaches the
// threshold chosen by `rule`. Requires a normalized instance; throws
// LimitError when 2kn + k exceeds `oracle_limit`.
UfpDecision DecideSsmViaUfp(const SsmInstance& ssm,
                            std::size_t oracle_limit = kDefaultOracleLimit,
                            ThresholdRule rule = ThresholdRule::kWitnessProfit);

// {z^i_{r(i)}, q^i_{r(i)}, delta_i : i = 1..k}, feasible in U_x for
// x = sum r(i) when the picks hit the target.
TaskSet WitnessSelection(const SsmInstance& ssm, const std::vector<int>& picks);

// Largest number of selected tasks sharing one edge.
std::size_t MaxTasksOnEdge(const Instance& instance, const TaskSet& sel);

}  // namespace ufp

#endif  // UFP_REDUCTION_H_

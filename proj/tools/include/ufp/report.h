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

#ifndef UFP_REPORT_H_
#define UFP_REPORT_H_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ufp/io.h"
#include "ufp/model.h"
#include "ufp/rational.h"
#include "ufp/ufp_eptas.h"

namespace ufp {

inline constexpr int kReportSchemaVersion = 1;

enum class Algorithm { kExact, kUfpEptas, kBagEptas };

std::string ToString(Algorithm algorithm);
// Throws InputError for unknown names.
Algorithm ParseAlgorithm(const std::string& name);

struct RunReport {
  std::string algorithm;
  std::optional<Rational> epsilon;
  std::string digest;
  TaskSet ids;
  Rational weight;
  bool feasible = true;
  std::vector<Rational> loads;
  std::optional<Rational> oracle_weight;
  std::optional<Rational> ratio;  // weight / oracle weight
  std::optional<double> wall_ms;
  nlohmann::ordered_json counters = nlohmann::ordered_json::object();
};

struct SolveRequest {
  Algorithm algorithm = Algorithm::kExact;
  std::optional<Rational> epsilon;  // required by the schemes
  bool with_oracle = false;
  bool with_timing = false;
  std::size_t oracle_limit = 25;
  UfpOptions ufp_options;
};

// Runs one solver and fills the report; counters hold the solver statistics.
// Throws InputError for a missing epsilon or a bag instance given to the UFP
// scheme, and LimitError when the oracle cap is exceeded.
RunReport RunSolve(const ParsedInstance& instance, const SolveRequest& request);

// Keys in fixed order: schema_version, algorithm, epsilon, digest, ids,
// weight, feasible, loads, then oracle_weight, ratio, wall_ms and stats when
// present. Rationals are "a/b" strings.
nlohmann::ordered_json ToJson(const RunReport& report, bool with_stats);

// key: value lines for terminals.
std::string ToText(const RunReport& report, bool with_stats);

nlohmann::ordered_json FractionJson(const Rational& value);

}  // namespace ufp

#endif  // UFP_REPORT_H_

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

#include "ufp/report.h"

#include <chrono>
#include <sstream>
#include <variant>

#include "ufp/bag_eptas.h"
#include "ufp/errors.h"
#include "ufp/oracle.h"

namespace ufp {
namespace {

using Json = nlohmann::ordered_json;

Json IntList(const std::vector<int64_t>& values) {
  Json list = Json::array();
  for (int64_t v : values) list.push_back(v);
  return list;
}

Json UfpCounters(const UfpStats& s) {
  Json c;
  c["requested_epsilon"] = FractionJson(s.requested_epsilon);
  c["core_epsilon"] = FractionJson(s.core_epsilon);
  c["num_tasks"] = s.num_tasks;
  c["dropped_tasks"] = s.dropped_tasks;
  c["num_paths"] = s.num_paths;
  c["guess_budget"] = s.guess_budget;
  c["opt_guesses"] = s.opt_guesses;
  c["guesses_tried"] = ToString(s.guesses_tried);
  c["guesses_evaluated"] = s.guesses_evaluated;
  c["table_cells"] = s.table_cells;
  c["best_profit"] = s.best_profit;
  c["best_opt_guess"] = FractionJson(s.best_opt_guess);
  c["best_guess"] = IntList(s.best_guess);
  return c;
}

Json BagCounters(const BagStats& s) {
  Json c;
  c["requested_epsilon"] = FractionJson(s.requested_epsilon);
  c["core_epsilon"] = FractionJson(s.core_epsilon);
  c["num_tasks"] = s.num_tasks;
  c["dropped_tasks"] = s.dropped_tasks;
  c["weight_scale"] = FractionJson(s.weight_scale);
  c["opt_guesses"] = s.opt_guesses;
  c["max_fixed_size"] = s.max_fixed_size;
  c["fixed_sets"] = s.fixed_sets;
  c["lp_solves"] = s.lp_solves;
  c["max_fractional"] = s.max_fractional;
  c["sparsity_violations"] = s.sparsity_violations;
  c["max_rep_set"] = s.max_rep_set;
  c["max_class_count"] = s.max_class_count;
  c["rep_set_within_bound"] = s.rep_set_within_bound;
  c["class_count_within_bound"] = s.class_count_within_bound;
  c["best_opt_guess"] = FractionJson(s.best_opt_guess);
  Json fixed = Json::array();
  for (int id : s.best_fixed) fixed.push_back(id);
  c["best_fixed"] = fixed;
  return c;
}

const Instance& BaseOf(const ParsedInstance& instance) {
  if (const auto* bag = std::get_if<BagInstance>(&instance)) return bag->base();
  return std::get<Instance>(instance);
}

const Rational& RequireEpsilon(const SolveRequest& request) {
  if (!request.epsilon) {
    throw InputError(ToString(request.algorithm) + " needs --eps");
  }
  return *request.epsilon;
}

}  // namespace

std::string ToString(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::kExact:
      return "exact";
    case Algorithm::kUfpEptas:
      return "ufp-eptas";
    case Algorithm::kBagEptas:
      return "bag-eptas";
  }
  return "unknown";
}

Algorithm ParseAlgorithm(const std::string& name) {
  if (name == "exact") return Algorithm::kExact;
  if (name == "ufp-eptas") return Algorithm::kUfpEptas;
  if (name == "bag-eptas") return Algorithm::kBagEptas;
  throw InputError("unknown algorithm '" + name + "'");
}

Json FractionJson(const Rational& value) { return ToFractionString(value); }

RunReport RunSolve(const ParsedInstance& instance, const SolveRequest& request) {
  RunReport report;
  report.algorithm = ToString(request.algorithm);
  report.epsilon = request.epsilon;
  report.digest = InstanceDigest(instance);
  const Instance& base = BaseOf(instance);
  const auto* bag = std::get_if<BagInstance>(&instance);

  const auto start = std::chrono::steady_clock::now();
  switch (request.algorithm) {
    case Algorithm::kExact: {
      report.epsilon.reset();
      const OptResult opt = bag ? ExactBagUfp(*bag, request.oracle_limit)
                                : ExactUfp(base, request.oracle_limit);
      report.ids = opt.witness;
      report.counters["explored"] = opt.explored;
      break;
    }
    case Algorithm::kUfpEptas: {
      if (bag) throw InputError("ufp-eptas needs a plain UFP instance");
      const UfpResult r = SolveUfp(base, RequireEpsilon(request),
                                   request.ufp_options);
      report.ids = r.selection;
      report.counters = UfpCounters(r.stats);
      break;
    }
    case Algorithm::kBagEptas: {
      const Rational& eps = RequireEpsilon(request);
      const BagResult r =
          bag ? SolveBagUfp(*bag, eps) : SolveBagUfp(SingletonBags(base), eps);
      report.ids = r.selection;
      report.counters = BagCounters(r.stats);
      break;
    }
  }
  const auto stop = std::chrono::steady_clock::now();
  if (request.with_timing) {
    report.wall_ms =
        std::chrono::duration<double, std::milli>(stop - start).count();
  }

  report.weight = TotalWeight(base, report.ids);
  report.feasible = bag ? CheckFeasible(*bag, report.ids).feasible
                        : CheckFeasible(base, report.ids).feasible;
  report.loads = EdgeLoads(base, report.ids);
  if (request.with_oracle) {
    const OptResult opt = bag ? ExactBagUfp(*bag, request.oracle_limit)
                              : ExactUfp(base, request.oracle_limit);
    report.oracle_weight = opt.value;
    report.ratio = opt.value == 0 ? Rational(1) : report.weight / opt.value;
  }
  return report;
}

Json ToJson(const RunReport& report, bool with_stats) {
  Json j;
  j["schema_version"] = kReportSchemaVersion;
  j["algorithm"] = report.algorithm;
  j["epsilon"] = report.epsilon ? FractionJson(*report.epsilon) : Json(nullptr);
  j["digest"] = report.digest;
  Json ids = Json::array();
  for (int id : report.ids) ids.push_back(id);
  j["ids"] = ids;
  j["weight"] = FractionJson(report.weight);
  j["feasible"] = report.feasible;
  Json loads = Json::array();
  for (const Rational& l : report.loads) loads.push_back(FractionJson(l));
  j["loads"] = loads;
  if (report.oracle_weight) j["oracle_weight"] = FractionJson(*report.oracle_weight);
  if (report.ratio) j["ratio"] = FractionJson(*report.ratio);
  if (report.wall_ms) j["wall_ms"] = *report.wall_ms;
  if (with_stats) j["stats"] = report.counters;
  return j;
}

std::string ToText(const RunReport& report, bool with_stats) {
  std::ostringstream out;
  out << "algorithm: " << report.algorithm << '\n';
  if (report.epsilon) out << "epsilon: " << ToString(*report.epsilon) << '\n';
  out << "digest: " << report.digest << '\n';
  out << "weight: " << ToString(report.weight) << '\n';
  out << "ids:";
  for (int id : report.ids) out << ' ' << id;
  out << '\n';
  out << "feasible: " << (report.feasible ? "yes" : "no") << '\n';
  out << "loads:";
  for (const Rational& l : report.loads) out << ' ' << ToString(l);
  out << '\n';
  if (report.oracle_weight) {
    out << "oracle_weight: " << ToString(*report.oracle_weight) << '\n';
    out << "ratio: " << ToString(*report.ratio) << '\n';
  }
  if (report.wall_ms) out << "wall_ms: " << *report.wall_ms << '\n';
  if (with_stats) {
    for (const auto& [key, value] : report.counters.items()) {
      out << "stats." << key << ": "
          << (value.is_string() ? value.get<std::string>() : value.dump())
          << '\n';
    }
  }
  return out.str();
}

}  // namespace ufp

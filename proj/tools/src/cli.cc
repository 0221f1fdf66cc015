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

#include "ufp/cli.h"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <functional>
#include <iomanip>
#include <optional>
#include <sstream>
#include <variant>

#include "ufp/bag_eptas.h"
#include "ufp/errors.h"
#include "ufp/generators.h"
#include "ufp/io.h"
#include "ufp/lp.h"
#include "ufp/oracle.h"
#include "ufp/reduction.h"
#include "ufp/report.h"
#include "ufp/ufp_eptas.h"

namespace ufp {
namespace {

namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;

// Raised for bad option values found after CLI11 parsing.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Rational ParseEpsilonOption(const std::string& text) {
  try {
    return ParseRational(text);
  } catch (const InputError& e) {
    throw UsageError(std::string("--eps: ") + e.what());
  }
}

std::string Decimal(const Rational& value) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(6) << value.get_d();
  return out.str();
}

const Instance& BaseOf(const ParsedInstance& instance) {
  if (const auto* bag = std::get_if<BagInstance>(&instance)) return bag->base();
  return std::get<Instance>(instance);
}

BagInstance AsBagInstance(const ParsedInstance& instance) {
  if (const auto* bag = std::get_if<BagInstance>(&instance)) return *bag;
  return SingletonBags(std::get<Instance>(instance));
}

void WriteOrPrint(const std::string& path, const std::string& text,
                  std::ostream& out) {
  if (path.empty()) {
    out << text;
  } else {
    WriteTextFileAtomic(path, text);
  }
}

struct SolveArgs {
  std::string alg = "exact";
  std::string eps;
  std::string input;
  std::string out;
  bool json = false;
  bool stats = false;
  bool oracle = false;
  bool timing = false;
  bool exhaustive = false;
};

int RunSolveCommand(const SolveArgs& a, std::ostream& out) {
  SolveRequest request;
  try {
    request.algorithm = ParseAlgorithm(a.alg);
  } catch (const InputError& e) {
    throw UsageError(e.what());
  }
  if (!a.eps.empty()) request.epsilon = ParseEpsilonOption(a.eps);
  if (request.algorithm != Algorithm::kExact && !request.epsilon) {
    throw UsageError(a.alg + " needs --eps");
  }
  request.with_oracle = a.oracle;
  request.with_timing = a.timing;
  request.oracle_limit = OracleLimitFromEnv();
  if (a.exhaustive) request.ufp_options.search = GuessSearch::kExhaustive;
  const ParsedInstance instance = ReadInstanceFile(a.input);
  const RunReport report = RunSolve(instance, request);
  const std::string text = a.json ? ToJson(report, a.stats).dump(2) + "\n"
                                  : ToText(report, a.stats);
  WriteOrPrint(a.out, text, out);
  return report.feasible ? kExitOk : kExitFailure;
}

struct GenRandomArgs {
  GenSpec spec;
  std::string regime = "uniform";
  std::string out;
};

int RunGenRandom(const GenRandomArgs& a, std::ostream& out) {
  GenSpec spec = a.spec;
  try {
    spec.regime = ParseRegime(a.regime);
  } catch (const InputError& e) {
    throw UsageError(e.what());
  }
  const ParsedInstance instance = GenRandom(spec);
  const std::string text = SerializeInstance(instance);
  WriteOrPrint(a.out, text, out);
  if (!a.out.empty()) {
    out << "wrote " << a.out << " digest " << InstanceDigest(instance) << '\n';
  }
  return kExitOk;
}

SsmInstance LoadNormalizedSsm(const std::string& path, std::ostream& out) {
  const SsmInstance raw = ParseSsm(ReadTextFile(path));
  ValidateShape(raw);
  if (IsNormalized(raw)) return raw;
  out << "note: input is not normalized; applying shift and scale\n";
  return NormalizeSsm(raw);
}

struct GenReductionArgs {
  std::string ssm;
  int x = 0;
  bool all_x = false;
  std::string out_dir;
};

int RunGenReduction(const GenReductionArgs& a, std::ostream& out) {
  const SsmInstance ssm = LoadNormalizedSsm(a.ssm, out);
  std::vector<int> xs;
  if (a.all_x) {
    for (int x = ssm.k; x <= ssm.k * ssm.n; ++x) xs.push_back(x);
  } else {
    if (a.x < ssm.k || a.x > ssm.k * ssm.n) {
      throw UsageError("--x must lie in [" + std::to_string(ssm.k) + ", " +
                       std::to_string(ssm.k * ssm.n) + "]");
    }
    xs.push_back(a.x);
  }
  const std::size_t tasks = 2 * static_cast<std::size_t>(ssm.k) * ssm.n + ssm.k;
  if (tasks > OracleLimitFromEnv()) {
    out << "note: " << tasks << " tasks exceed the oracle limit; "
        << "verify reduction will refuse this instance\n";
  }
  fs::create_directories(a.out_dir);
  for (int x : xs) {
    const fs::path path = fs::path(a.out_dir) / ("u_x" + std::to_string(x) + ".ufp");
    std::ostringstream text;
    text << "# index sum x = " << x << ", profit threshold "
         << ToString(ProfitThreshold(ssm, x)) << ", witness profit "
         << ToString(WitnessProfit(ssm, x)) << '\n';
    text << SerializeInstance(BuildUfpInstance(ssm, x));
    WriteTextFileAtomic(path, text.str());
    out << "wrote " << path.string() << " threshold "
        << ToString(ProfitThreshold(ssm, x)) << " witness "
        << ToString(WitnessProfit(ssm, x)) << '\n';
  }
  return kExitOk;
}

struct VerifyRepsetArgs {
  std::string eps;
  std::string input;
  bool json = false;
};

int RunVerifyRepset(const VerifyRepsetArgs& a, std::ostream& out) {
  const Rational eps = ParseEpsilonOption(a.eps);
  if (eps <= 0 || eps > Rational(1, 2)) {
    throw UsageError("--eps must lie in (0, 1/2]");
  }
  const BagInstance instance = AsBagInstance(ReadInstanceFile(a.input));
  const RepresentativeCheck c =
      VerifyRepresentative(instance, eps, OracleLimitFromEnv());
  const bool ok = c.found && c.within_bound;
  if (a.json) {
    Json j;
    j["schema_version"] = kReportSchemaVersion;
    j["epsilon"] = FractionJson(eps);
    j["weight_scale"] = FractionJson(c.weight_scale);
    j["opt"] = FractionJson(c.opt);
    j["opt_guess"] = FractionJson(c.opt_guess);
    j["heavy"] = c.heavy.ids();
    j["rep_set"] = c.rep.reps.ids();
    j["rep_set_size"] = c.rep.reps.size();
    j["class_count"] = c.rep.class_count;
    j["q"] = ToString(c.rep.q);
    j["size_bound"] = FractionJson(c.rep.size_bound);
    j["required"] = FractionJson(c.required);
    j["found"] = c.found;
    j["witness"] = c.witness.ids();
    j["witness_weight"] = FractionJson(c.witness_weight);
    j["within_bound"] = c.within_bound;
    out << j.dump(2) << '\n';
  } else {
    out << "opt: " << ToString(c.opt) << " (weights x" << ToString(c.weight_scale)
        << ")\n";
    out << "opt_guess: " << ToString(c.opt_guess) << '\n';
    out << "heavy: " << c.heavy.DebugString() << '\n';
    out << "rep_set: " << c.rep.reps.DebugString() << " size "
        << c.rep.reps.size() << '\n';
    out << "class_count: " << c.rep.class_count << '\n';
    out << "within_bound: " << (c.within_bound ? "yes" : "no") << '\n';
    out << "required: " << ToString(c.required) << '\n';
    out << "witness: "
        << (c.found ? c.witness.DebugString() + " weight " +
                          ToString(c.witness_weight)
                    : std::string("none"))
        << '\n';
    out << "representative: " << (ok ? "yes" : "no") << '\n';
  }
  return ok ? kExitOk : kExitFailure;
}

int RunVerifyReduction(const std::string& path, std::ostream& out) {
  const SsmInstance ssm = LoadNormalizedSsm(path, out);
  const SsmDecision brute = DecideSsmBruteforce(ssm);
  const UfpDecision via = DecideSsmViaUfp(ssm, OracleLimitFromEnv());
  bool structure_ok = true;
  for (const IndexSumResult& r : via.per_x) {
    out << "x " << r.x << ": opt " << ToString(r.opt.value) << " threshold "
        << ToString(r.threshold) << " stated " << ToString(r.stated_threshold)
        << (r.reaches ? " reached" : "") << '\n';
    if (r.reaches) {
      const Instance u = BuildUfpInstance(ssm, r.x);
      if (MaxTasksOnEdge(u, r.opt.witness) > static_cast<std::size_t>(ssm.k)) {
        structure_ok = false;
      }
    }
  }
  if (brute.yes) {
    out << "bruteforce witness:";
    for (int p : brute.witness) out << ' ' << p;
    out << '\n';
  }
  out << "equivalent: " << (brute.yes ? "yes" : "no") << '/'
      << (via.yes ? "yes" : "no") << '\n';
  if (!structure_ok) out << "edge load structure violated\n";
  return brute.yes == via.yes && structure_ok ? kExitOk : kExitFailure;
}

int RunLpSolve(const std::string& path, bool json, std::ostream& out) {
  const LpProblem lp = ParseLpProblem(ReadTextFile(path));
  const BasicSolution sol = SolveLpBasic(lp);
  if (json) {
    Json j;
    j["schema_version"] = kReportSchemaVersion;
    j["objective"] = FractionJson(sol.objective);
    Json values = Json::object();
    for (std::size_t v = 0; v < sol.values.size(); ++v) {
      values[std::to_string(lp.variable_ids[v])] = FractionJson(sol.values[v]);
    }
    j["values"] = values;
    j["basis"] = sol.basis;
    j["fractional"] = CountFractional(sol);
    out << j.dump(2) << '\n';
  } else {
    out << "objective: " << ToString(sol.objective) << '\n';
    for (std::size_t v = 0; v < sol.values.size(); ++v) {
      out << "x[" << lp.variable_ids[v] << "] = " << ToString(sol.values[v])
          << '\n';
    }
    out << "basis:";
    for (std::size_t b : sol.basis) out << ' ' << b;
    out << "\nfractional: " << CountFractional(sol) << '\n';
  }
  return kExitOk;
}

struct CompareArgs {
  std::string dir;
  std::string ufp_eps = "1/12";
  std::string bag_eps = "1/4";
  std::string out;
};

int RunCompare(const CompareArgs& a, std::ostream& out) {
  const Rational ufp_eps = ParseEpsilonOption(a.ufp_eps);
  const Rational bag_eps = ParseEpsilonOption(a.bag_eps);
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(a.dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".ufp") {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end());
  const std::size_t limit = OracleLimitFromEnv();
  std::ostringstream csv;
  csv << "file,n,m,bags,opt,ufp_eptas,ufp_ratio,bag_eptas,bag_ratio\n";
  bool ok = true;
  for (const fs::path& file : files) {
    const ParsedInstance instance = ReadInstanceFile(file);
    const Instance& base = BaseOf(instance);
    if (base.num_tasks() > limit) {
      throw LimitError(file.filename().string() + " has " +
                       std::to_string(base.num_tasks()) +
                       " tasks, above the oracle limit " + std::to_string(limit));
    }
    const auto* bag = std::get_if<BagInstance>(&instance);
    const Rational opt =
        bag ? ExactBagUfp(*bag, limit).value : ExactUfp(base, limit).value;
    auto ratio = [&](const Rational& w) {
      return opt == 0 ? Rational(1) : Rational(w / opt);
    };
    csv << file.filename().string() << ',' << base.num_tasks() << ','
        << base.num_edges() << ',' << (bag ? bag->bags().size() : 0) << ','
        << ToString(opt) << ',';
    if (bag) {
      csv << "n/a,n/a,";
    } else {
      const UfpResult u = SolveUfp(base, ufp_eps);
      ok = ok && u.weight >= (1 - ufp_eps) * opt;
      csv << ToString(u.weight) << ',' << Decimal(ratio(u.weight)) << ',';
    }
    const BagResult b = SolveBagUfp(AsBagInstance(instance), bag_eps);
    ok = ok && b.weight >= (1 - bag_eps) * opt;
    csv << ToString(b.weight) << ',' << Decimal(ratio(b.weight)) << '\n';
  }
  WriteOrPrint(a.out, csv.str(), out);
  if (!a.out.empty()) out << "wrote " << a.out << " (" << files.size() << " instances)\n";
  if (!ok) out << "approximation guarantee violated\n";
  return ok ? kExitOk : kExitFailure;
}

struct BenchArgs {
  GenSpec spec;
  std::string regime = "tight";
  std::string alg = "ufp-eptas";
  std::string eps = "1/12";
  int count = 5;
};

int RunBench(const BenchArgs& a, std::ostream& out) {
  SolveRequest request;
  try {
    request.algorithm = ParseAlgorithm(a.alg);
  } catch (const InputError& e) {
    throw UsageError(e.what());
  }
  request.epsilon = ParseEpsilonOption(a.eps);
  request.oracle_limit = OracleLimitFromEnv();
  GenSpec spec = a.spec;
  try {
    spec.regime = ParseRegime(a.regime);
  } catch (const InputError& e) {
    throw UsageError(e.what());
  }
  if (a.count < 1) throw UsageError("--count must be at least 1");
  out << "seed,n,m,algorithm,weight,wall_ms\n";
  double total = 0;
  for (int i = 0; i < a.count; ++i) {
    spec.seed = a.spec.seed + static_cast<uint64_t>(i);
    const ParsedInstance instance = GenRandom(spec);
    const auto start = std::chrono::steady_clock::now();
    const RunReport report = RunSolve(instance, request);
    const double ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - start)
                          .count();
    total += ms;
    out << spec.seed << ',' << spec.n << ',' << spec.m << ',' << report.algorithm
        << ',' << ToString(report.weight) << ',' << ms << '\n';
  }
  out << "mean_ms," << total / a.count << '\n';
  return kExitOk;
}

void AddGenSpecOptions(CLI::App* cmd, GenSpec& spec) {
  cmd->add_option("--n", spec.n, "Number of tasks")->capture_default_str();
  cmd->add_option("--m", spec.m, "Number of edges")->capture_default_str();
  cmd->add_option("--seed", spec.seed, "PRNG seed")->capture_default_str();
  cmd->add_option("--bags", spec.bags, "Bag count, 0 for plain UFP")
      ->capture_default_str();
  cmd->add_option("--demand-lo", spec.demand_lo)->capture_default_str();
  cmd->add_option("--demand-hi", spec.demand_hi)->capture_default_str();
  cmd->add_option("--weight-lo", spec.weight_lo)->capture_default_str();
  cmd->add_option("--weight-hi", spec.weight_hi)->capture_default_str();
}

}  // namespace

int Dispatch(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err) {
  CLI::App app{"Solvers and verifiers for unsplittable flow on a path", "ufp"};
  app.require_subcommand(1);

  SolveArgs solve;
  CLI::App* solve_cmd = app.add_subcommand("solve", "Solve an instance file");
  solve_cmd->add_option("--alg", solve.alg, "exact | ufp-eptas | bag-eptas")
      ->capture_default_str();
  solve_cmd->add_option("--eps", solve.eps, "Error parameter, a rational");
  solve_cmd->add_option("--input", solve.input, "Instance file")->required();
  solve_cmd->add_option("--out", solve.out, "Write the report here");
  solve_cmd->add_flag("--json", solve.json, "JSON report");
  solve_cmd->add_flag("--stats", solve.stats, "Include solver counters");
  solve_cmd->add_flag("--oracle", solve.oracle, "Also run the exact oracle");
  solve_cmd->add_flag("--timing", solve.timing, "Include wall time");
  solve_cmd->add_flag("--exhaustive", solve.exhaustive,
                      "Visit every guess vector in the UFP scheme");

  CLI::App* gen_cmd = app.add_subcommand("gen", "Generate instances");
  gen_cmd->require_subcommand(1);
  GenRandomArgs gen_random;
  CLI::App* gen_random_cmd = gen_cmd->add_subcommand("random", "Random instance");
  AddGenSpecOptions(gen_random_cmd, gen_random.spec);
  gen_random_cmd->add_option("--regime", gen_random.regime,
                             "uniform | staircase | tight")
      ->capture_default_str();
  gen_random_cmd->add_option("--out", gen_random.out, "Output file");
  GenReductionArgs gen_reduction;
  CLI::App* gen_reduction_cmd =
      gen_cmd->add_subcommand("reduction", "Instances U_x of an SSM instance");
  gen_reduction_cmd->add_option("--ssm", gen_reduction.ssm, "SSM file")->required();
  auto* x_opt = gen_reduction_cmd->add_option("--x", gen_reduction.x, "Index sum");
  auto* all_opt = gen_reduction_cmd->add_flag("--all-x", gen_reduction.all_x,
                                              "Every x in [k, kn]");
  x_opt->excludes(all_opt);
  gen_reduction_cmd->add_option("--out", gen_reduction.out_dir, "Output directory")
      ->required();

  CLI::App* verify_cmd = app.add_subcommand("verify", "Property checks");
  verify_cmd->require_subcommand(1);
  VerifyRepsetArgs verify_repset;
  CLI::App* verify_repset_cmd =
      verify_cmd->add_subcommand("repset", "Representative-set check");
  verify_repset_cmd->add_option("--eps", verify_repset.eps)->required();
  verify_repset_cmd->add_option("--input", verify_repset.input)->required();
  verify_repset_cmd->add_flag("--json", verify_repset.json);
  std::string verify_ssm;
  CLI::App* verify_reduction_cmd =
      verify_cmd->add_subcommand("reduction", "SSM decided two ways");
  verify_reduction_cmd->add_option("--ssm", verify_ssm)->required();

  std::string lp_input;
  bool lp_json = false;
  CLI::App* lp_cmd = app.add_subcommand("lp-solve", "Solve a row-list LP");
  lp_cmd->add_option("--input", lp_input)->required();
  lp_cmd->add_flag("--json", lp_json);

  CompareArgs compare;
  CLI::App* compare_cmd =
      app.add_subcommand("compare", "Oracle versus both schemes, as CSV");
  compare_cmd->add_option("--dir", compare.dir, "Directory of .ufp files")
      ->required();
  compare_cmd->add_option("--ufp-eps", compare.ufp_eps)->capture_default_str();
  compare_cmd->add_option("--bag-eps", compare.bag_eps)->capture_default_str();
  compare_cmd->add_option("--out", compare.out, "CSV file");

  BenchArgs bench;
  CLI::App* bench_cmd = app.add_subcommand("bench", "Time a solver on random instances");
  AddGenSpecOptions(bench_cmd, bench.spec);
  bench_cmd->add_option("--regime", bench.regime)->capture_default_str();
  bench_cmd->add_option("--alg", bench.alg)->capture_default_str();
  bench_cmd->add_option("--eps", bench.eps)->capture_default_str();
  bench_cmd->add_option("--count", bench.count)->capture_default_str();

  std::vector<const char*> argv{"ufp"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (solve_cmd->parsed()) return RunSolveCommand(solve, out);
    if (gen_random_cmd->parsed()) return RunGenRandom(gen_random, out);
    if (gen_reduction_cmd->parsed()) {
      if (!gen_reduction.all_x && x_opt->count() == 0) {
        throw UsageError("gen reduction needs --x or --all-x");
      }
      return RunGenReduction(gen_reduction, out);
    }
    if (verify_repset_cmd->parsed()) return RunVerifyRepset(verify_repset, out);
    if (verify_reduction_cmd->parsed()) return RunVerifyReduction(verify_ssm, out);
    if (lp_cmd->parsed()) return RunLpSolve(lp_input, lp_json, out);
    if (compare_cmd->parsed()) return RunCompare(compare, out);
    if (bench_cmd->parsed()) return RunBench(bench, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n' << app.help();
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  err << app.help();
  return kExitUsage;
}

}  // namespace ufp

// Copyright 2026 The Authors.
//
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

#include "fair_range/cli.h"

#include <cmath>
#include <optional>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "fair_range/error.h"
#include "fair_range/generators.h"
#include "fair_range/io.h"
#include "fair_range/pipeline.h"
#include "fair_range/study.h"

namespace fair_range {
namespace {

std::vector<GroupRange> ParseRanges(const std::string& text) {
  std::vector<GroupRange> ranges;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) {
      throw FairRangeError(ErrorKind::kInvalidArgument, "cli",
                           "range '" + item + "' is not a:b");
    }
    try {
      ranges.push_back({std::stoi(item.substr(0, colon)),
                        std::stoi(item.substr(colon + 1))});
    } catch (const std::exception&) {
      throw FairRangeError(ErrorKind::kInvalidArgument, "cli",
                           "range '" + item + "' is not a:b");
    }
  }
  return ranges;
}

void Emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
  } else {
    WriteTextFile(path, text);
  }
}

struct SolveArgs {
  std::string path;
  std::optional<double> p;
  std::optional<int> k;
  std::string ranges;
  bool oracle = false;
  std::string out;
  std::optional<double> tolerance;
  std::uint64_t seed = 0;
  bool lenient = false;
};

int Solve(const SolveArgs& a, std::ostream& out, std::ostream& err) {
  LoadedInstance loaded = ToInstance(ParseInstanceDocument(ReadTextFile(a.path)));
  MetricInstance& inst = loaded.instance;
  RangeConstraints& rc = loaded.ranges;
  if (a.p) inst.p = *a.p;
  if (a.k) rc.k = *a.k;
  if (!a.ranges.empty()) rc.ranges = ParseRanges(a.ranges);

  const ValidationReport valid = ValidateInstance(inst, a.seed);
  if (!valid.ok()) {
    err << "invalid instance:\n" << valid.ToString();
    return kExitError;
  }
  const ValidationReport rv = ValidateRanges(rc, inst.num_groups);
  if (!rv.ok()) {
    err << "invalid ranges:\n" << rv.ToString();
    return kExitError;
  }
  if (!CheckRangeFeasibility(inst.GroupSizes(), rc)) {
    err << "infeasible ranges: no " << rc.k
        << "-subset of facilities meets every group range\n";
    return kExitInfeasible;
  }
  SolverConfig config;
  config.validation_seed = a.seed;
  config.strict = !a.lenient;
  if (a.tolerance) config.tol.certificate = *a.tolerance;
  const SolveReport report = SolveFairRange(inst, rc, config);

  std::optional<OracleSummary> oracle;
  if (a.oracle) {
    if (BinomialSaturating(inst.num_facilities(), rc.k) > kOracleBudget) {
      err << "oracle skipped: C(|F|, k) exceeds " << kOracleBudget << "\n";
    } else {
      OracleSummary s{BruteForceOptimum(inst, rc), 0.0};
      const double solver = std::pow(report.solution.cost_p, 1.0 / inst.p);
      const double best = std::pow(s.result.cost_p, 1.0 / inst.p);
      s.ratio = best > 0.0 ? solver / best : (solver > 0.0 ? INFINITY : 1.0);
      oracle = s;
    }
  }
  Emit(a.out, SerializeReport(inst, rc, report, oracle), out);
  for (const Certificate& c : report.certificates)
    if (!c.passed) err << "certificate failed: " << c.name << "\n";
  for (const std::string& v : report.violations) err << "violation: " << v << "\n";
  for (const std::string& w : report.warnings) err << "warning: " << w << "\n";
  return kExitOk;
}

struct GenerateArgs {
  std::string kind;
  int k = 6;
  int n = 24;
  double m = 1.0;
  double M = 2.0;
  double p = 1.0;
  int groups = 2;
  std::string ranges;
  std::uint64_t seed = 0;
  bool allow_nonmetric = false;
  std::string out;
};

int Generate(const GenerateArgs& a, std::ostream& out) {
  MetricInstance inst;
  RangeConstraints rc;
  rc.k = a.k;
  if (a.kind == "figure1") {
    inst = GenerateFigure1Instance(a.k, a.n, a.m, a.M, a.p, a.allow_nonmetric);
    rc.ranges.assign(2, {a.k / 3, 2 * a.k / 3});
  } else {
    RandomInstanceOptions options;
    options.num_points = a.n;
    options.num_groups = a.groups;
    options.p = a.p;
    options.seed = a.seed;
    inst = GenerateRandomInstance(options);
    std::mt19937_64 rng(a.seed * 0x9E3779B97F4A7C15ULL + 1);
    rc = RandomFeasibleRangesForK(inst.GroupSizes(), std::min(a.k, a.n), rng);
  }
  if (!a.ranges.empty()) rc.ranges = ParseRanges(a.ranges);
  Emit(a.out, SerializeInstanceDocument(MakeInstanceDocument(inst, rc)), out);
  return kExitOk;
}

struct BenchArgs {
  std::vector<int> n{8};
  std::vector<int> k{2};
  std::vector<int> groups{2};
  std::vector<double> p{1.0};
  int seeds = 5;
  std::uint64_t first_seed = 0;
  std::string out;
};

int Bench(const BenchArgs& a, std::ostream& out) {
  std::vector<StudyCell> cells;
  for (int n : a.n)
    for (int k : a.k)
      for (int g : a.groups)
        for (double p : a.p) cells.push_back({n, k, g, p});
  std::vector<std::uint64_t> seeds;
  for (int s = 0; s < a.seeds; ++s) seeds.push_back(a.first_seed + s);
  Emit(a.out, StudyCsv(ApproximationStudy(cells, seeds)), out);
  return kExitOk;
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Fair range k-clustering solver"};
  app.require_subcommand(1);

  SolveArgs solve;
  CLI::App* solve_cmd = app.add_subcommand("solve", "Solve an instance file");
  solve_cmd->add_option("path", solve.path, "Instance document")->required();
  solve_cmd->add_option("--p", solve.p, "Override the exponent p");
  solve_cmd->add_option("--k", solve.k, "Override the number of centers");
  solve_cmd->add_option("--ranges", solve.ranges, "Override ranges, a1:b1,a2:b2,...");
  solve_cmd->add_flag("--oracle", solve.oracle, "Also run the exhaustive oracle");
  solve_cmd->add_option("--out", solve.out, "Write the report here");
  solve_cmd->add_option("--tol-override", solve.tolerance,
                        "Relative tolerance of the stage certificates");
  solve_cmd->add_option("--seed", solve.seed, "Seed for sampled validation");
  solve_cmd->add_flag("--lenient", solve.lenient,
                      "Record failed certificates instead of aborting");

  GenerateArgs gen;
  CLI::App* gen_cmd = app.add_subcommand("generate", "Write a generated instance");
  gen_cmd->add_option("kind", gen.kind, "figure1 or random")
      ->required()
      ->check(CLI::IsMember({"figure1", "random"}));
  gen_cmd->add_option("--k", gen.k, "Number of centers");
  gen_cmd->add_option("--n", gen.n, "Number of points");
  gen_cmd->add_option("--m", gen.m, "Short distance (figure1)");
  gen_cmd->add_option("--M", gen.M, "Long distance (figure1)");
  gen_cmd->add_option("--p", gen.p, "Exponent p");
  gen_cmd->add_option("--groups", gen.groups, "Number of groups (random)");
  gen_cmd->add_option("--ranges", gen.ranges, "Ranges a1:b1,a2:b2,...");
  gen_cmd->add_option("--seed", gen.seed, "Random seed");
  gen_cmd->add_flag("--allow-nonmetric", gen.allow_nonmetric,
                    "Permit figure1 distances with M > 2m");
  gen_cmd->add_option("--out", gen.out, "Write the document here");

  BenchArgs bench;
  CLI::App* bench_cmd = app.add_subcommand("bench", "Solver versus oracle grid");
  bench_cmd->add_option("--n", bench.n, "Point counts")->delimiter(',');
  bench_cmd->add_option("--k", bench.k, "Center counts")->delimiter(',');
  bench_cmd->add_option("--groups", bench.groups, "Group counts")->delimiter(',');
  bench_cmd->add_option("--p", bench.p, "Exponents")->delimiter(',');
  bench_cmd->add_option("--seeds", bench.seeds, "Seeds per cell");
  bench_cmd->add_option("--seed", bench.first_seed, "First seed");
  bench_cmd->add_option("--out", bench.out, "Write the CSV here");

  std::vector<const char*> argv{"fair_range"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    if (*solve_cmd) return Solve(solve, out, err);
    if (*gen_cmd) return Generate(gen, out);
    if (*bench_cmd) return Bench(bench, out);
  } catch (const FairRangeError& e) {
    err << "error [" << ErrorKindName(e.kind()) << "] " << e.what() << "\n";
    return e.kind() == ErrorKind::kInfeasible ? kExitInfeasible : kExitError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}

}  // namespace fair_range

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

#include "fair_range/study.h"

#include <chrono>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>

#include "fair_range/error.h"
#include "fair_range/generators.h"

namespace fair_range {

MetricInstance StudyInstance(const StudyCell& cell, std::uint64_t seed) {
  RandomInstanceOptions options;
  options.num_points = cell.n;
  options.num_groups = cell.num_groups;
  options.p = cell.p;
  options.seed = seed;
  return GenerateRandomInstance(options);
}

RangeConstraints StudyRanges(const MetricInstance& inst, const StudyCell& cell,
                             std::uint64_t seed) {
  std::mt19937_64 rng(seed * 0x9E3779B97F4A7C15ULL + 1);
  return RandomFeasibleRangesForK(inst.GroupSizes(), cell.k, rng);
}

StudyResult ApproximationStudy(const std::vector<StudyCell>& cells,
                               const std::vector<std::uint64_t>& seeds,
                               SolverConfig config, std::int64_t oracle_budget) {
  for (const StudyCell& cell : cells) {
    if (BinomialSaturating(cell.n, cell.k) > oracle_budget) {
      throw FairRangeError(ErrorKind::kBudgetExceeded, "approximation_study",
                           "cell n=" + std::to_string(cell.n) +
                               " k=" + std::to_string(cell.k) +
                               " exceeds the oracle budget");
    }
  }
  config.strict = false;
  StudyResult result;
  for (const StudyCell& cell : cells) {
    StudySummary summary{cell, 0, 0.0, 0.0, 0.0};
    for (std::uint64_t seed : seeds) {
      const auto start = std::chrono::steady_clock::now();
      const MetricInstance inst = StudyInstance(cell, seed);
      const RangeConstraints rc = StudyRanges(inst, cell, seed);
      const SolveReport report = SolveFairRange(inst, rc, config);
      const OracleResult oracle = BruteForceOptimum(inst, rc, oracle_budget);
      StudyRow row;
      row.cell = cell;
      row.seed = seed;
      row.solver_cost = std::pow(report.solution.cost_p, 1.0 / inst.p);
      row.oracle_cost = std::pow(oracle.cost_p, 1.0 / inst.p);
      if (row.oracle_cost > 0.0) {
        row.ratio = row.solver_cost / row.oracle_cost;
      } else {
        row.ratio = row.solver_cost > 0.0 ? std::numeric_limits<double>::infinity()
                                          : 1.0;
      }
      row.certificates_passed =
          report.AllCertificatesPassed() && report.violations.empty();
      row.wall_ms = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - start)
                        .count();
      result.rows.push_back(row);
      ++summary.runs;
      summary.max_ratio = std::max(summary.max_ratio, row.ratio);
      summary.mean_ratio += row.ratio;
      summary.certificate_pass_rate += row.certificates_passed ? 1.0 : 0.0;
    }
    if (summary.runs > 0) {
      summary.mean_ratio /= summary.runs;
      summary.certificate_pass_rate /= summary.runs;
    }
    result.summaries.push_back(summary);
  }
  return result;
}

std::string StudyCsv(const StudyResult& result) {
  std::ostringstream os;
  os.precision(17);
  os << kStudyCsvHeader << "\n";
  for (const StudyRow& r : result.rows) {
    os << r.cell.n << "," << r.cell.k << "," << r.cell.num_groups << ","
       << r.cell.p << "," << r.seed << "," << r.solver_cost << ","
       << r.oracle_cost << "," << r.ratio << ","
       << (r.certificates_passed ? "true" : "false") << ",";
    os.precision(3);
    os << std::fixed << r.wall_ms << std::defaultfloat;
    os.precision(17);
    os << "\n";
  }
  return os.str();
}

}  // namespace fair_range

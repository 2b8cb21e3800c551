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

#ifndef FAIR_RANGE_STUDY_H_
#define FAIR_RANGE_STUDY_H_

#include <cstdint>
#include <string>
#include <vector>

#include "fair_range/pipeline.h"

namespace fair_range {

struct StudyCell {
  int n = 8;
  int k = 2;
  int num_groups = 2;
  double p = 1.0;
};

struct StudyRow {
  StudyCell cell;
  std::uint64_t seed = 0;
  double solver_cost = 0.0;  // l_p norms, after the 1/p root
  double oracle_cost = 0.0;
  double ratio = 0.0;
  bool certificates_passed = false;
  double wall_ms = 0.0;  // solver and oracle together
};

struct StudySummary {
  StudyCell cell;
  int runs = 0;
  double max_ratio = 0.0;
  double mean_ratio = 0.0;
  double certificate_pass_rate = 0.0;
};

struct StudyResult {
  std::vector<StudyRow> rows;
  std::vector<StudySummary> summaries;  // one per cell, in grid order
};

// The random instance and ranges used for (cell, seed).
MetricInstance StudyInstance(const StudyCell& cell, std::uint64_t seed);
RangeConstraints StudyRanges(const MetricInstance& inst, const StudyCell& cell,
                             std::uint64_t seed);

// Solves every (cell, seed) pair with the pipeline (certificate failures
// recorded, not raised) and with the exhaustive oracle. Throws
// kBudgetExceeded before any work if a cell exceeds the oracle budget.
StudyResult ApproximationStudy(const std::vector<StudyCell>& cells,
                               const std::vector<std::uint64_t>& seeds,
                               SolverConfig config = {},
                               std::int64_t oracle_budget = kOracleBudget);

inline constexpr const char* kStudyCsvHeader =
    "n,k,ℓ,p,seed,solver_cost,oracle_cost,ratio,certificates_passed,wall_ms";

std::string StudyCsv(const StudyResult& result);

}  // namespace fair_range

#endif  // FAIR_RANGE_STUDY_H_

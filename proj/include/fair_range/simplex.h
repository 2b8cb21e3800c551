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

#ifndef FAIR_RANGE_SIMPLEX_H_
#define FAIR_RANGE_SIMPLEX_H_

#include <cstdint>
#include <vector>

#include "fair_range/linear_program.h"

namespace fair_range {

// min cost . z  s.t.  rows z = rhs, z >= 0, rhs >= 0.
// Columns [0, num_structural) are the LP variables shifted by their lower
// bounds; the rest are one slack or surplus column per inequality row. Rows
// are the LP rows followed by one row per finite upper bound.
struct StandardForm {
  int num_structural = 0;
  int num_cols = 0;
  std::vector<std::vector<LinearTerm>> rows;
  std::vector<double> rhs;
  std::vector<double> cost;
  double cost_offset = 0.0;
  std::vector<double> shift;  // lower bound of each LP variable

  int num_rows() const { return static_cast<int>(rows.size()); }
};

StandardForm ToStandardForm(const LinearProgram& lp);

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

const char* LpStatusName(LpStatus status);

struct SimplexOptions {
  double pivot_tolerance = 1e-9;
  double feasibility_tolerance = 1e-7;
  std::int64_t max_iterations = 1'000'000;
  // Consecutive degenerate pivots after which entering columns are chosen by
  // Bland's rule until the next nondegenerate pivot.
  int bland_after_degenerate = 8;
};

struct LpResult {
  LpStatus status = LpStatus::kInfeasible;
  std::vector<double> x;  // LP variables (only meaningful when optimal)
  double objective = 0.0;
  std::int64_t iterations = 0;
  // Standard-form columns of the final basis, one per entry of `kept_rows`.
  // Rows found redundant during phase 1 are omitted.
  std::vector<int> basis;
  std::vector<int> kept_rows;
};

// Two-phase dense primal simplex. The returned point is a basic feasible
// solution (a vertex of the feasible region). Throws FairRangeError with
// kind kIterationLimit past options.max_iterations pivots.
LpResult SolveVertex(const LinearProgram& lp,
                     const SimplexOptions& options = {});

}  // namespace fair_range

#endif  // FAIR_RANGE_SIMPLEX_H_

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

#ifndef FAIR_RANGE_LINEAR_PROGRAM_H_
#define FAIR_RANGE_LINEAR_PROGRAM_H_

#include <limits>
#include <span>
#include <string>
#include <vector>

namespace fair_range {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

enum class RowSense { kLessEqual, kGreaterEqual, kEqual };

struct LinearTerm {
  int var = 0;
  double coef = 0.0;
};

struct LinearRow {
  std::vector<LinearTerm> terms;
  RowSense sense = RowSense::kLessEqual;
  double rhs = 0.0;
  std::string name;
};

// min objective . x  s.t. rows, lower <= x <= upper.
struct LinearProgram {
  LinearProgram() = default;
  explicit LinearProgram(int num_vars);

  int num_vars = 0;
  std::vector<double> objective;
  double objective_offset = 0.0;
  std::vector<LinearRow> rows;
  std::vector<double> lower;  // finite
  std::vector<double> upper;  // kInfinity when unbounded
  std::vector<std::string> var_names;

  int num_rows() const { return static_cast<int>(rows.size()); }
  int AddRow(std::vector<LinearTerm> terms, RowSense sense, double rhs,
             std::string name = "");

  double Evaluate(std::span<const double> x) const;
  // Largest violation of any row or bound at x (0 when feasible).
  double MaxViolation(std::span<const double> x) const;
  // Empty when every row references valid variables and every rhs/bound is
  // finite where required.
  std::vector<std::string> Validate() const;

  // Human-readable dump in the CPLEX LP file layout.
  std::string ToLpFormat() const;
};

}  // namespace fair_range

#endif  // FAIR_RANGE_LINEAR_PROGRAM_H_

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

#ifndef FAIR_RANGE_LP_BUILDERS_H_
#define FAIR_RANGE_LP_BUILDERS_H_

#include <string>
#include <vector>

#include "fair_range/instance.h"
#include "fair_range/linear_program.h"
#include "fair_range/matrix.h"
#include "fair_range/simplex.h"

namespace fair_range {

// Variable layout of the clustering relaxation over locations D and
// facilities F: x(v, u) is column v * |F| + u, y(u) is column |D| * |F| + u.
struct FairRangeLpLayout {
  int num_locations = 0;
  int num_facilities = 0;
  int x(int v, int u) const { return v * num_facilities + u; }
  int y(int u) const { return num_locations * num_facilities + u; }
  int num_vars() const { return (num_locations + 1) * num_facilities; }
};

// Rows in order: |D| coverage rows, then (>= alpha_i, <= beta_i) per group,
// one budget row, then |D| * |F| linking rows x(v,u) - y(u) <= 0. Every y
// carries the variable bound y <= 1.
LinearProgram BuildFairRangeLp(const MetricInstance& inst,
                               const Locations& locations,
                               const RangeConstraints& rc);

struct FractionalSolution {
  Matrix x;  // |D| x |F|
  std::vector<double> y;
  double objective_value = 0.0;
};

// Solves the relaxation to a vertex and cleans the result: entries within
// 1e-9 of 0 or of y(u) are snapped, and each x row is trimmed (farthest
// facilities first) so that it sums to exactly 1. Throws kInfeasible when
// the relaxation has no feasible point.
FractionalSolution SolveFairRangeLp(const MetricInstance& inst,
                                    const Locations& locations,
                                    const RangeConstraints& rc,
                                    const SimplexOptions& options = {});

// sum_v w(v) sum_u d(v,u)^p x(v,u).
double FlpCost(const MetricInstance& inst, const Locations& locations,
               const Matrix& x);

// Coverage, range, budget and linking constraints; one message per violated
// constraint. Tolerances follow the FractionalSolution invariants.
std::vector<std::string> CheckFairRangeConstraints(
    const MetricInstance& inst, const RangeConstraints& rc, const Matrix& x,
    const std::vector<double>& y, double cover_tol = 1e-7,
    double link_tol = 1e-9);

enum class StructuredRowKind {
  kGroupLower,
  kGroupUpper,
  kBudget,
  kCoreBall,   // sum over the ball >= 1/2
  kSuperBall,  // sum over the super ball <= 1
};

struct StructuredRowInfo {
  StructuredRowKind kind;
  int index;  // group or location index; 0 for the budget row
};

// LP over y only. The objective excludes `constant_term`; the LP value of a
// point y is lp.Evaluate(y) + constant_term.
struct StructuredLp {
  LinearProgram lp;
  double constant_term = 0.0;
  std::vector<StructuredRowInfo> row_info;  // parallel to lp.rows
};

// `locations` are the surviving locations D', `balls[v]` the facility sets
// carrying the >= 1/2 rows, `superballs[v]` the disjoint sets carrying the
// <= 1 rows (each containing balls[v]), `nearest[v]` the nearest other
// location (-1 when |D'| = 1, in which case the ball row has rhs 1 and v has
// no constant term).
StructuredLp BuildStructuredLp(const MetricInstance& inst,
                               const Locations& locations,
                               const std::vector<std::vector<int>>& balls,
                               const std::vector<std::vector<int>>& superballs,
                               const std::vector<int>& nearest,
                               const RangeConstraints& rc);

// The same polytope in the variable z = 2y: every right-hand side and bound
// doubled, objective halved. A vertex of the result is integral when the
// constraint matrix is totally unimodular.
LinearProgram ScaleForHalfIntegral(const StructuredLp& slp);

}  // namespace fair_range

#endif  // FAIR_RANGE_LP_BUILDERS_H_

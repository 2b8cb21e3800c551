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

#ifndef FAIR_RANGE_STRUCTURE_H_
#define FAIR_RANGE_STRUCTURE_H_

#include <vector>

#include "fair_range/instance.h"
#include "fair_range/matrix.h"
#include "fair_range/sparsify.h"

namespace fair_range {

// Nearest other survivor of each survivor (ties by lowest index); -1 when
// there is only one.
std::vector<int> NearestSurvivors(const MetricInstance& inst,
                                  const Locations& survivors);

struct ReassignMove {
  int location = 0;  // survivor index
  int from = 0;      // facility the mass left
  int to = 0;        // facility in the ball of the nearest sharer
  double amount = 0.0;
  double from_distance = 0.0;
  double to_distance = 0.0;
};

struct ReassignResult {
  Matrix x;
  std::vector<ReassignMove> moves;
};

// For every facility outside all balls that serves several survivors, the
// nearest one keeps it and the others move that mass into the nearest
// one's ball, nearest facilities first, up to each facility's spare
// capacity y(u') - x(v, u'). `x1` holds one row per survivor.
ReassignResult ReassignPrivateFacilities(const MetricInstance& inst,
                                         const SparsifiedInstance& sparse,
                                         const Matrix& x1,
                                         const std::vector<double>& y);

// True iff every move satisfies to_distance <= factor * from_distance.
bool MovesWithinFactor(const std::vector<ReassignMove>& moves, double factor,
                       double tolerance = 1e-9);

struct SuperBalls {
  std::vector<std::vector<int>> sets;  // P(v) = B(v) plus private facilities
  std::vector<int> owner;              // facility -> survivor or -1
};

// Throws kInternal when a facility outside all balls serves two survivors.
SuperBalls BuildSuperBalls(const MetricInstance& inst,
                           const SparsifiedInstance& sparse, const Matrix& x2);

struct StructuredSolution {
  Matrix x_bar;
  std::vector<double> y_bar;
  // Core part of each ball: the facilities carrying the >= 1/2 row. Equal
  // to B(v) unless y(B(v)) exceeds 1, in which case facilities are kept
  // nearest first while the core mass stays at most 1.
  std::vector<std::vector<int>> core_balls;
  std::vector<std::vector<int>> superballs;  // P(v), each sorted
  std::vector<int> nearest;
  double cost_flp = 0.0;
  // Facilities dropped from a super ball for lying farther than twice the
  // distance to the nearest survivor.
  std::vector<int> pruned;
  // Facilities of some B(v) or private set left out of every super ball to
  // keep each super ball's mass at most 1.
  std::vector<int> unaffiliated;
};

// Builds (x_bar, y_bar) from the reassigned solution. Each survivor is
// filled from its core ball, then its private facilities, then the core
// ball of its nearest survivor, nearest facilities first within each tier.
// With a single survivor the solution is integral: y_bar is a range
// feasible k-set containing the nearest facility that belongs to one.
StructuredSolution EnforceStructure(const MetricInstance& inst,
                                    const SparsifiedInstance& sparse,
                                    const Matrix& x2,
                                    const std::vector<double>& y,
                                    const SuperBalls& superballs,
                                    const RangeConstraints& rc);

// Checks the super-ball properties, feasibility of y_bar for the structured
// program, and the distance sandwich to the nearest survivor's ball.
ValidationReport VerifyStructured(const MetricInstance& inst,
                                  const SparsifiedInstance& sparse,
                                  const StructuredSolution& sol);

}  // namespace fair_range

#endif  // FAIR_RANGE_STRUCTURE_H_

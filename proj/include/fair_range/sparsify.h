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

#ifndef FAIR_RANGE_SPARSIFY_H_
#define FAIR_RANGE_SPARSIFY_H_

#include <span>
#include <string>
#include <vector>

#include "fair_range/instance.h"
#include "fair_range/lp_builders.h"
#include "fair_range/matrix.h"

namespace fair_range {

// (sum_u x(v,u) d(v,u)^p)^(1/p) for row v of x.
double FractionalRadius(const MetricInstance& inst, const Locations& locations,
                        const Matrix& x, int v);

// Relative slack applied to the closed-ball and absorption comparisons so
// that a distance equal to the threshold up to rounding counts as equal.
inline constexpr double kBoundarySlack = 1e-12;

struct SparsifiedInstance {
  Locations survivors;               // D' with w'
  std::vector<int> survivor_source;  // index into the input locations
  std::vector<double> radii;         // R(v) for every input location
  // Facility indices of B(v) for each survivor, ascending.
  std::vector<std::vector<int>> balls;
  // For every input location, the survivor (index into `survivors`) that
  // absorbed it; survivors map to themselves.
  std::vector<int> forward_map;
};

// Consolidation: locations in nondecreasing R (ties by index); each
// survivor v_i absorbs every later unabsorbed v_j with
// d(v_i, v_j) <= 2^(1+1/p) R(v_j). Balls are left empty.
SparsifiedInstance ConsolidateLocations(const MetricInstance& inst,
                                        const Locations& locations,
                                        const FractionalSolution& frac);

// B(v) = {u : d(v,u) <= 2^(1/p) R(v)}. Throws kInternal if two balls share a
// facility.
void ComputeBalls(const MetricInstance& inst, SparsifiedInstance& sparse);

// Rows of x belonging to survivors, in survivor order.
Matrix SurvivorRows(const SparsifiedInstance& sparse, const Matrix& x);

// Each returns one message per violation.
std::vector<std::string> CheckSeparation(const MetricInstance& inst,
                                         const SparsifiedInstance& sparse,
                                         double tolerance = 1e-9);
std::vector<std::string> CheckForwardMap(const MetricInstance& inst,
                                         const Locations& locations,
                                         const SparsifiedInstance& sparse,
                                         double tolerance = 1e-9);
std::vector<std::string> CheckBallsDisjoint(const SparsifiedInstance& sparse);
// `x` has one row per input location.
std::vector<std::string> CheckHalfContribution(const SparsifiedInstance& sparse,
                                               const Matrix& x,
                                               double tolerance = 1e-7);

struct RadiusTransfer {
  double survivors = 0.0;  // sum over D' of w'(q) R(q)^p
  double all = 0.0;        // sum over D of w(v) R(v)^p
  bool holds = false;
};
RadiusTransfer CheckRadiusTransfer(const MetricInstance& inst,
                                   const Locations& locations,
                                   const SparsifiedInstance& sparse,
                                   double rel_tolerance = 1e-9);

struct LiftCertificate {
  double actual = 0.0;   // cost of the centers on (D, w)
  double z = 0.0;        // cost of the centers on (D', w')
  double bound = 0.0;    // 4^p OPT_D + 2^(p-1) z
  bool holds = false;
};

// Evaluates the same center set on the unconsolidated locations.
LiftCertificate LiftSolution(const MetricInstance& inst,
                             const Locations& locations,
                             const SparsifiedInstance& sparse,
                             std::span<const int> centers, double opt_d,
                             double rel_tolerance = 1e-6);

}  // namespace fair_range

#endif  // FAIR_RANGE_SPARSIFY_H_

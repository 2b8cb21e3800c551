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

#include <algorithm>
#include <cmath>
#include <string>

#include "fair_range/error.h"
#include "fair_range/round.h"

namespace fair_range {

HalfIntegralSolution SolveHalfIntegral(const StructuredLp& slp,
                                       const SimplexOptions& options,
                                       double tolerance) {
  const LinearProgram scaled = ScaleForHalfIntegral(slp);
  const LpResult res = SolveVertex(scaled, options);
  if (res.status == LpStatus::kInfeasible) {
    throw FairRangeError(ErrorKind::kInfeasible, "half_integral",
                         "structured program is infeasible");
  }
  if (res.status != LpStatus::kOptimal) {
    throw FairRangeError(ErrorKind::kInternal, "half_integral",
                         "structured program reported unbounded");
  }
  HalfIntegralSolution out;
  out.y.resize(scaled.num_vars);
  for (int j = 0; j < scaled.num_vars; ++j) {
    const double z = res.x[j];
    const double r = std::round(z);
    out.max_deviation = std::max(out.max_deviation, std::abs(z - r));
    if (std::abs(z - r) > tolerance) {
      throw FairRangeError(ErrorKind::kInternal, "half_integral",
                           "half-integrality violation at y_" +
                               std::to_string(j) + " = " + std::to_string(z / 2));
    }
    out.y[j] = r / 2.0;
  }
  if (slp.lp.MaxViolation(out.y) > 1e-12) {
    throw FairRangeError(ErrorKind::kInternal, "half_integral",
                         "snapped point violates the structured program");
  }
  out.objective = slp.lp.Evaluate(out.y) + slp.constant_term;
  return out;
}

Matrix HalfIntegralAssignment(const MetricInstance& inst,
                              const Locations& survivors,
                              const std::vector<double>& y,
                              const std::vector<std::vector<int>>& core_balls,
                              const std::vector<std::vector<int>>& superballs,
                              const std::vector<int>& nearest) {
  const int ns = survivors.size();
  Matrix x(ns, inst.num_facilities());
  for (int v = 0; v < ns; ++v) {
    double mass = 0.0;
    for (int u : superballs[v]) {
      x(v, u) = y[u];
      mass += y[u];
    }
    if (mass >= 1.0) continue;
    if (nearest[v] < 0) {
      throw FairRangeError(ErrorKind::kInternal, "half_integral_assignment",
                           "single location with an unfilled super ball");
    }
    std::vector<int> ring = core_balls[nearest[v]];
    const int point = survivors.points[v];
    std::stable_sort(ring.begin(), ring.end(), [&](int a, int b) {
      return inst.to_facility(point, a) < inst.to_facility(point, b);
    });
    for (int u : ring) {
      if (mass >= 1.0) break;
      const double t = std::min(1.0 - mass, y[u]);
      x(v, u) += t;
      mass += t;
    }
    if (mass < 1.0) {
      throw FairRangeError(ErrorKind::kInternal, "half_integral_assignment",
                           "neighbour ball of location " + std::to_string(v) +
                               " is exhausted");
    }
  }
  return x;
}

}  // namespace fair_range

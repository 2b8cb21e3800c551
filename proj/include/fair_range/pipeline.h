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

#ifndef FAIR_RANGE_PIPELINE_H_
#define FAIR_RANGE_PIPELINE_H_

#include <cstdint>
#include <string>
#include <vector>

#include "fair_range/baseline.h"
#include "fair_range/instance.h"
#include "fair_range/lp_builders.h"
#include "fair_range/round.h"
#include "fair_range/simplex.h"
#include "fair_range/sparsify.h"
#include "fair_range/structure.h"

namespace fair_range {

struct Tolerances {
  double certificate = 1e-6;    // relative slack on every stage bound
  double half_integral = 1e-6;  // vertex distance from an integer
  double triangle = 1e-9;       // metric validation
  double separation = 1e-9;     // survivor separation
  double half_mass = 1e-7;      // in-ball mass of a survivor
};

struct SolverConfig {
  Tolerances tol;
  SimplexOptions simplex;
  // Above this exponent, certificates are compared in log space.
  double p_cap = 40.0;
  // Local search iterations per center for the location reduction, which
  // runs only when there are more clients than centers.
  int local_search_iters_per_center = 100;
  bool reduce_locations = true;
  // Throw kCertificate / kInternal as soon as a bound or invariant fails
  // instead of recording it in the report.
  bool strict = true;
  std::uint64_t validation_seed = 0;
};

struct Certificate {
  std::string name;
  double lhs = 0.0;
  double bound = 0.0;
  bool passed = false;
};

struct StageTiming {
  std::string stage;
  double ms = 0.0;
};

struct SolveReport {
  CenterSolution solution;  // on the original clients

  double opt_d = 0.0;         // FairRangeLP optimum on (D, w)
  double cost_x2 = 0.0;       // after private reassignment, on (D', w')
  double cost_xbar = 0.0;     // structured solution, on (D', w')
  double cost_stlp = 0.0;     // half-integral StructuredLP optimum
  double cost_xtilde = 0.0;   // half-integral assignment, on (D', w')
  double cost_dprime = 0.0;   // final centers on (D', w')
  double cost_d = 0.0;        // final centers on (D, w)
  double cost_original = 0.0; // final centers on the input clients
  bool reduced = false;

  std::vector<Certificate> certificates;
  std::vector<std::string> violations;  // invariant failures
  std::vector<std::string> warnings;
  std::vector<StageTiming> timings;

  // Intermediate objects, kept for inspection and tests.
  ReducedInstance reduction;
  Locations locations;  // D
  FractionalSolution fractional;
  SparsifiedInstance sparse;
  ReassignResult reassigned;
  StructuredSolution structured;
  StructuredLp structured_lp;
  HalfIntegralSolution half;
  Matrix x_tilde;
  FacilityPartition partition;
  FlowNetwork network;
  // Partition-bound locations where the tighter per-location form
  // 3^(p-1) (R_i + 2 R_j) (or R_i) did not hold.
  int stated_partition_misses = 0;

  bool AllCertificatesPassed() const;
  const Certificate* FindCertificate(const std::string& name) const;
};

// Certificate names, in pipeline order.
inline constexpr const char* kCertReassign = "flp_x2<=3^p*opt_d";
inline constexpr const char* kCertStructured = "flp_xbar<=9^p*opt_d";
inline constexpr const char* kCertStructuredLp = "stlp<=2^p*flp_xbar";
inline constexpr const char* kCertAssignment = "flp_xtilde<=(3/2)^p*stlp";
inline constexpr const char* kCertPartition = "final<=(9/2)^p*stlp";
inline constexpr const char* kCertLift = "lift<=4^p*opt_d+2^(p-1)*z";
inline constexpr const char* kCertReduction = "reduced<=2^(p-1)*(base+orig)";

// Throws kInfeasible when no range-feasible center set exists and
// kInvalidArgument on an invalid instance.
SolveReport SolveFairRange(const MetricInstance& inst,
                           const RangeConstraints& rc,
                           const SolverConfig& config = {});

struct OracleResult {
  double cost_p = 0.0;
  std::vector<int> centers;  // lexicographically first optimum
  std::int64_t subsets = 0;  // range-feasible subsets evaluated
};

inline constexpr std::int64_t kOracleBudget = 10'000'000;

// Exhaustive search over k-subsets of facilities. Throws kBudgetExceeded
// when C(|F|, k) > budget and kInfeasible when no subset meets the ranges.
OracleResult BruteForceOptimum(const MetricInstance& inst,
                               const RangeConstraints& rc,
                               std::int64_t budget = kOracleBudget);

// C(n, k), saturating at INT64_MAX.
std::int64_t BinomialSaturating(int n, int k);

}  // namespace fair_range

#endif  // FAIR_RANGE_PIPELINE_H_

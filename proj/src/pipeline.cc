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

#include "fair_range/pipeline.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <numeric>
#include <utility>

#include "fair_range/error.h"

namespace fair_range {

bool SolveReport::AllCertificatesPassed() const {
  return std::all_of(certificates.begin(), certificates.end(),
                     [](const Certificate& c) { return c.passed; });
}

const Certificate* SolveReport::FindCertificate(const std::string& name) const {
  for (const Certificate& c : certificates)
    if (c.name == name) return &c;
  return nullptr;
}

namespace {

struct Term {
  double base;   // c in c^p
  double value;  // multiplied by c^p
};

class Certifier {
 public:
  Certifier(double p, const SolverConfig& config, SolveReport& report)
      : p_(p), config_(config), report_(report) {}

  // lhs <= sum_i base_i^p * value_i, with relative slack and an absolute
  // slack of tol * noise for quantities that are differences of large terms.
  void Check(const std::string& name, double lhs, std::vector<Term> terms,
             double noise = 0.0) {
    const double tol = config_.tol.certificate;
    Certificate c{name, lhs, 0.0, false};
    if (p_ <= config_.p_cap) {
      for (const Term& t : terms) c.bound += std::pow(t.base, p_) * t.value;
      c.passed = lhs <= c.bound * (1.0 + tol) + tol * noise;
    } else {
      double log_bound = -std::numeric_limits<double>::infinity();
      for (const Term& t : terms) {
        if (t.value <= 0.0) continue;
        const double lt = p_ * std::log(t.base) + std::log(t.value);
        const double hi = std::max(log_bound, lt);
        log_bound = hi + std::log(std::exp(log_bound - hi) + std::exp(lt - hi));
      }
      c.bound = std::exp(log_bound);
      c.passed = lhs <= tol * noise ||
                 std::log(lhs) <= log_bound + std::log1p(tol);
    }
    report_.certificates.push_back(c);
    if (!c.passed && config_.strict) {
      throw FairRangeError(ErrorKind::kCertificate, name,
                           "bound failed: " + std::to_string(lhs) + " > " +
                               std::to_string(c.bound));
    }
  }

 private:
  double p_;
  const SolverConfig& config_;
  SolveReport& report_;
};

class Stopwatch {
 public:
  explicit Stopwatch(SolveReport& report) : report_(report) {}
  void Lap(const char* stage) {
    const auto now = std::chrono::steady_clock::now();
    report_.timings.push_back(
        {stage, std::chrono::duration<double, std::milli>(now - last_).count()});
    last_ = now;
  }

 private:
  SolveReport& report_;
  std::chrono::steady_clock::time_point last_ = std::chrono::steady_clock::now();
};

void Expect(SolveReport& report, const SolverConfig& config,
            const std::string& stage, const std::vector<std::string>& problems) {
  for (const std::string& p : problems) report.violations.push_back(stage + ": " + p);
  if (!problems.empty() && config.strict) {
    throw FairRangeError(ErrorKind::kInternal, stage, problems.front());
  }
}

// Magnitude of the terms summed in a StructuredLP value at y.
double StructuredNoise(const StructuredLp& slp, const std::vector<double>& y) {
  double total = std::abs(slp.constant_term);
  for (int j = 0; j < slp.lp.num_vars; ++j) total += std::abs(slp.lp.objective[j]) * y[j];
  return total;
}

}  // namespace

SolveReport SolveFairRange(const MetricInstance& inst,
                           const RangeConstraints& rc,
                           const SolverConfig& config) {
  const ValidationReport valid =
      ValidateInstance(inst, config.validation_seed, config.tol.triangle);
  if (!valid.ok()) {
    throw FairRangeError(ErrorKind::kInvalidArgument, "validate_instance",
                         valid.ToString());
  }
  const ValidationReport ranges = ValidateRanges(rc, inst.num_groups);
  if (!ranges.ok()) {
    throw FairRangeError(ErrorKind::kInvalidArgument, "validate_ranges",
                         ranges.ToString());
  }
  if (!CheckRangeFeasibility(inst.GroupSizes(), rc)) {
    throw FairRangeError(ErrorKind::kInfeasible, "check_range_feasibility",
                         "no center set satisfies the ranges");
  }

  SolveReport report;
  const double p = inst.p;
  if (p > config.p_cap) {
    report.warnings.push_back("p exceeds the configured cap; certificates are "
                              "compared in log space");
  }
  Certifier cert(p, config, report);
  Stopwatch clock(report);

  // Location reduction.
  if (config.reduce_locations && inst.num_clients() > rc.k) {
    const LocalSearchResult base = LocalSearchClustering(
        inst, rc.k, config.local_search_iters_per_center * rc.k);
    std::vector<int> points;
    for (int c : base.centers) points.push_back(inst.facilities[c]);
    report.reduction = ReduceLocations(inst, points);
    report.locations = report.reduction.locations;
    report.reduced = true;
  } else {
    report.locations = ClientLocations(inst);
  }
  clock.Lap("reduce");
  const Locations& D = report.locations;

  report.fractional = SolveFairRangeLp(inst, D, rc, config.simplex);
  report.opt_d = report.fractional.objective_value;
  Expect(report, config, "fair_range_lp",
         CheckFairRangeConstraints(inst, rc, report.fractional.x,
                                   report.fractional.y));
  clock.Lap("fair_range_lp");

  report.sparse = ConsolidateLocations(inst, D, report.fractional);
  ComputeBalls(inst, report.sparse);
  SparsifiedInstance& sparse = report.sparse;
  const Locations& Dp = sparse.survivors;
  Expect(report, config, "sparsify",
         CheckSeparation(inst, sparse, config.tol.separation));
  Expect(report, config, "sparsify", CheckForwardMap(inst, D, sparse));
  Expect(report, config, "sparsify", CheckBallsDisjoint(sparse));
  Expect(report, config, "sparsify",
         CheckHalfContribution(sparse, report.fractional.x, config.tol.half_mass));
  if (!CheckRadiusTransfer(inst, D, sparse).holds) {
    Expect(report, config, "sparsify", {"radius transfer bound fails"});
  }
  clock.Lap("sparsify");

  const Matrix x1 = SurvivorRows(sparse, report.fractional.x);
  const std::vector<double>& y = report.fractional.y;
  report.reassigned = ReassignPrivateFacilities(inst, sparse, x1, y);
  if (!MovesWithinFactor(report.reassigned.moves, 3.0)) {
    Expect(report, config, "reassign_private", {"a move exceeds 3x distance"});
  }
  report.cost_x2 = FlpCost(inst, Dp, report.reassigned.x);
  cert.Check(kCertReassign, report.cost_x2, {{3.0, report.opt_d}});

  const SuperBalls superballs = BuildSuperBalls(inst, sparse, report.reassigned.x);
  report.structured =
      EnforceStructure(inst, sparse, report.reassigned.x, y, superballs, rc);
  const StructuredSolution& st = report.structured;
  {
    const ValidationReport sr = VerifyStructured(inst, sparse, st);
    std::vector<std::string> problems;
    for (const Violation& v : sr.violations) problems.push_back(v.kind + " " + v.detail);
    Expect(report, config, "enforce_structure", problems);
  }
  report.cost_xbar = st.cost_flp;
  cert.Check(kCertStructured, report.cost_xbar, {{9.0, report.opt_d}});
  clock.Lap("structure");

  report.structured_lp = BuildStructuredLp(inst, Dp, st.core_balls,
                                           st.superballs, st.nearest, rc);
  report.half = SolveHalfIntegral(report.structured_lp, config.simplex,
                                  config.tol.half_integral);
  report.cost_stlp = report.half.objective;
  const double noise = StructuredNoise(report.structured_lp, report.half.y);
  cert.Check(kCertStructuredLp, report.cost_stlp, {{2.0, report.cost_xbar}},
             noise);
  clock.Lap("structured_lp");

  report.x_tilde = HalfIntegralAssignment(inst, Dp, report.half.y, st.core_balls,
                                          st.superballs, st.nearest);
  Expect(report, config, "half_integral_assignment",
         CheckFairRangeConstraints(inst, rc, report.x_tilde, report.half.y, 0.0,
                                   0.0));
  report.cost_xtilde = FlpCost(inst, Dp, report.x_tilde);
  cert.Check(kCertAssignment, report.cost_xtilde, {{1.5, report.cost_stlp}},
             noise);

  report.partition = PartitionFacilities(inst, Dp, report.x_tilde);
  Expect(report, config, "partition_facilities", CheckPartition(report.partition));
  report.network = BuildFlowNetwork(inst, report.partition, rc);
  if (!SolveFlowLowerBounds(report.network)) {
    throw FairRangeError(ErrorKind::kInternal, "solve_flow_lower_bounds",
                         "no integral flow of value k");
  }
  Expect(report, config, "solve_flow_lower_bounds", CheckFlow(report.network));
  std::vector<int> centers = ExtractCenters(report.network);
  clock.Lap("round");

  for (const PartitionBound& b :
       PartitionBounds(inst, Dp, report.partition, centers)) {
    if (b.distance_p > b.stated * (1.0 + 1e-9)) ++report.stated_partition_misses;
    if (b.distance_p > b.bound * (1.0 + 1e-9)) {
      Expect(report, config, "partition_bounds",
             {"location " + std::to_string(b.location) + " exceeds its bound"});
    }
  }
  report.solution = MakeCenterSolution(inst, centers);
  if (!SatisfiesRanges(report.solution, rc)) {
    throw FairRangeError(ErrorKind::kInternal, "extract_centers",
                         "centers violate the ranges");
  }
  report.cost_dprime = LocationsCostP(inst, Dp, centers);
  cert.Check(kCertPartition, report.cost_dprime, {{4.5, report.cost_stlp}},
             noise);

  const LiftCertificate lift =
      LiftSolution(inst, D, sparse, centers, report.opt_d, config.tol.certificate);
  report.cost_d = lift.actual;
  cert.Check(kCertLift, lift.actual,
             {{4.0, report.opt_d}, {2.0, lift.z / 2.0}});
  report.cost_original = report.solution.cost_p;
  if (report.reduced) {
    const double base = BaselineCostP(inst, report.reduction);
    cert.Check(kCertReduction, report.cost_d,
               {{2.0, (base + report.cost_original) / 2.0}});
  }
  clock.Lap("certify");
  return report;
}

std::int64_t BinomialSaturating(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  __int128 r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > std::numeric_limits<std::int64_t>::max())
      return std::numeric_limits<std::int64_t>::max();
  }
  return static_cast<std::int64_t>(r);
}

OracleResult BruteForceOptimum(const MetricInstance& inst,
                               const RangeConstraints& rc,
                               std::int64_t budget) {
  const int nf = inst.num_facilities();
  const int nc = inst.num_clients();
  const int k = rc.k;
  if (BinomialSaturating(nf, k) > budget) {
    throw FairRangeError(ErrorKind::kBudgetExceeded, "brute_force_optimum",
                         "C(|F|, k) exceeds the enumeration budget");
  }
  if (!CheckRangeFeasibility(inst.GroupSizes(), rc)) {
    throw FairRangeError(ErrorKind::kInfeasible, "brute_force_optimum",
                         "no center set satisfies the ranges");
  }
  Matrix cost(nc, nf);
  for (int v = 0; v < nc; ++v)
    for (int u = 0; u < nf; ++u)
      cost(v, u) = static_cast<double>(inst.demand[v]) *
                   std::pow(inst.to_facility(inst.clients[v], u), inst.p);

  OracleResult best;
  best.cost_p = std::numeric_limits<double>::infinity();
  std::vector<int> chosen;
  std::vector<int> count(inst.num_groups, 0);
  // nearest[d][v]: cheapest cost of client v among the first d chosen.
  std::vector<std::vector<double>> nearest(
      k + 1, std::vector<double>(nc, std::numeric_limits<double>::infinity()));
  auto dfs = [&](auto&& self, int start) -> void {
    const int depth = static_cast<int>(chosen.size());
    if (depth == k) {
      for (int g = 0; g < inst.num_groups; ++g)
        if (count[g] < rc.ranges[g].lower) return;
      ++best.subsets;
      double total = 0.0;
      for (int v = 0; v < nc; ++v) total += nearest[k][v];
      if (total < best.cost_p) {
        best.cost_p = total;
        best.centers = chosen;
      }
      return;
    }
    for (int u = start; u <= nf - (k - depth); ++u) {
      const int g = inst.facility_group[u];
      if (count[g] >= rc.ranges[g].upper) continue;
      ++count[g];
      chosen.push_back(u);
      for (int v = 0; v < nc; ++v)
        nearest[depth + 1][v] = std::min(nearest[depth][v], cost(v, u));
      self(self, u + 1);
      chosen.pop_back();
      --count[g];
    }
  };
  dfs(dfs, 0);
  return best;
}

}  // namespace fair_range

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

#include "fair_range/instance.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <sstream>
#include <unordered_set>

#include "fair_range/error.h"

namespace fair_range {

const char* ErrorKindName(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidArgument: return "invalid_argument";
    case ErrorKind::kInfeasible: return "infeasible";
    case ErrorKind::kIterationLimit: return "iteration_limit";
    case ErrorKind::kBudgetExceeded: return "budget_exceeded";
    case ErrorKind::kUndecided: return "undecided";
    case ErrorKind::kInternal: return "internal";
    case ErrorKind::kCertificate: return "certificate";
  }
  return "unknown";
}

std::vector<int> MetricInstance::GroupSizes() const {
  std::vector<int> sizes(std::max(num_groups, 0), 0);
  for (int g : facility_group) {
    if (g >= 0 && g < num_groups) ++sizes[g];
  }
  return sizes;
}

std::int64_t Locations::TotalWeight() const {
  return std::accumulate(weights.begin(), weights.end(), std::int64_t{0});
}

Locations ClientLocations(const MetricInstance& inst) {
  return Locations{inst.clients, inst.demand};
}

bool ValidationReport::Has(const std::string& kind) const {
  return std::any_of(violations.begin(), violations.end(),
                     [&](const Violation& v) { return v.kind == kind; });
}

std::string ValidationReport::ToString() const {
  std::ostringstream os;
  for (const Violation& v : violations) os << v.kind << ": " << v.detail << "\n";
  return os.str();
}

Matrix EuclideanDistances(const std::vector<std::vector<double>>& coords) {
  const int n = static_cast<int>(coords.size());
  Matrix dist(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (coords[i].size() != coords[j].size()) {
        throw FairRangeError(ErrorKind::kInvalidArgument, "instance",
                             "coordinate dimensions differ");
      }
      double sum = 0.0;
      for (std::size_t c = 0; c < coords[i].size(); ++c) {
        const double diff = coords[i][c] - coords[j][c];
        sum += diff * diff;
      }
      dist(i, j) = dist(j, i) = std::sqrt(sum);
    }
  }
  return dist;
}

namespace {

void Add(ValidationReport& report, std::string kind, std::string detail) {
  report.violations.push_back({std::move(kind), std::move(detail)});
}

bool TriangleHolds(const Matrix& dist, int a, int b, int c, double tol) {
  const double via = dist(a, b) + dist(b, c);
  return dist(a, c) <= via + tol * std::max(1.0, via);
}

void CheckTriangles(const MetricInstance& inst, std::uint64_t seed, double tol,
                    ValidationReport& report) {
  const int n = inst.num_points();
  const std::int64_t cube = static_cast<std::int64_t>(n) * n * n;
  int reported = 0;
  auto check = [&](int a, int b, int c) {
    if (reported >= 10) return;
    if (!TriangleHolds(inst.dist, a, b, c, tol)) {
      std::ostringstream os;
      os << "d(" << inst.point_ids[a] << "," << inst.point_ids[c]
         << ")=" << inst.dist(a, c) << " > d(" << inst.point_ids[a] << ","
         << inst.point_ids[b] << ")+d(" << inst.point_ids[b] << ","
         << inst.point_ids[c] << ")=" << inst.dist(a, b) + inst.dist(b, c);
      Add(report, "triangle_inequality", os.str());
      ++reported;
    }
  };
  if (cube <= kMaxTriangleChecks) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c) check(a, b, c);
    return;
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(0, n - 1);
  for (std::int64_t t = 0; t < kMaxTriangleChecks; ++t) {
    check(pick(rng), pick(rng), pick(rng));
  }
}

}  // namespace

ValidationReport ValidateInstance(const MetricInstance& inst,
                                  std::uint64_t seed, double tolerance) {
  ValidationReport report;
  const int n = inst.num_points();

  {
    std::unordered_set<std::string> seen;
    for (const std::string& id : inst.point_ids) {
      if (!seen.insert(id).second) Add(report, "duplicate_point_id", id);
    }
  }
  if (!(inst.p >= 1.0) || !std::isfinite(inst.p)) {
    Add(report, "invalid_p", "p must be a finite real >= 1");
  }

  bool matrix_ok = inst.dist.rows() == n && inst.dist.cols() == n;
  if (!matrix_ok) {
    Add(report, "distance_shape", "distance matrix is not |P| x |P|");
  } else {
    for (int i = 0; i < n; ++i) {
      if (inst.dist(i, i) != 0.0) {
        Add(report, "nonzero_diagonal", inst.point_ids[i]);
        matrix_ok = false;
      }
      for (int j = 0; j < n; ++j) {
        const double dij = inst.dist(i, j);
        if (!std::isfinite(dij) || dij < 0.0) {
          Add(report, "negative_or_nonfinite_distance",
              inst.point_ids[i] + "," + inst.point_ids[j]);
          matrix_ok = false;
        } else if (j > i &&
                   std::abs(dij - inst.dist(j, i)) >
                       tolerance * std::max(1.0, std::abs(dij))) {
          Add(report, "asymmetric_distance",
              inst.point_ids[i] + "," + inst.point_ids[j]);
          matrix_ok = false;
        }
      }
    }
    if (matrix_ok) CheckTriangles(inst, seed, tolerance, report);
  }

  if (inst.facility_group.size() != inst.facilities.size()) {
    Add(report, "missing_group_label",
        "facility_group has a different length than facilities");
  }
  {
    std::unordered_set<int> seen;
    for (std::size_t f = 0; f < inst.facilities.size(); ++f) {
      const int point = inst.facilities[f];
      if (point < 0 || point >= n) {
        Add(report, "invalid_facility", std::to_string(point));
        continue;
      }
      if (!seen.insert(point).second) {
        Add(report, "duplicate_facility", inst.point_ids[point]);
      }
      if (f < inst.facility_group.size()) {
        const int g = inst.facility_group[f];
        if (g == kNoGroup) {
          Add(report, "missing_group_label", inst.point_ids[point]);
        } else if (g < 0 || g >= inst.num_groups) {
          Add(report, "invalid_group_label", inst.point_ids[point]);
        }
      }
    }
  }

  if (inst.demand.size() != inst.clients.size()) {
    Add(report, "demand_shape", "demand has a different length than clients");
  }
  {
    std::unordered_set<int> seen;
    for (std::size_t c = 0; c < inst.clients.size(); ++c) {
      const int point = inst.clients[c];
      if (point < 0 || point >= n) {
        Add(report, "invalid_client", std::to_string(point));
        continue;
      }
      if (!seen.insert(point).second) {
        Add(report, "duplicate_client", inst.point_ids[point]);
      }
      if (c < inst.demand.size() && inst.demand[c] <= 0) {
        Add(report, "nonpositive_demand", inst.point_ids[point]);
      }
    }
  }
  if (inst.clients.empty()) Add(report, "no_clients", "client set is empty");
  return report;
}

ValidationReport ValidateRanges(const RangeConstraints& rc, int num_groups) {
  ValidationReport report;
  if (rc.k <= 0) Add(report, "invalid_k", "k must be positive");
  if (static_cast<int>(rc.ranges.size()) != num_groups) {
    Add(report, "range_count", "expected one range per group");
  }
  for (std::size_t i = 0; i < rc.ranges.size(); ++i) {
    const GroupRange& r = rc.ranges[i];
    if (r.lower < 0 || r.lower > r.upper) {
      Add(report, "invalid_range", "group " + std::to_string(i));
    }
  }
  return report;
}

bool CheckRangeFeasibility(std::span<const int> group_sizes,
                           const RangeConstraints& rc) {
  if (group_sizes.size() != rc.ranges.size() || rc.k <= 0) return false;
  std::int64_t lower_sum = 0;
  std::int64_t capacity = 0;
  for (std::size_t i = 0; i < rc.ranges.size(); ++i) {
    const GroupRange& r = rc.ranges[i];
    if (r.lower < 0 || r.lower > r.upper) return false;
    const int cap = std::min(r.upper, group_sizes[i]);
    if (r.lower > cap) return false;
    lower_sum += r.lower;
    capacity += cap;
  }
  return lower_sum <= rc.k && capacity >= rc.k;
}

double LocationsCostP(const MetricInstance& inst, const Locations& locations,
                      std::span<const int> centers) {
  if (centers.empty()) {
    throw FairRangeError(ErrorKind::kInvalidArgument, "clustering_cost",
                         "empty center set");
  }
  double total = 0.0;
  for (int v = 0; v < locations.size(); ++v) {
    double nearest = std::numeric_limits<double>::infinity();
    for (int c : centers) {
      nearest = std::min(nearest, inst.to_facility(locations.points[v], c));
    }
    total += static_cast<double>(locations.weights[v]) *
             std::pow(nearest, inst.p);
  }
  return total;
}

ClusteringCost ComputeClusteringCost(const MetricInstance& inst,
                                     std::span<const int> centers) {
  for (int c : centers) {
    if (c < 0 || c >= inst.num_facilities()) {
      throw FairRangeError(ErrorKind::kInvalidArgument, "clustering_cost",
                           "center is not a facility");
    }
  }
  ClusteringCost cost;
  cost.cost_p = LocationsCostP(inst, ClientLocations(inst), centers);
  cost.cost = std::pow(cost.cost_p, 1.0 / inst.p);
  return cost;
}

CenterSolution MakeCenterSolution(const MetricInstance& inst,
                                  std::vector<int> centers) {
  std::sort(centers.begin(), centers.end());
  CenterSolution solution;
  solution.group_counts.assign(inst.num_groups, 0);
  for (int c : centers) ++solution.group_counts[inst.facility_group[c]];
  const ClusteringCost cost = ComputeClusteringCost(inst, centers);
  solution.centers = std::move(centers);
  solution.cost_p = cost.cost_p;
  solution.cost = cost.cost;
  return solution;
}

bool SatisfiesRanges(const CenterSolution& solution,
                     const RangeConstraints& rc) {
  if (static_cast<int>(solution.centers.size()) != rc.k) return false;
  if (solution.group_counts.size() != rc.ranges.size()) return false;
  for (std::size_t i = 0; i < rc.ranges.size(); ++i) {
    if (solution.group_counts[i] < rc.ranges[i].lower ||
        solution.group_counts[i] > rc.ranges[i].upper) {
      return false;
    }
  }
  return true;
}

bool PowerTriangleCheck(double x, std::span<const double> ys, double lambda,
                        double p, double rel_tolerance) {
  const double n = static_cast<double>(ys.size());
  double sum = x;
  double sum_pow = 0.0;
  for (double y : ys) {
    sum += y;
    sum_pow += std::pow(y, p);
  }
  const double lhs = std::pow(sum, p);
  double rhs = std::pow(1.0 + lambda, p - 1.0) * std::pow(x, p);
  if (!ys.empty()) {
    rhs += std::pow((1.0 + lambda) * n / lambda, p - 1.0) * sum_pow;
  }
  return lhs <= rhs * (1.0 + rel_tolerance);
}

bool ChainPowerBoundHolds(const MetricInstance& inst,
                          std::span<const int> chain, double p,
                          double rel_tolerance) {
  if (chain.size() < 2) return true;
  const double r = static_cast<double>(chain.size() - 1);
  double sum = 0.0;
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    sum += std::pow(inst.d(chain[i], chain[i + 1]), p);
  }
  const double lhs = std::pow(inst.d(chain.front(), chain.back()), p);
  const double rhs = std::pow(r, p - 1.0) * sum;
  return lhs <= rhs * (1.0 + rel_tolerance) + 1e-12;
}

}  // namespace fair_range

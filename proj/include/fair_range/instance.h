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

#ifndef FAIR_RANGE_INSTANCE_H_
#define FAIR_RANGE_INSTANCE_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "fair_range/matrix.h"

namespace fair_range {

inline constexpr int kNoGroup = -1;

// A fair range clustering instance over a finite metric. Points are addressed
// by index; "lowest id" tie-breaking throughout the library means lowest
// index. Facilities and clients are lists of point indices. A facility index
// (position in `facilities`) is what solutions refer to.
struct MetricInstance {
  std::vector<std::string> point_ids;
  // Optional; when present, `dist` was computed from these once.
  std::vector<std::vector<double>> coordinates;
  Matrix dist;

  std::vector<int> facilities;
  // Parallel to `facilities`, values in [0, num_groups) or kNoGroup.
  std::vector<int> facility_group;
  int num_groups = 0;

  std::vector<int> clients;
  // Parallel to `clients`.
  std::vector<std::int64_t> demand;

  double p = 1.0;

  int num_points() const { return static_cast<int>(point_ids.size()); }
  int num_facilities() const { return static_cast<int>(facilities.size()); }
  int num_clients() const { return static_cast<int>(clients.size()); }

  double d(int point_a, int point_b) const { return dist(point_a, point_b); }
  // Distance from a point to facility `f` (a facility index).
  double to_facility(int point, int f) const {
    return dist(point, facilities[f]);
  }

  // |F_i| for every group.
  std::vector<int> GroupSizes() const;
};

// Weighted demand points. Used for the client set D and for every derived
// location set (reduced, consolidated).
struct Locations {
  std::vector<int> points;
  std::vector<std::int64_t> weights;

  int size() const { return static_cast<int>(points.size()); }
  std::int64_t TotalWeight() const;
};

Locations ClientLocations(const MetricInstance& inst);

struct GroupRange {
  int lower = 0;
  int upper = 0;
  bool operator==(const GroupRange&) const = default;
};

struct RangeConstraints {
  int k = 0;
  std::vector<GroupRange> ranges;
  bool operator==(const RangeConstraints&) const = default;
};

struct Violation {
  std::string kind;
  std::string detail;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  bool Has(const std::string& kind) const;
  std::string ToString() const;
};

Matrix EuclideanDistances(const std::vector<std::vector<double>>& coords);

// Lists every violated instance invariant. Triangle inequalities are checked
// exhaustively when |P|^3 <= kMaxTriangleChecks, otherwise on that many
// uniformly sampled triples drawn from `seed`.
inline constexpr std::int64_t kMaxTriangleChecks = 1'000'000;
ValidationReport ValidateInstance(const MetricInstance& inst,
                                  std::uint64_t seed = 0,
                                  double tolerance = 1e-9);

ValidationReport ValidateRanges(const RangeConstraints& rc, int num_groups);

// True iff a k-subset of facilities meeting every group range exists.
bool CheckRangeFeasibility(std::span<const int> group_sizes,
                           const RangeConstraints& rc);

struct ClusteringCost {
  double cost_p = 0.0;
  double cost = 0.0;
};

// sum_v w(v) * min_{c in centers} d(v, c)^p over the instance clients.
// `centers` are facility indices. Throws on an empty center set.
ClusteringCost ComputeClusteringCost(const MetricInstance& inst,
                                     std::span<const int> centers);
// Same objective over an arbitrary weighted location set.
double LocationsCostP(const MetricInstance& inst, const Locations& locations,
                      std::span<const int> centers);

struct CenterSolution {
  std::vector<int> centers;  // sorted facility indices
  std::vector<int> group_counts;
  double cost_p = 0.0;
  double cost = 0.0;
};

CenterSolution MakeCenterSolution(const MetricInstance& inst,
                                  std::vector<int> centers);
// Group counts within ranges and |C| = k.
bool SatisfiesRanges(const CenterSolution& solution,
                     const RangeConstraints& rc);

// (x + sum y_i)^p <= (1+lambda)^(p-1) x^p + ((1+lambda) n / lambda)^(p-1)
// sum y_i^p, checked with relative tolerance.
bool PowerTriangleCheck(double x, std::span<const double> ys, double lambda,
                        double p, double rel_tolerance = 1e-9);

// d(u_0, u_r)^p <= r^(p-1) * sum_i d(u_i, u_{i+1})^p for a point chain.
bool ChainPowerBoundHolds(const MetricInstance& inst,
                          std::span<const int> chain, double p,
                          double rel_tolerance = 1e-9);

}  // namespace fair_range

#endif  // FAIR_RANGE_INSTANCE_H_

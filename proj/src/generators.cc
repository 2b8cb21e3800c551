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

#include "fair_range/generators.h"

#include <algorithm>
#include <string>

#include "fair_range/error.h"

namespace fair_range {
namespace {

void AllPointsServe(MetricInstance& inst, int n) {
  inst.facilities.resize(n);
  inst.clients.resize(n);
  for (int i = 0; i < n; ++i) {
    inst.facilities[i] = i;
    inst.clients[i] = i;
  }
}

}  // namespace

MetricInstance GenerateRandomInstance(const RandomInstanceOptions& options) {
  const int n = options.num_points;
  if (n < 1 || options.num_groups < 1 || options.num_groups > n ||
      options.dimension < 1 || options.max_demand < 1 || options.p < 1.0) {
    throw FairRangeError(ErrorKind::kInvalidArgument, "generate_random",
                         "invalid generator options");
  }
  std::mt19937_64 rng(options.seed);
  std::uniform_real_distribution<double> coord(0.0, options.side);
  std::uniform_int_distribution<int> group(0, options.num_groups - 1);
  std::uniform_int_distribution<int> demand(1, options.max_demand);

  MetricInstance inst;
  inst.p = options.p;
  inst.num_groups = options.num_groups;
  for (int i = 0; i < n; ++i) {
    inst.point_ids.push_back("p" + std::to_string(i));
    std::vector<double> c(options.dimension);
    for (double& x : c) x = coord(rng);
    inst.coordinates.push_back(std::move(c));
  }
  inst.dist = EuclideanDistances(inst.coordinates);
  AllPointsServe(inst, n);
  for (int i = 0; i < n; ++i)
    inst.facility_group.push_back(i < options.num_groups ? i : group(rng));
  for (int i = 0; i < n; ++i) inst.demand.push_back(demand(rng));
  return inst;
}

RangeConstraints RandomFeasibleRangesForK(std::span<const int> group_sizes,
                                          int k, std::mt19937_64& rng) {
  RangeConstraints rc;
  rc.k = k;
  for (int attempt = 0; attempt < 1000; ++attempt) {
    rc.ranges.clear();
    for (int size : group_sizes) {
      const int cap = std::min(size, k);
      const int lo = std::uniform_int_distribution<int>(0, cap)(rng);
      const int hi = std::uniform_int_distribution<int>(lo, cap)(rng);
      rc.ranges.push_back({lo, hi});
    }
    if (CheckRangeFeasibility(group_sizes, rc)) return rc;
  }
  rc.ranges.clear();
  for (int size : group_sizes) rc.ranges.push_back({0, size});
  if (!CheckRangeFeasibility(group_sizes, rc)) {
    throw FairRangeError(ErrorKind::kInfeasible, "random_ranges",
                         "fewer facilities than centers");
  }
  return rc;
}

RangeConstraints RandomFeasibleRanges(std::span<const int> group_sizes,
                                      int max_k, std::mt19937_64& rng) {
  int total = 0;
  for (int s : group_sizes) total += s;
  const int k =
      std::uniform_int_distribution<int>(1, std::max(1, std::min(max_k, total)))(rng);
  return RandomFeasibleRangesForK(group_sizes, k, rng);
}

MetricInstance GenerateFigure1Instance(int k, int n, double m, double M,
                                       double p, bool allow_nonmetric) {
  if (k <= 0 || k % 6 != 0 || n <= 0 || (3 * n) % (4 * k) != 0) {
    throw FairRangeError(ErrorKind::kInvalidArgument, "generate_figure1",
                         "need k divisible by 6 and 3n/(4k) integral");
  }
  if (!(m > 0.0) || !(M > m)) {
    throw FairRangeError(ErrorKind::kInvalidArgument, "generate_figure1",
                         "need 0 < m < M");
  }
  if (M > 2.0 * m && !allow_nonmetric) {
    throw FairRangeError(ErrorKind::kInvalidArgument, "generate_figure1",
                         "M > 2m needs allow_nonmetric");
  }
  const int half = n / 2;
  const int cluster_size = 3 * n / (4 * k);
  // label: -1 for red, else the blue cluster.
  std::vector<int> label(n, -1);
  for (int i = half; i < n; ++i) label[i] = (i - half) / cluster_size;

  MetricInstance inst;
  inst.p = p;
  inst.num_groups = 2;
  inst.dist = Matrix(n, n);
  for (int i = 0; i < n; ++i) {
    inst.point_ids.push_back((label[i] < 0 ? "r" : "b") + std::to_string(i));
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      inst.dist(i, j) = label[i] == label[j] ? m : M;
    }
  }
  AllPointsServe(inst, n);
  for (int i = 0; i < n; ++i) inst.facility_group.push_back(label[i] < 0 ? 0 : 1);
  inst.demand.assign(n, 1);
  return inst;
}

}  // namespace fair_range

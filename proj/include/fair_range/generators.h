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

#ifndef FAIR_RANGE_GENERATORS_H_
#define FAIR_RANGE_GENERATORS_H_

#include <cstdint>
#include <random>
#include <span>

#include "fair_range/instance.h"

namespace fair_range {

struct RandomInstanceOptions {
  int num_points = 10;
  int num_groups = 2;
  int dimension = 2;
  double side = 100.0;  // coordinates uniform in [0, side)^dimension
  int max_demand = 3;   // demands uniform in [1, max_demand]
  double p = 1.0;
  std::uint64_t seed = 0;
};

// Euclidean points that are all both clients and facilities. Group labels
// are uniform, with the first num_groups points covering every group so
// that none is empty.
MetricInstance GenerateRandomInstance(const RandomInstanceOptions& options);

// Uniform k in [1, max_k] capped at |F|, then per-group ranges drawn until
// the ranges admit a center set.
RangeConstraints RandomFeasibleRanges(std::span<const int> group_sizes,
                                      int max_k, std::mt19937_64& rng);
RangeConstraints RandomFeasibleRangesForK(std::span<const int> group_sizes,
                                          int k, std::mt19937_64& rng);

// n/2 red points pairwise at distance m, and n/2 blue points split into
// 2k/3 clusters of 3n/(4k) points: distance m inside a cluster and M
// between clusters and between colours. Red is group 0, blue group 1; every
// point is a unit-demand client and a facility. Requires k divisible by 6,
// 3n/(4k) a positive integer, 0 < m < M, and M <= 2m unless
// `allow_nonmetric` is set. The matrix satisfies the triangle inequality
// for every M > m, since no point lies at distance m from two clusters.
MetricInstance GenerateFigure1Instance(int k, int n, double m, double M,
                                       double p, bool allow_nonmetric = false);

}  // namespace fair_range

#endif  // FAIR_RANGE_GENERATORS_H_

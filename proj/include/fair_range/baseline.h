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

#ifndef FAIR_RANGE_BASELINE_H_
#define FAIR_RANGE_BASELINE_H_

#include <span>
#include <vector>

#include "fair_range/instance.h"

namespace fair_range {

// Greedy farthest-first traversal over all points: starts at point 0 and
// repeatedly adds the point farthest from the chosen set (ties by lowest
// index). Returns point indices in selection order.
std::vector<int> FarthestFirst(const MetricInstance& inst, int k);

// Farthest-first restricted to `candidates` (point indices), seeded with
// candidates.front(). Returns a subsequence of `candidates`.
std::vector<int> FarthestFirstAmong(const MetricInstance& inst,
                                    std::span<const int> candidates, int k);

struct LocalSearchResult {
  std::vector<int> centers;  // sorted facility indices
  double cost_p = 0.0;
  std::vector<double> cost_trace;  // cost_p after seeding and after each swap
  int iterations = 0;
};

// Single-swap local search for vanilla k-clustering with the l_p objective
// over the instance clients. Each iteration applies the best strictly
// improving swap (ties by lowest outgoing then incoming facility index).
LocalSearchResult LocalSearchClustering(const MetricInstance& inst, int k,
                                        int max_iters);
LocalSearchResult LocalSearchClustering(const MetricInstance& inst,
                                        std::vector<int> seed_centers,
                                        int max_iters);

// Client set moved onto the baseline centers. Facilities are unchanged.
struct ReducedInstance {
  std::vector<int> baseline;  // baseline center points c_1..c_k
  Locations locations;        // surviving baseline points with w'
  // For every original client, the index into `baseline` of its nearest
  // baseline center.
  std::vector<int> client_to_baseline;
};

ReducedInstance ReduceLocations(const MetricInstance& inst,
                                std::span<const int> baseline_points);

// sum_v w(v) d(v, baseline)^p over the original clients.
double BaselineCostP(const MetricInstance& inst,
                     const ReducedInstance& reduced);

struct ReductionBound {
  double reduced_cost_p = 0.0;   // cost of S on the reduced locations
  double original_cost_p = 0.0;  // cost of S on the original clients
  double bound = 0.0;            // 2^(p-1) (cost_base + original_cost_p)
  bool holds = false;
};

// The approximate-triangle chain relating the reduced and original costs of
// a center set S (facility indices).
ReductionBound CheckReductionBound(const MetricInstance& inst,
                                   const ReducedInstance& reduced,
                                   std::span<const int> centers,
                                   double rel_tolerance = 1e-9);

}  // namespace fair_range

#endif  // FAIR_RANGE_BASELINE_H_

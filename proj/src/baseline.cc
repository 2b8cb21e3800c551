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

#include "fair_range/baseline.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <unordered_map>

#include "fair_range/error.h"

namespace fair_range {

std::vector<int> FarthestFirstAmong(const MetricInstance& inst,
                                    std::span<const int> candidates, int k) {
  if (k < 0 || k > static_cast<int>(candidates.size())) {
    throw FairRangeError(ErrorKind::kInvalidArgument, "farthest_first",
                         "k exceeds the number of candidate points");
  }
  std::vector<int> chosen;
  if (k == 0) return chosen;
  const int m = static_cast<int>(candidates.size());
  std::vector<double> gap(m, std::numeric_limits<double>::infinity());
  std::vector<bool> taken(m, false);
  int next = 0;
  while (static_cast<int>(chosen.size()) < k) {
    taken[next] = true;
    chosen.push_back(candidates[next]);
    int best = -1;
    for (int i = 0; i < m; ++i) {
      gap[i] = std::min(gap[i], inst.d(candidates[i], candidates[next]));
      if (!taken[i] && (best < 0 || gap[i] > gap[best])) best = i;
    }
    next = best;
  }
  return chosen;
}

std::vector<int> FarthestFirst(const MetricInstance& inst, int k) {
  std::vector<int> all(inst.num_points());
  for (int i = 0; i < inst.num_points(); ++i) all[i] = i;
  return FarthestFirstAmong(inst, all, k);
}

namespace {

struct NearestPair {
  int first = -1;  // position in the center list
  double d1 = std::numeric_limits<double>::infinity();
  double d2 = std::numeric_limits<double>::infinity();
};

}  // namespace

LocalSearchResult LocalSearchClustering(const MetricInstance& inst,
                                        std::vector<int> centers,
                                        int max_iters) {
  const int nf = inst.num_facilities();
  const int nc = inst.num_clients();
  const int k = static_cast<int>(centers.size());
  if (k == 0 || k > nf) {
    throw FairRangeError(ErrorKind::kInvalidArgument, "local_search",
                         "need 1 <= k <= |F|");
  }
  std::sort(centers.begin(), centers.end());

  // Client x facility d^p.
  Matrix cost(nc, nf);
  for (int v = 0; v < nc; ++v)
    for (int f = 0; f < nf; ++f)
      cost(v, f) = std::pow(inst.to_facility(inst.clients[v], f), inst.p);

  std::vector<bool> open(nf, false);
  for (int c : centers) open[c] = true;

  auto nearest_pairs = [&]() {
    std::vector<NearestPair> out(nc);
    for (int v = 0; v < nc; ++v) {
      NearestPair& np = out[v];
      for (int i = 0; i < k; ++i) {
        const double c = cost(v, centers[i]);
        if (c < np.d1) {
          np.d2 = np.d1;
          np.d1 = c;
          np.first = i;
        } else if (c < np.d2) {
          np.d2 = c;
        }
      }
    }
    return out;
  };
  auto total = [&](const std::vector<NearestPair>& nps) {
    double sum = 0.0;
    for (int v = 0; v < nc; ++v)
      sum += static_cast<double>(inst.demand[v]) * nps[v].d1;
    return sum;
  };

  LocalSearchResult result;
  std::vector<NearestPair> nps = nearest_pairs();
  double current = total(nps);
  result.cost_trace.push_back(current);

  std::vector<double> removal(nc);
  while (result.iterations < max_iters) {
    double best_delta = 0.0;
    int best_out = -1;
    int best_in = -1;
    const double threshold = -1e-12 * std::max(current, 1e-300);
    for (int i = 0; i < k; ++i) {
      // Per-client cost if center i closes.
      for (int v = 0; v < nc; ++v)
        removal[v] = nps[v].first == i ? nps[v].d2 : nps[v].d1;
      for (int f = 0; f < nf; ++f) {
        if (open[f]) continue;
        double delta = -current;
        for (int v = 0; v < nc; ++v) {
          delta += static_cast<double>(inst.demand[v]) *
                   std::min(removal[v], cost(v, f));
        }
        if (delta < threshold && delta < best_delta) {
          best_delta = delta;
          best_out = i;
          best_in = f;
        }
      }
    }
    if (best_out < 0) break;
    open[centers[best_out]] = false;
    open[best_in] = true;
    centers[best_out] = best_in;
    std::sort(centers.begin(), centers.end());
    nps = nearest_pairs();
    current = total(nps);
    result.cost_trace.push_back(current);
    ++result.iterations;
  }
  result.centers = centers;
  result.cost_p = current;
  return result;
}

LocalSearchResult LocalSearchClustering(const MetricInstance& inst, int k,
                                        int max_iters) {
  if (k <= 0 || k > inst.num_facilities()) {
    throw FairRangeError(ErrorKind::kInvalidArgument, "local_search",
                         "need 1 <= k <= |F|");
  }
  std::unordered_map<int, int> facility_of_point;
  for (int f = 0; f < inst.num_facilities(); ++f)
    facility_of_point[inst.facilities[f]] = f;
  std::vector<int> seed_points =
      FarthestFirstAmong(inst, inst.facilities, k);
  std::vector<int> seed;
  seed.reserve(k);
  for (int point : seed_points) seed.push_back(facility_of_point.at(point));
  return LocalSearchClustering(inst, std::move(seed), max_iters);
}

ReducedInstance ReduceLocations(const MetricInstance& inst,
                                std::span<const int> baseline_points) {
  if (baseline_points.empty()) {
    throw FairRangeError(ErrorKind::kInvalidArgument, "reduce_locations",
                         "empty baseline");
  }
  ReducedInstance reduced;
  reduced.baseline.assign(baseline_points.begin(), baseline_points.end());
  const int nb = static_cast<int>(reduced.baseline.size());
  std::vector<std::int64_t> aggregate(nb, 0);
  reduced.client_to_baseline.resize(inst.num_clients());
  for (int v = 0; v < inst.num_clients(); ++v) {
    int best = -1;
    for (int b = 0; b < nb; ++b) {
      const int point = reduced.baseline[b];
      if (best < 0) {
        best = b;
        continue;
      }
      const double db = inst.d(inst.clients[v], point);
      const double dbest = inst.d(inst.clients[v], reduced.baseline[best]);
      if (db < dbest || (db == dbest && point < reduced.baseline[best])) {
        best = b;
      }
    }
    reduced.client_to_baseline[v] = best;
    aggregate[best] += inst.demand[v];
  }
  // Keep baseline order; drop empty locations.
  for (int b = 0; b < nb; ++b) {
    if (aggregate[b] == 0) continue;
    reduced.locations.points.push_back(reduced.baseline[b]);
    reduced.locations.weights.push_back(aggregate[b]);
  }
  return reduced;
}

double BaselineCostP(const MetricInstance& inst,
                     const ReducedInstance& reduced) {
  double total = 0.0;
  for (int v = 0; v < inst.num_clients(); ++v) {
    const int point = reduced.baseline[reduced.client_to_baseline[v]];
    total += static_cast<double>(inst.demand[v]) *
             std::pow(inst.d(inst.clients[v], point), inst.p);
  }
  return total;
}

ReductionBound CheckReductionBound(const MetricInstance& inst,
                                   const ReducedInstance& reduced,
                                   std::span<const int> centers,
                                   double rel_tolerance) {
  ReductionBound out;
  out.reduced_cost_p = LocationsCostP(inst, reduced.locations, centers);
  out.original_cost_p = ComputeClusteringCost(inst, centers).cost_p;
  out.bound = std::pow(2.0, inst.p - 1.0) *
              (BaselineCostP(inst, reduced) + out.original_cost_p);
  out.holds = out.reduced_cost_p <= out.bound * (1.0 + rel_tolerance) + 1e-12;
  return out;
}

}  // namespace fair_range

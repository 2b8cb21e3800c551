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
#include <limits>
#include <numeric>

#include "fair_range/error.h"
#include "fair_range/round.h"

namespace fair_range {

FacilityPartition PartitionFacilities(const MetricInstance& inst,
                                      const Locations& survivors,
                                      const Matrix& x_tilde) {
  const int ns = survivors.size();
  FacilityPartition part;
  part.sets.resize(ns);
  part.r_values.assign(ns, 0.0);
  part.remover.assign(ns, -1);
  for (int v = 0; v < ns; ++v) {
    const int point = survivors.points[v];
    std::vector<int>& set = part.sets[v];
    for (int u = 0; u < inst.num_facilities(); ++u) {
      if (x_tilde(v, u) <= 0.0) continue;
      set.push_back(u);
      part.r_values[v] += x_tilde(v, u) * std::pow(inst.to_facility(point, u), inst.p);
    }
    if (set.empty() || set.size() > 2) {
      throw FairRangeError(ErrorKind::kInternal, "partition_facilities",
                           "location " + std::to_string(v) + " is served by " +
                               std::to_string(set.size()) + " facilities");
    }
    if (set.size() == 2 &&
        inst.to_facility(point, set[1]) < inst.to_facility(point, set[0])) {
      std::swap(set[0], set[1]);
    }
  }
  std::vector<int> order(ns);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return part.r_values[a] < part.r_values[b];
  });
  std::vector<bool> gone(ns, false);
  for (int i : order) {
    if (gone[i]) continue;
    gone[i] = true;
    part.surviving.push_back(i);
    for (int j = 0; j < ns; ++j) {
      if (gone[j]) continue;
      for (int u : part.sets[j]) {
        if (std::find(part.sets[i].begin(), part.sets[i].end(), u) !=
            part.sets[i].end()) {
          gone[j] = true;
          part.remover[j] = i;
          break;
        }
      }
    }
  }
  return part;
}

std::vector<std::string> CheckPartition(const FacilityPartition& part) {
  std::vector<std::string> out;
  std::vector<int> owner;
  for (int i : part.surviving) {
    for (int u : part.sets[i]) {
      if (u >= static_cast<int>(owner.size())) owner.resize(u + 1, -1);
      if (owner[u] >= 0) {
        out.push_back("sets of " + std::to_string(owner[u]) + " and " +
                      std::to_string(i) + " share facility " + std::to_string(u));
      }
      owner[u] = i;
    }
  }
  for (int j = 0; j < static_cast<int>(part.sets.size()); ++j) {
    const int i = part.remover[j];
    if (i < 0) {
      if (std::find(part.surviving.begin(), part.surviving.end(), j) ==
          part.surviving.end())
        out.push_back("location " + std::to_string(j) + " has no remover");
      continue;
    }
    bool meets = false;
    for (int u : part.sets[j])
      meets |= std::find(part.sets[i].begin(), part.sets[i].end(), u) !=
               part.sets[i].end();
    if (!meets || part.r_values[i] > part.r_values[j]) {
      out.push_back("location " + std::to_string(j) +
                    " removed by an unrelated or costlier location");
    }
  }
  return out;
}

std::vector<PartitionBound> PartitionBounds(const MetricInstance& inst,
                                            const Locations& survivors,
                                            const FacilityPartition& part,
                                            std::span<const int> centers) {
  std::vector<PartitionBound> out;
  const double c = std::pow(3.0, inst.p - 1.0);
  for (int i = 0; i < static_cast<int>(part.sets.size()); ++i) {
    const int owner = part.remover[i] < 0 ? i : part.remover[i];
    const int point = survivors.points[i];
    double best = std::numeric_limits<double>::infinity();
    for (int u : part.sets[owner]) {
      if (std::find(centers.begin(), centers.end(), u) == centers.end()) continue;
      best = std::min(best, std::pow(inst.to_facility(point, u), inst.p));
    }
    if (!std::isfinite(best)) {
      throw FairRangeError(ErrorKind::kInvalidArgument, "partition_bounds",
                           "set of location " + std::to_string(owner) +
                               " has no open facility");
    }
    PartitionBound b{i, best, 0.0, 0.0};
    if (owner == i) {
      b.stated = part.r_values[i];
      b.bound = 2.0 * part.r_values[i];
    } else {
      b.stated = c * (part.r_values[i] + 2.0 * part.r_values[owner]);
      b.bound = 2.0 * b.stated;
    }
    out.push_back(b);
  }
  return out;
}

}  // namespace fair_range

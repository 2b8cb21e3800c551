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

#include "fair_range/sparsify.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "fair_range/error.h"

namespace fair_range {

double FractionalRadius(const MetricInstance& inst, const Locations& locations,
                        const Matrix& x, int v) {
  double sum = 0.0;
  for (int u = 0; u < inst.num_facilities(); ++u) {
    if (x(v, u) == 0.0) continue;
    sum += x(v, u) * std::pow(inst.to_facility(locations.points[v], u), inst.p);
  }
  return std::pow(sum, 1.0 / inst.p);
}

SparsifiedInstance ConsolidateLocations(const MetricInstance& inst,
                                        const Locations& locations,
                                        const FractionalSolution& frac) {
  const int n = locations.size();
  SparsifiedInstance sparse;
  sparse.radii.resize(n);
  for (int v = 0; v < n; ++v)
    sparse.radii[v] = FractionalRadius(inst, locations, frac.x, v);
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return sparse.radii[a] < sparse.radii[b];
  });
  const double factor = std::pow(2.0, 1.0 + 1.0 / inst.p);
  sparse.forward_map.assign(n, -1);
  for (int a = 0; a < n; ++a) {
    const int vi = order[a];
    if (sparse.forward_map[vi] >= 0) continue;
    const int id = sparse.survivors.size();
    sparse.forward_map[vi] = id;
    sparse.survivor_source.push_back(vi);
    sparse.survivors.points.push_back(locations.points[vi]);
    std::int64_t weight = locations.weights[vi];
    for (int b = a + 1; b < n; ++b) {
      const int vj = order[b];
      if (sparse.forward_map[vj] >= 0) continue;
      const double d = inst.d(locations.points[vi], locations.points[vj]);
      if (d <= factor * sparse.radii[vj] * (1.0 + kBoundarySlack)) {
        sparse.forward_map[vj] = id;
        weight += locations.weights[vj];
      }
    }
    sparse.survivors.weights.push_back(weight);
  }
  sparse.balls.assign(sparse.survivors.size(), {});
  return sparse;
}

void ComputeBalls(const MetricInstance& inst, SparsifiedInstance& sparse) {
  const int ns = sparse.survivors.size();
  const double factor = std::pow(2.0, 1.0 / inst.p);
  sparse.balls.assign(ns, {});
  std::vector<int> owner(inst.num_facilities(), -1);
  for (int s = 0; s < ns; ++s) {
    const double radius =
        factor * sparse.radii[sparse.survivor_source[s]] * (1.0 + kBoundarySlack);
    for (int u = 0; u < inst.num_facilities(); ++u) {
      if (inst.to_facility(sparse.survivors.points[s], u) > radius) continue;
      if (owner[u] >= 0) {
        throw FairRangeError(ErrorKind::kInternal, "compute_balls",
                             "facility " + std::to_string(u) +
                                 " lies in the balls of locations " +
                                 std::to_string(owner[u]) + " and " +
                                 std::to_string(s));
      }
      owner[u] = s;
      sparse.balls[s].push_back(u);
    }
  }
}

Matrix SurvivorRows(const SparsifiedInstance& sparse, const Matrix& x) {
  Matrix out(sparse.survivors.size(), x.cols());
  for (int s = 0; s < sparse.survivors.size(); ++s) {
    auto src = x.row(sparse.survivor_source[s]);
    std::copy(src.begin(), src.end(), out.row(s).begin());
  }
  return out;
}

std::vector<std::string> CheckSeparation(const MetricInstance& inst,
                                         const SparsifiedInstance& sparse,
                                         double tolerance) {
  std::vector<std::string> out;
  const double factor = std::pow(2.0, 1.0 + 1.0 / inst.p);
  const int ns = sparse.survivors.size();
  for (int a = 0; a < ns; ++a) {
    for (int b = a + 1; b < ns; ++b) {
      const double ra = sparse.radii[sparse.survivor_source[a]];
      const double rb = sparse.radii[sparse.survivor_source[b]];
      const double d =
          inst.d(sparse.survivors.points[a], sparse.survivors.points[b]);
      if (d < factor * std::max(ra, rb) - tolerance) {
        std::ostringstream os;
        os << "survivors " << a << "," << b << " at distance " << d
           << " below " << factor * std::max(ra, rb);
        out.push_back(os.str());
      }
    }
  }
  return out;
}

std::vector<std::string> CheckForwardMap(const MetricInstance& inst,
                                         const Locations& locations,
                                         const SparsifiedInstance& sparse,
                                         double tolerance) {
  std::vector<std::string> out;
  const double factor = std::pow(2.0, 1.0 + 1.0 / inst.p);
  std::int64_t total = 0;
  for (int v = 0; v < locations.size(); ++v) {
    const int s = sparse.forward_map[v];
    if (s < 0 || s >= sparse.survivors.size()) {
      out.push_back("location " + std::to_string(v) + " is not mapped");
      continue;
    }
    const double d = inst.d(locations.points[v], sparse.survivors.points[s]);
    if (d > factor * sparse.radii[v] + tolerance) {
      out.push_back("location " + std::to_string(v) + " moved too far");
    }
    total += locations.weights[v];
  }
  for (int s = 0; s < sparse.survivors.size(); ++s) {
    if (sparse.forward_map[sparse.survivor_source[s]] != s) {
      out.push_back("survivor " + std::to_string(s) + " not mapped to itself");
    }
  }
  if (total != sparse.survivors.TotalWeight()) {
    out.push_back("demand not conserved");
  }
  return out;
}

std::vector<std::string> CheckBallsDisjoint(const SparsifiedInstance& sparse) {
  std::vector<std::string> out;
  std::vector<int> seen;
  for (int s = 0; s < static_cast<int>(sparse.balls.size()); ++s) {
    for (int u : sparse.balls[s]) {
      if (u >= static_cast<int>(seen.size())) seen.resize(u + 1, -1);
      if (seen[u] >= 0) {
        out.push_back("facility " + std::to_string(u) + " in balls " +
                      std::to_string(seen[u]) + " and " + std::to_string(s));
      }
      seen[u] = s;
    }
  }
  return out;
}

std::vector<std::string> CheckHalfContribution(const SparsifiedInstance& sparse,
                                               const Matrix& x,
                                               double tolerance) {
  std::vector<std::string> out;
  for (int s = 0; s < sparse.survivors.size(); ++s) {
    double mass = 0.0;
    for (int u : sparse.balls[s]) mass += x(sparse.survivor_source[s], u);
    if (mass < 0.5 - tolerance) {
      out.push_back("survivor " + std::to_string(s) + " has ball mass " +
                    std::to_string(mass));
    }
  }
  return out;
}

RadiusTransfer CheckRadiusTransfer(const MetricInstance& inst,
                                   const Locations& locations,
                                   const SparsifiedInstance& sparse,
                                   double rel_tolerance) {
  RadiusTransfer out;
  for (int v = 0; v < locations.size(); ++v)
    out.all += static_cast<double>(locations.weights[v]) *
               std::pow(sparse.radii[v], inst.p);
  for (int s = 0; s < sparse.survivors.size(); ++s)
    out.survivors += static_cast<double>(sparse.survivors.weights[s]) *
                     std::pow(sparse.radii[sparse.survivor_source[s]], inst.p);
  out.holds = out.survivors <= out.all * (1.0 + rel_tolerance);
  return out;
}

LiftCertificate LiftSolution(const MetricInstance& inst,
                             const Locations& locations,
                             const SparsifiedInstance& sparse,
                             std::span<const int> centers, double opt_d,
                             double rel_tolerance) {
  LiftCertificate out;
  out.actual = LocationsCostP(inst, locations, centers);
  out.z = LocationsCostP(inst, sparse.survivors, centers);
  out.bound = std::pow(4.0, inst.p) * opt_d + std::pow(2.0, inst.p - 1.0) * out.z;
  out.holds = out.actual <= out.bound * (1.0 + rel_tolerance) + 1e-12;
  return out;
}

}  // namespace fair_range

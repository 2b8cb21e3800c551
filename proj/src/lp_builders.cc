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

#include "fair_range/lp_builders.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "fair_range/error.h"

namespace fair_range {
namespace {

constexpr double kSnap = 1e-9;

void AddRangeRows(LinearProgram& lp, const MetricInstance& inst,
                  const RangeConstraints& rc, int y_offset,
                  std::vector<StructuredRowInfo>* info) {
  std::vector<std::vector<LinearTerm>> members(inst.num_groups);
  for (int u = 0; u < inst.num_facilities(); ++u)
    members[inst.facility_group[u]].push_back({y_offset + u, 1.0});
  for (int g = 0; g < inst.num_groups; ++g) {
    lp.AddRow(members[g], RowSense::kGreaterEqual, rc.ranges[g].lower,
              "range_lo_" + std::to_string(g));
    lp.AddRow(members[g], RowSense::kLessEqual, rc.ranges[g].upper,
              "range_hi_" + std::to_string(g));
    if (info) {
      info->push_back({StructuredRowKind::kGroupLower, g});
      info->push_back({StructuredRowKind::kGroupUpper, g});
    }
  }
  std::vector<LinearTerm> all;
  for (int u = 0; u < inst.num_facilities(); ++u) all.push_back({y_offset + u, 1.0});
  lp.AddRow(std::move(all), RowSense::kLessEqual, rc.k, "budget");
  if (info) info->push_back({StructuredRowKind::kBudget, 0});
}

void CheckRangeShape(const MetricInstance& inst, const RangeConstraints& rc) {
  if (static_cast<int>(rc.ranges.size()) != inst.num_groups) {
    throw FairRangeError(ErrorKind::kInvalidArgument, "lp",
                         "one range per group required");
  }
}

}  // namespace

LinearProgram BuildFairRangeLp(const MetricInstance& inst,
                               const Locations& locations,
                               const RangeConstraints& rc) {
  CheckRangeShape(inst, rc);
  const FairRangeLpLayout layout{locations.size(), inst.num_facilities()};
  const int nd = layout.num_locations;
  const int nf = layout.num_facilities;
  LinearProgram lp(layout.num_vars());
  for (int v = 0; v < nd; ++v) {
    const double w = static_cast<double>(locations.weights[v]);
    for (int u = 0; u < nf; ++u) {
      lp.objective[layout.x(v, u)] =
          w * std::pow(inst.to_facility(locations.points[v], u), inst.p);
      lp.var_names[layout.x(v, u)] =
          "x_" + std::to_string(v) + "_" + std::to_string(u);
    }
  }
  for (int u = 0; u < nf; ++u) {
    lp.upper[layout.y(u)] = 1.0;
    lp.var_names[layout.y(u)] = "y_" + std::to_string(u);
  }
  for (int v = 0; v < nd; ++v) {
    std::vector<LinearTerm> terms;
    terms.reserve(nf);
    for (int u = 0; u < nf; ++u) terms.push_back({layout.x(v, u), 1.0});
    lp.AddRow(std::move(terms), RowSense::kGreaterEqual, 1.0,
              "cover_" + std::to_string(v));
  }
  AddRangeRows(lp, inst, rc, layout.y(0), nullptr);
  for (int v = 0; v < nd; ++v) {
    for (int u = 0; u < nf; ++u) {
      lp.AddRow({{layout.x(v, u), 1.0}, {layout.y(u), -1.0}},
                RowSense::kLessEqual, 0.0,
                "link_" + std::to_string(v) + "_" + std::to_string(u));
    }
  }
  return lp;
}

FractionalSolution SolveFairRangeLp(const MetricInstance& inst,
                                    const Locations& locations,
                                    const RangeConstraints& rc,
                                    const SimplexOptions& options) {
  const LinearProgram lp = BuildFairRangeLp(inst, locations, rc);
  const LpResult res = SolveVertex(lp, options);
  if (res.status == LpStatus::kInfeasible) {
    throw FairRangeError(ErrorKind::kInfeasible, "fair_range_lp",
                         "relaxation is infeasible");
  }
  if (res.status != LpStatus::kOptimal) {
    throw FairRangeError(ErrorKind::kInternal, "fair_range_lp",
                         "relaxation reported unbounded");
  }
  const FairRangeLpLayout layout{locations.size(), inst.num_facilities()};
  const int nd = layout.num_locations;
  const int nf = layout.num_facilities;
  FractionalSolution sol;
  sol.objective_value = res.objective;
  sol.y.resize(nf);
  for (int u = 0; u < nf; ++u) {
    double y = std::clamp(res.x[layout.y(u)], 0.0, 1.0);
    if (y < kSnap) y = 0.0;
    if (y > 1.0 - kSnap) y = 1.0;
    sol.y[u] = y;
  }
  sol.x = Matrix(nd, nf);
  std::vector<int> order(nf);
  for (int v = 0; v < nd; ++v) {
    double sum = 0.0;
    for (int u = 0; u < nf; ++u) {
      double x = std::max(0.0, res.x[layout.x(v, u)]);
      if (x < kSnap) x = 0.0;
      if (x > sol.y[u] - kSnap) x = std::min(x, sol.y[u]);
      if (x > sol.y[u]) x = sol.y[u];
      sol.x(v, u) = x;
      sum += x;
    }
    // Nearest facilities first; ties by index.
    std::iota(order.begin(), order.end(), 0);
    const int point = locations.points[v];
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
      return inst.to_facility(point, a) < inst.to_facility(point, b);
    });
    if (sum > 1.0) {
      double excess = sum - 1.0;
      for (auto it = order.rbegin(); it != order.rend() && excess > 0; ++it) {
        const double take = std::min(excess, sol.x(v, *it));
        sol.x(v, *it) -= take;
        excess -= take;
      }
    } else if (sum < 1.0) {
      double deficit = 1.0 - sum;
      for (int u : order) {
        if (deficit <= 0) break;
        const double add = std::min(deficit, sol.y[u] - sol.x(v, u));
        if (add <= 0) continue;
        sol.x(v, u) += add;
        deficit -= add;
      }
    }
  }
  return sol;
}

double FlpCost(const MetricInstance& inst, const Locations& locations,
               const Matrix& x) {
  double total = 0.0;
  for (int v = 0; v < locations.size(); ++v) {
    double row = 0.0;
    for (int u = 0; u < inst.num_facilities(); ++u) {
      if (x(v, u) == 0.0) continue;
      row += x(v, u) * std::pow(inst.to_facility(locations.points[v], u), inst.p);
    }
    total += static_cast<double>(locations.weights[v]) * row;
  }
  return total;
}

std::vector<std::string> CheckFairRangeConstraints(
    const MetricInstance& inst, const RangeConstraints& rc, const Matrix& x,
    const std::vector<double>& y, double cover_tol, double link_tol) {
  std::vector<std::string> out;
  const int nf = inst.num_facilities();
  for (int v = 0; v < x.rows(); ++v) {
    double sum = 0.0;
    for (int u = 0; u < nf; ++u) {
      sum += x(v, u);
      if (x(v, u) < -link_tol || x(v, u) > y[u] + link_tol) {
        std::ostringstream os;
        os << "link: x(" << v << "," << u << ")=" << x(v, u) << " y=" << y[u];
        out.push_back(os.str());
      }
    }
    if (sum < 1.0 - cover_tol) {
      out.push_back("cover: location " + std::to_string(v) + " sums to " +
                    std::to_string(sum));
    }
  }
  std::vector<double> group_sum(inst.num_groups, 0.0);
  double total = 0.0;
  for (int u = 0; u < nf; ++u) {
    if (y[u] < -link_tol) out.push_back("y negative at " + std::to_string(u));
    group_sum[inst.facility_group[u]] += y[u];
    total += y[u];
  }
  for (int g = 0; g < inst.num_groups; ++g) {
    if (group_sum[g] < rc.ranges[g].lower - cover_tol ||
        group_sum[g] > rc.ranges[g].upper + cover_tol) {
      out.push_back("range: group " + std::to_string(g) + " has " +
                    std::to_string(group_sum[g]));
    }
  }
  if (total > rc.k + cover_tol) {
    out.push_back("budget: total " + std::to_string(total));
  }
  return out;
}

StructuredLp BuildStructuredLp(const MetricInstance& inst,
                               const Locations& locations,
                               const std::vector<std::vector<int>>& balls,
                               const std::vector<std::vector<int>>& superballs,
                               const std::vector<int>& nearest,
                               const RangeConstraints& rc) {
  CheckRangeShape(inst, rc);
  const int nf = inst.num_facilities();
  const int nd = locations.size();
  StructuredLp out;
  out.lp = LinearProgram(nf);
  LinearProgram& lp = out.lp;
  for (int u = 0; u < nf; ++u) {
    lp.upper[u] = 1.0;
    lp.var_names[u] = "y_" + std::to_string(u);
  }
  for (int v = 0; v < nd; ++v) {
    const int point = locations.points[v];
    const double w = static_cast<double>(locations.weights[v]);
    const double outer =
        nearest[v] < 0
            ? 0.0
            : std::pow(inst.d(point, locations.points[nearest[v]]), inst.p);
    out.constant_term += w * outer;
    for (int u : superballs[v]) {
      lp.objective[u] += w * (std::pow(inst.to_facility(point, u), inst.p) - outer);
    }
  }
  AddRangeRows(lp, inst, rc, 0, &out.row_info);
  for (int v = 0; v < nd; ++v) {
    std::vector<LinearTerm> core;
    for (int u : balls[v]) core.push_back({u, 1.0});
    lp.AddRow(std::move(core), RowSense::kGreaterEqual,
              nearest[v] < 0 ? 1.0 : 0.5, "ball_" + std::to_string(v));
    out.row_info.push_back({StructuredRowKind::kCoreBall, v});
    std::vector<LinearTerm> super;
    for (int u : superballs[v]) super.push_back({u, 1.0});
    lp.AddRow(std::move(super), RowSense::kLessEqual, 1.0,
              "superball_" + std::to_string(v));
    out.row_info.push_back({StructuredRowKind::kSuperBall, v});
  }
  return out;
}

LinearProgram ScaleForHalfIntegral(const StructuredLp& slp) {
  LinearProgram lp = slp.lp;
  for (double& c : lp.objective) c *= 0.5;
  for (LinearRow& row : lp.rows) row.rhs *= 2.0;
  for (int j = 0; j < lp.num_vars; ++j) {
    lp.lower[j] *= 2.0;
    if (lp.upper[j] < kInfinity) lp.upper[j] *= 2.0;
  }
  return lp;
}

}  // namespace fair_range

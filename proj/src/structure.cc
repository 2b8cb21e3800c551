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

#include "fair_range/structure.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "fair_range/error.h"

namespace fair_range {
namespace {

constexpr double kMassTol = 1e-9;

std::vector<int> ByDistance(const MetricInstance& inst, int point,
                            std::vector<int> facilities) {
  std::stable_sort(facilities.begin(), facilities.end(), [&](int a, int b) {
    const double da = inst.to_facility(point, a);
    const double db = inst.to_facility(point, b);
    return da < db || (da == db && a < b);
  });
  return facilities;
}

std::string Str(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

// Range-feasible k-set containing `forced`, filled nearest to `point` first:
// lower bounds, then any group with room. Empty when none exists.
std::vector<int> CompleteAround(const MetricInstance& inst,
                                const RangeConstraints& rc, int point,
                                int forced) {
  std::vector<int> sizes = inst.GroupSizes();
  RangeConstraints rest = rc;
  const int g = inst.facility_group[forced];
  if (rc.ranges[g].upper < 1 || rc.k < 1) return {};
  rest.k -= 1;
  rest.ranges[g].lower = std::max(0, rc.ranges[g].lower - 1);
  rest.ranges[g].upper -= 1;
  sizes[g] -= 1;
  if (rest.k == 0) {
    for (const GroupRange& r : rest.ranges)
      if (r.lower > 0) return {};
  } else if (!CheckRangeFeasibility(sizes, rest)) {
    return {};
  }

  std::vector<int> all(inst.num_facilities());
  std::iota(all.begin(), all.end(), 0);
  all = ByDistance(inst, point, std::move(all));
  std::vector<int> count(inst.num_groups, 0);
  std::vector<bool> used(inst.num_facilities(), false);
  std::vector<int> chosen{forced};
  used[forced] = true;
  count[g] = 1;
  for (int u : all) {
    const int h = inst.facility_group[u];
    if (!used[u] && count[h] < rc.ranges[h].lower) {
      used[u] = true;
      ++count[h];
      chosen.push_back(u);
    }
  }
  for (int u : all) {
    if (static_cast<int>(chosen.size()) >= rc.k) break;
    const int h = inst.facility_group[u];
    if (!used[u] && count[h] < rc.ranges[h].upper) {
      used[u] = true;
      ++count[h];
      chosen.push_back(u);
    }
  }
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

}  // namespace

std::vector<int> NearestSurvivors(const MetricInstance& inst,
                                  const Locations& survivors) {
  const int n = survivors.size();
  std::vector<int> nearest(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (a == b) continue;
      if (nearest[a] < 0 ||
          inst.d(survivors.points[a], survivors.points[b]) <
              inst.d(survivors.points[a], survivors.points[nearest[a]])) {
        nearest[a] = b;
      }
    }
  }
  return nearest;
}

ReassignResult ReassignPrivateFacilities(const MetricInstance& inst,
                                         const SparsifiedInstance& sparse,
                                         const Matrix& x1,
                                         const std::vector<double>& y) {
  const int nf = inst.num_facilities();
  const int ns = sparse.survivors.size();
  std::vector<bool> in_ball(nf, false);
  for (const auto& ball : sparse.balls)
    for (int u : ball) in_ball[u] = true;

  ReassignResult out{x1, {}};
  Matrix& x = out.x;
  for (int u = 0; u < nf; ++u) {
    if (in_ball[u]) continue;
    std::vector<int> serving;
    for (int v = 0; v < ns; ++v)
      if (x(v, u) > 0.0) serving.push_back(v);
    if (serving.size() < 2) continue;
    std::stable_sort(serving.begin(), serving.end(), [&](int a, int b) {
      return inst.to_facility(sparse.survivors.points[a], u) <
             inst.to_facility(sparse.survivors.points[b], u);
    });
    const int keeper = serving.front();
    for (std::size_t j = 1; j < serving.size(); ++j) {
      const int v = serving[j];
      const int point = sparse.survivors.points[v];
      double b = x(v, u);
      x(v, u) = 0.0;
      for (int target : ByDistance(inst, point, sparse.balls[keeper])) {
        if (b <= 0.0) break;
        const double room = y[target] - x(v, target);
        if (room <= 0.0) continue;
        const double t = std::min(room, b);
        x(v, target) += t;
        b -= t;
        out.moves.push_back({v, u, target, t, inst.to_facility(point, u),
                             inst.to_facility(point, target)});
      }
      if (b > kMassTol) {
        throw FairRangeError(ErrorKind::kInternal, "reassign_private",
                             "ball of location " + std::to_string(keeper) +
                                 " cannot absorb " + Str(b) + " from " +
                                 std::to_string(v));
      }
    }
  }
  return out;
}

bool MovesWithinFactor(const std::vector<ReassignMove>& moves, double factor,
                       double tolerance) {
  for (const ReassignMove& m : moves) {
    if (m.to_distance > factor * m.from_distance + tolerance) return false;
  }
  return true;
}

SuperBalls BuildSuperBalls(const MetricInstance& inst,
                           const SparsifiedInstance& sparse, const Matrix& x2) {
  const int nf = inst.num_facilities();
  const int ns = sparse.survivors.size();
  SuperBalls out;
  out.sets.assign(ns, {});
  out.owner.assign(nf, -1);
  for (int v = 0; v < ns; ++v) {
    for (int u : sparse.balls[v]) {
      out.owner[u] = v;
      out.sets[v].push_back(u);
    }
  }
  std::vector<bool> in_ball(nf, false);
  for (int u = 0; u < nf; ++u) in_ball[u] = out.owner[u] >= 0;
  for (int u = 0; u < nf; ++u) {
    if (in_ball[u]) continue;
    for (int v = 0; v < ns; ++v) {
      if (x2(v, u) <= 0.0) continue;
      if (out.owner[u] >= 0) {
        throw FairRangeError(ErrorKind::kInternal, "build_super_balls",
                             "facility " + std::to_string(u) +
                                 " privately serves two locations");
      }
      out.owner[u] = v;
      out.sets[v].push_back(u);
    }
  }
  for (auto& set : out.sets) std::sort(set.begin(), set.end());
  return out;
}

StructuredSolution EnforceStructure(const MetricInstance& inst,
                                    const SparsifiedInstance& sparse,
                                    [[maybe_unused]] const Matrix& x2,
                                    const std::vector<double>& y,
                                    const SuperBalls& superballs,
                                    const RangeConstraints& rc) {
  const int nf = inst.num_facilities();
  const int ns = sparse.survivors.size();
  StructuredSolution sol;
  sol.nearest = NearestSurvivors(inst, sparse.survivors);
  sol.x_bar = Matrix(ns, nf);
  sol.core_balls.assign(ns, {});
  sol.superballs.assign(ns, {});

  if (ns == 1) {
    const int point = sparse.survivors.points[0];
    std::vector<int> all(nf);
    std::iota(all.begin(), all.end(), 0);
    for (int u : ByDistance(inst, point, std::move(all))) {
      std::vector<int> chosen = CompleteAround(inst, rc, point, u);
      if (chosen.empty()) continue;
      sol.y_bar.assign(nf, 0.0);
      for (int c : chosen) sol.y_bar[c] = 1.0;
      sol.core_balls[0] = {u};
      sol.superballs[0] = {u};
      sol.x_bar(0, u) = 1.0;
      break;
    }
    if (sol.y_bar.empty()) {
      throw FairRangeError(ErrorKind::kInfeasible, "enforce_structure",
                           "no range-feasible center set exists");
    }
    sol.cost_flp = FlpCost(inst, sparse.survivors, sol.x_bar);
    return sol;
  }

  sol.y_bar = y;
  for (int v = 0; v < ns; ++v) {
    const int point = sparse.survivors.points[v];
    const double outer = inst.d(point, sparse.survivors.points[sol.nearest[v]]);
    std::vector<int>& core = sol.core_balls[v];
    double mass = 0.0;
    const std::vector<int> ball = ByDistance(inst, point, sparse.balls[v]);
    for (int u : ball)
      if (y[u] == 0.0) core.push_back(u);
    for (int u : ball) {
      if (y[u] > 0.0 && mass + y[u] <= 1.0 + kMassTol) {
        core.push_back(u);
        mass += y[u];
      }
    }
    if (mass < 0.5 - kMassTol) {
      // First fit skipped a facility of mass above 1/2; keep it alone.
      core.erase(std::remove_if(core.begin(), core.end(),
                                [&](int u) { return y[u] > 0.0; }),
                 core.end());
      for (int u : ball) {
        if (y[u] >= 0.5 - kMassTol) {
          core.push_back(u);
          mass = y[u];
          break;
        }
      }
    }
    std::vector<int>& super = sol.superballs[v];
    super = core;
    for (int u : ball)
      if (std::find(core.begin(), core.end(), u) == core.end())
        sol.unaffiliated.push_back(u);
    std::vector<int> privates;
    for (int u : superballs.sets[v])
      if (!std::binary_search(sparse.balls[v].begin(), sparse.balls[v].end(), u))
        privates.push_back(u);
    for (int u : ByDistance(inst, point, std::move(privates))) {
      if (inst.to_facility(point, u) > 2.0 * outer * (1.0 + 1e-12)) {
        sol.pruned.push_back(u);
      } else if (mass + y[u] <= 1.0 + kMassTol) {
        super.push_back(u);
        mass += y[u];
      } else {
        sol.unaffiliated.push_back(u);
      }
    }
    std::sort(core.begin(), core.end());
    std::sort(super.begin(), super.end());
  }
  std::sort(sol.pruned.begin(), sol.pruned.end());
  std::sort(sol.unaffiliated.begin(), sol.unaffiliated.end());

  for (int v = 0; v < ns; ++v) {
    const int point = sparse.survivors.points[v];
    std::vector<int> privates;
    for (int u : sol.superballs[v])
      if (!std::binary_search(sol.core_balls[v].begin(),
                              sol.core_balls[v].end(), u))
        privates.push_back(u);
    double left = 1.0;
    auto fill = [&](const std::vector<int>& tier) {
      for (int u : ByDistance(inst, point, tier)) {
        if (left <= 0.0) return;
        const double t = std::min(left, sol.y_bar[u] - sol.x_bar(v, u));
        if (t <= 0.0) continue;
        sol.x_bar(v, u) += t;
        left -= t;
      }
    };
    fill(sol.core_balls[v]);
    fill(privates);
    fill(sol.core_balls[sol.nearest[v]]);
    if (left > kMassTol) {
      throw FairRangeError(ErrorKind::kInternal, "enforce_structure",
                           "location " + std::to_string(v) + " short by " +
                               Str(left) + " after its neighbour's ball");
    }
    if (left > 0.0) {
      const double scale = 1.0 / (1.0 - left);
      for (int u = 0; u < nf; ++u) sol.x_bar(v, u) *= scale;
    }
  }
  sol.cost_flp = FlpCost(inst, sparse.survivors, sol.x_bar);
  return sol;
}

ValidationReport VerifyStructured(const MetricInstance& inst,
                                  const SparsifiedInstance& sparse,
                                  const StructuredSolution& sol) {
  ValidationReport report;
  auto add = [&](const std::string& kind, const std::string& detail) {
    report.violations.push_back({kind, detail});
  };
  const int nf = inst.num_facilities();
  const int ns = sparse.survivors.size();
  const double tol = 1e-9;
  auto contains = [](const std::vector<int>& set, int u) {
    return std::find(set.begin(), set.end(), u) != set.end();
  };

  std::vector<int> owner(nf, -1);
  for (int v = 0; v < ns; ++v) {
    for (int u : sol.superballs[v]) {
      if (owner[u] >= 0) {
        add("P6", "facility " + std::to_string(u) + " in super balls " +
                      std::to_string(owner[u]) + " and " + std::to_string(v));
      }
      owner[u] = v;
    }
  }
  for (int v = 0; v < ns; ++v) {
    const int point = sparse.survivors.points[v];
    const int nv = sol.nearest[v];
    const auto& core = sol.core_balls[v];
    const auto& super = sol.superballs[v];
    for (int u : core) {
      if (!contains(super, u))
        add("P1", "facility " + std::to_string(u) + " of location " +
                      std::to_string(v) + " outside its super ball");
      if (!contains(sparse.balls[v], u))
        add("P1", "core facility " + std::to_string(u) + " outside B(" +
                      std::to_string(v) + ")");
    }
    double row = 0.0, core_x = 0.0, core_y = 0.0, super_y = 0.0;
    double private_x = 0.0, outside_x = 0.0;
    for (int u : core) core_y += sol.y_bar[u];
    for (int u : super) super_y += sol.y_bar[u];
    for (int u = 0; u < nf; ++u) {
      const double x = sol.x_bar(v, u);
      row += x;
      if (x > sol.y_bar[u] + tol || x < 0.0) {
        add("link", "x(" + std::to_string(v) + "," + std::to_string(u) +
                        ")=" + Str(x) + " exceeds y");
      }
      if (x <= 0.0) continue;
      const bool in_core = contains(core, u);
      const bool in_super = contains(super, u);
      if (in_core) core_x += x;
      if (in_super && !in_core) private_x += x;
      if (!in_super) {
        outside_x += x;
        if (nv < 0 || !contains(sol.core_balls[nv], u))
          add("P3", "location " + std::to_string(v) + " uses facility " +
                        std::to_string(u));
      }
    }
    if (std::abs(row - 1.0) > tol)
      add("mass", "location " + std::to_string(v) + " sums to " + Str(row));
    if (core_x < 0.5 - 1e-7)
      add("P4", "location " + std::to_string(v) + " ball mass " + Str(core_x));
    if (private_x > 0.0 && core_y >= 1.0 - 1e-7)
      add("P2", "location " + std::to_string(v) +
                    " uses private facilities with a full ball");
    if (outside_x > 0.0 && super_y >= 1.0 - 1e-7)
      add("P2", "location " + std::to_string(v) +
                    " leaves a full super ball");
    const double need = nv < 0 ? 1.0 : 0.5;
    if (core_y < need - 1e-7)
      add("ball_row", "location " + std::to_string(v) + " ball holds " +
                          Str(core_y));
    if (super_y > 1.0 + 1e-7)
      add("superball_row", "location " + std::to_string(v) +
                               " super ball holds " + Str(super_y));
    if (nv < 0) continue;
    const double dvv = inst.d(point, sparse.survivors.points[nv]);
    for (int u : super) {
      if (contains(core, u) || sol.y_bar[u] <= 0.0) continue;
      if (inst.to_facility(point, u) > 2.0 * dvv + tol)
        add("P5", "facility " + std::to_string(u) + " of location " +
                      std::to_string(v) + " too far");
    }
    for (int u : sparse.balls[nv]) {
      const double d = inst.to_facility(point, u);
      if (d < 0.5 * dvv - tol || d > 1.5 * dvv + tol)
        add("neighbour_ball", "facility " + std::to_string(u) +
                                  " vs location " + std::to_string(v));
    }
  }
  return report;
}

}  // namespace fair_range

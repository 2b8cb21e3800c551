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

#ifndef FAIR_RANGE_TESTS_TEST_UTIL_H_
#define FAIR_RANGE_TESTS_TEST_UTIL_H_

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "fair_range/instance.h"

namespace fair_range::testing {

// Every point is a unit-demand client and a facility of group 0 unless
// `groups` says otherwise.
inline MetricInstance FromMatrix(const std::vector<std::vector<double>>& d,
                                 std::vector<int> groups = {}, double p = 1.0) {
  MetricInstance inst;
  const int n = static_cast<int>(d.size());
  inst.dist = Matrix(n, n);
  for (int i = 0; i < n; ++i) {
    inst.point_ids.push_back("q" + std::to_string(i));
    for (int j = 0; j < n; ++j) inst.dist(i, j) = d[i][j];
  }
  if (groups.empty()) groups.assign(n, 0);
  inst.facilities.resize(n);
  std::iota(inst.facilities.begin(), inst.facilities.end(), 0);
  inst.facility_group = groups;
  int max_group = 0;
  for (int g : groups) max_group = std::max(max_group, g);
  inst.num_groups = max_group + 1;
  inst.clients = inst.facilities;
  inst.demand.assign(n, 1);
  inst.p = p;
  return inst;
}

inline MetricInstance FromCoordinates(const std::vector<std::vector<double>>& pts,
                                      std::vector<int> groups = {},
                                      double p = 1.0) {
  MetricInstance inst;
  const int n = static_cast<int>(pts.size());
  for (int i = 0; i < n; ++i) inst.point_ids.push_back("q" + std::to_string(i));
  inst.coordinates = pts;
  inst.dist = EuclideanDistances(pts);
  if (groups.empty()) groups.assign(n, 0);
  inst.facilities.resize(n);
  std::iota(inst.facilities.begin(), inst.facilities.end(), 0);
  inst.facility_group = groups;
  int max_group = 0;
  for (int g : groups) max_group = std::max(max_group, g);
  inst.num_groups = max_group + 1;
  inst.clients = inst.facilities;
  inst.demand.assign(n, 1);
  inst.p = p;
  return inst;
}

// Points on the real line.
inline MetricInstance OnLine(const std::vector<double>& xs,
                             std::vector<int> groups = {}, double p = 1.0) {
  std::vector<std::vector<double>> pts;
  for (double x : xs) pts.push_back({x});
  return FromCoordinates(pts, std::move(groups), p);
}

inline RangeConstraints Ranges(int k, std::vector<GroupRange> ranges) {
  RangeConstraints rc;
  rc.k = k;
  rc.ranges = std::move(ranges);
  return rc;
}

// Visits every k-subset of {0..n-1} in lexicographic order.
template <typename Visit>
void ForEachSubset(int n, int k, Visit visit) {
  std::vector<int> s(k);
  std::iota(s.begin(), s.end(), 0);
  while (true) {
    visit(s);
    int i = k - 1;
    while (i >= 0 && s[i] == n - k + i) --i;
    if (i < 0) return;
    ++s[i];
    for (int j = i + 1; j < k; ++j) s[j] = s[j - 1] + 1;
  }
}

}  // namespace fair_range::testing

#endif  // FAIR_RANGE_TESTS_TEST_UTIL_H_

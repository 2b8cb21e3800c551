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
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include <gtest/gtest.h>

#include "fair_range/error.h"
#include "fair_range/generators.h"
#include "fair_range/lp_builders.h"
#include "fair_range/pipeline.h"
#include "fair_range/round.h"
#include "lp_oracles.h"
#include "test_util.h"

namespace fair_range {
namespace {

using testing::FromMatrix;
using testing::OnLine;
using testing::Ranges;

// Client at point 0, facilities at the remaining points.
MetricInstance SplitClientFacilities(MetricInstance inst) {
  const int n = inst.num_points();
  inst.facilities.clear();
  for (int i = 1; i < n; ++i) inst.facilities.push_back(i);
  inst.facility_group.assign(n - 1, 0);
  inst.num_groups = 1;
  inst.clients = {0};
  inst.demand = {1};
  return inst;
}

SolveReport RandomReport(std::uint64_t seed, int n = 12, int groups = 3,
                         int max_k = 4) {
  RandomInstanceOptions options;
  options.num_points = n;
  options.num_groups = groups;
  options.seed = seed;
  options.p = 1.0 + static_cast<double>(seed % 3);
  const MetricInstance inst = GenerateRandomInstance(options);
  std::mt19937_64 rng(seed * 7 + 3);
  const RangeConstraints rc = RandomFeasibleRanges(inst.GroupSizes(), max_k, rng);
  SolverConfig config;
  config.strict = false;
  return SolveFairRange(inst, rc, config);
}

MetricInstance RandomInstance(std::uint64_t seed, int n = 12, int groups = 3) {
  RandomInstanceOptions options;
  options.num_points = n;
  options.num_groups = groups;
  options.seed = seed;
  options.p = 1.0 + static_cast<double>(seed % 3);
  return GenerateRandomInstance(options);
}

bool IsHalfInteger(double v) {
  return v == 0.0 || v == 0.5 || v == 1.0;
}

TEST(SolveHalfIntegral, SingleForcedFacility) {
  const MetricInstance inst = OnLine({0});
  const Locations d{{0}, {1}};
  const StructuredLp slp =
      BuildStructuredLp(inst, d, {{0}}, {{0}}, {-1}, Ranges(1, {{0, 1}}));
  const HalfIntegralSolution sol = SolveHalfIntegral(slp);
  EXPECT_EQ(sol.y, (std::vector<double>{1.0}));
  EXPECT_EQ(sol.objective, 0.0);
}

TEST(SolveHalfIntegral, EqualCostsGiveAnIntegralVertex) {
  const MetricInstance inst = SplitClientFacilities(OnLine({0, -1, 1}));
  const Locations d{{0}, {1}};
  const StructuredLp slp =
      BuildStructuredLp(inst, d, {{0, 1}}, {{0, 1}}, {-1}, Ranges(1, {{0, 1}}));
  const HalfIntegralSolution sol = SolveHalfIntegral(slp);
  // Vertices of {y0 + y1 = 1, 0 <= y <= 1} are (1,0) and (0,1).
  EXPECT_TRUE((sol.y == std::vector<double>{1.0, 0.0}) ||
              (sol.y == std::vector<double>{0.0, 1.0}));
  EXPECT_DOUBLE_EQ(sol.objective, 1.0);
  const std::optional<double> best = testing::EnumerateVertices(slp.lp, 1e-9);
  ASSERT_TRUE(best.has_value());
  EXPECT_NEAR(sol.objective, *best + slp.constant_term, 1e-12);
}

TEST(SolveHalfIntegral, InfeasibleProgramThrows) {
  const MetricInstance inst = OnLine({0, 1});
  const Locations d{{0}, {1}};
  // Ball needs mass 1 but the group range allows none.
  const StructuredLp slp =
      BuildStructuredLp(inst, d, {{0, 1}}, {{0, 1}}, {-1}, Ranges(1, {{0, 0}}));
  try {
    SolveHalfIntegral(slp);
    FAIL() << "expected an error";
  } catch (const FairRangeError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kInfeasible);
  }
}

TEST(SolveHalfIntegral, RandomPipelineProgramsAreHalfIntegral) {
  int solved = 0;
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    const SolveReport r = RandomReport(seed, 10);
    const HalfIntegralSolution sol = SolveHalfIntegral(r.structured_lp);
    ++solved;
    EXPECT_LE(sol.max_deviation, 1e-6) << "seed " << seed;
    for (double v : sol.y) EXPECT_TRUE(IsHalfInteger(v)) << "seed " << seed << " y " << v;
    EXPECT_EQ(r.structured_lp.lp.MaxViolation(sol.y), 0.0) << "seed " << seed;
    // The scaled vertex is an optimum of the unscaled program.
    const LpResult plain = SolveVertex(r.structured_lp.lp);
    ASSERT_EQ(plain.status, LpStatus::kOptimal);
    const double lp_opt = plain.objective + r.structured_lp.constant_term;
    EXPECT_NEAR(sol.objective, lp_opt, 1e-6 * std::max(1.0, std::abs(lp_opt)))
        << "seed " << seed;
  }
  EXPECT_EQ(solved, 150);
}

// Points 0 (v0), 1 (a), 10 (v1), 11 (b), 12 (c); survivors at 0 and 10.
class AssignmentTest : public ::testing::Test {
 protected:
  MetricInstance inst = OnLine({0, 1, 10, 11, 12});
  Locations survivors{{0, 2}, {1, 1}};
  std::vector<std::vector<int>> core{{1}, {3, 4}};
  std::vector<std::vector<int>> superballs{{1}, {3, 4}};
  std::vector<int> nearest{1, 0};
};

TEST_F(AssignmentTest, FullSuperBallNeedsNoFill) {
  const std::vector<double> y{0, 1, 0, 0.5, 0.5};
  const Matrix x = HalfIntegralAssignment(inst, survivors, y, core, superballs, nearest);
  EXPECT_EQ(x(0, 1), 1.0);
  EXPECT_EQ(x(1, 3), 0.5);
  EXPECT_EQ(x(1, 4), 0.5);
  for (int v = 0; v < 2; ++v) {
    double row = 0;
    for (int u = 0; u < 5; ++u) row += x(v, u);
    EXPECT_EQ(row, 1.0);
  }
}

TEST_F(AssignmentTest, HalfSuperBallFillsFromNeighbourBall) {
  const std::vector<double> y{0, 0.5, 0, 0.5, 0.5};
  const Matrix x = HalfIntegralAssignment(inst, survivors, y, core, superballs, nearest);
  EXPECT_EQ(x(0, 1), 0.5);
  EXPECT_EQ(x(0, 3), 0.5);  // b is nearer to v0 than c
  EXPECT_EQ(x(0, 4), 0.0);
}

TEST_F(AssignmentTest, ExhaustedNeighbourBallThrows) {
  const std::vector<double> y{0, 0.5, 0, 0.0, 0.0};
  try {
    HalfIntegralAssignment(inst, survivors, y, core, superballs, nearest);
    FAIL() << "expected an error";
  } catch (const FairRangeError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kInternal);
  }
}

TEST(HalfIntegralAssignment, RandomCertificateAndFeasibility) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const SolveReport r = RandomReport(seed);
    const MetricInstance inst = RandomInstance(seed);
    const Locations& dp = r.sparse.survivors;
    const Matrix& x = r.x_tilde;
    double lhs = 0.0;
    for (int v = 0; v < dp.size(); ++v) {
      double row = 0.0;
      for (int u = 0; u < inst.num_facilities(); ++u) {
        EXPECT_TRUE(IsHalfInteger(x(v, u))) << "seed " << seed;
        EXPECT_LE(x(v, u), r.half.y[u]) << "seed " << seed;
        row += x(v, u);
        lhs += static_cast<double>(dp.weights[v]) * x(v, u) *
               std::pow(inst.to_facility(dp.points[v], u), inst.p);
      }
      EXPECT_EQ(row, 1.0) << "seed " << seed;
    }
    const double rhs = std::pow(1.5, inst.p) * r.half.objective;
    EXPECT_LE(lhs, rhs + 1e-6 * std::max(1.0, rhs)) << "seed " << seed;
  }
}

TEST(PartitionFacilities, DistinctIntegralFacilitiesAllSurvive) {
  const MetricInstance inst = OnLine({0, 1, 5, 6});
  const Locations survivors{{0, 2}, {1, 1}};
  Matrix x(2, 4);
  x(0, 1) = 1.0;
  x(1, 3) = 1.0;
  const FacilityPartition part = PartitionFacilities(inst, survivors, x);
  EXPECT_EQ(part.L(), 2);
  EXPECT_EQ(part.sets[0], (std::vector<int>{1}));
  EXPECT_EQ(part.sets[1], (std::vector<int>{3}));
  EXPECT_EQ(part.r_values, (std::vector<double>{1.0, 1.0}));
  EXPECT_TRUE(CheckPartition(part).empty());
}

TEST(PartitionFacilities, SharedHalfFacilityKeepsCheaperLocation) {
  // v0 at 0 uses 1 and 3, v1 at 6 uses 3 and 8.
  const MetricInstance inst = OnLine({0, 1, 3, 6, 8}, {}, 1.0);
  const Locations survivors{{0, 3}, {1, 1}};
  Matrix x(2, 5);
  x(0, 1) = x(0, 2) = 0.5;
  x(1, 2) = x(1, 4) = 0.5;
  const FacilityPartition part = PartitionFacilities(inst, survivors, x);
  // R_0 = (1 + 3)/2 = 2, R_1 = (3 + 2)/2 = 2.5.
  EXPECT_DOUBLE_EQ(part.r_values[0], 2.0);
  EXPECT_DOUBLE_EQ(part.r_values[1], 2.5);
  EXPECT_EQ(part.surviving, (std::vector<int>{0}));
  EXPECT_EQ(part.remover, (std::vector<int>{-1, 0}));
  EXPECT_EQ(part.sets[1], (std::vector<int>{4, 2}));  // primary first
  EXPECT_TRUE(CheckPartition(part).empty());
}

TEST(PartitionFacilities, EqualRadiiFavourLowestIndex) {
  const MetricInstance inst = OnLine({0, 1, 2});
  const Locations survivors{{0, 2}, {1, 1}};
  Matrix x(2, 3);
  x(0, 1) = 1.0;
  x(1, 1) = 1.0;
  const FacilityPartition part = PartitionFacilities(inst, survivors, x);
  EXPECT_EQ(part.surviving, (std::vector<int>{0}));
  EXPECT_EQ(part.remover[1], 0);
}

TEST(CheckPartition, FlagsOverlapAndBadRemover) {
  FacilityPartition part;
  part.surviving = {0, 1};
  part.sets = {{0}, {0, 1}, {5}};
  part.r_values = {1, 2, 0.5};
  part.remover = {-1, -1, 0};
  const std::vector<std::string> problems = CheckPartition(part);
  EXPECT_EQ(problems.size(), 2u);
}

TEST(PartitionFacilities, RandomSelectedSetsAreDisjoint) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const SolveReport r = RandomReport(seed);
    const FacilityPartition& part = r.partition;
    std::set<int> seen;
    std::size_t total = 0;
    for (int i : part.surviving) {
      total += part.sets[i].size();
      seen.insert(part.sets[i].begin(), part.sets[i].end());
    }
    EXPECT_EQ(seen.size(), total) << "seed " << seed;
    for (int j = 0; j < static_cast<int>(part.sets.size()); ++j) {
      const int i = part.remover[j];
      if (i < 0) continue;
      EXPECT_LE(part.r_values[i], part.r_values[j]) << "seed " << seed;
    }
    EXPECT_LE(part.L(), r.network.k) << "seed " << seed;
  }
}

FacilityPartition Singletons(std::vector<int> facilities) {
  FacilityPartition part;
  for (int i = 0; i < static_cast<int>(facilities.size()); ++i) {
    part.surviving.push_back(i);
    part.sets.push_back({facilities[i]});
    part.r_values.push_back(0.0);
    part.remover.push_back(-1);
  }
  return part;
}

const FlowArc& ArcBetween(const FlowNetwork& net, int from, int to) {
  for (const FlowArc& a : net.arcs)
    if (a.from == from && a.to == to) return a;
  throw std::runtime_error("no such arc");
}

TEST(BuildFlowNetwork, FullSelectionLeavesNoSpare) {
  const MetricInstance inst = FromMatrix({{0, 1, 2}, {1, 0, 1}, {2, 1, 0}}, {0, 1, 1});
  const FlowNetwork net =
      BuildFlowNetwork(inst, Singletons({0, 2}), Ranges(2, {{1, 1}, {1, 1}}));
  EXPECT_EQ(ArcBetween(net, net.source, net.spare).upper, 0);
}

TEST(BuildFlowNetwork, SingleGroupRange) {
  const MetricInstance inst = OnLine({0, 1, 2});
  const FlowNetwork net = BuildFlowNetwork(inst, Singletons({1}), Ranges(2, {{0, 2}}));
  const FlowArc& g = ArcBetween(net, net.group_nodes[0], net.t1);
  EXPECT_EQ(g.lower, 0);
  EXPECT_EQ(g.upper, 2);
  const FlowArc& t = ArcBetween(net, net.t1, net.t2);
  EXPECT_EQ(t.lower, 2);
  EXPECT_EQ(t.upper, 2);
}

TEST(BuildFlowNetwork, TwoSetsTwoGroupsCounts) {
  const MetricInstance inst = OnLine({0, 1, 2, 3}, {0, 0, 1, 1});
  FacilityPartition part;
  part.surviving = {0, 1};
  part.sets = {{0, 1}, {2}};
  part.r_values = {0, 0};
  part.remover = {-1, -1};
  const FlowNetwork net = BuildFlowNetwork(inst, part, Ranges(3, {{1, 2}, {1, 2}}));
  // s, S_0, S_1, S_bar, 4 facilities, 2 groups, t1, t2.
  EXPECT_EQ(net.num_nodes(), 12);
  // 2 s->S_i, 1 s->S_bar, 3 S_i->u, 4 S_bar->u, 4 u->g, 2 g->t1, 1 t1->t2.
  EXPECT_EQ(net.arcs.size(), 17u);
  EXPECT_EQ(ArcBetween(net, net.source, net.spare).upper, 1);
  EXPECT_EQ(ArcBetween(net, net.group_nodes[1], net.t1).lower, 1);
}

TEST(BuildFlowNetwork, TooManySetsThrows) {
  const MetricInstance inst = OnLine({0, 1, 2});
  try {
    BuildFlowNetwork(inst, Singletons({0, 1, 2}), Ranges(2, {{0, 2}}));
    FAIL() << "expected an error";
  } catch (const FairRangeError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kInternal);
  }
}

TEST(SolveFlowLowerBounds, ForcedSingletons) {
  const MetricInstance inst = OnLine({0, 1, 2, 3}, {0, 1, 0, 1});
  FlowNetwork net =
      BuildFlowNetwork(inst, Singletons({1, 2}), Ranges(2, {{1, 1}, {1, 1}}));
  ASSERT_TRUE(SolveFlowLowerBounds(net));
  EXPECT_TRUE(CheckFlow(net).empty());
  EXPECT_EQ(ExtractCenters(net), (std::vector<int>{1, 2}));
  for (int s : net.set_nodes) EXPECT_EQ(ArcBetween(net, net.source, s).flow, 1);
}

TEST(SolveFlowLowerBounds, UnreachableLowerBound) {
  // Group 1 needs both centers but the sets sit in group 0 and fill k.
  const MetricInstance inst = OnLine({0, 1, 2, 3}, {0, 0, 1, 1});
  FlowNetwork net =
      BuildFlowNetwork(inst, Singletons({0, 1}), Ranges(2, {{0, 2}, {2, 2}}));
  EXPECT_FALSE(SolveFlowLowerBounds(net));
  for (const FlowArc& a : net.arcs) EXPECT_EQ(a.flow, 0);
}

TEST(SolveFlowLowerBounds, SpareCapacityMeetsLowerBounds) {
  const MetricInstance inst = OnLine({0, 1, 2, 3, 4}, {0, 0, 1, 1, 1});
  FlowNetwork net =
      BuildFlowNetwork(inst, Singletons({0}), Ranges(3, {{1, 1}, {2, 2}}));
  ASSERT_TRUE(SolveFlowLowerBounds(net));
  EXPECT_TRUE(CheckFlow(net).empty());
  const std::vector<int> c = ExtractCenters(net);
  ASSERT_EQ(c.size(), 3u);
  EXPECT_EQ(c[0], 0);
  EXPECT_EQ(std::count_if(c.begin(), c.end(), [](int u) { return u >= 2; }), 2);
}

TEST(CheckFlow, FlagsTamperedFlow) {
  const MetricInstance inst = OnLine({0, 1, 2, 3}, {0, 1, 0, 1});
  FlowNetwork net =
      BuildFlowNetwork(inst, Singletons({1, 2}), Ranges(2, {{1, 1}, {1, 1}}));
  ASSERT_TRUE(SolveFlowLowerBounds(net));
  net.arcs.front().flow = 0;
  EXPECT_FALSE(CheckFlow(net).empty());
  net.arcs.front().flow = 2;
  EXPECT_FALSE(CheckFlow(net).empty());
}

TEST(DumpFlowNetwork, ListsNodesAndArcs) {
  const MetricInstance inst = OnLine({0, 1});
  const FlowNetwork net = BuildFlowNetwork(inst, Singletons({0}), Ranges(1, {{0, 1}}));
  const std::string dump = DumpFlowNetwork(net);
  EXPECT_NE(dump.find("nodes 8"), std::string::npos);
  EXPECT_NE(dump.find("t1 t2 [1,1] 0"), std::string::npos);
}

TEST(FlowRounding, RandomNetworksCarryKAndHitEverySet) {
  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    const SolveReport r = RandomReport(seed);
    EXPECT_TRUE(CheckFlow(r.network).empty()) << "seed " << seed;
    const std::vector<int>& c = r.solution.centers;
    EXPECT_EQ(static_cast<int>(c.size()), r.network.k) << "seed " << seed;
    for (int i : r.partition.surviving) {
      const std::vector<int>& s = r.partition.sets[i];
      EXPECT_TRUE(std::any_of(s.begin(), s.end(), [&](int u) {
        return std::binary_search(c.begin(), c.end(), u);
      })) << "seed " << seed << " set " << i;
    }
  }
}

// Any center set meeting every selected S_i stays within (9/2)^p of the
// half-integral optimum on (D', w').
TEST(PartitionQuality, RandomHittingSets) {
  int stated_misses = 0;
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const SolveReport r = RandomReport(seed);
    const MetricInstance inst = RandomInstance(seed);
    const Locations& dp = r.sparse.survivors;
    const double bound = std::pow(4.5, inst.p) * r.half.objective;
    std::mt19937_64 rng(seed);
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<int> c;
      for (int i : r.partition.surviving) {
        const std::vector<int>& s = r.partition.sets[i];
        c.push_back(s[std::uniform_int_distribution<std::size_t>(0, s.size() - 1)(rng)]);
      }
      std::sort(c.begin(), c.end());
      double cost = 0.0;
      for (int v = 0; v < dp.size(); ++v) {
        double best = INFINITY;
        for (int u : c) best = std::min(best, std::pow(inst.to_facility(dp.points[v], u), inst.p));
        cost += static_cast<double>(dp.weights[v]) * best;
      }
      EXPECT_LE(cost, bound * (1 + 1e-6) + 1e-9) << "seed " << seed;
      for (const PartitionBound& b : PartitionBounds(inst, dp, r.partition, c)) {
        EXPECT_LE(b.distance_p, b.bound * (1 + 1e-9) + 1e-12) << "seed " << seed;
        if (b.distance_p > b.stated * (1 + 1e-9) + 1e-12) ++stated_misses;
      }
    }
  }
  RecordProperty("stated_partition_misses", stated_misses);
}

TEST(PartitionBounds, UnhitSelectedSetThrows) {
  const MetricInstance inst = OnLine({0, 1, 2});
  const Locations survivors{{0}, {1}};
  const FacilityPartition part = Singletons({1});
  const std::vector<int> centers{2};
  try {
    PartitionBounds(inst, survivors, part, centers);
    FAIL() << "expected an error";
  } catch (const FairRangeError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kInvalidArgument);
  }
}

}  // namespace
}  // namespace fair_range

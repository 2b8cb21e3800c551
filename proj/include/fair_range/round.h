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

#ifndef FAIR_RANGE_ROUND_H_
#define FAIR_RANGE_ROUND_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "fair_range/instance.h"
#include "fair_range/lp_builders.h"
#include "fair_range/matrix.h"
#include "fair_range/simplex.h"

namespace fair_range {

struct HalfIntegralSolution {
  std::vector<double> y;  // every entry 0, 0.5 or 1
  double objective = 0.0;  // including the constant term
  // Largest distance of a scaled vertex coordinate from an integer.
  double max_deviation = 0.0;
};

// Solves the scaled program (z = 2y) to a vertex, snaps z to integers and
// returns y = z / 2. Throws kInfeasible on an infeasible program and
// kInternal ("half-integrality violation") when a vertex coordinate is
// farther than `tolerance` from an integer.
HalfIntegralSolution SolveHalfIntegral(const StructuredLp& slp,
                                       const SimplexOptions& options = {},
                                       double tolerance = 1e-6);

// x(v,u) = y(u) on P(v), then the rest of the unit filled from the core
// ball of the nearest survivor, nearest facilities first. Throws kInternal
// when that ball runs out.
Matrix HalfIntegralAssignment(const MetricInstance& inst,
                              const Locations& survivors,
                              const std::vector<double>& y,
                              const std::vector<std::vector<int>>& core_balls,
                              const std::vector<std::vector<int>>& superballs,
                              const std::vector<int>& nearest);

struct FacilityPartition {
  // Selected locations in selection order (nondecreasing R, ties by index).
  std::vector<int> surviving;
  // Per location: S_i (one or two facilities, primary first), R_i and, for
  // locations that were not selected, the selected location that removed
  // them (-1 for selected ones).
  std::vector<std::vector<int>> sets;
  std::vector<double> r_values;
  std::vector<int> remover;

  int L() const { return static_cast<int>(surviving.size()); }
};

// S_i holds the facilities serving location i under `x_tilde`; R_i is the
// assignment cost of a unit of its demand. Greedy selection by R_i, each
// selection removing the locations whose sets meet its own.
FacilityPartition PartitionFacilities(const MetricInstance& inst,
                                      const Locations& survivors,
                                      const Matrix& x_tilde);

std::vector<std::string> CheckPartition(const FacilityPartition& part);

struct PartitionBound {
  int location = 0;
  double distance_p = 0.0;  // d(v_i, u)^p for the open facility u used
  double bound = 0.0;       // 2 R_i, or 2 * 3^(p-1) (R_i + 2 R_j) if removed
  double stated = 0.0;      // R_i, or 3^(p-1) (R_i + 2 R_j) if removed
};

// For each location, the distance to the nearest center of its own set (if
// selected) or of its remover's set. Throws kInvalidArgument when a
// selected set is not hit.
std::vector<PartitionBound> PartitionBounds(const MetricInstance& inst,
                                            const Locations& survivors,
                                            const FacilityPartition& part,
                                            std::span<const int> centers);

struct FlowArc {
  int from = 0;
  int to = 0;
  std::int64_t lower = 0;
  std::int64_t upper = 0;
  std::int64_t flow = 0;
};

// Layered network: source, one node per selected set, the spare node,
// facilities, groups, t1, t2.
struct FlowNetwork {
  int k = 0;
  int source = 0;
  std::vector<int> set_nodes;
  int spare = 0;
  std::vector<int> facility_nodes;
  std::vector<int> group_nodes;
  int t1 = 0;
  int t2 = 0;
  std::vector<FlowArc> arcs;
  std::vector<std::string> node_names;

  int num_nodes() const { return static_cast<int>(node_names.size()); }
};

// Throws kInternal when L > k.
FlowNetwork BuildFlowNetwork(const MetricInstance& inst,
                             const FacilityPartition& part,
                             const RangeConstraints& rc);

// Integral flow meeting every lower and upper bound, via a t2 -> source
// arc fixed at k and the super source / super sink reduction. Returns false
// (and leaves flows zero) when none exists.
bool SolveFlowLowerBounds(FlowNetwork& net);

// Conservation at every node other than source and t2, bounds on every
// arc, and k units out of the source.
std::vector<std::string> CheckFlow(const FlowNetwork& net);

// Facilities receiving a unit of flow, as sorted facility indices.
std::vector<int> ExtractCenters(const FlowNetwork& net);

std::string DumpFlowNetwork(const FlowNetwork& net);

}  // namespace fair_range

#endif  // FAIR_RANGE_ROUND_H_

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

#ifndef FAIR_RANGE_IO_H_
#define FAIR_RANGE_IO_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fair_range/instance.h"
#include "fair_range/pipeline.h"

namespace fair_range {

inline constexpr int kFormatVersion = 1;

struct PointRecord {
  std::string id;
  std::vector<double> coordinates;  // empty when distances are explicit
  bool operator==(const PointRecord&) const = default;
};

struct FacilityRecord {
  std::string id;
  int group = 1;  // 1-based
  bool operator==(const FacilityRecord&) const = default;
};

struct ClientRecord {
  std::string id;
  std::int64_t demand = 1;
  bool operator==(const ClientRecord&) const = default;
};

// JSON instance file. Either every point has coordinates or the document
// carries a distance matrix, given in full ("distances") or as a lower
// triangle ("distances_lower", row i listing d(i,0..i-1) with or without
// the trailing zero). Parsing normalizes to the full matrix.
struct InstanceDocument {
  int format_version = kFormatVersion;
  std::vector<PointRecord> points;
  std::optional<std::vector<std::vector<double>>> distances;
  std::vector<FacilityRecord> facilities;
  std::vector<ClientRecord> clients;
  double p = 1.0;
  int k = 1;
  std::vector<GroupRange> ranges;
  bool operator==(const InstanceDocument&) const = default;
};

// Throws kInvalidArgument on malformed input.
InstanceDocument ParseInstanceDocument(const std::string& text);
std::string SerializeInstanceDocument(const InstanceDocument& doc);

InstanceDocument MakeInstanceDocument(const MetricInstance& inst,
                                      const RangeConstraints& rc);

struct LoadedInstance {
  MetricInstance instance;
  RangeConstraints ranges;
};
// Resolves ids and builds the distance matrix. Throws kInvalidArgument for
// unknown or duplicate ids and for group labels outside 1..|ranges|.
LoadedInstance ToInstance(const InstanceDocument& doc);

std::string ReadTextFile(const std::string& path);
void WriteTextFile(const std::string& path, const std::string& text);

struct OracleSummary {
  OracleResult result;
  double ratio = 0.0;  // solver l_p cost over oracle l_p cost
};

// JSON report: centers (by id), group counts, costs per stage,
// certificates, invariant violations, warnings and timings.
std::string SerializeReport(const MetricInstance& inst,
                            const RangeConstraints& rc,
                            const SolveReport& report,
                            const std::optional<OracleSummary>& oracle);

}  // namespace fair_range

#endif  // FAIR_RANGE_IO_H_

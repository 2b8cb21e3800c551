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

#include "fair_range/io.h"

#include <cmath>
#include <fstream>
#include <sstream>
#include <unordered_map>

#include "fair_range/error.h"
#include "json.hpp"

namespace fair_range {

using Json = nlohmann::ordered_json;

namespace {

[[noreturn]] void Malformed(const std::string& what) {
  throw FairRangeError(ErrorKind::kInvalidArgument, "instance_document", what);
}

const Json& Field(const Json& obj, const char* name) {
  if (!obj.is_object() || !obj.contains(name)) {
    Malformed(std::string("missing field '") + name + "'");
  }
  return obj.at(name);
}

std::vector<std::vector<double>> ReadMatrix(const Json& j) {
  return j.get<std::vector<std::vector<double>>>();
}

std::vector<std::vector<double>> FromLowerTriangle(
    const std::vector<std::vector<double>>& rows) {
  const int n = static_cast<int>(rows.size());
  const bool with_diagonal = n > 0 && rows[0].size() == 1;
  std::vector<std::vector<double>> full(n, std::vector<double>(n, 0.0));
  for (int i = 0; i < n; ++i) {
    const std::size_t expected = with_diagonal ? i + 1 : i;
    if (rows[i].size() != expected) Malformed("lower triangle row " + std::to_string(i));
    for (int j = 0; j < i; ++j) {
      full[i][j] = rows[i][j];
      full[j][i] = rows[i][j];
    }
    if (with_diagonal) full[i][i] = rows[i][i];
  }
  return full;
}

}  // namespace

InstanceDocument ParseInstanceDocument(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    Malformed(std::string("not valid JSON: ") + e.what());
  }
  InstanceDocument doc;
  try {
    doc.format_version = Field(j, "format_version").get<int>();
    if (doc.format_version != kFormatVersion) Malformed("unsupported format_version");
    for (const Json& pt : Field(j, "points")) {
      PointRecord rec;
      rec.id = Field(pt, "id").get<std::string>();
      if (pt.contains("coordinates"))
        rec.coordinates = pt.at("coordinates").get<std::vector<double>>();
      doc.points.push_back(std::move(rec));
    }
    const bool full = j.contains("distances");
    const bool lower = j.contains("distances_lower");
    if (full && lower) Malformed("give either distances or distances_lower");
    if (full) doc.distances = ReadMatrix(j.at("distances"));
    if (lower) doc.distances = FromLowerTriangle(ReadMatrix(j.at("distances_lower")));
    for (const Json& f : Field(j, "facilities"))
      doc.facilities.push_back({Field(f, "id").get<std::string>(),
                                Field(f, "group").get<int>()});
    for (const Json& c : Field(j, "clients"))
      doc.clients.push_back({Field(c, "id").get<std::string>(),
                             Field(c, "demand").get<std::int64_t>()});
    doc.p = Field(j, "p").get<double>();
    doc.k = Field(j, "k").get<int>();
    for (const Json& r : Field(j, "ranges")) {
      if (!r.is_array() || r.size() != 2) Malformed("each range is [alpha, beta]");
      doc.ranges.push_back({r[0].get<int>(), r[1].get<int>()});
    }
  } catch (const Json::exception& e) {
    Malformed(e.what());
  }
  bool any_coords = false, all_coords = !doc.points.empty();
  for (const PointRecord& pt : doc.points) {
    any_coords |= !pt.coordinates.empty();
    all_coords &= !pt.coordinates.empty();
  }
  if (doc.distances && any_coords) Malformed("give coordinates or distances, not both");
  if (!doc.distances && !all_coords) Malformed("every point needs coordinates");
  return doc;
}

std::string SerializeInstanceDocument(const InstanceDocument& doc) {
  Json j;
  j["format_version"] = doc.format_version;
  Json points = Json::array();
  for (const PointRecord& pt : doc.points) {
    Json rec;
    rec["id"] = pt.id;
    if (!pt.coordinates.empty()) rec["coordinates"] = pt.coordinates;
    points.push_back(std::move(rec));
  }
  j["points"] = std::move(points);
  if (doc.distances) j["distances"] = *doc.distances;
  Json facilities = Json::array();
  for (const FacilityRecord& f : doc.facilities)
    facilities.push_back({{"id", f.id}, {"group", f.group}});
  j["facilities"] = std::move(facilities);
  Json clients = Json::array();
  for (const ClientRecord& c : doc.clients)
    clients.push_back({{"id", c.id}, {"demand", c.demand}});
  j["clients"] = std::move(clients);
  j["p"] = doc.p;
  j["k"] = doc.k;
  Json ranges = Json::array();
  for (const GroupRange& r : doc.ranges) ranges.push_back({r.lower, r.upper});
  j["ranges"] = std::move(ranges);
  return j.dump(2) + "\n";
}

InstanceDocument MakeInstanceDocument(const MetricInstance& inst,
                                      const RangeConstraints& rc) {
  InstanceDocument doc;
  for (int i = 0; i < inst.num_points(); ++i) {
    PointRecord rec{inst.point_ids[i], {}};
    if (!inst.coordinates.empty()) rec.coordinates = inst.coordinates[i];
    doc.points.push_back(std::move(rec));
  }
  if (inst.coordinates.empty()) {
    std::vector<std::vector<double>> m(inst.num_points());
    for (int i = 0; i < inst.num_points(); ++i) {
      auto row = inst.dist.row(i);
      m[i].assign(row.begin(), row.end());
    }
    doc.distances = std::move(m);
  }
  for (int f = 0; f < inst.num_facilities(); ++f)
    doc.facilities.push_back({inst.point_ids[inst.facilities[f]],
                              inst.facility_group[f] + 1});
  for (int c = 0; c < inst.num_clients(); ++c)
    doc.clients.push_back({inst.point_ids[inst.clients[c]], inst.demand[c]});
  doc.p = inst.p;
  doc.k = rc.k;
  doc.ranges = rc.ranges;
  return doc;
}

LoadedInstance ToInstance(const InstanceDocument& doc) {
  LoadedInstance out;
  MetricInstance& inst = out.instance;
  std::unordered_map<std::string, int> index;
  for (const PointRecord& pt : doc.points) {
    if (!index.emplace(pt.id, inst.num_points()).second)
      Malformed("duplicate point id '" + pt.id + "'");
    inst.point_ids.push_back(pt.id);
  }
  const int n = inst.num_points();
  if (doc.distances) {
    const auto& m = *doc.distances;
    if (static_cast<int>(m.size()) != n) Malformed("distance matrix has wrong size");
    inst.dist = Matrix(n, n);
    for (int i = 0; i < n; ++i) {
      if (static_cast<int>(m[i].size()) != n) Malformed("distance matrix is not square");
      for (int j = 0; j < n; ++j) inst.dist(i, j) = m[i][j];
    }
  } else {
    for (const PointRecord& pt : doc.points) inst.coordinates.push_back(pt.coordinates);
    const std::size_t dim = inst.coordinates.empty() ? 0 : inst.coordinates[0].size();
    for (const auto& c : inst.coordinates)
      if (c.size() != dim) Malformed("points have different dimensions");
    inst.dist = EuclideanDistances(inst.coordinates);
  }
  const int groups = static_cast<int>(doc.ranges.size());
  if (groups < 1) Malformed("at least one range is required");
  inst.num_groups = groups;
  auto lookup = [&](const std::string& id) {
    auto it = index.find(id);
    if (it == index.end()) Malformed("unknown point id '" + id + "'");
    return it->second;
  };
  for (const FacilityRecord& f : doc.facilities) {
    if (f.group < 1 || f.group > groups)
      Malformed("facility '" + f.id + "' has group outside 1.." + std::to_string(groups));
    inst.facilities.push_back(lookup(f.id));
    inst.facility_group.push_back(f.group - 1);
  }
  for (const ClientRecord& c : doc.clients) {
    inst.clients.push_back(lookup(c.id));
    inst.demand.push_back(c.demand);
  }
  inst.p = doc.p;
  out.ranges.k = doc.k;
  out.ranges.ranges = doc.ranges;
  return out;
}

std::string ReadTextFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw FairRangeError(ErrorKind::kInvalidArgument, "io",
                         "cannot open '" + path + "'");
  }
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void WriteTextFile(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
  if (!out) {
    throw FairRangeError(ErrorKind::kInvalidArgument, "io",
                         "cannot write '" + path + "'");
  }
}

std::string SerializeReport(const MetricInstance& inst,
                            const RangeConstraints& rc,
                            const SolveReport& report,
                            const std::optional<OracleSummary>& oracle) {
  auto ids = [&](const std::vector<int>& facilities) {
    std::vector<std::string> out;
    for (int f : facilities) out.push_back(inst.point_ids[inst.facilities[f]]);
    return out;
  };
  Json j;
  j["format_version"] = kFormatVersion;
  j["k"] = rc.k;
  j["p"] = inst.p;
  j["centers"] = ids(report.solution.centers);
  j["group_counts"] = report.solution.group_counts;
  j["cost_p"] = report.solution.cost_p;
  j["cost"] = report.solution.cost;
  j["reduced"] = report.reduced;
  j["num_locations"] = report.locations.size();
  j["num_survivors"] = report.sparse.survivors.size();
  j["num_partition_sets"] = report.partition.L();
  j["stage_costs"] = {
      {"opt_d", report.opt_d},         {"flp_x2", report.cost_x2},
      {"flp_xbar", report.cost_xbar},  {"stlp", report.cost_stlp},
      {"flp_xtilde", report.cost_xtilde}, {"dprime", report.cost_dprime},
      {"d", report.cost_d},            {"original", report.cost_original}};
  Json certs = Json::array();
  for (const Certificate& c : report.certificates) {
    certs.push_back(
        {{"name", c.name}, {"lhs", c.lhs}, {"bound", c.bound}, {"passed", c.passed}});
  }
  j["certificates"] = std::move(certs);
  j["violations"] = report.violations;
  j["warnings"] = report.warnings;
  Json timings = Json::object();
  for (const StageTiming& t : report.timings) timings[t.stage] = t.ms;
  j["timings_ms"] = std::move(timings);
  if (oracle) {
    j["oracle"] = {{"cost_p", oracle->result.cost_p},
                   {"cost", std::pow(oracle->result.cost_p, 1.0 / inst.p)},
                   {"centers", ids(oracle->result.centers)},
                   {"ratio", oracle->ratio}};
  }
  return j.dump(2) + "\n";
}

}  // namespace fair_range

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

#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "fair_range/cli.h"
#include "fair_range/error.h"
#include "fair_range/generators.h"
#include "fair_range/io.h"
#include "fair_range/study.h"
#include "json.hpp"
#include "test_util.h"

namespace fair_range {
namespace {

using Json = nlohmann::json;
namespace fs = std::filesystem;

const std::string kData = FAIR_RANGE_TEST_DATA;

struct CliRun {
  int code = 0;
  std::string out;
  std::string err;
};

CliRun Cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  CliRun r;
  r.code = RunCli(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

class TempDir : public ::testing::Test {
 protected:
  void SetUp() override {
    const auto* info = ::testing::UnitTest::GetInstance()->current_test_info();
    dir_ = fs::temp_directory_path() /
           (std::string("fair_range_") + info->test_suite_name() + "_" + info->name());
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string Path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

TEST(InstanceDocument, RoundTripCoordinates) {
  const InstanceDocument doc =
      ParseInstanceDocument(ReadTextFile(kData + "/two_clusters.json"));
  EXPECT_EQ(doc.points.size(), 6u);
  EXPECT_FALSE(doc.distances.has_value());
  EXPECT_EQ(ParseInstanceDocument(SerializeInstanceDocument(doc)), doc);
}

TEST(InstanceDocument, RoundTripGeneratedDocuments) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    RandomInstanceOptions options;
    options.num_points = 9;
    options.seed = seed;
    options.p = 1.0 + static_cast<double>(seed) / 3.0;
    const MetricInstance inst = GenerateRandomInstance(options);
    const InstanceDocument doc =
        MakeInstanceDocument(inst, testing::Ranges(2, {{0, 2}, {0, 2}}));
    const InstanceDocument back = ParseInstanceDocument(SerializeInstanceDocument(doc));
    EXPECT_EQ(back, doc) << "seed " << seed;
    const LoadedInstance loaded = ToInstance(back);
    for (int i = 0; i < inst.num_points(); ++i)
      for (int j = 0; j < inst.num_points(); ++j)
        EXPECT_EQ(loaded.instance.d(i, j), inst.d(i, j));
  }
  const MetricInstance fig = GenerateFigure1Instance(6, 24, 1.0, 2.0, 1.0);
  const InstanceDocument doc = MakeInstanceDocument(fig, testing::Ranges(6, {{2, 4}, {2, 4}}));
  ASSERT_TRUE(doc.distances.has_value());
  EXPECT_EQ(ParseInstanceDocument(SerializeInstanceDocument(doc)), doc);
}

TEST(InstanceDocument, LowerTriangle) {
  const InstanceDocument doc =
      ParseInstanceDocument(ReadTextFile(kData + "/triangle_lower.json"));
  ASSERT_TRUE(doc.distances.has_value());
  const std::vector<std::vector<double>> expected{{0, 3, 4}, {3, 0, 5}, {4, 5, 0}};
  EXPECT_EQ(*doc.distances, expected);
  const LoadedInstance loaded = ToInstance(doc);
  EXPECT_EQ(loaded.instance.facilities, (std::vector<int>{0, 2}));
  EXPECT_EQ(loaded.instance.facility_group, (std::vector<int>{0, 1}));
  EXPECT_EQ(loaded.instance.demand, (std::vector<std::int64_t>{2, 1, 1}));
  // Same matrix written with its diagonal.
  Json j = Json::parse(ReadTextFile(kData + "/triangle_lower.json"));
  j["distances_lower"] = {{0}, {3, 0}, {4, 5, 0}};
  EXPECT_EQ(*ParseInstanceDocument(j.dump()).distances, expected);
}

TEST(InstanceDocument, MalformedInputs) {
  const std::string base = ReadTextFile(kData + "/triangle_lower.json");
  auto expect_bad = [](const std::string& text) {
    try {
      ToInstance(ParseInstanceDocument(text));
      ADD_FAILURE() << "accepted: " << text;
    } catch (const FairRangeError& e) {
      EXPECT_EQ(e.kind(), ErrorKind::kInvalidArgument);
    }
  };
  expect_bad("{");
  Json j = Json::parse(base);
  j.erase("k");
  expect_bad(j.dump());
  j = Json::parse(base);
  j["distances"] = {{0, 3, 4}, {3, 0, 5}, {4, 5, 0}};
  expect_bad(j.dump());  // both matrix forms
  j = Json::parse(base);
  j["facilities"][0]["id"] = "w";
  expect_bad(j.dump());
  j = Json::parse(base);
  j["facilities"][0]["group"] = 3;
  expect_bad(j.dump());
  j = Json::parse(base);
  j["points"][1]["id"] = "x";
  expect_bad(j.dump());
  j = Json::parse(base);
  j["points"][0]["coordinates"] = {1.0};
  expect_bad(j.dump());  // coordinates alongside a matrix
  j = Json::parse(base);
  j["format_version"] = 2;
  expect_bad(j.dump());
}

TEST(Cli, SolveGoldenTriangle) {
  const CliRun r = Cli({"solve", kData + "/triangle_lower.json", "--oracle"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const Json report = Json::parse(r.out);
  EXPECT_EQ(report["centers"], Json::array({"x"}));
  EXPECT_EQ(report["cost_p"].get<double>(), 25.0);
  EXPECT_EQ(report["cost"].get<double>(), 5.0);
  EXPECT_EQ(report["group_counts"], Json::array({1, 0}));
  EXPECT_EQ(report["oracle"]["ratio"].get<double>(), 1.0);
  EXPECT_EQ(report["oracle"]["centers"], Json::array({"x"}));
}

TEST(Cli, SolveGoldenTwoClusters) {
  const CliRun r = Cli({"solve", kData + "/two_clusters.json", "--oracle"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const Json report = Json::parse(r.out);
  EXPECT_EQ(report["k"], 2);
  EXPECT_EQ(report["centers"], Json::array({"a0", "b0"}));
  EXPECT_DOUBLE_EQ(report["cost_p"].get<double>(), 4.0);
  EXPECT_EQ(report["group_counts"], Json::array({1, 1}));
  for (const Json& c : report["certificates"]) EXPECT_TRUE(c["passed"].get<bool>());
  EXPECT_GE(report["oracle"]["ratio"].get<double>(), 1.0 - 1e-9);
  EXPECT_TRUE(r.err.empty()) << r.err;
}

TEST(Cli, SolveOverridesAndInfeasibility) {
  CliRun r = Cli({"solve", kData + "/two_clusters.json", "--k", "3", "--ranges", "2:2,1:1"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(Json::parse(r.out)["group_counts"], Json::array({2, 1}));
  r = Cli({"solve", kData + "/two_clusters.json", "--ranges", "2:2,1:1"});
  EXPECT_EQ(r.code, kExitInfeasible);
  EXPECT_NE(r.err.find("infeasible"), std::string::npos);
  r = Cli({"solve", kData + "/two_clusters.json", "--ranges", "1:2"});
  EXPECT_EQ(r.code, kExitError);
  r = Cli({"solve", kData + "/two_clusters.json", "--ranges", "1-2,0:1"});
  EXPECT_EQ(r.code, kExitError);
}

TEST(Cli, SolveErrors) {
  CliRun r = Cli({"solve", kData + "/does_not_exist.json"});
  EXPECT_EQ(r.code, kExitError);
  EXPECT_NE(r.err.find("cannot open"), std::string::npos);
  r = Cli({"solve"});
  EXPECT_EQ(r.code, kExitError);
  r = Cli({"frobnicate"});
  EXPECT_EQ(r.code, kExitError);
  r = Cli({});
  EXPECT_EQ(r.code, kExitError);
}

TEST_F(TempDir, SolveRejectsNonMetricMatrix) {
  Json j = Json::parse(ReadTextFile(kData + "/triangle_lower.json"));
  j["distances_lower"] = {Json::array(), {1}, {10, 1}};
  WriteTextFile(Path("bad.json"), j.dump());
  const CliRun r = Cli({"solve", Path("bad.json")});
  EXPECT_EQ(r.code, kExitError);
  EXPECT_NE(r.err.find("triangle"), std::string::npos);
}

TEST_F(TempDir, SolveWritesReportFile) {
  const CliRun r = Cli({"solve", kData + "/two_clusters.json", "--out", Path("r.json")});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_TRUE(r.out.empty());
  const Json report = Json::parse(ReadTextFile(Path("r.json")));
  EXPECT_TRUE(report.contains("stage_costs"));
  EXPECT_TRUE(report.contains("timings_ms"));
  EXPECT_FALSE(report.contains("oracle"));
}

TEST(Cli, GenerateFigure1) {
  const CliRun r = Cli({"generate", "figure1"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const InstanceDocument doc = ParseInstanceDocument(r.out);
  EXPECT_EQ(doc.points.size(), 24u);
  EXPECT_EQ(doc.k, 6);
  EXPECT_EQ(doc.ranges, (std::vector<GroupRange>{{2, 4}, {2, 4}}));
  const LoadedInstance loaded = ToInstance(doc);
  EXPECT_EQ(loaded.instance.num_groups, 2);
  EXPECT_TRUE(ValidateInstance(loaded.instance).ok());
}

TEST(Cli, GenerateFigure1NeedsOptInForWideGap) {
  EXPECT_EQ(Cli({"generate", "figure1", "--M", "10", "--m", "1"}).code, kExitError);
  EXPECT_EQ(Cli({"generate", "figure1", "--M", "10", "--m", "1", "--allow-nonmetric"}).code,
            kExitOk);
  EXPECT_EQ(Cli({"generate", "figure1", "--k", "4"}).code, kExitError);
  EXPECT_EQ(Cli({"generate", "square"}).code, kExitError);
}

TEST(Cli, GenerateRandomIsReproducible) {
  const CliRun a = Cli({"generate", "random", "--seed", "7", "--n", "15", "--k", "3",
                     "--groups", "3"});
  const CliRun b = Cli({"generate", "random", "--seed", "7", "--n", "15", "--k", "3",
                     "--groups", "3"});
  ASSERT_EQ(a.code, kExitOk) << a.err;
  EXPECT_EQ(a.out, b.out);
  const CliRun c = Cli({"generate", "random", "--seed", "8", "--n", "15"});
  EXPECT_NE(a.out, c.out);
  const LoadedInstance loaded = ToInstance(ParseInstanceDocument(a.out));
  EXPECT_EQ(loaded.ranges.k, 3);
  EXPECT_TRUE(CheckRangeFeasibility(loaded.instance.GroupSizes(), loaded.ranges));
}

TEST_F(TempDir, GenerateThenSolve) {
  ASSERT_EQ(Cli({"generate", "random", "--seed", "3", "--n", "12", "--k", "3",
                 "--p", "2", "--out", Path("i.json")})
                .code,
            kExitOk);
  const CliRun r = Cli({"solve", Path("i.json"), "--oracle"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const Json report = Json::parse(r.out);
  EXPECT_EQ(report["centers"].size(), 3u);
  EXPECT_GE(report["oracle"]["ratio"].get<double>(), 1.0 - 1e-9);
}

std::vector<std::string> Lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

// Drops the trailing wall_ms field.
std::string WithoutTiming(const std::string& line) {
  return line.substr(0, line.rfind(','));
}

TEST(Cli, BenchGrid) {
  const std::vector<std::string> args{"bench", "--n", "7,8", "--k", "2",
                                      "--groups", "2", "--p", "1,2", "--seeds", "5"};
  const CliRun a = Cli(args);
  ASSERT_EQ(a.code, kExitOk) << a.err;
  const std::vector<std::string> lines = Lines(a.out);
  ASSERT_EQ(lines.size(), 21u);
  EXPECT_EQ(lines[0], kStudyCsvHeader);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    std::vector<std::string> fields;
    std::istringstream in(lines[i]);
    for (std::string f; std::getline(in, f, ',');) fields.push_back(f);
    ASSERT_EQ(fields.size(), 10u) << lines[i];
    EXPECT_GE(std::stod(fields[7]), 1.0 - 1e-9) << lines[i];
  }
  const std::vector<std::string> again = Lines(Cli(args).out);
  ASSERT_EQ(again.size(), lines.size());
  for (std::size_t i = 0; i < lines.size(); ++i)
    EXPECT_EQ(WithoutTiming(again[i]), WithoutTiming(lines[i]));
}

TEST(Cli, BenchOverBudget) {
  const CliRun r = Cli({"bench", "--n", "200", "--k", "10", "--seeds", "1"});
  EXPECT_EQ(r.code, kExitError);
  EXPECT_NE(r.err.find("budget"), std::string::npos);
}

}  // namespace
}  // namespace fair_range

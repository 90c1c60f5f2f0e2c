/* Copyright 2026 The hsaflow Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include <filesystem>
#include <fstream>
#include <sstream>

#include "gtest/gtest.h"
#include "hsaflow/cli/commands.h"
#include "json.hpp"

namespace hsaflow::cli {
namespace {

namespace fs = std::filesystem;

std::string Slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string Data(const char* name) {
  return std::string(HSAFLOW_DATA_DIR) + "/" + name;
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("hsaflow_cli_" +
            std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  RunConfig Config(const std::string& sub = "out") {
    RunConfig c;
    c.out_dir = (dir_ / sub).string();
    return c;
  }

  fs::path dir_;
};

TEST_F(CliTest, DemoGraphRuns) {
  std::ostringstream out, err;
  RunConfig config = Config();
  ASSERT_EQ(CmdRun(config, out, err), 0) << err.str();
  const std::string text = Slurp(fs::path(config.out_dir) / "report.txt");
  EXPECT_NE(text.find("device/kernel setup"), std::string::npos);
  EXPECT_NE(text.find("reconfiguration"), std::string::npos);
  EXPECT_NE(text.find("dispatch latency"), std::string::npos);
  EXPECT_TRUE(fs::exists(fs::path(config.out_dir) / "y.tensor"));
  auto doc = nlohmann::json::parse(Slurp(fs::path(config.out_dir) / "report.json"));
  EXPECT_EQ(doc["overhead_us"]["total"], 163735);
}

TEST_F(CliTest, MissingGraphFile) {
  std::ostringstream out, err;
  RunConfig config = Config();
  config.graph_path = (dir_ / "missing.json").string();
  EXPECT_EQ(CmdRun(config, out, err), 1);
  EXPECT_NE(err.str().find("file not found"), std::string::npos) << err.str();
}

TEST_F(CliTest, ThrashDemoReconfiguresEveryDispatch) {
  std::ostringstream out, err;
  RunConfig config = Config();
  config.graph_path = Data("thrash_graph.json");
  config.layer = metrics::Layer::kHsa;
  config.regions = 1;
  ASSERT_EQ(CmdRun(config, out, err), 0) << err.str();
  auto doc = nlohmann::json::parse(Slurp(fs::path(config.out_dir) / "report.json"));
  EXPECT_EQ(doc["counts"]["reconfig"], doc["counts"]["dispatch"]);
  EXPECT_EQ(doc["counts"]["dispatch"], 4);
  EXPECT_EQ(doc["layer"], "hsa");
}

TEST_F(CliTest, SameSeedGivesIdenticalReportBytes) {
  std::ostringstream out, err;
  RunConfig a = Config("a"), b = Config("b");
  a.graph_path = b.graph_path = Data("thrash_graph.json");
  a.seed = b.seed = 42;
  ASSERT_EQ(CmdRun(a, out, err), 0);
  ASSERT_EQ(CmdRun(b, out, err), 0);
  EXPECT_EQ(Slurp(fs::path(a.out_dir) / "report.json"),
            Slurp(fs::path(b.out_dir) / "report.json"));
  EXPECT_EQ(Slurp(fs::path(a.out_dir) / "y.tensor"),
            Slurp(fs::path(b.out_dir) / "y.tensor"));
}

TEST_F(CliTest, OverwriteWarns) {
  std::ostringstream out, err;
  RunConfig config = Config();
  ASSERT_EQ(CmdRun(config, out, err), 0);
  EXPECT_EQ(err.str().find("overwriting"), std::string::npos);
  ASSERT_EQ(CmdRun(config, out, err), 0);
  EXPECT_NE(err.str().find("warning: overwriting"), std::string::npos);
}

TEST_F(CliTest, InputFilesOverrideSynthesizedInputs) {
  fs::create_directories(dir_);
  const fs::path x = dir_ / "x.tensor";
  std::ofstream(x) << "f32 4x8:";
  for (int i = 0; i < 32; ++i) std::ofstream(x, std::ios::app) << " 0";
  std::ostringstream out, err;
  RunConfig config = Config();
  config.inputs = {"x=" + x.string()};
  ASSERT_EQ(CmdRun(config, out, err), 0) << err.str();
  const std::string y = Slurp(fs::path(config.out_dir) / "y.tensor");
  EXPECT_EQ(y.rfind("f32 4x8:", 0), 0u) << y;

  RunConfig bad = Config("bad");
  bad.inputs = {"x=" + (dir_ / "nope").string()};
  EXPECT_EQ(CmdRun(bad, out, err), 1);
  bad.inputs = {"novalue"};
  EXPECT_EQ(CmdRun(bad, out, err), 1);
}

TEST_F(CliTest, RegionOverrideMustBePositive) {
  std::ostringstream out, err;
  RunConfig config = Config();
  config.regions = 0;
  EXPECT_EQ(CmdRun(config, out, err), 1);
}

TEST_F(CliTest, BenchPrintsReferenceIncreases) {
  std::ostringstream out, err;
  RunConfig config = Config();
  config.reps = 5;
  ASSERT_EQ(CmdBench(config, out, err), 0) << err.str();
  for (const char* v : {"6.51x", "3.03x", "18.62x", "6.98x"}) {
    EXPECT_NE(out.str().find(v), std::string::npos) << v << "\n" << out.str();
  }
  EXPECT_TRUE(fs::exists(fs::path(config.out_dir) / "bench.json"));
}

TEST_F(CliTest, BenchIsDeterministicInRepetitions) {
  RunConfig one = Config(), many = Config();
  one.reps = 1;
  many.reps = 50;
  auto a = *RunBench(one), b = *RunBench(many);
  ASSERT_EQ(a.size(), b.size());
  for (size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i].increase, b[i].increase);
}

TEST_F(CliTest, EqualCostsGiveUnitIncrease) {
  fs::create_directories(dir_);
  const fs::path cal = dir_ / "cal.json";
  std::ofstream(cal) << R"({"cpu_cycles_per_element": {"FC_F32": 16,
      "FC_F32_BARRIER": 32, "CONV5x5_I16": 1, "CONV3x3x2_I16": 1}})";
  RunConfig config = Config();
  config.calibration_path = cal.string();
  config.reps = 3;
  for (const auto& fig : *RunBench(config)) {
    EXPECT_EQ(fig.increase, Rational(1)) << fig.role_id;
  }
}

TEST_F(CliTest, BenchRejectsZeroReps) {
  std::ostringstream out, err;
  RunConfig config = Config();
  config.reps = 0;
  EXPECT_EQ(CmdBench(config, out, err), 1);
}

}  // namespace
}  // namespace hsaflow::cli

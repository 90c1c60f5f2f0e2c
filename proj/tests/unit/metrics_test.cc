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

#include <random>

#include "gtest/gtest.h"
#include "hsaflow/common/errors.h"
#include "hsaflow/metrics/cost.h"
#include "hsaflow/metrics/efficiency.h"
#include "hsaflow/metrics/report_io.h"
#include "hsaflow/metrics/timeline.h"

namespace hsaflow::metrics {
namespace {

TEST(CostConstantsTest, DefaultsMatchReference) {
  CostConstants c;
  EXPECT_EQ(c.setup_us_tf, 156230u);
  EXPECT_EQ(c.setup_us_hsa, 39032u);
  EXPECT_EQ(c.reconfig_us, 7424u);
  EXPECT_EQ(c.dispatch_us_tf, 27u);
  EXPECT_EQ(c.dispatch_us_hsa, 10u);
  c.layer = Layer::kHsa;
  EXPECT_EQ(c.setup_us(), 39032u);
  EXPECT_EQ(c.dispatch_us(), 10u);
  EXPECT_EQ(ParseLayer("hsa"), Layer::kHsa);
  EXPECT_FALSE(ParseLayer("TF ").has_value());
}

TEST(TimelineTest, ChargeExamples) {
  TimelineReport r;
  ASSERT_TRUE(r.Charge(CostCategory::kSetup, 39032, "setup").ok());
  EXPECT_EQ(r.setup_us_total(), 39032u);
  EXPECT_TRUE(errors::Is(r.Charge(CostCategory::kSetup, 1, "again"),
                         "DoubleSetup"));
  ASSERT_TRUE(r.Charge(CostCategory::kReconfig, 7424, "fpga0:role1").ok());
  EXPECT_EQ(r.reconfig_us_total(), 7424u);
  EXPECT_EQ(r.count(CostCategory::kSetup), 1);
  EXPECT_EQ(TotalOverhead(r), 39032u + 7424u);
}

TEST(TimelineTest, ComputeDoesNotAdvanceOverheadClock) {
  TimelineReport r;
  ASSERT_TRUE(r.Charge(CostCategory::kDispatch, 10, "n").ok());
  ASSERT_TRUE(r.Charge(CostCategory::kCompute, 500, "n").ok());
  ASSERT_TRUE(r.Charge(CostCategory::kCompute, 20, "n").ok());
  EXPECT_EQ(r.now_us(), 10u);
  EXPECT_EQ(r.compute_cycles().at("n"), 520u);
  EXPECT_EQ(r.compute_cycles_total(), 520u);
  EXPECT_EQ(TotalOverhead(r), 10u);
}

TEST(TimelineTest, NoDispatchesMeansSetupOnly) {
  TimelineReport r;
  ASSERT_TRUE(r.Charge(CostCategory::kSetup, 156230, "setup").ok());
  EXPECT_EQ(TotalOverhead(r), 156230u);
}

// Property: totals equal the sums over the event list, for any sequence.
TEST(TimelineTest, OverheadAdditivity) {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    TimelineReport r;
    const int n = rng() % 50;
    for (int i = 0; i < n; ++i) {
      const auto cat = static_cast<CostCategory>(rng() % 4);
      const uint64_t amount = rng() % 100000;
      absl::Status st = r.Charge(cat, amount, "e" + std::to_string(i % 3));
      if (cat == CostCategory::kSetup && !st.ok()) {
        EXPECT_TRUE(errors::Is(st, "DoubleSetup"));
      }
    }
    uint64_t sums[4] = {0, 0, 0, 0};
    uint64_t clock = 0;
    for (const CostEvent& e : r.events()) {
      EXPECT_EQ(e.time_us, clock);
      sums[static_cast<int>(e.category)] += e.amount;
      if (e.category != CostCategory::kCompute) clock += e.amount;
    }
    EXPECT_EQ(r.setup_us_total(), sums[0]);
    EXPECT_EQ(r.dispatch_us_total(), sums[1]);
    EXPECT_EQ(r.reconfig_us_total(), sums[2]);
    EXPECT_EQ(r.compute_cycles_total(), sums[3]);
    EXPECT_EQ(TotalOverhead(r), sums[0] + sums[1] + sums[2]);
    EXPECT_LE(r.count(CostCategory::kSetup), 1);
  }
}

TEST(TimelineTest, SinceKeepsLaterEventsOnly) {
  TimelineReport r;
  ASSERT_TRUE(r.Charge(CostCategory::kSetup, 100, "s").ok());
  ASSERT_TRUE(r.Charge(CostCategory::kDispatch, 10, "a").ok());
  TimelineReport tail = r.Since(1);
  EXPECT_EQ(tail.events().size(), 1u);
  EXPECT_EQ(tail.setup_us_total(), 0u);
  EXPECT_EQ(tail.dispatch_us_total(), 10u);
  EXPECT_EQ(tail.events()[0].time_us, 100u);
}

TEST(EfficiencyTest, DefaultCalibrationReproducesReference) {
  // Default role rates: FC 16, FC+barrier 32, convolutions 1.
  Calibration cal = DefaultCalibration();
  EXPECT_EQ(cal.cpu_cycles_per_element.at(OpType::kFcF32) / Rational(16),
            Rational(651, 100));
  EXPECT_EQ(cal.cpu_cycles_per_element.at(OpType::kFcF32Barrier) / Rational(32),
            Rational(303, 100));
  EXPECT_EQ(cal.cpu_cycles_per_element.at(OpType::kConv5x5I16),
            Rational(1862, 100));
  EXPECT_EQ(cal.cpu_cycles_per_element.at(OpType::kConv3x3x2I16),
            Rational(698, 100));
}

TEST(EfficiencyTest, Examples) {
  EfficiencyFigure role3 = *Efficiency("role3", 5000, 100, 1862);
  EXPECT_EQ(role3.increase.ToFixed(2), "18.62");
  EfficiencyFigure role2 = *Efficiency("role2", 3200, 3200, 9696);
  EXPECT_EQ(role2.increase.ToFixed(2), "3.03");
  EXPECT_EQ(Efficiency("same", 10, 7, 7)->increase, Rational(1));
  EXPECT_EQ(role3.accel_op_per_cycle / role3.cpu_op_per_cycle, role3.increase);
}

TEST(EfficiencyTest, IncreaseIgnoresOpCountScale) {
  std::mt19937 rng(4);
  for (int i = 0; i < 200; ++i) {
    const int64_t ops = rng() % 100000 + 1, a = rng() % 100000 + 1,
                  c = rng() % 100000 + 1, k = rng() % 1000 + 1;
    EXPECT_EQ(Efficiency("r", ops, a, c)->increase,
              Efficiency("r", ops * k, a, c)->increase);
    EXPECT_EQ(Efficiency("r", ops, a, c)->increase, Rational(c, a));
  }
}

TEST(EfficiencyTest, RejectsZeroCycles) {
  EXPECT_TRUE(errors::Is(Efficiency("r", 10, 0, 5).status(), "ZeroCycles"));
  EXPECT_TRUE(errors::Is(Efficiency("r", 10, 5, 0).status(), "ZeroCycles"));
  EXPECT_FALSE(Efficiency("r", 0, 5, 5).ok());
}

TEST(CalibrationTest, ShippedFileEqualsDefault) {
  Calibration file =
      *LoadCalibration(std::string(HSAFLOW_DATA_DIR) + "/calibration.json");
  EXPECT_EQ(file.cpu_cycles_per_element,
            DefaultCalibration().cpu_cycles_per_element);
}

TEST(CalibrationTest, ParseErrors) {
  EXPECT_FALSE(ParseCalibration("{").ok());
  EXPECT_FALSE(
      ParseCalibration(R"({"cpu_cycles_per_element": {"FOO": 1}})").ok());
  EXPECT_FALSE(
      ParseCalibration(R"({"cpu_cycles_per_element": {"FC_F32": "x"}})").ok());
  auto ok = ParseCalibration(R"({"cpu_cycles_per_element": {"FC_F32": 3}})");
  ASSERT_TRUE(ok.ok()) << ok.status();
  EXPECT_EQ(ok->cpu_cycles_per_element.at(OpType::kFcF32), Rational(3));
}

TEST(ReportIoTest, TextHasTierRows) {
  TimelineReport r;
  ASSERT_TRUE(r.Charge(CostCategory::kSetup, 156230, "setup").ok());
  ASSERT_TRUE(r.Charge(CostCategory::kDispatch, 27, "fc").ok());
  ASSERT_TRUE(r.Charge(CostCategory::kReconfig, 7424, "fpga0:role1").ok());
  ASSERT_TRUE(r.Charge(CostCategory::kCompute, 512, "fc").ok());
  const std::string text = ReportToText(r, CostConstants{});
  EXPECT_NE(text.find("device/kernel setup"), std::string::npos);
  EXPECT_NE(text.find("reconfiguration"), std::string::npos);
  EXPECT_NE(text.find("dispatch latency"), std::string::npos);
  EXPECT_NE(text.find("163681"), std::string::npos);

  nlohmann::json doc = ReportToJson(r, CostConstants{});
  EXPECT_EQ(doc["overhead_us"]["total"], 163681);
  EXPECT_EQ(doc["counts"]["dispatch"], 1);
  EXPECT_EQ(doc["compute_cycles"]["fc"], 512);
  EXPECT_EQ(doc["layer"], "tf");
  EXPECT_EQ(doc.dump(), ReportToJson(r, CostConstants{}).dump());
}

TEST(ReportIoTest, EfficiencyTable) {
  std::vector<EfficiencyFigure> figs{*Efficiency("role1", 3300, 1600, 10416)};
  EXPECT_NE(EfficiencyToText(figs).find("6.51x"), std::string::npos);
  nlohmann::json doc = EfficiencyToJson(figs);
  ASSERT_TRUE(doc.is_array());
  EXPECT_EQ(doc[0]["role_id"], "role1");
}

}  // namespace
}  // namespace hsaflow::metrics

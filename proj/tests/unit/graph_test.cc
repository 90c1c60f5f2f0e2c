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

#include "gtest/gtest.h"
#include "hsaflow/common/errors.h"
#include "hsaflow/graph/executor.h"
#include "hsaflow/graph/graph.h"
#include "hsaflow/graph/placement.h"
#include "hsaflow/hsa/runtime.h"
#include "support/random_graph.h"

namespace hsaflow::graph {
namespace {

using metrics::CostCategory;

constexpr char kChain[] = R"({"nodes": [
  {"id": "x", "op": "INPUT", "attrs": {"dtype": "f32", "shape": [3, 4]}},
  {"id": "w", "op": "CONST", "attrs": {"fill": "identity", "dtype": "f32", "shape": [4, 4]}},
  {"id": "b", "op": "CONST", "attrs": {"value": "f32 4: 0 0 0 0"}},
  {"id": "fc", "op": "FC_F32", "inputs": ["x", "w", "b"], "device": "fpga"},
  {"id": "y", "op": "OUTPUT", "inputs": ["fc"]}]})";

std::unique_ptr<hsa::Runtime> MakeRuntime(hsa::RuntimeOptions options = {}) {
  auto rt = hsa::Runtime::Create(std::move(options));
  EXPECT_TRUE(rt.ok()) << rt.status();
  return *std::move(rt);
}

absl::StatusOr<RunResult> PlaceAndRun(const Graph& g, hsa::Runtime& rt,
                                      const std::map<std::string, Tensor>& in) {
  std::vector<hsa::Agent> agents = rt.EnumerateAgents();
  auto placement = Place(g, rt.registry(), agents);
  if (!placement.ok()) return placement.status();
  return graph::Run(g, *placement, rt, in);
}

TEST(ParseGraphTest, SimpleChain) {
  auto g = ParseGraph(R"({"nodes": [
      {"id": "x", "op": "INPUT"},
      {"id": "w", "op": "CONST", "attrs": {"fill": "identity", "dtype": "f32", "shape": [2, 2]}},
      {"id": "b", "op": "CONST", "attrs": {"fill": "zeros", "dtype": "f32", "shape": [2]}},
      {"id": "fc", "op": "FC_F32", "inputs": ["x", "w", "b"]},
      {"id": "y", "op": "OUTPUT", "inputs": ["fc"]}]})");
  ASSERT_TRUE(g.ok()) << g.status();
  EXPECT_EQ(g->input_ids(), std::vector<std::string>{"x"});
  EXPECT_EQ(g->output_ids(), std::vector<std::string>{"y"});
  EXPECT_EQ(g->Find("fc")->annotation, DeviceAnnotation::kUnspecified);
}

TEST(ParseGraphTest, UnresolvedInput) {
  auto g = ParseGraph(R"({"nodes": [
      {"id": "y", "op": "OUTPUT", "inputs": ["ghost"]}]})");
  EXPECT_TRUE(errors::Is(g.status(), "UnresolvedInput")) << g.status();
}

TEST(ParseGraphTest, CycleDetected) {
  auto g = ParseGraph(R"({"nodes": [
      {"id": "A", "op": "CONV5x5_I16", "inputs": ["B"]},
      {"id": "B", "op": "CONV5x5_I16", "inputs": ["A"]}]})");
  EXPECT_TRUE(errors::Is(g.status(), "CycleDetected")) << g.status();
}

TEST(ParseGraphTest, ParseErrorsCarryPosition) {
  auto bad = ParseGraph(R"({"nodes": [ {"id": "x", )");
  EXPECT_TRUE(errors::Is(bad.status(), "ParseError"));
  EXPECT_NE(bad.status().message().find("byte"), std::string::npos);
  auto node = ParseGraph(R"({"nodes": [{"id": "x", "op": "FFT"}]})");
  EXPECT_TRUE(errors::Is(node.status(), "ParseError"));
  EXPECT_NE(node.status().message().find("nodes[0]"), std::string::npos);
}

TEST(ParseGraphTest, StructuralRules) {
  // Duplicate id.
  EXPECT_TRUE(errors::Is(ParseGraph(R"({"nodes": [
      {"id": "x", "op": "INPUT"}, {"id": "x", "op": "INPUT"}]})").status(),
                         "ParseError"));
  // OUTPUT needs exactly one input.
  EXPECT_TRUE(errors::Is(ParseGraph(R"({"nodes": [
      {"id": "x", "op": "INPUT"},
      {"id": "y", "op": "OUTPUT", "inputs": ["x", "x"]}]})").status(),
                         "ParseError"));
  // FC needs three operands.
  EXPECT_TRUE(errors::Is(ParseGraph(R"({"nodes": [
      {"id": "x", "op": "INPUT"},
      {"id": "f", "op": "FC_F32", "inputs": ["x"]}]})").status(),
                         "ParseError"));
  // Nothing may consume an OUTPUT.
  EXPECT_TRUE(errors::Is(ParseGraph(R"({"nodes": [
      {"id": "x", "op": "INPUT"},
      {"id": "y", "op": "OUTPUT", "inputs": ["x"]},
      {"id": "c", "op": "CONV5x5_I16", "inputs": ["y"]}]})").status(),
                         "ParseError"));
  EXPECT_TRUE(errors::Is(ParseGraph(R"({"nodes": [
      {"id": "x", "op": "INPUT", "device": "gpu"}]})").status(),
                         "ParseError"));
}

TEST(ParseGraphTest, TopologicalOrderIsLexicographicKahn) {
  auto g = ParseGraph(R"({"nodes": [
      {"id": "z", "op": "INPUT"},
      {"id": "a", "op": "INPUT"},
      {"id": "m", "op": "CONV5x5_I16", "inputs": ["z"]},
      {"id": "b", "op": "CONV5x5_I16", "inputs": ["m"]},
      {"id": "o1", "op": "OUTPUT", "inputs": ["b"]},
      {"id": "o2", "op": "OUTPUT", "inputs": ["a"]}]})");
  ASSERT_TRUE(g.ok()) << g.status();
  EXPECT_EQ(g->topological_order(),
            (std::vector<std::string>{"a", "o2", "z", "m", "b", "o1"}));
}

TEST(ParseGraphTest, LoadGraphMissingFile) {
  auto g = LoadGraph("/nonexistent/graph.json");
  EXPECT_NE(g.status().message().find("file not found"), std::string::npos);
}

TEST(ParseGraphTest, ShippedGraphsParse) {
  for (const char* name : {"demo_graph.json", "thrash_graph.json",
                           "warm_graph.json"}) {
    auto g = LoadGraph(std::string(HSAFLOW_DATA_DIR) + "/" + name);
    EXPECT_TRUE(g.ok()) << name << ": " << g.status();
  }
}

TEST(PlacementTest, SpecExamples) {
  auto rt = MakeRuntime();
  auto agents = rt->EnumerateAgents();
  Graph g = *ParseGraph(R"({"nodes": [
      {"id": "img", "op": "INPUT"},
      {"id": "x", "op": "INPUT"},
      {"id": "w", "op": "INPUT"},
      {"id": "b", "op": "INPUT"},
      {"id": "fc", "op": "FC_F32", "inputs": ["x", "w", "b"], "device": "fpga"},
      {"id": "conv", "op": "CONV5x5_I16", "inputs": ["img"]},
      {"id": "pinned", "op": "CONV5x5_I16", "inputs": ["img"], "device": "cpu"}]})");
  Placement p = *Place(g, rt->registry(), agents);
  EXPECT_EQ(p.nodes.at("fc").agent_id, "fpga0");
  EXPECT_FALSE(p.nodes.at("fc").fallback);
  EXPECT_EQ(p.nodes.at("conv").agent_id, "cpu0");
  EXPECT_EQ(p.nodes.at("pinned").agent_id, "cpu0");
  EXPECT_EQ(p.nodes.size(), 3u);
  EXPECT_EQ(p.fpga_count(), 1);
  EXPECT_EQ(*Place(g, rt->registry(), agents), p);

  rt->registry().Clear(hsa::AgentKind::kFpga);
  Placement fb = *Place(g, rt->registry(), agents);
  EXPECT_EQ(fb.nodes.at("fc").agent_id, "cpu0");
  EXPECT_EQ(fb.nodes.at("fc").kind, hsa::AgentKind::kCpu);
  EXPECT_TRUE(fb.nodes.at("fc").fallback);
  EXPECT_FALSE(fb.nodes.at("conv").fallback);
  EXPECT_EQ(fb.fallback_count(), 1);
}

TEST(PlacementTest, NoCpuKernelIsAConfigurationError) {
  hsa::RuntimeOptions options;
  options.register_cpu_kernels = false;
  auto rt = MakeRuntime(options);
  Graph g = *ParseGraph(kChain);
  auto agents = rt->EnumerateAgents();
  EXPECT_TRUE(
      errors::Is(Place(g, rt->registry(), agents).status(), "NoCpuKernel"));
}

TEST(PlacementTest, FirstFpgaAgentWins) {
  hsa::RuntimeOptions options;
  options.topology = *hsa::ParseTopology(R"({"agents": [
      {"id": "fpga_b", "kind": "fpga"}, {"id": "fpga_a", "kind": "fpga"},
      {"id": "cpu0", "kind": "cpu"}]})");
  auto rt = MakeRuntime(options);
  Graph g = *ParseGraph(kChain);
  auto agents = rt->EnumerateAgents();
  EXPECT_EQ(Place(g, rt->registry(), agents)->nodes.at("fc").agent_id, "fpga_a");
}

TEST(RunTest, IdentityChainOnColdDevice) {
  auto rt = MakeRuntime();
  Graph g = *ParseGraph(kChain);
  Tensor x = RandomF32({3, 4}, 5);
  RunResult r = *PlaceAndRun(g, *rt, {{"x", x}});
  EXPECT_EQ(r.outputs.at("y"), x);
  EXPECT_EQ(r.report.count(CostCategory::kDispatch), 1);
  EXPECT_EQ(r.report.count(CostCategory::kReconfig), 1);
  EXPECT_EQ(r.fpga_dispatches, 1);

  // Same session, role still resident.
  RunResult again = *PlaceAndRun(g, *rt, {{"x", x}});
  EXPECT_EQ(again.report.count(CostCategory::kDispatch), 1);
  EXPECT_EQ(again.report.count(CostCategory::kReconfig), 0);
  EXPECT_EQ(again.report.count(CostCategory::kSetup), 0);
  EXPECT_EQ(rt->Report().count(CostCategory::kSetup), 1);
}

TEST(RunTest, AlternatingRolesThrashOneRegion) {
  hsa::RuntimeOptions options;
  options.topology.agents[1].regions = 1;
  auto rt = MakeRuntime(options);
  Graph g = *LoadGraph(std::string(HSAFLOW_DATA_DIR) + "/thrash_graph.json");
  RunResult r = *PlaceAndRun(g, *rt, SynthesizeInputs(g, 1));
  EXPECT_EQ(r.report.count(CostCategory::kDispatch), 4);
  EXPECT_EQ(r.report.count(CostCategory::kReconfig), 4);
  EXPECT_EQ(rt->device("fpga0")->reconfig_count(), 4);
}

TEST(RunTest, MissingAndMismatchedInputs) {
  auto rt = MakeRuntime();
  Graph g = *ParseGraph(kChain);
  EXPECT_TRUE(errors::Is(PlaceAndRun(g, *rt, {}).status(), "MissingInput"));
  EXPECT_TRUE(errors::Is(
      PlaceAndRun(g, *rt, {{"x", RandomF32({4, 4}, 1)}}).status(),
      "ShapeMismatch"));
}

TEST(RunTest, KernelErrorsPropagate) {
  auto rt = MakeRuntime();
  Graph g = *ParseGraph(R"({"nodes": [
      {"id": "img", "op": "INPUT"},
      {"id": "c", "op": "CONV5x5_I16", "inputs": ["img"], "device": "fpga"},
      {"id": "y", "op": "OUTPUT", "inputs": ["c"]}]})");
  auto r = PlaceAndRun(g, *rt, {{"img", RandomI16({3, 3}, 1)}});
  EXPECT_TRUE(errors::Is(r.status(), "ShapeMismatch")) << r.status();
}

TEST(RunTest, CpuNodesChargeComputeButNoDispatch) {
  auto rt = MakeRuntime();
  Graph g = *ParseGraph(R"({"nodes": [
      {"id": "img", "op": "INPUT", "attrs": {"dtype": "i16", "shape": [7, 7]}},
      {"id": "c", "op": "CONV5x5_I16", "inputs": ["img"]},
      {"id": "y", "op": "OUTPUT", "inputs": ["c"]}]})");
  RunResult r = *PlaceAndRun(g, *rt, SynthesizeInputs(g, 3));
  EXPECT_EQ(r.report.count(CostCategory::kDispatch), 0);
  EXPECT_EQ(r.report.setup_us_total(), 0u);
  // 9 output elements at 18.62 cycles each, rounded up.
  EXPECT_EQ(r.report.compute_cycles().at("c"), 168u);
}

TEST(RunTest, ConcurrentModeMatchesDeterministicValues) {
  hsa::RuntimeOptions options;
  options.mode = hsa::ExecutionMode::kConcurrent;
  for (uint32_t seed = 0; seed < 10; ++seed) {
    testing::RandomGraphCase c = testing::MakeRandomGraph(seed);
    Graph g = *Graph::Build(c.nodes);
    auto det = MakeRuntime();
    auto conc = MakeRuntime(options);
    RunResult a = *PlaceAndRun(g, *det, c.inputs);
    RunResult b = *PlaceAndRun(g, *conc, c.inputs);
    EXPECT_EQ(a.outputs, b.outputs) << "seed " << seed;
    EXPECT_EQ(a.report.count(CostCategory::kDispatch),
              b.report.count(CostCategory::kDispatch));
  }
}

// Property: outputs do not depend on where nodes run, and the report counts
// line up with the placement and device state.
TEST(RunTest, PlacementInvarianceAndReportConsistency) {
  for (uint32_t seed = 100; seed < 130; ++seed) {
    testing::RandomGraphCase c = testing::MakeRandomGraph(seed);
    ASSERT_LE(c.nodes.size(), 12u);
    Graph cpu = *Graph::Build(testing::Annotated(c.nodes, DeviceAnnotation::kCpu));
    Graph fpga =
        *Graph::Build(testing::Annotated(c.nodes, DeviceAnnotation::kFpga));

    auto rt_cpu = MakeRuntime();
    RunResult base = *PlaceAndRun(cpu, *rt_cpu, c.inputs);

    auto rt_fpga = MakeRuntime();
    auto agents = rt_fpga->EnumerateAgents();
    Placement placement = *Place(fpga, rt_fpga->registry(), agents);
    RunResult accel = *graph::Run(fpga, placement, *rt_fpga, c.inputs);
    EXPECT_EQ(accel.outputs, base.outputs) << "seed " << seed;
    EXPECT_EQ(accel.report.count(CostCategory::kDispatch), placement.fpga_count());
    EXPECT_EQ(accel.report.count(CostCategory::kReconfig),
              rt_fpga->device("fpga0")->reconfig_count());

    hsa::RuntimeOptions no_fpga_kernels;
    no_fpga_kernels.register_fpga_kernels = false;
    auto rt_fb = MakeRuntime(no_fpga_kernels);
    auto fb_agents = rt_fb->EnumerateAgents();
    Placement fb = *Place(fpga, rt_fb->registry(), fb_agents);
    EXPECT_EQ(fb.fpga_count(), 0);
    RunResult fallback = *graph::Run(fpga, fb, *rt_fb, c.inputs);
    EXPECT_EQ(fallback.outputs, base.outputs) << "seed " << seed;
  }
}

TEST(RunTest, CustomOpsRunOnTheirRegisteredKernel) {
  auto rt = MakeRuntime();
  ASSERT_TRUE(rt->registry()
                  .Register({.op_type = OpType::kCustom,
                             .custom_name = "negate",
                             .device_kind = hsa::AgentKind::kCpu,
                             .body = hsa::SoftwareFn{
                                 "negate", Rational(1),
                                 [](std::span<const Tensor> args)
                                     -> absl::StatusOr<Tensor> {
                                   Tensor out = args[0];
                                   for (float& v : out.mutable_f32()) v = -v;
                                   return out;
                                 }}})
                  .ok());
  Graph g = *ParseGraph(R"({"nodes": [
      {"id": "x", "op": "INPUT"},
      {"id": "n", "op": "custom:negate", "inputs": ["x"], "device": "fpga"},
      {"id": "y", "op": "OUTPUT", "inputs": ["n"]}]})");
  auto agents = rt->EnumerateAgents();
  Placement p = *Place(g, rt->registry(), agents);
  EXPECT_TRUE(p.nodes.at("n").fallback);
  RunResult r = *graph::Run(g, p, *rt, {{"x", *Tensor::F32({2}, {1.0f, -2.0f})}});
  EXPECT_EQ(r.outputs.at("y"), *Tensor::F32({2}, {-1.0f, 2.0f}));
}

}  // namespace
}  // namespace hsaflow::graph

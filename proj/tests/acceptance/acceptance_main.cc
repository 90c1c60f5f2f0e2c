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

// Acceptance suite. Prints one [PASS]/[FAIL] line per criterion and exits
// non-zero if any criterion fails. Every tolerance and time limit is fixed
// below; nothing is read from the environment.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "absl/strings/str_format.h"
#include "hsaflow/cli/commands.h"
#include "hsaflow/common/errors.h"
#include "hsaflow/fpga/device.h"
#include "hsaflow/fpga/manifest.h"
#include "hsaflow/fpga/resources.h"
#include "hsaflow/graph/executor.h"
#include "hsaflow/graph/graph.h"
#include "hsaflow/graph/placement.h"
#include "hsaflow/hsa/runtime.h"
#include "hsaflow/kernels/kernels.h"
#include "hsaflow/metrics/timeline.h"
#include "support/oracles.h"
#include "support/random_graph.h"

namespace hsaflow {
namespace {

using metrics::CostCategory;

// Reference overhead totals, exact.
constexpr uint64_t kColdTfTotalUs = 156230 + 7424 + 3 * 27;  // 163735
constexpr uint64_t kWarmHsaTotalUs = 39032 + 0 + 10;         // 39042
// Reference efficiency increases and tolerance.
constexpr double kReferenceIncrease[] = {6.51, 3.03, 18.62, 6.98};
constexpr double kIncreaseTolerance = 0.01;
// Reference utilization percentages, per row: LUT, FF, BRAM, DSP.
constexpr double kReferencePercent[5][4] = {
    {14.1, 6.1, 4.6, 0.0},  {14.1, 6.0, 9.7, 6.1}, {13.5, 5.6, 10.6, 2.2},
    {7.2, 3.5, 9.7, 1.7},   {11.2, 5.6, 9.7, 3.3}};
// Wall-clock limits in seconds.
constexpr double kAc1Seconds = 1.0;
constexpr double kAc2Seconds = 10.0;
constexpr double kAc3Seconds = 30.0;
constexpr double kAc6Seconds = 30.0;
// Case counts.
constexpr int kLruSequences = 1000;
constexpr int kKernelCases = 500;
constexpr int kRandomDags = 50;

struct Outcome {
  bool pass = true;
  std::string detail;

  void Fail(std::string why) {
    if (pass) detail = std::move(why);
    pass = false;
  }
};

int failures = 0;

void Report(const char* id, const char* title, double seconds, double limit,
            Outcome outcome) {
  if (limit > 0 && seconds >= limit) {
    outcome.Fail(absl::StrFormat("took %.3f s, limit %.1f s", seconds, limit));
  }
  if (!outcome.pass) ++failures;
  std::printf("[%s] %s %s (%.3f s)%s%s\n", outcome.pass ? "PASS" : "FAIL", id,
              title, seconds, outcome.detail.empty() ? "" : ": ",
              outcome.detail.c_str());
  std::fflush(stdout);
}

void Criterion(const char* id, const char* title, double limit,
               const std::function<void(Outcome&)>& body) {
  Outcome outcome;
  const auto start = std::chrono::steady_clock::now();
  body(outcome);
  const double seconds = std::chrono::duration<double>(
                             std::chrono::steady_clock::now() - start)
                             .count();
  Report(id, title, seconds, limit, std::move(outcome));
}

std::string Data(const char* name) {
  return std::string(HSAFLOW_DATA_DIR) + "/" + name;
}

absl::StatusOr<graph::RunResult> RunGraphFile(hsa::Runtime& rt,
                                              const char* graph_file) {
  auto g = graph::LoadGraph(Data(graph_file));
  if (!g.ok()) return g.status();
  auto agents = rt.EnumerateAgents();
  auto placement = graph::Place(*g, rt.registry(), agents);
  if (!placement.ok()) return placement.status();
  return graph::Run(*g, *placement, rt, graph::SynthesizeInputs(*g, 1));
}

void Ac1(Outcome& o) {
  hsa::RuntimeOptions cold;
  auto rt = hsa::Runtime::Create(cold);
  if (!rt.ok()) return o.Fail(std::string(rt.status().message()));
  auto run = RunGraphFile(**rt, "demo_graph.json");
  if (!run.ok()) return o.Fail(std::string(run.status().message()));
  const uint64_t cold_total = metrics::TotalOverhead(run->report);
  if (cold_total != kColdTfTotalUs || run->report.count(CostCategory::kDispatch) != 3 ||
      run->report.count(CostCategory::kReconfig) != 1) {
    o.Fail(absl::StrFormat("TF cold total %d us, want %d", cold_total,
                           kColdTfTotalUs));
  }

  hsa::RuntimeOptions warm;
  auto topo = hsa::LoadTopology(Data("warm_topology.json"));
  if (!topo.ok()) return o.Fail(std::string(topo.status().message()));
  warm.topology = *topo;
  auto wrt = hsa::Runtime::Create(warm);
  if (!wrt.ok()) return o.Fail(std::string(wrt.status().message()));
  auto wrun = RunGraphFile(**wrt, "warm_graph.json");
  if (!wrun.ok()) return o.Fail(std::string(wrun.status().message()));
  const uint64_t warm_total = metrics::TotalOverhead(wrun->report);
  if (warm_total != kWarmHsaTotalUs) {
    o.Fail(absl::StrFormat("HSA warm total %d us, want %d", warm_total,
                           kWarmHsaTotalUs));
  }
  o.detail = absl::StrFormat("TF cold %d us, HSA warm %d us", cold_total,
                             warm_total);
  if (cold_total != kColdTfTotalUs || warm_total != kWarmHsaTotalUs) o.pass = false;
}

void Ac2(Outcome& o) {
  std::mt19937 rng(20240601);
  for (int seq = 0; seq < kLruSequences; ++seq) {
    const int regions = 1 + rng() % 8;
    const int alphabet = 1 + rng() % 16;
    const int length = rng() % 65;
    auto device = fpga::Device::Create({.num_regions = regions});
    if (!device.ok()) return o.Fail(std::string(device.status().message()));
    for (int r = 0; r < alphabet; ++r) {
      fpga::Role role;
      role.id = "role" + std::to_string(r);
      role.op_type = OpType::kFcF32;
      role.footprint = {1000, 1000, 4, 4};
      (void)device->InstallRole(role);
    }
    testing::LruOracle oracle(regions);
    for (int i = 0; i < length; ++i) {
      const std::string id = "role" + std::to_string(rng() % alphabet);
      oracle.Access(id);
      auto load = device->EnsureLoaded(id);
      if (!load.ok()) return o.Fail(std::string(load.status().message()));
    }
    const auto loaded = device->LoadedRoles();
    if (device->reconfig_count() != oracle.misses() ||
        std::set<std::string>(loaded.begin(), loaded.end()) != oracle.contents()) {
      return o.Fail(absl::StrFormat("sequence %d diverges from the oracle", seq));
    }
  }
  o.detail = absl::StrFormat("%d sequences", kLruSequences);
}

void Ac3(Outcome& o) {
  std::mt19937 rng(424242);
  int saturated_hi = 0, saturated_lo = 0;
  for (int i = 0; i < kKernelCases; ++i) {
    const int64_t m = 1 + rng() % 12, k = 1 + rng() % 40, n = 1 + rng() % 12;
    Tensor x = RandomF32({m, k}, rng()), w = RandomF32({k, n}, rng()),
           b = RandomF32({n}, rng());
    auto got = kernels::FcF32(x, w, b);
    if (!got.ok()) return o.Fail(std::string(got.status().message()));
    const auto want = testing::NaiveFc({x.f32().begin(), x.f32().end()},
                                       {w.f32().begin(), w.f32().end()},
                                       {b.f32().begin(), b.f32().end()}, m, k, n);
    if (!std::equal(want.begin(), want.end(), got->f32().begin())) {
      return o.Fail(absl::StrFormat("fc case %d differs", i));
    }
  }
  for (int i = 0; i < kKernelCases; ++i) {
    const bool five = rng() % 2 == 0;
    const OpType op = five ? OpType::kConv5x5I16 : OpType::kConv3x3x2I16;
    const int64_t kh = five ? 5 : 3, f = five ? 1 : 2;
    const int64_t h = kh + rng() % 14, wd = kh + rng() % 14;
    kernels::FixedWeights weights;
    Tensor in;
    // Every fifth case is built to overflow int16 upward, every fifth+1
    // downward.
    if (i % 5 == 0 || i % 5 == 1) {
      in = *Tensor::I16({h, wd}, std::vector<int16_t>(h * wd, 32767));
      const int16_t sign = i % 5 == 0 ? 1 : -1;
      weights = {*Tensor::I16({f, kh, kh},
                              std::vector<int16_t>(f * kh * kh, sign)),
                 0};
    } else {
      in = RandomI16({h, wd}, rng());
      weights = kernels::DefaultFixedWeights(op, rng(), rng() % 16);
    }
    auto got = kernels::Conv2dI16(in, weights);
    if (!got.ok()) return o.Fail(std::string(got.status().message()));
    const auto want = testing::NaiveConv(
        {in.i16().begin(), in.i16().end()}, h, wd,
        {weights.values.i16().begin(), weights.values.i16().end()}, f, kh, kh,
        weights.scale_shift);
    if (!std::equal(want.begin(), want.end(), got->i16().begin())) {
      return o.Fail(absl::StrFormat("conv case %d differs", i));
    }
    if (i % 5 == 0 || i % 5 == 1) {
      const int16_t limit = i % 5 == 0 ? 32767 : -32768;
      for (int16_t v : got->i16()) {
        if (v != limit) {
          return o.Fail(absl::StrFormat("conv case %d: %d, want %d", i, v, limit));
        }
      }
      (i % 5 == 0 ? saturated_hi : saturated_lo)++;
    }
  }
  o.detail = absl::StrFormat("%d fc + %d conv, %d/%d saturating cases",
                             kKernelCases, kKernelCases, saturated_hi,
                             saturated_lo);
}

void Ac4(Outcome& o) {
  const fpga::Manifest manifest = fpga::DefaultManifest();
  const fpga::ResourceVector rows[5] = {
      fpga::kDefaultShell, manifest.roles[0].footprint,
      manifest.roles[1].footprint, manifest.roles[2].footprint,
      manifest.roles[3].footprint};
  for (int r = 0; r < 5; ++r) {
    const fpga::ResourcePercent p =
        fpga::Utilization(rows[r], fpga::kDefaultCapacity);
    const double got[4] = {p.lut, p.ff, p.bram, p.dsp};
    for (int c = 0; c < 4; ++c) {
      if (std::round(got[c] * 10) / 10 != kReferencePercent[r][c]) {
        return o.Fail(absl::StrFormat("row %d col %d: %.3f%% prints as %.1f", r,
                                      c, got[c], kReferencePercent[r][c]));
      }
    }
  }
  // Each role alone.
  for (const fpga::Role& role : manifest.roles) {
    auto device = fpga::Device::Create({.num_regions = 1});
    if (!device->InstallRole(role).ok() || !device->EnsureLoaded(role.id).ok() ||
        !device->Used().FitsWithin(fpga::kDefaultCapacity)) {
      return o.Fail("role " + role.id + " does not fit alone");
    }
  }
  // All four at once.
  auto device = fpga::Device::Create({.num_regions = 4});
  for (const fpga::Role& role : manifest.roles) {
    if (!device->InstallRole(role).ok() || !device->EnsureLoaded(role.id).ok()) {
      return o.Fail("all four roles do not fit together");
    }
  }
  if (!device->Used().FitsWithin(fpga::kDefaultCapacity) ||
      device->Used().lut != 42372) {
    return o.Fail("capacity invariant violated with all roles loaded");
  }
  // Over capacity on DSPs only.
  fpga::Role hog;
  hog.id = "dsp_hog";
  hog.op_type = OpType::kFcF32;
  hog.footprint = {100, 100, 1, 361};
  absl::Status st = device->InstallRole(hog);
  if (!errors::Is(st, "CapacityExceeded") ||
      st.message().find("dsp") == std::string::npos) {
    return o.Fail("over-capacity role not rejected with component named");
  }
  o.detail = "20 cells, 4 single loads, 1 joint load, rejection names dsp";
}

void Ac5(Outcome& o) {
  cli::RunConfig config;
  config.reps = 1000;
  auto figures = cli::RunBench(config);
  if (!figures.ok()) return o.Fail(std::string(figures.status().message()));
  if (figures->size() != 4) return o.Fail("expected 4 roles");
  auto doubled = cli::RunBench(config, 2);
  if (!doubled.ok()) return o.Fail(std::string(doubled.status().message()));
  std::string shown;
  for (int r = 0; r < 4; ++r) {
    const double got = (*figures)[r].increase.ToDouble();
    const double big = (*doubled)[r].increase.ToDouble();
    shown += absl::StrFormat("%s%.2f", r ? " / " : "", got);
    if (std::fabs(got - kReferenceIncrease[r]) > kIncreaseTolerance) {
      return o.Fail(absl::StrFormat("role%d: %.4f, want %.2f", r + 1, got,
                                    kReferenceIncrease[r]));
    }
    if (std::fabs(big - kReferenceIncrease[r]) > kIncreaseTolerance) {
      return o.Fail(absl::StrFormat("role%d doubled: %.4f, want %.2f", r + 1,
                                    big, kReferenceIncrease[r]));
    }
  }
  o.detail = shown + " (doubled extents agree)";
}

void Ac6(Outcome& o) {
  for (int i = 0; i < kRandomDags; ++i) {
    testing::RandomGraphCase c = testing::MakeRandomGraph(9000 + i, 12);
    if (c.nodes.size() > 12) return o.Fail("generator exceeded 12 nodes");
    auto run = [&](graph::DeviceAnnotation a,
                   bool fpga_kernels) -> absl::StatusOr<graph::RunResult> {
      hsa::RuntimeOptions options;
      options.register_fpga_kernels = fpga_kernels;
      auto rt = hsa::Runtime::Create(options);
      if (!rt.ok()) return rt.status();
      auto g = graph::Graph::Build(testing::Annotated(c.nodes, a));
      if (!g.ok()) return g.status();
      auto agents = (*rt)->EnumerateAgents();
      auto p = graph::Place(*g, (*rt)->registry(), agents);
      if (!p.ok()) return p.status();
      return graph::Run(*g, *p, **rt, c.inputs);
    };
    auto cpu = run(graph::DeviceAnnotation::kCpu, true);
    auto fpga = run(graph::DeviceAnnotation::kFpga, true);
    auto fallback = run(graph::DeviceAnnotation::kFpga, false);
    if (!cpu.ok() || !fpga.ok() || !fallback.ok()) {
      return o.Fail(absl::StrFormat("dag %d failed to run", i));
    }
    if (cpu->outputs != fpga->outputs || cpu->outputs != fallback->outputs) {
      return o.Fail(absl::StrFormat("dag %d outputs differ", i));
    }
    if (fallback->fpga_dispatches != 0) {
      return o.Fail(absl::StrFormat("dag %d dispatched without FPGA kernels", i));
    }
  }
  o.detail = absl::StrFormat("%d DAGs x 3 placements", kRandomDags);
}

void Ac7(Outcome& o) {
  auto rt = hsa::Runtime::Create({});
  if (!rt.ok()) return o.Fail(std::string(rt.status().message()));
  auto first = RunGraphFile(**rt, "warm_graph.json");
  auto second = RunGraphFile(**rt, "warm_graph.json");
  auto third = RunGraphFile(**rt, "demo_graph.json");
  if (!first.ok() || !second.ok() || !third.ok()) return o.Fail("run failed");
  const metrics::TimelineReport all = (*rt)->Report();
  if (all.count(CostCategory::kSetup) != 1 ||
      all.count(CostCategory::kDispatch) != 5) {
    return o.Fail(absl::StrFormat("setup charged %d times over %d dispatches",
                                  all.count(CostCategory::kSetup),
                                  all.count(CostCategory::kDispatch)));
  }
  if (first->report.count(CostCategory::kReconfig) != 1 ||
      second->report.count(CostCategory::kReconfig) != 0) {
    return o.Fail("second run of the same role reconfigured");
  }

  hsa::RuntimeOptions thrash;
  thrash.topology.agents[1].regions = 1;
  thrash.topology.costs.layer = metrics::Layer::kHsa;
  auto trt = hsa::Runtime::Create(thrash);
  auto alt = RunGraphFile(**trt, "thrash_graph.json");
  if (!alt.ok()) return o.Fail(std::string(alt.status().message()));
  const int64_t dispatches = alt->report.count(CostCategory::kDispatch);
  const int64_t reconfigs = alt->report.count(CostCategory::kReconfig);
  if (dispatches != reconfigs || dispatches != 4) {
    return o.Fail(absl::StrFormat("1-region alternating: %d reconfigs, %d dispatches",
                                  reconfigs, dispatches));
  }
  o.detail = absl::StrFormat(
      "1 setup over 5 dispatches; rerun reconfigs 0; thrash %d/%d", reconfigs,
      dispatches);
}

}  // namespace
}  // namespace hsaflow

int main() {
  using hsaflow::Criterion;
  Criterion("AC1", "overhead accounting", hsaflow::kAc1Seconds,
            hsaflow::Ac1);
  Criterion("AC2", "LRU oracle equivalence", hsaflow::kAc2Seconds, hsaflow::Ac2);
  Criterion("AC3", "kernel correctness vs naive oracles", hsaflow::kAc3Seconds,
            hsaflow::Ac3);
  Criterion("AC4", "resource model", 0, hsaflow::Ac4);
  Criterion("AC5", "efficiency increases", 0, hsaflow::Ac5);
  Criterion("AC6", "placement invariance", hsaflow::kAc6Seconds, hsaflow::Ac6);
  Criterion("AC7", "setup-once and hit/miss properties", 0, hsaflow::Ac7);
  std::printf("%d criteria failed\n", hsaflow::failures);
  return hsaflow::failures == 0 ? 0 : 1;
}

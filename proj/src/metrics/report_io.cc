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

#include "hsaflow/metrics/report_io.h"

#include "absl/strings/str_format.h"
#include "hsaflow/common/strings.h"

namespace hsaflow::metrics {

using nlohmann::json;

json ReportToJson(const TimelineReport& report, const CostConstants& costs) {
  json doc;
  doc["layer"] = std::string(LayerName(costs.layer));
  doc["overhead_us"] = {
      {"setup", report.setup_us_total()},
      {"reconfig", report.reconfig_us_total()},
      {"dispatch", report.dispatch_us_total()},
      {"total", TotalOverhead(report)},
  };
  doc["counts"] = {
      {"setup", report.count(CostCategory::kSetup)},
      {"reconfig", report.count(CostCategory::kReconfig)},
      {"dispatch", report.count(CostCategory::kDispatch)},
      {"compute", report.count(CostCategory::kCompute)},
  };
  doc["compute_cycles"] = json::object();
  for (const auto& [detail, cycles] : report.compute_cycles()) {
    doc["compute_cycles"][detail] = cycles;
  }
  doc["compute_cycles_total"] = report.compute_cycles_total();
  doc["events"] = json::array();
  for (const CostEvent& e : report.events()) {
    doc["events"].push_back({{"time_us", e.time_us},
                             {"category", std::string(CategoryName(e.category))},
                             {"amount", e.amount},
                             {"detail", e.detail}});
  }
  return doc;
}

std::string ReportToText(const TimelineReport& report,
                         const CostConstants& costs) {
  std::string out = absl::StrFormat("Overhead (%s layer) [us]\n",
                                    ToAbsl(LayerName(costs.layer)));
  absl::StrAppendFormat(&out, "%-22s %-20s %8s %12s\n", "Operation",
                        "Occurrence", "Events", "Charged");
  absl::StrAppendFormat(&out, "%-22s %-20s %8d %12d\n", "device/kernel setup",
                        "once", report.count(CostCategory::kSetup),
                        report.setup_us_total());
  absl::StrAppendFormat(&out, "%-22s %-20s %8d %12d\n", "reconfiguration",
                        "if not configured",
                        report.count(CostCategory::kReconfig),
                        report.reconfig_us_total());
  absl::StrAppendFormat(&out, "%-22s %-20s %8d %12d\n", "dispatch latency",
                        "every dispatch", report.count(CostCategory::kDispatch),
                        report.dispatch_us_total());
  absl::StrAppendFormat(&out, "%-22s %-20s %8s %12d\n", "total overhead", "",
                        "", TotalOverhead(report));
  if (!report.compute_cycles().empty()) {
    absl::StrAppendFormat(&out, "\nCompute [cycles]\n");
    for (const auto& [detail, cycles] : report.compute_cycles()) {
      absl::StrAppendFormat(&out, "%-22s %42d\n", detail, cycles);
    }
  }
  return out;
}

json EfficiencyToJson(std::span<const EfficiencyFigure> figures) {
  json doc = json::array();
  for (const EfficiencyFigure& f : figures) {
    doc.push_back({{"role_id", f.role_id},
                   {"op_count", f.op_count},
                   {"accel_cycles", f.accel_cycles},
                   {"cpu_cycles", f.cpu_cycles},
                   {"accel_op_per_cycle", f.accel_op_per_cycle.ToString()},
                   {"cpu_op_per_cycle", f.cpu_op_per_cycle.ToString()},
                   {"increase", f.increase.ToString()},
                   {"increase_2dp", f.increase.ToFixed(2)}});
  }
  return doc;
}

std::string EfficiencyToText(std::span<const EfficiencyFigure> figures) {
  std::string out = absl::StrFormat("%-8s %14s %14s %14s %10s %10s %10s\n",
                                    "Role", "OPs", "Accel cycles",
                                    "CPU cycles", "Accel OP/c", "CPU OP/c",
                                    "Increase");
  for (const EfficiencyFigure& f : figures) {
    absl::StrAppendFormat(&out, "%-8s %14d %14d %14d %10s %10s %9sx\n",
                          f.role_id, f.op_count, f.accel_cycles, f.cpu_cycles,
                          f.accel_op_per_cycle.ToFixed(2),
                          f.cpu_op_per_cycle.ToFixed(2), f.increase.ToFixed(2));
  }
  return out;
}

}  // namespace hsaflow::metrics

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

#ifndef HSAFLOW_METRICS_REPORT_IO_H_
#define HSAFLOW_METRICS_REPORT_IO_H_

#include <span>
#include <string>

#include "hsaflow/metrics/cost.h"
#include "hsaflow/metrics/efficiency.h"
#include "hsaflow/metrics/timeline.h"
#include "json.hpp"

namespace hsaflow::metrics {

// Machine-readable report. Keys are emitted in sorted order, so equal reports
// serialize to identical bytes.
nlohmann::json ReportToJson(const TimelineReport& report,
                            const CostConstants& costs);

// Aligned table with one row per overhead tier (setup, reconfiguration,
// dispatch latency) followed by per-node compute cycles.
std::string ReportToText(const TimelineReport& report,
                         const CostConstants& costs);

nlohmann::json EfficiencyToJson(std::span<const EfficiencyFigure> figures);
std::string EfficiencyToText(std::span<const EfficiencyFigure> figures);

}  // namespace hsaflow::metrics

#endif  // HSAFLOW_METRICS_REPORT_IO_H_

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

#include "hsaflow/metrics/timeline.h"

#include <algorithm>

#include "hsaflow/common/strings.h"
#include "hsaflow/common/errors.h"
#include "hsaflow/metrics/cost.h"

namespace hsaflow::metrics {

std::string_view LayerName(Layer layer) {
  return layer == Layer::kTf ? "tf" : "hsa";
}

std::optional<Layer> ParseLayer(std::string_view name) {
  if (name == "tf") return Layer::kTf;
  if (name == "hsa") return Layer::kHsa;
  return std::nullopt;
}

std::string_view CategoryName(CostCategory category) {
  switch (category) {
    case CostCategory::kSetup:
      return "setup";
    case CostCategory::kDispatch:
      return "dispatch";
    case CostCategory::kReconfig:
      return "reconfig";
    case CostCategory::kCompute:
      return "compute";
  }
  return "compute";
}

absl::Status TimelineReport::Charge(CostCategory category, uint64_t amount,
                                    std::string detail) {
  if (category == CostCategory::kSetup && setup_charged_) {
    return errors::DoubleSetup(
        hsaflow::StrCat("setup already charged; refusing '", detail, "'"));
  }
  Append(CostEvent{now_us_, category, amount, std::move(detail)});
  return absl::OkStatus();
}

void TimelineReport::Append(CostEvent event) {
  switch (event.category) {
    case CostCategory::kSetup:
      setup_charged_ = true;
      setup_us_ += event.amount;
      now_us_ += event.amount;
      break;
    case CostCategory::kDispatch:
      dispatch_us_ += event.amount;
      now_us_ += event.amount;
      break;
    case CostCategory::kReconfig:
      reconfig_us_ += event.amount;
      now_us_ += event.amount;
      break;
    case CostCategory::kCompute:
      compute_cycles_ += event.amount;
      per_detail_cycles_[event.detail] += event.amount;
      break;
  }
  events_.push_back(std::move(event));
}

int64_t TimelineReport::count(CostCategory category) const {
  return std::count_if(events_.begin(), events_.end(),
                       [&](const CostEvent& e) { return e.category == category; });
}

TimelineReport TimelineReport::Since(size_t first) const {
  TimelineReport slice;
  for (size_t i = first; i < events_.size(); ++i) slice.Append(events_[i]);
  // Keep the original timestamps; the slice's clock ends where ours does.
  slice.now_us_ = now_us_;
  return slice;
}

uint64_t TotalOverhead(const TimelineReport& report) {
  return report.setup_us_total() + report.dispatch_us_total() +
         report.reconfig_us_total();
}

}  // namespace hsaflow::metrics

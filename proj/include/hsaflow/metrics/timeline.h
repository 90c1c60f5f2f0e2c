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

#ifndef HSAFLOW_METRICS_TIMELINE_H_
#define HSAFLOW_METRICS_TIMELINE_H_

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/status.h"

namespace hsaflow::metrics {

enum class CostCategory { kSetup, kDispatch, kReconfig, kCompute };

std::string_view CategoryName(CostCategory category);

// One accounting entry. Overhead categories are in microseconds and advance
// the simulated clock; compute entries are in cycles and do not.
struct CostEvent {
  uint64_t time_us = 0;
  CostCategory category = CostCategory::kCompute;
  uint64_t amount = 0;
  std::string detail;

  friend bool operator==(const CostEvent&, const CostEvent&) = default;
};

// Ordered cost log with running totals. Setup may be charged once.
class TimelineReport {
 public:
  // DoubleSetup if a second setup charge is attempted.
  absl::Status Charge(CostCategory category, uint64_t amount,
                      std::string detail);

  uint64_t setup_us_total() const { return setup_us_; }
  uint64_t dispatch_us_total() const { return dispatch_us_; }
  uint64_t reconfig_us_total() const { return reconfig_us_; }
  uint64_t compute_cycles_total() const { return compute_cycles_; }
  int64_t count(CostCategory category) const;
  // Compute cycles keyed by event detail (the node or role charged).
  const std::map<std::string, uint64_t>& compute_cycles() const {
    return per_detail_cycles_;
  }

  bool setup_charged() const { return setup_charged_; }
  // Simulated clock: the sum of every overhead charged so far.
  uint64_t now_us() const { return now_us_; }
  const std::vector<CostEvent>& events() const { return events_; }

  // The events from index `first` on, as a report of their own.
  TimelineReport Since(size_t first) const;

 private:
  void Append(CostEvent event);

  std::vector<CostEvent> events_;
  std::map<std::string, uint64_t> per_detail_cycles_;
  uint64_t setup_us_ = 0;
  uint64_t dispatch_us_ = 0;
  uint64_t reconfig_us_ = 0;
  uint64_t compute_cycles_ = 0;
  uint64_t now_us_ = 0;
  bool setup_charged_ = false;
};

// setup + dispatch + reconfiguration; compute is not overhead.
uint64_t TotalOverhead(const TimelineReport& report);

}  // namespace hsaflow::metrics

#endif  // HSAFLOW_METRICS_TIMELINE_H_

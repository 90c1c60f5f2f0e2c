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

#ifndef HSAFLOW_METRICS_EFFICIENCY_H_
#define HSAFLOW_METRICS_EFFICIENCY_H_

#include <cstdint>
#include <map>
#include <string>
#include <string_view>

#include "absl/status/statusor.h"
#include "hsaflow/common/op_type.h"
#include "hsaflow/common/rational.h"

namespace hsaflow::metrics {

// Operations per cycle of an accelerator role against the CPU baseline.
struct EfficiencyFigure {
  std::string role_id;
  int64_t op_count = 0;
  int64_t accel_cycles = 0;
  int64_t cpu_cycles = 0;
  Rational accel_op_per_cycle;
  Rational cpu_op_per_cycle;
  // accel_op_per_cycle / cpu_op_per_cycle, which reduces to
  // cpu_cycles / accel_cycles.
  Rational increase;
};

// Requires op_count > 0 and both cycle counts > 0 (ZeroCycles otherwise).
absl::StatusOr<EfficiencyFigure> Efficiency(std::string role_id,
                                            int64_t op_count,
                                            int64_t accel_cycles,
                                            int64_t cpu_cycles);

// Per-op CPU cost model: cycles per output element of the software
// implementation. Replace the defaults with measured figures when available.
struct Calibration {
  std::map<OpType, Rational> cpu_cycles_per_element;
};

// Baseline rates set to (measured OP/cycle increase) x (default role rate),
// so the default manifest reproduces the measured increases of 6.51, 3.03,
// 18.62 and 6.98 for roles 1-4.
Calibration DefaultCalibration();

// { "cpu_cycles_per_element": { "FC_F32": "104.16", ... } }
absl::StatusOr<Calibration> ParseCalibration(std::string_view json_text);
absl::StatusOr<Calibration> LoadCalibration(const std::string& path);

}  // namespace hsaflow::metrics

#endif  // HSAFLOW_METRICS_EFFICIENCY_H_

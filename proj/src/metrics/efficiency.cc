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

#include "hsaflow/metrics/efficiency.h"

#include "hsaflow/common/strings.h"
#include "hsaflow/common/errors.h"

namespace hsaflow::metrics {

absl::StatusOr<EfficiencyFigure> Efficiency(std::string role_id,
                                            int64_t op_count,
                                            int64_t accel_cycles,
                                            int64_t cpu_cycles) {
  if (accel_cycles <= 0 || cpu_cycles <= 0) {
    return errors::ZeroCycles(hsaflow::StrCat(role_id, ": accel_cycles=",
                                           accel_cycles,
                                           " cpu_cycles=", cpu_cycles));
  }
  if (op_count <= 0) {
    return absl::InvalidArgumentError(
        hsaflow::StrCat(role_id, ": op_count must be > 0, got ", op_count));
  }
  EfficiencyFigure fig;
  fig.role_id = std::move(role_id);
  fig.op_count = op_count;
  fig.accel_cycles = accel_cycles;
  fig.cpu_cycles = cpu_cycles;
  fig.accel_op_per_cycle = Rational(op_count, accel_cycles);
  fig.cpu_op_per_cycle = Rational(op_count, cpu_cycles);
  fig.increase = fig.accel_op_per_cycle / fig.cpu_op_per_cycle;
  return fig;
}

}  // namespace hsaflow::metrics

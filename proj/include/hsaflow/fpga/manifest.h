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

#ifndef HSAFLOW_FPGA_MANIFEST_H_
#define HSAFLOW_FPGA_MANIFEST_H_

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/statusor.h"
#include "hsaflow/fpga/device.h"

namespace hsaflow::fpga {

// The set of presynthesized roles available to the runtime, plus the fixed
// weights of every conv op type (shared with the CPU implementations so that
// results do not depend on placement).
struct Manifest {
  std::vector<Role> roles;
  std::map<OpType, kernels::FixedWeights> fixed_weights;
};

// JSON document:
//
//   { "roles": [
//       { "role_id": "role3", "op_type": "CONV5x5_I16",
//         "footprint": {"lut": 5091, "ff": 4935, "bram": 21, "dsp": 6},
//         "cycles_per_element": "1",
//         "description": "...",
//         "weights": {"seed": 3, "scale_shift": 6} } ] }
//
// cycles_per_element is a rational ("3/2", "1.5") or a JSON number. Conv
// roles take weights either from a seed (see kernels::DefaultFixedWeights) or
// as an explicit "values" array in (filters, kh, kw) row-major order.
absl::StatusOr<Manifest> ParseManifest(std::string_view json_text);
absl::StatusOr<Manifest> LoadManifest(const std::string& path);

// The four roles measured on the reference board, with their measured
// footprints and seeded weights.
Manifest DefaultManifest();

}  // namespace hsaflow::fpga

#endif  // HSAFLOW_FPGA_MANIFEST_H_

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

#include "hsaflow/common/errors.h"
#include "hsaflow/kernels/kernels.h"
#include "hsaflow/common/strings.h"

namespace hsaflow::kernels {

Shape ExpectedWeightShape(OpType op) {
  switch (op) {
    case OpType::kConv5x5I16:
      return {1, 5, 5};
    case OpType::kConv3x3x2I16:
      return {2, 3, 3};
    default:
      return {};
  }
}

absl::Status ValidateFixedWeights(OpType op, const FixedWeights& weights) {
  const Shape expected = ExpectedWeightShape(op);
  if (expected.empty()) {
    return absl::InvalidArgumentError(
        hsaflow::StrCat(OpTypeName(op), " does not take fixed weights"));
  }
  if (weights.values.dtype() != DType::kI16 ||
      weights.values.shape() != expected) {
    return errors::ShapeMismatch(hsaflow::StrCat(
        OpTypeName(op), " needs i16 weights of shape ", ShapeString(expected),
        ", got ", DTypeName(weights.values.dtype()), " ",
        ShapeString(weights.values.shape())));
  }
  if (weights.scale_shift < 0 || weights.scale_shift > 31) {
    return errors::ShapeMismatch(
        hsaflow::StrCat("scale_shift ", weights.scale_shift, " outside [0, 31]"));
  }
  return absl::OkStatus();
}

FixedWeights DefaultFixedWeights(OpType op, uint32_t seed, int scale_shift) {
  return FixedWeights{RandomI16(ExpectedWeightShape(op), seed, -16, 16),
                      scale_shift};
}

}  // namespace hsaflow::kernels

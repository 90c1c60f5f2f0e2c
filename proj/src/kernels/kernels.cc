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

#include "hsaflow/kernels/kernels.h"

#include <omp.h>

#include "hsaflow/common/errors.h"
#include "hsaflow/common/status_macros.h"
#include "hsaflow/common/strings.h"

namespace hsaflow::kernels {

absl::StatusOr<Tensor> FcF32(const Tensor& input, const Tensor& weights,
                             const Tensor& bias) {
  HSAFLOW_ASSIGN_OR_RETURN(const internal::FcDims d,
                           internal::CheckFcShapes(input, weights, bias));
  Tensor out = Tensor::Zeros(DType::kF32, {d.m, d.n});
  const float* x = input.f32().data();
  const float* w = weights.f32().data();
  const float* b = bias.f32().data();
  float* y = out.mutable_f32().data();
  const int64_t rows = d.m, cols = d.n, depth = d.k;

#pragma omp parallel for collapse(2) schedule(static)
  for (int64_t m = 0; m < rows; ++m) {
    for (int64_t n = 0; n < cols; ++n) {
      float acc = 0.0f;
      for (int64_t k = 0; k < depth; ++k) {
        acc += x[m * depth + k] * w[k * cols + n];
      }
      y[m * cols + n] = b[n] + acc;
    }
  }
  return out;
}

absl::StatusOr<Tensor> FcF32Barrier(const Tensor& input, const Tensor& weights,
                                    const Tensor& bias, KernelTrace* trace) {
  HSAFLOW_ASSIGN_OR_RETURN(const internal::FcDims d,
                           internal::CheckFcShapes(input, weights, bias));
  Tensor out = Tensor::Zeros(DType::kF32, {d.m, d.n});
  std::vector<float> partial(d.m * d.n);
  const float* x = input.f32().data();
  const float* w = weights.f32().data();
  const float* b = bias.f32().data();
  float* p = partial.data();
  float* y = out.mutable_f32().data();
  const int64_t rows = d.m, cols = d.n, depth = d.k;
  const int64_t total = rows * cols;

#pragma omp parallel
  {
#pragma omp for collapse(2) schedule(static) nowait
    for (int64_t m = 0; m < rows; ++m) {
      for (int64_t n = 0; n < cols; ++n) {
        float acc = 0.0f;
        for (int64_t k = 0; k < depth; ++k) {
          acc += x[m * depth + k] * w[k * cols + n];
        }
        p[m * cols + n] = acc;
      }
    }
    // No output is written until every row's partial sums exist.
#pragma omp barrier
#pragma omp for schedule(static)
    for (int64_t i = 0; i < total; ++i) {
      y[i] = b[i % cols] + p[i];
    }
  }
  if (trace != nullptr) ++trace->barriers;
  return out;
}

absl::StatusOr<Tensor> Conv2dI16(const Tensor& input,
                                 const FixedWeights& weights) {
  HSAFLOW_ASSIGN_OR_RETURN(const internal::ConvDims d,
                           internal::CheckConvShapes(input, weights));
  Tensor out = Tensor::Zeros(DType::kI16, {d.filters, d.out_h, d.out_w});
  const int16_t* x = input.i16().data();
  const int16_t* w = weights.values.i16().data();
  int16_t* y = out.mutable_i16().data();
  const int shift = weights.scale_shift;

#pragma omp parallel for collapse(2) schedule(static)
  for (int64_t f = 0; f < d.filters; ++f) {
    for (int64_t oy = 0; oy < d.out_h; ++oy) {
      for (int64_t ox = 0; ox < d.out_w; ++ox) {
        uint32_t acc = 0;
        for (int64_t ky = 0; ky < d.kh; ++ky) {
          const int16_t* row = x + (oy + ky) * d.width + ox;
          const int16_t* taps = w + (f * d.kh + ky) * d.kw;
          for (int64_t kx = 0; kx < d.kw; ++kx) {
            acc += static_cast<uint32_t>(int32_t{row[kx]} * int32_t{taps[kx]});
          }
        }
        y[(f * d.out_h + oy) * d.out_w + ox] =
            SaturateToI16(static_cast<int32_t>(acc) >> shift);
      }
    }
  }
  return out;
}

absl::StatusOr<Tensor> RunBuiltin(OpType op, std::span<const Tensor> args,
                                  const FixedWeights* fixed,
                                  KernelTrace* trace) {
  if (IsFullyConnected(op)) {
    if (args.size() != 3) {
      return errors::ShapeMismatch(hsaflow::StrCat(
          OpTypeName(op), " takes 3 operands, got ", args.size()));
    }
    return op == OpType::kFcF32 ? FcF32(args[0], args[1], args[2])
                                : FcF32Barrier(args[0], args[1], args[2], trace);
  }
  if (IsConv(op)) {
    if (args.size() != 1) {
      return errors::ShapeMismatch(hsaflow::StrCat(
          OpTypeName(op), " takes 1 operand, got ", args.size()));
    }
    if (fixed == nullptr) {
      return absl::FailedPreconditionError(
          hsaflow::StrCat(OpTypeName(op), " has no fixed weights"));
    }
    HSAFLOW_RETURN_IF_ERROR(ValidateFixedWeights(op, *fixed));
    return Conv2dI16(args[0], *fixed);
  }
  return absl::InvalidArgumentError(
      hsaflow::StrCat("no builtin kernel for ", OpTypeName(op)));
}

}  // namespace hsaflow::kernels

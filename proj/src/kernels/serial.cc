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
#include "hsaflow/common/status_macros.h"
#include "hsaflow/kernels/kernels.h"
#include "hsaflow/common/strings.h"

namespace hsaflow::kernels {
namespace internal {

absl::StatusOr<FcDims> CheckFcShapes(const Tensor& input, const Tensor& weights,
                                     const Tensor& bias) {
  if (input.dtype() != DType::kF32 || weights.dtype() != DType::kF32 ||
      bias.dtype() != DType::kF32) {
    return errors::ShapeMismatch("fully connected operands must be f32");
  }
  if (input.rank() != 2 || weights.rank() != 2 || bias.rank() != 1) {
    return errors::ShapeMismatch(hsaflow::StrCat(
        "fully connected expects input [M,K], weights [K,N], bias [N]; got ",
        ShapeString(input.shape()), ", ", ShapeString(weights.shape()), ", ",
        ShapeString(bias.shape())));
  }
  const FcDims dims{input.dim(0), input.dim(1), weights.dim(1)};
  if (weights.dim(0) != dims.k || bias.dim(0) != dims.n) {
    return errors::ShapeMismatch(hsaflow::StrCat(
        "inner dimensions disagree: input ", ShapeString(input.shape()),
        ", weights ", ShapeString(weights.shape()), ", bias ",
        ShapeString(bias.shape())));
  }
  if (dims.m == 0 || dims.k == 0 || dims.n == 0) {
    return errors::ShapeMismatch("fully connected operands must be non-empty");
  }
  return dims;
}

absl::StatusOr<ConvDims> CheckConvShapes(const Tensor& input,
                                         const FixedWeights& weights) {
  const Tensor& w = weights.values;
  if (input.dtype() != DType::kI16 || w.dtype() != DType::kI16) {
    return errors::ShapeMismatch("convolution operands must be i16");
  }
  if (input.rank() != 2 || w.rank() != 3) {
    return errors::ShapeMismatch(hsaflow::StrCat(
        "convolution expects input [H,W] and weights [F,kh,kw]; got ",
        ShapeString(input.shape()), " and ", ShapeString(w.shape())));
  }
  if (weights.scale_shift < 0 || weights.scale_shift > 31) {
    return errors::ShapeMismatch(
        hsaflow::StrCat("scale_shift ", weights.scale_shift, " outside [0, 31]"));
  }
  ConvDims d{};
  d.height = input.dim(0);
  d.width = input.dim(1);
  d.filters = w.dim(0);
  d.kh = w.dim(1);
  d.kw = w.dim(2);
  if (d.filters == 0 || d.kh == 0 || d.kw == 0) {
    return errors::ShapeMismatch("empty convolution kernel");
  }
  if (d.height < d.kh || d.width < d.kw) {
    return errors::ShapeMismatch(hsaflow::StrCat(
        "input ", ShapeString(input.shape()), " smaller than kernel ", d.kh,
        "x", d.kw));
  }
  d.out_h = d.height - d.kh + 1;
  d.out_w = d.width - d.kw + 1;
  return d;
}

}  // namespace internal

namespace serial {

absl::StatusOr<Tensor> FcF32(const Tensor& input, const Tensor& weights,
                             const Tensor& bias) {
  HSAFLOW_ASSIGN_OR_RETURN(const internal::FcDims d,
                           internal::CheckFcShapes(input, weights, bias));
  Tensor out = Tensor::Zeros(DType::kF32, {d.m, d.n});
  const auto x = input.f32();
  const auto w = weights.f32();
  const auto b = bias.f32();
  auto y = out.mutable_f32();
  for (int64_t m = 0; m < d.m; ++m) {
    for (int64_t n = 0; n < d.n; ++n) {
      float acc = 0.0f;
      for (int64_t k = 0; k < d.k; ++k) {
        acc += x[m * d.k + k] * w[k * d.n + n];
      }
      y[m * d.n + n] = b[n] + acc;
    }
  }
  return out;
}

absl::StatusOr<Tensor> FcF32Barrier(const Tensor& input, const Tensor& weights,
                                    const Tensor& bias, KernelTrace* trace) {
  HSAFLOW_ASSIGN_OR_RETURN(const internal::FcDims d,
                           internal::CheckFcShapes(input, weights, bias));
  const auto x = input.f32();
  const auto w = weights.f32();
  const auto b = bias.f32();
  std::vector<float> partial(d.m * d.n);
  for (int64_t m = 0; m < d.m; ++m) {
    for (int64_t n = 0; n < d.n; ++n) {
      float acc = 0.0f;
      for (int64_t k = 0; k < d.k; ++k) {
        acc += x[m * d.k + k] * w[k * d.n + n];
      }
      partial[m * d.n + n] = acc;
    }
  }
  if (trace != nullptr) ++trace->barriers;
  Tensor out = Tensor::Zeros(DType::kF32, {d.m, d.n});
  auto y = out.mutable_f32();
  for (int64_t i = 0; i < d.m * d.n; ++i) {
    y[i] = b[i % d.n] + partial[i];
  }
  return out;
}

absl::StatusOr<Tensor> Conv2dI16(const Tensor& input,
                                 const FixedWeights& weights) {
  HSAFLOW_ASSIGN_OR_RETURN(const internal::ConvDims d,
                           internal::CheckConvShapes(input, weights));
  Tensor out = Tensor::Zeros(DType::kI16, {d.filters, d.out_h, d.out_w});
  const auto x = input.i16();
  const auto w = weights.values.i16();
  auto y = out.mutable_i16();
  for (int64_t f = 0; f < d.filters; ++f) {
    for (int64_t oy = 0; oy < d.out_h; ++oy) {
      for (int64_t ox = 0; ox < d.out_w; ++ox) {
        uint32_t acc = 0;
        for (int64_t ky = 0; ky < d.kh; ++ky) {
          for (int64_t kx = 0; kx < d.kw; ++kx) {
            const int32_t product =
                int32_t{x[(oy + ky) * d.width + ox + kx]} *
                int32_t{w[(f * d.kh + ky) * d.kw + kx]};
            acc += static_cast<uint32_t>(product);
          }
        }
        const int32_t shifted = static_cast<int32_t>(acc) >> weights.scale_shift;
        y[(f * d.out_h + oy) * d.out_w + ox] = SaturateToI16(shifted);
      }
    }
  }
  return out;
}

}  // namespace serial
}  // namespace hsaflow::kernels

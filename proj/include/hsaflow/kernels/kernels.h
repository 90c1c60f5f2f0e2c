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

#ifndef HSAFLOW_KERNELS_KERNELS_H_
#define HSAFLOW_KERNELS_KERNELS_H_

#include <cstdint>
#include <functional>
#include <span>

#include "absl/status/statusor.h"
#include "hsaflow/common/op_type.h"
#include "hsaflow/common/tensor.h"

namespace hsaflow::kernels {

// Convolution weights baked into a role: an I16 tensor of shape
// (filters, kh, kw) and the arithmetic right shift applied to each 32-bit
// accumulator before saturation.
struct FixedWeights {
  Tensor values;
  int scale_shift = 0;
};

// User-supplied kernel body for OpType::kCustom operations.
using KernelFn = std::function<absl::StatusOr<Tensor>(std::span<const Tensor>)>;

// Filled by kernels that synchronize internally. Values never depend on it.
struct KernelTrace {
  int barriers = 0;
};

// (filters, kh, kw) required by a conv op type: (1,5,5) or (2,3,3).
Shape ExpectedWeightShape(OpType op);
absl::Status ValidateFixedWeights(OpType op, const FixedWeights& weights);

// Seeded default weights for a conv op type; values lie in [-16, 16].
FixedWeights DefaultFixedWeights(OpType op, uint32_t seed, int scale_shift);

inline int16_t SaturateToI16(int32_t value) {
  if (value > 32767) return 32767;
  if (value < -32768) return -32768;
  return static_cast<int16_t>(value);
}

// OpenMP-parallel kernels. Each output element is produced by one thread
// with the same operation order as the serial versions below, so results
// are bit-identical to them for any thread count.
//
// out[m,n] = bias[n] + sum_k input[m,k] * weights[k,n], k ascending.
absl::StatusOr<Tensor> FcF32(const Tensor& input, const Tensor& weights,
                             const Tensor& bias);
// Same values as FcF32; all partial sums are complete before any output is
// written, and the synchronization point is counted in `trace`.
absl::StatusOr<Tensor> FcF32Barrier(const Tensor& input, const Tensor& weights,
                                    const Tensor& bias,
                                    KernelTrace* trace = nullptr);
// Valid, stride-1 correlation of an I16 [H,W] input with every filter.
// Products accumulate in a wrapping 32-bit register in row-major kernel order;
// the output is saturate(acc >> scale_shift) with an arithmetic shift.
absl::StatusOr<Tensor> Conv2dI16(const Tensor& input,
                                 const FixedWeights& weights);

// Runs `op` on its operands: {input, weights, bias} for the FC ops and
// {input} for the conv ops (whose weights come from `fixed`).
absl::StatusOr<Tensor> RunBuiltin(OpType op, std::span<const Tensor> args,
                                  const FixedWeights* fixed,
                                  KernelTrace* trace = nullptr);

// Arithmetic operations performed by `op`, counting a multiply-accumulate as
// two operations. FC: 2*M*K*N + M*N for shapes {input [M,K], weights [K,N]}.
// Conv: 2*F*(H-kh+1)*(W-kw+1)*kh*kw for shapes {input [H,W]}.
absl::StatusOr<int64_t> OpCount(OpType op, std::span<const Shape> shapes);

// Output elements produced by `op` for the given operand shapes (same
// convention as OpCount); this is the element count the cycle model uses.
absl::StatusOr<int64_t> OutputElements(OpType op, std::span<const Shape> shapes);

namespace serial {

// Single-threaded reference versions of the kernels above.
absl::StatusOr<Tensor> FcF32(const Tensor& input, const Tensor& weights,
                             const Tensor& bias);
absl::StatusOr<Tensor> FcF32Barrier(const Tensor& input, const Tensor& weights,
                                    const Tensor& bias,
                                    KernelTrace* trace = nullptr);
absl::StatusOr<Tensor> Conv2dI16(const Tensor& input,
                                 const FixedWeights& weights);

}  // namespace serial

namespace internal {

struct FcDims {
  int64_t m, k, n;
};
absl::StatusOr<FcDims> CheckFcShapes(const Tensor& input, const Tensor& weights,
                                     const Tensor& bias);

struct ConvDims {
  int64_t height, width, filters, kh, kw, out_h, out_w;
};
absl::StatusOr<ConvDims> CheckConvShapes(const Tensor& input,
                                         const FixedWeights& weights);

}  // namespace internal
}  // namespace hsaflow::kernels

#endif  // HSAFLOW_KERNELS_KERNELS_H_

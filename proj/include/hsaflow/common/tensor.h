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

#ifndef HSAFLOW_COMMON_TENSOR_H_
#define HSAFLOW_COMMON_TENSOR_H_

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/statusor.h"

namespace hsaflow {

enum class DType { kF32, kI16 };

std::string_view DTypeName(DType dtype);  // "f32" / "i16"

using Shape = std::vector<int64_t>;

std::string ShapeString(const Shape& shape);  // "2x3"

// Dense row-major tensor. Extents are non-negative; a zero extent yields an
// empty tensor, which every kernel rejects as a shape error.
class Tensor {
 public:
  Tensor() = default;

  static absl::StatusOr<Tensor> F32(Shape shape, std::vector<float> data);
  static absl::StatusOr<Tensor> I16(Shape shape, std::vector<int16_t> data);
  static Tensor Zeros(DType dtype, Shape shape);

  DType dtype() const { return dtype_; }
  const Shape& shape() const { return shape_; }
  int rank() const { return static_cast<int>(shape_.size()); }
  int64_t dim(int i) const { return shape_.at(i); }
  int64_t num_elements() const;

  std::span<const float> f32() const { return f32_; }
  std::span<float> mutable_f32() { return f32_; }
  std::span<const int16_t> i16() const { return i16_; }
  std::span<int16_t> mutable_i16() { return i16_; }

  // Bitwise equality: dtype, shape and every element's bit pattern.
  friend bool operator==(const Tensor& a, const Tensor& b);

 private:
  DType dtype_ = DType::kF32;
  Shape shape_;
  std::vector<float> f32_;
  std::vector<int16_t> i16_;
};

// Text form used for test fixtures and CLI tensor files:
//
//   f32 2x3: 1 2 3 4 5 6
//   i16 1x5x5: 0 0 0 ...
//
// dtype, an 'x'-separated shape of positive extents, a colon, then the
// row-major elements separated by whitespace. F32 values are written in
// shortest round-trip form, so Format followed by Parse is bit-exact.
absl::StatusOr<Tensor> ParseTensorLiteral(std::string_view text);
std::string FormatTensorLiteral(const Tensor& tensor);

// Deterministic pseudo-random tensors built on std::mt19937's raw output
// (whose sequence is fixed by the standard). F32 values lie in [-1, 1);
// I16 values in [lo, hi].
Tensor RandomF32(const Shape& shape, uint32_t seed);
Tensor RandomI16(const Shape& shape, uint32_t seed, int16_t lo = -32768,
                 int16_t hi = 32767);
Tensor IdentityF32(int64_t n);

}  // namespace hsaflow

#endif  // HSAFLOW_COMMON_TENSOR_H_

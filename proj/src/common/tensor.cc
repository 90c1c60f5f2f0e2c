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

#include "hsaflow/common/tensor.h"

#include <charconv>
#include <cstring>
#include <random>

#include "absl/status/status.h"
#include "absl/strings/ascii.h"
#include "hsaflow/common/strings.h"
#include "absl/strings/str_join.h"
#include "absl/strings/str_split.h"

namespace hsaflow {
namespace {

absl::StatusOr<int64_t> CheckedElementCount(const Shape& shape) {
  int64_t count = 1;
  for (int64_t extent : shape) {
    if (extent < 0) {
      return absl::InvalidArgumentError(
          hsaflow::StrCat("negative extent in shape ", ShapeString(shape)));
    }
    count *= extent;
  }
  return count;
}

absl::Status LiteralError(std::string_view detail) {
  return absl::InvalidArgumentError(
      hsaflow::StrCat("bad tensor literal: ", detail));
}

}  // namespace

std::string_view DTypeName(DType dtype) {
  return dtype == DType::kF32 ? "f32" : "i16";
}

std::string ShapeString(const Shape& shape) {
  return absl::StrJoin(shape, "x");
}

absl::StatusOr<Tensor> Tensor::F32(Shape shape, std::vector<float> data) {
  auto count = CheckedElementCount(shape);
  if (!count.ok()) return count.status();
  if (static_cast<int64_t>(data.size()) != *count) {
    return absl::InvalidArgumentError(
        hsaflow::StrCat("shape ", ShapeString(shape), " needs ", *count,
                     " elements, got ", data.size()));
  }
  Tensor t;
  t.dtype_ = DType::kF32;
  t.shape_ = std::move(shape);
  t.f32_ = std::move(data);
  return t;
}

absl::StatusOr<Tensor> Tensor::I16(Shape shape, std::vector<int16_t> data) {
  auto count = CheckedElementCount(shape);
  if (!count.ok()) return count.status();
  if (static_cast<int64_t>(data.size()) != *count) {
    return absl::InvalidArgumentError(
        hsaflow::StrCat("shape ", ShapeString(shape), " needs ", *count,
                     " elements, got ", data.size()));
  }
  Tensor t;
  t.dtype_ = DType::kI16;
  t.shape_ = std::move(shape);
  t.i16_ = std::move(data);
  return t;
}

Tensor Tensor::Zeros(DType dtype, Shape shape) {
  Tensor t;
  t.dtype_ = dtype;
  t.shape_ = std::move(shape);
  const int64_t n = t.num_elements();
  if (dtype == DType::kF32) {
    t.f32_.assign(n, 0.0f);
  } else {
    t.i16_.assign(n, 0);
  }
  return t;
}

int64_t Tensor::num_elements() const {
  if (shape_.empty()) return 0;
  int64_t count = 1;
  for (int64_t extent : shape_) count *= extent;
  return count;
}

bool operator==(const Tensor& a, const Tensor& b) {
  if (a.dtype_ != b.dtype_ || a.shape_ != b.shape_) return false;
  if (a.dtype_ == DType::kF32) {
    return a.f32_.size() == b.f32_.size() &&
           (a.f32_.empty() || std::memcmp(a.f32_.data(), b.f32_.data(),
                                          a.f32_.size() * sizeof(float)) == 0);
  }
  return a.i16_ == b.i16_;
}

namespace {

std::vector<std::string_view> SplitWhitespace(std::string_view text) {
  std::vector<std::string_view> out;
  for (absl::string_view piece : absl::StrSplit(
           ToAbsl(text), absl::ByAnyChar(" \t\r\n"), absl::SkipEmpty())) {
    out.push_back(FromAbsl(piece));
  }
  return out;
}

}  // namespace

absl::StatusOr<Tensor> ParseTensorLiteral(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) return LiteralError("missing ':'");
  std::vector<std::string_view> header = SplitWhitespace(text.substr(0, colon));
  if (header.size() != 2) {
    return LiteralError("header must be '<dtype> <shape>'");
  }
  DType dtype;
  if (header[0] == "f32") {
    dtype = DType::kF32;
  } else if (header[0] == "i16") {
    dtype = DType::kI16;
  } else {
    return LiteralError(hsaflow::StrCat("unknown dtype '", header[0], "'"));
  }
  Shape shape;
  for (absl::string_view piece : absl::StrSplit(ToAbsl(header[1]), 'x')) {
    const std::string_view token = FromAbsl(piece);
    int64_t extent = 0;
    auto [ptr, ec] =
        std::from_chars(token.data(), token.data() + token.size(), extent);
    if (ec != std::errc() || ptr != token.data() + token.size() ||
        extent <= 0) {
      return LiteralError(hsaflow::StrCat("bad extent '", token, "'"));
    }
    shape.push_back(extent);
  }

  std::vector<std::string_view> values = SplitWhitespace(text.substr(colon + 1));
  if (dtype == DType::kF32) {
    std::vector<float> data;
    data.reserve(values.size());
    for (std::string_view token : values) {
      float v = 0;
      auto [ptr, ec] =
          std::from_chars(token.data(), token.data() + token.size(), v);
      if (ec != std::errc() || ptr != token.data() + token.size()) {
        return LiteralError(hsaflow::StrCat("bad f32 value '", token, "'"));
      }
      data.push_back(v);
    }
    return Tensor::F32(std::move(shape), std::move(data));
  }
  std::vector<int16_t> data;
  data.reserve(values.size());
  for (std::string_view token : values) {
    int16_t v = 0;
    auto [ptr, ec] =
        std::from_chars(token.data(), token.data() + token.size(), v);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
      return LiteralError(hsaflow::StrCat("bad i16 value '", token, "'"));
    }
    data.push_back(v);
  }
  return Tensor::I16(std::move(shape), std::move(data));
}

std::string FormatTensorLiteral(const Tensor& tensor) {
  std::string out =
      hsaflow::StrCat(DTypeName(tensor.dtype()), " ", ShapeString(tensor.shape()),
                   ":");
  char buf[64];
  if (tensor.dtype() == DType::kF32) {
    for (float v : tensor.f32()) {
      auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
      out.push_back(' ');
      out.append(buf, ptr);
    }
  } else {
    for (int16_t v : tensor.i16()) {
      hsaflow::StrAppend(&out, " ", v);
    }
  }
  return out;
}

Tensor RandomF32(const Shape& shape, uint32_t seed) {
  Tensor t = Tensor::Zeros(DType::kF32, shape);
  std::mt19937 rng(seed);
  for (float& v : t.mutable_f32()) {
    // 24 random mantissa bits mapped onto [-1, 1).
    v = static_cast<float>(rng() >> 8) * (2.0f / 16777216.0f) - 1.0f;
  }
  return t;
}

Tensor RandomI16(const Shape& shape, uint32_t seed, int16_t lo, int16_t hi) {
  Tensor t = Tensor::Zeros(DType::kI16, shape);
  std::mt19937 rng(seed);
  const uint32_t span = static_cast<uint32_t>(hi - lo) + 1;
  for (int16_t& v : t.mutable_i16()) {
    v = static_cast<int16_t>(lo + static_cast<int32_t>(rng() % span));
  }
  return t;
}

Tensor IdentityF32(int64_t n) {
  Tensor t = Tensor::Zeros(DType::kF32, {n, n});
  auto data = t.mutable_f32();
  for (int64_t i = 0; i < n; ++i) data[i * n + i] = 1.0f;
  return t;
}

}  // namespace hsaflow

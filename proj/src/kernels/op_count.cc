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
namespace {

struct ConvGeometry {
  int64_t filters, kh, kw, out_h, out_w;
};

absl::StatusOr<ConvGeometry> ConvGeometryFor(OpType op,
                                             std::span<const Shape> shapes) {
  if (shapes.size() != 1 || shapes[0].size() != 2) {
    return errors::ShapeMismatch(
        hsaflow::StrCat(OpTypeName(op), " expects one [H,W] input shape"));
  }
  const Shape kernel = ExpectedWeightShape(op);
  const int64_t h = shapes[0][0], w = shapes[0][1];
  if (h < kernel[1] || w < kernel[2]) {
    return errors::ShapeMismatch(hsaflow::StrCat("input ", ShapeString(shapes[0]),
                                              " smaller than kernel"));
  }
  return ConvGeometry{kernel[0], kernel[1], kernel[2], h - kernel[1] + 1,
                      w - kernel[2] + 1};
}

absl::Status CheckFc(std::span<const Shape> shapes) {
  if (shapes.size() < 2 || shapes[0].size() != 2 || shapes[1].size() != 2 ||
      shapes[0][1] != shapes[1][0] || shapes[0][0] <= 0 || shapes[0][1] <= 0 ||
      shapes[1][1] <= 0) {
    return errors::ShapeMismatch(
        "fully connected expects shapes {[M,K], [K,N]}");
  }
  return absl::OkStatus();
}

}  // namespace

absl::StatusOr<int64_t> OpCount(OpType op, std::span<const Shape> shapes) {
  if (IsFullyConnected(op)) {
    if (auto st = CheckFc(shapes); !st.ok()) return st;
    const int64_t m = shapes[0][0], k = shapes[0][1], n = shapes[1][1];
    return 2 * m * k * n + m * n;
  }
  if (IsConv(op)) {
    auto g = ConvGeometryFor(op, shapes);
    if (!g.ok()) return g.status();
    return 2 * g->filters * g->out_h * g->out_w * g->kh * g->kw;
  }
  return absl::InvalidArgumentError(
      hsaflow::StrCat("no operation count model for ", OpTypeName(op)));
}

absl::StatusOr<int64_t> OutputElements(OpType op,
                                       std::span<const Shape> shapes) {
  if (IsFullyConnected(op)) {
    if (auto st = CheckFc(shapes); !st.ok()) return st;
    return shapes[0][0] * shapes[1][1];
  }
  if (IsConv(op)) {
    auto g = ConvGeometryFor(op, shapes);
    if (!g.ok()) return g.status();
    return g->filters * g->out_h * g->out_w;
  }
  return absl::InvalidArgumentError(
      hsaflow::StrCat("no element model for ", OpTypeName(op)));
}

}  // namespace hsaflow::kernels

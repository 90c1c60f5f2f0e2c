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

#ifndef HSAFLOW_FPGA_RESOURCES_H_
#define HSAFLOW_FPGA_RESOURCES_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "absl/status/statusor.h"

namespace hsaflow::fpga {

// Programmable-logic resources: LUTs, flip-flops, 36Kb block RAMs and DSP
// slices.
struct ResourceVector {
  int64_t lut = 0;
  int64_t ff = 0;
  int64_t bram = 0;
  int64_t dsp = 0;

  friend bool operator==(const ResourceVector&, const ResourceVector&) = default;
  friend ResourceVector operator+(const ResourceVector& a,
                                  const ResourceVector& b) {
    return {a.lut + b.lut, a.ff + b.ff, a.bram + b.bram, a.dsp + b.dsp};
  }
  friend ResourceVector operator-(const ResourceVector& a,
                                  const ResourceVector& b) {
    return {a.lut - b.lut, a.ff - b.ff, a.bram - b.bram, a.dsp - b.dsp};
  }

  bool IsZero() const { return *this == ResourceVector{}; }
  bool NonNegative() const {
    return lut >= 0 && ff >= 0 && bram >= 0 && dsp >= 0;
  }
  // Componentwise <=.
  bool FitsWithin(const ResourceVector& limit) const {
    return lut <= limit.lut && ff <= limit.ff && bram <= limit.bram &&
           dsp <= limit.dsp;
  }
};

std::string ToString(const ResourceVector& r);

// Name ("lut", "ff", "bram", "dsp") of the first component where `need`
// exceeds `limit`, if any.
std::optional<std::string_view> FirstExceeded(const ResourceVector& need,
                                              const ResourceVector& limit);

// Utilization in percent per component.
struct ResourcePercent {
  double lut = 0;
  double ff = 0;
  double bram = 0;
  double dsp = 0;
};

ResourcePercent Utilization(const ResourceVector& used,
                            const ResourceVector& capacity);

// Back-solves device capacity from an absolute usage figure and the
// percentage it represents: round(absolute / (percent / 100)) per component.
absl::StatusOr<ResourceVector> DeriveCapacity(const ResourceVector& absolute,
                                              const ResourcePercent& percent);

// Ultra96 (ZU3EG) programmable logic and the static shell measured on it.
inline constexpr ResourceVector kDefaultCapacity{70560, 141120, 216, 360};
inline constexpr ResourceVector kDefaultShell{9915, 8544, 10, 0};

}  // namespace hsaflow::fpga

#endif  // HSAFLOW_FPGA_RESOURCES_H_

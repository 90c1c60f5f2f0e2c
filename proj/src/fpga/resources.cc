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

#include "hsaflow/fpga/resources.h"

#include <cmath>

#include "hsaflow/common/strings.h"
#include "hsaflow/common/errors.h"

namespace hsaflow::fpga {

std::string ToString(const ResourceVector& r) {
  return hsaflow::StrCat("{lut=", r.lut, ", ff=", r.ff, ", bram=", r.bram,
                      ", dsp=", r.dsp, "}");
}

std::optional<std::string_view> FirstExceeded(const ResourceVector& need,
                                              const ResourceVector& limit) {
  if (need.lut > limit.lut) return "lut";
  if (need.ff > limit.ff) return "ff";
  if (need.bram > limit.bram) return "bram";
  if (need.dsp > limit.dsp) return "dsp";
  return std::nullopt;
}

ResourcePercent Utilization(const ResourceVector& used,
                            const ResourceVector& capacity) {
  auto pct = [](int64_t u, int64_t c) {
    return c == 0 ? 0.0 : 100.0 * static_cast<double>(u) / c;
  };
  return {pct(used.lut, capacity.lut), pct(used.ff, capacity.ff),
          pct(used.bram, capacity.bram), pct(used.dsp, capacity.dsp)};
}

absl::StatusOr<ResourceVector> DeriveCapacity(const ResourceVector& absolute,
                                              const ResourcePercent& percent) {
  auto derive = [](std::string_view name, int64_t value,
                   double pct) -> absl::StatusOr<int64_t> {
    if (!(pct > 0.0)) {
      return errors::ZeroPercent(
          hsaflow::StrCat(name, " percentage must be > 0, got ", pct));
    }
    return static_cast<int64_t>(std::llround(value / (pct / 100.0)));
  };
  auto lut = derive("lut", absolute.lut, percent.lut);
  if (!lut.ok()) return lut.status();
  auto ff = derive("ff", absolute.ff, percent.ff);
  if (!ff.ok()) return ff.status();
  auto bram = derive("bram", absolute.bram, percent.bram);
  if (!bram.ok()) return bram.status();
  auto dsp = derive("dsp", absolute.dsp, percent.dsp);
  if (!dsp.ok()) return dsp.status();
  return ResourceVector{*lut, *ff, *bram, *dsp};
}

}  // namespace hsaflow::fpga

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

#ifndef HSAFLOW_COMMON_RATIONAL_H_
#define HSAFLOW_COMMON_RATIONAL_H_

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include "absl/status/statusor.h"

namespace hsaflow {

// Exact non-negative-denominator fraction, always kept in lowest terms.
// Cycle rates and efficiency ratios are carried as rationals so that
// calibrated figures such as 18.62 reproduce without rounding drift.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(int64_t numerator, int64_t denominator = 1);

  // Accepts "7", "651/25", or a finite decimal such as "6.51".
  static absl::StatusOr<Rational> Parse(std::string_view text);

  int64_t numerator() const { return num_; }
  int64_t denominator() const { return den_; }

  double ToDouble() const { return static_cast<double>(num_) / den_; }
  // Smallest integer >= value.
  int64_t Ceil() const;
  // "n" when integral, else "n/d".
  std::string ToString() const;
  // Decimal rendering rounded half away from zero to `digits` places.
  std::string ToFixed(int digits) const;

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  friend bool operator==(const Rational& a, const Rational& b) = default;
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b);

 private:
  int64_t num_ = 0;
  int64_t den_ = 1;
};

}  // namespace hsaflow

#endif  // HSAFLOW_COMMON_RATIONAL_H_

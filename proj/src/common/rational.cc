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

#include "hsaflow/common/rational.h"

#include <charconv>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

#include "absl/status/status.h"
#include "hsaflow/common/strings.h"

namespace hsaflow {
namespace {

absl::StatusOr<int64_t> ParseInt(std::string_view text) {
  int64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    return absl::InvalidArgumentError(
        hsaflow::StrCat("not an integer: '", text, "'"));
  }
  return value;
}

}  // namespace

Rational::Rational(int64_t numerator, int64_t denominator) {
  if (denominator == 0) throw std::domain_error("zero denominator");
  if (denominator < 0) {
    numerator = -numerator;
    denominator = -denominator;
  }
  const int64_t g = std::gcd(numerator, denominator);
  num_ = numerator / (g == 0 ? 1 : g);
  den_ = denominator / (g == 0 ? 1 : g);
}

absl::StatusOr<Rational> Rational::Parse(std::string_view text) {
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    auto num = ParseInt(text.substr(0, slash));
    auto den = ParseInt(text.substr(slash + 1));
    if (!num.ok()) return num.status();
    if (!den.ok()) return den.status();
    if (*den == 0) return absl::InvalidArgumentError("zero denominator");
    return Rational(*num, *den);
  }
  if (const auto dot = text.find('.'); dot != std::string_view::npos) {
    const std::string_view whole = text.substr(0, dot);
    const std::string_view frac = text.substr(dot + 1);
    if (frac.empty() || frac.size() > 12 ||
        frac.find_first_not_of("0123456789") != std::string_view::npos) {
      return absl::InvalidArgumentError(
          hsaflow::StrCat("not a decimal: '", text, "'"));
    }
    const bool negative = !whole.empty() && whole.front() == '-';
    auto w = whole.empty() || whole == "-" ? absl::StatusOr<int64_t>(0)
                                           : ParseInt(whole);
    auto f = ParseInt(frac);
    if (!w.ok()) return w.status();
    if (!f.ok()) return f.status();
    int64_t scale = 1;
    for (size_t i = 0; i < frac.size(); ++i) scale *= 10;
    const int64_t magnitude = std::llabs(*w) * scale + *f;
    return Rational(negative ? -magnitude : magnitude, scale);
  }
  auto value = ParseInt(text);
  if (!value.ok()) return value.status();
  return Rational(*value);
}

int64_t Rational::Ceil() const {
  int64_t q = num_ / den_;
  if (num_ % den_ != 0 && num_ > 0) ++q;
  return q;
}

std::string Rational::ToString() const {
  if (den_ == 1) return std::to_string(num_);
  return hsaflow::StrCat(num_, "/", den_);
}

std::string Rational::ToFixed(int digits) const {
  int64_t scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  const bool negative = num_ < 0;
  const __int128 magnitude = static_cast<__int128>(negative ? -num_ : num_);
  const __int128 scaled = (magnitude * scale * 2 + den_) / (2 * den_);
  const int64_t whole = static_cast<int64_t>(scaled / scale);
  const int64_t frac = static_cast<int64_t>(scaled % scale);
  std::string out = negative && scaled != 0 ? "-" : "";
  hsaflow::StrAppend(&out, whole);
  if (digits > 0) {
    std::string frac_text = std::to_string(frac);
    frac_text.insert(0, digits - frac_text.size(), '0');
    hsaflow::StrAppend(&out, ".", frac_text);
  }
  return out;
}

Rational operator+(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
  // Cross-reduce first to keep intermediates small.
  const int64_t g1 = std::gcd(a.num_, b.den_);
  const int64_t g2 = std::gcd(b.num_, a.den_);
  const int64_t n1 = g1 ? a.num_ / g1 : a.num_, d2 = g1 ? b.den_ / g1 : b.den_;
  const int64_t n2 = g2 ? b.num_ / g2 : b.num_, d1 = g2 ? a.den_ / g2 : a.den_;
  return Rational(n1 * n2, d1 * d2);
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.num_ == 0) throw std::domain_error("division by zero rational");
  return a * Rational(b.den_, b.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  const __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
  const __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
  return lhs <=> rhs;
}

}  // namespace hsaflow

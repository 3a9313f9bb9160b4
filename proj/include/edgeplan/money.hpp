// Copyright 2026 The Edgeplan Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace edgeplan {

// An amount of money in integer micro-dollars. All cost arithmetic and every
// threshold comparison in the planners is exact.
class Money {
 public:
  constexpr Money() = default;

  static constexpr Money FromMicros(std::int64_t micros) { return Money(micros); }

  // Parses a decimal dollar amount such as "1.0452" or "0.067" without going
  // through floating point. At most six fractional digits are accepted.
  static Money ParseDollars(std::string_view text);

  constexpr std::int64_t micros() const { return micros_; }
  double dollars() const { return static_cast<double>(micros_) / 1e6; }

  // Fixed six-decimal rendering, e.g. "1.045200". Stable across platforms.
  std::string ToDollarString() const;

  constexpr Money& operator+=(Money other) {
    micros_ += other.micros_;
    return *this;
  }
  constexpr Money& operator-=(Money other) {
    micros_ -= other.micros_;
    return *this;
  }

  friend constexpr Money operator+(Money a, Money b) { return Money(a.micros_ + b.micros_); }
  friend constexpr Money operator-(Money a, Money b) { return Money(a.micros_ - b.micros_); }
  friend constexpr Money operator*(Money a, std::int64_t k) { return Money(a.micros_ * k); }
  friend constexpr Money operator*(std::int64_t k, Money a) { return Money(a.micros_ * k); }

  friend constexpr auto operator<=>(Money, Money) = default;
  friend constexpr bool operator==(Money, Money) = default;

 private:
  constexpr explicit Money(std::int64_t micros) : micros_(micros) {}

  std::int64_t micros_ = 0;
};

constexpr Money Micros(std::int64_t micros) { return Money::FromMicros(micros); }

}  // namespace edgeplan

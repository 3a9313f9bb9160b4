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

#include "edgeplan/money.hpp"

#include <cstdlib>
#include <string>

#include "edgeplan/errors.hpp"

namespace edgeplan {

Money Money::ParseDollars(std::string_view text) {
  const std::string original(text);
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  if (!text.empty() && text.front() == '$') text.remove_prefix(1);

  std::int64_t whole = 0;
  std::int64_t fraction = 0;
  int fraction_digits = 0;
  bool seen_point = false;
  bool seen_digit = false;
  for (char c : text) {
    if (c == '.' && !seen_point) {
      seen_point = true;
      continue;
    }
    if (c < '0' || c > '9') throw MalformedInput("not a dollar amount: '" + original + "'");
    seen_digit = true;
    if (seen_point) {
      if (++fraction_digits > 6) throw MalformedInput("more than six decimals: '" + original + "'");
      fraction = fraction * 10 + (c - '0');
    } else {
      whole = whole * 10 + (c - '0');
      if (whole > 9'000'000'000'000) throw MalformedInput("amount too large: '" + original + "'");
    }
  }
  if (!seen_digit) throw MalformedInput("not a dollar amount: '" + original + "'");
  for (int i = fraction_digits; i < 6; ++i) fraction *= 10;
  const std::int64_t micros = whole * 1'000'000 + fraction;
  return Money(negative ? -micros : micros);
}

std::string Money::ToDollarString() const {
  const std::int64_t magnitude = micros_ < 0 ? -micros_ : micros_;
  std::string frac = std::to_string(magnitude % 1'000'000);
  frac.insert(0, 6 - frac.size(), '0');
  return (micros_ < 0 ? "-" : "") + std::to_string(magnitude / 1'000'000) + "." + frac;
}

}  // namespace edgeplan

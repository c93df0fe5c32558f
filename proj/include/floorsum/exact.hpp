/*
 * Copyright 2026 The floorsum Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

namespace floorsum {

/// Raised when an exact intermediate does not fit the 64-bit result type.
/// Wraparound is never silent.
class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

/// Malformed rational token.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Zero denominator, in construction or parsing.
class ZeroDenominatorError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

__extension__ typedef __int128 i128;

/// Narrows a 128-bit intermediate, throwing OverflowError when it does not fit.
std::int64_t narrow(i128 value, const char* what = "integer result");

/// Floor division, floor semantics for every sign combination.
/// Throws std::domain_error("division by zero") for b == 0.
std::int64_t floor_div(std::int64_t a, std::int64_t b);
i128 floor_div(i128 a, i128 b);

/// Non-negative modulus: a - b*floor(a/b) for b > 0.
i128 floor_mod(i128 a, i128 b);

/// Non-negative gcd; gcd(a, 0) = |a|. Throws std::domain_error for (0, 0).
std::int64_t gcd(std::int64_t a, std::int64_t b);

/// Exact reduced fraction num/den with den > 0 and gcd(|num|, den) = 1.
/// Zero is 0/1.
class Rational {
 public:
  constexpr Rational() = default;
  /// Integer value n/1.
  constexpr Rational(std::int64_t n) : num_(n) {}  // NOLINT(google-explicit-constructor)

  /// Reduces num/den. Throws ZeroDenominatorError when den == 0.
  static Rational normalize(std::int64_t num, std::int64_t den);
  /// Same, from 128-bit intermediates; OverflowError if the reduced value
  /// does not fit.
  static Rational normalize_wide(i128 num, i128 den);

  /// Parses "[+-]digits[/digits]" with no whitespace.
  static Rational parse(std::string_view token);

  constexpr std::int64_t num() const { return num_; }
  constexpr std::int64_t den() const { return den_; }
  constexpr bool is_integer() const { return den_ == 1; }

  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }
  std::string to_string() const;

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational operator-() const;

  friend constexpr bool operator==(const Rational&, const Rational&) = default;
  friend bool operator<(const Rational& a, const Rational& b);

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

Rational rational_normalize(std::int64_t num, std::int64_t den);

/// Greatest integer <= r.
std::int64_t rational_floor(const Rational& r);

/// r - floor(r), always in [0, 1).
Rational fractional_part(const Rational& r);

}  // namespace floorsum

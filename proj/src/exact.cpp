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

#include "floorsum/exact.hpp"

#include <limits>
#include <utility>
#include <ostream>

namespace floorsum {

namespace {

constexpr i128 kInt64Min = std::numeric_limits<std::int64_t>::min();
constexpr i128 kInt64Max = std::numeric_limits<std::int64_t>::max();

i128 abs128(i128 v) { return v < 0 ? -v : v; }

i128 gcd128(i128 a, i128 b) {
  a = abs128(a);
  b = abs128(b);
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace

std::int64_t narrow(i128 value, const char* what) {
  if (value < kInt64Min || value > kInt64Max) {
    throw OverflowError(std::string("overflow: ") + what + " exceeds 64 bits");
  }
  return static_cast<std::int64_t>(value);
}

i128 floor_div(i128 a, i128 b) {
  if (b == 0) throw std::domain_error("division by zero");
  i128 q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  // INT64_MIN / -1 is the one case that leaves the 64-bit range.
  return narrow(floor_div(static_cast<i128>(a), static_cast<i128>(b)), "floor_div");
}

i128 floor_mod(i128 a, i128 b) { return a - b * floor_div(a, b); }

std::int64_t gcd(std::int64_t a, std::int64_t b) {
  if (a == 0 && b == 0) throw std::domain_error("undefined gcd");
  // Binary gcd on magnitudes; |INT64_MIN| is representable as unsigned.
  std::uint64_t u = a < 0 ? 0 - static_cast<std::uint64_t>(a) : static_cast<std::uint64_t>(a);
  std::uint64_t v = b < 0 ? 0 - static_cast<std::uint64_t>(b) : static_cast<std::uint64_t>(b);
  if (u == 0) return narrow(static_cast<i128>(v), "gcd");
  if (v == 0) return narrow(static_cast<i128>(u), "gcd");
  const int shift = __builtin_ctzll(u | v);
  u >>= __builtin_ctzll(u);
  do {
    v >>= __builtin_ctzll(v);
    if (u > v) std::swap(u, v);
    v -= u;
  } while (v != 0);
  return narrow(static_cast<i128>(u << shift), "gcd");
}

Rational Rational::normalize_wide(i128 num, i128 den) {
  if (den == 0) throw ZeroDenominatorError("zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  if (num == 0) return Rational{};
  const i128 g = gcd128(num, den);
  Rational r;
  r.num_ = narrow(num / g, "rational numerator");
  r.den_ = narrow(den / g, "rational denominator");
  return r;
}

Rational Rational::normalize(std::int64_t num, std::int64_t den) {
  return normalize_wide(num, den);
}

Rational rational_normalize(std::int64_t num, std::int64_t den) {
  return Rational::normalize(num, den);
}

Rational Rational::parse(std::string_view token) {
  auto fail = [&](const char* why) -> ParseError {
    return ParseError("malformed rational '" + std::string(token) + "': " + why);
  };
  std::size_t pos = 0;
  bool negative = false;
  if (pos < token.size() && (token[pos] == '+' || token[pos] == '-')) {
    negative = token[pos] == '-';
    ++pos;
  }
  auto read_digits = [&](i128& out) {
    const std::size_t start = pos;
    out = 0;
    while (pos < token.size() && token[pos] >= '0' && token[pos] <= '9') {
      out = out * 10 + (token[pos] - '0');
      if (out > kInt64Max) throw OverflowError("overflow: rational token '" + std::string(token) + "'");
      ++pos;
    }
    return pos > start;
  };
  i128 num = 0;
  if (!read_digits(num)) throw fail("expected digits");
  i128 den = 1;
  if (pos < token.size() && token[pos] == '/') {
    ++pos;
    if (!read_digits(den)) throw fail("expected denominator digits");
    if (den == 0) throw ZeroDenominatorError("zero denominator in '" + std::string(token) + "'");
  }
  if (pos != token.size()) throw fail("unexpected character");
  return normalize_wide(negative ? -num : num, den);
}

std::string Rational::to_string() const {
  std::string s = std::to_string(num_);
  if (den_ != 1) s += "/" + std::to_string(den_);
  return s;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

Rational operator+(const Rational& a, const Rational& b) {
  return Rational::normalize_wide(static_cast<i128>(a.num_) * b.den_ + static_cast<i128>(b.num_) * a.den_,
                             static_cast<i128>(a.den_) * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
  return Rational::normalize_wide(static_cast<i128>(a.num_) * b.den_ - static_cast<i128>(b.num_) * a.den_,
                             static_cast<i128>(a.den_) * b.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
  return Rational::normalize_wide(static_cast<i128>(a.num_) * b.num_, static_cast<i128>(a.den_) * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.num_ == 0) throw std::domain_error("division by zero");
  return Rational::normalize_wide(static_cast<i128>(a.num_) * b.den_, static_cast<i128>(a.den_) * b.num_);
}

Rational Rational::operator-() const { return normalize_wide(-static_cast<i128>(num_), den_); }

bool operator<(const Rational& a, const Rational& b) {
  return static_cast<i128>(a.num_) * b.den_ < static_cast<i128>(b.num_) * a.den_;
}

std::int64_t rational_floor(const Rational& r) {
  return narrow(floor_div(static_cast<i128>(r.num()), static_cast<i128>(r.den())), "floor");
}

Rational fractional_part(const Rational& r) {
  const i128 rem = floor_mod(r.num(), r.den());
  return Rational::normalize_wide(rem, r.den());
}

}  // namespace floorsum

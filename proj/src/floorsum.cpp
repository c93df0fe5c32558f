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

#include "floorsum/floorsum.hpp"

#include <limits>
#include <sstream>
#include <stdexcept>

namespace floorsum {

namespace {

i128 checked_mul(i128 a, i128 b, const char* what) {
  i128 r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError(std::string("overflow: ") + what);
  return r;
}

i128 checked_add(i128 a, i128 b, const char* what) {
  i128 r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError(std::string("overflow: ") + what);
  return r;
}

// Inverse of a modulo mod, for gcd(a, mod) = 1 and mod >= 1.
i128 mod_inverse(i128 a, i128 mod) {
  i128 old_r = floor_mod(a, mod), r = mod;
  i128 old_s = 1, s = 0;
  while (r != 0) {
    const i128 q = old_r / r;
    i128 t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  return floor_mod(old_s, mod);
}

bool fits_int64(i128 v) {
  return v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max();
}

// floor((p + n k q) / (m q)) summed over k, 64-bit loop; caller guarantees
// that every numerator and the running sum stay in range.
std::int64_t brute_force_64(std::int64_t p, std::int64_t nq, std::int64_t mq, std::int64_t m) {
  std::int64_t sum = 0;
  std::int64_t numer = p;
  for (std::int64_t k = 0; k < m; ++k) {
    std::int64_t quot = numer / mq;
    if (numer % mq != 0 && numer < 0) --quot;
    sum += quot;
    numer += nq;
  }
  return sum;
}

}  // namespace

void FloorSumInstance::validate() const {
  if (m < 1) throw std::domain_error("m must be positive");
}

GcdDecomposition decompose(std::int64_t m, std::int64_t n) {
  if (m < 1) throw std::domain_error("m must be positive");
  GcdDecomposition g;
  g.d = gcd(m, n);
  g.m_prime = m / g.d;
  g.n_prime = n / g.d;
  return g;
}

i128 closed_form_numerator(std::int64_t m, std::int64_t n) {
  const std::int64_t d = gcd(m, n);
  return (static_cast<i128>(m) - 1) * (static_cast<i128>(n) - 1) + (d - 1);
}

std::int64_t closed_form_sum(const FloorSumInstance& inst) {
  inst.validate();
  const std::int64_t d = gcd(inst.m, inst.n);
  const i128 numerator = (static_cast<i128>(inst.m) - 1) * (static_cast<i128>(inst.n) - 1) + (d - 1);
  // floor(x / d) with x = p/q is floor(p / (q d)); 64-bit division when q d fits.
  i128 floor_x_over_d;
  std::int64_t qd;
  if (!__builtin_mul_overflow(inst.x.den(), d, &qd)) {
    const std::int64_t p = inst.x.num();
    std::int64_t quot = p / qd;
    if (p % qd != 0 && p < 0) --quot;
    floor_x_over_d = quot;
  } else {
    floor_x_over_d = floor_div(static_cast<i128>(inst.x.num()), static_cast<i128>(inst.x.den()) * d);
  }
  const i128 total = checked_add(numerator >> 1, checked_mul(d, floor_x_over_d, "d*floor(x/d)"), "closed form");
  return narrow(total, "closed form sum");
}

std::int64_t brute_force_sum(const FloorSumInstance& inst) {
  inst.validate();
  const i128 p = inst.x.num();
  const i128 q = inst.x.den();
  const i128 nq = checked_mul(inst.n, q, "n*q");
  const i128 mq = checked_mul(inst.m, q, "m*q");
  const i128 last = checked_add(p, checked_mul(inst.m - 1, nq, "(m-1)*n*q"), "oracle numerator");
  // Each term lies between the first and last numerator over mq, so the sum
  // is bounded by m times the larger magnitude.
  const i128 term_bound = std::max(p < 0 ? -p : p, last < 0 ? -last : last) / mq + 1;
  const i128 sum_bound = checked_mul(term_bound, inst.m, "oracle sum");

  // The loop walks numerators monotonically from p to last + nq.
  if (fits_int64(p) && fits_int64(mq) && fits_int64(nq) && fits_int64(last + nq) && fits_int64(sum_bound)) {
    return brute_force_64(static_cast<std::int64_t>(p), static_cast<std::int64_t>(nq),
                          static_cast<std::int64_t>(mq), inst.m);
  }

  i128 sum = 0;
  i128 numer = p;
  for (std::int64_t k = 0; k < inst.m; ++k) {
    sum += floor_div(numer, mq);
    numer += nq;
  }
  return narrow(sum, "oracle sum");
}

std::int64_t hermite_sum(std::int64_t m, const Rational& x) {
  if (m < 1) throw std::domain_error("m must be positive");
  return closed_form_sum({m, 1, Rational(m) * x});
}

HitSet list_integer_hits(const FloorSumInstance& inst) {
  inst.validate();
  HitSet out;
  if (!inst.x.is_integer()) return out;
  const GcdDecomposition g = decompose(inst.m, inst.n);
  const i128 x = inst.x.num();
  if (floor_mod(x, g.d) != 0) return out;
  // n' k = -x/d (mod m'), gcd(n', m') = 1.
  i128 k0 = 0;
  if (g.m_prime > 1) {
    const i128 rhs = floor_mod(-(x / g.d), g.m_prime);
    const i128 inv = mod_inverse(g.n_prime, g.m_prime);
    k0 = floor_mod(rhs * inv, g.m_prime);
  }
  out.hits.reserve(static_cast<std::size_t>(g.d));
  for (std::int64_t r = 0; r < g.d; ++r) {
    out.hits.push_back(static_cast<std::int64_t>(k0) + r * g.m_prime);
  }
  return out;
}

HitSet list_integer_hits_scan(const FloorSumInstance& inst) {
  inst.validate();
  HitSet out;
  const i128 p = inst.x.num();
  const i128 nq = checked_mul(inst.n, inst.x.den(), "n*q");
  const i128 mq = checked_mul(inst.m, inst.x.den(), "m*q");
  i128 numer = floor_mod(p, mq);
  const i128 step = floor_mod(nq, mq);
  for (std::int64_t k = 0; k < inst.m; ++k) {
    if (numer == 0) out.hits.push_back(k);
    numer += step;
    if (numer >= mq) numer -= mq;
  }
  return out;
}

std::string check_hit_structure(const FloorSumInstance& inst, const HitSet& hits) {
  const GcdDecomposition g = decompose(inst.m, inst.n);
  const bool expect_hits = inst.x.is_integer() && floor_mod(inst.x.num(), g.d) == 0;
  std::ostringstream why;
  if (hits.empty()) {
    if (expect_hits) return "hit set empty although x is an integer divisible by d";
    return {};
  }
  if (!expect_hits) return "hit set nonempty although x is not an integer multiple of d";
  if (hits.size() != static_cast<std::size_t>(g.d)) {
    why << "hit set has " << hits.size() << " elements, expected d = " << g.d;
    return why.str();
  }
  if (hits.hits.front() < 0 || hits.hits.front() >= g.m_prime) {
    why << "first hit " << hits.hits.front() << " not below m' = " << g.m_prime;
    return why.str();
  }
  for (std::size_t i = 0; i < hits.size(); ++i) {
    const std::int64_t k = hits.hits[i];
    if (k < 0 || k >= inst.m) {
      why << "hit " << k << " outside [0, m)";
      return why.str();
    }
    const i128 numer = static_cast<i128>(inst.x.num()) + static_cast<i128>(inst.n) * k * inst.x.den();
    if (floor_mod(numer, static_cast<i128>(inst.m) * inst.x.den()) != 0) {
      why << "k = " << k << " is not a hit";
      return why.str();
    }
    if (i > 0 && k - hits.hits[i - 1] != g.m_prime) {
      why << "hits " << hits.hits[i - 1] << " and " << k << " not spaced by m' = " << g.m_prime;
      return why.str();
    }
  }
  return {};
}

}  // namespace floorsum

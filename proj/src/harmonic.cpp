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

#include "floorsum/harmonic.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace floorsum::harmonic {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kSingularThreshold = 1e-12;
constexpr double kNonHitGuard = 1e-3;

i128 checked_mul(i128 a, i128 b) {
  i128 r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("overflow: exact phase");
  return r;
}

// frac(r) as a double in [0, 1).
double turns_of(const Rational& r) { return fractional_part(r).to_double(); }

// sin(pi r), phase reduced exactly.
double sin_pi(const Rational& r) { return kernels::sin_2pi(turns_of(r / Rational(2))); }

double sin_of(const std::optional<Rational>& pi_multiple, double radians) {
  return pi_multiple ? sin_pi(*pi_multiple) : std::sin(radians);
}

double turns_from(const std::optional<Rational>& pi_multiple, double radians) {
  return pi_multiple ? turns_of(*pi_multiple / Rational(2)) : radians / kTwoPi;
}

}  // namespace

SineSumSpec SineSumSpec::exact(const Rational& z_pi, const Rational& a_pi, std::int64_t p) {
  SineSumSpec s;
  s.z = z_pi.to_double() * kPi;
  s.a = a_pi.to_double() * kPi;
  s.p = p;
  s.z_pi = z_pi;
  s.a_pi = a_pi;
  return s;
}

double sawtooth_partial_sum(const FourierConfig& cfg, const kernels::KernelTable& k) {
  if (cfg.terms < 1) throw std::domain_error("terms must be positive");
  const double series = k.harmonic_sine_series(cfg.x, 1, cfg.terms);
  return (cfg.x - 0.5) + series / kPi;
}

double floor_approx_error(double x, std::int64_t terms, const kernels::KernelTable& k) {
  if (x == std::floor(x)) throw std::domain_error("discontinuity point");
  return std::fabs(sawtooth_partial_sum({x, terms}, k) - std::floor(x));
}

double sine_sum_direct(const SineSumSpec& spec, const kernels::KernelTable& k) {
  if (spec.p < 0) throw std::domain_error("p must be non-negative");
  const std::int64_t count = spec.p + 1;
  if (spec.z_pi && spec.a_pi) {
    // Phase_k = (z_pi + a_pi k) / 2 turns, reduced in exact integers.
    const i128 zn = spec.z_pi->num(), zd = spec.z_pi->den();
    const i128 an = spec.a_pi->num(), ad = spec.a_pi->den();
    const i128 den = checked_mul(2 * zd, ad);
    i128 phase = floor_mod(checked_mul(zn, ad), den);
    const i128 step = floor_mod(checked_mul(an, zd), den);
    std::vector<double> turns(static_cast<std::size_t>(count));
    for (auto& t : turns) {
      t = static_cast<double>(phase) / static_cast<double>(den);
      phase += step;
      if (phase >= den) phase -= den;
    }
    return kernels::sum_sin_turns(turns, k);
  }
  return k.affine_sine_sum(turns_from(spec.z_pi, spec.z), turns_from(spec.a_pi, spec.a), count);
}

bool sine_sum_is_degenerate(const SineSumSpec& spec) {
  if (spec.a_pi) return spec.a_pi->is_integer() && spec.a_pi->num() % 2 == 0;
  return std::fabs(std::sin(spec.a / 2.0)) < kSingularThreshold;
}

double sine_sum_closed(const SineSumSpec& spec) {
  if (spec.p < 0) throw std::domain_error("p must be non-negative");
  const double terms = static_cast<double>(spec.p + 1);
  if (sine_sum_is_degenerate(spec)) return terms * sin_of(spec.z_pi, spec.z);

  if (spec.z_pi && spec.a_pi) {
    const Rational& a = *spec.a_pi;
    const Rational half_a = a / Rational(2);
    const Rational span = a * Rational(spec.p + 1) / Rational(2);
    const Rational centre = *spec.z_pi + a * Rational(spec.p) / Rational(2);
    return sin_pi(span) * sin_pi(centre) / sin_pi(half_a);
  }
  const double z = spec.z_pi ? spec.z_pi->to_double() * kPi : spec.z;
  const double a = spec.a_pi ? spec.a_pi->to_double() * kPi : spec.a;
  const double p = static_cast<double>(spec.p);
  return std::sin(a * (p + 1.0) / 2.0) * std::sin(z + a * p / 2.0) / std::sin(a / 2.0);
}

double grouped_sine_sum(const FloorSumInstance& inst, std::int64_t j) {
  inst.validate();
  if (j < 1) throw std::domain_error("j must be positive");
  const GcdDecomposition g = decompose(inst.m, inst.n);
  if (j % g.m_prime != 0) return 0.0;
  const std::int64_t l = j / g.m_prime;
  const Rational phase = Rational(l) * inst.x / Rational(g.d);
  return static_cast<double>(inst.m) * kernels::sin_2pi(turns_of(phase));
}

double grouped_sine_sum_direct(const FloorSumInstance& inst, std::int64_t j, const kernels::KernelTable& k) {
  inst.validate();
  if (j < 1) throw std::domain_error("j must be positive");
  // Phase_k = j (p + n k q) / (m q) turns with x = p/q.
  const i128 q = inst.x.den();
  const i128 den = checked_mul(inst.m, q);
  i128 phase = floor_mod(checked_mul(j, inst.x.num()), den);
  const i128 step = floor_mod(checked_mul(checked_mul(j, inst.n), q), den);
  std::vector<double> turns(static_cast<std::size_t>(inst.m));
  for (auto& t : turns) {
    t = static_cast<double>(phase) / static_cast<double>(den);
    phase += step;
    if (phase >= den) phase -= den;
  }
  return kernels::sum_sin_turns(turns, k);
}

double distance_to_integer(const Rational& r) {
  const Rational f = fractional_part(r);
  const Rational other = Rational(1) - f;
  return (f < other ? f : other).to_double();
}

double series_identity_residual(const FloorSumInstance& inst, std::int64_t terms, const kernels::KernelTable& k) {
  inst.validate();
  if (terms < 1) throw std::domain_error("terms must be positive");
  const GcdDecomposition g = decompose(inst.m, inst.n);
  const Rational x_over_d = inst.x / Rational(g.d);
  const bool has_hits = !list_integer_hits(inst).empty();
  if (!has_hits && distance_to_integer(x_over_d) < kNonHitGuard) {
    throw std::domain_error("x/d too close to an integer for the truncated series");
  }

  // Exact part: x + ((m-1) n - m) / 2 [+ d/2] - S.
  const i128 linear = (static_cast<i128>(inst.m) - 1) * inst.n - inst.m + (has_hits ? g.d : 0);
  const Rational exact_part = inst.x + Rational::normalize_wide(linear, 2) - Rational(closed_form_sum(inst));

  // Only j = l m' contribute; grouped(l m') / (l m') = d sin(2 pi l x/d) / l.
  const std::int64_t depth = terms / g.m_prime;
  double series = 0.0;
  if (depth >= 1) {
    series = static_cast<double>(g.d) * k.harmonic_sine_series(turns_of(x_over_d), 1, depth);
  }
  return std::fabs(exact_part.to_double() + series / kPi);
}

}  // namespace floorsum::harmonic

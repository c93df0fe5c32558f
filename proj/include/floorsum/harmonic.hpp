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

// Floating-point checks of the trigonometric route to the floor sum:
//
//   floor(x) = x - 1/2 + (1/pi) sum_{j>=1} sin(2 pi j x) / j      (x not integral)
//
// its truncations, the closed form of sum_k sin(z + a k), and the grouped
// sums sum_k sin(2 pi j (x + n k) / m) that survive only for j = l m'.

#include <cstdint>
#include <optional>

#include "floorsum/exact.hpp"
#include "floorsum/floorsum.hpp"
#include "floorsum/kernels.hpp"

namespace floorsum::harmonic {

struct FourierConfig {
  double x = 0.0;
  std::int64_t terms = 1;  // J >= 1
};

/// Parameters of sum_{k=0}^{p} sin(z + a k). When z_pi / a_pi are set they
/// mean z = z_pi * pi and a = a_pi * pi and override the float fields.
struct SineSumSpec {
  double z = 0.0;
  double a = 0.0;
  std::int64_t p = 0;
  std::optional<Rational> z_pi;
  std::optional<Rational> a_pi;

  static SineSumSpec exact(const Rational& z_pi, const Rational& a_pi, std::int64_t p);
};

/// f_J(x) = x - 1/2 + (1/pi) sum_{j=1}^{J} sin(2 pi j x) / j.
/// At integer x every sine term is exactly zero, so f_J(n) = n - 1/2.
double sawtooth_partial_sum(const FourierConfig& cfg, const kernels::KernelTable& k = kernels::active());

/// |f_J(x) - floor(x)|. Throws std::domain_error("discontinuity point") at integer x.
double floor_approx_error(double x, std::int64_t terms, const kernels::KernelTable& k = kernels::active());

double sine_sum_direct(const SineSumSpec& spec, const kernels::KernelTable& k = kernels::active());

/// csc(a/2) sin(a(p+1)/2) sin(z + a p/2), or (p+1) sin z when a is a multiple
/// of 2 pi (exactly, via a_pi, else |sin(a/2)| < 1e-12).
double sine_sum_closed(const SineSumSpec& spec);

/// True when sine_sum_closed takes the (p+1) sin z branch.
bool sine_sum_is_degenerate(const SineSumSpec& spec);

/// sum_{k=0}^{m-1} sin(2 pi j (x + n k) / m) in closed form: zero unless
/// m' | j, and m sin(2 pi l x / d) for j = l m'.
double grouped_sine_sum(const FloorSumInstance& inst, std::int64_t j);

/// Same sum by direct accumulation over k (phases reduced exactly).
double grouped_sine_sum_direct(const FloorSumInstance& inst, std::int64_t j,
                               const kernels::KernelTable& k = kernels::active());

/// Truncated series form of the floor sum, summed over j = l m' <= terms:
///   R = x + (m-1) n / 2 - m / 2 + (1/pi) sum_j grouped(j) / j  [+ d/2 on hits]
/// Returns |R - closed_form_sum(inst)|.
///
/// Without hits, requires dist(x/d, Z) >= 1e-3 (std::domain_error otherwise).
double series_identity_residual(const FloorSumInstance& inst, std::int64_t terms,
                                const kernels::KernelTable& k = kernels::active());

/// Distance from r to the nearest integer, computed exactly then rounded.
double distance_to_integer(const Rational& r);

}  // namespace floorsum::harmonic

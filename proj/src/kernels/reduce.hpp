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

// Shared scalar helpers for the kernel variants, so every variant (and its
// scalar tail loop) performs the identical reduction.

#include <cmath>
#include <cstdint>

namespace floorsum::kernels::detail {

// Internal linkage: the AVX2 unit includes this header under -mfma, so these
// must not be merged with the baseline copies by the linker.
namespace {

inline constexpr double kTwoPi = 6.283185307179586476925286766559;

/// Neumaier accumulator.
struct Compensated {
  double sum = 0.0;
  double carry = 0.0;

  void add(double v) {
    const double t = sum + v;
    if (std::fabs(sum) >= std::fabs(v)) {
      carry += (sum - t) + v;
    } else {
      carry += (v - t) + sum;
    }
    sum = t;
  }
  double value() const { return sum + carry; }
};

/// j*x mod 1 into roughly [-0.5, 0.5]; the product error is recovered with
/// an FMA so the reduced phase is accurate to ~1 ulp of 0.5.
inline double phase_of_product(double j, double x) {
  const double hi = j * x;
  const double lo = std::fma(j, x, -hi);
  return (hi - std::nearbyint(hi)) + lo;
}

/// z + a*k mod 1 into roughly [-0.5, 0.5].
inline double phase_of_affine(double z, double a, double k) {
  const double t = std::fma(a, k, z);
  return t - std::nearbyint(t);
}

inline double phase_of(double t) { return t - std::nearbyint(t); }

}  // namespace

}  // namespace floorsum::kernels::detail

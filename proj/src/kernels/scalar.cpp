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

#include <cmath>

#include "floorsum/kernels.hpp"
#include "reduce.hpp"

namespace floorsum::kernels {

double sin_2pi(double turns) {
  const double r = detail::phase_of(turns);
  // Octant reduction: r = q/4 + s with |s| <= 1/8.
  const double q = std::nearbyint(4.0 * r);
  const double s = r - 0.25 * q;
  const double theta = detail::kTwoPi * s;
  switch (static_cast<int>(q) & 3) {
    case 0:
      return std::sin(theta);
    case 1:
      return std::cos(theta);
    case 2:
      return -std::sin(theta);
    default:
      return -std::cos(theta);
  }
}

namespace {

double scalar_sum_sin_turns(const double* turns, std::size_t count) {
  detail::Compensated acc;
  for (std::size_t i = 0; i < count; ++i) acc.add(sin_2pi(turns[i]));
  return acc.value();
}

double scalar_harmonic_sine_series(double x, std::int64_t first, std::int64_t last) {
  detail::Compensated acc;
  for (std::int64_t j = first; j <= last; ++j) {
    const double jd = static_cast<double>(j);
    acc.add(sin_2pi(detail::phase_of_product(jd, x)) / jd);
  }
  return acc.value();
}

double scalar_affine_sine_sum(double z_turns, double a_turns, std::int64_t count) {
  detail::Compensated acc;
  for (std::int64_t k = 0; k < count; ++k) {
    acc.add(sin_2pi(detail::phase_of_affine(z_turns, a_turns, static_cast<double>(k))));
  }
  return acc.value();
}

constexpr KernelTable kScalar{
    Isa::scalar, "scalar", scalar_sum_sin_turns, scalar_harmonic_sine_series, scalar_affine_sine_sum,
};

}  // namespace

const KernelTable& scalar_kernels() { return kScalar; }

}  // namespace floorsum::kernels

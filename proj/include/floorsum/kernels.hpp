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

// Floating-point inner loops of the harmonic module.
//
// Every kernel works in "turns": sin(2*pi*t). Arguments are reduced modulo 1
// before the multiplication by 2*pi, so integer and half-integer turns give
// exact zeros and large phase indices keep full absolute accuracy.
//
// The scalar table is the reference. SIMD tables must agree with it to within
// a few ulps per term (see tests/test_kernels.cpp); they are not required to
// be bit-identical because lane-wise compensated accumulation reorders the sum.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace floorsum::kernels {

enum class Isa { scalar, avx2 };

struct KernelTable {
  Isa isa;
  const char* name;

  /// sum_i sin(2 pi turns[i]), compensated.
  double (*sum_sin_turns)(const double* turns, std::size_t count);

  /// sum_{j=first}^{last} sin(2 pi j x) / j, compensated, ascending j.
  double (*harmonic_sine_series)(double x, std::int64_t first, std::int64_t last);

  /// sum_{k=0}^{count-1} sin(2 pi (z + a k)), compensated.
  double (*affine_sine_sum)(double z_turns, double a_turns, std::int64_t count);
};

/// Scalar reference implementation of sin(2 pi t) with exact reduction.
double sin_2pi(double turns);

const KernelTable& scalar_kernels();

/// True when the variant was compiled in and the running CPU supports it.
bool isa_available(Isa isa);

/// Throws std::runtime_error when the variant is unavailable.
const KernelTable& kernels_for(Isa isa);

/// The table selected once per process: the widest available variant, unless
/// the FLOORSUM_ISA environment variable names another ("scalar", "avx2").
const KernelTable& active();

Isa parse_isa(std::string_view name);
std::string_view isa_name(Isa isa);

inline double sum_sin_turns(std::span<const double> turns, const KernelTable& k = active()) {
  return k.sum_sin_turns(turns.data(), turns.size());
}

}  // namespace floorsum::kernels

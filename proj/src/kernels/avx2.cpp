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

// AVX2 + FMA variants, 4 doubles per lane group. Compiled with -mavx2 -mfma;
// only reached through the dispatch table after a CPUID check.

#include <immintrin.h>

#include "floorsum/kernels.hpp"
#include "reduce.hpp"

namespace floorsum::kernels {

namespace {

constexpr int kRound = _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC;

inline __m256d abs_pd(__m256d v) { return _mm256_andnot_pd(_mm256_set1_pd(-0.0), v); }

// Reduce to [-0.5, 0.5] turns.
inline __m256d phase_pd(__m256d t) { return _mm256_sub_pd(t, _mm256_round_pd(t, kRound)); }

// sin(2 pi r) for |r| <~ 0.5, octant reduction followed by minimax
// polynomials on [-pi/4, pi/4] (Cephes sin/cos coefficients).
inline __m256d sin_2pi_pd(__m256d r) {
  const __m256d q = _mm256_round_pd(_mm256_mul_pd(r, _mm256_set1_pd(4.0)), kRound);
  const __m256d s = _mm256_fnmadd_pd(q, _mm256_set1_pd(0.25), r);
  const __m256d x = _mm256_mul_pd(s, _mm256_set1_pd(detail::kTwoPi));
  const __m256d z = _mm256_mul_pd(x, x);

  __m256d ps = _mm256_set1_pd(1.58962301576546568060E-10);
  ps = _mm256_fmadd_pd(ps, z, _mm256_set1_pd(-2.50507477628578072866E-8));
  ps = _mm256_fmadd_pd(ps, z, _mm256_set1_pd(2.75573136213857245213E-6));
  ps = _mm256_fmadd_pd(ps, z, _mm256_set1_pd(-1.98412698295895385996E-4));
  ps = _mm256_fmadd_pd(ps, z, _mm256_set1_pd(8.33333333332211858878E-3));
  ps = _mm256_fmadd_pd(ps, z, _mm256_set1_pd(-1.66666666666666307295E-1));
  const __m256d sin_x = _mm256_fmadd_pd(_mm256_mul_pd(x, z), ps, x);

  __m256d pc = _mm256_set1_pd(-1.13585365213876817300E-11);
  pc = _mm256_fmadd_pd(pc, z, _mm256_set1_pd(2.08757008419747316778E-9));
  pc = _mm256_fmadd_pd(pc, z, _mm256_set1_pd(-2.75573141792967388112E-7));
  pc = _mm256_fmadd_pd(pc, z, _mm256_set1_pd(2.48015872888517045348E-5));
  pc = _mm256_fmadd_pd(pc, z, _mm256_set1_pd(-1.38888888888730564116E-3));
  pc = _mm256_fmadd_pd(pc, z, _mm256_set1_pd(4.16666666666665929218E-2));
  const __m256d cos_x =
      _mm256_fmadd_pd(_mm256_mul_pd(z, z), pc, _mm256_fnmadd_pd(_mm256_set1_pd(0.5), z, _mm256_set1_pd(1.0)));

  const __m128i qi = _mm256_cvtpd_epi32(q);
  const __m256i swap = _mm256_cmpeq_epi64(_mm256_cvtepi32_epi64(_mm_and_si128(qi, _mm_set1_epi32(1))),
                                          _mm256_set1_epi64x(1));
  const __m256i sign = _mm256_slli_epi64(_mm256_cvtepi32_epi64(_mm_and_si128(qi, _mm_set1_epi32(2))), 62);
  const __m256d picked = _mm256_blendv_pd(sin_x, cos_x, _mm256_castsi256_pd(swap));
  return _mm256_xor_pd(picked, _mm256_castsi256_pd(sign));
}

struct CompensatedPd {
  __m256d sum = _mm256_setzero_pd();
  __m256d carry = _mm256_setzero_pd();

  void add(__m256d v) {
    const __m256d t = _mm256_add_pd(sum, v);
    const __m256d big_sum = _mm256_cmp_pd(abs_pd(sum), abs_pd(v), _CMP_GE_OQ);
    const __m256d when_sum = _mm256_add_pd(_mm256_sub_pd(sum, t), v);
    const __m256d when_v = _mm256_add_pd(_mm256_sub_pd(v, t), sum);
    carry = _mm256_add_pd(carry, _mm256_blendv_pd(when_v, when_sum, big_sum));
    sum = t;
  }

  // Lane order 0..3, then carries.
  detail::Compensated horizontal() const {
    alignas(32) double s[4];
    alignas(32) double c[4];
    _mm256_store_pd(s, sum);
    _mm256_store_pd(c, carry);
    detail::Compensated acc;
    for (double v : s) acc.add(v);
    acc.carry += (c[0] + c[1]) + (c[2] + c[3]);
    return acc;
  }
};

double avx2_sum_sin_turns(const double* turns, std::size_t count) {
  CompensatedPd vacc;
  std::size_t i = 0;
  for (; i + 4 <= count; i += 4) {
    vacc.add(sin_2pi_pd(phase_pd(_mm256_loadu_pd(turns + i))));
  }
  detail::Compensated acc = vacc.horizontal();
  for (; i < count; ++i) acc.add(sin_2pi(turns[i]));
  return acc.value();
}

double avx2_harmonic_sine_series(double x, std::int64_t first, std::int64_t last) {
  CompensatedPd vacc;
  const __m256d xv = _mm256_set1_pd(x);
  const __m256d one = _mm256_set1_pd(1.0);
  __m256d jv = _mm256_add_pd(_mm256_set1_pd(static_cast<double>(first)), _mm256_set_pd(3.0, 2.0, 1.0, 0.0));
  const __m256d step = _mm256_set1_pd(4.0);
  std::int64_t j = first;
  for (; j + 3 <= last; j += 4) {
    const __m256d hi = _mm256_mul_pd(jv, xv);
    const __m256d lo = _mm256_fmsub_pd(jv, xv, hi);
    const __m256d r = _mm256_add_pd(phase_pd(hi), lo);
    vacc.add(_mm256_mul_pd(sin_2pi_pd(r), _mm256_div_pd(one, jv)));
    jv = _mm256_add_pd(jv, step);
  }
  detail::Compensated acc = vacc.horizontal();
  for (; j <= last; ++j) {
    const double jd = static_cast<double>(j);
    acc.add(sin_2pi(detail::phase_of_product(jd, x)) / jd);
  }
  return acc.value();
}

double avx2_affine_sine_sum(double z_turns, double a_turns, std::int64_t count) {
  CompensatedPd vacc;
  const __m256d zv = _mm256_set1_pd(z_turns);
  const __m256d av = _mm256_set1_pd(a_turns);
  __m256d kv = _mm256_set_pd(3.0, 2.0, 1.0, 0.0);
  const __m256d step = _mm256_set1_pd(4.0);
  std::int64_t k = 0;
  for (; k + 4 <= count; k += 4) {
    vacc.add(sin_2pi_pd(phase_pd(_mm256_fmadd_pd(av, kv, zv))));
    kv = _mm256_add_pd(kv, step);
  }
  detail::Compensated acc = vacc.horizontal();
  for (; k < count; ++k) {
    acc.add(sin_2pi(detail::phase_of_affine(z_turns, a_turns, static_cast<double>(k))));
  }
  return acc.value();
}

constexpr KernelTable kAvx2{
    Isa::avx2, "avx2", avx2_sum_sin_turns, avx2_harmonic_sine_series, avx2_affine_sine_sum,
};

}  // namespace

const KernelTable& avx2_kernels() { return kAvx2; }

}  // namespace floorsum::kernels

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

#include "floorsum/bench.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>
#include <vector>

namespace floorsum {

namespace {

using Clock = std::chrono::steady_clock;

// Keeps the optimizer from hoisting or discarding the measured call.
template <typename T>
inline void do_not_optimize(T& value) {
  asm volatile("" : "+m"(value) : : "memory");
}

// Aim for batches of at least this many calls' worth of work per sample.
constexpr std::int64_t kClosedFormBatch = 4096;
constexpr std::int64_t kOracleTermsPerSample = 1 << 14;

template <typename Fn>
TimingStats time_samples(std::int64_t iters, std::int64_t batch, Fn&& fn) {
  std::vector<double> samples;
  samples.reserve(static_cast<std::size_t>(iters));
  for (std::int64_t i = 0; i < iters; ++i) {
    const auto start = Clock::now();
    for (std::int64_t b = 0; b < batch; ++b) fn();
    const auto stop = Clock::now();
    samples.push_back(std::chrono::duration<double, std::nano>(stop - start).count() / static_cast<double>(batch));
  }
  std::sort(samples.begin(), samples.end());
  TimingStats t;
  t.min_ns = samples.front();
  t.max_ns = samples.back();
  const std::size_t mid = samples.size() / 2;
  t.median_ns = samples.size() % 2 == 1 ? samples[mid] : 0.5 * (samples[mid - 1] + samples[mid]);
  return t;
}

}  // namespace

BenchReport bench(const FloorSumInstance& inst, std::int64_t iters) {
  inst.validate();
  if (iters < 1) throw std::domain_error("iters must be positive");

  BenchReport report;
  report.instance = inst;
  report.iters = iters;

  // Warm-up doubles as the correctness gate.
  const std::int64_t closed = closed_form_sum(inst);
  const std::int64_t oracle = brute_force_sum(inst);
  if (closed != oracle) {
    std::ostringstream os;
    os << "correctness gate failed: closed form " << closed << " != oracle " << oracle << " for m=" << inst.m
       << " n=" << inst.n << " x=" << inst.x;
    throw CorrectnessGateError(os.str());
  }
  report.sum = closed;

  FloorSumInstance probe = inst;
  std::int64_t sink = 0;
  report.closed_form = time_samples(iters, kClosedFormBatch, [&] {
    do_not_optimize(probe);
    std::int64_t v = closed_form_sum(probe);
    do_not_optimize(v);
    sink ^= v;
  });
  const std::int64_t oracle_batch = std::max<std::int64_t>(1, kOracleTermsPerSample / inst.m);
  report.oracle = time_samples(iters, oracle_batch, [&] {
    do_not_optimize(probe);
    std::int64_t v = brute_force_sum(probe);
    do_not_optimize(v);
    sink ^= v;
  });
  do_not_optimize(sink);

  report.speedup = report.closed_form.median_ns > 0.0 ? report.oracle.median_ns / report.closed_form.median_ns : 0.0;
  return report;
}

}  // namespace floorsum

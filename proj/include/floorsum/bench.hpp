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
#include <stdexcept>

#include "floorsum/floorsum.hpp"

namespace floorsum {

/// The two evaluation paths disagreed; never reported as a timing.
class CorrectnessGateError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Per-call wall time in nanoseconds over the timed repetitions.
struct TimingStats {
  double median_ns = 0.0;
  double min_ns = 0.0;
  double max_ns = 0.0;
};

struct BenchReport {
  FloorSumInstance instance;
  std::int64_t sum = 0;
  std::int64_t iters = 0;
  TimingStats closed_form;
  TimingStats oracle;
  double speedup = 0.0;  // oracle median / closed-form median
};

/// Times closed_form_sum and brute_force_sum `iters` times each, after an
/// untimed warm-up and an equality gate. Closed-form samples time a batch of
/// calls and divide, so sub-timer-resolution latencies are still resolved.
BenchReport bench(const FloorSumInstance& inst, std::int64_t iters);

}  // namespace floorsum

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

#include <algorithm>
#include <atomic>
#include <sstream>
#include <thread>
#include <tuple>

#include "floorsum/floorsum.hpp"

namespace floorsum {

namespace {

void check_instance(const FloorSumInstance& inst, VerificationReport& report) {
  ++report.instances_checked;
  auto fail = [&](std::string detail) { report.counterexamples.push_back({inst.m, inst.n, inst.x, std::move(detail)}); };

  const std::int64_t closed = closed_form_sum(inst);
  const std::int64_t brute = brute_force_sum(inst);
  if (closed != brute) {
    std::ostringstream os;
    os << "closed form " << closed << " != oracle " << brute;
    fail(os.str());
  }

  if (closed_form_numerator(inst.m, inst.n) % 2 != 0) fail("(m-1)(n-1)+(d-1) is odd");

  const HitSet solved = list_integer_hits(inst);
  const HitSet scanned = list_integer_hits_scan(inst);
  if (solved != scanned) fail("congruence and scan hit sets differ");
  if (std::string why = check_hit_structure(inst, solved); !why.empty()) fail(std::move(why));
  if (!solved.empty()) {
    ++report.hit_instances;
    report.hits_total += solved.size();
  }
}

void run_shard(const VerifyBounds& b, std::int64_t m, VerificationReport& report) {
  for (std::int64_t n = -b.n_max; n <= b.n_max; ++n) {
    for (std::int64_t q = 1; q <= b.q_max; ++q) {
      for (std::int64_t p = -b.p_span; p <= b.p_span; ++p) {
        check_instance({m, n, Rational::normalize(p, q)}, report);
      }
    }
  }
}

}  // namespace

VerificationReport verify_range(const VerifyBounds& bounds, unsigned workers) {
  if (bounds.m_max < 1 || bounds.n_max < 0 || bounds.q_max < 1 || bounds.p_span < 1) {
    throw std::domain_error("verify bounds must satisfy m_max, q_max, p_span >= 1 and n_max >= 0");
  }
  workers = std::max(1u, workers);
  std::vector<VerificationReport> shards(static_cast<std::size_t>(bounds.m_max));
  std::atomic<std::int64_t> next{1};
  auto worker = [&] {
    for (std::int64_t m = next++; m <= bounds.m_max; m = next++) {
      run_shard(bounds, m, shards[static_cast<std::size_t>(m - 1)]);
    }
  };
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned i = 0; i < workers; ++i) pool.emplace_back(worker);
  }

  VerificationReport report;
  for (auto& s : shards) {
    report.instances_checked += s.instances_checked;
    report.hit_instances += s.hit_instances;
    report.hits_total += s.hits_total;
    for (auto& c : s.counterexamples) report.counterexamples.push_back(std::move(c));
  }
  std::sort(report.counterexamples.begin(), report.counterexamples.end(), [](const auto& a, const auto& b) {
    return std::tie(a.m, a.n, a.x, a.detail) < std::tie(b.m, b.n, b.x, b.detail);
  });
  return report;
}

}  // namespace floorsum

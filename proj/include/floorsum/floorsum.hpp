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
#include <string>
#include <vector>

#include "floorsum/exact.hpp"

namespace floorsum {

/// One full-period sum S(m, n, x) = sum_{k=0}^{m-1} floor((x + n k) / m).
struct FloorSumInstance {
  std::int64_t m = 1;
  std::int64_t n = 0;
  Rational x;

  /// Throws std::domain_error("m must be positive") unless m >= 1.
  void validate() const;
};

/// d = gcd(m, |n|), m = d m', n = d n'.
struct GcdDecomposition {
  std::int64_t d = 1;
  std::int64_t m_prime = 1;
  std::int64_t n_prime = 0;

  friend bool operator==(const GcdDecomposition&, const GcdDecomposition&) = default;
};

/// Ascending k in [0, m) with (x + n k) / m integral.
struct HitSet {
  std::vector<std::int64_t> hits;

  bool empty() const { return hits.empty(); }
  std::size_t size() const { return hits.size(); }
  friend bool operator==(const HitSet&, const HitSet&) = default;
};

GcdDecomposition decompose(std::int64_t m, std::int64_t n);

/// Constant-time evaluation:
///   S = ((m-1)(n-1) + (d-1)) / 2 + d * floor(x / d).
/// The numerator of the first term is always even, so the halving is exact.
std::int64_t closed_form_sum(const FloorSumInstance& inst);

/// Term-by-term evaluation in exact arithmetic, O(m).
std::int64_t brute_force_sum(const FloorSumInstance& inst);

/// sum_{k=0}^{m-1} floor(x + k/m), evaluated as closed_form_sum(m, 1, m x).
std::int64_t hermite_sum(std::int64_t m, const Rational& x);

/// Hits from the linear congruence n k = -x (mod m), O(d + log m).
HitSet list_integer_hits(const FloorSumInstance& inst);

/// Hits from a direct scan over k, O(m). Cross-check path.
HitSet list_integer_hits_scan(const FloorSumInstance& inst);

/// (m-1)(n-1) + (d-1); exposed so the parity lemma can be checked on its own.
i128 closed_form_numerator(std::int64_t m, std::int64_t n);

/// Empty string when `hits` satisfies every HitSet invariant for `inst`,
/// otherwise a description of the first violated one.
std::string check_hit_structure(const FloorSumInstance& inst, const HitSet& hits);

// --- grid verification ------------------------------------------------------

struct Counterexample {
  std::int64_t m = 0;
  std::int64_t n = 0;
  Rational x;
  std::string detail;

  friend bool operator==(const Counterexample&, const Counterexample&) = default;
};

struct VerificationReport {
  std::uint64_t instances_checked = 0;
  std::uint64_t hit_instances = 0;
  std::uint64_t hits_total = 0;
  std::vector<Counterexample> counterexamples;  // sorted by (m, n, x, detail)

  bool ok() const { return counterexamples.empty(); }
};

struct VerifyBounds {
  std::int64_t m_max = 1;
  std::int64_t n_max = 0;
  std::int64_t q_max = 1;
  std::int64_t p_span = 1;
};

/// Exhaustive comparison of closed_form_sum against brute_force_sum, with the
/// hit-set invariants, congruence/scan agreement and the parity lemma checked
/// on every grid point. Unreduced p/q pairs are visited as-is (duplicates are
/// checked again). The grid is sharded by m across `workers` threads; the
/// report does not depend on the worker count.
VerificationReport verify_range(const VerifyBounds& bounds, unsigned workers = 1);

}  // namespace floorsum

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

#include <cstdlib>
#include <stdexcept>
#include <string>

#include "floorsum/kernels.hpp"

namespace floorsum::kernels {

#if defined(FLOORSUM_HAVE_AVX2)
const KernelTable& avx2_kernels();
#endif

namespace {

bool cpu_has_avx2_fma() {
#if defined(FLOORSUM_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

const KernelTable& select_at_startup() {
  if (const char* forced = std::getenv("FLOORSUM_ISA"); forced != nullptr && *forced != '\0') {
    return kernels_for(parse_isa(forced));
  }
  if (isa_available(Isa::avx2)) return kernels_for(Isa::avx2);
  return scalar_kernels();
}

}  // namespace

Isa parse_isa(std::string_view name) {
  if (name == "scalar") return Isa::scalar;
  if (name == "avx2") return Isa::avx2;
  throw std::invalid_argument("unknown kernel ISA '" + std::string(name) + "'");
}

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::scalar:
      return "scalar";
    case Isa::avx2:
      return "avx2";
  }
  return "unknown";
}

bool isa_available(Isa isa) {
  switch (isa) {
    case Isa::scalar:
      return true;
    case Isa::avx2: {
      static const bool ok = cpu_has_avx2_fma();
      return ok;
    }
  }
  return false;
}

const KernelTable& kernels_for(Isa isa) {
  if (!isa_available(isa)) {
    throw std::runtime_error("kernel ISA '" + std::string(isa_name(isa)) + "' not available on this build/CPU");
  }
#if defined(FLOORSUM_HAVE_AVX2)
  if (isa == Isa::avx2) return avx2_kernels();
#endif
  return scalar_kernels();
}

const KernelTable& active() {
  static const KernelTable& table = select_at_startup();
  return table;
}

}  // namespace floorsum::kernels

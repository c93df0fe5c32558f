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

#include <iosfwd>
#include <string>
#include <vector>

namespace floorsum::cli {

/// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kCounterexamples = 1,  // verify found a mismatch
  kUsage = 2,            // unknown flag, missing or unparsable option
  kGateFailure = 3,      // bench paths disagreed
  kBadRational = 4,      // malformed rational token
  kZeroDenominator = 5,
  kPrecondition = 6,     // m < 1, terms < 1, iters < 1, ...
  kOverflow = 7,
};

/// Runs one command line. args[0] is the program name. Results go to `out`,
/// a single diagnostic line to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace floorsum::cli

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

#include <doctest.h>

#include <algorithm>
#include <array>
#include <cstdio>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "floorsum/cli.hpp"

namespace cli = floorsum::cli;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "floorsum");
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::size_t count_lines(const std::string& s) {
  std::size_t n = 0;
  for (char c : s) n += c == '\n';
  return n;
}

#ifdef FLOORSUM_CLI_PATH
std::string shell(const std::string& command) {
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(command.c_str(), "r"), pclose);
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 256> buf{};
  while (fgets(buf.data(), buf.size(), pipe.get()) != nullptr) out += buf.data();
  return out;
}
#endif

}  // namespace

TEST_CASE("eval, oracle and hits print single results") {
  auto r = run({"eval", "--m", "6", "--n", "4", "--x", "5/2"});
  CHECK(r.code == cli::kOk);
  CHECK(r.out == "10\n");
  CHECK(r.err.empty());

  CHECK(run({"oracle", "--m", "6", "--n", "4", "--x", "5/2"}).out == "10\n");
  CHECK(run({"eval", "--m", "4", "--n", "-6", "--x", "7/3"}).out == "-8\n");
  CHECK(run({"eval", "--m=3", "--n=0", "--x=-7/2"}).out == "-6\n");
  CHECK(run({"hits", "--m", "6", "--n", "4", "--x", "2"}).out == "1,4\n");
  CHECK(run({"hits", "--m", "6", "--n", "4", "--x", "5/2"}).out == "\n");
  CHECK(run({"hits", "--m", "2", "--n", "2", "--x", "4"}).out == "0,1\n");
}

TEST_CASE("verify reports and sets the exit status") {
  auto r = run({"verify", "--m-max", "4", "--n-max", "4", "--q-max", "2", "--p-span", "8"});
  CHECK(r.code == cli::kOk);
  CHECK(r.out.find("instances_checked=1224\n") != std::string::npos);
  CHECK(r.out.find("counterexamples=0\n") != std::string::npos);

  auto degenerate = run({"verify", "--m-max", "1", "--n-max", "0", "--q-max", "1", "--p-span", "1"});
  CHECK(degenerate.out.find("instances_checked=3\n") != std::string::npos);

  auto csv = run({"verify", "--m-max", "3", "--n-max", "2", "--q-max", "2", "--p-span", "3", "--csv", "--workers", "3"});
  CHECK(csv.code == cli::kOk);
  CHECK(csv.out.rfind("instances_checked,hit_instances,hits_total,counterexamples\n", 0) == 0);
}

TEST_CASE("error paths map to distinct exit codes with one diagnostic line") {
  auto bad_m = run({"eval", "--m", "0", "--n", "1", "--x", "1"});
  CHECK(bad_m.code == cli::kPrecondition);
  CHECK(bad_m.err.find("m must be positive") != std::string::npos);
  CHECK(count_lines(bad_m.err) == 1);
  CHECK(bad_m.out.empty());

  auto bad_token = run({"eval", "--m", "2", "--n", "1", "--x", "1.5"});
  CHECK(bad_token.code == cli::kBadRational);
  CHECK(count_lines(bad_token.err) == 1);

  auto zero_den = run({"eval", "--m", "2", "--n", "1", "--x", "3/0"});
  CHECK(zero_den.code == cli::kZeroDenominator);
  CHECK(count_lines(zero_den.err) == 1);

  auto unknown = run({"eval", "--m", "2", "--n", "1", "--x", "1", "--frobnicate"});
  CHECK(unknown.code == cli::kUsage);
  CHECK(count_lines(unknown.err) == 1);

  CHECK(run({"eval", "--m", "2", "--n", "1"}).code == cli::kUsage);
  CHECK(run({}).code == cli::kUsage);
  CHECK(run({"eval", "--m", "two", "--n", "1", "--x", "1"}).code == cli::kUsage);
  CHECK(run({"fourier", "--x", "1/3", "--terms", "0"}).code == cli::kPrecondition);
  CHECK(run({"bench", "--m", "3", "--n", "1", "--x", "1", "--iters", "0"}).code == cli::kPrecondition);
  CHECK(run({"eval", "--m", "9223372036854775807", "--n", "9223372036854775806", "--x", "0"}).code ==
        cli::kOverflow);

  const std::vector<int> codes{cli::kUsage, cli::kBadRational, cli::kZeroDenominator, cli::kPrecondition};
  for (std::size_t i = 0; i < codes.size(); ++i) {
    for (std::size_t j = i + 1; j < codes.size(); ++j) CHECK(codes[i] != codes[j]);
  }
}

TEST_CASE("fourier point and sweep") {
  CHECK(run({"fourier", "--x", "3", "--terms", "500"}).out == "2.5\n");
  CHECK(run({"fourier", "--x", "1/2", "--terms", "1000"}).out == "0\n");

  auto sweep = run({"fourier", "--x-start", "0.25", "--x-end", "1.25", "--x-step", "0.25", "--terms", "100", "--csv"});
  CHECK(sweep.code == cli::kOk);
  std::istringstream rows(sweep.out);
  std::string line;
  std::getline(rows, line);
  CHECK(line == "x,partial_sum,floor,abs_error");
  int n = 0;
  while (std::getline(rows, line)) {
    ++n;
    CHECK(std::count(line.begin(), line.end(), ',') == 3);
  }
  CHECK(n == 5);

  auto plain = run({"fourier", "--x-start", "0.25", "--x-end", "1.25", "--x-step", "0.25", "--terms", "100"});
  CHECK(plain.out.find(',') == std::string::npos);
  CHECK(count_lines(plain.out) == 5);

  CHECK(run({"fourier", "--x-start", "0", "--terms", "10"}).code == cli::kUsage);
}

TEST_CASE("sinesum and residual") {
  CHECK(run({"sinesum", "--z-pi", "1/2", "--a-pi", "2", "--p", "4"}).out == "5\n");
  CHECK(run({"sinesum", "--z-pi", "0", "--a-pi", "1/2", "--p", "3"}).out == "0\n");
  const auto closed = run({"sinesum", "--z", "1", "--a", "0.7", "--p", "50"});
  const auto direct = run({"sinesum", "--z", "1", "--a", "0.7", "--p", "50", "--method", "direct"});
  CHECK(closed.code == cli::kOk);
  CHECK(closed.out == direct.out);
  CHECK(run({"sinesum", "--z", "1", "--a", "0.7", "--p", "5", "--method", "magic"}).code == cli::kUsage);
  CHECK(run({"sinesum", "--z", "1"}).code == cli::kUsage);

  // Grouped form: m' = 3 for (6, 4), so j = 2 vanishes and j = 3 gives 6 sin(2 pi x / 2).
  CHECK(run({"sinesum", "--m", "6", "--n", "4", "--x", "1/2", "--j", "2"}).out == "0\n");
  CHECK(run({"sinesum", "--m", "6", "--n", "4", "--x", "1/2", "--j", "3"}).out == "6\n");
  const auto gd = run({"sinesum", "--m", "6", "--n", "4", "--x", "1/2", "--j", "3", "--method", "direct"});
  CHECK(gd.code == cli::kOk);
  CHECK(std::stod(gd.out) == doctest::Approx(6.0).epsilon(1e-12));
  CHECK(run({"sinesum", "--m", "6", "--n", "4", "--x", "1/2"}).code == cli::kUsage);
  CHECK(run({"sinesum", "--m", "6", "--j", "3"}).code == cli::kUsage);
  CHECK(run({"sinesum", "--m", "6", "--n", "4", "--x", "1/2", "--j", "0"}).code == cli::kPrecondition);

  CHECK(run({"residual", "--m", "2", "--n", "2", "--x", "4", "--terms", "100"}).out == "0\n");
  CHECK(run({"--isa", "scalar", "residual", "--m", "6", "--n", "4", "--x", "5/2", "--terms", "30000"}).code ==
        cli::kOk);
}

TEST_CASE("output is deterministic") {
  const std::vector<std::string> cmd{"verify", "--m-max", "6", "--n-max", "3", "--q-max", "2", "--p-span", "4",
                                     "--workers", "4"};
  CHECK(run(cmd).out == run(cmd).out);
  const std::vector<std::string> sweep{"fourier", "--x-start", "-1", "--x-end", "1", "--x-step", "0.1", "--csv"};
  CHECK(run(sweep).out == run(sweep).out);
}

TEST_CASE("bench report") {
  auto r = run({"bench", "--m", "1", "--n", "0", "--x", "0", "--iters", "10"});
  CHECK(r.code == cli::kOk);
  CHECK(r.out.find("sum=0\n") != std::string::npos);
  CHECK(r.out.find("speedup=") != std::string::npos);
  auto csv = run({"bench", "--m", "1000", "--n", "7", "--x", "7/3", "--iters", "5", "--csv"});
  CHECK(csv.code == cli::kOk);
  CHECK(count_lines(csv.out) == 2);
}

TEST_CASE("round trip: eval equals oracle across a grid") {
  for (int m = 1; m <= 12; ++m) {
    for (int n = -12; n <= 12; ++n) {
      for (int q = 1; q <= 3; ++q) {
        for (int p = -9; p <= 9; p += 2) {
          const std::string x = std::to_string(p) + "/" + std::to_string(q);
          const std::vector<std::string> flags{"--m", std::to_string(m), "--n", std::to_string(n), "--x", x};
          std::vector<std::string> e{"eval"}, o{"oracle"};
          e.insert(e.end(), flags.begin(), flags.end());
          o.insert(o.end(), flags.begin(), flags.end());
          const auto re = run(e), ro = run(o);
          REQUIRE(re.code == 0);
          REQUIRE(re.out == ro.out);
        }
      }
    }
  }
}

#ifdef FLOORSUM_CLI_PATH
TEST_CASE("round trip through the installed binary") {
  const std::string bin = FLOORSUM_CLI_PATH;
  for (int m = 1; m <= 7; m += 3) {
    for (int n = -6; n <= 6; n += 3) {
      for (const char* x : {"-7/3", "0", "5/2", "12"}) {
        const std::string flags = " --m " + std::to_string(m) + " --n " + std::to_string(n) + " --x " + x;
        const std::string e = shell(bin + " eval" + flags);
        CAPTURE(flags);
        CHECK(!e.empty());
        CHECK(e == shell(bin + " oracle" + flags));
      }
    }
  }
}
#endif

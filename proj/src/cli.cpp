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

#include "floorsum/cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <iomanip>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>

#include "floorsum/bench.hpp"
#include "floorsum/floorsum.hpp"
#include "floorsum/harmonic.hpp"
#include "floorsum/kernels.hpp"

namespace floorsum::cli {

namespace {

struct Options {
  std::int64_t m = 1;
  std::int64_t n = 0;
  std::string x = "0";
  std::int64_t j = 1;
  std::int64_t terms = 1000;
  std::int64_t iters = 100;
  std::int64_t m_max = 1, n_max = 0, q_max = 1, p_span = 1;
  unsigned workers = 1;
  bool csv = false;
  std::string isa;

  std::optional<double> x_start, x_end, x_step;

  double z = 0.0, a = 0.0;
  std::string z_pi, a_pi;
  std::int64_t p = 0;
  std::string method = "closed";
};

// Floats print with 12 significant digits; -0 prints as 0.
std::string fmt(double v) {
  std::ostringstream os;
  os << std::setprecision(12) << (v == 0.0 ? 0.0 : v);
  return os.str();
}

FloorSumInstance instance_of(const Options& o) {
  FloorSumInstance inst{o.m, o.n, Rational::parse(o.x)};
  inst.validate();
  return inst;
}

const kernels::KernelTable& kernels_of(const Options& o) {
  return o.isa.empty() || o.isa == "auto" ? kernels::active() : kernels::kernels_for(kernels::parse_isa(o.isa));
}

int cmd_eval(const Options& o, std::ostream& out) {
  out << closed_form_sum(instance_of(o)) << '\n';
  return kOk;
}

int cmd_oracle(const Options& o, std::ostream& out) {
  out << brute_force_sum(instance_of(o)) << '\n';
  return kOk;
}

int cmd_hits(const Options& o, std::ostream& out) {
  const HitSet hits = list_integer_hits(instance_of(o));
  for (std::size_t i = 0; i < hits.size(); ++i) {
    if (i > 0) out << ',';
    out << hits.hits[i];
  }
  out << '\n';
  return kOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const VerificationReport r = verify_range({o.m_max, o.n_max, o.q_max, o.p_span}, o.workers);
  if (o.csv) {
    out << "instances_checked,hit_instances,hits_total,counterexamples\n"
        << r.instances_checked << ',' << r.hit_instances << ',' << r.hits_total << ',' << r.counterexamples.size()
        << '\n';
  } else {
    out << "instances_checked=" << r.instances_checked << '\n'
        << "hit_instances=" << r.hit_instances << '\n'
        << "hits_total=" << r.hits_total << '\n'
        << "counterexamples=" << r.counterexamples.size() << '\n';
  }
  for (const auto& c : r.counterexamples) {
    out << "counterexample m=" << c.m << " n=" << c.n << " x=" << c.x << ": " << c.detail << '\n';
  }
  return r.ok() ? kOk : kCounterexamples;
}

int cmd_fourier(const Options& o, std::ostream& out) {
  const auto& k = kernels_of(o);
  if (!o.x_start && !o.x_end && !o.x_step) {
    out << fmt(harmonic::sawtooth_partial_sum({Rational::parse(o.x).to_double(), o.terms}, k)) << '\n';
    return kOk;
  }
  if (!o.x_start || !o.x_end || !o.x_step) {
    throw std::invalid_argument("sweep needs --x-start, --x-end and --x-step");
  }
  if (!(*o.x_step > 0.0)) throw std::domain_error("x-step must be positive");
  const char sep = o.csv ? ',' : ' ';
  if (o.csv) out << "x,partial_sum,floor,abs_error\n";
  const double span = *o.x_end - *o.x_start;
  const auto rows = static_cast<std::int64_t>(std::floor(span / *o.x_step + 1e-9)) + 1;
  for (std::int64_t i = 0; i < rows; ++i) {
    const double x = *o.x_start + static_cast<double>(i) * *o.x_step;
    const double f = harmonic::sawtooth_partial_sum({x, o.terms}, k);
    const double fl = std::floor(x);
    out << fmt(x) << sep << fmt(f) << sep << fmt(fl) << sep << fmt(std::fabs(f - fl)) << '\n';
  }
  return kOk;
}

int cmd_sinesum(const Options& o, bool grouped, std::ostream& out) {
  if (grouped) {
    // sum_{k<m} sin(2 pi j (x + n k) / m).
    const FloorSumInstance inst = instance_of(o);
    const double v = o.method == "direct" ? harmonic::grouped_sine_sum_direct(inst, o.j, kernels_of(o))
                                          : harmonic::grouped_sine_sum(inst, o.j);
    out << fmt(v) << '\n';
    return kOk;
  }
  harmonic::SineSumSpec spec;
  spec.z = o.z;
  spec.a = o.a;
  spec.p = o.p;
  if (!o.z_pi.empty()) spec.z_pi = Rational::parse(o.z_pi);
  if (!o.a_pi.empty()) spec.a_pi = Rational::parse(o.a_pi);
  if (spec.z_pi) spec.z = spec.z_pi->to_double() * std::numbers::pi;
  if (spec.a_pi) spec.a = spec.a_pi->to_double() * std::numbers::pi;
  const double v = o.method == "direct" ? harmonic::sine_sum_direct(spec, kernels_of(o)) : harmonic::sine_sum_closed(spec);
  out << fmt(v) << '\n';
  return kOk;
}

int cmd_residual(const Options& o, std::ostream& out) {
  out << fmt(harmonic::series_identity_residual(instance_of(o), o.terms, kernels_of(o))) << '\n';
  return kOk;
}

int cmd_bench(const Options& o, std::ostream& out) {
  const BenchReport r = bench(instance_of(o), o.iters);
  if (o.csv) {
    out << "m,n,x,sum,iters,closed_median_ns,closed_min_ns,closed_max_ns,"
           "oracle_median_ns,oracle_min_ns,oracle_max_ns,speedup\n"
        << r.instance.m << ',' << r.instance.n << ',' << r.instance.x << ',' << r.sum << ',' << r.iters << ','
        << fmt(r.closed_form.median_ns) << ',' << fmt(r.closed_form.min_ns) << ',' << fmt(r.closed_form.max_ns) << ','
        << fmt(r.oracle.median_ns) << ',' << fmt(r.oracle.min_ns) << ',' << fmt(r.oracle.max_ns) << ','
        << fmt(r.speedup) << '\n';
    return kOk;
  }
  out << "m=" << r.instance.m << '\n'
      << "n=" << r.instance.n << '\n'
      << "x=" << r.instance.x << '\n'
      << "sum=" << r.sum << '\n'
      << "iters=" << r.iters << '\n'
      << "closed_median_ns=" << fmt(r.closed_form.median_ns) << '\n'
      << "closed_min_ns=" << fmt(r.closed_form.min_ns) << '\n'
      << "closed_max_ns=" << fmt(r.closed_form.max_ns) << '\n'
      << "oracle_median_ns=" << fmt(r.oracle.median_ns) << '\n'
      << "oracle_min_ns=" << fmt(r.oracle.min_ns) << '\n'
      << "oracle_max_ns=" << fmt(r.oracle.max_ns) << '\n'
      << "speedup=" << fmt(r.speedup) << '\n';
  return kOk;
}

void add_instance_flags(CLI::App* sub, Options& o) {
  sub->add_option("--m", o.m, "Period m (>= 1)")->required();
  sub->add_option("--n", o.n, "Step n")->required();
  sub->add_option("--x", o.x, "Offset x as a rational token, e.g. 5/2")->required();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact full-period floor sums and their trigonometric checks", args.empty() ? "floorsum" : args[0]};
  app.require_subcommand(1);
  app.add_option("--isa", o.isa, "Kernel variant for float sums: auto, scalar, avx2");

  auto* eval = app.add_subcommand("eval", "Closed-form S(m, n, x)");
  add_instance_flags(eval, o);
  auto* oracle = app.add_subcommand("oracle", "Term-by-term S(m, n, x)");
  add_instance_flags(oracle, o);
  auto* hits = app.add_subcommand("hits", "k in [0, m) with (x + n k)/m integral");
  add_instance_flags(hits, o);

  auto* verify = app.add_subcommand("verify", "Exhaustive closed form vs oracle comparison on a grid");
  verify->add_option("--m-max", o.m_max)->required();
  verify->add_option("--n-max", o.n_max)->required();
  verify->add_option("--q-max", o.q_max)->required();
  verify->add_option("--p-span", o.p_span)->required();
  verify->add_option("--workers", o.workers, "Worker threads");
  verify->add_flag("--csv", o.csv);

  auto* fourier = app.add_subcommand("fourier", "Truncated Fourier series of floor(x)");
  fourier->add_option("--x", o.x, "Point, rational token");
  fourier->add_option("--terms", o.terms, "Truncation depth J");
  fourier->add_option("--x-start", o.x_start);
  fourier->add_option("--x-end", o.x_end);
  fourier->add_option("--x-step", o.x_step);
  fourier->add_flag("--csv", o.csv);

  auto* sinesum = app.add_subcommand("sinesum", "sum_{k=0}^{p} sin(z + a k)");
  sinesum->add_option("--z", o.z, "z in radians");
  sinesum->add_option("--a", o.a, "a in radians");
  sinesum->add_option("--z-pi", o.z_pi, "z as a rational multiple of pi");
  sinesum->add_option("--a-pi", o.a_pi, "a as a rational multiple of pi");
  auto* p_opt = sinesum->add_option("--p", o.p, "Last index p");
  sinesum->add_option("--method", o.method)->check(CLI::IsMember({"closed", "direct"}));
  // Grouped form over one period of an instance.
  auto* j_opt = sinesum->add_option("--j", o.j, "Harmonic j (grouped sum over k < m)");
  auto* sm = sinesum->add_option("--m", o.m);
  auto* sn = sinesum->add_option("--n", o.n);
  auto* sx = sinesum->add_option("--x", o.x);
  j_opt->needs(sm, sn, sx)->excludes(p_opt);
  p_opt->excludes(sm, sn, sx);

  auto* residual = app.add_subcommand("residual", "Truncated series residual against the closed form");
  add_instance_flags(residual, o);
  residual->add_option("--terms", o.terms, "Truncation depth J (only j = l m' <= J contribute)");

  auto* bench_cmd = app.add_subcommand("bench", "Time the closed form against the oracle");
  add_instance_flags(bench_cmd, o);
  bench_cmd->add_option("--iters", o.iters, "Timed repetitions");
  bench_cmd->add_flag("--csv", o.csv);

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  if (args.empty()) argv.push_back("floorsum");
  for (const auto& a : args) argv.push_back(a.c_str());

  const std::string prog = argv[0];
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << prog << ": " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (eval->parsed()) return cmd_eval(o, out);
    if (oracle->parsed()) return cmd_oracle(o, out);
    if (hits->parsed()) return cmd_hits(o, out);
    if (verify->parsed()) return cmd_verify(o, out);
    if (fourier->parsed()) return cmd_fourier(o, out);
    if (sinesum->parsed()) {
      if (j_opt->count() == 0 && p_opt->count() == 0) {
        err << prog << ": sinesum needs --p, or --j with --m --n --x\n";
        return kUsage;
      }
      return cmd_sinesum(o, j_opt->count() > 0, out);
    }
    if (residual->parsed()) return cmd_residual(o, out);
    if (bench_cmd->parsed()) return cmd_bench(o, out);
  } catch (const ZeroDenominatorError& e) {
    err << prog << ": " << e.what() << '\n';
    return kZeroDenominator;
  } catch (const ParseError& e) {
    err << prog << ": " << e.what() << '\n';
    return kBadRational;
  } catch (const CorrectnessGateError& e) {
    err << prog << ": " << e.what() << '\n';
    return kGateFailure;
  } catch (const OverflowError& e) {
    err << prog << ": " << e.what() << '\n';
    return kOverflow;
  } catch (const std::domain_error& e) {
    err << prog << ": " << e.what() << '\n';
    return kPrecondition;
  } catch (const std::exception& e) {
    err << prog << ": " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace floorsum::cli

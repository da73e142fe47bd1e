// Copyright 2026 The goldcut Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end: run, sweep, bench and plan.

#include <cstdint>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "goldcut/circuit.h"
#include "goldcut/detector.h"
#include "goldcut/errors.h"
#include "goldcut/report_io.h"
#include "goldcut/stats.h"
#include "goldcut/sweep.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitRuntime = 3;

// Thrown for bad user input detected after CLI11 parsing; maps to the usage exit code.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

struct RunOptions {
  std::string circuit_path;
  std::string observable;
  bool distribution = false;
  double alpha = 0.1;
  std::uint64_t shots = 1000;
  std::uint64_t seed = 0;
  bool no_golden_opt = false;
  bool merge_iz = false;
  bool normalize = false;
  bool json = false;
  bool one_sided = false;
};

struct SweepOptions {
  std::string config_path;
  std::string out_dir;
  bool plots = false;
};

struct BenchOptions {
  std::string circuit_path;
  std::string observable;
  double alpha = 0.1;
  std::uint64_t shots = 1000;
  std::uint64_t trials = 100;
  std::uint64_t seed = 0;
  std::string out_dir;
};

struct PlanOptions {
  double epsilon = 0.0;
  double delta = 0.0;
  std::optional<int> upstream_qubits;
  std::optional<double> b;
};

goldcut::Sidedness sidedness(bool one_sided) {
  return one_sided ? goldcut::Sidedness::kOneSidedQuantile : goldcut::Sidedness::kTwoSided;
}

// Parsing and cut validation failures are usage errors; everything later is runtime.
goldcut::FragmentPair load_fragments(const std::string& text) {
  goldcut::ParsedCircuit parsed;
  try {
    parsed = goldcut::parse_circuit(text);
  } catch (const goldcut::ParseError& e) {
    throw UsageError(std::string("parse error: ") + e.what());
  }
  if (!parsed.cut) throw UsageError("circuit has no cut line");
  return goldcut::bipartition(parsed.circuit, *parsed.cut);
}

goldcut::DetectionTarget make_target(const std::string& observable, bool distribution,
                                     const goldcut::FragmentPair& fragments) {
  if (distribution) return goldcut::DistributionMode{};
  try {
    return goldcut::parse_observable_pair(observable, fragments);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("bad observable: ") + e.what());
  }
}

void check_alpha(double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw UsageError("--alpha must lie strictly between 0 and 1");
}

int cmd_run(const RunOptions& opt) {
  check_alpha(opt.alpha);
  if (!opt.distribution && opt.observable.empty()) {
    throw UsageError("one of --obs or --distribution is required");
  }
  const goldcut::FragmentPair fragments = load_fragments(read_file(opt.circuit_path));
  const goldcut::DetectionTarget target = make_target(opt.observable, opt.distribution, fragments);
  goldcut::DetectorConfig config;
  config.alpha = opt.alpha;
  config.shots = opt.shots;
  config.seed = opt.seed;
  config.optimization_enabled = !opt.no_golden_opt;
  config.merge_iz = opt.merge_iz;
  config.sidedness = sidedness(opt.one_sided);
  const goldcut::DetectionReport report = goldcut::detect_and_reconstruct(fragments, target, config);
  if (opt.json) {
    std::cout << goldcut::report_to_json(report, fragments, opt.normalize) << '\n';
  } else {
    std::cout << goldcut::format_report(report, fragments, opt.normalize);
  }
  return kExitOk;
}

int cmd_sweep(const SweepOptions& opt) {
  goldcut::SweepConfig config;
  try {
    config = goldcut::load_sweep_config(opt.config_path);
    if (opt.plots) config.plots = true;
    config.validate();
  } catch (const std::exception& e) {
    throw UsageError(std::string("bad sweep config: ") + e.what());
  }
  const goldcut::SweepResult result = goldcut::run_sweep(config);
  for (const auto& path : goldcut::emit_outputs(result, opt.out_dir, config.plots)) {
    std::cout << "wrote " << path.string() << '\n';
  }
  return kExitOk;
}

int cmd_bench(const BenchOptions& opt) {
  check_alpha(opt.alpha);
  const std::string text = read_file(opt.circuit_path);
  const goldcut::FragmentPair fragments = load_fragments(text);
  const bool distribution = opt.observable.empty();
  const goldcut::DetectionTarget target = make_target(opt.observable, distribution, fragments);
  const goldcut::BenchResult bench =
      goldcut::bench_runtime(text, target, opt.alpha, opt.shots, opt.trials, opt.seed);
  std::ostringstream samples;
  goldcut::write_bench_csv(samples, bench);
  std::ostringstream summary;
  goldcut::write_bench_summary_csv(summary, bench, opt.alpha, opt.shots);
  const std::filesystem::path out(opt.out_dir);
  goldcut::write_text_file(out / "bench_trials.csv", samples.str());
  goldcut::write_text_file(out / "bench_summary.csv", summary.str());
  std::cout << summary.str();
  return kExitOk;
}

int cmd_plan(const PlanOptions& opt) {
  double b = 0.0;
  if (opt.b) {
    b = *opt.b;
  } else if (opt.upstream_qubits) {
    b = goldcut::b_upper_bound(*opt.upstream_qubits);
  } else {
    throw UsageError("one of --upstream-qubits or --b is required");
  }
  goldcut::ShotPlan plan;
  try {
    plan = goldcut::plan_shots(opt.epsilon, opt.delta, b);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  std::cout << "epsilon=" << goldcut::format_double(plan.epsilon)
            << " delta=" << goldcut::format_double(plan.delta)
            << " b=" << goldcut::format_double(plan.b_bound) << '\n'
            << "required_shots=" << plan.required_shots << '\n';
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Golden cutting point detection and circuit-cut reconstruction"};
  app.require_subcommand(1);

  RunOptions run_opt;
  CLI::App* run = app.add_subcommand("run", "Detect golden bases and reconstruct one circuit");
  run->add_option("circuit", run_opt.circuit_path, "Circuit file (.qct) with a cut line")->required();
  auto* obs = run->add_option("--obs", run_opt.observable, "Observable \"O_f1|O_f2\" or full-width Pauli sum");
  auto* dist = run->add_flag("--distribution", run_opt.distribution, "Reconstruct the bitstring distribution");
  obs->excludes(dist);
  run->add_option("--alpha", run_opt.alpha, "Significance level per basis")->check(CLI::Range(0.0, 1.0));
  run->add_option("--shots", run_opt.shots, "Shots per fragment execution")->check(CLI::PositiveNumber);
  run->add_option("--seed", run_opt.seed, "Master seed");
  run->add_flag("--no-golden-opt", run_opt.no_golden_opt, "Run every downstream variant without testing");
  run->add_flag("--merge-iz", run_opt.merge_iz, "Share the Z-frame upstream run with I-labelled cuts");
  run->add_flag("--normalize", run_opt.normalize, "Clamp and renormalize the reconstructed distribution");
  run->add_flag("--json", run_opt.json, "Print the report as JSON");
  run->add_flag("--one-sided-quantile", run_opt.one_sided,
                "Use Phi^-1(1-alpha) against |tau_hat| instead of the two-sided quantile");

  SweepOptions sweep_opt;
  CLI::App* sweep = app.add_subcommand("sweep", "Run a (shots, alpha) parameter sweep");
  sweep->add_option("--config", sweep_opt.config_path, "Sweep configuration (JSON)")->required();
  sweep->add_option("--out", sweep_opt.out_dir, "Output directory")->required();
  sweep->add_flag("--plots", sweep_opt.plots, "Also write SVG plots");

  BenchOptions bench_opt;
  CLI::App* bench = app.add_subcommand("bench", "Time optimized against unoptimized runs");
  bench->add_option("circuit", bench_opt.circuit_path, "Circuit file (.qct) with a cut line")->required();
  bench->add_option("--obs", bench_opt.observable, "Observable (default: distribution mode)");
  bench->add_option("--alpha", bench_opt.alpha, "Significance level per basis")->check(CLI::Range(0.0, 1.0));
  bench->add_option("--shots", bench_opt.shots, "Shots per fragment execution")->check(CLI::PositiveNumber);
  bench->add_option("--trials", bench_opt.trials, "Number of timed trials")->check(CLI::PositiveNumber);
  bench->add_option("--seed", bench_opt.seed, "Master seed");
  bench->add_option("--out", bench_opt.out_dir, "Output directory")->required();

  PlanOptions plan_opt;
  CLI::App* plan = app.add_subcommand("plan", "Shots needed for an (epsilon, delta) estimate of tau");
  plan->add_option("--epsilon", plan_opt.epsilon, "Half-width of the error band")->required();
  plan->add_option("--delta", plan_opt.delta, "Allowed failure probability")->required();
  auto* nq = plan->add_option("--upstream-qubits", plan_opt.upstream_qubits, "Bound b from the upstream width");
  auto* bopt = plan->add_option("--b", plan_opt.b, "Explicit bound on |chi|");
  nq->excludes(bopt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*run) return cmd_run(run_opt);
    if (*sweep) return cmd_sweep(sweep_opt);
    if (*bench) return cmd_bench(bench_opt);
    if (*plan) return cmd_plan(plan_opt);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const goldcut::StructureError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitRuntime;
  }
  return kExitUsage;
}

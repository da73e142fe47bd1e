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

#ifndef GOLDCUT_SWEEP_H
#define GOLDCUT_SWEEP_H

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "goldcut/detector.h"
#include "goldcut/stats.h"

namespace goldcut {

enum class SweepMode { kExpectation, kDistribution };

struct SweepConfig {
  std::vector<std::uint64_t> shots_grid{128, 512, 2048, 8192};
  std::vector<double> alpha_grid{0.1, 0.01, 0.001};
  std::uint64_t trials = 100;
  std::uint64_t master_seed = 0;
  SweepMode mode = SweepMode::kDistribution;
  /// "builtin" runs the golden and non-golden generators; anything else is a .qct path.
  std::string circuit_source = "builtin";
  double theta = 0.5;
  /// Expectation mode only: "O_f1|O_f2" or a full-width Pauli sum.
  std::string observable;
  /// Also time an unoptimized run per trial. Off by default: timings are the only
  /// non-deterministic output.
  bool record_timing = false;
  bool normalize = false;
  Sidedness sidedness = Sidedness::kTwoSided;
  unsigned workers = 0;  // 0: hardware concurrency
  bool plots = false;

  /// Throws std::invalid_argument for empty grids, zero trials, or bad alpha/shots.
  void validate() const;
};

/// Reads a JSON object with the SweepConfig field names. Missing fields keep defaults.
SweepConfig load_sweep_config(const std::string& path);

struct BasisDecision {
  BasisElement basis;
  double tau_hat = 0.0;
  double std_err = 0.0;
  bool rejected = false;
};

struct TrialRecord {
  std::uint64_t shots = 0;
  double alpha = 0.0;
  std::uint64_t trial = 0;
  std::string circuit_kind;  // golden | non-golden | custom
  std::vector<BasisDecision> decisions;
  bool classified_golden = false;  // at least one basis skipped
  double l2_error = 0.0;           // |error| in expectation mode
  std::optional<double> time_opt_s;
  std::optional<double> time_noopt_s;
};

struct AggregateRow {
  std::uint64_t shots = 0;
  double alpha = 0.0;
  std::string circuit_kind;
  std::uint64_t trials = 0;
  double golden_rate = 0.0;  // fraction of trials with at least one skipped basis
  double reject_rate = 0.0;  // fraction of trials with every basis rejected
  double l2_median = 0.0;
  double l2_mean = 0.0;
  std::optional<double> time_opt_mean_s;
  std::optional<double> time_noopt_mean_s;
};

struct SweepResult {
  std::vector<TrialRecord> records;    // ordered by (shots, alpha, kind, trial)
  std::vector<AggregateRow> aggregates;
};

/// Seed of one trial: a pure function of (master seed, shots, alpha, trial index).
std::uint64_t trial_seed(std::uint64_t master, std::uint64_t shots, double alpha, std::uint64_t trial);

/// A circuit evaluated by the sweep together with its exact reference output.
struct SweepCircuit {
  std::string kind;
  std::string text;
};

std::vector<SweepCircuit> sweep_circuits(const SweepConfig& config);

/// Runs one trial of one circuit; exposed so callers can evaluate trials in any order.
TrialRecord run_trial(const SweepConfig& config, const SweepCircuit& circuit,
                      std::uint64_t shots, double alpha, std::uint64_t trial);

/// All (shots, alpha, circuit, trial) cells on a bounded worker pool, collected in
/// deterministic order and aggregated.
SweepResult run_sweep(const SweepConfig& config);

std::vector<AggregateRow> aggregate(const std::vector<TrialRecord>& records);

struct BenchSample {
  double time_opt_s = 0.0;
  double time_noopt_s = 0.0;
  std::size_t bases_skipped = 0;
  std::uint64_t downstream_executed_opt = 0;
};

struct BenchResult {
  std::vector<BenchSample> samples;
  double mean_opt_s = 0.0;
  double stderr_opt_s = 0.0;
  double mean_noopt_s = 0.0;
  double stderr_noopt_s = 0.0;
  double mean_bases_skipped = 0.0;
};

/// Times optimized and unoptimized runs of the same circuit and seed, interleaved per
/// trial on the calling thread. Throws std::invalid_argument for trials == 0.
BenchResult bench_runtime(const std::string& circuit_text, const DetectionTarget& target,
                          double alpha, std::uint64_t shots, std::uint64_t trials,
                          std::uint64_t seed, Sidedness sidedness = Sidedness::kTwoSided);

/// Parses "O_f1|O_f2" (an empty side is the identity on that fragment), or a full-width
/// Pauli product.
ObservablePair parse_observable_pair(const std::string& text, const FragmentPair& fragments);

/// Expands O_f1 (x) O_f2 back onto the original circuit wires.
Observable full_observable(const ObservablePair& pair, const FragmentPair& fragments);

}  // namespace goldcut

#endif  // GOLDCUT_SWEEP_H

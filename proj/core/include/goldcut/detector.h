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

#ifndef GOLDCUT_DETECTOR_H
#define GOLDCUT_DETECTOR_H

#include <cstdint>
#include <optional>
#include <string_view>
#include <variant>
#include <vector>

#include "goldcut/circuit.h"
#include "goldcut/cutting.h"
#include "goldcut/pauli.h"
#include "goldcut/stats.h"

namespace goldcut {

/// Product observable O_f1 (x) O_f2; each side may itself be a Pauli sum.
struct ObservablePair {
  Observable upstream;    // over the upstream output wires
  Observable downstream;  // over the downstream wires
};

/// Reconstruct the full bitstring distribution instead of an expectation value.
struct DistributionMode {};

using DetectionTarget = std::variant<ObservablePair, DistributionMode>;

struct DetectorConfig {
  double alpha = 0.1;
  std::uint64_t shots = 1000;
  std::uint64_t seed = 0;
  bool optimization_enabled = true;
  /// Reuse the Z-frame upstream execution for I-labelled cuts (3^K instead of 4^K runs).
  bool merge_iz = false;
  Sidedness sidedness = Sidedness::kTwoSided;
};

struct DetectionReport {
  std::size_t k = 0;
  /// One outcome per basis in enumeration order; empty when optimization is disabled.
  std::vector<HypothesisOutcome> outcomes;
  BasisSet skipped_bases;
  std::uint64_t upstream_executions = 0;
  std::uint64_t downstream_runs_executed = 0;  // (M, s) variants run
  std::uint64_t downstream_runs_skipped = 0;
  std::optional<double> expectation;
  std::vector<double> distribution;  // raw signed reconstruction (distribution mode)
  double wall_time_s = 0.0;
};

/// Online golden-cut detection followed by reconstruction.
///
/// For every M in {I,X,Y,Z}^K the upstream fragment is always run; tau_hat is tested and
/// the 2^K downstream variants of M are executed only when the test rejects (or when
/// optimization is disabled, in which case no test is run). Skipped bases contribute
/// zero to the reconstruction. The same upstream samples feed the test and the
/// reconstruction. Deterministic given config.seed.
///
/// In distribution mode tau is the vector sum_r Par(r) p(b1, r) over upstream outputs b1
/// and its components are tested jointly (Bonferroni over 2^n_outputs components).
DetectionReport detect_and_reconstruct(const FragmentPair& fragments, const DetectionTarget& target,
                                       const DetectorConfig& config);

/// Parses and bipartitions `circuit_text` first; throws std::invalid_argument if the text
/// has no cut. Parsing is excluded from the reported wall time.
DetectionReport detect_and_reconstruct(std::string_view circuit_text, const DetectionTarget& target,
                                       const DetectorConfig& config);

struct SavingsSummary {
  std::uint64_t downstream_total = 0;
  std::uint64_t downstream_skipped = 0;
  double skip_fraction = 0.0;
  std::size_t bases_skipped = 0;
  double wall_time_s = 0.0;
};

SavingsSummary savings_summary(const DetectionReport& report);

}  // namespace goldcut

#endif  // GOLDCUT_DETECTOR_H

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

#include "goldcut/detector.h"

#include <chrono>
#include <map>
#include <stdexcept>
#include <string>

#include "goldcut/errors.h"
#include "goldcut/statevector.h"

namespace goldcut {

namespace {

std::uint64_t pauli_mask(const PauliString& s) {
  std::uint64_t mask = 0;
  for (std::size_t j = 0; j < s.size(); ++j) {
    if (s[j] != Pauli::kI) mask |= std::uint64_t{1} << j;
  }
  return mask;
}

std::uint64_t cut_mask(std::size_t k, int n_outputs) {
  return ((std::uint64_t{1} << k) - 1) << n_outputs;
}

// tau = sum_S a_S sum_{b1,r} eig_S(b1) Par(r) p_S(b1, r)
HypothesisOutcome test_expectation(const BasisElement& m, const Observable& upstream_observable,
                                   std::span<const UpstreamResult> results, std::size_t k,
                                   const DetectorConfig& config) {
  std::vector<EigenstringDistribution> dists;
  std::vector<std::vector<double>> chis;
  std::vector<double> coefs;
  for (const PauliTerm& term : upstream_observable.terms()) {
    const PauliString frame = measurement_frame(term.paulis);
    const UpstreamResult* match = nullptr;
    for (const auto& r : results) {
      if (r.output_frame == frame) match = &r;
    }
    if (match == nullptr) {
      throw IncompleteDataError({"upstream M=" + m.to_string() + " frame=" + to_string(frame)});
    }
    const auto& dist = match->distribution;
    dists.push_back(dist);
    chis.push_back(parity_weights(dist.size(), pauli_mask(term.paulis) | cut_mask(k, match->n_outputs)));
    coefs.push_back(term.coefficient);
  }
  return test_golden(estimate_tau(dists, chis, coefs, m), config.alpha, config.sidedness);
}

// tau_b1 = sum_r Par(r) p(b1, r), one component per upstream output bitstring.
HypothesisOutcome test_distribution(const BasisElement& m, const UpstreamResult& result,
                                    std::size_t k, const DetectorConfig& config) {
  const auto& dist = result.distribution;
  const std::size_t n_b1 = std::size_t{1} << result.n_outputs;
  const auto parity = parity_weights(dist.size(), cut_mask(k, result.n_outputs));
  std::vector<TauEstimate> components;
  components.reserve(n_b1);
  std::vector<double> chi(dist.size());
  for (std::size_t b1 = 0; b1 < n_b1; ++b1) {
    for (std::size_t idx = 0; idx < dist.size(); ++idx) {
      chi[idx] = (idx & (n_b1 - 1)) == b1 ? parity[idx] : 0.0;
    }
    components.push_back(estimate_tau(dist, chi, 1.0, m));
  }
  return test_golden_components(m, std::move(components), config.alpha, config.sidedness);
}

}  // namespace

DetectionReport detect_and_reconstruct(const FragmentPair& fragments, const DetectionTarget& target,
                                       const DetectorConfig& config) {
  if (!(config.alpha > 0.0 && config.alpha < 1.0)) {
    throw std::invalid_argument("alpha must lie in (0, 1)");
  }
  if (config.shots == 0) {
    throw std::invalid_argument("shots must be >= 1");
  }
  const auto start = std::chrono::steady_clock::now();

  const std::size_t k = fragments.k();
  const std::size_t n_out = fragments.upstream_output_wires.size();
  const std::size_t n_down = static_cast<std::size_t>(fragments.downstream.n_qubits);
  const ObservablePair* observables = std::get_if<ObservablePair>(&target);

  std::vector<PauliString> up_frames{PauliString(n_out, Pauli::kZ)};
  std::vector<PauliString> down_frames{PauliString(n_down, Pauli::kZ)};
  if (observables) {
    if (observables->upstream.width() != n_out || observables->upstream.empty()) {
      throw DimensionError("upstream observable must act on " + std::to_string(n_out) +
                           " upstream output wire(s)");
    }
    if (observables->downstream.width() != n_down || observables->downstream.empty()) {
      throw DimensionError("downstream observable must act on " + std::to_string(n_down) +
                           " downstream wire(s)");
    }
    up_frames = observable_frames(observables->upstream);
    down_frames = observable_frames(observables->downstream);
  }

  DetectionReport report;
  report.k = k;
  FragmentData data;
  std::map<std::pair<BasisElement, std::size_t>, std::vector<std::uint64_t>> merged_raw;
  const auto eigenstrings = enumerate_eigenstrings(k);

  for (const BasisElement& m : enumerate_bases(static_cast<int>(k))) {
    const std::size_t first = data.upstream.size();
    for (std::size_t f = 0; f < up_frames.size(); ++f) {
      if (config.merge_iz) {
        const BasisElement exec = execution_basis(m);
        auto [it, inserted] = merged_raw.try_emplace({exec, f});
        if (inserted) {
          const Circuit c = upstream_variant(fragments, exec, up_frames[f]);
          it->second = sample_bitstrings(run_circuit(c, StateVector(c.n_qubits)), config.shots,
                                         upstream_seed(config.seed, exec, f));
          ++report.upstream_executions;
        }
        data.upstream.push_back(upstream_from_counts(fragments, m, up_frames[f], it->second));
      } else {
        data.upstream.push_back(
            run_upstream(fragments, m, config.shots, upstream_seed(config.seed, m, f), up_frames[f]));
        ++report.upstream_executions;
      }
    }

    if (config.optimization_enabled) {
      std::span<const UpstreamResult> mine(data.upstream.data() + first, up_frames.size());
      HypothesisOutcome outcome =
          observables ? test_expectation(m, observables->upstream, mine, k, config)
                      : test_distribution(m, mine.front(), k, config);
      const bool rejected = outcome.rejected;
      report.outcomes.push_back(std::move(outcome));
      if (!rejected) {
        report.skipped_bases.insert(m);
        report.downstream_runs_skipped += eigenstrings.size();
        continue;
      }
    }

    for (const Eigenstring& s : eigenstrings) {
      for (std::size_t f = 0; f < down_frames.size(); ++f) {
        data.downstream.push_back(run_downstream(fragments, m, s, config.shots,
                                                 downstream_seed(config.seed, m, s, f), down_frames[f]));
      }
      ++report.downstream_runs_executed;
    }
  }

  if (observables) {
    report.expectation = reconstruct_expectation(data.upstream, data.downstream, observables->upstream,
                                                 observables->downstream, report.skipped_bases);
  } else {
    report.distribution =
        reconstruct_distribution(fragments, data.upstream, data.downstream, report.skipped_bases);
  }
  report.wall_time_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

DetectionReport detect_and_reconstruct(std::string_view circuit_text, const DetectionTarget& target,
                                       const DetectorConfig& config) {
  ParsedCircuit parsed = parse_circuit(circuit_text);
  if (!parsed.cut) {
    throw std::invalid_argument("circuit has no cut line");
  }
  return detect_and_reconstruct(bipartition(parsed.circuit, *parsed.cut), target, config);
}

SavingsSummary savings_summary(const DetectionReport& report) {
  SavingsSummary s;
  s.downstream_skipped = report.downstream_runs_skipped;
  s.downstream_total = report.downstream_runs_executed + report.downstream_runs_skipped;
  s.skip_fraction = s.downstream_total == 0
                        ? 0.0
                        : static_cast<double>(s.downstream_skipped) / static_cast<double>(s.downstream_total);
  s.bases_skipped = report.skipped_bases.size();
  s.wall_time_s = report.wall_time_s;
  return s;
}

}  // namespace goldcut

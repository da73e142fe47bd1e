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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "goldcut/circuit.h"
#include "goldcut/cutting.h"
#include "goldcut/detector.h"
#include "goldcut/errors.h"
#include "goldcut/generators.h"
#include "goldcut/rng.h"
#include "goldcut/statevector.h"
#include "goldcut/stats.h"
#include "goldcut/sweep.h"
#include "test_util.h"

namespace goldcut {
namespace {

constexpr std::uint64_t kMasterSeed = 20260417;
constexpr std::size_t kBasisX = 1;  // position of X in enumerate_bases(1)

struct Result {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [failed: " << what << "]";
    }
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

double sample_std(const std::vector<double>& v) {
  const double n = static_cast<double>(v.size());
  const double mean = std::accumulate(v.begin(), v.end(), 0.0) / n;
  double ss = 0.0;
  for (double x : v) ss += (x - mean) * (x - mean);
  return std::sqrt(ss / (n - 1.0));
}

Observable random_observable(Rng& rng, std::size_t width) {
  std::vector<PauliTerm> terms;
  const int n_terms = 1 + static_cast<int>(rng.below(3));
  for (int t = 0; t < n_terms; ++t) {
    PauliTerm term;
    term.coefficient = 2.0 * rng.uniform() - 1.0;
    for (std::size_t j = 0; j < width; ++j) term.paulis.push_back(static_cast<Pauli>(rng.below(4)));
    terms.push_back(term);
  }
  return Observable(terms);
}

// Exact fragment probabilities reconstruct the uncut circuit.
Result exact_oracle_reconstruction() {
  Result r;
  const auto t0 = std::chrono::steady_clock::now();
  Rng rng(kMasterSeed);
  double worst_dist = 0.0;
  double worst_exp = 0.0;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const int n = 3 + static_cast<int>(seed % 3);
    const int k = 1 + static_cast<int>((seed / 3) % 2);
    const ParsedCircuit p = random_cut_circuit(derive_seed(kMasterSeed, {1, seed}), n, k);
    const FragmentPair f = bipartition(p.circuit, *p.cut);
    const auto oracle = testing::oracle_state(p.circuit);

    const FragmentData z = exact_fragment_data(f);
    const auto q = reconstruct_distribution(f, z.upstream, z.downstream);
    const auto direct = exact_probabilities(run_circuit(p.circuit, StateVector(n)));
    for (std::size_t i = 0; i < q.size(); ++i) {
      worst_dist = std::max(worst_dist, std::abs(q[i] - direct[i]));
      worst_dist = std::max(worst_dist, std::abs(q[i] - std::norm(oracle[i])));
    }

    const Observable o = random_observable(rng, static_cast<std::size_t>(n));
    std::vector<PauliString> up;
    std::vector<PauliString> down;
    for (const SplitTerm& t : pauli_split(o, f)) {
      up.push_back(measurement_frame(t.upstream));
      down.push_back(measurement_frame(t.downstream));
    }
    const FragmentData d = exact_fragment_data(f, up, down);
    const double e = reconstruct_expectation(f, d.upstream, d.downstream, o);
    worst_exp = std::max(worst_exp, std::abs(e - testing::oracle_expectation(oracle, o)));
  }
  const double elapsed = seconds_since(t0);
  r.detail << "50 circuits, max |dp|=" << worst_dist << ", max |d<O>|=" << worst_exp << ", " << elapsed << " s";
  r.require(worst_dist <= 1e-10, "distribution tolerance 1e-10");
  r.require(worst_exp <= 1e-10, "expectation tolerance 1e-10");
  r.require(elapsed < 60.0, "runtime under one minute");
  return r;
}

// X-basis rejection frequency of the golden circuit at 10^4 shots.
Result type_one_calibration() {
  Result r;
  SweepConfig c;
  c.shots_grid = {10000};
  c.alpha_grid = {0.1, 0.01};
  c.trials = 1000;
  c.master_seed = kMasterSeed + 2;
  const auto circuits = sweep_circuits(c);
  const SweepCircuit golden = circuits.at(0);
  for (double alpha : c.alpha_grid) {
    std::uint64_t rejected = 0;
    for (std::uint64_t t = 0; t < c.trials; ++t) {
      rejected += run_trial(c, golden, 10000, alpha, t).decisions.at(kBasisX).rejected ? 1 : 0;
    }
    const double rate = static_cast<double>(rejected) / static_cast<double>(c.trials);
    const double band = 3.0 * std::sqrt(alpha * (1.0 - alpha) / static_cast<double>(c.trials));
    r.detail << "alpha=" << alpha << ": rate=" << rate << " (band +-" << band << ") ";
    r.require(std::abs(rate - alpha) <= band, "alpha=" + std::to_string(alpha));
  }
  return r;
}

SweepResult shared_sweep() {
  SweepConfig c;
  c.shots_grid = {128, 512, 2048, 8192};
  c.alpha_grid = {0.1, 0.01, 0.001};
  c.trials = 1000;
  c.master_seed = kMasterSeed + 3;
  return run_sweep(c);
}

// Non-golden X-basis rejection frequency rises to one with the shot count.
Result power_convergence(const SweepResult& sweep) {
  Result r;
  std::vector<double> rates;
  for (std::uint64_t shots : {128, 512, 2048, 8192}) {
    std::uint64_t rejected = 0;
    std::uint64_t n = 0;
    for (const TrialRecord& t : sweep.records) {
      if (t.shots != shots || t.alpha != 0.1 || t.circuit_kind != "non-golden") continue;
      rejected += t.decisions.at(kBasisX).rejected ? 1 : 0;
      ++n;
    }
    rates.push_back(static_cast<double>(rejected) / static_cast<double>(n));
    r.detail << "m=" << shots << ":" << rates.back() << " ";
  }
  r.require(rates.back() >= 0.99, "rate at 8192 shots >= 0.99");
  for (std::size_t i = 1; i < rates.size(); ++i) {
    r.require(rates[i] >= rates[i - 1] - 0.02, "monotone within 2 points");
  }
  return r;
}

// Median l2 error strictly decreases along the shot grid.
Result error_decay(const SweepResult& sweep) {
  Result r;
  double worst_final = 0.0;
  for (const std::string kind : {"golden", "non-golden"}) {
    for (double alpha : {0.1, 0.01, 0.001}) {
      std::vector<double> medians;
      for (const AggregateRow& row : sweep.aggregates) {
        if (row.circuit_kind == kind && row.alpha == alpha) medians.push_back(row.l2_median);
      }
      r.require(medians.size() == 4, "four grid points");
      for (std::size_t i = 1; i < medians.size(); ++i) {
        r.require(medians[i] < medians[i - 1], kind + " alpha=" + std::to_string(alpha) + " strictly decreasing");
      }
      worst_final = std::max(worst_final, medians.back());
      r.detail << kind << "/" << alpha << ":";
      for (double m : medians) r.detail << ' ' << m;
      r.detail << "; ";
    }
  }
  r.detail << "max median at 8192 shots=" << worst_final;
  r.require(worst_final <= 0.05, "median at 8192 shots <= 0.05");
  return r;
}

// Empirical spread of tau_hat against the reported standard error.
Result standard_error_formula() {
  Result r;
  double worst = 0.0;
  for (const std::string kind : {"golden", "non-golden"}) {
    const std::string text = kind == "golden" ? golden_circuit(0.5, kMasterSeed) : nongolden_circuit(0.5, kMasterSeed);
    const ParsedCircuit p = parse_circuit(text);
    const FragmentPair f = bipartition(p.circuit, *p.cut);
    const ObservablePair target = parse_observable_pair("Z|ZZ", f);
    for (std::uint64_t shots : {512, 8192}) {
      std::vector<std::vector<double>> tau(4);
      std::vector<double> se_sum(4, 0.0);
      for (std::uint64_t t = 0; t < 1000; ++t) {
        DetectorConfig c;
        c.shots = shots;
        c.seed = derive_seed(kMasterSeed + 5, {shots, t});
        const DetectionReport rep = detect_and_reconstruct(f, target, c);
        for (std::size_t b = 0; b < 4; ++b) {
          tau[b].push_back(rep.outcomes[b].estimate.tau_hat);
          se_sum[b] += rep.outcomes[b].estimate.std_err;
        }
      }
      for (std::size_t b = 0; b < 4; ++b) {
        const double empirical = sample_std(tau[b]);
        const double reported = se_sum[b] / 1000.0;
        const double rel = std::abs(empirical - reported) / reported;
        worst = std::max(worst, rel);
        r.require(rel <= 0.10, kind + " m=" + std::to_string(shots) + " basis " + std::to_string(b));
      }
    }
  }
  r.detail << "16 (circuit, shots, basis) cells, max relative gap=" << worst;
  return r;
}

// Optimized runs are faster on the golden circuit; X golden means 6 of 8 downstream runs.
Result runtime_savings(Result& overhead) {
  Result r;
  const std::uint64_t trials = 1000;
  const std::uint64_t shots = 10000;
  const std::uint64_t downstream = derive_seed(kMasterSeed, {0xD0D0});
  const BenchResult golden = bench_runtime(golden_circuit(0.5, downstream), DistributionMode{}, 0.1, shots, trials,
                                           kMasterSeed + 6);
  const double gap = 1.0 - golden.mean_opt_s / golden.mean_noopt_s;
  std::uint64_t x_golden = 0;
  bool counts_ok = true;
  for (const BenchSample& s : golden.samples) {
    if (s.bases_skipped == 0) continue;
    ++x_golden;
    counts_ok = counts_ok && s.bases_skipped == 1 && s.downstream_executed_opt == 6;
  }
  r.detail << "opt " << golden.mean_opt_s * 1e3 << " +- " << golden.stderr_opt_s * 1e3 << " ms, no-opt "
           << golden.mean_noopt_s * 1e3 << " +- " << golden.stderr_noopt_s * 1e3 << " ms, gap " << gap * 100
           << "%; X golden in " << x_golden << " trials, 6 of 8 executed each time";
  r.require(golden.mean_opt_s < golden.mean_noopt_s, "optimized faster");
  r.require(gap >= 0.05, "gap >= 5%");
  r.require(counts_ok, "6 of 8 downstream runs whenever X is golden");
  r.require(x_golden > 0, "X classified golden at least once");

  const BenchResult non = bench_runtime(nongolden_circuit(0.5, downstream), DistributionMode{}, 0.1, shots, trials,
                                        kMasterSeed + 7);
  const double ratio = non.mean_opt_s / non.mean_noopt_s;
  overhead.detail << "non-golden opt/no-opt time ratio " << ratio;
  overhead.require(std::abs(ratio - 1.0) <= 0.10, "within 10%");
  return r;
}

// Chernoff shot bound and a Gaussian Monte Carlo check of it.
Result shot_planner() {
  Result r;
  const std::uint64_t m = required_shots(0.1, 0.05, 1.5);
  r.require(m == 1660, "required_shots(0.1, 0.05, 1.5) == 1660");
  Rng rng(kMasterSeed + 8);
  const double sigma = 1.5 / std::sqrt(static_cast<double>(m));
  const int draws = 100000;
  int violations = 0;
  for (int i = 0; i < draws; ++i) violations += std::abs(sigma * rng.normal()) > 0.1 ? 1 : 0;
  const double freq = static_cast<double>(violations) / draws;
  r.detail << "m=" << m << ", violation frequency " << freq << " over " << draws << " draws (delta 0.05)";
  r.require(freq <= 0.05, "violation frequency <= delta");
  return r;
}

// Round trip on random circuits and line-numbered rejection of malformed input.
Result parser() {
  Result r;
  int round_trips = 0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    bool ok = false;
    if (seed % 2 == 0) {
      const Circuit c = random_circuit(derive_seed(kMasterSeed, {9, seed}), 1 + static_cast<int>(seed % 7),
                                       static_cast<int>(seed % 30));
      const ParsedCircuit back = parse_circuit(serialize_circuit(c));
      ok = back.circuit == c && !back.cut;
    } else {
      const ParsedCircuit c = random_cut_circuit(derive_seed(kMasterSeed, {9, seed}), 3 + static_cast<int>(seed % 3),
                                                 1 + static_cast<int>(seed % 2));
      const std::string text = serialize_circuit(c.circuit, c.cut);
      const ParsedCircuit back = parse_circuit(text);
      ok = back.circuit == c.circuit && back.cut == c.cut && serialize_circuit(back.circuit, back.cut) == text;
    }
    round_trips += ok ? 1 : 0;
  }
  r.require(round_trips == 200, "200 round trips");

  struct Case {
    const char* name;
    const char* text;
    std::size_t line;
  };
  const Case cases[] = {
      {"unknown mnemonic", "qubits 2\nh 0\nfoo 0\n", 3},
      {"bad arity", "qubits 2\ncx 0\n", 2},
      {"out-of-range qubit", "qubits 2\nh 0\nrx 5 0.1\n", 3},
      {"duplicate cut qubit", "qubits 3\nh 1\ncut 1 1\ncx 1 2\n", 3},
      {"post-cut gate on upstream-only qubit", "qubits 3\nh 0\nh 1\ncut 1\ncx 1 2\nh 0\n", 6},
  };
  int rejected = 0;
  for (const Case& c : cases) {
    try {
      parse_circuit(c.text);
      r.require(false, std::string(c.name) + " accepted");
    } catch (const ParseError& e) {
      const bool ok = e.line() == c.line;
      r.require(ok, std::string(c.name) + " line " + std::to_string(e.line()));
      rejected += ok ? 1 : 0;
    }
  }
  r.detail << round_trips << "/200 round trips; " << rejected << "/" << std::size(cases)
           << " malformed inputs rejected at the right line";
  return r;
}

}  // namespace
}  // namespace goldcut

int main() {
  using goldcut::Result;
  int failures = 0;
  auto report = [&](const char* id, const char* title, const Result& r, double seconds) {
    std::printf("%s %s: %s | %s (%.1f s)\n", r.pass ? "PASS" : "FAIL", id, title, r.detail.str().c_str(), seconds);
    std::fflush(stdout);
    failures += r.pass ? 0 : 1;
  };
  auto timed = [&](const char* id, const char* title, const std::function<Result()>& fn) {
    const auto t0 = std::chrono::steady_clock::now();
    const Result r = fn();
    report(id, title, r, goldcut::seconds_since(t0));
  };

  timed("criterion 1", "exact-oracle reconstruction", goldcut::exact_oracle_reconstruction);
  timed("criterion 2", "type-I calibration", goldcut::type_one_calibration);
  const auto t0 = std::chrono::steady_clock::now();
  const goldcut::SweepResult sweep = goldcut::shared_sweep();
  const double sweep_s = goldcut::seconds_since(t0);
  std::printf("(shared sweep: 4 shots x 3 alpha x 2 circuits x 1000 trials in %.1f s)\n", sweep_s);
  timed("criterion 3", "power convergence", [&] { return goldcut::power_convergence(sweep); });
  timed("criterion 4", "reconstruction error decay", [&] { return goldcut::error_decay(sweep); });
  timed("criterion 5", "standard-error formula", goldcut::standard_error_formula);
  Result overhead;
  const auto t6 = std::chrono::steady_clock::now();
  const Result savings = goldcut::runtime_savings(overhead);
  report("criterion 6", "runtime savings", savings, goldcut::seconds_since(t6));
  report("criterion 6 (bench)", "non-golden testing overhead", overhead, 0.0);
  timed("criterion 7", "shot planner", goldcut::shot_planner);
  timed("criterion 8", "parser", goldcut::parser);

  std::printf("%s: %d failing\n", failures == 0 ? "ALL PASS" : "FAILURES", failures);
  return failures == 0 ? 0 : 1;
}

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

#include "goldcut/sweep.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "json.hpp"

#include "goldcut/errors.h"
#include "goldcut/generators.h"
#include "goldcut/rng.h"
#include "goldcut/statevector.h"

namespace goldcut {

void SweepConfig::validate() const {
  if (shots_grid.empty() || alpha_grid.empty()) {
    throw std::invalid_argument("sweep: shots_grid and alpha_grid must be non-empty");
  }
  if (trials == 0) {
    throw std::invalid_argument("sweep: trials must be >= 1");
  }
  for (auto s : shots_grid) {
    if (s == 0) throw std::invalid_argument("sweep: shots must be >= 1");
  }
  for (double a : alpha_grid) {
    if (!(a > 0.0 && a < 1.0)) throw std::invalid_argument("sweep: alpha must lie in (0, 1)");
  }
}

SweepConfig load_sweep_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open sweep config '" + path + "'");
  }
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument("sweep config '" + path + "': " + e.what());
  }
  SweepConfig c;
  try {
    if (j.contains("shots_grid")) c.shots_grid = j.at("shots_grid").get<std::vector<std::uint64_t>>();
    if (j.contains("alpha_grid")) c.alpha_grid = j.at("alpha_grid").get<std::vector<double>>();
    if (j.contains("trials")) c.trials = j.at("trials").get<std::uint64_t>();
    if (j.contains("master_seed")) c.master_seed = j.at("master_seed").get<std::uint64_t>();
    if (j.contains("mode")) {
      const auto mode = j.at("mode").get<std::string>();
      if (mode == "distribution") {
        c.mode = SweepMode::kDistribution;
      } else if (mode == "expectation") {
        c.mode = SweepMode::kExpectation;
      } else {
        throw std::invalid_argument("unknown mode '" + mode + "'");
      }
    }
    if (j.contains("circuit_source")) c.circuit_source = j.at("circuit_source").get<std::string>();
    if (j.contains("theta")) c.theta = j.at("theta").get<double>();
    if (j.contains("observable")) c.observable = j.at("observable").get<std::string>();
    if (j.contains("record_timing")) c.record_timing = j.at("record_timing").get<bool>();
    if (j.contains("normalize")) c.normalize = j.at("normalize").get<bool>();
    if (j.contains("workers")) c.workers = j.at("workers").get<unsigned>();
    if (j.contains("plots")) c.plots = j.at("plots").get<bool>();
    if (j.contains("sidedness")) {
      const auto s = j.at("sidedness").get<std::string>();
      if (s == "two-sided") {
        c.sidedness = Sidedness::kTwoSided;
      } else if (s == "one-sided-quantile") {
        c.sidedness = Sidedness::kOneSidedQuantile;
      } else {
        throw std::invalid_argument("unknown sidedness '" + s + "'");
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument("sweep config '" + path + "': " + e.what());
  }
  if (c.circuit_source != "builtin") {
    std::filesystem::path source(c.circuit_source);
    if (source.is_relative()) {
      c.circuit_source = (std::filesystem::path(path).parent_path() / source).string();
    }
  }
  c.validate();
  return c;
}

std::uint64_t trial_seed(std::uint64_t master, std::uint64_t shots, double alpha, std::uint64_t trial) {
  return derive_seed(master, {shots, seed_label(alpha), trial});
}

std::vector<SweepCircuit> sweep_circuits(const SweepConfig& config) {
  if (config.circuit_source == "builtin") {
    const std::uint64_t downstream = derive_seed(config.master_seed, {0xD0D0});
    return {{"golden", golden_circuit(config.theta, downstream)},
            {"non-golden", nongolden_circuit(config.theta, downstream)}};
  }
  std::ifstream in(config.circuit_source);
  if (!in) {
    throw std::runtime_error("cannot open circuit file '" + config.circuit_source + "'");
  }
  std::ostringstream text;
  text << in.rdbuf();
  return {{"custom", text.str()}};
}

ObservablePair parse_observable_pair(const std::string& text, const FragmentPair& fragments) {
  const std::size_t n_out = fragments.upstream_output_wires.size();
  const std::size_t n_down = static_cast<std::size_t>(fragments.downstream.n_qubits);
  if (auto bar = text.find('|'); bar != std::string::npos) {
    const std::string left = text.substr(0, bar);
    const std::string right = text.substr(bar + 1);
    auto side = [](const std::string& s, std::size_t width) {
      Observable o = Observable::parse(s);
      return (o.width() == 0 && width > 0) ? Observable::identity(width) : o;
    };
    return {side(left, n_out), side(right, n_down)};
  }
  const auto split = pauli_split(Observable::parse(text), fragments);
  if (split.size() != 1) {
    throw std::invalid_argument("a full-width observable must be a single Pauli product; use 'O_f1|O_f2'");
  }
  return {Observable::single(split[0].upstream, split[0].coefficient),
          Observable::single(split[0].downstream)};
}

Observable full_observable(const ObservablePair& pair, const FragmentPair& fragments) {
  std::vector<PauliTerm> terms;
  for (const PauliTerm& a : pair.upstream.terms()) {
    for (const PauliTerm& b : pair.downstream.terms()) {
      PauliTerm t;
      t.coefficient = a.coefficient * b.coefficient;
      t.paulis.assign(fragments.n_qubits, Pauli::kI);
      for (int j = 0; j < fragments.n_upstream_outputs(); ++j) {
        t.paulis[fragments.upstream_output_qubit(j)] = a.paulis[j];
      }
      for (std::size_t w = 0; w < fragments.downstream_qubits.size(); ++w) {
        t.paulis[fragments.downstream_qubits[w]] = b.paulis[w];
      }
      terms.push_back(std::move(t));
    }
  }
  return Observable(std::move(terms));
}

namespace {

struct PreparedCircuit {
  std::string kind;
  FragmentPair fragments;
  DetectionTarget target;
  std::vector<double> reference;
  double reference_expectation = 0.0;
};

std::uint64_t kind_label(const std::string& kind) {
  std::uint64_t h = 0xcbf29ce484222325ULL;  // FNV-1a
  for (unsigned char c : kind) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

PreparedCircuit prepare(const SweepConfig& config, const SweepCircuit& circuit) {
  ParsedCircuit parsed = parse_circuit(circuit.text);
  if (!parsed.cut) {
    throw std::invalid_argument("sweep circuit '" + circuit.kind + "' has no cut");
  }
  PreparedCircuit p;
  p.kind = circuit.kind;
  p.fragments = bipartition(parsed.circuit, *parsed.cut);
  const StateVector state = run_circuit(parsed.circuit, StateVector(parsed.circuit.n_qubits));
  if (config.mode == SweepMode::kDistribution) {
    p.target = DistributionMode{};
    p.reference = exact_probabilities(state);
  } else {
    const std::string obs =
        config.observable.empty() ? std::string(parsed.circuit.n_qubits, 'Z') : config.observable;
    ObservablePair pair = parse_observable_pair(obs, p.fragments);
    p.reference_expectation = exact_expectation(state, full_observable(pair, p.fragments));
    p.target = std::move(pair);
  }
  return p;
}

TrialRecord run_prepared_trial(const SweepConfig& config, const PreparedCircuit& circuit,
                               std::uint64_t shots, double alpha, std::uint64_t trial) {
  DetectorConfig dc;
  dc.alpha = alpha;
  dc.shots = shots;
  dc.seed = derive_seed(trial_seed(config.master_seed, shots, alpha, trial), {kind_label(circuit.kind)});
  dc.sidedness = config.sidedness;

  TrialRecord rec;
  rec.shots = shots;
  rec.alpha = alpha;
  rec.trial = trial;
  rec.circuit_kind = circuit.kind;

  const DetectionReport report = detect_and_reconstruct(circuit.fragments, circuit.target, dc);
  for (const HypothesisOutcome& o : report.outcomes) {
    rec.decisions.push_back({o.basis, o.estimate.tau_hat, o.estimate.std_err, o.rejected});
  }
  rec.classified_golden = !report.skipped_bases.empty();
  if (report.expectation) {
    rec.l2_error = std::abs(*report.expectation - circuit.reference_expectation);
  } else {
    const auto q = config.normalize ? clamp_and_normalize(report.distribution) : report.distribution;
    rec.l2_error = l2_distance(q, circuit.reference);
  }
  if (config.record_timing) {
    rec.time_opt_s = report.wall_time_s;
    dc.optimization_enabled = false;
    rec.time_noopt_s = detect_and_reconstruct(circuit.fragments, circuit.target, dc).wall_time_s;
  }
  return rec;
}

double median(std::vector<double> values) {
  if (values.empty()) return 0.0;
  std::sort(values.begin(), values.end());
  const std::size_t n = values.size();
  return n % 2 == 1 ? values[n / 2] : 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

}  // namespace

TrialRecord run_trial(const SweepConfig& config, const SweepCircuit& circuit, std::uint64_t shots,
                      double alpha, std::uint64_t trial) {
  return run_prepared_trial(config, prepare(config, circuit), shots, alpha, trial);
}

std::vector<AggregateRow> aggregate(const std::vector<TrialRecord>& records) {
  std::vector<AggregateRow> rows;
  std::size_t i = 0;
  while (i < records.size()) {
    std::size_t j = i;
    while (j < records.size() && records[j].shots == records[i].shots &&
           records[j].alpha == records[i].alpha && records[j].circuit_kind == records[i].circuit_kind) {
      ++j;
    }
    AggregateRow row;
    row.shots = records[i].shots;
    row.alpha = records[i].alpha;
    row.circuit_kind = records[i].circuit_kind;
    row.trials = j - i;
    std::vector<double> l2;
    std::uint64_t golden = 0;
    std::uint64_t all_rejected = 0;
    double l2_sum = 0.0;
    double t_opt = 0.0;
    double t_noopt = 0.0;
    bool timed = true;
    for (std::size_t r = i; r < j; ++r) {
      const TrialRecord& rec = records[r];
      golden += rec.classified_golden ? 1 : 0;
      all_rejected += std::all_of(rec.decisions.begin(), rec.decisions.end(),
                                  [](const BasisDecision& d) { return d.rejected; })
                          ? 1
                          : 0;
      l2.push_back(rec.l2_error);
      l2_sum += rec.l2_error;
      if (rec.time_opt_s && rec.time_noopt_s) {
        t_opt += *rec.time_opt_s;
        t_noopt += *rec.time_noopt_s;
      } else {
        timed = false;
      }
    }
    const double n = static_cast<double>(row.trials);
    row.golden_rate = static_cast<double>(golden) / n;
    row.reject_rate = static_cast<double>(all_rejected) / n;
    row.l2_median = median(std::move(l2));
    row.l2_mean = l2_sum / n;
    if (timed) {
      row.time_opt_mean_s = t_opt / n;
      row.time_noopt_mean_s = t_noopt / n;
    }
    rows.push_back(std::move(row));
    i = j;
  }
  return rows;
}

SweepResult run_sweep(const SweepConfig& config) {
  config.validate();
  std::vector<PreparedCircuit> circuits;
  for (const SweepCircuit& c : sweep_circuits(config)) circuits.push_back(prepare(config, c));

  struct Cell {
    std::uint64_t shots;
    double alpha;
    std::size_t circuit;
    std::uint64_t trial;
  };
  std::vector<Cell> cells;
  for (auto shots : config.shots_grid) {
    for (double alpha : config.alpha_grid) {
      for (std::size_t c = 0; c < circuits.size(); ++c) {
        for (std::uint64_t t = 0; t < config.trials; ++t) cells.push_back({shots, alpha, c, t});
      }
    }
  }

  SweepResult result;
  result.records.resize(cells.size());
  unsigned workers = config.workers != 0 ? config.workers : std::max(1U, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, cells.size()));

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&] {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= cells.size()) return;
      try {
        const Cell& c = cells[i];
        result.records[i] = run_prepared_trial(config, circuits[c.circuit], c.shots, c.alpha, c.trial);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = cells.size();
      }
    }
  };
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  }
  if (failure) std::rethrow_exception(failure);

  result.aggregates = aggregate(result.records);
  return result;
}

BenchResult bench_runtime(const std::string& circuit_text, const DetectionTarget& target, double alpha,
                          std::uint64_t shots, std::uint64_t trials, std::uint64_t seed,
                          Sidedness sidedness) {
  if (trials == 0) {
    throw std::invalid_argument("bench_runtime: trials must be >= 1");
  }
  ParsedCircuit parsed = parse_circuit(circuit_text);
  if (!parsed.cut) {
    throw std::invalid_argument("bench_runtime: circuit has no cut line");
  }
  const FragmentPair fragments = bipartition(parsed.circuit, *parsed.cut);

  BenchResult out;
  out.samples.reserve(trials);
  for (std::uint64_t t = 0; t < trials; ++t) {
    DetectorConfig on;
    on.alpha = alpha;
    on.shots = shots;
    on.seed = derive_seed(seed, {t});
    on.sidedness = sidedness;
    DetectorConfig off = on;
    off.optimization_enabled = false;

    BenchSample sample;
    auto run_on = [&] {
      const DetectionReport r = detect_and_reconstruct(fragments, target, on);
      sample.time_opt_s = r.wall_time_s;
      sample.bases_skipped = r.skipped_bases.size();
      sample.downstream_executed_opt = r.downstream_runs_executed;
    };
    auto run_off = [&] { sample.time_noopt_s = detect_and_reconstruct(fragments, target, off).wall_time_s; };
    // Alternate the order so cache warm-up does not favour one path.
    if (t % 2 == 0) {
      run_on();
      run_off();
    } else {
      run_off();
      run_on();
    }
    out.samples.push_back(sample);
  }

  auto mean_and_stderr = [&](auto field) {
    const double n = static_cast<double>(out.samples.size());
    double sum = 0.0;
    for (const auto& s : out.samples) sum += field(s);
    const double mean = sum / n;
    if (out.samples.size() < 2) return std::pair{mean, 0.0};
    double ss = 0.0;
    for (const auto& s : out.samples) ss += (field(s) - mean) * (field(s) - mean);
    return std::pair{mean, std::sqrt(ss / (n - 1.0) / n)};
  };
  std::tie(out.mean_opt_s, out.stderr_opt_s) = mean_and_stderr([](const BenchSample& s) { return s.time_opt_s; });
  std::tie(out.mean_noopt_s, out.stderr_noopt_s) =
      mean_and_stderr([](const BenchSample& s) { return s.time_noopt_s; });
  out.mean_bases_skipped =
      mean_and_stderr([](const BenchSample& s) { return static_cast<double>(s.bases_skipped); }).first;
  return out;
}

}  // namespace goldcut

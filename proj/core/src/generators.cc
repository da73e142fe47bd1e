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

#include "goldcut/generators.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "goldcut/errors.h"
#include "goldcut/rng.h"
#include "goldcut/statevector.h"

namespace goldcut {

namespace {

constexpr GateKind kLayerKinds[] = {GateKind::kRX, GateKind::kRY, GateKind::kRZ, GateKind::kH,
                                    GateKind::kS};

std::string builtin_circuit(double theta, std::uint64_t downstream_seed, bool extra_ry) {
  Circuit c;
  c.n_qubits = 3;
  c.gates = {Gate::rotation(GateKind::kRX, 0, theta), Gate::rotation(GateKind::kRX, 1, theta),
             Gate::rotation(GateKind::kRY, 0, theta)};
  if (extra_ry) c.gates.push_back(Gate::rotation(GateKind::kRY, 1, theta));
  CutSpec cut{{1}, c.gates.size()};
  for (const Gate& g : random_downstream(downstream_seed)) c.gates.push_back(g);
  return serialize_circuit(c, cut);
}

}  // namespace

std::vector<Gate> random_layers(Rng& rng, const std::vector<int>& qubits, int layers) {
  std::vector<Gate> out;
  if (qubits.empty()) return out;
  for (int layer = 0; layer < layers; ++layer) {
    const GateKind kind = kLayerKinds[rng.below(std::size(kLayerKinds))];
    const int q = qubits[rng.below(qubits.size())];
    if (is_rotation(kind)) {
      out.push_back(Gate::rotation(kind, q, rng.uniform() * 2.0 * std::numbers::pi));
    } else {
      out.push_back(Gate::single(kind, q));
    }
    if (qubits.size() >= 2 && rng.uniform() < 0.5) {
      const std::size_t c = rng.below(qubits.size());
      std::size_t t = rng.below(qubits.size() - 1);
      if (t >= c) ++t;
      out.push_back(Gate::cx(qubits[c], qubits[t]));
    }
  }
  return out;
}

std::vector<Gate> random_downstream(std::uint64_t seed) {
  Rng rng(seed);
  return random_layers(rng, {1, 2}, 4);
}

std::string golden_circuit(double theta, std::uint64_t downstream_seed) {
  return builtin_circuit(theta, downstream_seed, false);
}

std::string nongolden_circuit(double theta, std::uint64_t downstream_seed) {
  return builtin_circuit(theta, downstream_seed, true);
}

ParsedCircuit random_cut_circuit(std::uint64_t seed, int n_qubits, int k, int layers_per_side) {
  if (k < 1 || k > n_qubits) {
    throw std::invalid_argument("random_cut_circuit: need 1 <= K <= n_qubits");
  }
  Rng rng(seed);
  std::vector<int> order(n_qubits);
  std::iota(order.begin(), order.end(), 0);
  for (std::size_t i = order.size(); i > 1; --i) std::swap(order[i - 1], order[rng.below(i)]);

  std::vector<int> cut_qubits(order.begin(), order.begin() + k);
  std::vector<int> up = cut_qubits;
  std::vector<int> down = cut_qubits;
  for (int i = k; i < n_qubits; ++i) (rng.below(2) == 0 ? up : down).push_back(order[i]);
  std::sort(up.begin(), up.end());
  std::sort(down.begin(), down.end());

  ParsedCircuit out;
  out.circuit.n_qubits = n_qubits;
  out.circuit.gates = random_layers(rng, up, layers_per_side);
  const std::size_t position = out.circuit.gates.size();
  for (const Gate& g : random_layers(rng, down, layers_per_side)) out.circuit.gates.push_back(g);
  out.cut = CutSpec{cut_qubits, position};
  return out;
}

Circuit random_circuit(std::uint64_t seed, int n_qubits, int n_gates) {
  constexpr GateKind kAll[] = {GateKind::kRX, GateKind::kRY, GateKind::kRZ, GateKind::kH,
                               GateKind::kX,  GateKind::kY,  GateKind::kZ,  GateKind::kS,
                               GateKind::kSdg, GateKind::kCX};
  Rng rng(seed);
  Circuit c;
  c.n_qubits = n_qubits;
  for (int i = 0; i < n_gates; ++i) {
    GateKind kind = kAll[rng.below(std::size(kAll))];
    if (kind == GateKind::kCX && n_qubits < 2) kind = GateKind::kH;
    const int q = static_cast<int>(rng.below(n_qubits));
    if (kind == GateKind::kCX) {
      int t = static_cast<int>(rng.below(n_qubits - 1));
      if (t >= q) ++t;
      c.gates.push_back(Gate::cx(q, t));
    } else if (is_rotation(kind)) {
      // Mix of short decimals and full-precision doubles.
      const double angle = rng.below(2) == 0 ? (static_cast<double>(rng.below(2000)) - 1000.0) / 100.0
                                             : (rng.uniform() - 0.5) * 4.0 * std::numbers::pi;
      c.gates.push_back(Gate::rotation(kind, q, angle));
    } else {
      c.gates.push_back(Gate::single(kind, q));
    }
  }
  return c;
}

std::vector<double> reference_distribution(std::string_view circuit_text) {
  return reference_distribution(parse_circuit(circuit_text).circuit);
}

std::vector<double> reference_distribution(const Circuit& circuit) {
  return exact_probabilities(run_circuit(circuit, StateVector(circuit.n_qubits)));
}

double l2_distance(const std::vector<double>& p, const std::vector<double>& q) {
  if (p.size() != q.size()) {
    throw DimensionError("l2_distance: sizes " + std::to_string(p.size()) + " and " +
                         std::to_string(q.size()) + " differ");
  }
  double total = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) total += (p[i] - q[i]) * (p[i] - q[i]);
  return std::sqrt(total);
}

}  // namespace goldcut

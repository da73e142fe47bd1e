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

#ifndef GOLDCUT_GENERATORS_H
#define GOLDCUT_GENERATORS_H

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "goldcut/circuit.h"

namespace goldcut {

class Rng;

/// Three-qubit circuit cut on qubit 1 whose X basis element is golden:
/// RX(theta) q0; RX(theta) q1; RY(theta) q0; cut 1; random downstream on q1, q2.
std::string golden_circuit(double theta, std::uint64_t downstream_seed);

/// golden_circuit with an extra RY(theta) on q1 before the cut, so X is no longer golden
/// (for theta != 0).
std::string nongolden_circuit(double theta, std::uint64_t downstream_seed);

/// Layered random circuit on `qubits`: each layer applies one gate drawn uniformly from
/// {RX, RY, RZ, H, S} (angles uniform in [0, 2pi)) to a random qubit, then a CX between
/// two random distinct qubits with probability 1/2.
std::vector<Gate> random_layers(Rng& rng, const std::vector<int>& qubits, int layers);

/// The downstream block of the builtin circuits: 4 random layers over qubits 1 and 2.
std::vector<Gate> random_downstream(std::uint64_t seed);

/// Random n-qubit circuit with a valid K-cut: random upstream-only and downstream-only
/// qubit sets around K cut qubits, random layers on each side.
ParsedCircuit random_cut_circuit(std::uint64_t seed, int n_qubits, int k, int layers_per_side = 6);

/// Random circuit without a cut (for format round-trips).
Circuit random_circuit(std::uint64_t seed, int n_qubits, int n_gates);

/// Exact output distribution of the uncut circuit (any cut line is ignored).
std::vector<double> reference_distribution(std::string_view circuit_text);
std::vector<double> reference_distribution(const Circuit& circuit);

/// sqrt(sum_i (p_i - q_i)^2). Throws DimensionError on size mismatch.
double l2_distance(const std::vector<double>& p, const std::vector<double>& q);

}  // namespace goldcut

#endif  // GOLDCUT_GENERATORS_H

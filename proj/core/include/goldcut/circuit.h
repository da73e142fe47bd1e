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

#ifndef GOLDCUT_CIRCUIT_H
#define GOLDCUT_CIRCUIT_H

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "goldcut/gate.h"

namespace goldcut {

struct Circuit {
  int n_qubits = 0;
  std::vector<Gate> gates;

  /// Throws std::out_of_range if any gate addresses a qubit >= n_qubits.
  void validate() const;

  friend bool operator==(const Circuit&, const Circuit&) = default;
};

/// K cut qubits at a single temporal boundary: gates [0, position) are upstream,
/// gates [position, end) are downstream.
struct CutSpec {
  std::vector<int> cut_qubits;
  std::size_t position = 0;

  std::size_t k() const { return cut_qubits.size(); }

  friend bool operator==(const CutSpec&, const CutSpec&) = default;
};

/// Upstream fragment f1 and downstream fragment f2 of a bipartitioned circuit.
///
/// Upstream wires are the upstream qubits in ascending original order. Downstream wires
/// 0..K-1 are the cut qubits in cut order, followed by the downstream-only qubits in
/// ascending original order. Every downstream wire is an output; the upstream outputs are
/// its non-cut wires.
struct FragmentPair {
  int n_qubits = 0;  // width of the original circuit
  Circuit upstream;
  Circuit downstream;
  std::vector<int> upstream_qubits;         // upstream wire -> original qubit
  std::vector<int> upstream_cut_wires;      // cut i -> upstream wire
  std::vector<int> upstream_output_wires;   // upstream output j -> upstream wire
  std::vector<int> downstream_qubits;       // downstream wire -> original qubit

  std::size_t k() const { return upstream_cut_wires.size(); }
  int n_upstream_outputs() const { return static_cast<int>(upstream_output_wires.size()); }
  int upstream_output_qubit(int j) const { return upstream_qubits[upstream_output_wires[j]]; }
};

struct ParsedCircuit {
  Circuit circuit;
  std::optional<CutSpec> cut;
};

/// Parses the line-oriented `.qct` circuit format:
///
///     qubits <N>
///     <mnemonic> <qubit>... [<angle>]
///     cut <q1> [<q2> ...]
///
/// Mnemonics are rx/ry/rz (qubit + angle in radians), h/x/y/z/s/sdg (qubit) and cx
/// (control, target). `#` starts a comment. At most one cut line is allowed and the gates
/// around it must respect the induced partition. Errors are reported as ParseError with
/// the offending line number.
ParsedCircuit parse_circuit(std::string_view text);

/// Canonical text form; parse_circuit(serialize_circuit(c, cut)) reproduces c and cut
/// exactly (angles are written in shortest round-trip form).
std::string serialize_circuit(const Circuit& circuit, const std::optional<CutSpec>& cut = std::nullopt);

/// Checks the cut against the circuit without building fragments.
/// Throws std::invalid_argument / std::out_of_range for a bad cut list and StructureError
/// naming the first gate that crosses the partition.
void validate_cut(const Circuit& circuit, const CutSpec& cut);

/// Splits the circuit at the cut. A non-cut qubit belongs upstream if a pre-cut gate
/// touches it and downstream otherwise, so qubits idle before the cut are downstream wires.
FragmentPair bipartition(const Circuit& circuit, const CutSpec& cut);

/// Maps both fragments back onto the original wires: upstream gates, then downstream gates.
Circuit recompose(const FragmentPair& fragments);

}  // namespace goldcut

#endif  // GOLDCUT_CIRCUIT_H

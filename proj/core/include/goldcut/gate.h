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

#ifndef GOLDCUT_GATE_H
#define GOLDCUT_GATE_H

#include <array>
#include <complex>
#include <cstdint>
#include <optional>
#include <string_view>

namespace goldcut {

enum class GateKind : std::uint8_t { kRX, kRY, kRZ, kH, kX, kY, kZ, kS, kSdg, kCX };

std::string_view mnemonic(GateKind kind);
std::optional<GateKind> gate_kind_from_mnemonic(std::string_view text);
bool is_rotation(GateKind kind);
int arity(GateKind kind);

/// A gate acting on one or two qubits. For CX, qubits[0] is the control.
/// Unused slots are zero and non-rotation gates carry angle 0, so defaulted equality is
/// structural equality.
struct Gate {
  GateKind kind = GateKind::kH;
  std::array<int, 2> qubits{};
  double angle = 0.0;

  static Gate single(GateKind kind, int qubit);
  static Gate rotation(GateKind kind, int qubit, double angle);
  static Gate cx(int control, int target);

  int arity() const { return goldcut::arity(kind); }

  /// Throws std::out_of_range if a target is outside [0, n_qubits).
  void check_range(int n_qubits) const;

  friend bool operator==(const Gate&, const Gate&) = default;
};

using Matrix2 = std::array<std::complex<double>, 4>;  // row-major

/// Unitary of a single-qubit gate kind. Throws std::invalid_argument for CX.
Matrix2 gate_matrix(GateKind kind, double angle = 0.0);

}  // namespace goldcut

#endif  // GOLDCUT_GATE_H

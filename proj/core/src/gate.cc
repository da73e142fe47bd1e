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

#include "goldcut/gate.h"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace goldcut {

namespace {

struct KindInfo {
  GateKind kind;
  std::string_view mnemonic;
  int arity;
  bool rotation;
};

constexpr KindInfo kKinds[] = {
    {GateKind::kRX, "rx", 1, true},  {GateKind::kRY, "ry", 1, true},
    {GateKind::kRZ, "rz", 1, true},  {GateKind::kH, "h", 1, false},
    {GateKind::kX, "x", 1, false},   {GateKind::kY, "y", 1, false},
    {GateKind::kZ, "z", 1, false},   {GateKind::kS, "s", 1, false},
    {GateKind::kSdg, "sdg", 1, false}, {GateKind::kCX, "cx", 2, false},
};

const KindInfo& info(GateKind kind) { return kKinds[static_cast<int>(kind)]; }

}  // namespace

std::string_view mnemonic(GateKind kind) { return info(kind).mnemonic; }

std::optional<GateKind> gate_kind_from_mnemonic(std::string_view text) {
  for (const KindInfo& k : kKinds) {
    if (k.mnemonic == text) {
      return k.kind;
    }
  }
  return std::nullopt;
}

bool is_rotation(GateKind kind) { return info(kind).rotation; }

int arity(GateKind kind) { return info(kind).arity; }

Gate Gate::single(GateKind kind, int qubit) {
  if (goldcut::arity(kind) != 1 || goldcut::is_rotation(kind)) {
    throw std::invalid_argument("Gate::single: not a fixed single-qubit kind");
  }
  return Gate{kind, {qubit, 0}, 0.0};
}

Gate Gate::rotation(GateKind kind, int qubit, double angle) {
  if (!goldcut::is_rotation(kind)) {
    throw std::invalid_argument("Gate::rotation: not a rotation kind");
  }
  return Gate{kind, {qubit, 0}, angle};
}

Gate Gate::cx(int control, int target) {
  if (control == target) {
    throw std::invalid_argument("Gate::cx: control and target must differ");
  }
  return Gate{GateKind::kCX, {control, target}, 0.0};
}

void Gate::check_range(int n_qubits) const {
  for (int i = 0; i < arity(); ++i) {
    if (qubits[i] < 0 || qubits[i] >= n_qubits) {
      throw std::out_of_range(std::string(mnemonic(kind)) + ": qubit " +
                              std::to_string(qubits[i]) + " out of range for " +
                              std::to_string(n_qubits) + " qubits");
    }
  }
}

Matrix2 gate_matrix(GateKind kind, double angle) {
  using C = std::complex<double>;
  const double c = std::cos(angle / 2);
  const double s = std::sin(angle / 2);
  const double r = std::numbers::sqrt2 / 2;
  switch (kind) {
    case GateKind::kRX:
      return {C(c, 0), C(0, -s), C(0, -s), C(c, 0)};
    case GateKind::kRY:
      return {C(c, 0), C(-s, 0), C(s, 0), C(c, 0)};
    case GateKind::kRZ:
      return {C(c, -s), C(0, 0), C(0, 0), C(c, s)};
    case GateKind::kH:
      return {C(r, 0), C(r, 0), C(r, 0), C(-r, 0)};
    case GateKind::kX:
      return {C(0, 0), C(1, 0), C(1, 0), C(0, 0)};
    case GateKind::kY:
      return {C(0, 0), C(0, -1), C(0, 1), C(0, 0)};
    case GateKind::kZ:
      return {C(1, 0), C(0, 0), C(0, 0), C(-1, 0)};
    case GateKind::kS:
      return {C(1, 0), C(0, 0), C(0, 0), C(0, 1)};
    case GateKind::kSdg:
      return {C(1, 0), C(0, 0), C(0, 0), C(0, -1)};
    case GateKind::kCX:
      break;
  }
  throw std::invalid_argument("gate_matrix: not a single-qubit gate");
}

}  // namespace goldcut

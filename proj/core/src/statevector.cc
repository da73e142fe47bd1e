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

#include "goldcut/statevector.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

#include "goldcut/errors.h"
#include "goldcut/rng.h"

namespace goldcut {

StateVector::StateVector(int n_qubits) : n_qubits_(n_qubits) {
  if (n_qubits < 1 || n_qubits > 30) {
    throw std::invalid_argument("StateVector: qubit count must be in [1, 30]");
  }
  amplitudes_.assign(std::size_t{1} << n_qubits, {0.0, 0.0});
  amplitudes_[0] = 1.0;
}

StateVector StateVector::basis_state(int n_qubits, std::uint64_t index) {
  StateVector out(n_qubits);
  if (index >= out.size()) {
    throw std::out_of_range("basis_state: index out of range");
  }
  out.amplitudes_[0] = 0.0;
  out.amplitudes_[index] = 1.0;
  return out;
}

StateVector StateVector::from_amplitudes(std::vector<std::complex<double>> amplitudes) {
  const std::size_t n = amplitudes.size();
  if (n < 2 || (n & (n - 1)) != 0) {
    throw std::invalid_argument("from_amplitudes: length must be a power of two >= 2");
  }
  StateVector out(std::countr_zero(n));
  out.amplitudes_ = std::move(amplitudes);
  if (std::abs(out.norm_squared() - 1.0) > 1e-10) {
    throw std::invalid_argument("from_amplitudes: state is not normalized");
  }
  return out;
}

double StateVector::norm_squared() const {
  double total = 0.0;
  for (const auto& a : amplitudes_) total += std::norm(a);
  return total;
}

void StateVector::apply(const Gate& gate) {
  gate.check_range(n_qubits_);
  if (gate.kind == GateKind::kCX) {
    apply_cx(gate.qubits[0], gate.qubits[1]);
  } else {
    apply_single(gate.qubits[0], gate_matrix(gate.kind, gate.angle));
  }
}

void StateVector::apply(std::span<const Gate> gates) {
  for (const Gate& g : gates) apply(g);
}

void StateVector::apply_single(int qubit, const Matrix2& m) {
  const std::size_t stride = std::size_t{1} << qubit;
  const std::size_t n = amplitudes_.size();
  for (std::size_t base = 0; base < n; base += 2 * stride) {
    for (std::size_t i = base; i < base + stride; ++i) {
      const auto a0 = amplitudes_[i];
      const auto a1 = amplitudes_[i + stride];
      amplitudes_[i] = m[0] * a0 + m[1] * a1;
      amplitudes_[i + stride] = m[2] * a0 + m[3] * a1;
    }
  }
}

void StateVector::apply_cx(int control, int target) {
  const std::size_t cmask = std::size_t{1} << control;
  const std::size_t tmask = std::size_t{1} << target;
  for (std::size_t i = 0; i < amplitudes_.size(); ++i) {
    if ((i & cmask) && !(i & tmask)) {
      std::swap(amplitudes_[i], amplitudes_[i | tmask]);
    }
  }
}

StateVector apply_gate(StateVector state, const Gate& gate) {
  state.apply(gate);
  return state;
}

StateVector run_circuit(const Circuit& circuit, StateVector initial) {
  if (circuit.n_qubits != initial.n_qubits()) {
    throw DimensionError("run_circuit: circuit has " + std::to_string(circuit.n_qubits) +
                         " qubits, state has " + std::to_string(initial.n_qubits()));
  }
  initial.apply(circuit.gates);
  return initial;
}

std::vector<Gate> measurement_rotation(Pauli pauli, int qubit) {
  switch (pauli) {
    case Pauli::kX:
      return {Gate::single(GateKind::kH, qubit)};
    case Pauli::kY:
      return {Gate::single(GateKind::kSdg, qubit), Gate::single(GateKind::kH, qubit)};
    case Pauli::kI:
    case Pauli::kZ:
      return {};
  }
  return {};
}

std::vector<Gate> prepare_eigenstate(Pauli pauli, int sign, int qubit) {
  std::vector<Gate> out;
  if (sign < 0) out.push_back(Gate::single(GateKind::kX, qubit));
  switch (pauli) {
    case Pauli::kX:
      out.push_back(Gate::single(GateKind::kH, qubit));
      break;
    case Pauli::kY:
      out.push_back(Gate::single(GateKind::kH, qubit));
      out.push_back(Gate::single(GateKind::kS, qubit));
      break;
    case Pauli::kI:
    case Pauli::kZ:
      break;
  }
  return out;
}

std::vector<double> exact_probabilities(const StateVector& state) {
  std::vector<double> out(state.size());
  auto amps = state.amplitudes();
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = std::norm(amps[i]);
  return out;
}

OutcomeSampler::OutcomeSampler(std::span<const double> probabilities) {
  if (probabilities.empty()) {
    throw std::invalid_argument("OutcomeSampler: empty distribution");
  }
  cumulative_.resize(probabilities.size());
  double running = 0.0;
  for (std::size_t i = 0; i < probabilities.size(); ++i) {
    running += std::max(0.0, probabilities[i]);
    cumulative_[i] = running;
  }
  if (!(running > 0.0)) {
    throw std::invalid_argument("OutcomeSampler: distribution has zero mass");
  }
}

std::uint64_t OutcomeSampler::draw(Rng& rng) const {
  const double u = rng.uniform() * cumulative_.back();
  auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), u);
  if (it == cumulative_.end()) --it;
  return static_cast<std::uint64_t>(it - cumulative_.begin());
}

std::vector<std::uint64_t> OutcomeSampler::sample_counts(std::uint64_t shots, Rng& rng) const {
  if (shots == 0) {
    throw std::invalid_argument("sample_counts: shots must be >= 1");
  }
  std::vector<std::uint64_t> counts(cumulative_.size(), 0);
  for (std::uint64_t i = 0; i < shots; ++i) ++counts[draw(rng)];
  return counts;
}

std::vector<std::uint64_t> sample_bitstrings(const StateVector& state, std::uint64_t shots,
                                             std::uint64_t seed) {
  if (shots == 0) {
    throw std::invalid_argument("sample_bitstrings: shots must be >= 1");
  }
  const auto probs = exact_probabilities(state);
  OutcomeSampler sampler(probs);
  Rng rng(seed);
  return sampler.sample_counts(shots, rng);
}

double exact_expectation(const StateVector& state, const Observable& observable) {
  if (observable.width() != static_cast<std::size_t>(state.n_qubits())) {
    throw DimensionError("exact_expectation: observable width " +
                         std::to_string(observable.width()) + " != " +
                         std::to_string(state.n_qubits()) + " qubits");
  }
  double total = 0.0;
  auto amps = state.amplitudes();
  for (const PauliTerm& term : observable.terms()) {
    if (!std::isfinite(term.coefficient)) {
      throw std::invalid_argument("exact_expectation: non-Hermitian (non-finite) coefficient");
    }
    // P|i> = phase(i) |i ^ flip> with flip the X/Y positions.
    std::uint64_t flip = 0;
    std::uint64_t zmask = 0;
    int n_y = 0;
    for (std::size_t q = 0; q < term.paulis.size(); ++q) {
      const std::uint64_t bit = std::uint64_t{1} << q;
      switch (term.paulis[q]) {
        case Pauli::kX:
          flip |= bit;
          break;
        case Pauli::kY:
          flip |= bit;
          zmask |= bit;
          ++n_y;
          break;
        case Pauli::kZ:
          zmask |= bit;
          break;
        case Pauli::kI:
          break;
      }
    }
    // Y = i X Z, so P = i^{n_y} X^flip Z^zmask.
    std::complex<double> iy(1.0, 0.0);
    for (int i = 0; i < n_y; ++i) iy *= std::complex<double>(0.0, 1.0);
    std::complex<double> acc(0.0, 0.0);
    for (std::size_t i = 0; i < amps.size(); ++i) {
      const double zsign = (std::popcount(i & zmask) & 1) ? -1.0 : 1.0;
      acc += std::conj(amps[i ^ flip]) * zsign * amps[i];
    }
    acc *= iy;
    total += term.coefficient * acc.real();
  }
  return total;
}

DensityMatrix::DensityMatrix(int n_qubits) : n_qubits_(n_qubits) {
  if (n_qubits < 0 || n_qubits > 14) {
    throw std::invalid_argument("DensityMatrix: qubit count must be in [0, 14]");
  }
  entries_.assign(dim() * dim(), {0.0, 0.0});
}

DensityMatrix DensityMatrix::from_state(const StateVector& state) {
  DensityMatrix out(state.n_qubits());
  auto a = state.amplitudes();
  const std::size_t d = out.dim();
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t c = 0; c < d; ++c) out.entries_[r * d + c] = a[r] * std::conj(a[c]);
  }
  return out;
}

std::complex<double> DensityMatrix::trace() const {
  std::complex<double> t(0.0, 0.0);
  for (std::size_t i = 0; i < dim(); ++i) t += at(i, i);
  return t;
}

bool DensityMatrix::is_hermitian(double tol) const {
  for (std::size_t r = 0; r < dim(); ++r) {
    for (std::size_t c = r; c < dim(); ++c) {
      if (std::abs(at(r, c) - std::conj(at(c, r))) > tol) return false;
    }
  }
  return true;
}

std::vector<double> DensityMatrix::diagonal() const {
  std::vector<double> out(dim());
  for (std::size_t i = 0; i < dim(); ++i) out[i] = at(i, i).real();
  return out;
}

DensityMatrix DensityMatrix::left_multiply(int qubit, const Matrix2& m) const {
  if (qubit < 0 || qubit >= n_qubits_) {
    throw std::out_of_range("DensityMatrix::left_multiply: qubit out of range");
  }
  DensityMatrix out(n_qubits_);
  const std::size_t d = dim();
  const std::size_t bit = std::size_t{1} << qubit;
  for (std::size_t r = 0; r < d; ++r) {
    const std::size_t r0 = r & ~bit;
    const std::size_t r1 = r | bit;
    const int row_bit = (r & bit) ? 1 : 0;
    for (std::size_t c = 0; c < d; ++c) {
      out.entries_[r * d + c] = m[row_bit * 2 + 0] * at(r0, c) + m[row_bit * 2 + 1] * at(r1, c);
    }
  }
  return out;
}

DensityMatrix DensityMatrix::partial_trace(std::span<const int> qubits) const {
  std::uint64_t traced = 0;
  for (int q : qubits) {
    if (q < 0 || q >= n_qubits_) {
      throw std::out_of_range("DensityMatrix::partial_trace: qubit out of range");
    }
    traced |= std::uint64_t{1} << q;
  }
  std::vector<int> kept;
  for (int q = 0; q < n_qubits_; ++q) {
    if (!((traced >> q) & 1U)) kept.push_back(q);
  }
  DensityMatrix out(static_cast<int>(kept.size()));
  const std::size_t d = dim();
  auto reduce = [&](std::size_t full) {
    std::size_t idx = 0;
    for (std::size_t j = 0; j < kept.size(); ++j) {
      if ((full >> kept[j]) & 1U) idx |= std::size_t{1} << j;
    }
    return idx;
  };
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t c = 0; c < d; ++c) {
      if ((r & traced) != (c & traced)) continue;
      out.entries_[reduce(r) * out.dim() + reduce(c)] += at(r, c);
    }
  }
  return out;
}

}  // namespace goldcut

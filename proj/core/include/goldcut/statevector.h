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

#ifndef GOLDCUT_STATEVECTOR_H
#define GOLDCUT_STATEVECTOR_H

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "goldcut/circuit.h"
#include "goldcut/gate.h"
#include "goldcut/pauli.h"

namespace goldcut {

class Rng;

/// Dense pure state over n qubits. Amplitude index bit q is the value of qubit q
/// (qubit 0 is the lowest-order bit).
class StateVector {
 public:
  /// The all-zeros state |0...0>.
  explicit StateVector(int n_qubits);

  static StateVector basis_state(int n_qubits, std::uint64_t index);
  /// Throws std::invalid_argument unless the length is a power of two >= 2 and the norm is 1.
  static StateVector from_amplitudes(std::vector<std::complex<double>> amplitudes);

  int n_qubits() const { return n_qubits_; }
  std::size_t size() const { return amplitudes_.size(); }
  std::span<const std::complex<double>> amplitudes() const { return amplitudes_; }
  std::complex<double> amplitude(std::uint64_t index) const { return amplitudes_.at(index); }
  double norm_squared() const;

  /// In-place gate application. Throws std::out_of_range for bad targets.
  void apply(const Gate& gate);
  void apply(std::span<const Gate> gates);

 private:
  void apply_single(int qubit, const Matrix2& m);
  void apply_cx(int control, int target);

  int n_qubits_;
  std::vector<std::complex<double>> amplitudes_;
};

StateVector apply_gate(StateVector state, const Gate& gate);

/// Applies the circuit's gates in order. Throws DimensionError on width mismatch.
StateVector run_circuit(const Circuit& circuit, StateVector initial);

/// Gates rotating the eigenbasis of `pauli` onto the computational basis on `qubit`:
/// X -> [H], Y -> [Sdg, H], Z and I -> [].
std::vector<Gate> measurement_rotation(Pauli pauli, int qubit = 0);

/// Gates taking |0> to the `sign` eigenstate of `pauli` on `qubit`. For I, sign +1 gives |0>
/// and sign -1 gives |1> (both have eigenvalue +1 under I).
std::vector<Gate> prepare_eigenstate(Pauli pauli, int sign, int qubit = 0);

/// |amplitude|^2 for every computational bitstring.
std::vector<double> exact_probabilities(const StateVector& state);

/// Inverse-CDF multinomial sampler over a fixed probability table.
class OutcomeSampler {
 public:
  explicit OutcomeSampler(std::span<const double> probabilities);

  std::uint64_t draw(Rng& rng) const;
  /// Histogram of `shots` draws. Throws std::invalid_argument if shots == 0.
  std::vector<std::uint64_t> sample_counts(std::uint64_t shots, Rng& rng) const;

 private:
  std::vector<double> cumulative_;
};

/// Counts per computational bitstring for `shots` measurements of every qubit.
std::vector<std::uint64_t> sample_bitstrings(const StateVector& state, std::uint64_t shots,
                                             std::uint64_t seed);

/// <psi|O|psi>. Throws DimensionError on width mismatch and std::invalid_argument for
/// non-finite coefficients (a real Pauli sum is always Hermitian otherwise).
double exact_expectation(const StateVector& state, const Observable& observable);

/// Dense density matrix; used as an independent oracle for fragment states.
class DensityMatrix {
 public:
  explicit DensityMatrix(int n_qubits);  // zero matrix

  static DensityMatrix from_state(const StateVector& state);

  int n_qubits() const { return n_qubits_; }
  std::size_t dim() const { return std::size_t{1} << n_qubits_; }
  std::complex<double> at(std::size_t row, std::size_t col) const { return entries_[row * dim() + col]; }

  std::complex<double> trace() const;
  bool is_hermitian(double tol = 1e-10) const;
  std::vector<double> diagonal() const;

  /// (m acting on `qubit`) * rho.
  DensityMatrix left_multiply(int qubit, const Matrix2& m) const;

  /// Traces out `qubits`; the remaining qubits keep their relative order.
  DensityMatrix partial_trace(std::span<const int> qubits) const;

 private:
  int n_qubits_;
  std::vector<std::complex<double>> entries_;
};

}  // namespace goldcut

#endif  // GOLDCUT_STATEVECTOR_H

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

#include <cmath>
#include <numbers>

#include "goldcut/errors.h"
#include "goldcut/generators.h"
#include "goldcut/rng.h"
#include "gtest/gtest.h"
#include "test_util.h"

namespace goldcut {
namespace {

using testing::Complex;

constexpr GateKind kSingleKinds[] = {GateKind::kRX, GateKind::kRY, GateKind::kRZ, GateKind::kH, GateKind::kX,
                                     GateKind::kY,  GateKind::kZ,  GateKind::kS,  GateKind::kSdg};

TEST(GateMatrix, matches_first_principles_oracle) {
  for (GateKind kind : kSingleKinds) {
    for (double angle : {0.0, 0.3, 1.7, -2.9}) {
      if (!is_rotation(kind) && angle != 0.0) continue;
      const Matrix2 m = gate_matrix(kind, angle);
      const testing::Dense ref = testing::oracle_single_qubit(kind, angle);
      for (int r = 0; r < 2; ++r) {
        for (int c = 0; c < 2; ++c) {
          EXPECT_NEAR(std::abs(m[2 * r + c] - ref(r, c)), 0.0, 1e-12) << mnemonic(kind) << ' ' << angle;
        }
      }
    }
  }
}

TEST(GateMatrix, cx_has_no_single_qubit_matrix) {
  EXPECT_THROW(gate_matrix(GateKind::kCX), std::invalid_argument);
}

TEST(StateVector, rx_pi_over_two_on_zero) {
  StateVector psi(1);
  psi.apply(Gate::rotation(GateKind::kRX, 0, std::numbers::pi / 2));
  const double r = 1.0 / std::sqrt(2.0);
  EXPECT_NEAR(std::abs(psi.amplitude(0) - Complex(r, 0)), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(psi.amplitude(1) - Complex(0, -r)), 0.0, 1e-12);
}

TEST(StateVector, bell_state) {
  StateVector psi(2);
  psi.apply(Gate::single(GateKind::kH, 0));
  psi.apply(Gate::cx(0, 1));
  const auto p = exact_probabilities(psi);
  EXPECT_NEAR(p[0], 0.5, 1e-12);
  EXPECT_NEAR(p[1], 0.0, 1e-12);
  EXPECT_NEAR(p[2], 0.0, 1e-12);
  EXPECT_NEAR(p[3], 0.5, 1e-12);
}

TEST(StateVector, qubit_zero_is_low_order_bit) {
  StateVector psi(3);
  psi.apply(Gate::single(GateKind::kX, 0));
  EXPECT_NEAR(std::norm(psi.amplitude(1)), 1.0, 1e-15);
  StateVector phi(3);
  phi.apply(Gate::single(GateKind::kX, 2));
  EXPECT_NEAR(std::norm(phi.amplitude(4)), 1.0, 1e-15);
}

TEST(StateVector, random_circuits_match_dense_oracle) {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    const int n = 1 + static_cast<int>(seed % 4);
    const Circuit c = random_circuit(seed, n, 15);
    const StateVector psi = run_circuit(c, StateVector(n));
    const auto ref = testing::oracle_state(c);
    for (std::size_t i = 0; i < ref.size(); ++i) {
      ASSERT_NEAR(std::abs(psi.amplitude(i) - ref[i]), 0.0, 1e-12) << "seed " << seed;
    }
    EXPECT_NEAR(psi.norm_squared(), 1.0, 1e-12);
  }
}

TEST(StateVector, out_of_range_and_width_errors) {
  StateVector psi(2);
  EXPECT_THROW(psi.apply(Gate::single(GateKind::kH, 2)), std::out_of_range);
  Circuit c{3, {}};
  EXPECT_THROW(run_circuit(c, StateVector(2)), DimensionError);
  EXPECT_THROW(StateVector(0), std::invalid_argument);
  EXPECT_THROW(StateVector::from_amplitudes({1.0, 1.0}), std::invalid_argument);
  EXPECT_THROW(StateVector::from_amplitudes({1.0, 0.0, 0.0}), std::invalid_argument);
}

TEST(StateVector, apply_gate_is_functional) {
  const StateVector zero(1);
  const StateVector one = apply_gate(zero, Gate::single(GateKind::kX, 0));
  EXPECT_NEAR(std::norm(zero.amplitude(0)), 1.0, 0.0);
  EXPECT_NEAR(std::norm(one.amplitude(1)), 1.0, 0.0);
}

// Preparing the (P, s) eigenstate and then rotating P's eigenbasis onto Z must give the
// computational state |0> for s = +1 and |1> for s = -1.
TEST(Rotations, prepare_then_measure_is_deterministic) {
  for (Pauli p : {Pauli::kX, Pauli::kY, Pauli::kZ}) {
    for (int sign : {1, -1}) {
      StateVector psi(1);
      psi.apply(prepare_eigenstate(p, sign));
      // The prepared state really is the eigenstate: <P> = sign.
      EXPECT_NEAR(exact_expectation(psi, Observable::single({p})), sign, 1e-12);
      const auto oracle_state = std::vector<Complex>(psi.amplitudes().begin(), psi.amplitudes().end());
      EXPECT_NEAR(testing::oracle_expectation(oracle_state, Observable::single({p})), sign, 1e-12);
      psi.apply(measurement_rotation(p));
      const auto probs = exact_probabilities(psi);
      EXPECT_NEAR(probs[sign > 0 ? 0 : 1], 1.0, 1e-12) << pauli_char(p) << sign;
    }
  }
}

TEST(Rotations, identity_labels) {
  EXPECT_TRUE(measurement_rotation(Pauli::kI).empty());
  EXPECT_TRUE(measurement_rotation(Pauli::kZ).empty());
  StateVector psi(1);
  psi.apply(prepare_eigenstate(Pauli::kI, -1));
  EXPECT_NEAR(std::norm(psi.amplitude(1)), 1.0, 1e-15);
}

TEST(Expectation, matches_dense_pauli_oracle) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Circuit c = random_circuit(seed + 100, 3, 12);
    const StateVector psi = run_circuit(c, StateVector(3));
    const auto ref_state = testing::oracle_state(c);
    for (const char* text : {"XYZ", "IIZ", "0.5*YYI + -1.5*ZXX", "III"}) {
      const Observable o = Observable::parse(text);
      EXPECT_NEAR(exact_expectation(psi, o), testing::oracle_expectation(ref_state, o), 1e-12) << text;
    }
  }
  EXPECT_THROW(exact_expectation(StateVector(2), Observable::parse("XYZ")), DimensionError);
}

TEST(Sampler, frequencies_converge_to_probabilities) {
  StateVector psi(2);
  psi.apply(Gate::rotation(GateKind::kRY, 0, 1.1));
  psi.apply(Gate::cx(0, 1));
  psi.apply(Gate::rotation(GateKind::kRX, 1, 0.4));
  const auto p = exact_probabilities(psi);
  const std::uint64_t shots = 200000;
  const auto counts = sample_bitstrings(psi, shots, 5);
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    total += counts[i];
    const double sd = std::sqrt(p[i] * (1 - p[i]) / shots);
    EXPECT_NEAR(static_cast<double>(counts[i]) / shots, p[i], 5 * sd + 1e-12);
  }
  EXPECT_EQ(total, shots);
}

TEST(Sampler, deterministic_and_never_draws_zero_probability_outcomes) {
  StateVector psi(2);
  psi.apply(Gate::single(GateKind::kH, 0));
  EXPECT_EQ(sample_bitstrings(psi, 1000, 9), sample_bitstrings(psi, 1000, 9));
  const auto counts = sample_bitstrings(psi, 5000, 1);
  EXPECT_EQ(counts[2], 0u);
  EXPECT_EQ(counts[3], 0u);
  EXPECT_THROW(sample_bitstrings(psi, 0, 1), std::invalid_argument);
}

TEST(DensityMatrix, trace_hermiticity_and_partial_trace) {
  StateVector psi(2);
  psi.apply(Gate::single(GateKind::kH, 0));
  psi.apply(Gate::cx(0, 1));
  const DensityMatrix rho = DensityMatrix::from_state(psi);
  EXPECT_NEAR(std::abs(rho.trace() - Complex(1.0)), 0.0, 1e-12);
  EXPECT_TRUE(rho.is_hermitian());
  const int traced[] = {1};
  const DensityMatrix reduced = rho.partial_trace(traced);
  EXPECT_EQ(reduced.n_qubits(), 1);
  EXPECT_NEAR(reduced.at(0, 0).real(), 0.5, 1e-12);
  EXPECT_NEAR(reduced.at(1, 1).real(), 0.5, 1e-12);
  EXPECT_NEAR(std::abs(reduced.at(0, 1)), 0.0, 1e-12);
}

TEST(DensityMatrix, left_multiply_by_pauli_gives_expectation_via_trace) {
  StateVector psi(2);
  psi.apply(Gate::rotation(GateKind::kRY, 0, 0.8));
  psi.apply(Gate::rotation(GateKind::kRX, 1, 0.3));
  const DensityMatrix rho = DensityMatrix::from_state(psi);
  const DensityMatrix zrho = rho.left_multiply(0, gate_matrix(GateKind::kZ));
  EXPECT_NEAR(zrho.trace().real(), exact_expectation(psi, Observable::parse("ZI")), 1e-12);
  const DensityMatrix xrho = rho.left_multiply(0, gate_matrix(GateKind::kX));
  EXPECT_NEAR(xrho.trace().real(), std::sin(0.8), 1e-12);
}

}  // namespace
}  // namespace goldcut

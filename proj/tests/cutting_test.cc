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

#include "goldcut/cutting.h"

#include <cmath>
#include <numeric>

#include "goldcut/errors.h"
#include "goldcut/generators.h"
#include "goldcut/rng.h"
#include "goldcut/statevector.h"
#include "gtest/gtest.h"
#include "test_util.h"

namespace goldcut {
namespace {

FragmentPair fragments_of(const std::string& text) {
  const ParsedCircuit p = parse_circuit(text);
  return bipartition(p.circuit, *p.cut);
}

BasisElement basis(const char* labels) { return BasisElement{parse_pauli_string(labels)}; }

// Random Pauli sum over `width` wires with 1-3 terms.
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

TEST(Enumerate, bases_in_lexicographic_order) {
  const auto k1 = enumerate_bases(1);
  ASSERT_EQ(k1.size(), 4u);
  EXPECT_EQ(k1[0].to_string(), "I");
  EXPECT_EQ(k1[1].to_string(), "X");
  EXPECT_EQ(k1[2].to_string(), "Y");
  EXPECT_EQ(k1[3].to_string(), "Z");
  const auto k2 = enumerate_bases(2);
  ASSERT_EQ(k2.size(), 16u);
  EXPECT_EQ(k2.front().to_string(), "II");
  EXPECT_EQ(k2[1].to_string(), "IX");
  EXPECT_EQ(k2.back().to_string(), "ZZ");
  EXPECT_EQ(enumerate_bases(3).size(), 64u);
  for (std::size_t i = 0; i < k2.size(); ++i) EXPECT_EQ(basis_ordinal(k2[i]), i);
  EXPECT_THROW(enumerate_bases(0), std::invalid_argument);
}

TEST(Enumerate, eigenstrings_all_plus_first) {
  const auto s = enumerate_eigenstrings(2);
  ASSERT_EQ(s.size(), 4u);
  EXPECT_EQ(s[0].to_string(), "++");
  for (std::size_t i = 0; i < s.size(); ++i) EXPECT_EQ(s[i].bits(), i);
}

TEST(Parity, products_of_signs) {
  EXPECT_EQ(parity(Eigenstring{{1}}), 1);
  EXPECT_EQ(parity(Eigenstring{{1, -1}}), -1);
  EXPECT_EQ(parity(Eigenstring{{-1, -1}}), 1);
  EXPECT_EQ(eigenvalue_parity(basis("IX"), Eigenstring{{-1, -1}}), -1);
  EXPECT_EQ(eigenvalue_parity(basis("II"), Eigenstring{{-1, -1}}), 1);
  EXPECT_EQ(execution_basis(basis("IXYZ")).to_string(), "ZXYZ");
}

TEST(Upstream, hadamard_cut_wire_in_z_basis) {
  const FragmentPair f = fragments_of("qubits 1\nh 0\ncut 0\nx 0\n");
  const UpstreamResult r = run_upstream(f, basis("Z"), 1000000, 4);
  ASSERT_EQ(r.distribution.size(), 2u);
  EXPECT_NEAR(r.distribution.probabilities[0], 0.5, 0.0015);
  EXPECT_EQ(r.distribution.shots, 1000000u);
}

TEST(Upstream, identity_basis_reports_plus_one_eigenvalues) {
  const FragmentPair f = fragments_of("qubits 3\nh 0\nh 1\nry 2 0.7\ncut 0 1\ncx 0 1\n");
  const UpstreamResult r = run_upstream(f, basis("II"), 2000, 1);
  ASSERT_EQ(r.n_outputs, 1);
  for (std::uint64_t b1 = 0; b1 < 2; ++b1) {
    for (std::uint64_t rb = 1; rb < 4; ++rb) EXPECT_EQ(r.distribution.probabilities[r.joint_index(b1, rb)], 0.0);
  }
  EXPECT_THROW(run_upstream(f, basis("I"), 10, 1), std::invalid_argument);
  EXPECT_THROW(run_upstream(f, basis("II"), 0, 1), std::invalid_argument);
}

TEST(Downstream, cx_examples) {
  const FragmentPair f = fragments_of("qubits 2\nh 0\ncut 0\ncx 0 1\n");
  const auto plus = run_downstream(f, basis("Z"), Eigenstring{{1}}, 500, 2);
  EXPECT_DOUBLE_EQ(plus.distribution.probabilities[0b00], 1.0);
  const auto minus = run_downstream(f, basis("Z"), Eigenstring{{-1}}, 500, 2);
  EXPECT_DOUBLE_EQ(minus.distribution.probabilities[0b11], 1.0);
  const auto x = exact_downstream(f, basis("X"), Eigenstring{{1}});
  EXPECT_NEAR(x.distribution.probabilities[0b00], 0.5, 1e-12);
  EXPECT_NEAR(x.distribution.probabilities[0b11], 0.5, 1e-12);
  EXPECT_THROW(run_downstream(f, basis("ZZ"), Eigenstring{{1}}, 10, 1), std::invalid_argument);
  EXPECT_THROW(run_downstream(f, basis("Z"), Eigenstring{{1, 1}}, 10, 1), std::invalid_argument);
}

TEST(Reconstruct, bell_expectations_from_exact_inputs) {
  const FragmentPair f = fragments_of("qubits 2\nh 0\ncut 0\ncx 0 1\n");
  const FragmentData d = exact_fragment_data(f);
  EXPECT_NEAR(reconstruct_expectation(f, d.upstream, d.downstream, Observable::parse("ZZ")), 1.0, 1e-10);
  EXPECT_NEAR(reconstruct_expectation(f, d.upstream, d.downstream, Observable::parse("ZI")), 0.0, 1e-10);
  const auto bases = enumerate_bases(1);
  const BasisSet all(bases.begin(), bases.end());
  EXPECT_EQ(reconstruct_expectation(f, {}, {}, Observable::parse("ZZ"), all), 0.0);
}

TEST(Reconstruct, bell_distribution_from_exact_inputs) {
  const FragmentPair f = fragments_of("qubits 2\nh 0\ncut 0\ncx 0 1\n");
  const FragmentData d = exact_fragment_data(f);
  const auto q = reconstruct_distribution(f, d.upstream, d.downstream);
  ASSERT_EQ(q.size(), 4u);
  EXPECT_NEAR(q[0b00], 0.5, 1e-10);
  EXPECT_NEAR(q[0b01], 0.0, 1e-10);
  EXPECT_NEAR(q[0b10], 0.0, 1e-10);
  EXPECT_NEAR(q[0b11], 0.5, 1e-10);
}

TEST(Reconstruct, idle_qubits_cut_between_them) {
  const FragmentPair f = fragments_of("qubits 2\ncut 0\n");
  const FragmentData d = exact_fragment_data(f);
  const auto q = reconstruct_distribution(f, d.upstream, d.downstream);
  EXPECT_NEAR(q[0], 1.0, 1e-12);
  for (std::size_t i = 1; i < q.size(); ++i) EXPECT_NEAR(q[i], 0.0, 1e-12);
}

TEST(Reconstruct, golden_basis_skip_leaves_exact_result_unchanged) {
  const FragmentPair f = fragments_of(golden_circuit(0.5, 7));
  const FragmentData d = exact_fragment_data(f);
  const auto full = reconstruct_distribution(f, d.upstream, d.downstream);
  const auto skipped = reconstruct_distribution(f, d.upstream, d.downstream, {basis("X")});
  for (std::size_t i = 0; i < full.size(); ++i) EXPECT_NEAR(full[i], skipped[i], 1e-10);
  const auto ref = reference_distribution(golden_circuit(0.5, 7));
  for (std::size_t i = 0; i < full.size(); ++i) EXPECT_NEAR(full[i], ref[i], 1e-10);
  // The same skip on the non-golden circuit is visible.
  const FragmentPair g = fragments_of(nongolden_circuit(0.5, 7));
  const FragmentData e = exact_fragment_data(g);
  EXPECT_GT(l2_distance(reconstruct_distribution(g, e.upstream, e.downstream, {basis("X")}),
                        reference_distribution(nongolden_circuit(0.5, 7))),
            1e-3);
}

TEST(Reconstruct, random_circuits_match_uncut_simulation) {
  Rng rng(2024);
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const int n = 3 + static_cast<int>(seed % 3);
    const int k = 1 + static_cast<int>(seed % 2);
    const ParsedCircuit p = random_cut_circuit(seed, n, k);
    const FragmentPair f = bipartition(p.circuit, *p.cut);

    const auto ref_probs = testing::oracle_probabilities(p.circuit);
    const FragmentData z = exact_fragment_data(f);
    const auto q = reconstruct_distribution(f, z.upstream, z.downstream);
    ASSERT_EQ(q.size(), ref_probs.size());
    for (std::size_t i = 0; i < q.size(); ++i) ASSERT_NEAR(q[i], ref_probs[i], 1e-10) << "seed " << seed;

    const Observable o = random_observable(rng, static_cast<std::size_t>(n));
    std::vector<PauliString> up_frames;
    std::vector<PauliString> down_frames;
    for (const SplitTerm& t : pauli_split(o, f)) {
      up_frames.push_back(measurement_frame(t.upstream));
      down_frames.push_back(measurement_frame(t.downstream));
    }
    const FragmentData d = exact_fragment_data(f, up_frames, down_frames);
    EXPECT_NEAR(reconstruct_expectation(f, d.upstream, d.downstream, o),
                testing::oracle_expectation(testing::oracle_state(p.circuit), o), 1e-10)
        << "seed " << seed << " O=" << o.to_string();
  }
}

TEST(Reconstruct, missing_data_lists_every_missing_variant) {
  const FragmentPair f = fragments_of("qubits 2\nh 0\ncut 0\ncx 0 1\n");
  FragmentData d = exact_fragment_data(f);
  d.downstream.erase(d.downstream.begin());  // (I, +)
  d.upstream.pop_back();                      // Z
  try {
    reconstruct_distribution(f, d.upstream, d.downstream);
    FAIL();
  } catch (const IncompleteDataError& e) {
    EXPECT_GE(e.missing().size(), 2u);
  }
  // Skipping the bases whose data is missing makes the call well defined.
  EXPECT_NO_THROW(reconstruct_distribution(f, d.upstream, d.downstream, {basis("I"), basis("Z")}));
}

TEST(Reconstruct, sampled_estimate_converges) {
  const FragmentPair f = fragments_of(nongolden_circuit(0.5, 3));
  const auto ref = reference_distribution(nongolden_circuit(0.5, 3));
  const FragmentData lo = sample_fragment_data(f, 1000, 1);
  const FragmentData hi = sample_fragment_data(f, 200000, 1);
  const double e_lo = l2_distance(reconstruct_distribution(f, lo.upstream, lo.downstream), ref);
  const double e_hi = l2_distance(reconstruct_distribution(f, hi.upstream, hi.downstream), ref);
  EXPECT_LT(e_hi, e_lo);
  EXPECT_LT(e_hi, 0.01);
}

TEST(ClampAndNormalize, clamps_and_rescales) {
  const auto v = clamp_and_normalize({0.5, -0.1, 0.3, 0.2});
  EXPECT_NEAR(v[0], 0.5, 1e-15);
  EXPECT_EQ(v[1], 0.0);
  EXPECT_NEAR(std::accumulate(v.begin(), v.end(), 0.0), 1.0, 1e-15);
  EXPECT_EQ(clamp_and_normalize({0.0, 0.0}), (std::vector<double>{0.0, 0.0}));
}

TEST(PauliSplit, examples) {
  const FragmentPair bell = fragments_of("qubits 2\nh 1\ncx 1 0\ncut 0\nh 0\n");
  ASSERT_EQ(bell.n_upstream_outputs(), 1);
  auto t = pauli_split(Observable::parse("ZZ"), bell);
  ASSERT_EQ(t.size(), 1u);
  EXPECT_EQ(to_string(t[0].upstream), "Z");
  EXPECT_EQ(to_string(t[0].downstream), "Z");

  const FragmentPair three = fragments_of("qubits 3\nh 0\nh 1\nh 2\ncut 2\nh 2\n");
  t = pauli_split(Observable::parse("0.5*XIZ"), three);
  ASSERT_EQ(t.size(), 1u);
  EXPECT_DOUBLE_EQ(t[0].coefficient, 0.5);
  EXPECT_EQ(to_string(t[0].upstream), "XI");
  EXPECT_EQ(to_string(t[0].downstream), "Z");

  t = pauli_split(Observable::identity(3), three);
  EXPECT_EQ(to_string(t[0].upstream), "II");
  EXPECT_EQ(to_string(t[0].downstream), "I");
  EXPECT_THROW(pauli_split(Observable::parse("ZZ"), three), DimensionError);
}

TEST(Seeds, fragment_streams_are_distinct) {
  EXPECT_NE(upstream_seed(1, basis("X"), 0), upstream_seed(1, basis("Y"), 0));
  EXPECT_NE(upstream_seed(1, basis("X"), 0), upstream_seed(1, basis("X"), 1));
  EXPECT_NE(downstream_seed(1, basis("X"), Eigenstring{{1}}, 0), downstream_seed(1, basis("X"), Eigenstring{{-1}}, 0));
  EXPECT_NE(upstream_seed(1, basis("IX"), 0), upstream_seed(1, basis("X"), 0));
}

}  // namespace
}  // namespace goldcut

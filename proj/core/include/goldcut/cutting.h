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

#ifndef GOLDCUT_CUTTING_H
#define GOLDCUT_CUTTING_H

#include <cstdint>
#include <set>
#include <span>
#include <vector>

#include "goldcut/circuit.h"
#include "goldcut/pauli.h"
#include "goldcut/stats.h"

namespace goldcut {

using BasisSet = std::set<BasisElement>;

/// All 4^K basis elements in lexicographic order (I < X < Y < Z, cut 0 most significant).
/// Throws std::invalid_argument for k < 1.
std::vector<BasisElement> enumerate_bases(int k);

/// Position of `basis` in enumerate_bases order.
std::size_t basis_ordinal(const BasisElement& basis);

/// All 2^K eigenstrings ordered by Eigenstring::bits (all +1 first).
std::vector<Eigenstring> enumerate_eigenstrings(std::size_t k);

/// Product of the signs.
int parity(const Eigenstring& signs);

/// Product of the eigenvalues of the states labelled by `signs` under `basis`: sign i at
/// X/Y/Z positions, +1 at I positions (I = |0><0| + |1><1|).
int eigenvalue_parity(const BasisElement& basis, const Eigenstring& signs);

/// The basis actually executed upstream: I is measured in the Z frame.
BasisElement execution_basis(const BasisElement& basis);

/// Measurement outcome of the upstream fragment in basis M.
///
/// `distribution` is the joint empirical distribution over (b1, r): index
/// b1 | (r_bits << n_outputs), where b1 holds the upstream output wires and r the cut
/// eigenvalues (bit i set iff r_i = -1; always +1 at I-labelled cuts).
struct UpstreamResult {
  BasisElement basis;
  PauliString output_frame;
  int n_outputs = 0;
  EigenstringDistribution distribution;

  std::uint64_t joint_index(std::uint64_t b1, std::uint64_t r_bits) const {
    return b1 | (r_bits << n_outputs);
  }
};

/// Downstream fragment prepared in eigenstring `eigenstring` of M; distribution over all
/// downstream wires (cut wires first).
struct DownstreamResult {
  BasisElement basis;
  Eigenstring eigenstring;
  PauliString output_frame;
  EigenstringDistribution distribution;
};

struct FragmentData {
  std::vector<UpstreamResult> upstream;
  std::vector<DownstreamResult> downstream;
};

/// Raw upstream circuit for basis M and output frame: fragment gates followed by the
/// measurement rotations. An empty frame means Z on every output.
Circuit upstream_variant(const FragmentPair& fragments, const BasisElement& basis,
                         const PauliString& output_frame = {});

/// Raw downstream circuit: eigenstate preparation on the cut wires, fragment gates, then
/// the output-frame rotations.
Circuit downstream_variant(const FragmentPair& fragments, const BasisElement& basis,
                           const Eigenstring& eigenstring, const PauliString& output_frame = {});

/// Folds a raw upstream histogram (indexed by upstream wire bits) into the (b1, r) layout.
UpstreamResult upstream_from_counts(const FragmentPair& fragments, const BasisElement& basis,
                                    const PauliString& output_frame,
                                    std::span<const std::uint64_t> raw_counts);

UpstreamResult run_upstream(const FragmentPair& fragments, const BasisElement& basis,
                            std::uint64_t shots, std::uint64_t seed,
                            const PauliString& output_frame = {});
UpstreamResult exact_upstream(const FragmentPair& fragments, const BasisElement& basis,
                              const PauliString& output_frame = {});

DownstreamResult run_downstream(const FragmentPair& fragments, const BasisElement& basis,
                                const Eigenstring& eigenstring, std::uint64_t shots,
                                std::uint64_t seed, const PauliString& output_frame = {});
DownstreamResult exact_downstream(const FragmentPair& fragments, const BasisElement& basis,
                                  const Eigenstring& eigenstring,
                                  const PauliString& output_frame = {});

/// Distinct measurement frames needed by an observable, in first-appearance order.
std::vector<PauliString> observable_frames(const Observable& observable);

/// Stream seeds for one fragment execution, derived from the run's master seed.
std::uint64_t upstream_seed(std::uint64_t master, const BasisElement& basis, std::size_t frame);
std::uint64_t downstream_seed(std::uint64_t master, const BasisElement& basis,
                              const Eigenstring& eigenstring, std::size_t frame);

/// Every fragment variant, sampled with `shots` each. Empty frame lists mean the Z frame.
FragmentData sample_fragment_data(const FragmentPair& fragments, std::uint64_t shots,
                                  std::uint64_t master_seed,
                                  const std::vector<PauliString>& upstream_frames = {},
                                  const std::vector<PauliString>& downstream_frames = {});

/// Every fragment variant in the infinite-shot limit.
FragmentData exact_fragment_data(const FragmentPair& fragments,
                                 const std::vector<PauliString>& upstream_frames = {},
                                 const std::vector<PauliString>& downstream_frames = {});

/// sum_r Par(r) <O_f1>_{M,r}: the parity-weighted upstream expectation of basis M
/// (joint weights, so the sum is over sub-normalized fragment states).
double upstream_parity_expectation(std::span<const UpstreamResult> upstream,
                                   const BasisElement& basis, const Observable& upstream_observable);

/// (1/2^K) sum_{M not skipped} sum_{r,s} Par(r) Par(s) <O_f1>_{M,r} <O_f2>_{M,s}.
/// `upstream_observable` acts on the upstream outputs, `downstream_observable` on the
/// downstream wires. Throws IncompleteDataError listing every missing variant.
double reconstruct_expectation(std::span<const UpstreamResult> upstream,
                               std::span<const DownstreamResult> downstream,
                               const Observable& upstream_observable,
                               const Observable& downstream_observable,
                               const BasisSet& skipped = {});

/// Expectation of a full-width observable: the sum over its split Pauli terms.
double reconstruct_expectation(const FragmentPair& fragments,
                               std::span<const UpstreamResult> upstream,
                               std::span<const DownstreamResult> downstream,
                               const Observable& observable, const BasisSet& skipped = {});

/// Signed quasi-distribution over full N-qubit bitstrings (Z frame data):
/// q(b1, b2) = (1/2^K) sum_{M not skipped} sum_{r,s} Par(r) Par(s) p_M(b1, r) p_{M,s}(b2).
std::vector<double> reconstruct_distribution(const FragmentPair& fragments,
                                             std::span<const UpstreamResult> upstream,
                                             std::span<const DownstreamResult> downstream,
                                             const BasisSet& skipped = {});

/// Clamps negative entries to zero and rescales to unit sum (all-zero input is returned
/// unchanged).
std::vector<double> clamp_and_normalize(std::vector<double> quasi);

struct SplitTerm {
  double coefficient = 1.0;
  PauliString upstream;    // over the upstream output wires
  PauliString downstream;  // over the downstream wires
};

/// Splits each term of a full-width observable along the fragment output maps.
/// Throws DimensionError on width mismatch.
std::vector<SplitTerm> pauli_split(const Observable& observable, const FragmentPair& fragments);

}  // namespace goldcut

#endif  // GOLDCUT_CUTTING_H

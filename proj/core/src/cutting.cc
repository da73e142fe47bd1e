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

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>
#include <string>
#include <tuple>

#include "goldcut/errors.h"
#include "goldcut/rng.h"
#include "goldcut/statevector.h"

namespace goldcut {

IncompleteDataError::IncompleteDataError(std::vector<std::string> missing)
    : std::runtime_error([&] {
        std::string msg = "missing fragment data for " + std::to_string(missing.size()) +
                          " variant(s):";
        for (const auto& m : missing) msg += " [" + m + "]";
        return msg;
      }()),
      missing_(std::move(missing)) {}

std::vector<BasisElement> enumerate_bases(int k) {
  if (k < 1) {
    throw std::invalid_argument("enumerate_bases: K must be >= 1");
  }
  if (k > 12) {
    throw std::invalid_argument("enumerate_bases: K too large");
  }
  const std::size_t count = std::size_t{1} << (2 * k);
  std::vector<BasisElement> out(count);
  for (std::size_t o = 0; o < count; ++o) {
    out[o].labels.resize(k);
    for (int i = 0; i < k; ++i) {
      out[o].labels[i] = static_cast<Pauli>((o >> (2 * (k - 1 - i))) & 3U);
    }
  }
  return out;
}

std::size_t basis_ordinal(const BasisElement& basis) {
  std::size_t o = 0;
  for (Pauli p : basis.labels) o = (o << 2) | static_cast<std::size_t>(p);
  return o;
}

std::vector<Eigenstring> enumerate_eigenstrings(std::size_t k) {
  std::vector<Eigenstring> out;
  out.reserve(std::size_t{1} << k);
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << k); ++bits) {
    out.push_back(Eigenstring::from_bits(bits, k));
  }
  return out;
}

int parity(const Eigenstring& signs) {
  int p = 1;
  for (int s : signs.signs) p *= s < 0 ? -1 : 1;
  return p;
}

int eigenvalue_parity(const BasisElement& basis, const Eigenstring& signs) {
  if (basis.k() != signs.k()) {
    throw std::invalid_argument("eigenvalue_parity: length mismatch");
  }
  int p = 1;
  for (std::size_t i = 0; i < basis.k(); ++i) {
    if (basis.labels[i] != Pauli::kI && signs.signs[i] < 0) p = -p;
  }
  return p;
}

BasisElement execution_basis(const BasisElement& basis) {
  BasisElement out = basis;
  for (Pauli& p : out.labels) {
    if (p == Pauli::kI) p = Pauli::kZ;
  }
  return out;
}

namespace {

void check_basis(const FragmentPair& fragments, const BasisElement& basis) {
  if (basis.k() != fragments.k()) {
    throw std::invalid_argument("basis " + basis.to_string() + " has length " +
                                std::to_string(basis.k()) + ", expected K = " +
                                std::to_string(fragments.k()));
  }
}

PauliString resolve_frame(const PauliString& frame, std::size_t width, const char* what) {
  if (frame.empty()) return PauliString(width, Pauli::kZ);
  if (frame.size() != width) {
    throw DimensionError(std::string(what) + " frame has width " + std::to_string(frame.size()) +
                         ", expected " + std::to_string(width));
  }
  return measurement_frame(frame);
}

template <typename T>
std::vector<T> fold_upstream(const FragmentPair& fragments, const BasisElement& basis,
                             std::span<const T> raw) {
  const int n_out = fragments.n_upstream_outputs();
  std::vector<T> joint(std::size_t{1} << (n_out + fragments.k()), T{});
  for (std::size_t u = 0; u < raw.size(); ++u) {
    std::uint64_t b1 = 0;
    for (int j = 0; j < n_out; ++j) {
      if ((u >> fragments.upstream_output_wires[j]) & 1U) b1 |= std::uint64_t{1} << j;
    }
    std::uint64_t r = 0;
    for (std::size_t i = 0; i < fragments.k(); ++i) {
      if (basis.labels[i] != Pauli::kI && ((u >> fragments.upstream_cut_wires[i]) & 1U)) {
        r |= std::uint64_t{1} << i;
      }
    }
    joint[b1 | (r << n_out)] += raw[u];
  }
  return joint;
}

std::string upstream_key(const BasisElement& m, const PauliString& frame) {
  return "upstream M=" + m.to_string() + " frame=" + to_string(frame);
}

std::string downstream_key(const BasisElement& m, const Eigenstring& s, const PauliString& frame) {
  return "downstream M=" + m.to_string() + " s=" + s.to_string() + " frame=" + to_string(frame);
}

std::size_t infer_k(std::span<const UpstreamResult> upstream,
                    std::span<const DownstreamResult> downstream, const BasisSet& skipped) {
  if (!upstream.empty()) return upstream.front().basis.k();
  if (!downstream.empty()) return downstream.front().basis.k();
  if (!skipped.empty()) return skipped.begin()->k();
  throw IncompleteDataError({"no fragment data and no skipped bases; K is unknown"});
}

class ResultIndex {
 public:
  ResultIndex(std::span<const UpstreamResult> upstream, std::span<const DownstreamResult> downstream) {
    for (const auto& u : upstream) up_[{u.basis, u.output_frame}] = &u;
    for (const auto& d : downstream) down_[{d.basis, d.eigenstring, d.output_frame}] = &d;
  }

  const UpstreamResult* find(const BasisElement& m, const PauliString& frame,
                             std::vector<std::string>& missing) const {
    auto it = up_.find({m, frame});
    if (it == up_.end()) {
      missing.push_back(upstream_key(m, frame));
      return nullptr;
    }
    return it->second;
  }

  const DownstreamResult* find(const BasisElement& m, const Eigenstring& s,
                               const PauliString& frame, std::vector<std::string>& missing) const {
    auto it = down_.find({m, s, frame});
    if (it == down_.end()) {
      missing.push_back(downstream_key(m, s, frame));
      return nullptr;
    }
    return it->second;
  }

 private:
  std::map<std::pair<BasisElement, PauliString>, const UpstreamResult*> up_;
  std::map<std::tuple<BasisElement, Eigenstring, PauliString>, const DownstreamResult*> down_;
};

int sign_of_bits(std::uint64_t bits) { return (std::popcount(bits) & 1) ? -1 : 1; }

// Per r: sum_S a_S sum_b1 eig_S(b1) p(b1, r).
std::vector<double> upstream_expectations(const ResultIndex& index, const BasisElement& m,
                                          const Observable& obs, std::size_t k,
                                          std::vector<std::string>& missing) {
  std::vector<double> e(std::size_t{1} << k, 0.0);
  for (const PauliTerm& term : obs.terms()) {
    const UpstreamResult* u = index.find(m, measurement_frame(term.paulis), missing);
    if (!u) continue;
    if (static_cast<std::size_t>(u->n_outputs) != term.paulis.size()) {
      throw DimensionError("upstream observable width " + std::to_string(term.paulis.size()) +
                           " != " + std::to_string(u->n_outputs) + " upstream outputs");
    }
    const auto& p = u->distribution.probabilities;
    const std::uint64_t out_mask = (std::uint64_t{1} << u->n_outputs) - 1;
    for (std::uint64_t idx = 0; idx < p.size(); ++idx) {
      if (p[idx] == 0.0) continue;
      e[idx >> u->n_outputs] += term.coefficient * pauli_eigenvalue(term.paulis, idx & out_mask) * p[idx];
    }
  }
  return e;
}

}  // namespace

Circuit upstream_variant(const FragmentPair& fragments, const BasisElement& basis,
                         const PauliString& output_frame) {
  check_basis(fragments, basis);
  const PauliString frame =
      resolve_frame(output_frame, fragments.upstream_output_wires.size(), "upstream output");
  Circuit c = fragments.upstream;
  for (std::size_t i = 0; i < fragments.k(); ++i) {
    for (const Gate& g : measurement_rotation(basis.labels[i], fragments.upstream_cut_wires[i])) {
      c.gates.push_back(g);
    }
  }
  for (std::size_t j = 0; j < frame.size(); ++j) {
    for (const Gate& g : measurement_rotation(frame[j], fragments.upstream_output_wires[j])) {
      c.gates.push_back(g);
    }
  }
  return c;
}

Circuit downstream_variant(const FragmentPair& fragments, const BasisElement& basis,
                           const Eigenstring& eigenstring, const PauliString& output_frame) {
  check_basis(fragments, basis);
  if (eigenstring.k() != fragments.k()) {
    throw std::invalid_argument("eigenstring " + eigenstring.to_string() + " has length " +
                                std::to_string(eigenstring.k()) + ", expected K = " +
                                std::to_string(fragments.k()));
  }
  const PauliString frame = resolve_frame(
      output_frame, static_cast<std::size_t>(fragments.downstream.n_qubits), "downstream output");
  Circuit c;
  c.n_qubits = fragments.downstream.n_qubits;
  for (std::size_t i = 0; i < fragments.k(); ++i) {
    for (const Gate& g : prepare_eigenstate(basis.labels[i], eigenstring.signs[i], static_cast<int>(i))) {
      c.gates.push_back(g);
    }
  }
  c.gates.insert(c.gates.end(), fragments.downstream.gates.begin(), fragments.downstream.gates.end());
  for (std::size_t w = 0; w < frame.size(); ++w) {
    for (const Gate& g : measurement_rotation(frame[w], static_cast<int>(w))) c.gates.push_back(g);
  }
  return c;
}

UpstreamResult upstream_from_counts(const FragmentPair& fragments, const BasisElement& basis,
                                    const PauliString& output_frame,
                                    std::span<const std::uint64_t> raw_counts) {
  check_basis(fragments, basis);
  if (raw_counts.size() != (std::size_t{1} << fragments.upstream.n_qubits)) {
    throw DimensionError("upstream_from_counts: histogram size does not match the fragment");
  }
  UpstreamResult out;
  out.basis = basis;
  out.output_frame =
      resolve_frame(output_frame, fragments.upstream_output_wires.size(), "upstream output");
  out.n_outputs = fragments.n_upstream_outputs();
  const auto joint = fold_upstream<std::uint64_t>(fragments, basis, raw_counts);
  out.distribution = EigenstringDistribution::from_counts(joint);
  return out;
}

UpstreamResult run_upstream(const FragmentPair& fragments, const BasisElement& basis,
                            std::uint64_t shots, std::uint64_t seed, const PauliString& output_frame) {
  if (shots == 0) {
    throw std::invalid_argument("run_upstream: shots must be >= 1");
  }
  const Circuit c = upstream_variant(fragments, basis, output_frame);
  const StateVector state = run_circuit(c, StateVector(c.n_qubits));
  const auto counts = sample_bitstrings(state, shots, seed);
  return upstream_from_counts(fragments, basis, output_frame, counts);
}

UpstreamResult exact_upstream(const FragmentPair& fragments, const BasisElement& basis,
                              const PauliString& output_frame) {
  const Circuit c = upstream_variant(fragments, basis, output_frame);
  const auto probs = exact_probabilities(run_circuit(c, StateVector(c.n_qubits)));
  UpstreamResult out;
  out.basis = basis;
  out.output_frame =
      resolve_frame(output_frame, fragments.upstream_output_wires.size(), "upstream output");
  out.n_outputs = fragments.n_upstream_outputs();
  out.distribution = EigenstringDistribution::exact(fold_upstream<double>(fragments, basis, probs));
  return out;
}

DownstreamResult run_downstream(const FragmentPair& fragments, const BasisElement& basis,
                                const Eigenstring& eigenstring, std::uint64_t shots,
                                std::uint64_t seed, const PauliString& output_frame) {
  if (shots == 0) {
    throw std::invalid_argument("run_downstream: shots must be >= 1");
  }
  const Circuit c = downstream_variant(fragments, basis, eigenstring, output_frame);
  const StateVector state = run_circuit(c, StateVector(c.n_qubits));
  DownstreamResult out;
  out.basis = basis;
  out.eigenstring = eigenstring;
  out.output_frame = resolve_frame(output_frame, static_cast<std::size_t>(c.n_qubits), "downstream output");
  out.distribution = EigenstringDistribution::from_counts(sample_bitstrings(state, shots, seed));
  return out;
}

DownstreamResult exact_downstream(const FragmentPair& fragments, const BasisElement& basis,
                                  const Eigenstring& eigenstring, const PauliString& output_frame) {
  const Circuit c = downstream_variant(fragments, basis, eigenstring, output_frame);
  DownstreamResult out;
  out.basis = basis;
  out.eigenstring = eigenstring;
  out.output_frame = resolve_frame(output_frame, static_cast<std::size_t>(c.n_qubits), "downstream output");
  out.distribution =
      EigenstringDistribution::exact(exact_probabilities(run_circuit(c, StateVector(c.n_qubits))));
  return out;
}

std::vector<PauliString> observable_frames(const Observable& observable) {
  std::vector<PauliString> frames;
  for (const PauliTerm& t : observable.terms()) {
    PauliString f = measurement_frame(t.paulis);
    if (std::find(frames.begin(), frames.end(), f) == frames.end()) frames.push_back(std::move(f));
  }
  return frames;
}

std::uint64_t upstream_seed(std::uint64_t master, const BasisElement& basis, std::size_t frame) {
  return derive_seed(master, {1, basis.k(), basis_ordinal(basis), frame});
}

std::uint64_t downstream_seed(std::uint64_t master, const BasisElement& basis,
                              const Eigenstring& eigenstring, std::size_t frame) {
  return derive_seed(master, {2, basis.k(), basis_ordinal(basis), eigenstring.bits(), frame});
}

namespace {

std::vector<PauliString> frames_or_z(const std::vector<PauliString>& frames, std::size_t width) {
  if (frames.empty()) return {PauliString(width, Pauli::kZ)};
  return frames;
}

template <typename UpFn, typename DownFn>
FragmentData collect(const FragmentPair& fragments, const std::vector<PauliString>& upstream_frames,
                     const std::vector<PauliString>& downstream_frames, UpFn&& up, DownFn&& down) {
  FragmentData data;
  const auto up_frames = frames_or_z(upstream_frames, fragments.upstream_output_wires.size());
  const auto down_frames =
      frames_or_z(downstream_frames, static_cast<std::size_t>(fragments.downstream.n_qubits));
  for (const BasisElement& m : enumerate_bases(static_cast<int>(fragments.k()))) {
    for (std::size_t f = 0; f < up_frames.size(); ++f) data.upstream.push_back(up(m, up_frames[f], f));
    for (const Eigenstring& s : enumerate_eigenstrings(fragments.k())) {
      for (std::size_t f = 0; f < down_frames.size(); ++f) {
        data.downstream.push_back(down(m, s, down_frames[f], f));
      }
    }
  }
  return data;
}

}  // namespace

FragmentData sample_fragment_data(const FragmentPair& fragments, std::uint64_t shots,
                                  std::uint64_t master_seed,
                                  const std::vector<PauliString>& upstream_frames,
                                  const std::vector<PauliString>& downstream_frames) {
  return collect(
      fragments, upstream_frames, downstream_frames,
      [&](const BasisElement& m, const PauliString& frame, std::size_t f) {
        return run_upstream(fragments, m, shots, upstream_seed(master_seed, m, f), frame);
      },
      [&](const BasisElement& m, const Eigenstring& s, const PauliString& frame, std::size_t f) {
        return run_downstream(fragments, m, s, shots, downstream_seed(master_seed, m, s, f), frame);
      });
}

FragmentData exact_fragment_data(const FragmentPair& fragments,
                                 const std::vector<PauliString>& upstream_frames,
                                 const std::vector<PauliString>& downstream_frames) {
  return collect(
      fragments, upstream_frames, downstream_frames,
      [&](const BasisElement& m, const PauliString& frame, std::size_t) {
        return exact_upstream(fragments, m, frame);
      },
      [&](const BasisElement& m, const Eigenstring& s, const PauliString& frame, std::size_t) {
        return exact_downstream(fragments, m, s, frame);
      });
}

double upstream_parity_expectation(std::span<const UpstreamResult> upstream,
                                   const BasisElement& basis, const Observable& upstream_observable) {
  ResultIndex index(upstream, {});
  std::vector<std::string> missing;
  const auto e = upstream_expectations(index, basis, upstream_observable, basis.k(), missing);
  if (!missing.empty()) throw IncompleteDataError(std::move(missing));
  double tau = 0.0;
  for (std::uint64_t r = 0; r < e.size(); ++r) tau += sign_of_bits(r) * e[r];
  return tau;
}

double reconstruct_expectation(std::span<const UpstreamResult> upstream,
                               std::span<const DownstreamResult> downstream,
                               const Observable& upstream_observable,
                               const Observable& downstream_observable, const BasisSet& skipped) {
  const std::size_t k = infer_k(upstream, downstream, skipped);
  ResultIndex index(upstream, downstream);
  std::vector<std::string> missing;
  const auto eigenstrings = enumerate_eigenstrings(k);
  double total = 0.0;
  for (const BasisElement& m : enumerate_bases(static_cast<int>(k))) {
    if (skipped.contains(m)) continue;
    const auto e1 = upstream_expectations(index, m, upstream_observable, k, missing);
    std::vector<double> e2(eigenstrings.size(), 0.0);
    for (std::size_t si = 0; si < eigenstrings.size(); ++si) {
      for (const PauliTerm& term : downstream_observable.terms()) {
        const DownstreamResult* d =
            index.find(m, eigenstrings[si], measurement_frame(term.paulis), missing);
        if (!d) continue;
        const auto& p = d->distribution.probabilities;
        if (p.size() != (std::size_t{1} << term.paulis.size())) {
          throw DimensionError("downstream observable width " + std::to_string(term.paulis.size()) +
                               " does not match the downstream fragment");
        }
        for (std::uint64_t b2 = 0; b2 < p.size(); ++b2) {
          e2[si] += term.coefficient * pauli_eigenvalue(term.paulis, b2) * p[b2];
        }
      }
    }
    for (std::uint64_t r = 0; r < e1.size(); ++r) {
      for (std::size_t si = 0; si < eigenstrings.size(); ++si) {
        total += sign_of_bits(r) * eigenvalue_parity(m, eigenstrings[si]) * e1[r] * e2[si];
      }
    }
  }
  if (!missing.empty()) throw IncompleteDataError(std::move(missing));
  return total / static_cast<double>(std::uint64_t{1} << k);
}

double reconstruct_expectation(const FragmentPair& fragments,
                               std::span<const UpstreamResult> upstream,
                               std::span<const DownstreamResult> downstream,
                               const Observable& observable, const BasisSet& skipped) {
  double total = 0.0;
  for (const SplitTerm& t : pauli_split(observable, fragments)) {
    total += t.coefficient * reconstruct_expectation(upstream, downstream, Observable::single(t.upstream),
                                                     Observable::single(t.downstream), skipped);
  }
  return total;
}

std::vector<double> reconstruct_distribution(const FragmentPair& fragments,
                                             std::span<const UpstreamResult> upstream,
                                             std::span<const DownstreamResult> downstream,
                                             const BasisSet& skipped) {
  const std::size_t k = fragments.k();
  const int n_out = fragments.n_upstream_outputs();
  const int n_down = fragments.downstream.n_qubits;
  const PauliString up_frame(static_cast<std::size_t>(n_out), Pauli::kZ);
  const PauliString down_frame(static_cast<std::size_t>(n_down), Pauli::kZ);

  std::vector<std::uint64_t> up_full(std::size_t{1} << n_out, 0);
  for (std::uint64_t b1 = 0; b1 < up_full.size(); ++b1) {
    for (int j = 0; j < n_out; ++j) {
      if ((b1 >> j) & 1U) up_full[b1] |= std::uint64_t{1} << fragments.upstream_output_qubit(j);
    }
  }
  std::vector<std::uint64_t> down_full(std::size_t{1} << n_down, 0);
  for (std::uint64_t b2 = 0; b2 < down_full.size(); ++b2) {
    for (int w = 0; w < n_down; ++w) {
      if ((b2 >> w) & 1U) down_full[b2] |= std::uint64_t{1} << fragments.downstream_qubits[w];
    }
  }

  ResultIndex index(upstream, downstream);
  std::vector<std::string> missing;
  const auto eigenstrings = enumerate_eigenstrings(k);
  std::vector<double> q(std::size_t{1} << fragments.n_qubits, 0.0);
  std::vector<double> tau(up_full.size());
  std::vector<double> d(down_full.size());
  for (const BasisElement& m : enumerate_bases(static_cast<int>(k))) {
    if (skipped.contains(m)) continue;
    const UpstreamResult* u = index.find(m, up_frame, missing);
    std::fill(d.begin(), d.end(), 0.0);
    bool have_all_down = true;
    for (const Eigenstring& s : eigenstrings) {
      const DownstreamResult* dr = index.find(m, s, down_frame, missing);
      if (!dr) {
        have_all_down = false;
        continue;
      }
      const int w = eigenvalue_parity(m, s);
      const auto& p = dr->distribution.probabilities;
      if (p.size() != d.size()) {
        throw DimensionError("downstream result does not match the fragment width");
      }
      for (std::size_t b2 = 0; b2 < d.size(); ++b2) d[b2] += w * p[b2];
    }
    if (!u || !have_all_down) continue;
    const auto& p = u->distribution.probabilities;
    if (p.size() != (tau.size() << k)) {
      throw DimensionError("upstream result does not match the fragment width");
    }
    std::fill(tau.begin(), tau.end(), 0.0);
    for (std::uint64_t idx = 0; idx < p.size(); ++idx) {
      tau[idx & (tau.size() - 1)] += sign_of_bits(idx >> n_out) * p[idx];
    }
    for (std::size_t b1 = 0; b1 < tau.size(); ++b1) {
      if (tau[b1] == 0.0) continue;
      for (std::size_t b2 = 0; b2 < d.size(); ++b2) q[up_full[b1] | down_full[b2]] += tau[b1] * d[b2];
    }
  }
  if (!missing.empty()) throw IncompleteDataError(std::move(missing));
  const double scale = 1.0 / static_cast<double>(std::uint64_t{1} << k);
  for (double& v : q) v *= scale;
  return q;
}

std::vector<double> clamp_and_normalize(std::vector<double> quasi) {
  double total = 0.0;
  for (double& v : quasi) {
    v = std::max(0.0, v);
    total += v;
  }
  if (total > 0.0) {
    for (double& v : quasi) v /= total;
  }
  return quasi;
}

std::vector<SplitTerm> pauli_split(const Observable& observable, const FragmentPair& fragments) {
  if (observable.width() != static_cast<std::size_t>(fragments.n_qubits)) {
    throw DimensionError("pauli_split: observable width " + std::to_string(observable.width()) +
                         " != circuit width " + std::to_string(fragments.n_qubits));
  }
  std::vector<SplitTerm> out;
  for (const PauliTerm& t : observable.terms()) {
    SplitTerm s;
    s.coefficient = t.coefficient;
    for (int j = 0; j < fragments.n_upstream_outputs(); ++j) {
      s.upstream.push_back(t.paulis[fragments.upstream_output_qubit(j)]);
    }
    for (int q : fragments.downstream_qubits) s.downstream.push_back(t.paulis[q]);
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace goldcut

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

#ifndef GOLDCUT_STATS_H
#define GOLDCUT_STATS_H

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "goldcut/pauli.h"

namespace goldcut {

/// Empirical distribution over measurement outcomes. Outcome index bit j set means the
/// j-th entry of the sign string is -1. `shots` is absent for exact (infinite-shot)
/// distributions, whose standard error is zero.
struct EigenstringDistribution {
  std::vector<double> probabilities;
  std::optional<std::uint64_t> shots;

  /// p_b = counts[b] / sum(counts). Throws std::invalid_argument on zero total.
  static EigenstringDistribution from_counts(std::span<const std::uint64_t> counts);
  static EigenstringDistribution exact(std::vector<double> probabilities);

  std::size_t size() const { return probabilities.size(); }
};

/// Parity weights chi_b = prod_j s_j(b) over the sign positions selected by `mask`.
std::vector<double> parity_weights(std::size_t n_outcomes, std::uint64_t mask);

struct TauEstimate {
  double tau_hat = 0.0;
  double std_err = 0.0;
  std::optional<std::uint64_t> shots;
  BasisElement basis;
  std::vector<double> coefficients;
};

/// tau_hat = sum_S a_S sum_b chi_S(b) p_S(b), one distribution and weight vector per term,
/// with the standard error from the multinomial covariance (terms are independent runs,
/// so their variances add). Throws std::invalid_argument for empty or mismatched input.
TauEstimate estimate_tau(std::span<const EigenstringDistribution> distributions,
                         std::span<const std::vector<double>> weights,
                         std::span<const double> coefficients, BasisElement basis = {});

TauEstimate estimate_tau(const EigenstringDistribution& distribution,
                         const std::vector<double>& weights, double coefficient = 1.0,
                         BasisElement basis = {});

/// sqrt( sum_S a_S^2 / m * chi^T (diag(p_S) - p_S p_S^T) chi ). Throws for m == 0.
double std_error(std::span<const EigenstringDistribution> distributions,
                 std::span<const std::vector<double>> weights,
                 std::span<const double> coefficients, std::uint64_t shots);

double normal_cdf(double x);

/// Inverse standard-normal CDF (Wichura AS241, ~1e-16 relative accuracy).
/// Throws std::invalid_argument unless 0 < p < 1.
double normal_quantile(double p);

/// How the significance level maps onto the |tau_hat| threshold.
///   kTwoSided:        z = Phi^-1(1 - alpha/2); a true null is rejected with probability alpha.
///   kOneSidedQuantile: z = Phi^-1(1 - alpha) applied to |tau_hat|; rejects a true null
///                      with probability 2*alpha.
enum class Sidedness { kTwoSided, kOneSidedQuantile };

double critical_value(double alpha, Sidedness sidedness);

struct HypothesisOutcome {
  BasisElement basis;
  /// The decisive estimate: the only one in expectation mode, the component with the
  /// largest |tau_hat| / threshold in distribution mode.
  TauEstimate estimate;
  double alpha = 0.0;
  double critical_value = 0.0;  // per-component z after any Bonferroni split
  bool rejected = false;        // true: non-golden, run the downstream variants
  std::vector<TauEstimate> components;
};

/// Rejects iff |tau_hat| > z * std_err. With std_err == 0 the outcome is deterministic:
/// reject iff tau_hat != 0. Throws std::invalid_argument unless 0 < alpha < 1.
HypothesisOutcome test_golden(const TauEstimate& estimate, double alpha,
                              Sidedness sidedness = Sidedness::kTwoSided);

/// Joint test over a vector of components: each is tested at alpha / n_components and the
/// basis is rejected if any component is.
HypothesisOutcome test_golden_components(const BasisElement& basis,
                                         std::vector<TauEstimate> components, double alpha,
                                         Sidedness sidedness = Sidedness::kTwoSided);

struct ShotPlan {
  double epsilon = 0.0;
  double delta = 0.0;
  double b_bound = 0.0;
  std::uint64_t required_shots = 0;
};

/// ceil( 2 b^2 / eps^2 * ln(2/delta) ). Throws std::invalid_argument for eps <= 0,
/// delta outside (0,1) or b <= 0.
std::uint64_t required_shots(double epsilon, double delta, double b);
ShotPlan plan_shots(double epsilon, double delta, double b);

/// (3/2) (1 - 2^-n): a priori bound on b for an n-qubit upstream fragment.
double b_upper_bound(int n_upstream_qubits);

}  // namespace goldcut

#endif  // GOLDCUT_STATS_H

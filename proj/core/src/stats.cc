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

#include "goldcut/stats.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace goldcut {

EigenstringDistribution EigenstringDistribution::from_counts(std::span<const std::uint64_t> counts) {
  std::uint64_t total = 0;
  for (auto c : counts) total += c;
  if (total == 0) {
    throw std::invalid_argument("EigenstringDistribution: no samples");
  }
  EigenstringDistribution out;
  out.probabilities.resize(counts.size());
  for (std::size_t i = 0; i < counts.size(); ++i) {
    out.probabilities[i] = static_cast<double>(counts[i]) / static_cast<double>(total);
  }
  out.shots = total;
  return out;
}

EigenstringDistribution EigenstringDistribution::exact(std::vector<double> probabilities) {
  return EigenstringDistribution{std::move(probabilities), std::nullopt};
}

std::vector<double> parity_weights(std::size_t n_outcomes, std::uint64_t mask) {
  std::vector<double> chi(n_outcomes);
  for (std::size_t b = 0; b < n_outcomes; ++b) {
    chi[b] = (std::popcount(b & mask) & 1) ? -1.0 : 1.0;
  }
  return chi;
}

namespace {

void check_terms(std::span<const EigenstringDistribution> distributions,
                 std::span<const std::vector<double>> weights, std::span<const double> coefficients) {
  if (distributions.empty()) {
    throw std::invalid_argument("estimate_tau: empty distribution list");
  }
  if (weights.size() != distributions.size() || coefficients.size() != distributions.size()) {
    throw std::invalid_argument("estimate_tau: one weight vector and coefficient per term required");
  }
  for (std::size_t t = 0; t < distributions.size(); ++t) {
    if (distributions[t].probabilities.empty()) {
      throw std::invalid_argument("estimate_tau: empty distribution");
    }
    if (weights[t].size() != distributions[t].size()) {
      throw std::invalid_argument("estimate_tau: weight vector length " +
                                  std::to_string(weights[t].size()) + " != " +
                                  std::to_string(distributions[t].size()) + " outcomes");
    }
  }
}

// chi^T (diag(p) - p p^T) chi = sum chi^2 p - (sum chi p)^2
double quadratic_form(const std::vector<double>& p, const std::vector<double>& chi) {
  double second = 0.0;
  double first = 0.0;
  for (std::size_t b = 0; b < p.size(); ++b) {
    second += chi[b] * chi[b] * p[b];
    first += chi[b] * p[b];
  }
  return std::max(0.0, second - first * first);
}

}  // namespace

double std_error(std::span<const EigenstringDistribution> distributions,
                 std::span<const std::vector<double>> weights,
                 std::span<const double> coefficients, std::uint64_t shots) {
  if (shots == 0) {
    throw std::invalid_argument("std_error: shots must be >= 1");
  }
  check_terms(distributions, weights, coefficients);
  double variance = 0.0;
  for (std::size_t t = 0; t < distributions.size(); ++t) {
    variance += coefficients[t] * coefficients[t] / static_cast<double>(shots) *
                quadratic_form(distributions[t].probabilities, weights[t]);
  }
  return std::sqrt(variance);
}

TauEstimate estimate_tau(std::span<const EigenstringDistribution> distributions,
                         std::span<const std::vector<double>> weights,
                         std::span<const double> coefficients, BasisElement basis) {
  check_terms(distributions, weights, coefficients);
  TauEstimate out;
  out.basis = std::move(basis);
  out.coefficients.assign(coefficients.begin(), coefficients.end());
  out.shots = distributions.front().shots;
  double variance = 0.0;
  for (std::size_t t = 0; t < distributions.size(); ++t) {
    const auto& p = distributions[t].probabilities;
    double term = 0.0;
    for (std::size_t b = 0; b < p.size(); ++b) term += weights[t][b] * p[b];
    out.tau_hat += coefficients[t] * term;
    if (distributions[t].shots) {
      variance += coefficients[t] * coefficients[t] / static_cast<double>(*distributions[t].shots) *
                  quadratic_form(p, weights[t]);
    }
  }
  out.std_err = std::sqrt(variance);
  return out;
}

TauEstimate estimate_tau(const EigenstringDistribution& distribution,
                         const std::vector<double>& weights, double coefficient,
                         BasisElement basis) {
  return estimate_tau(std::span(&distribution, 1), std::span(&weights, 1),
                      std::span(&coefficient, 1), std::move(basis));
}

double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::numbers::sqrt2); }

double normal_quantile(double p) {
  if (!(p > 0.0 && p < 1.0)) {
    throw std::invalid_argument("normal_quantile: p must lie in (0, 1)");
  }
  const double q = p - 0.5;
  double x;
  if (std::abs(q) <= 0.425) {
    const double r = 0.180625 - q * q;
    x = q *
        (((((((2.5090809287301226727e+3 * r + 3.3430575583588128105e+4) * r +
              6.7265770927008700853e+4) * r + 4.5921953931549871457e+4) * r +
            1.3731693765509461125e+4) * r + 1.9715909503065514427e+3) * r +
          1.3314166789178437745e+2) * r + 3.3871328727963666080e+0) /
        (((((((5.2264952788528545610e+3 * r + 2.8729085735721942674e+4) * r +
              3.9307895800092710610e+4) * r + 2.1213794301586595867e+4) * r +
            5.3941960214247511077e+3) * r + 6.8718700749205790830e+2) * r +
          4.2313330701600911252e+1) * r + 1.0);
  } else {
    double r = q < 0 ? p : 1.0 - p;
    r = std::sqrt(-std::log(r));
    if (r <= 5.0) {
      r -= 1.6;
      x = (((((((7.74545014278341407640e-4 * r + 2.27238449892691845833e-2) * r +
                2.41780725177450611770e-1) * r + 1.27045825245236838258e+0) * r +
              3.64784832476320460504e+0) * r + 5.76949722146069140550e+0) * r +
            4.63033784615654529590e+0) * r + 1.42343711074968357734e+0) /
          (((((((1.05075007164441684324e-9 * r + 5.47593808499534494600e-4) * r +
                1.51986665636164571966e-2) * r + 1.48103976427480074590e-1) * r +
              6.89767334985100004550e-1) * r + 1.67638483018380384940e+0) * r +
            2.05319162663775882187e+0) * r + 1.0);
    } else {
      r -= 5.0;
      x = (((((((2.01033439929228813265e-7 * r + 2.71155556874348757815e-5) * r +
                1.24266094738807843860e-3) * r + 2.65321895265761230930e-2) * r +
              2.96560571828504891230e-1) * r + 1.78482653991729133580e+0) * r +
            5.46378491116411436990e+0) * r + 6.65790464350110377720e+0) /
          (((((((2.04426310338993978564e-15 * r + 1.42151175831644588870e-7) * r +
                1.84631831751005468180e-5) * r + 7.86869131145613259100e-4) * r +
              1.48753612908506148525e-2) * r + 1.36929880922735805310e-1) * r +
            5.99832206555887937690e-1) * r + 1.0);
    }
    if (q < 0) x = -x;
  }
  return x;
}

double critical_value(double alpha, Sidedness sidedness) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw std::invalid_argument("significance level must lie in (0, 1)");
  }
  return sidedness == Sidedness::kTwoSided ? normal_quantile(1.0 - alpha / 2.0)
                                           : normal_quantile(1.0 - alpha);
}

namespace {

bool exceeds(const TauEstimate& e, double z) {
  if (e.std_err > 0.0) return std::abs(e.tau_hat) > z * e.std_err;
  return e.tau_hat != 0.0;
}

double standardized(const TauEstimate& e, double z) {
  if (e.std_err > 0.0) return std::abs(e.tau_hat) / (z * e.std_err);
  return e.tau_hat != 0.0 ? std::numeric_limits<double>::infinity() : 0.0;
}

}  // namespace

HypothesisOutcome test_golden(const TauEstimate& estimate, double alpha, Sidedness sidedness) {
  HypothesisOutcome out;
  out.basis = estimate.basis;
  out.estimate = estimate;
  out.alpha = alpha;
  out.critical_value = critical_value(alpha, sidedness);
  out.rejected = exceeds(estimate, out.critical_value);
  return out;
}

HypothesisOutcome test_golden_components(const BasisElement& basis,
                                         std::vector<TauEstimate> components, double alpha,
                                         Sidedness sidedness) {
  if (components.empty()) {
    throw std::invalid_argument("test_golden_components: no components");
  }
  HypothesisOutcome out;
  out.basis = basis;
  out.alpha = alpha;
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw std::invalid_argument("significance level must lie in (0, 1)");
  }
  out.critical_value = critical_value(alpha / static_cast<double>(components.size()), sidedness);
  std::size_t decisive = 0;
  double worst = -1.0;
  for (std::size_t i = 0; i < components.size(); ++i) {
    components[i].basis = basis;
    out.rejected = out.rejected || exceeds(components[i], out.critical_value);
    double s = standardized(components[i], out.critical_value);
    if (s > worst) {
      worst = s;
      decisive = i;
    }
  }
  out.estimate = components[decisive];
  out.components = std::move(components);
  return out;
}

std::uint64_t required_shots(double epsilon, double delta, double b) {
  if (!(epsilon > 0.0)) throw std::invalid_argument("required_shots: epsilon must be positive");
  if (!(delta > 0.0 && delta < 1.0)) throw std::invalid_argument("required_shots: delta must lie in (0, 1)");
  if (!(b > 0.0)) throw std::invalid_argument("required_shots: b must be positive");
  const double m = 2.0 * b * b / (epsilon * epsilon) * std::log(2.0 / delta);
  // Absorb rounding noise so exact integers do not ceil up by one.
  const double ceiled = std::ceil(m * (1.0 - 1e-12));
  return std::max<std::uint64_t>(1, static_cast<std::uint64_t>(ceiled));
}

ShotPlan plan_shots(double epsilon, double delta, double b) {
  return ShotPlan{epsilon, delta, b, required_shots(epsilon, delta, b)};
}

double b_upper_bound(int n_upstream_qubits) {
  if (n_upstream_qubits < 1) {
    throw std::invalid_argument("b_upper_bound: need at least one upstream qubit");
  }
  return 1.5 * (1.0 - std::ldexp(1.0, -n_upstream_qubits));
}

}  // namespace goldcut

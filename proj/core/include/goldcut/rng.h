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

#ifndef GOLDCUT_RNG_H
#define GOLDCUT_RNG_H

#include <cstdint>
#include <initializer_list>
#include <random>

namespace goldcut {

/// One step of the SplitMix64 generator. Advances `state` and returns the mixed output.
std::uint64_t splitmix64(std::uint64_t& state);

/// Derives an independent stream seed from a master seed and a path of integer labels.
///
/// The path is folded one label at a time: the running seed is mixed with SplitMix64,
/// xored with the label, and mixed again. Distinct paths give statistically unrelated
/// seeds, so every (trial, variant, ...) owns its own random stream and results do not
/// depend on execution order.
std::uint64_t derive_seed(std::uint64_t master, std::initializer_list<std::uint64_t> path);

/// Bit pattern of a double, for using real-valued parameters (e.g. alpha) as seed labels.
std::uint64_t seed_label(double value);

/// Reproducible random stream. Only the engine output (fixed by the standard for
/// mt19937_64) is used; the derived uniform/integer draws are computed here rather than
/// through the implementation-defined <random> distributions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// Uniform integer in [0, bound). `bound` must be positive.
  std::uint64_t below(std::uint64_t bound);

  /// Standard normal draw (Box-Muller, one output per call).
  double normal();

 private:
  std::mt19937_64 engine_;
};

}  // namespace goldcut

#endif  // GOLDCUT_RNG_H

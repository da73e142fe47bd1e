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

#ifndef GOLDCUT_PAULI_H
#define GOLDCUT_PAULI_H

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace goldcut {

/// Single-qubit Pauli label. The numeric order defines the lexicographic order I < X < Y < Z.
enum class Pauli : std::uint8_t { kI = 0, kX = 1, kY = 2, kZ = 3 };

char pauli_char(Pauli p);
Pauli pauli_from_char(char c);

/// Pauli string; position j acts on wire j (wire 0 is written leftmost).
using PauliString = std::vector<Pauli>;

std::string to_string(const PauliString& s);
PauliString parse_pauli_string(std::string_view text);

/// Per-wire measurement frame of a Pauli string: I is read out in the Z frame.
PauliString measurement_frame(const PauliString& s);

/// Eigenvalue (+1/-1) of `s` on a computational-basis outcome measured in the frame of `s`.
/// Bit j of `outcome` is the result of wire j; identity positions contribute +1.
int pauli_eigenvalue(const PauliString& s, std::uint64_t outcome);

struct PauliTerm {
  double coefficient = 1.0;
  PauliString paulis;

  friend bool operator==(const PauliTerm&, const PauliTerm&) = default;
};

/// Real linear combination of equal-width Pauli strings.
class Observable {
 public:
  Observable() = default;
  explicit Observable(std::vector<PauliTerm> terms);

  static Observable single(PauliString paulis, double coefficient = 1.0);
  static Observable identity(std::size_t width);

  /// Parses `[coef*]PAULIS (+ [coef*]PAULIS)*`, e.g. "0.5*XIZ + ZZI". An empty string is
  /// the width-0 identity. Throws std::invalid_argument on malformed text.
  static Observable parse(std::string_view text);

  std::size_t width() const { return width_; }
  const std::vector<PauliTerm>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  /// Sum of |coefficient| over terms; bounds |<O>| for any state.
  double coefficient_l1() const;

  std::string to_string() const;

  friend bool operator==(const Observable&, const Observable&) = default;

 private:
  std::vector<PauliTerm> terms_;
  std::size_t width_ = 0;
};

/// An element M of {I,X,Y,Z}^K: one Pauli label per cut.
struct BasisElement {
  std::vector<Pauli> labels;

  std::size_t k() const { return labels.size(); }
  std::string to_string() const;

  friend bool operator==(const BasisElement&, const BasisElement&) = default;
  friend auto operator<=>(const BasisElement&, const BasisElement&) = default;
};

/// A string of +1/-1 signs, one per cut.
struct Eigenstring {
  std::vector<int> signs;

  std::size_t k() const { return signs.size(); }

  /// Bit i set iff sign i is -1.
  std::uint64_t bits() const;
  static Eigenstring from_bits(std::uint64_t bits, std::size_t k);
  std::string to_string() const;

  friend bool operator==(const Eigenstring&, const Eigenstring&) = default;
  friend auto operator<=>(const Eigenstring&, const Eigenstring&) = default;
};

}  // namespace goldcut

#endif  // GOLDCUT_PAULI_H

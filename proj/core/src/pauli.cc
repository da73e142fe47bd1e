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

#include "goldcut/pauli.h"

#include <charconv>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace goldcut {

char pauli_char(Pauli p) {
  switch (p) {
    case Pauli::kI:
      return 'I';
    case Pauli::kX:
      return 'X';
    case Pauli::kY:
      return 'Y';
    case Pauli::kZ:
      return 'Z';
  }
  return '?';
}

Pauli pauli_from_char(char c) {
  switch (c) {
    case 'I':
    case 'i':
      return Pauli::kI;
    case 'X':
    case 'x':
      return Pauli::kX;
    case 'Y':
    case 'y':
      return Pauli::kY;
    case 'Z':
    case 'z':
      return Pauli::kZ;
    default:
      throw std::invalid_argument(std::string("not a Pauli label: '") + c + "'");
  }
}

std::string to_string(const PauliString& s) {
  std::string out;
  out.reserve(s.size());
  for (Pauli p : s) {
    out.push_back(pauli_char(p));
  }
  return out;
}

PauliString parse_pauli_string(std::string_view text) {
  PauliString out;
  out.reserve(text.size());
  for (char c : text) {
    out.push_back(pauli_from_char(c));
  }
  return out;
}

PauliString measurement_frame(const PauliString& s) {
  PauliString frame = s;
  for (Pauli& p : frame) {
    if (p == Pauli::kI) {
      p = Pauli::kZ;
    }
  }
  return frame;
}

int pauli_eigenvalue(const PauliString& s, std::uint64_t outcome) {
  int sign = 1;
  for (std::size_t j = 0; j < s.size(); ++j) {
    if (s[j] != Pauli::kI && ((outcome >> j) & 1U)) {
      sign = -sign;
    }
  }
  return sign;
}

Observable::Observable(std::vector<PauliTerm> terms) : terms_(std::move(terms)) {
  if (terms_.empty()) {
    return;
  }
  width_ = terms_.front().paulis.size();
  for (const PauliTerm& t : terms_) {
    if (t.paulis.size() != width_) {
      throw std::invalid_argument("Observable: Pauli strings have different widths");
    }
    if (!std::isfinite(t.coefficient)) {
      throw std::invalid_argument("Observable: non-finite coefficient");
    }
  }
}

Observable Observable::single(PauliString paulis, double coefficient) {
  return Observable({PauliTerm{coefficient, std::move(paulis)}});
}

Observable Observable::identity(std::size_t width) {
  return single(PauliString(width, Pauli::kI));
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

PauliTerm parse_term(std::string_view text) {
  PauliTerm term;
  std::string_view paulis = text;
  if (auto star = text.find('*'); star != std::string_view::npos) {
    std::string_view coef = trim(text.substr(0, star));
    paulis = trim(text.substr(star + 1));
    auto [ptr, ec] = std::from_chars(coef.data(), coef.data() + coef.size(), term.coefficient);
    if (ec != std::errc() || ptr != coef.data() + coef.size()) {
      throw std::invalid_argument("Observable: bad coefficient '" + std::string(coef) + "'");
    }
  }
  term.paulis = parse_pauli_string(paulis);
  return term;
}

}  // namespace

Observable Observable::parse(std::string_view text) {
  text = trim(text);
  if (text.empty()) {
    return identity(0);
  }
  std::vector<PauliTerm> terms;
  while (true) {
    auto plus = text.find('+');
    terms.push_back(parse_term(trim(text.substr(0, plus))));
    if (plus == std::string_view::npos) {
      break;
    }
    text = text.substr(plus + 1);
  }
  return Observable(std::move(terms));
}

double Observable::coefficient_l1() const {
  double total = 0.0;
  for (const PauliTerm& t : terms_) {
    total += std::abs(t.coefficient);
  }
  return total;
}

std::string Observable::to_string() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (i > 0) {
      out << " + ";
    }
    out << terms_[i].coefficient << '*' << goldcut::to_string(terms_[i].paulis);
  }
  return out.str();
}

std::string BasisElement::to_string() const { return goldcut::to_string(labels); }

std::uint64_t Eigenstring::bits() const {
  std::uint64_t out = 0;
  for (std::size_t i = 0; i < signs.size(); ++i) {
    if (signs[i] < 0) {
      out |= std::uint64_t{1} << i;
    }
  }
  return out;
}

Eigenstring Eigenstring::from_bits(std::uint64_t bits, std::size_t k) {
  Eigenstring out;
  out.signs.resize(k);
  for (std::size_t i = 0; i < k; ++i) {
    out.signs[i] = ((bits >> i) & 1U) ? -1 : 1;
  }
  return out;
}

std::string Eigenstring::to_string() const {
  std::string out;
  for (int s : signs) {
    out.push_back(s < 0 ? '-' : '+');
  }
  return out;
}

}  // namespace goldcut

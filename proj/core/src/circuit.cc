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

#include "goldcut/circuit.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <set>
#include <sstream>
#include <string>

#include "goldcut/errors.h"

namespace goldcut {

void Circuit::validate() const {
  if (n_qubits < 1) {
    throw std::invalid_argument("circuit must have at least one qubit");
  }
  for (const Gate& g : gates) {
    g.check_range(n_qubits);
  }
}

namespace {

std::vector<std::string_view> tokenize(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) {
      tokens.push_back(line.substr(start, i - start));
    }
  }
  return tokens;
}

int parse_qubit(std::string_view token, int n_qubits, std::size_t line) {
  int q = -1;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), q);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw ParseError(line, "bad qubit index '" + std::string(token) + "'");
  }
  if (q < 0 || q >= n_qubits) {
    throw ParseError(line, "qubit " + std::string(token) + " out of range for " +
                               std::to_string(n_qubits) + " qubits");
  }
  return q;
}

double parse_angle(std::string_view token, std::size_t line) {
  double value = 0.0;
  const char* first = token.data();
  if (!token.empty() && token.front() == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size() || !std::isfinite(value)) {
    throw ParseError(line, "bad angle '" + std::string(token) + "'");
  }
  return value;
}

std::string describe(const Gate& g, std::size_t index) {
  std::ostringstream out;
  out << "gate " << index << " (" << mnemonic(g.kind);
  for (int i = 0; i < g.arity(); ++i) out << ' ' << g.qubits[i];
  out << ')';
  return out.str();
}

std::string format_angle(double angle) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), angle);
  return std::string(buf, ptr);
}

struct Partition {
  std::vector<bool> is_cut;
  std::vector<bool> downstream_only;  // non-cut qubit with no gate before the cut
};

Partition partition_of(const Circuit& circuit, const CutSpec& cut) {
  if (cut.cut_qubits.empty()) {
    throw std::invalid_argument("cut must name at least one qubit");
  }
  if (cut.position > circuit.gates.size()) {
    throw std::out_of_range("cut position beyond the end of the circuit");
  }
  Partition p;
  p.is_cut.assign(circuit.n_qubits, false);
  p.downstream_only.assign(circuit.n_qubits, false);
  for (int q : cut.cut_qubits) {
    if (q < 0 || q >= circuit.n_qubits) {
      throw std::out_of_range("cut qubit " + std::to_string(q) + " out of range");
    }
    if (p.is_cut[q]) {
      throw std::invalid_argument("duplicate cut qubit " + std::to_string(q));
    }
    p.is_cut[q] = true;
  }
  std::vector<bool> upstream_touched(circuit.n_qubits, false);
  for (std::size_t i = 0; i < cut.position; ++i) {
    const Gate& g = circuit.gates[i];
    for (int j = 0; j < g.arity(); ++j) upstream_touched[g.qubits[j]] = true;
  }
  for (std::size_t i = cut.position; i < circuit.gates.size(); ++i) {
    const Gate& g = circuit.gates[i];
    for (int j = 0; j < g.arity(); ++j) {
      int q = g.qubits[j];
      if (p.is_cut[q]) continue;
      if (upstream_touched[q]) {
        throw StructureError(i, describe(g, i) + " after the cut acts on upstream-only qubit " +
                                    std::to_string(q));
      }
    }
  }
  for (int q = 0; q < circuit.n_qubits; ++q) p.downstream_only[q] = !p.is_cut[q] && !upstream_touched[q];
  return p;
}

}  // namespace

ParsedCircuit parse_circuit(std::string_view text) {
  ParsedCircuit out;
  std::vector<std::size_t> gate_lines;
  bool have_header = false;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    auto tokens = tokenize(line);
    if (tokens.empty()) continue;

    if (!have_header) {
      if (tokens[0] != "qubits" || tokens.size() != 2) {
        throw ParseError(line_no, "expected 'qubits <N>' header");
      }
      int n = 0;
      auto [ptr, ec] = std::from_chars(tokens[1].data(), tokens[1].data() + tokens[1].size(), n);
      if (ec != std::errc() || ptr != tokens[1].data() + tokens[1].size() || n < 1 || n > 30) {
        throw ParseError(line_no, "bad qubit count '" + std::string(tokens[1]) + "'");
      }
      out.circuit.n_qubits = n;
      have_header = true;
      continue;
    }

    if (tokens[0] == "qubits") {
      throw ParseError(line_no, "duplicate 'qubits' header");
    }

    if (tokens[0] == "cut") {
      if (out.cut) {
        throw ParseError(line_no, "only one cut is allowed");
      }
      if (tokens.size() < 2) {
        throw ParseError(line_no, "cut needs at least one qubit");
      }
      CutSpec cut;
      cut.position = out.circuit.gates.size();
      for (std::size_t i = 1; i < tokens.size(); ++i) {
        int q = parse_qubit(tokens[i], out.circuit.n_qubits, line_no);
        if (std::find(cut.cut_qubits.begin(), cut.cut_qubits.end(), q) != cut.cut_qubits.end()) {
          throw ParseError(line_no, "duplicate cut qubit " + std::to_string(q));
        }
        cut.cut_qubits.push_back(q);
      }
      out.cut = std::move(cut);
      continue;
    }

    auto kind = gate_kind_from_mnemonic(tokens[0]);
    if (!kind) {
      throw ParseError(line_no, "unknown mnemonic '" + std::string(tokens[0]) + "'");
    }
    const int n_qubit_args = arity(*kind);
    const std::size_t expected = 1 + n_qubit_args + (is_rotation(*kind) ? 1 : 0);
    if (tokens.size() != expected) {
      throw ParseError(line_no, std::string(tokens[0]) + " expects " +
                                    std::to_string(expected - 1) + " arguments, got " +
                                    std::to_string(tokens.size() - 1));
    }
    Gate g;
    g.kind = *kind;
    for (int i = 0; i < n_qubit_args; ++i) {
      g.qubits[i] = parse_qubit(tokens[1 + i], out.circuit.n_qubits, line_no);
    }
    if (n_qubit_args == 2 && g.qubits[0] == g.qubits[1]) {
      throw ParseError(line_no, "cx control and target must differ");
    }
    if (is_rotation(*kind)) {
      g.angle = parse_angle(tokens.back(), line_no);
    }
    out.circuit.gates.push_back(g);
    gate_lines.push_back(line_no);
  }
  if (!have_header) {
    throw ParseError(line_no == 0 ? 1 : line_no, "missing 'qubits <N>' header");
  }
  if (out.cut) {
    try {
      validate_cut(out.circuit, *out.cut);
    } catch (const StructureError& e) {
      throw ParseError(gate_lines[e.gate_index()], e.what());
    }
  }
  return out;
}

std::string serialize_circuit(const Circuit& circuit, const std::optional<CutSpec>& cut) {
  std::string out = "qubits " + std::to_string(circuit.n_qubits) + "\n";
  auto emit_cut = [&] {
    out += "cut";
    for (int q : cut->cut_qubits) out += " " + std::to_string(q);
    out += "\n";
  };
  for (std::size_t i = 0; i < circuit.gates.size(); ++i) {
    if (cut && cut->position == i) emit_cut();
    const Gate& g = circuit.gates[i];
    out += mnemonic(g.kind);
    for (int j = 0; j < g.arity(); ++j) out += " " + std::to_string(g.qubits[j]);
    if (is_rotation(g.kind)) out += " " + format_angle(g.angle);
    out += "\n";
  }
  if (cut && cut->position == circuit.gates.size()) emit_cut();
  return out;
}

void validate_cut(const Circuit& circuit, const CutSpec& cut) {
  circuit.validate();
  partition_of(circuit, cut);
}

FragmentPair bipartition(const Circuit& circuit, const CutSpec& cut) {
  circuit.validate();
  const Partition part = partition_of(circuit, cut);

  FragmentPair f;
  f.n_qubits = circuit.n_qubits;
  std::vector<int> up_wire(circuit.n_qubits, -1);
  std::vector<int> down_wire(circuit.n_qubits, -1);

  for (int q = 0; q < circuit.n_qubits; ++q) {
    if (part.is_cut[q] || !part.downstream_only[q]) {
      up_wire[q] = static_cast<int>(f.upstream_qubits.size());
      f.upstream_qubits.push_back(q);
    }
  }
  for (int q : cut.cut_qubits) {
    down_wire[q] = static_cast<int>(f.downstream_qubits.size());
    f.downstream_qubits.push_back(q);
    f.upstream_cut_wires.push_back(up_wire[q]);
  }
  for (int q = 0; q < circuit.n_qubits; ++q) {
    if (!part.is_cut[q] && part.downstream_only[q]) {
      down_wire[q] = static_cast<int>(f.downstream_qubits.size());
      f.downstream_qubits.push_back(q);
    }
  }
  for (int w = 0; w < static_cast<int>(f.upstream_qubits.size()); ++w) {
    if (!part.is_cut[f.upstream_qubits[w]]) f.upstream_output_wires.push_back(w);
  }

  f.upstream.n_qubits = static_cast<int>(f.upstream_qubits.size());
  f.downstream.n_qubits = static_cast<int>(f.downstream_qubits.size());
  for (std::size_t i = 0; i < circuit.gates.size(); ++i) {
    Gate g = circuit.gates[i];
    const std::vector<int>& wire = i < cut.position ? up_wire : down_wire;
    for (int j = 0; j < g.arity(); ++j) {
      int mapped = wire[g.qubits[j]];
      if (mapped < 0) {
        throw StructureError(i, describe(circuit.gates[i], i) + " spans the partition");
      }
      g.qubits[j] = mapped;
    }
    (i < cut.position ? f.upstream : f.downstream).gates.push_back(g);
  }
  return f;
}

Circuit recompose(const FragmentPair& fragments) {
  Circuit out;
  out.n_qubits = fragments.n_qubits;
  auto append = [&](const Circuit& part, const std::vector<int>& to_original) {
    for (Gate g : part.gates) {
      for (int j = 0; j < g.arity(); ++j) g.qubits[j] = to_original[g.qubits[j]];
      out.gates.push_back(g);
    }
  };
  append(fragments.upstream, fragments.upstream_qubits);
  append(fragments.downstream, fragments.downstream_qubits);
  return out;
}

}  // namespace goldcut

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

#ifndef GOLDCUT_ERRORS_H
#define GOLDCUT_ERRORS_H

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace goldcut {

/// Malformed circuit text. Carries the 1-based line number of the offending line.
class ParseError : public std::invalid_argument {
 public:
  ParseError(std::size_t line, const std::string& message)
      : std::invalid_argument("line " + std::to_string(line) + ": " + message), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// A gate crosses the upstream/downstream partition declared by a cut.
class StructureError : public std::invalid_argument {
 public:
  StructureError(std::size_t gate_index, const std::string& message)
      : std::invalid_argument(message), gate_index_(gate_index) {}

  std::size_t gate_index() const noexcept { return gate_index_; }

 private:
  std::size_t gate_index_;
};

/// Reconstruction was asked for variants that have no fragment data.
class IncompleteDataError : public std::runtime_error {
 public:
  explicit IncompleteDataError(std::vector<std::string> missing);

  const std::vector<std::string>& missing() const noexcept { return missing_; }

 private:
  std::vector<std::string> missing_;
};

/// Widths of two objects that must agree do not.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace goldcut

#endif  // GOLDCUT_ERRORS_H

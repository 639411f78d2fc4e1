// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "lamina/constructions.hpp"
#include "lamina/matroid.hpp"

namespace lamina {

/// Malformed matroid text. Line and column are 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, const std::string& message);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

// Matroid text format, one directive per line, '#' starts a comment:
//
//   %matroid v1
//   n 4
//   labels a b c d          (optional; defaults to a, b, c, ...)
//   repr <kind>
//   <body>
//
// Bodies by kind:
//   circuits      brace sets, e.g. {a b c} {a b d}
//   cyclic-flats  set {a b} rank 2      (one per line)
//   uniform       r 2
//   graph         vertices 3, then: edge <label> <u> <v>
//   laminar       cap {a b c} 2         (one per line)
//   transversal   block {a b c}         (one per line, chain order)

/// Parses matroid text. Throws ParseError for syntax problems and the
/// constructor's exception (InvalidMatroid, CyclicFlatError, ...) when the
/// described data is not a matroid.
Matroid parse_matroid(std::string_view text);

/// Writes `m` with `repr circuits`; parse_matroid reproduces it exactly.
std::string serialize_matroid(const Matroid& m);

/// Writes a cyclic-flat family with `repr cyclic-flats`. The family need not
/// satisfy the lattice axioms.
std::string serialize_cyclic_flats(const CyclicFlatFamily& z);

/// Reads a whole file; throws std::runtime_error when it cannot be opened.
std::string read_text_file(const std::string& path);

}  // namespace lamina

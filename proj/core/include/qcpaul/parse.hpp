// Copyright 2025-2026 The qcpaul developers
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

#include <string>

#include "qcpaul/circuit.hpp"

namespace qcpaul {

/// Parse failure; line numbers are 1-based.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& msg)
      : Error("line " + std::to_string(line) + ": " + msg), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Parses the line-oriented circuit DSL. Statements apply in file order
/// (the first line acts first). `#` starts a comment.
///
///   wires: a b
///   ket a |0>
///   H a
///   CNOT a -> b
///   scalar sqrt(2)
///
/// Gates: X Y Z H S E RZ(t) ROT(x,y,z) CNOT MAT2 MAT4 (plus MAT8/MAT16 and
/// `ctrl proj(...)[...]`, which the rewriter's output needs). `S` is the
/// diag(1, i) phase gate.
Circuit parse(const std::string& text);

}  // namespace qcpaul

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

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qcpaul/circuit.hpp"
#include "qcpaul/rng.hpp"

namespace qcpaul {

/// One concrete assignment of an identity's parameters.
struct ParamPoint {
  std::map<std::string, int> bits;
  std::map<std::string, std::string> choices;
  std::map<std::string, double> angles;
  std::map<std::string, ComplexMatrix> unitaries;  // 2x2
  std::map<std::string, ComplexMatrix> states;     // 2x1

  int bit(const std::string& name) const;
  const std::string& choice(const std::string& name) const;
  double angle(const std::string& name) const;
  const ComplexMatrix& unitary(const std::string& name) const;
  const ComplexMatrix& state(const std::string& name) const;
};

/// Cartesian-product parameter space. Bits and choices enumerate
/// exhaustively; angles run a fixed grid plus seeded draws; unitary and
/// state slots run seeded draws plus the degenerate cases.
struct ParamSpec {
  std::vector<std::string> bit_names;
  std::vector<std::pair<std::string, std::vector<std::string>>> choice_sets;
  std::vector<std::string> angle_names;
  std::vector<std::string> unitary_names;
  std::vector<std::string> state_names;

  ParamSpec& bits(std::initializer_list<std::string> names);
  ParamSpec& choice(std::string name, std::vector<std::string> values);
  ParamSpec& angle(std::string name);
  ParamSpec& unitary(std::string name);
  ParamSpec& state(std::string name);

  /// All points, deterministic for a given seed and identity id.
  std::vector<ParamPoint> enumerate(std::uint64_t seed,
                                    const std::string& id) const;
};

/// One catalog entry: either a parameterized (LHS, RHS) circuit pair whose
/// evaluations must agree entrywise (scalar prefactors included), or a
/// direct per-point deviation check for the few table-shaped statements.
struct Identity {
  using PairBuilder =
      std::function<std::pair<Circuit, Circuit>(const ParamPoint&)>;
  using PointCheck = std::function<double(const ParamPoint&)>;

  std::string id;
  std::string citation;  // self-contained statement of what is checked
  ParamSpec params;
  PairBuilder pair;   // null for custom entries
  PointCheck custom;  // null for circuit-pair entries

  bool is_pair() const { return static_cast<bool>(pair); }
};

struct VerificationReport {
  std::string id;
  std::string citation;
  std::size_t points = 0;
  double max_deviation = 0.0;
  bool pass = false;
  std::int64_t elapsed_ms = 0;
};

/// The full catalog, in fixed order. At least fifty entries.
const std::vector<Identity>& list_identities();

const Identity& find_identity(const std::string& id);

/// Concrete LHS/RHS circuits for a circuit-pair identity.
std::pair<Circuit, Circuit> instantiate(const std::string& id,
                                        const ParamPoint& point);

/// A representative parameter point (first in enumeration order).
ParamPoint sample_point(const std::string& id,
                        std::uint64_t seed = kDefaultSeed);

VerificationReport verify(const std::string& id, double tol = kDefaultTol,
                          std::uint64_t seed = kDefaultSeed);

std::vector<VerificationReport> verify_all(double tol = kDefaultTol,
                                           std::uint64_t seed = kDefaultSeed);

// Shared circuit fragments (also used by tests).

/// Appends |B^00> preparation on (w1, w2): kets |00>, H(w1), CNOT(w1->w2).
void append_bell00(Circuit& c, const std::string& w1, const std::string& w2);

/// Circuit whose evaluation is exactly `column` (2^n x 1) over `wires`.
Circuit state_literal(const WireList& wires, const ComplexMatrix& column);

/// Marks a wire as unused on one side of an identity: ket |0> plus bra <0|
/// contract it to a factor of one, keeping wire declarations identical.
void park_wire(Circuit& c, const std::string& wire);

}  // namespace qcpaul

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
#include <variant>
#include <vector>

#include "qcpaul/gates.hpp"
#include "qcpaul/matrix.hpp"

namespace qcpaul {

/// Control attached to a gate: a filled dot (number operator n), an open
/// dot (nbar), or an arbitrary projector over one or more wires.
struct ControlSpec {
  enum class Kind { N, NBar, Projector };

  Kind kind = Kind::N;
  WireList wires;
  ComplexMatrix projector;  // Projector kind only; must be idempotent

  static ControlSpec n(std::string wire);
  static ControlSpec nbar(std::string wire);
  static ControlSpec proj(WireList wires, ComplexMatrix projector);

  /// The projector matrix on `wires` regardless of kind.
  ComplexMatrix matrix() const;

  bool operator==(const ControlSpec&) const = default;
};

/// A (possibly controlled) operator box. `matrix` is the concrete payload
/// on `targets`; `name`/`params` remember how to print it.
struct GateElement {
  std::string name;            // X,Y,Z,H,S,E,CNOT,RZ,ROT,MAT2,MAT4,...
  std::vector<double> params;  // RZ(theta), ROT(tx,ty,tz)
  ComplexMatrix matrix;
  WireList targets;
  std::vector<ControlSpec> controls;

  bool operator==(const GateElement&) const = default;
};

/// An uncontrolled projector box (internal measurements are rank-1
/// instances of this; everything is post-selected linear algebra).
struct ProjectorElement {
  std::string name;                // projz, projzz, projpair, projmat
  std::vector<std::string> attrs;  // print metadata, e.g. {"1"} or {"X","Z","0"}
  ComplexMatrix matrix;
  WireList targets;

  bool operator==(const ProjectorElement&) const = default;
};

/// State preparation on one wire; the 2-vector need not be normalized.
struct KetPrep {
  std::string wire;
  ComplexMatrix amplitudes;  // 2x1

  bool operator==(const KetPrep&) const = default;
};

/// Post-selection on one wire; the covector need not be normalized.
struct BraSelect {
  std::string wire;
  ComplexMatrix amplitudes;  // 1x2

  bool operator==(const BraSelect&) const = default;
};

struct ScalarFactor {
  Complex value;

  bool operator==(const ScalarFactor&) const = default;
};

using CircuitElement =
    std::variant<GateElement, ProjectorElement, KetPrep, BraSelect,
                 ScalarFactor>;

/// Wires an element touches (targets, controls, or the ket/bra wire).
WireList element_wires(const CircuitElement& e);

/// Elements are stored in chronological order: element 0 acts first.
/// (Circuit diagrams in the underlying notation run right to left; a
/// diagram transcribed left to right must be reversed before storage.)
struct Circuit {
  WireList wires;
  std::vector<CircuitElement> elements;

  Circuit() = default;
  explicit Circuit(WireList w) : wires(std::move(w)) {}

  Circuit& add(CircuitElement e) {
    elements.push_back(std::move(e));
    return *this;
  }

  bool operator==(const Circuit&) const = default;
};

/// Result of contracting a circuit: a linear map from the ket-free wires
/// (inputs) to the bra-free wires (outputs), wire order as declared.
struct EvalResult {
  ComplexMatrix matrix;
  WireList in_wires;
  WireList out_wires;
};

/// Checks wire declarations, distinctness, control/target disjointness,
/// the one-ket/one-bra-per-wire rule, and that no element touches a wire
/// before its ket or after its bra. Throws Error on violation.
void validate(const Circuit& c);

/// Contracts the circuit to a dense matrix by composing each element,
/// embedded on the full register, in chronological order. Controlled
/// gates evaluate as P*U + (1-P) with P the embedded control projector.
EvalResult evaluate(const Circuit& c);

/// Reversed element order, daggered gates, kets and bras exchanged,
/// scalars conjugated: evaluate(adjoint(c)) == evaluate(c)^dagger.
Circuit adjoint(const Circuit& c);

/// Concatenation over identical wire declarations. A wire post-selected in
/// `first` must be untouched in `then`.
Circuit compose(const Circuit& first, const Circuit& then);

/// DSL rendering; parse(to_text(c)) == c.
std::string to_text(const Circuit& c);

// Element construction helpers used by the catalog, the rewriter and the
// parser alike.
GateElement make_gate(const std::string& name, WireList targets,
                      std::vector<ControlSpec> controls = {});
GateElement make_rz(double theta, std::string target,
                    std::vector<ControlSpec> controls = {});
GateElement make_rot(const std::array<double, 3>& theta_vec,
                     std::string target);
GateElement make_cnot(const std::string& control, const std::string& target);
GateElement make_matrix_gate(ComplexMatrix m, WireList targets,
                             std::vector<ControlSpec> controls = {});
ProjectorElement make_projz(int j, std::string target);
ProjectorElement make_projzz(int j, std::string t1, std::string t2);
ProjectorElement make_projpair(Axis w1, Axis w2, int j, std::string t1,
                               std::string t2);
KetPrep make_ket(std::string wire, const ComplexMatrix& amplitudes);
KetPrep make_ket_bit(std::string wire, int bit);
BraSelect make_bra(std::string wire, const ComplexMatrix& amplitudes);
BraSelect make_bra_bit(std::string wire, int bit);

}  // namespace qcpaul

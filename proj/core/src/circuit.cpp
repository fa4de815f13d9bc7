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

#include "qcpaul/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <set>
#include <sstream>

namespace qcpaul {

ControlSpec ControlSpec::n(std::string wire) {
  ControlSpec c;
  c.kind = Kind::N;
  c.wires = {std::move(wire)};
  return c;
}

ControlSpec ControlSpec::nbar(std::string wire) {
  ControlSpec c;
  c.kind = Kind::NBar;
  c.wires = {std::move(wire)};
  return c;
}

ControlSpec ControlSpec::proj(WireList wires, ComplexMatrix projector) {
  ControlSpec c;
  c.kind = Kind::Projector;
  c.wires = std::move(wires);
  if (!projector.is_idempotent())
    throw Error("control projector is not idempotent");
  c.projector = std::move(projector);
  return c;
}

ComplexMatrix ControlSpec::matrix() const {
  switch (kind) {
    case Kind::N: return number_op(Axis::Z, false);
    case Kind::NBar: return number_op(Axis::Z, true);
    case Kind::Projector: return projector;
  }
  throw Error("bad control kind");
}

WireList element_wires(const CircuitElement& e) {
  WireList out;
  if (const auto* g = std::get_if<GateElement>(&e)) {
    out = g->targets;
    for (const ControlSpec& c : g->controls)
      out.insert(out.end(), c.wires.begin(), c.wires.end());
  } else if (const auto* p = std::get_if<ProjectorElement>(&e)) {
    out = p->targets;
  } else if (const auto* k = std::get_if<KetPrep>(&e)) {
    out = {k->wire};
  } else if (const auto* b = std::get_if<BraSelect>(&e)) {
    out = {b->wire};
  }
  return out;
}

namespace {

std::size_t wire_pos(const WireList& wires, const std::string& w,
                     std::size_t element_index) {
  auto it = std::find(wires.begin(), wires.end(), w);
  if (it == wires.end())
    throw Error("element " + std::to_string(element_index) +
                " references undeclared wire '" + w + "'");
  return static_cast<std::size_t>(it - wires.begin());
}

void check_distinct(const WireList& ws, const char* what,
                    std::size_t element_index) {
  std::set<std::string> seen;
  for (const std::string& w : ws)
    if (!seen.insert(w).second)
      throw Error("element " + std::to_string(element_index) +
                  " repeats wire '" + w + "' in " + what);
}

}  // namespace

void validate(const Circuit& c) {
  if (c.wires.empty()) throw Error("circuit declares no wires");
  if (c.wires.size() > kMaxWires)
    throw Error("register exceeds the " + std::to_string(kMaxWires) +
                "-wire guard");
  check_distinct(c.wires, "wire declaration", 0);

  std::map<std::string, std::size_t> ket_at, bra_at;
  for (std::size_t i = 0; i < c.elements.size(); ++i) {
    const CircuitElement& e = c.elements[i];
    const WireList touched = element_wires(e);
    for (const std::string& w : touched) wire_pos(c.wires, w, i);

    if (const auto* g = std::get_if<GateElement>(&e)) {
      check_distinct(g->targets, "targets", i);
      const std::size_t dim = std::size_t{1} << g->targets.size();
      if (g->matrix.rows() != dim || g->matrix.cols() != dim)
        throw Error("element " + std::to_string(i) +
                    ": payload dimension does not match target count");
      WireList all = g->targets;
      for (const ControlSpec& ctl : g->controls) {
        if (ctl.kind == ControlSpec::Kind::Projector) {
          const std::size_t cd = std::size_t{1} << ctl.wires.size();
          if (ctl.projector.rows() != cd || ctl.projector.cols() != cd)
            throw Error("element " + std::to_string(i) +
                        ": control projector dimension mismatch");
        }
        all.insert(all.end(), ctl.wires.begin(), ctl.wires.end());
      }
      check_distinct(all, "targets and controls", i);
    } else if (const auto* p = std::get_if<ProjectorElement>(&e)) {
      check_distinct(p->targets, "targets", i);
      const std::size_t dim = std::size_t{1} << p->targets.size();
      if (p->matrix.rows() != dim || p->matrix.cols() != dim)
        throw Error("element " + std::to_string(i) +
                    ": projector dimension does not match target count");
    } else if (const auto* k = std::get_if<KetPrep>(&e)) {
      if (k->amplitudes.rows() != 2 || k->amplitudes.cols() != 1)
        throw Error("ket amplitudes must form a 2-vector");
      if (!ket_at.emplace(k->wire, i).second)
        throw Error("wire '" + k->wire + "' is ket-prepared twice");
    } else if (const auto* b = std::get_if<BraSelect>(&e)) {
      if (b->amplitudes.rows() != 1 || b->amplitudes.cols() != 2)
        throw Error("bra amplitudes must form a 2-covector");
      if (!bra_at.emplace(b->wire, i).second)
        throw Error("wire '" + b->wire + "' is post-selected twice");
    }
  }

  // A ket opens its wire and a bra closes it; nothing may touch the wire
  // on the wrong side.
  for (std::size_t i = 0; i < c.elements.size(); ++i) {
    for (const std::string& w : element_wires(c.elements[i])) {
      auto k = ket_at.find(w);
      if (k != ket_at.end() && i < k->second)
        throw Error("wire '" + w + "' is used before its ket preparation");
      auto b = bra_at.find(w);
      if (b != bra_at.end() && i > b->second)
        throw Error("wire '" + w + "' is used after its post-selection");
    }
  }
}

namespace {

// Applies `op` (2^k square, `positions` from most significant wire) to M
// from the left, i.e. computes embed(op) * M without materializing the
// embedding.
void apply_embedded(ComplexMatrix& m, const ComplexMatrix& op,
                    const std::vector<std::size_t>& positions,
                    std::size_t n_wires) {
  const std::size_t k = positions.size();
  const std::size_t dim_op = std::size_t{1} << k;
  const std::size_t dim = std::size_t{1} << n_wires;
  std::vector<std::size_t> shift(k);
  for (std::size_t t = 0; t < k; ++t) shift[t] = n_wires - 1 - positions[t];

  // Row groups that differ only on target bits.
  std::size_t target_mask = 0;
  for (std::size_t s : shift) target_mask |= std::size_t{1} << s;

  std::vector<std::size_t> group_rows(dim_op);
  std::vector<Complex> scratch(dim_op);
  const std::size_t cols = m.cols();
  for (std::size_t base = 0; base < dim; ++base) {
    if ((base & target_mask) != 0) continue;
    for (std::size_t local = 0; local < dim_op; ++local) {
      std::size_t r = base;
      for (std::size_t t = 0; t < k; ++t)
        r |= ((local >> (k - 1 - t)) & 1u) << shift[t];
      group_rows[local] = r;
    }
    for (std::size_t col = 0; col < cols; ++col) {
      for (std::size_t a = 0; a < dim_op; ++a) {
        Complex acc(0.0, 0.0);
        for (std::size_t b = 0; b < dim_op; ++b)
          acc += op(a, b) * m(group_rows[b], col);
        scratch[a] = acc;
      }
      for (std::size_t a = 0; a < dim_op; ++a) m(group_rows[a], col) = scratch[a];
    }
  }
}

std::vector<std::size_t> positions_of(const WireList& wires,
                                      const WireList& subset,
                                      std::size_t element_index) {
  std::vector<std::size_t> pos;
  pos.reserve(subset.size());
  for (const std::string& w : subset)
    pos.push_back(wire_pos(wires, w, element_index));
  return pos;
}

}  // namespace

EvalResult evaluate(const Circuit& c) {
  validate(c);
  const std::size_t n = c.wires.size();
  const std::size_t dim = std::size_t{1} << n;

  ComplexMatrix m = ComplexMatrix::identity(dim);
  Complex scale(1.0, 0.0);
  std::map<std::string, ComplexMatrix> kets, bras;

  for (std::size_t i = 0; i < c.elements.size(); ++i) {
    const CircuitElement& e = c.elements[i];
    if (const auto* g = std::get_if<GateElement>(&e)) {
      // P U + (1 - P) == M + P (U M - M), applied column-block-wise.
      ComplexMatrix applied = m;
      apply_embedded(applied, g->matrix, positions_of(c.wires, g->targets, i),
                     n);
      if (g->controls.empty()) {
        m = std::move(applied);
      } else {
        ComplexMatrix delta = applied - m;
        for (const ControlSpec& ctl : g->controls)
          apply_embedded(delta, ctl.matrix(),
                         positions_of(c.wires, ctl.wires, i), n);
        m = m + delta;
      }
    } else if (const auto* p = std::get_if<ProjectorElement>(&e)) {
      apply_embedded(m, p->matrix, positions_of(c.wires, p->targets, i), n);
    } else if (const auto* k = std::get_if<KetPrep>(&e)) {
      kets.emplace(k->wire, k->amplitudes);
    } else if (const auto* b = std::get_if<BraSelect>(&e)) {
      bras.emplace(b->wire, b->amplitudes);
    } else if (const auto* s = std::get_if<ScalarFactor>(&e)) {
      scale *= s->value;
    }
  }

  EvalResult res;
  ComplexMatrix boundary_in(1, 1, {Complex(1.0, 0.0)});
  ComplexMatrix boundary_out(1, 1, {Complex(1.0, 0.0)});
  for (const std::string& w : c.wires) {
    auto kit = kets.find(w);
    if (kit == kets.end()) {
      boundary_in = kron(boundary_in, ComplexMatrix::identity(2));
      res.in_wires.push_back(w);
    } else {
      boundary_in = kron(boundary_in, kit->second);
    }
    auto bit = bras.find(w);
    if (bit == bras.end()) {
      boundary_out = kron(boundary_out, ComplexMatrix::identity(2));
      res.out_wires.push_back(w);
    } else {
      boundary_out = kron(boundary_out, bit->second);
    }
  }
  res.matrix = (boundary_out * m * boundary_in) * scale;
  return res;
}

Circuit adjoint(const Circuit& c) {
  Circuit out(c.wires);
  out.elements.reserve(c.elements.size());
  for (auto it = c.elements.rbegin(); it != c.elements.rend(); ++it) {
    const CircuitElement& e = *it;
    if (const auto* g = std::get_if<GateElement>(&e)) {
      GateElement d = *g;
      const ComplexMatrix adj = g->matrix.dagger();
      if (max_abs_diff(adj, g->matrix) > 0.0) {
        if (d.name == "RZ" && d.params.size() == 1) {
          d.params[0] = -d.params[0];
        } else if (d.name == "ROT" && d.params.size() == 3) {
          for (double& p : d.params) p = -p;
        } else {
          d.name = "MAT" + std::to_string(d.matrix.rows());
          d.params.clear();
        }
        d.matrix = adj;
      }
      out.add(std::move(d));
    } else if (const auto* p = std::get_if<ProjectorElement>(&e)) {
      ProjectorElement d = *p;
      d.matrix = p->matrix.dagger();  // projectors are Hermitian; keep exact
      out.add(std::move(d));
    } else if (const auto* k = std::get_if<KetPrep>(&e)) {
      out.add(BraSelect{k->wire, k->amplitudes.dagger()});
    } else if (const auto* b = std::get_if<BraSelect>(&e)) {
      out.add(KetPrep{b->wire, b->amplitudes.dagger()});
    } else if (const auto* s = std::get_if<ScalarFactor>(&e)) {
      out.add(ScalarFactor{std::conj(s->value)});
    }
  }
  return out;
}

Circuit compose(const Circuit& first, const Circuit& then) {
  if (first.wires != then.wires)
    throw Error("compose requires identical wire declarations");
  std::set<std::string> closed;
  for (const CircuitElement& e : first.elements)
    if (const auto* b = std::get_if<BraSelect>(&e)) closed.insert(b->wire);
  for (const CircuitElement& e : then.elements)
    for (const std::string& w : element_wires(e))
      if (closed.count(w))
        throw Error("wire '" + w +
                    "' is post-selected in the first circuit but used in the "
                    "second");
  Circuit out = first;
  out.elements.insert(out.elements.end(), then.elements.begin(),
                      then.elements.end());
  return out;
}

namespace {

std::string fmt_real(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

std::string fmt_complex(Complex z) {
  if (z.imag() == 0.0) return fmt_real(z.real());
  if (z.real() == 0.0) return fmt_real(z.imag()) + "*i";
  const std::string im = fmt_real(std::abs(z.imag()));
  return fmt_real(z.real()) + (z.imag() < 0 ? "-" : "+") + im + "*i";
}

std::string fmt_matrix_literal(const ComplexMatrix& m) {
  std::string s = "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      s += fmt_complex(m(i, j));
      if (j + 1 < m.cols()) s += ", ";
    }
    s += (i + 1 < m.rows()) ? "; " : "]";
  }
  return s;
}

std::string fmt_vector_literal(const ComplexMatrix& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    s += fmt_complex(v.entries()[i]);
    if (i + 1 < v.size()) s += ", ";
  }
  return s + "]";
}

const char* named_state(const ComplexMatrix& v, bool bra) {
  static const double r = 1.0 / std::sqrt(2.0);
  const Complex a = v.entries()[0], b = v.entries()[1];
  auto is = [&](Complex x, Complex y) { return a == x && b == y; };
  if (is(1, 0)) return bra ? "<0|" : "|0>";
  if (is(0, 1)) return bra ? "<1|" : "|1>";
  if (is(r, r)) return bra ? "<+X|" : "|+X>";
  if (is(r, -r)) return bra ? "<-X|" : "|-X>";
  if (!bra && is(r, Complex(0, r))) return "|+Y>";
  if (!bra && is(r, Complex(0, -r))) return "|-Y>";
  // Bras of the Y eigenstates carry conjugated components.
  if (bra && is(r, Complex(0, -r))) return "<+Y|";
  if (bra && is(r, Complex(0, r))) return "<-Y|";
  return nullptr;
}

void append_controls(std::string& line, const GateElement& g) {
  for (const ControlSpec& c : g.controls) {
    switch (c.kind) {
      case ControlSpec::Kind::N:
        line += " ctrl n(" + c.wires[0] + ")";
        break;
      case ControlSpec::Kind::NBar:
        line += " ctrl nbar(" + c.wires[0] + ")";
        break;
      case ControlSpec::Kind::Projector: {
        line += " ctrl proj(";
        for (std::size_t i = 0; i < c.wires.size(); ++i)
          line += (i ? " " : "") + c.wires[i];
        line += ")" + fmt_matrix_literal(c.projector);
        break;
      }
    }
  }
}

std::string join(const WireList& ws) {
  std::string s;
  for (std::size_t i = 0; i < ws.size(); ++i) s += (i ? " " : "") + ws[i];
  return s;
}

}  // namespace

std::string to_text(const Circuit& c) {
  std::string out = "wires: " + join(c.wires) + "\n";
  for (const CircuitElement& e : c.elements) {
    std::string line;
    if (const auto* g = std::get_if<GateElement>(&e)) {
      if (g->name == "CNOT" && g->controls.size() == 1 &&
          g->controls[0].kind == ControlSpec::Kind::N) {
        line = "CNOT " + g->controls[0].wires[0] + " -> " + g->targets[0];
      } else if (g->name == "RZ" || g->name == "ROT") {
        line = g->name + "(";
        for (std::size_t i = 0; i < g->params.size(); ++i)
          line += (i ? ", " : "") + fmt_real(g->params[i]);
        line += ") " + join(g->targets);
        append_controls(line, *g);
      } else if (g->name.rfind("MAT", 0) == 0) {
        line = "MAT" + std::to_string(g->matrix.rows()) + " " +
               fmt_matrix_literal(g->matrix) + " on " + join(g->targets);
        append_controls(line, *g);
      } else {
        line = g->name + " " + join(g->targets);
        append_controls(line, *g);
      }
    } else if (const auto* p = std::get_if<ProjectorElement>(&e)) {
      if (p->name == "projmat") {
        line = "projmat " + fmt_matrix_literal(p->matrix) + " on " +
               join(p->targets);
      } else {
        line = p->name;
        for (const std::string& a : p->attrs) line += " " + a;
        line += " on " + join(p->targets);
      }
    } else if (const auto* k = std::get_if<KetPrep>(&e)) {
      const char* name = named_state(k->amplitudes, false);
      line = "ket " + k->wire + " " +
             (name ? name : fmt_vector_literal(k->amplitudes));
    } else if (const auto* b = std::get_if<BraSelect>(&e)) {
      const char* name = named_state(b->amplitudes, true);
      line = "bra " + b->wire + " " +
             (name ? name : fmt_vector_literal(b->amplitudes));
    } else if (const auto* s = std::get_if<ScalarFactor>(&e)) {
      line = "scalar " + fmt_complex(s->value);
    }
    out += line + "\n";
  }
  return out;
}

GateElement make_gate(const std::string& name, WireList targets,
                      std::vector<ControlSpec> controls) {
  GateElement g;
  g.name = name;
  g.targets = std::move(targets);
  g.controls = std::move(controls);
  if (name == "X") g.matrix = pauli(Axis::X);
  else if (name == "Y") g.matrix = pauli(Axis::Y);
  else if (name == "Z") g.matrix = pauli(Axis::Z);
  else if (name == "H") g.matrix = hadamard(1);
  else if (name == "S") g.matrix = phase_i_n();
  else if (name == "E") g.matrix = exchanger_matrix();
  else throw Error("make_gate: unknown fixed gate '" + name + "'");
  return g;
}

GateElement make_rz(double theta, std::string target,
                    std::vector<ControlSpec> controls) {
  GateElement g;
  g.name = "RZ";
  g.params = {theta};
  g.matrix = rz(theta);
  g.targets = {std::move(target)};
  g.controls = std::move(controls);
  return g;
}

GateElement make_rot(const std::array<double, 3>& theta_vec,
                     std::string target) {
  GateElement g;
  g.name = "ROT";
  g.params = {theta_vec[0], theta_vec[1], theta_vec[2]};
  g.matrix = rotation(theta_vec);
  g.targets = {std::move(target)};
  return g;
}

GateElement make_cnot(const std::string& control, const std::string& target) {
  GateElement g;
  g.name = "CNOT";
  g.matrix = pauli(Axis::X);
  g.targets = {target};
  g.controls = {ControlSpec::n(control)};
  return g;
}

GateElement make_matrix_gate(ComplexMatrix m, WireList targets,
                             std::vector<ControlSpec> controls) {
  GateElement g;
  g.name = "MAT" + std::to_string(m.rows());
  g.matrix = std::move(m);
  g.targets = std::move(targets);
  g.controls = std::move(controls);
  return g;
}

ProjectorElement make_projz(int j, std::string target) {
  ProjectorElement p;
  p.name = "projz";
  p.attrs = {std::to_string(j)};
  const ComplexMatrix v = j ? ket1() : ket0();
  p.matrix = v * v.dagger();
  p.targets = {std::move(target)};
  return p;
}

ProjectorElement make_projzz(int j, std::string t1, std::string t2) {
  ProjectorElement p;
  p.name = "projzz";
  p.attrs = {std::to_string(j)};
  p.matrix = pi_pair(Axis::Z, Axis::Z, j);
  p.targets = {std::move(t1), std::move(t2)};
  return p;
}

ProjectorElement make_projpair(Axis w1, Axis w2, int j, std::string t1,
                               std::string t2) {
  ProjectorElement p;
  p.name = "projpair";
  p.attrs = {to_string(w1), to_string(w2), std::to_string(j)};
  p.matrix = pi_pair(w1, w2, j);
  p.targets = {std::move(t1), std::move(t2)};
  return p;
}

KetPrep make_ket(std::string wire, const ComplexMatrix& amplitudes) {
  if (amplitudes.rows() != 2 || amplitudes.cols() != 1)
    throw Error("ket amplitudes must form a 2-vector");
  return KetPrep{std::move(wire), amplitudes};
}

KetPrep make_ket_bit(std::string wire, int bit) {
  return KetPrep{std::move(wire), bit ? ket1() : ket0()};
}

BraSelect make_bra(std::string wire, const ComplexMatrix& amplitudes) {
  if (amplitudes.rows() != 1 || amplitudes.cols() != 2)
    throw Error("bra amplitudes must form a 2-covector");
  return BraSelect{std::move(wire), amplitudes};
}

BraSelect make_bra_bit(std::string wire, int bit) {
  return BraSelect{std::move(wire),
                   bit ? ket1().dagger() : ket0().dagger()};
}

}  // namespace qcpaul

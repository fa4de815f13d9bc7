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

#include "qcpaul/identities.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "qcpaul/qft.hpp"

namespace qcpaul {

namespace {
const Complex kI(0.0, 1.0);
const double kRoot2 = std::sqrt(2.0);
}  // namespace

int ParamPoint::bit(const std::string& name) const {
  auto it = bits.find(name);
  if (it == bits.end()) throw Error("missing bit parameter '" + name + "'");
  return it->second;
}

const std::string& ParamPoint::choice(const std::string& name) const {
  auto it = choices.find(name);
  if (it == choices.end())
    throw Error("missing choice parameter '" + name + "'");
  return it->second;
}

double ParamPoint::angle(const std::string& name) const {
  auto it = angles.find(name);
  if (it == angles.end()) throw Error("missing angle parameter '" + name + "'");
  return it->second;
}

const ComplexMatrix& ParamPoint::unitary(const std::string& name) const {
  auto it = unitaries.find(name);
  if (it == unitaries.end())
    throw Error("missing unitary parameter '" + name + "'");
  return it->second;
}

const ComplexMatrix& ParamPoint::state(const std::string& name) const {
  auto it = states.find(name);
  if (it == states.end())
    throw Error("missing state parameter '" + name + "'");
  return it->second;
}

ParamSpec& ParamSpec::bits(std::initializer_list<std::string> names) {
  bit_names.insert(bit_names.end(), names.begin(), names.end());
  return *this;
}

ParamSpec& ParamSpec::choice(std::string name,
                             std::vector<std::string> values) {
  choice_sets.emplace_back(std::move(name), std::move(values));
  return *this;
}

ParamSpec& ParamSpec::angle(std::string name) {
  angle_names.push_back(std::move(name));
  return *this;
}

ParamSpec& ParamSpec::unitary(std::string name) {
  unitary_names.push_back(std::move(name));
  return *this;
}

ParamSpec& ParamSpec::state(std::string name) {
  state_names.push_back(std::move(name));
  return *this;
}

std::vector<ParamPoint> ParamSpec::enumerate(std::uint64_t seed,
                                             const std::string& id) const {
  std::vector<ParamPoint> points{ParamPoint{}};

  auto expand = [&points](auto&& fill, std::size_t count) {
    std::vector<ParamPoint> next;
    next.reserve(points.size() * count);
    for (const ParamPoint& p : points)
      for (std::size_t v = 0; v < count; ++v) {
        ParamPoint q = p;
        fill(q, v);
        next.push_back(std::move(q));
      }
    points = std::move(next);
  };

  for (const std::string& name : bit_names)
    expand([&](ParamPoint& p, std::size_t v) { p.bits[name] = int(v); }, 2);

  for (const auto& [name, values] : choice_sets)
    expand([&](ParamPoint& p, std::size_t v) { p.choices[name] = values[v]; },
           values.size());

  for (const std::string& name : angle_names) {
    std::vector<double> vals = {0.0, M_PI / 7.0, M_PI / 3.0, 1.0, 2.5};
    Rng rng = seeded_rng(seed, id + "/angle/" + name);
    for (int i = 0; i < 10; ++i) vals.push_back(rng.uniform(-M_PI, M_PI));
    expand([&](ParamPoint& p, std::size_t v) { p.angles[name] = vals[v]; },
           vals.size());
  }

  for (const std::string& name : unitary_names) {
    Rng rng = seeded_rng(seed, id + "/unitary/" + name);
    std::vector<ComplexMatrix> vals;
    vals.push_back(ComplexMatrix::identity(2));
    vals.push_back(ComplexMatrix::identity(2) *
                   std::polar(1.0, rng.uniform(0.1, 3.0)));
    for (int i = 0; i < 10; ++i) vals.push_back(random_unitary(rng));
    expand(
        [&](ParamPoint& p, std::size_t v) { p.unitaries[name] = vals[v]; },
        vals.size());
  }

  for (const std::string& name : state_names) {
    Rng rng = seeded_rng(seed, id + "/state/" + name);
    std::vector<ComplexMatrix> vals;
    vals.push_back(ket0());
    for (int i = 0; i < 10; ++i) vals.push_back(random_state(rng));
    expand([&](ParamPoint& p, std::size_t v) { p.states[name] = vals[v]; },
           vals.size());
  }

  return points;
}

void append_bell00(Circuit& c, const std::string& w1, const std::string& w2) {
  c.add(make_ket_bit(w1, 0));
  c.add(make_ket_bit(w2, 0));
  c.add(make_gate("H", {w1}));
  c.add(make_cnot(w1, w2));
}

Circuit state_literal(const WireList& wires, const ComplexMatrix& column) {
  const std::size_t dim = std::size_t{1} << wires.size();
  if (column.rows() != dim || column.cols() != 1)
    throw Error("state literal has the wrong dimension");
  Circuit c(wires);
  for (const std::string& w : wires) c.add(make_ket_bit(w, 0));
  ComplexMatrix m(dim, dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, 0) = column(i, 0);
  c.add(make_matrix_gate(std::move(m), wires));
  return c;
}

void park_wire(Circuit& c, const std::string& wire) {
  c.add(make_ket_bit(wire, 0));
  c.add(make_bra_bit(wire, 0));
}

namespace {

using BuilderResult = std::pair<Circuit, Circuit>;

// --- small construction helpers -------------------------------------------

void add_pauli_pow(Circuit& c, Axis w, const std::string& wire, int power) {
  if (power % 2) c.add(make_gate(to_string(w), {wire}));
}

Circuit empty2() { return Circuit({"a", "b"}); }

// sigma_X^x sigma_Z^z applied to `wire`: Z first, then X.
void add_lambda(Circuit& c, const std::string& wire, int x, int z) {
  add_pauli_pow(c, Axis::Z, wire, z);
  add_pauli_pow(c, Axis::X, wire, x);
}

// |B_{xz}> on (w1, w2): CNOT(w1->w2) H(w1) |z x>.
void append_bell_sub(Circuit& c, const std::string& w1, const std::string& w2,
                     int x, int z) {
  c.add(make_ket_bit(w1, z));
  c.add(make_ket_bit(w2, x));
  c.add(make_gate("H", {w1}));
  c.add(make_cnot(w1, w2));
}

// |B^{xz}> on (w1, w2): CNOT(w2->w1) H(w2) |x z>.
void append_bell_super(Circuit& c, const std::string& w1,
                       const std::string& w2, int x, int z) {
  c.add(make_ket_bit(w1, x));
  c.add(make_ket_bit(w2, z));
  c.add(make_gate("H", {w2}));
  c.add(make_cnot(w2, w1));
}

// <B_{xz}| on (w1, w2): the adjoint of the |B_{xz}> preparation.
void append_bell_sub_bra(Circuit& c, const std::string& w1,
                         const std::string& w2, int x, int z) {
  c.add(make_cnot(w1, w2));
  c.add(make_gate("H", {w1}));
  c.add(make_bra_bit(w1, z));
  c.add(make_bra_bit(w2, x));
}

// <B^{xz}| on (w1, w2): the adjoint of the |B^{xz}> preparation.
void append_bell_super_bra(Circuit& c, const std::string& w1,
                           const std::string& w2, int x, int z) {
  c.add(make_cnot(w2, w1));
  c.add(make_gate("H", {w2}));
  c.add(make_bra_bit(w1, x));
  c.add(make_bra_bit(w2, z));
}

void append_ghz(Circuit& c) {
  c.add(make_ket_bit("a", 0));
  c.add(make_ket_bit("b", 0));
  c.add(make_ket_bit("c", 0));
  c.add(make_gate("H", {"c"}));
  c.add(make_cnot("c", "b"));
  c.add(make_cnot("c", "a"));
}

// exp(i t P) on the projector's wires: I + (e^{it} - 1) P.
ComplexMatrix phase_on_projector(double t, const ComplexMatrix& proj) {
  return ComplexMatrix::identity(proj.rows()) +
         proj * (std::polar(1.0, t) - 1.0);
}

// A named projector control over wires p and q (q may go unused).
struct CtrlChoice {
  std::vector<ControlSpec> controls;
  WireList wires;
  ComplexMatrix proj;
};

CtrlChoice ctrl_choice(const std::string& name, const std::string& p,
                       const std::string& q) {
  CtrlChoice c;
  if (name == "n") {
    c.controls = {ControlSpec::n(p)};
    c.wires = {p};
    c.proj = number_op(Axis::Z, false);
  } else if (name == "nbar") {
    c.controls = {ControlSpec::nbar(p)};
    c.wires = {p};
    c.proj = number_op(Axis::Z, true);
  } else if (name == "nq") {
    c.controls = {ControlSpec::n(q)};
    c.wires = {q};
    c.proj = number_op(Axis::Z, false);
  } else if (name == "nbarp") {
    c.controls = {ControlSpec::nbar(p)};
    c.wires = {p};
    c.proj = number_op(Axis::Z, true);
  } else if (name == "nn") {
    c.controls = {ControlSpec::n(p), ControlSpec::n(q)};
    c.wires = {p, q};
    c.proj = kron(number_op(Axis::Z, false), number_op(Axis::Z, false));
  } else if (name == "pixx") {
    c.proj = pi_pair(Axis::X, Axis::X, 0);
    c.controls = {ControlSpec::proj({p, q}, c.proj)};
    c.wires = {p, q};
  } else if (name == "pizz") {
    c.proj = pi_pair(Axis::Z, Axis::Z, 0);
    c.controls = {ControlSpec::proj({p, q}, c.proj)};
    c.wires = {p, q};
  } else {
    throw Error("unknown control choice '" + name + "'");
  }
  return c;
}

// Union of two control supports (declaration order p, q) plus the product
// projector embedded on that union.
struct CtrlProduct {
  WireList wires;
  ComplexMatrix proj;
};

CtrlProduct ctrl_product(const CtrlChoice& c1, const CtrlChoice& c2,
                         const std::string& p, const std::string& q) {
  CtrlProduct out;
  for (const std::string& w : {p, q}) {
    const bool used =
        std::find(c1.wires.begin(), c1.wires.end(), w) != c1.wires.end() ||
        std::find(c2.wires.begin(), c2.wires.end(), w) != c2.wires.end();
    if (used) out.wires.push_back(w);
  }
  const ComplexMatrix p1 = embed(c1.proj, c1.wires, out.wires);
  const ComplexMatrix p2 = embed(c2.proj, c2.wires, out.wires);
  out.proj = p1 * p2;
  return out;
}

// The five-box decomposition of U^{pi1} acting on target t; chronological.
void append_ctrl_u_decomposition(Circuit& c, const ComplexMatrix& u,
                                 const std::string& t,
                                 const CtrlChoice& pi1) {
  const UnitaryDiagonalization d = diagonalize_2x2_unitary(u);
  c.add(make_matrix_gate(d.v.dagger(), {t}));
  c.add(make_gate("X", {t}, pi1.controls));
  c.add(make_rz(-d.delta() / 2.0, t));
  c.add(make_gate("X", {t}, pi1.controls));
  c.add(make_rz(d.delta() / 2.0, t));
  c.add(make_matrix_gate(d.v, {t}));
  c.add(make_matrix_gate(phase_on_projector(d.theta_bar(), pi1.proj),
                         pi1.wires));
}

// --- catalog construction ---------------------------------------------------

std::vector<Identity> build_catalog() {
  std::vector<Identity> cat;

  auto pair_id = [&cat](std::string id, std::string citation, ParamSpec spec,
                        Identity::PairBuilder builder) {
    Identity ident;
    ident.id = std::move(id);
    ident.citation = std::move(citation);
    ident.params = std::move(spec);
    ident.pair = std::move(builder);
    cat.push_back(std::move(ident));
  };
  auto custom_id = [&cat](std::string id, std::string citation,
                          ParamSpec spec, Identity::PointCheck check) {
    Identity ident;
    ident.id = std::move(id);
    ident.citation = std::move(citation);
    ident.params = std::move(spec);
    ident.custom = std::move(check);
    cat.push_back(std::move(ident));
  };

  // ------------------------------------------------------------- pauli.*
  pair_id(
      "pauli.mult-table",
      "s_w1 s_w2 multiplication table: squares are 1, s_X s_Y = i s_Z and "
      "cyclic, distinct Paulis anticommute",
      ParamSpec{}
          .choice("w1", {"X", "Y", "Z"})
          .choice("w2", {"X", "Y", "Z"}),
      [](const ParamPoint& pt) {
        const Axis w1 = axis_from_string(pt.choice("w1"));
        const Axis w2 = axis_from_string(pt.choice("w2"));
        Circuit lhs({"a"});
        lhs.add(make_gate(to_string(w2), {"a"}));
        lhs.add(make_gate(to_string(w1), {"a"}));
        Circuit rhs({"a"});
        if (w1 != w2) {
          // s_w1 s_w2 = phase * s_w3 with the third axis and +/- i.
          const Axis w3 = Axis(3 - int(w1) - int(w2));
          const bool cyclic = (int(w2) - int(w1) + 3) % 3 == 1;
          rhs.add(make_gate(to_string(w3), {"a"}));
          rhs.add(ScalarFactor{cyclic ? kI : -kI});
        }
        return BuilderResult{lhs, rhs};
      });

  pair_id(
      "pauli.hadamard",
      "H = (s_X + s_Z)/sqrt 2 squares to 1, conjugates s_X <-> s_Z, and "
      "maps |0>,|1> to the s_X eigenstates",
      ParamSpec{}.choice(
          "rel", {"square", "conj-x", "conj-z", "sum-form", "ket0", "ket1"}),
      [](const ParamPoint& pt) {
        const std::string& rel = pt.choice("rel");
        Circuit lhs({"a"}), rhs({"a"});
        if (rel == "square") {
          lhs.add(make_gate("H", {"a"})).add(make_gate("H", {"a"}));
        } else if (rel == "conj-x" || rel == "conj-z") {
          const bool x = rel == "conj-x";
          lhs.add(make_gate("H", {"a"}))
              .add(make_gate(x ? "X" : "Z", {"a"}))
              .add(make_gate("H", {"a"}));
          rhs.add(make_gate(x ? "Z" : "X", {"a"}));
        } else if (rel == "sum-form") {
          lhs.add(make_gate("H", {"a"}));
          rhs.add(make_matrix_gate(
              (pauli(Axis::X) + pauli(Axis::Z)) * Complex(1.0 / kRoot2, 0.0),
              {"a"}));
        } else {
          const int b = rel == "ket1" ? 1 : 0;
          lhs.add(make_ket_bit("a", b)).add(make_gate("H", {"a"}));
          rhs.add(make_ket("a", eigenstate(Axis::X, b ? -1 : 1)));
        }
        return BuilderResult{lhs, rhs};
      });

  pair_id(
      "pauli.phase-gate",
      "diag(1,i) squares to s_Z and conjugates s_X to +/- s_Y",
      ParamSpec{}.choice("rel", {"square", "conj", "conj-inv"}),
      [](const ParamPoint& pt) {
        const std::string& rel = pt.choice("rel");
        const ComplexMatrix s_dag = phase_i_n().dagger();
        Circuit lhs({"a"}), rhs({"a"});
        if (rel == "square") {
          lhs.add(make_gate("S", {"a"})).add(make_gate("S", {"a"}));
          rhs.add(make_gate("Z", {"a"}));
        } else if (rel == "conj") {
          lhs.add(make_matrix_gate(s_dag, {"a"}))
              .add(make_gate("X", {"a"}))
              .add(make_gate("S", {"a"}));
          rhs.add(make_gate("Y", {"a"}));
        } else {
          lhs.add(make_gate("S", {"a"}))
              .add(make_gate("X", {"a"}))
              .add(make_matrix_gate(s_dag, {"a"}));
          rhs.add(make_gate("Y", {"a"})).add(ScalarFactor{-1.0});
        }
        return BuilderResult{lhs, rhs};
      });

  pair_id(
      "pauli.rotation",
      "exp(i t sigma.z_hat) = cos t + i s_Z sin t, via the general rotation "
      "builder",
      ParamSpec{}.angle("t"),
      [](const ParamPoint& pt) {
        const double t = pt.angle("t");
        Circuit lhs({"a"});
        lhs.add(make_rot({0.0, 0.0, t}, "a"));
        const Complex c = std::cos(t), s = std::sin(t);
        Circuit rhs({"a"});
        rhs.add(make_matrix_gate(
            ComplexMatrix(2, 2, {c + kI * s, 0, 0, c - kI * s}), {"a"}));
        return BuilderResult{lhs, rhs};
      });

  // --------------------------------------------------------------- had.*
  pair_id(
      "had.self-inverse", "H_nb^2 = 1 as a circuit of per-wire Hadamards",
      ParamSpec{}.choice("nb", {"1", "2", "3", "4"}),
      [](const ParamPoint& pt) {
        const std::size_t nb = std::stoul(pt.choice("nb"));
        WireList ws;
        for (std::size_t i = 0; i < nb; ++i) ws.push_back("w" + std::to_string(i));
        Circuit lhs(ws), rhs(ws);
        for (int rep = 0; rep < 2; ++rep)
          for (const std::string& w : ws) lhs.add(make_gate("H", {w}));
        return BuilderResult{lhs, rhs};
      });

  custom_id(
      "had.symmetric", "H_nb equals its transpose",
      ParamSpec{}.choice("nb", {"1", "2", "3", "4", "5", "6"}),
      [](const ParamPoint& pt) {
        const ComplexMatrix h = hadamard(std::stoul(pt.choice("nb")));
        return max_abs_diff(h, h.transpose());
      });

  custom_id(
      "had.entries",
      "the tensor-power construction of H_nb matches the entry formula "
      "(-1)^(b.b') / sqrt(2^nb)",
      ParamSpec{}.choice("nb", {"1", "2", "3"}),
      [](const ParamPoint& pt) {
        const std::size_t nb = std::stoul(pt.choice("nb"));
        ComplexMatrix chain = hadamard(1);
        for (std::size_t i = 1; i < nb; ++i) chain = kron(chain, hadamard(1));
        return max_abs_diff(chain, hadamard(nb));
      });

  // -------------------------------------------------------------- cnot.*
  pair_id(
      "cnot.basis-action", "CNOT(a->b) |a,b> = |a, b xor a>",
      ParamSpec{}.bits({"a", "b"}),
      [](const ParamPoint& pt) {
        const int a = pt.bit("a"), b = pt.bit("b");
        Circuit lhs({"a", "b"});
        lhs.add(make_ket_bit("a", a)).add(make_ket_bit("b", b));
        lhs.add(make_cnot("a", "b"));
        Circuit rhs({"a", "b"});
        rhs.add(make_ket_bit("a", a)).add(make_ket_bit("b", a ^ b));
        return BuilderResult{lhs, rhs};
      });

  pair_id(
      "cnot.nbar-form", "CNOT(b->a) = s_X(a) n(b) + nbar(b)", ParamSpec{},
      [](const ParamPoint&) {
        Circuit lhs(empty2());
        lhs.add(make_cnot("b", "a"));
        Circuit rhs(empty2());
        rhs.add(make_matrix_gate(
            kron(pauli(Axis::X), number_op(Axis::Z, false)) +
                kron(ComplexMatrix::identity(2), number_op(Axis::Z, true)),
            {"a", "b"}));
        return BuilderResult{lhs, rhs};
      });

  pair_id(
      "cnot.pauli-sum",
      "CNOT(b->a) = (1/2) sum_{x,z} (-1)^{xz} s_X^x(a) s_Z^z(b)", ParamSpec{},
      [](const ParamPoint&) {
        Circuit lhs(empty2());
        lhs.add(make_cnot("b", "a"));
        ComplexMatrix sum(4, 4);
        const ComplexMatrix eye = ComplexMatrix::identity(2);
        for (int x = 0; x < 2; ++x)
          for (int z = 0; z < 2; ++z) {
            const ComplexMatrix term =
                kron(x ? pauli(Axis::X) : eye, z ? pauli(Axis::Z) : eye);
            sum = sum + term * Complex((x && z) ? -0.5 : 0.5, 0.0);
          }
        Circuit rhs(empty2());
        rhs.add(make_matrix_gate(sum, {"a", "b"}));
        return BuilderResult{lhs, rhs};
      });

  auto chain3 = [](std::initializer_list<std::pair<const char*, const char*>>
                       cnots) {
    Circuit c({"a", "b", "c"});
    for (const auto& [ctl, tgt] : cnots) c.add(make_cnot(ctl, tgt));
    return c;
  };

  pair_id(
      "cnot.wake-chain",
      "permuting a CNOT chain: CNOT(b->a) CNOT(c->b) = CNOT(c->a) CNOT(c->b) "
      "CNOT(b->a), wake in front",
      ParamSpec{},
      [chain3](const ParamPoint&) {
        return BuilderResult{chain3({{"c", "b"}, {"b", "a"}}),
                             chain3({{"b", "a"}, {"c", "b"}, {"c", "a"}})};
      });

  pair_id(
      "cnot.wake-chain-alt",
      "the same chain permuted the other way, wake behind", ParamSpec{},
      [chain3](const ParamPoint&) {
        return BuilderResult{chain3({{"c", "b"}, {"b", "a"}}),
                             chain3({{"c", "a"}, {"b", "a"}, {"c", "b"}})};
      });

  pair_id(
      "cnot.wake-loop",
      "permuting a two-CNOT loop leaves the loop itself as wake", ParamSpec{},
      [](const ParamPoint&) {
        Circuit lhs(empty2()), rhs(empty2());
        lhs.add(make_cnot("a", "b")).add(make_cnot("b", "a"));
        rhs.add(make_cnot("b", "a"))
            .add(make_cnot("a", "b"))
            .add(make_cnot("b", "a"))
            .add(make_cnot("a", "b"));
        return BuilderResult{lhs, rhs};
      });

  pair_id(
      "cnot.wake-sigz",
      "CNOT(a->b) s_Z(b) = s_Z(a) s_Z(b) CNOT(a->b)", ParamSpec{},
      [](const ParamPoint&) {
        Circuit lhs(empty2()), rhs(empty2());
        lhs.add(make_gate("Z", {"b"})).add(make_cnot("a", "b"));
        rhs.add(make_cnot("a", "b"))
            .add(make_gate("Z", {"b"}))
            .add(make_gate("Z", {"a"}));
        return BuilderResult{lhs, rhs};
      });

  pair_id(
      "cnot.two-brothers",
      "a nearest-neighbor CNOT sandwich equals two commuting CNOTs",
      ParamSpec{},
      [chain3](const ParamPoint&) {
        return BuilderResult{
            chain3({{"a", "b"}, {"b", "c"}, {"a", "b"}}),
            chain3({{"b", "c"}, {"a", "c"}})};
      });

  pair_id(
      "cnot.three-brothers",
      "the four-wire sandwich equals three commuting CNOTs onto the last "
      "wire",
      ParamSpec{},
      [](const ParamPoint&) {
        Circuit lhs({"a", "b", "c", "d"}), rhs({"a", "b", "c", "d"});
        for (const auto& [x, y] :
             std::initializer_list<std::pair<const char*, const char*>>{
                 {"a", "b"}, {"b", "c"}, {"c", "d"}, {"b", "c"}, {"a", "b"}})
          lhs.add(make_cnot(x, y));
        rhs.add(make_cnot("c", "d"))
            .add(make_cnot("b", "d"))
            .add(make_cnot("a", "d"));
        return BuilderResult{lhs, rhs};
      });

  pair_id(
      "cnot.nn2",
      "a distance-2 CNOT equals four nearest-neighbor CNOTs", ParamSpec{},
      [chain3](const ParamPoint&) {
        return BuilderResult{
            chain3({{"b", "c"}, {"a", "b"}, {"b", "c"}, {"a", "b"}}),
            chain3({{"a", "c"}})};
      });

  pair_id(
      "cnot.nn3",
      "a distance-3 CNOT equals eight nearest-neighbor CNOTs", ParamSpec{},
      [](const ParamPoint&) {
        Circuit lhs({"a", "b", "c", "d"}), rhs({"a", "b", "c", "d"});
        for (const auto& [x, y] :
             std::initializer_list<std::pair<const char*, const char*>>{
                 {"b", "c"},
                 {"c", "d"},
                 {"b", "c"},
                 {"a", "b"},
                 {"b", "c"},
                 {"c", "d"},
                 {"b", "c"},
                 {"a", "b"}})
          lhs.add(make_cnot(x, y));
        rhs.add(make_cnot("a", "d"));
        return BuilderResult{lhs, rhs};
      });

  // --------------------------------------------------------------- gen.*
  const std::vector<std::string> kPiChoices = {"n", "nbar", "nn", "pixx"};

  pair_id(
      "gen.ctrl-u-decomp",
      "U^{pi} = e^{i tbar pi} V e^{i D sZ/2} X^{pi} e^{-i D sZ/2} X^{pi} "
      "Vdag for any projector pi and 2x2 unitary U",
      ParamSpec{}.choice("pi1", kPiChoices).unitary("U"),
      [](const ParamPoint& pt) {
        const CtrlChoice pi1 = ctrl_choice(pt.choice("pi1"), "p", "q");
        const ComplexMatrix& u = pt.unitary("U");
        Circuit lhs({"p", "q", "t"});
        lhs.add(make_matrix_gate(u, {"t"}, pi1.controls));
        Circuit rhs({"p", "q", "t"});
        append_ctrl_u_decomposition(rhs, u, "t", pi1);
        return BuilderResult{lhs, rhs};
      });

  pair_id(
      "gen.n1-ctrl-u",
      "the decomposition of a singly dot-controlled U, phase box e^{i tbar "
      "n} on the control",
      ParamSpec{}.unitary("U"),
      [](const ParamPoint& pt) {
        const ComplexMatrix& u = pt.unitary("U");
        const UnitaryDiagonalization d = diagonalize_2x2_unitary(u);
        Circuit lhs(empty2());
        lhs.add(make_matrix_gate(u, {"b"}, {ControlSpec::n("a")}));
        Circuit rhs(empty2());
        rhs.add(make_matrix_gate(d.v.dagger(), {"b"}));
        rhs.add(make_gate("X", {"b"}, {ControlSpec::n("a")}));
        rhs.add(make_rz(-d.delta() / 2.0, "b"));
        rhs.add(make_gate("X", {"b"}, {ControlSpec::n("a")}));
        rhs.add(make_rz(d.delta() / 2.0, "b"));
        rhs.add(make_matrix_gate(d.v, {"b"}));
        rhs.add(make_matrix_gate(
            ComplexMatrix(2, 2, {1, 0, 0, std::polar(1.0, d.theta_bar())}),
            {"a"}));
        return BuilderResult{lhs, rhs};
      });

  pair_id(
      "gen.n2-ctrl-u",
      "the doubly dot-controlled U decomposition; its phase box is itself a "
      "dot-controlled e^{i tbar n}",
      ParamSpec{}.unitary("U"),
      [](const ParamPoint& pt) {
        const ComplexMatrix& u = pt.unitary("U");
        const UnitaryDiagonalization d = diagonalize_2x2_unitary(u);
        const std::vector<ControlSpec> both = {ControlSpec::n("a"),
                                               ControlSpec::n("b")};
        Circuit lhs({"a", "b", "c"});
        lhs.add(make_matrix_gate(u, {"c"}, both));
        Circuit rhs({"a", "b", "c"});
        rhs.add(make_matrix_gate(d.v.dagger(), {"c"}));
        rhs.add(make_gate("X", {"c"}, both));
        rhs.add(make_rz(-d.delta() / 2.0, "c"));
        rhs.add(make_gate("X", {"c"}, both));
        rhs.add(make_rz(d.delta() / 2.0, "c"));
        rhs.add(make_matrix_gate(d.v, {"c"}));
        rhs.add(make_matrix_gate(
            ComplexMatrix(2, 2, {1, 0, 0, std::polar(1.0, d.theta_bar())}),
            {"b"}, {ControlSpec::n("a")}));
        return BuilderResult{lhs, rhs};
      });

  pair_id(
      "gen.perm-two-ctrl-u",
      "U1^{pi1} U2^{pi2} = (U1 U2 U1dag U2dag)^{pi1 pi2} U2^{pi2} U1^{pi1} "
      "for commuting projectors",
      ParamSpec{}
          .choice("pis", {"n.nq", "n.nbarp", "nn.nq", "pizz.nn"})
          .unitary("U1")
          .unitary("U2"),
      [](const ParamPoint& pt) {
        const std::string& pis = pt.choice("pis");
        const auto dot = pis.find('.');
        const CtrlChoice c1 = ctrl_choice(pis.substr(0, dot), "p", "q");
        const CtrlChoice c2 = ctrl_choice(pis.substr(dot + 1), "p", "q");
        const ComplexMatrix& u1 = pt.unitary("U1");
        const ComplexMatrix& u2 = pt.unitary("U2");
        Circuit lhs({"p", "q", "t"});
        lhs.add(make_matrix_gate(u2, {"t"}, c2.controls));
        lhs.add(make_matrix_gate(u1, {"t"}, c1.controls));
        Circuit rhs({"p", "q", "t"});
        rhs.add(make_matrix_gate(u1, {"t"}, c1.controls));
        rhs.add(make_matrix_gate(u2, {"t"}, c2.controls));
        const CtrlProduct prod = ctrl_product(c1, c2, "p", "q");
        const ComplexMatrix wake =
            u1 * u2 * u1.dagger() * u2.dagger();
        rhs.add(make_matrix_gate(
            wake, {"t"}, {ControlSpec::proj(prod.wires, prod.proj)}));
        return BuilderResult{lhs, rhs};
      });

  pair_id(
      "gen.wake-times-dot",
      "X(b)^{pi1} U^{n(b)} = (U^-2)^{pi1 n(b)} U^{pi1} U^{n(b)} X(b)^{pi1}",
      ParamSpec{}.choice("pi1", kPiChoices).unitary("U"),
      [](const ParamPoint& pt) {
        const CtrlChoice pi1 = ctrl_choice(pt.choice("pi1"), "p", "q");
        const ComplexMatrix& u = pt.unitary("U");
        Circuit lhs({"p", "q", "b", "t"});
        lhs.add(make_matrix_gate(u, {"t"}, {ControlSpec::n("b")}));
        lhs.add(make_gate("X", {"b"}, pi1.controls));
        Circuit rhs({"p", "q", "b", "t"});
        rhs.add(make_gate("X", {"b"}, pi1.controls));
        rhs.add(make_matrix_gate(u, {"t"}, {ControlSpec::n("b")}));
        rhs.add(make_matrix_gate(u, {"t"}, pi1.controls));
        std::vector<ControlSpec> joint = pi1.controls;
        joint.push_back(ControlSpec::n("b"));
        const ComplexMatrix u_inv = u.dagger();
        rhs.add(make_matrix_gate(u_inv * u_inv, {"t"}, joint));
        return BuilderResult{lhs, rhs};
      });

  auto sqrt_reduction_rhs = [](Circuit& rhs, const ComplexMatrix& u,
                               const std::string& dot_wire,
                               const std::string& t, const CtrlChoice& pi1) {
    const ComplexMatrix root = sqrt_unitary(u);
    rhs.add(make_matrix_gate(root, {t}, {ControlSpec::n(dot_wire)}));
    rhs.add(make_gate("X", {dot_wire}, pi1.controls));
    rhs.add(make_matrix_gate(root.dagger(), {t}, {ControlSpec::n(dot_wire)}));
    rhs.add(make_gate("X", {dot_wire}, pi1.controls));
    rhs.add(make_matrix_gate(root, {t}, pi1.controls));
  };

  pair_id(
      "gen.sqrt-reduction",
      "U^{pi1 n(b)} = U^{1/2 n(b)} X(b)^{pi1} U^{-1/2 n(b)} X(b)^{pi1} "
      "U^{1/2 pi1}, read in operator order",
      ParamSpec{}.choice("pi1", kPiChoices).unitary("U"),
      [sqrt_reduction_rhs](const ParamPoint& pt) {
        const CtrlChoice pi1 = ctrl_choice(pt.choice("pi1"), "p", "q");
        const ComplexMatrix& u = pt.unitary("U");
        Circuit lhs({"p", "q", "b", "t"});
        std::vector<ControlSpec> joint = pi1.controls;
        joint.push_back(ControlSpec::n("b"));
        lhs.add(make_matrix_gate(u, {"t"}, joint));
        Circuit rhs({"p", "q", "b", "t"});
        sqrt_reduction_rhs(rhs, u, "b", "t", pi1);
        return BuilderResult{lhs, rhs};
      });

  pair_id(
      "gen.n2-sqrt", "the square-root reduction of a doubly controlled U",
      ParamSpec{}.unitary("U"),
      [sqrt_reduction_rhs](const ParamPoint& pt) {
        const ComplexMatrix& u = pt.unitary("U");
        const CtrlChoice pi1 = ctrl_choice("n", "a", "b");
        Circuit lhs({"a", "b", "t"});
        lhs.add(make_matrix_gate(u, {"t"},
                                 {ControlSpec::n("a"), ControlSpec::n("b")}));
        Circuit rhs({"a", "b", "t"});
        sqrt_reduction_rhs(rhs, u, "b", "t", pi1);
        return BuilderResult{lhs, rhs};
      });

  pair_id(
      "gen.n3-sqrt", "the square-root reduction of a triply controlled U",
      ParamSpec{}.unitary("U"),
      [sqrt_reduction_rhs](const ParamPoint& pt) {
        const ComplexMatrix& u = pt.unitary("U");
        const CtrlChoice pi1 = ctrl_choice("nn", "a", "b");
        Circuit lhs({"a", "b", "c", "t"});
        lhs.add(make_matrix_gate(
            u, {"t"},
            {ControlSpec::n("a"), ControlSpec::n("b"), ControlSpec::n("c")}));
        Circuit rhs({"a", "b", "c", "t"});
        sqrt_reduction_rhs(rhs, u, "c", "t", pi1);
        return BuilderResult{lhs, rhs};
      });

  pair_id(
      "gen.wake-chain-gen",
      "X(b)^{pi1} Z(b)^{pi2} = (-1)^{pi1 pi2} Z(b)^{pi2} X(b)^{pi1}",
      ParamSpec{}.choice("pis", {"n.nq", "n.nbarp", "nn.nq", "pizz.nn"}),
      [](const ParamPoint& pt) {
        const std::string& pis = pt.choice("pis");
        const auto dot = pis.find('.');
        const CtrlChoice c1 = ctrl_choice(pis.substr(0, dot), "p", "q");
        const CtrlChoice c2 = ctrl_choice(pis.substr(dot + 1), "p", "q");
        Circuit lhs({"p", "q", "b"});
        lhs.add(make_gate("Z", {"b"}, c2.controls));
        lhs.add(make_gate("X", {"b"}, c1.controls));
        Circuit rhs({"p", "q", "b"});
        rhs.add(make_gate("X", {"b"}, c1.controls));
        rhs.add(make_gate("Z", {"b"}, c2.controls));
        const CtrlProduct prod = ctrl_product(c1, c2, "p", "q");
        rhs.add(make_matrix_gate(
            ComplexMatrix::identity(prod.proj.rows()) - prod.proj * 2.0,
            prod.wires));
        return BuilderResult{lhs, rhs};
      });

  pair_id(
      "gen.n3-to-n2",
      "an n^3 controlled NOT equals four n^2 controlled NOTs through an "
      "ancilla in any state",
      ParamSpec{},
      [](const ParamPoint&) {
        Circuit lhs({"a", "b", "c", "d", "e"});
        for (int rep = 0; rep < 2; ++rep) {
          lhs.add(make_gate("X", {"e"},
                            {ControlSpec::n("a"), ControlSpec::n("d")}));
          lhs.add(make_gate("X", {"d"},
                            {ControlSpec::n("b"), ControlSpec::n("c")}));
        }
        Circuit rhs({"a", "b", "c", "d", "e"});
        rhs.add(make_gate(
            "X", {"e"},
            {ControlSpec::n("a"), ControlSpec::n("b"), ControlSpec::n("c")}));
        return BuilderResult{lhs, rhs};
      });

  pair_id(
      "gen.wake-theta",
      "X(b)^{pi1} e^{i t sZ(b)} = (e^{-2 i t sZ})^{pi1} e^{i t sZ} X(b)^{pi1}",
      ParamSpec{}.choice("pi1", kPiChoices).angle("t"),
      [](const ParamPoint& pt) {
        const CtrlChoice pi1 = ctrl_choice(pt.choice("pi1"), "p", "q");
        const double t = pt.angle("t");
        Circuit lhs({"p", "q", "b"});
        lhs.add(make_rz(t, "b"));
        lhs.add(make_gate("X", {"b"}, pi1.controls));
        Circuit rhs({"p", "q", "b"});
        rhs.add(make_gate("X", {"b"}, pi1.controls));
        rhs.add(make_rz(t, "b"));
        rhs.add(make_rz(-2.0 * t, "b", pi1.controls));
        return BuilderResult{lhs, rhs};
      });

  // -------------------------------------------------------------- exch.*
  pair_id(
      "exch.def-involution", "E(a,b) = E(b,a) and E^2 = 1",
      ParamSpec{}.choice("rel", {"square", "symmetric"}),
      [](const ParamPoint& pt) {
        Circuit lhs(empty2()), rhs(empty2());
        if (pt.choice("rel") == "square") {
          lhs.add(make_gate("E", {"a", "b"})).add(make_gate("E", {"a", "b"}));
        } else {
          lhs.add(make_gate("E", {"a", "b"}));
          rhs.add(make_gate("E", {"b", "a"}));
        }
        return BuilderResult{lhs, rhs};
      });

  pair_id(
      "exch.3cnot", "E(a,b) = CNOT(b->a) CNOT(a->b) CNOT(b->a)", ParamSpec{},
      [](const ParamPoint&) {
        Circuit lhs(empty2()), rhs(empty2());
        lhs.add(make_gate("E", {"a", "b"}));
        rhs.add(make_cnot("b", "a"))
            .add(make_cnot("a", "b"))
            .add(make_cnot("b", "a"));
        return BuilderResult{lhs, rhs};
      });

  pair_id(
      "exch.four-forms",
      "the three-CNOT sandwich in all four dot / open-dot orientations",
      ParamSpec{}.choice("form", {"open", "open-flip", "flip"}),
      [](const ParamPoint& pt) {
        Circuit lhs(empty2()), rhs(empty2());
        lhs.add(make_cnot("b", "a"))
            .add(make_cnot("a", "b"))
            .add(make_cnot("b", "a"));
        const std::string& form = pt.choice("form");
        if (form == "open") {
          rhs.add(make_gate("X", {"a"}, {ControlSpec::nbar("b")}))
              .add(make_gate("X", {"b"}, {ControlSpec::nbar("a")}))
              .add(make_gate("X", {"a"}, {ControlSpec::nbar("b")}));
        } else if (form == "open-flip") {
          rhs.add(make_gate("X", {"b"}, {ControlSpec::nbar("a")}))
              .add(make_gate("X", {"a"}, {ControlSpec::nbar("b")}))
              .add(make_gate("X", {"b"}, {ControlSpec::nbar("a")}));
        } else {
          rhs.add(make_cnot("a", "b"))
              .add(make_cnot("b", "a"))
              .add(make_cnot("a", "b"));
        }
        return BuilderResult{lhs, rhs};
      });

  pair_id(
      "exch.uv-invariance",
      "U(a) V(b) E(a,b) Vdag(a) Udag(b) = E(a,b) for any 2x2 unitaries",
      ParamSpec{}.unitary("U").unitary("V"),
      [](const ParamPoint& pt) {
        const ComplexMatrix& u = pt.unitary("U");
        const ComplexMatrix& v = pt.unitary("V");
        Circuit lhs(empty2()), rhs(empty2());
        lhs.add(make_matrix_gate(v.dagger(), {"a"}));
        lhs.add(make_matrix_gate(u.dagger(), {"b"}));
        lhs.add(make_gate("E", {"a", "b"}));
        lhs.add(make_matrix_gate(u, {"a"}));
        lhs.add(make_matrix_gate(v, {"b"}));
        rhs.add(make_gate("E", {"a", "b"}));
        return BuilderResult{lhs, rhs};
      });

  pair_id(
      "exch.n-nbar",
      "E = (nn + nbar nbar) + s_X s_X (n nbar + nbar n)", ParamSpec{},
      [](const ParamPoint&) {
        const ComplexMatrix n = number_op(Axis::Z, false);
        const ComplexMatrix nb = number_op(Axis::Z, true);
        const ComplexMatrix xx = kron(pauli(Axis::X), pauli(Axis::X));
        const ComplexMatrix m =
            kron(n, n) + kron(nb, nb) + xx * (kron(n, nb) + kron(nb, n));
        Circuit lhs(empty2()), rhs(empty2());
        lhs.add(make_gate("E", {"a", "b"}));
        rhs.add(make_matrix_gate(m, {"a", "b"}));
        return BuilderResult{lhs, rhs};
      });

  pair_id(
      "exch.heisenberg",
      "E = (1 + s_X s_X + s_Y s_Y + s_Z s_Z) / 2", ParamSpec{},
      [](const ParamPoint&) {
        ComplexMatrix m = ComplexMatrix::identity(4);
        for (const Axis w : kAxes) m = m + kron(pauli(w), pauli(w));
        Circuit lhs(empty2()), rhs(empty2());
        lhs.add(make_gate("E", {"a", "b"}));
        rhs.add(make_matrix_gate(m * Complex(0.5, 0.0), {"a", "b"}));
        return BuilderResult{lhs, rhs};
      });

  pair_id(
      "exch.three-wire",
      "E(a,c) across a middle wire = E(a,b) E(b,c) E(a,b)", ParamSpec{},
      [](const ParamPoint&) {
        Circuit lhs({"a", "b", "c"}), rhs({"a", "b", "c"});
        lhs.add(make_gate("E", {"a", "c"}));
        rhs.add(make_gate("E", {"a", "b"}))
            .add(make_gate("E", {"b", "c"}))
            .add(make_gate("E", {"a", "b"}));
        return BuilderResult{lhs, rhs};
      });

  // -------------------------------------------------------------- bell.*
  pair_id(
      "bell.b00-circuit",
      "CNOT(a->b) H(a) |00> = (|00> + |11>)/sqrt 2", ParamSpec{},
      [](const ParamPoint&) {
        Circuit lhs(empty2());
        append_bell00(lhs, "a", "b");
        const double r = 1.0 / kRoot2;
        ComplexMatrix col(4, 1);
        col(0, 0) = r;
        col(3, 0) = r;
        return BuilderResult{lhs, state_literal({"a", "b"}, col)};
      });

  for (const auto& [suffix, gate] :
       std::initializer_list<std::pair<const char*, const char*>>{
           {"x", "X"}, {"z", "Z"}, {"h", "H"}}) {
    pair_id(
        std::string("bell.move-") + suffix,
        std::string(gate) + " applied to either half of |B00> is the same "
                            "state",
        ParamSpec{},
        [g = std::string(gate)](const ParamPoint&) {
          Circuit lhs(empty2()), rhs(empty2());
          append_bell00(lhs, "a", "b");
          lhs.add(make_gate(g, {"b"}));
          append_bell00(rhs, "a", "b");
          rhs.add(make_gate(g, {"a"}));
          return BuilderResult{lhs, rhs};
        });
  }

  pair_id(
      "bell.xz-table",
      "Lambda^{xz}(b) |B00> = (|0 x> + (-1)^z |1 xbar>)/sqrt 2",
      ParamSpec{}.bits({"x", "z"}),
      [](const ParamPoint& pt) {
        const int x = pt.bit("x"), z = pt.bit("z");
        Circuit lhs(empty2());
        append_bell00(lhs, "a", "b");
        add_lambda(lhs, "b", x, z);
        const double r = 1.0 / kRoot2;
        ComplexMatrix col(4, 1);
        col(std::size_t(x), 0) = r;
        col(std::size_t(2 + (1 - x)), 0) = z ? -r : r;
        return BuilderResult{lhs, state_literal({"a", "b"}, col)};
      });

  pair_id(
      "bell.sub-circuit",
      "|B_{xz}> = CNOT(a->b) H(a) |z x> = Lambda^{xz}(b) |B00>",
      ParamSpec{}.bits({"x", "z"}),
      [](const ParamPoint& pt) {
        const int x = pt.bit("x"), z = pt.bit("z");
        Circuit lhs(empty2());
        append_bell_sub(lhs, "a", "b", x, z);
        Circuit rhs(empty2());
        append_bell00(rhs, "a", "b");
        add_lambda(rhs, "b", x, z);
        return BuilderResult{lhs, rhs};
      });

  pair_id(
      "bell.super-circuit",
      "|B^{xz}> = CNOT(b->a) H(b) |x z> = Lambda^{xz}(a) |B00>",
      ParamSpec{}.bits({"x", "z"}),
      [](const ParamPoint& pt) {
        const int x = pt.bit("x"), z = pt.bit("z");
        Circuit lhs(empty2());
        append_bell_super(lhs, "a", "b", x, z);
        Circuit rhs(empty2());
        append_bell00(rhs, "a", "b");
        add_lambda(rhs, "a", x, z);
        return BuilderResult{lhs, rhs};
      });

  pair_id(
      "bell.swap-eigen",
      "E |B^{xz}> = (-1)^{xz} |B^{xz}>: Bell states are exchange "
      "eigenfunctions",
      ParamSpec{}.bits({"x", "z"}),
      [](const ParamPoint& pt) {
        const int x = pt.bit("x"), z = pt.bit("z");
        Circuit lhs(empty2());
        append_bell_super(lhs, "a", "b", x, z);
        lhs.add(make_gate("E", {"a", "b"}));
        Circuit rhs(empty2());
        append_bell_super(rhs, "a", "b", x, z);
        if (x && z) rhs.add(ScalarFactor{-1.0});
        return BuilderResult{lhs, rhs};
      });

  pair_id(
      "bell.swap-raises", "E |B^{xz}> = |B_{xz}>",
      ParamSpec{}.bits({"x", "z"}),
      [](const ParamPoint& pt) {
        const int x = pt.bit("x"), z = pt.bit("z");
        Circuit lhs(empty2());
        append_bell_super(lhs, "a", "b", x, z);
        lhs.add(make_gate("E", {"a", "b"}));
        Circuit rhs(empty2());
        append_bell_sub(rhs, "a", "b", x, z);
        return BuilderResult{lhs, rhs};
      });

  pair_id(
      "bell.orthonormal", "<B_{x'z'}|B_{xz}> = delta_{xx'} delta_{zz'}",
      ParamSpec{}.bits({"x", "z", "xp", "zp"}),
      [](const ParamPoint& pt) {
        const int x = pt.bit("x"), z = pt.bit("z");
        const int xp = pt.bit("xp"), zp = pt.bit("zp");
        Circuit lhs(empty2());
        append_bell_sub(lhs, "a", "b", x, z);
        append_bell_sub_bra(lhs, "a", "b", xp, zp);
        Circuit rhs(empty2());
        park_wire(rhs, "a");
        park_wire(rhs, "b");
        rhs.add(ScalarFactor{(x == xp && z == zp) ? 1.0 : 0.0});
        return BuilderResult{lhs, rhs};
      });

  custom_id(
      "bell.marginals",
      "P(a|x,z) and P(b|x,z) from P(a,b|x,z) = |<a,b|B_{xz}>|^2 are "
      "identically 1/2",
      ParamSpec{}.bits({"x", "z", "o"}).choice("side", {"first", "second"}),
      [](const ParamPoint& pt) {
        const int x = pt.bit("x"), z = pt.bit("z"), o = pt.bit("o");
        const bool first = pt.choice("side") == "first";
        double p = 0.0;
        for (int hidden = 0; hidden < 2; ++hidden) {
          Circuit amp(empty2());
          append_bell_sub(amp, "a", "b", x, z);
          amp.add(make_bra_bit("a", first ? o : hidden));
          amp.add(make_bra_bit("b", first ? hidden : o));
          const EvalResult r = evaluate(amp);
          p += std::norm(r.matrix(0, 0));
        }
        return std::abs(p - 0.5);
      });

  // --------------------------------------------------------------- ghz.*
  pair_id(
      "ghz.circuit",
      "CNOT(c->a) CNOT(c->b) H(c) |000> = (|000> + |111>)/sqrt 2",
      ParamSpec{},
      [](const ParamPoint&) {
        Circuit lhs({"a", "b", "c"});
        append_ghz(lhs);
        const double r = 1.0 / kRoot2;
        ComplexMatrix col(8, 1);
        col(0, 0) = r;
        col(7, 0) = r;
        return BuilderResult{lhs, state_literal({"a", "b", "c"}, col)};
      });

  pair_id(
      "ghz.xyy",
      "s_XYY, s_YXY and s_YYX each have eigenvalue -1 on the GHZ state",
      ParamSpec{}.choice("op", {"XYY", "YXY", "YYX"}),
      [](const ParamPoint& pt) {
        const std::string& op = pt.choice("op");
        Circuit lhs({"a", "b", "c"});
        append_ghz(lhs);
        const WireList ws = {"a", "b", "c"};
        for (std::size_t i = 0; i < 3; ++i)
          lhs.add(make_gate(std::string(1, op[i]), {ws[i]}));
        Circuit rhs({"a", "b", "c"});
        append_ghz(rhs);
        rhs.add(ScalarFactor{-1.0});
        return BuilderResult{lhs, rhs};
      });

  pair_id(
      "ghz.product",
      "s_XYY s_YXY s_YYX has eigenvalue -1 on the GHZ state", ParamSpec{},
      [](const ParamPoint&) {
        Circuit lhs({"a", "b", "c"});
        append_ghz(lhs);
        const char* ops[3] = {"YYX", "YXY", "XYY"};  // rightmost acts first
        const WireList ws = {"a", "b", "c"};
        for (const char* op : ops)
          for (std::size_t i = 0; i < 3; ++i)
            lhs.add(make_gate(std::string(1, op[i]), {ws[i]}));
        Circuit rhs({"a", "b", "c"});
        append_ghz(rhs);
        rhs.add(ScalarFactor{-1.0});
        return BuilderResult{lhs, rhs};
      });

  pair_id(
      "ghz.xxx", "s_XXX has eigenvalue +1 on the GHZ state", ParamSpec{},
      [](const ParamPoint&) {
        Circuit lhs({"a", "b", "c"});
        append_ghz(lhs);
        for (const char* w : {"a", "b", "c"}) lhs.add(make_gate("X", {w}));
        Circuit rhs({"a", "b", "c"});
        append_ghz(rhs);
        return BuilderResult{lhs, rhs};
      });

  // -------------------------------------------------------------- meas.*
  pair_id(
      "meas.internal-to-final",
      "the internal box |j><j|(b) equals <j| CNOT(b->anc) |0> on an ancilla",
      ParamSpec{}.bits({"j"}),
      [](const ParamPoint& pt) {
        const int j = pt.bit("j");
        Circuit lhs({"anc", "b"});
        park_wire(lhs, "anc");
        lhs.add(make_projz(j, "b"));
        Circuit rhs({"anc", "b"});
        rhs.add(make_ket_bit("anc", 0));
        rhs.add(make_cnot("b", "anc"));
        rhs.add(make_bra_bit("anc", j));
        return BuilderResult{lhs, rhs};
      });

  pair_id(
      "meas.bibit-to-2cnots",
      "Pi^j_ZZ(a,b) = CNOT(a->b) |j><j|(b) CNOT(a->b)",
      ParamSpec{}.bits({"j"}),
      [](const ParamPoint& pt) {
        const int j = pt.bit("j");
        Circuit lhs(empty2());
        lhs.add(make_projzz(j, "a", "b"));
        Circuit rhs(empty2());
        rhs.add(make_cnot("a", "b"));
        rhs.add(make_projz(j, "b"));
        rhs.add(make_cnot("a", "b"));
        return BuilderResult{lhs, rhs};
      });

  pair_id(
      "meas.bibit-to-1cnot",
      "<k|(a) Pi^j_ZZ(a,b) = <k|(a) s_X^k(b) |j><j|(b) CNOT(a->b)",
      ParamSpec{}.bits({"j", "k"}),
      [](const ParamPoint& pt) {
        const int j = pt.bit("j"), k = pt.bit("k");
        Circuit lhs(empty2());
        lhs.add(make_projzz(j, "a", "b"));
        lhs.add(make_bra_bit("a", k));
        Circuit rhs(empty2());
        rhs.add(make_cnot("a", "b"));
        rhs.add(make_projz(j, "b"));
        add_pauli_pow(rhs, Axis::X, "b", k);
        rhs.add(make_bra_bit("a", k));
        return BuilderResult{lhs, rhs};
      });

  pair_id(
      "meas.bibit-alt",
      "Pi^j_ZZ(b,c) = <j| CNOT(c->anc) CNOT(b->anc) |0> on an ancilla",
      ParamSpec{}.bits({"j"}),
      [](const ParamPoint& pt) {
        const int j = pt.bit("j");
        Circuit lhs({"anc", "b", "c"});
        park_wire(lhs, "anc");
        lhs.add(make_projzz(j, "b", "c"));
        Circuit rhs({"anc", "b", "c"});
        rhs.add(make_ket_bit("anc", 0));
        rhs.add(make_cnot("c", "anc"));
        rhs.add(make_cnot("b", "anc"));
        rhs.add(make_bra_bit("anc", j));
        return BuilderResult{lhs, rhs};
      });

  pair_id(
      "meas.cnot-to-2meas",
      "CNOT(a->c) = (-1)^{(k+j1) j2} 2 sqrt 2 times the two-bibit-"
      "measurement circuit, for every outcome triple",
      ParamSpec{}.bits({"k", "j1", "j2"}),
      [](const ParamPoint& pt) {
        const int k = pt.bit("k"), j1 = pt.bit("j1"), j2 = pt.bit("j2");
        Circuit lhs({"a", "b", "c"});
        park_wire(lhs, "b");
        lhs.add(make_cnot("a", "c"));
        Circuit rhs({"a", "b", "c"});
        rhs.add(make_ket_bit("b", 0));
        rhs.add(make_gate("H", {"b"}));
        rhs.add(make_projzz(j1, "a", "b"));
        rhs.add(make_gate("H", {"b"}));
        rhs.add(make_gate("H", {"c"}));
        rhs.add(make_projzz(j2, "b", "c"));
        rhs.add(make_gate("H", {"b"}));
        rhs.add(make_gate("H", {"c"}));
        add_pauli_pow(rhs, Axis::Z, "a", j2);
        add_pauli_pow(rhs, Axis::X, "c", (k + j1) % 2);
        rhs.add(make_bra_bit("b", k));
        const double sign = ((k + j1) * j2) % 2 ? -1.0 : 1.0;
        rhs.add(ScalarFactor{sign * 2.0 * kRoot2});
        return BuilderResult{lhs, rhs};
      });

  pair_id(
      "meas.cnot-to-1meas",
      "CNOT(a->b) |j>(b) = (-1)^{jk} sqrt 2 s_Z^k(a) Pi^j_ZZ(a,b) H(b) "
      "|k>(b); the s_Z exponent must be k for the phases to close",
      ParamSpec{}.bits({"j", "k"}),
      [](const ParamPoint& pt) {
        const int j = pt.bit("j"), k = pt.bit("k");
        Circuit lhs(empty2());
        lhs.add(make_ket_bit("b", j));
        lhs.add(make_cnot("a", "b"));
        Circuit rhs(empty2());
        rhs.add(make_ket_bit("b", k));
        rhs.add(make_gate("H", {"b"}));
        rhs.add(make_projzz(j, "a", "b"));
        add_pauli_pow(rhs, Axis::Z, "a", k);
        rhs.add(ScalarFactor{(j && k) ? -kRoot2 : kRoot2});
        return BuilderResult{lhs, rhs};
      });

  // -------------------------------------------------------------- scat.*
  auto scat_rhs = [](const ComplexMatrix& psi) {
    Circuit rhs(empty2());
    park_wire(rhs, "a");
    rhs.add(make_ket("b", psi));
    return rhs;
  };

  pair_id(
      "scat.exchanger",
      "sqrt 2 <z| H(a) E(a,b) |psi>(a) |0>(b) = |psi>(b)",
      ParamSpec{}.bits({"z"}).state("psi"),
      [scat_rhs](const ParamPoint& pt) {
        const int z = pt.bit("z");
        const ComplexMatrix& psi = pt.state("psi");
        Circuit lhs(empty2());
        lhs.add(make_ket("a", psi));
        lhs.add(make_ket_bit("b", 0));
        lhs.add(make_gate("E", {"a", "b"}));
        lhs.add(make_gate("H", {"a"}));
        lhs.add(make_bra_bit("a", z));
        lhs.add(ScalarFactor{kRoot2});
        return BuilderResult{lhs, scat_rhs(psi)};
      });

  pair_id(
      "scat.cnot1",
      "sqrt 2 <z| s_Z^z(b) H(a) CNOT(a->b) |psi>(a) |0>(b) = |psi>(b)",
      ParamSpec{}.bits({"z"}).state("psi"),
      [scat_rhs](const ParamPoint& pt) {
        const int z = pt.bit("z");
        const ComplexMatrix& psi = pt.state("psi");
        Circuit lhs(empty2());
        lhs.add(make_ket("a", psi));
        lhs.add(make_ket_bit("b", 0));
        lhs.add(make_cnot("a", "b"));
        lhs.add(make_gate("H", {"a"}));
        add_pauli_pow(lhs, Axis::Z, "b", z);
        lhs.add(make_bra_bit("a", z));
        lhs.add(ScalarFactor{kRoot2});
        return BuilderResult{lhs, scat_rhs(psi)};
      });

  pair_id(
      "scat.cnot2",
      "sqrt 2 <x| s_X^x(b) CNOT(b->a) H(b) |psi>(a) |0>(b) = |psi>(b)",
      ParamSpec{}.bits({"x"}).state("psi"),
      [scat_rhs](const ParamPoint& pt) {
        const int x = pt.bit("x");
        const ComplexMatrix& psi = pt.state("psi");
        Circuit lhs(empty2());
        lhs.add(make_ket("a", psi));
        lhs.add(make_ket_bit("b", 0));
        lhs.add(make_gate("H", {"b"}));
        lhs.add(make_cnot("b", "a"));
        add_pauli_pow(lhs, Axis::X, "b", x);
        lhs.add(make_bra_bit("a", x));
        lhs.add(ScalarFactor{kRoot2});
        return BuilderResult{lhs, scat_rhs(psi)};
      });

  pair_id(
      "scat.proj",
      "2 <j| H(a) s_Z^j s_X^k(b) Pi^k_ZZ(a,b) H(b) |psi>(a) |0>(b) = "
      "|psi>(b)",
      ParamSpec{}.bits({"j", "k"}).state("psi"),
      [scat_rhs](const ParamPoint& pt) {
        const int j = pt.bit("j"), k = pt.bit("k");
        const ComplexMatrix& psi = pt.state("psi");
        Circuit lhs(empty2());
        lhs.add(make_ket("a", psi));
        lhs.add(make_ket_bit("b", 0));
        lhs.add(make_gate("H", {"b"}));
        lhs.add(make_projzz(k, "a", "b"));
        lhs.add(make_gate("H", {"a"}));
        add_pauli_pow(lhs, Axis::X, "b", k);
        add_pauli_pow(lhs, Axis::Z, "b", j);
        lhs.add(make_bra_bit("a", j));
        lhs.add(ScalarFactor{2.0});
        return BuilderResult{lhs, scat_rhs(psi)};
      });

  // -------------------------------------------------------------- tele.*
  auto tele_rhs = [](const ComplexMatrix& psi) {
    Circuit rhs({"a", "b", "c"});
    park_wire(rhs, "a");
    park_wire(rhs, "b");
    rhs.add(make_ket("c", psi));
    return rhs;
  };

  pair_id(
      "tele.main",
      "2 <B_{xz}|(a,b) |psi>(a) |B^{xz}>(b,c) = |psi>(c)",
      ParamSpec{}.bits({"x", "z"}).state("psi"),
      [tele_rhs](const ParamPoint& pt) {
        const int x = pt.bit("x"), z = pt.bit("z");
        const ComplexMatrix& psi = pt.state("psi");
        Circuit lhs({"a", "b", "c"});
        lhs.add(make_ket("a", psi));
        append_bell_super(lhs, "b", "c", x, z);
        append_bell_sub_bra(lhs, "a", "b", x, z);
        lhs.add(ScalarFactor{2.0});
        return BuilderResult{lhs, tele_rhs(psi)};
      });

  pair_id(
      "tele.variant",
      "2 <B^{xz}|(a,b) |psi>(a) Lambda^{xz}(c) |B00>(b,c) = |psi>(c)",
      ParamSpec{}.bits({"x", "z"}).state("psi"),
      [tele_rhs](const ParamPoint& pt) {
        const int x = pt.bit("x"), z = pt.bit("z");
        const ComplexMatrix& psi = pt.state("psi");
        Circuit lhs({"a", "b", "c"});
        lhs.add(make_ket("a", psi));
        append_bell00(lhs, "b", "c");
        add_lambda(lhs, "c", x, z);
        append_bell_super_bra(lhs, "a", "b", x, z);
        lhs.add(ScalarFactor{2.0});
        return BuilderResult{lhs, tele_rhs(psi)};
      });

  // ------------------------------------------------------------- dense.*
  pair_id(
      "dense.coding",
      "the dense-coding circuit maps |a b 0 0> to |a b a b> for all bits",
      ParamSpec{}.bits({"a", "b"}),
      [](const ParamPoint& pt) {
        const int a = pt.bit("a"), b = pt.bit("b");
        const WireList ws = {"wa", "wb", "wc", "wd"};
        Circuit lhs(ws);
        lhs.add(make_ket_bit("wa", a));
        lhs.add(make_ket_bit("wb", b));
        lhs.add(make_ket_bit("wc", 0));
        lhs.add(make_ket_bit("wd", 0));
        lhs.add(make_gate("H", {"wd"}));
        lhs.add(make_cnot("wd", "wc"));
        lhs.add(make_gate("Z", {"wc"}, {ControlSpec::n("wb")}));
        lhs.add(make_cnot("wa", "wc"));
        lhs.add(make_cnot("wd", "wc"));
        lhs.add(make_gate("H", {"wd"}));
        Circuit rhs(ws);
        rhs.add(make_ket_bit("wa", a));
        rhs.add(make_ket_bit("wb", b));
        rhs.add(make_ket_bit("wc", a));
        rhs.add(make_ket_bit("wd", b));
        return BuilderResult{lhs, rhs};
      });

  // --------------------------------------------------------------- qft.*
  pair_id(
      "qft.123-eq-321", "both V-ladder orderings build the same transform",
      ParamSpec{}.choice("nb", {"1", "2", "3", "4"}),
      [](const ParamPoint& pt) {
        const std::size_t nb = std::stoul(pt.choice("nb"));
        return BuilderResult{build_qft(nb, QftForm::OneTwoThree),
                             build_qft(nb, QftForm::ThreeTwoOne)};
      });

  custom_id(
      "qft.symmetric", "the transform matrix equals its transpose",
      ParamSpec{}.choice("nb", {"1", "2", "3", "4", "5", "6"}),
      [](const ParamPoint& pt) {
        const ComplexMatrix m = dft_matrix(std::stoul(pt.choice("nb")));
        return max_abs_diff(m, m.transpose());
      });

  pair_id(
      "qft.vs-dft",
      "the built circuit evaluates to entries e^{i 2 pi x y / N}/sqrt N",
      ParamSpec{}
          .choice("nb", {"1", "2", "3", "4", "5"})
          .choice("form", {"123", "321"}),
      [](const ParamPoint& pt) {
        const std::size_t nb = std::stoul(pt.choice("nb"));
        const QftForm form = pt.choice("form") == "123"
                                 ? QftForm::OneTwoThree
                                 : QftForm::ThreeTwoOne;
        Circuit rhs(qft_wires(nb));
        rhs.add(make_matrix_gate(dft_matrix(nb), qft_wires(nb)));
        return BuilderResult{build_qft(nb, form), rhs};
      });

  pair_id(
      "qft.reversal",
      "the six-exchanger ladder network is the four-wire bit reversal, "
      "equal to two disjoint transpositions",
      ParamSpec{},
      [](const ParamPoint&) {
        Circuit lhs(qft_wires(4));
        for (const auto& [i, j] :
             std::initializer_list<std::pair<int, int>>{
                 {2, 3}, {1, 3}, {0, 3}, {1, 2}, {0, 2}, {0, 1}})
          lhs.add(make_gate("E", {qft_wire(i), qft_wire(j)}));
        return BuilderResult{lhs, bit_reversal_circuit(4)};
      });

  custom_id(
      "qft.matrix-element",
      "the product of per-wire local factors reproduces <y|U_FT|x> for all "
      "256 four-bit pairs",
      ParamSpec{}.bits({"x0", "x1", "x2", "x3", "y0", "y1", "y2", "y3"}),
      [](const ParamPoint& pt) {
        std::vector<int> x(4), y(4);
        std::size_t xi = 0, yi = 0;
        for (int k = 0; k < 4; ++k) {
          x[k] = pt.bit("x" + std::to_string(k));
          y[k] = pt.bit("y" + std::to_string(k));
          xi |= std::size_t(x[k]) << k;
          yi |= std::size_t(y[k]) << k;
        }
        static const ComplexMatrix dft4 = dft_matrix(4);
        return std::abs(qft_matrix_element(x, y) - dft4(yi, xi));
      });

  return cat;
}

}  // namespace

const std::vector<Identity>& list_identities() {
  static const std::vector<Identity> catalog = build_catalog();
  return catalog;
}

const Identity& find_identity(const std::string& id) {
  for (const Identity& ident : list_identities())
    if (ident.id == id) return ident;
  throw Error("unknown identity '" + id + "'");
}

std::pair<Circuit, Circuit> instantiate(const std::string& id,
                                        const ParamPoint& point) {
  const Identity& ident = find_identity(id);
  if (!ident.is_pair())
    throw Error("identity '" + id +
                "' is a direct numeric check, not a circuit pair");
  return ident.pair(point);
}

ParamPoint sample_point(const std::string& id, std::uint64_t seed) {
  const Identity& ident = find_identity(id);
  const auto points = ident.params.enumerate(seed, ident.id);
  if (points.empty()) throw Error("empty parameter space");
  return points.front();
}

VerificationReport verify(const std::string& id, double tol,
                          std::uint64_t seed) {
  if (tol < 0) throw Error("tolerance must be nonnegative");
  const Identity& ident = find_identity(id);
  const auto start = std::chrono::steady_clock::now();

  VerificationReport rep;
  rep.id = ident.id;
  rep.citation = ident.citation;
  rep.max_deviation = 0.0;

  const auto points = ident.params.enumerate(seed, ident.id);
  for (const ParamPoint& pt : points) {
    double dev = 0.0;
    if (ident.is_pair()) {
      const auto [lhs, rhs] = ident.pair(pt);
      const EvalResult le = evaluate(lhs);
      const EvalResult re = evaluate(rhs);
      if (le.in_wires != re.in_wires || le.out_wires != re.out_wires)
        throw Error("identity '" + id + "': sides have mismatched open wires");
      dev = max_abs_diff(le.matrix, re.matrix);
    } else {
      dev = ident.custom(pt);
    }
    rep.max_deviation = std::max(rep.max_deviation, dev);
  }
  rep.points = points.size();
  rep.pass = rep.max_deviation <= tol;
  rep.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  return rep;
}

std::vector<VerificationReport> verify_all(double tol, std::uint64_t seed) {
  std::vector<VerificationReport> reps;
  reps.reserve(list_identities().size());
  for (const Identity& ident : list_identities())
    reps.push_back(verify(ident.id, tol, seed));
  return reps;
}

}  // namespace qcpaul

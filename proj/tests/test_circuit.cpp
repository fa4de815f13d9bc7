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

#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "qcpaul/circuit.hpp"

using namespace qcpaul;
using qcpaul::testing::oracle_evaluate;
using qcpaul::testing::random_circuit;

TEST_CASE("Bell preparation evaluates to (1,0,0,1)/sqrt 2") {
  Circuit c({"a", "b"});
  c.add(make_ket_bit("a", 0))
      .add(make_ket_bit("b", 0))
      .add(make_gate("H", {"a"}))
      .add(make_cnot("a", "b"));
  const EvalResult r = evaluate(c);
  CHECK(r.in_wires.empty());
  CHECK(r.out_wires == WireList{"a", "b"});
  REQUIRE(r.matrix.rows() == 4);
  REQUIRE(r.matrix.cols() == 1);
  const double s = 1.0 / std::sqrt(2.0);
  CHECK(std::abs(r.matrix(0, 0) - Complex(s, 0)) <= 1e-15);
  CHECK(std::abs(r.matrix(1, 0)) <= 1e-15);
  CHECK(std::abs(r.matrix(2, 0)) <= 1e-15);
  CHECK(std::abs(r.matrix(3, 0) - Complex(s, 0)) <= 1e-15);
}

TEST_CASE("CNOT flips the target for a set control") {
  Circuit c({"a", "b"});
  c.add(make_ket_bit("a", 1)).add(make_ket_bit("b", 0)).add(make_cnot("a", "b"));
  const EvalResult r = evaluate(c);
  CHECK(std::abs(r.matrix(3, 0) - Complex(1, 0)) <= 1e-15);  // |1,1>
}

TEST_CASE("post-selected ancilla CNOT equals the internal measurement box") {
  for (int j = 0; j < 2; ++j) {
    Circuit lhs({"anc", "b"});
    lhs.add(make_ket_bit("anc", 0))
        .add(make_cnot("b", "anc"))
        .add(make_bra_bit("anc", j));
    Circuit rhs({"anc", "b"});
    rhs.add(make_ket_bit("anc", 0)).add(make_bra_bit("anc", 0));
    rhs.add(make_projz(j, "b"));
    CHECK(max_abs_diff(evaluate(lhs).matrix, evaluate(rhs).matrix) <= 1e-15);
  }
}

TEST_CASE("controlled gates honor every control kind") {
  // nbar control: fires on |0>.
  Circuit c({"a", "b"});
  c.add(make_ket_bit("a", 0)).add(make_ket_bit("b", 0));
  c.add(make_gate("X", {"b"}, {ControlSpec::nbar("a")}));
  CHECK(std::abs(evaluate(c).matrix(1, 0) - Complex(1, 0)) <= 1e-15);

  // Projector control: Pi^0_XX fires on the symmetric subspace.
  Circuit p({"a", "b", "t"});
  std::vector<ControlSpec> ctl = {
      ControlSpec::proj({"a", "b"}, pi_pair(Axis::X, Axis::X, 0))};
  p.add(make_gate("X", {"t"}, ctl));
  const ComplexMatrix full = evaluate(p).matrix;
  const ComplexMatrix pr =
      embed(pi_pair(Axis::X, Axis::X, 0), {"a", "b"}, {"a", "b", "t"});
  const ComplexMatrix xt = embed(pauli(Axis::X), {"t"}, {"a", "b", "t"});
  const ComplexMatrix expect =
      xt * pr + (ComplexMatrix::identity(8) - pr);
  CHECK(max_abs_diff(full, expect) <= 1e-14);
}

TEST_CASE("compose") {
  Circuit cnot({"a", "b"});
  cnot.add(make_cnot("a", "b"));
  const Circuit twice = compose(cnot, cnot);
  CHECK(max_abs_diff(evaluate(twice).matrix, ComplexMatrix::identity(4)) <=
        1e-15);

  Circuit empty({"a", "b"});
  CHECK(compose(cnot, empty) == cnot);

  Circuit swap3({"a", "b"});
  swap3.add(make_cnot("b", "a")).add(make_cnot("a", "b")).add(make_cnot("b", "a"));
  CHECK(max_abs_diff(evaluate(swap3).matrix, exchanger_matrix()) <= 1e-15);

  Circuit other({"a", "c"});
  CHECK_THROWS_AS(compose(cnot, other), Error);

  Circuit closed({"a", "b"});
  closed.add(make_bra_bit("a", 0));
  Circuit uses_a({"a", "b"});
  uses_a.add(make_gate("H", {"a"}));
  CHECK_THROWS_AS(compose(closed, uses_a), Error);
}

TEST_CASE("evaluate distributes over composition without boundaries") {
  Rng rng(31);
  for (int i = 0; i < 20; ++i) {
    Circuit f({"a", "b"}), g({"a", "b"});
    f.add(make_matrix_gate(random_unitary(rng), {"a"}));
    f.add(make_cnot("a", "b"));
    g.add(make_matrix_gate(random_unitary(rng), {"b"}));
    g.add(make_gate("E", {"a", "b"}));
    const ComplexMatrix lhs = evaluate(compose(f, g)).matrix;
    const ComplexMatrix rhs = evaluate(g).matrix * evaluate(f).matrix;
    CHECK(max_abs_diff(lhs, rhs) <= 1e-13);
  }
}

TEST_CASE("adjoint basics") {
  Circuit h({"a"});
  h.add(make_gate("H", {"a"}));
  CHECK(adjoint(h) == h);

  Circuit s({"a"});
  s.add(ScalarFactor{Complex(0, 1)});
  const Circuit sd = adjoint(s);
  const auto* sf = std::get_if<ScalarFactor>(&sd.elements[0]);
  REQUIRE(sf != nullptr);
  CHECK(sf->value == Complex(0, -1));
}

TEST_CASE("adjoint is an involution and matches the dagger, 200 circuits") {
  Rng rng(32);
  for (int i = 0; i < 200; ++i) {
    const Circuit c = random_circuit(rng, 3, 6);
    const Circuit back = adjoint(adjoint(c));
    CHECK(max_abs_diff(evaluate(back).matrix, evaluate(c).matrix) <= 1e-12);
    CHECK(max_abs_diff(evaluate(adjoint(c)).matrix,
                       evaluate(c).matrix.dagger()) <= 1e-12);
  }
}

TEST_CASE("scalar factors multiply exactly, anywhere") {
  Circuit c({"a", "b"});
  c.add(make_gate("H", {"a"}));
  c.add(ScalarFactor{Complex(0.25, -0.5)});
  c.add(make_cnot("a", "b"));
  Circuit plain({"a", "b"});
  plain.add(make_gate("H", {"a"})).add(make_cnot("a", "b"));
  CHECK(max_abs_diff(evaluate(c).matrix,
                     evaluate(plain).matrix * Complex(0.25, -0.5)) == 0.0);
}

TEST_CASE("element order on disjoint wires is irrelevant") {
  Rng rng(33);
  for (int i = 0; i < 20; ++i) {
    const ComplexMatrix u = random_unitary(rng);
    const ComplexMatrix v = random_unitary(rng);
    Circuit ab({"a", "b"}), ba({"a", "b"});
    ab.add(make_matrix_gate(u, {"a"})).add(make_matrix_gate(v, {"b"}));
    ba.add(make_matrix_gate(v, {"b"})).add(make_matrix_gate(u, {"a"}));
    CHECK(max_abs_diff(evaluate(ab).matrix, evaluate(ba).matrix) <= 1e-15);
  }
}

TEST_CASE("fully contracted circuits give a 1x1 amplitude") {
  Circuit c({"a"});
  c.add(make_ket_bit("a", 0)).add(make_gate("H", {"a"})).add(make_bra_bit("a", 1));
  const EvalResult r = evaluate(c);
  CHECK(r.in_wires.empty());
  CHECK(r.out_wires.empty());
  REQUIRE(r.matrix.rows() == 1);
  CHECK(std::abs(r.matrix(0, 0) - Complex(1.0 / std::sqrt(2.0), 0)) <= 1e-15);
}

TEST_CASE("validation errors") {
  Circuit undeclared({"a"});
  undeclared.add(make_gate("H", {"z"}));
  CHECK_THROWS_AS(evaluate(undeclared), Error);

  Circuit twice({"a"});
  twice.add(make_ket_bit("a", 0)).add(make_ket_bit("a", 1));
  CHECK_THROWS_AS(validate(twice), Error);

  Circuit after_bra({"a"});
  after_bra.add(make_bra_bit("a", 0)).add(make_gate("H", {"a"}));
  CHECK_THROWS_AS(validate(after_bra), Error);

  Circuit before_ket({"a"});
  before_ket.add(make_gate("H", {"a"})).add(make_ket_bit("a", 0));
  CHECK_THROWS_AS(validate(before_ket), Error);

  Circuit overlap({"a", "b"});
  overlap.add(make_gate("X", {"a"}, {ControlSpec::n("a")}));
  CHECK_THROWS_AS(validate(overlap), Error);
}

TEST_CASE("evaluator agrees with the basis-application oracle") {
  Rng rng(34);
  for (int i = 0; i < 50; ++i) {
    const Circuit c = random_circuit(rng, 4, 8);
    const EvalResult a = evaluate(c);
    const EvalResult b = oracle_evaluate(c);
    REQUIRE(a.in_wires == b.in_wires);
    REQUIRE(a.out_wires == b.out_wires);
    CHECK(max_abs_diff(a.matrix, b.matrix) <= 1e-12);
  }
}

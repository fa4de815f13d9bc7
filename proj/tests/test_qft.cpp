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

#include "qcpaul/qft.hpp"

using namespace qcpaul;

namespace {

std::size_t bit_reverse(std::size_t x, std::size_t nb) {
  std::size_t out = 0;
  for (std::size_t i = 0; i < nb; ++i)
    out |= ((x >> i) & 1u) << (nb - 1 - i);
  return out;
}

}  // namespace

TEST_CASE("v_gate phases") {
  const auto& g1 = std::get<GateElement>(v_gate(1, 0));
  CHECK(std::abs(g1.matrix(1, 1) - Complex(0, 1)) <= 1e-15);  // e^{i pi/2}
  const auto& g3 = std::get<GateElement>(v_gate(3, 0));
  CHECK(std::abs(g3.matrix(1, 1) - std::polar(1.0, M_PI / 8.0)) <= 1e-15);
  CHECK_THROWS_AS(v_gate(2, 2), Error);

  // Diagonal action: only |1,1> picks up the phase.
  Circuit c(qft_wires(2));
  c.add(v_gate(1, 0));
  const ComplexMatrix m = evaluate(c).matrix;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      if (i != j) {
        CHECK(std::abs(m(i, j)) <= 1e-15);
      } else {
        CHECK(std::abs(m(i, i) - (i == 3 ? Complex(0, 1) : Complex(1, 0))) <=
              1e-15);
      }
    }
}

TEST_CASE("single-wire transform is the Hadamard") {
  const Circuit c = build_qft(1, QftForm::OneTwoThree);
  REQUIRE(c.elements.size() == 1);
  CHECK(max_abs_diff(evaluate(c).matrix, hadamard(1)) <= 1e-15);
  CHECK(bit_reversal_circuit(1).elements.empty());
}

TEST_CASE("the canonical four-wire gate sequence") {
  const Circuit c = build_qft(4, QftForm::OneTwoThree);
  // Chronologically: 2 exchangers, then H(0) V(1,0) V(2,0) V(3,0) H(1)
  // V(2,1) V(3,1) H(2) V(3,2) H(3).
  REQUIRE(c.elements.size() == 12);
  const char* expect[12] = {"E", "E", "H", "MAT2", "MAT2", "MAT2",
                            "H", "MAT2", "MAT2", "H", "MAT2", "H"};
  for (int i = 0; i < 12; ++i)
    CHECK(std::get<GateElement>(c.elements[i]).name == expect[i]);
  const auto& h0 = std::get<GateElement>(c.elements[2]);
  CHECK(h0.targets == WireList{"q0"});
  const auto& last = std::get<GateElement>(c.elements[11]);
  CHECK(last.targets == WireList{"q3"});
}

TEST_CASE("gate counts") {
  for (std::size_t nb = 1; nb <= 8; ++nb) {
    for (const QftForm f : {QftForm::OneTwoThree, QftForm::ThreeTwoOne}) {
      const Circuit c = build_qft(nb, f);
      std::size_t h = 0, v = 0, e = 0;
      for (const CircuitElement& el : c.elements) {
        const std::string& name = std::get<GateElement>(el).name;
        if (name == "H") ++h;
        else if (name == "E") ++e;
        else ++v;
      }
      CHECK(h == nb);
      CHECK(v == nb * (nb - 1) / 2);
      CHECK(e == nb / 2);
    }
  }
  CHECK_THROWS_AS(build_qft(0, QftForm::OneTwoThree), Error);
  CHECK_THROWS_AS(build_qft(9, QftForm::OneTwoThree), Error);
}

TEST_CASE("both forms evaluate to the reference matrix up to 8 wires") {
  for (std::size_t nb = 1; nb <= 8; ++nb) {
    const ComplexMatrix ref = dft_matrix(nb);
    for (const QftForm f : {QftForm::OneTwoThree, QftForm::ThreeTwoOne}) {
      const EvalResult r = evaluate(build_qft(nb, f));
      CHECK(max_abs_diff(r.matrix, ref) <= 1e-9);
    }
  }
}

TEST_CASE("reference matrix properties") {
  CHECK(max_abs_diff(dft_matrix(1), hadamard(1)) <= 1e-15);
  // Entry (y=3, x=3) at two wires: e^{i 2 pi 9/4}/2 = i/2.
  CHECK(std::abs(dft_matrix(2)(3, 3) - Complex(0, 0.5)) <= 1e-15);
  for (std::size_t nb = 1; nb <= 8; ++nb) {
    const ComplexMatrix m = dft_matrix(nb);
    CHECK(max_abs_diff(m.dagger() * m, ComplexMatrix::identity(m.rows())) <=
          1e-12);
    CHECK(max_abs_diff(m, m.transpose()) <= 1e-15);
  }
}

TEST_CASE("transpose symmetry holds for the built circuit too") {
  const Circuit c = build_qft(3, QftForm::OneTwoThree);
  const ComplexMatrix m = evaluate(c).matrix;
  const ComplexMatrix md = evaluate(adjoint(c)).matrix;
  CHECK(max_abs_diff(md.conjugate(), m) <= 1e-12);
}

TEST_CASE("bit reversal permutes basis indices") {
  const ComplexMatrix r4 = evaluate(bit_reversal_circuit(4)).matrix;
  for (std::size_t x = 0; x < 16; ++x)
    for (std::size_t y = 0; y < 16; ++y)
      CHECK(r4(y, x) ==
            Complex(y == bit_reverse(x, 4) ? 1.0 : 0.0, 0.0));
  for (std::size_t nb = 1; nb <= 6; ++nb) {
    const Circuit r = bit_reversal_circuit(nb);
    const ComplexMatrix twice =
        evaluate(r).matrix * evaluate(r).matrix;
    CHECK(max_abs_diff(twice, ComplexMatrix::identity(twice.rows())) <=
          1e-14);
  }
}

TEST_CASE("matrix-element product formula") {
  CHECK(std::abs(qft_matrix_element({0, 0, 0, 0}, {0, 0, 0, 0}) -
                 Complex(0.25, 0)) <= 1e-15);
  // One wire: <y|H|x> = (-1)^{xy}/sqrt 2.
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y)
      CHECK(std::abs(qft_matrix_element({x}, {y}) -
                     Complex((x && y) ? -1.0 : 1.0, 0) /
                         std::sqrt(2.0)) <= 1e-15);
  const ComplexMatrix ref = dft_matrix(4);
  for (std::size_t x = 0; x < 16; ++x)
    for (std::size_t y = 0; y < 16; ++y) {
      std::vector<int> xb(4), yb(4);
      for (int k = 0; k < 4; ++k) {
        xb[k] = int((x >> k) & 1u);
        yb[k] = int((y >> k) & 1u);
      }
      CHECK(std::abs(qft_matrix_element(xb, yb) - ref(y, x)) <= 1e-12);
    }
  CHECK_THROWS_AS(qft_matrix_element({0, 1}, {0}), Error);
}

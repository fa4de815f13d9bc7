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

#include <bit>
#include <cmath>

#include "qcpaul/gates.hpp"
#include "qcpaul/rng.hpp"

using namespace qcpaul;

namespace {
const Complex kI(0, 1);
}

TEST_CASE("Pauli matrix entries") {
  CHECK(pauli(Axis::X) == ComplexMatrix(2, 2, {0, 1, 1, 0}));
  CHECK(pauli(Axis::Y) == ComplexMatrix(2, 2, {0, -kI, kI, 0}));
  CHECK(pauli(Axis::Z) == ComplexMatrix(2, 2, {1, 0, 0, -1}));
}

TEST_CASE("Pauli multiplication table") {
  for (const Axis w : kAxes)
    CHECK(max_abs_diff(pauli(w) * pauli(w), ComplexMatrix::identity(2)) ==
          0.0);
  CHECK(max_abs_diff(pauli(Axis::X) * pauli(Axis::Y), pauli(Axis::Z) * kI) ==
        0.0);
  CHECK(max_abs_diff(pauli(Axis::Y) * pauli(Axis::Z), pauli(Axis::X) * kI) ==
        0.0);
  CHECK(max_abs_diff(pauli(Axis::Z) * pauli(Axis::X), pauli(Axis::Y) * kI) ==
        0.0);
  // Distinct Paulis anticommute.
  for (const Axis w1 : kAxes)
    for (const Axis w2 : kAxes) {
      if (w1 == w2) continue;
      const ComplexMatrix ab = pauli(w1) * pauli(w2);
      const ComplexMatrix ba = pauli(w2) * pauli(w1);
      CHECK(max_abs_diff(ab, ba * Complex(-1.0, 0.0)) == 0.0);
    }
}

TEST_CASE("number operators") {
  CHECK(number_op(Axis::Z) == ComplexMatrix(2, 2, {0, 0, 0, 1}));
  for (const Axis w : kAxes) {
    CHECK(max_abs_diff(number_op(w, false) + number_op(w, true),
                       ComplexMatrix::identity(2)) == 0.0);
    // sigma_w = 1 - 2 n_w entrywise.
    CHECK(max_abs_diff(pauli(w),
                       ComplexMatrix::identity(2) -
                           number_op(w) * Complex(2.0, 0.0)) == 0.0);
  }
  // n_X equals the outer product of the -1 eigenvector.
  const ComplexMatrix minus_x = eigenstate(Axis::X, -1);
  CHECK(max_abs_diff(number_op(Axis::X), minus_x * minus_x.dagger()) <=
        1e-15);
}

TEST_CASE("lambda_xz table and dagger relation") {
  CHECK(lambda_xz(0, 0) == ComplexMatrix::identity(2));
  CHECK(lambda_xz(1, 0) == pauli(Axis::X));
  CHECK(max_abs_diff(lambda_xz(1, 1), pauli(Axis::Y) * (-kI)) == 0.0);
  // The consistent table entry: Lambda^{01} = sigma_Z.
  CHECK(lambda_xz(0, 1) == pauli(Axis::Z));
  for (int x = 0; x < 2; ++x)
    for (int z = 0; z < 2; ++z) {
      const double sign = (x && z) ? -1.0 : 1.0;
      CHECK(max_abs_diff(lambda_xz(x, z).dagger(),
                         lambda_xz(x, z) * Complex(sign, 0.0)) == 0.0);
    }
  CHECK_THROWS_AS(lambda_xz(2, 0), Error);
}

TEST_CASE("phase gate diag(1, i)") {
  const ComplexMatrix s = phase_i_n();
  CHECK(max_abs_diff(s * s, pauli(Axis::Z)) == 0.0);
  CHECK(max_abs_diff(s * pauli(Axis::X) * s.dagger(), pauli(Axis::Y)) == 0.0);
  CHECK(max_abs_diff(s.dagger() * pauli(Axis::X) * s,
                     pauli(Axis::Y) * Complex(-1.0, 0.0)) == 0.0);
}

TEST_CASE("Hadamard relations") {
  const ComplexMatrix h = hadamard(1);
  CHECK(max_abs_diff(h, (pauli(Axis::X) + pauli(Axis::Z)) *
                            Complex(1.0 / std::sqrt(2.0), 0.0)) <= 1e-16);
  CHECK(max_abs_diff(h * h, ComplexMatrix::identity(2)) <= 1e-15);
  CHECK(max_abs_diff(h * pauli(Axis::X) * h, pauli(Axis::Z)) <= 1e-15);
  CHECK(max_abs_diff(h * pauli(Axis::Z) * h, pauli(Axis::X)) <= 1e-15);
  CHECK(max_abs_diff(h * eigenstate(Axis::Z, 1), eigenstate(Axis::X, 1)) <=
        1e-15);
  CHECK(max_abs_diff(h * eigenstate(Axis::Z, -1), eigenstate(Axis::X, -1)) <=
        1e-15);
}

TEST_CASE("multi-bit Hadamard") {
  const double half = 0.5;
  ComplexMatrix h2(4, 4);
  const double sgn[4][4] = {{1, 1, 1, 1},
                            {1, -1, 1, -1},
                            {1, 1, -1, -1},
                            {1, -1, -1, 1}};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) h2(i, j) = sgn[i][j] * half;
  CHECK(max_abs_diff(hadamard(2), h2) <= 1e-16);

  // Entry formula oracle at nb = 3.
  const ComplexMatrix h3 = hadamard(3);
  for (std::size_t b = 0; b < 8; ++b)
    for (std::size_t bp = 0; bp < 8; ++bp) {
      const double expect =
          (std::popcount(b & bp) % 2 ? -1.0 : 1.0) / std::sqrt(8.0);
      CHECK(std::abs(h3(b, bp) - Complex(expect, 0)) <= 1e-15);
    }

  for (std::size_t nb = 1; nb <= 8; ++nb) {
    const ComplexMatrix h = hadamard(nb);
    CHECK(max_abs_diff(h, h.transpose()) == 0.0);
    CHECK(max_abs_diff(h * h, ComplexMatrix::identity(h.rows())) <= 1e-12);
  }
  CHECK_THROWS_AS(hadamard(13), Error);
}

TEST_CASE("eigenstates have the conventional components, normalized and orthogonal") {
  CHECK(max_abs_diff(eigenstate(Axis::Y, 1),
                     ComplexMatrix::ket(1.0 / std::sqrt(2.0),
                                        kI / std::sqrt(2.0))) <= 1e-16);
  CHECK(eigenstate(Axis::Z, -1) == ComplexMatrix::ket(0, 1));
  for (const Axis w : kAxes)
    for (const int sign : {1, -1}) {
      const ComplexMatrix v = eigenstate(w, sign);
      const ComplexMatrix sv = pauli(w) * v;
      CHECK(max_abs_diff(sv, v * Complex(sign, 0)) <= 1e-15);
      CHECK(std::abs((v.dagger() * v)(0, 0) - Complex(1, 0)) <= 1e-15);
    }
  for (const Axis w : kAxes) {
    const Complex ip =
        (eigenstate(w, 1).dagger() * eigenstate(w, -1))(0, 0);
    CHECK(std::abs(ip) <= 1e-15);
  }
}

TEST_CASE("pi_pair projectors") {
  // Pi^j_ZZ picks out the parity of the two bits.
  for (int j = 0; j < 2; ++j) {
    const ComplexMatrix p = pi_pair(Axis::Z, Axis::Z, j);
    for (std::size_t a = 0; a < 2; ++a)
      for (std::size_t b = 0; b < 2; ++b) {
        const std::size_t idx = (a << 1) | b;
        const double expect = ((a ^ b) == std::size_t(j)) ? 1.0 : 0.0;
        CHECK(p(idx, idx) == Complex(expect, 0.0));
      }
  }
  CHECK(max_abs_diff(pi_pair(Axis::Z, Axis::Z, 0) + pi_pair(Axis::Z, Axis::Z, 1),
                     ComplexMatrix::identity(4)) == 0.0);
  // (1 + Sigma)/2 oracle.
  const ComplexMatrix xx = kron(pauli(Axis::X), pauli(Axis::X));
  CHECK(max_abs_diff(pi_pair(Axis::X, Axis::X, 0),
                     (ComplexMatrix::identity(4) + xx) * Complex(0.5, 0.0)) ==
        0.0);
  for (const Axis w1 : kAxes)
    for (const Axis w2 : kAxes)
      for (int j = 0; j < 2; ++j) {
        const ComplexMatrix p = pi_pair(w1, w2, j);
        CHECK(p.is_idempotent(1e-14));
        const ComplexMatrix sig = kron(pauli(w1), pauli(w2));
        CHECK(max_abs_diff(sig * p, p * Complex(j ? -1.0 : 1.0, 0.0)) <=
              1e-15);
      }
}

TEST_CASE("rotation") {
  Rng rng(21);
  const double t = 0.83;
  const ComplexMatrix rzrot = rotation({0, 0, t});
  CHECK(max_abs_diff(rzrot, ComplexMatrix::identity(2) * Complex(std::cos(t), 0) +
                                pauli(Axis::Z) * (kI * std::sin(t))) <=
        1e-16);
  CHECK(rotation({0, 0, 0}) == ComplexMatrix::identity(2));
  for (int i = 0; i < 20; ++i) {
    const ComplexMatrix r = rotation(
        {rng.uniform(-3, 3), rng.uniform(-3, 3), rng.uniform(-3, 3)});
    CHECK(r.is_unitary(1e-12));
  }
}

TEST_CASE("diagonalization of sigma_X") {
  const UnitaryDiagonalization d = diagonalize_2x2_unitary(pauli(Axis::X));
  CHECK(d.theta1 == doctest::Approx(0.0));
  CHECK(d.theta2 == doctest::Approx(M_PI));
  CHECK(max_abs_diff(d.v, hadamard(1)) <= 1e-12);  // columns |+X>, |-X>
  const ComplexMatrix rebuilt = std::polar(1.0, d.theta_bar()) *
                                (d.v * rz(d.delta()) * d.v.dagger());
  CHECK(max_abs_diff(rebuilt, pauli(Axis::X)) <= 1e-12);
}

TEST_CASE("diagonalization of a scalar unitary") {
  const double phi = 1.234;
  const ComplexMatrix u = ComplexMatrix::identity(2) * std::polar(1.0, phi);
  const UnitaryDiagonalization d = diagonalize_2x2_unitary(u);
  CHECK(d.v == ComplexMatrix::identity(2));
  CHECK(d.delta() == doctest::Approx(0.0));
  CHECK(d.theta_bar() == doctest::Approx(phi));
}

TEST_CASE("diagonalization reconstructs 100 random unitaries") {
  Rng rng(22);
  for (int i = 0; i < 100; ++i) {
    const ComplexMatrix u = random_unitary(rng);
    const UnitaryDiagonalization d = diagonalize_2x2_unitary(u);
    CHECK(d.v.is_unitary(1e-10));
    CHECK(d.theta1 <= d.theta2);
    CHECK(d.theta1 > -M_PI);
    CHECK(d.theta2 <= M_PI + 1e-12);
    const ComplexMatrix rebuilt = std::polar(1.0, d.theta_bar()) *
                                  (d.v * rz(d.delta()) * d.v.dagger());
    CHECK(max_abs_diff(rebuilt, u) <= 1e-10);
  }
  CHECK_THROWS_AS(diagonalize_2x2_unitary(ComplexMatrix(2, 2, {1, 1, 0, 1})),
                  Error);
}

TEST_CASE("principal square root") {
  CHECK(max_abs_diff(sqrt_unitary(ComplexMatrix::identity(2)),
                     ComplexMatrix::identity(2)) <= 1e-14);
  // The branch convention makes sqrt(sigma_Z) the diag(1, i) phase gate.
  CHECK(max_abs_diff(sqrt_unitary(pauli(Axis::Z)), phase_i_n()) <= 1e-12);
  Rng rng(23);
  for (int i = 0; i < 100; ++i) {
    const ComplexMatrix u = random_unitary(rng);
    const ComplexMatrix r = sqrt_unitary(u);
    CHECK(max_abs_diff(r * r, u) <= 1e-10);
  }
}

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

#include "qcpaul/gates.hpp"

#include <bit>
#include <cmath>

namespace qcpaul {

namespace {
const Complex kI(0.0, 1.0);
}

const char* to_string(Axis w) {
  switch (w) {
    case Axis::X: return "X";
    case Axis::Y: return "Y";
    case Axis::Z: return "Z";
  }
  return "?";
}

Axis axis_from_string(const std::string& s) {
  if (s == "X" || s == "x") return Axis::X;
  if (s == "Y" || s == "y") return Axis::Y;
  if (s == "Z" || s == "z") return Axis::Z;
  throw Error("unknown axis '" + s + "'");
}

ComplexMatrix pauli(Axis w) {
  switch (w) {
    case Axis::X: return ComplexMatrix(2, 2, {0, 1, 1, 0});
    case Axis::Y: return ComplexMatrix(2, 2, {0, -kI, kI, 0});
    case Axis::Z: return ComplexMatrix(2, 2, {1, 0, 0, -1});
  }
  throw Error("bad axis");
}

ComplexMatrix hadamard(std::size_t nb) {
  if (nb == 0 || nb > kMaxWires)
    throw Error("hadamard order must be between 1 and " +
                std::to_string(kMaxWires));
  const std::size_t dim = std::size_t{1} << nb;
  const double norm = 1.0 / std::sqrt(static_cast<double>(dim));
  ComplexMatrix out(dim, dim);
  for (std::size_t b = 0; b < dim; ++b)
    for (std::size_t bp = 0; bp < dim; ++bp)
      out(b, bp) = (std::popcount(b & bp) % 2 == 0) ? norm : -norm;
  return out;
}

ComplexMatrix number_op(Axis w, bool bar) {
  const ComplexMatrix s = pauli(w);
  ComplexMatrix out = ComplexMatrix::identity(2);
  const double sign = bar ? 1.0 : -1.0;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      out(i, j) = 0.5 * (out(i, j) + sign * s(i, j));
  return out;
}

ComplexMatrix lambda_xz(int x, int z) {
  if ((x != 0 && x != 1) || (z != 0 && z != 1))
    throw Error("lambda_xz arguments must be bits");
  ComplexMatrix out = ComplexMatrix::identity(2);
  if (x) out = pauli(Axis::X) * out;
  if (z) out = out * pauli(Axis::Z);
  return out;
}

ComplexMatrix phase_i_n() { return ComplexMatrix(2, 2, {1, 0, 0, kI}); }

ComplexMatrix rotation(const std::array<double, 3>& t) {
  const double theta = std::sqrt(t[0] * t[0] + t[1] * t[1] + t[2] * t[2]);
  if (theta == 0.0) return ComplexMatrix::identity(2);
  const Complex c = std::cos(theta);
  const Complex is = kI * std::sin(theta) / theta;
  ComplexMatrix out = ComplexMatrix::identity(2) * c;
  const ComplexMatrix sx = pauli(Axis::X), sy = pauli(Axis::Y),
                      sz = pauli(Axis::Z);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      out(i, j) += is * (t[0] * sx(i, j) + t[1] * sy(i, j) + t[2] * sz(i, j));
  return out;
}

ComplexMatrix rz(double theta) {
  return ComplexMatrix(2, 2,
                       {std::polar(1.0, theta), 0, 0, std::polar(1.0, -theta)});
}

ComplexMatrix eigenstate(Axis w, int sign) {
  if (sign != 1 && sign != -1) throw Error("eigenstate sign must be +1 or -1");
  const double r = 1.0 / std::sqrt(2.0);
  switch (w) {
    case Axis::X:
      return ComplexMatrix::ket(r, sign > 0 ? r : -r);
    case Axis::Y:
      return ComplexMatrix::ket(r, sign > 0 ? r * kI : -r * kI);
    case Axis::Z:
      return sign > 0 ? ComplexMatrix::ket(1, 0) : ComplexMatrix::ket(0, 1);
  }
  throw Error("bad axis");
}

ComplexMatrix pi_pair(Axis w1, Axis w2, int j) {
  if (j != 0 && j != 1) throw Error("pi_pair eigenvalue index must be a bit");
  const ComplexMatrix sig = kron(pauli(w1), pauli(w2));
  ComplexMatrix out = ComplexMatrix::identity(4);
  const double sign = (j == 0) ? 1.0 : -1.0;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t k = 0; k < 4; ++k)
      out(i, k) = 0.5 * (out(i, k) + sign * sig(i, k));
  return out;
}

ComplexMatrix cnot_matrix() {
  return ComplexMatrix(4, 4,
                       {1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0});
}

ComplexMatrix exchanger_matrix() {
  return ComplexMatrix(4, 4,
                       {1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 1});
}

ComplexMatrix ket0() { return ComplexMatrix::ket(1, 0); }
ComplexMatrix ket1() { return ComplexMatrix::ket(0, 1); }

namespace {

// Deterministic phase fix: scale v so its largest-magnitude component is
// real and positive.
void fix_phase(ComplexMatrix& v) {
  std::size_t imax = std::abs(v(0, 0)) + 1e-15 >= std::abs(v(1, 0)) ? 0 : 1;
  const Complex z = v(imax, 0);
  const double m = std::abs(z);
  if (m == 0.0) return;
  const Complex ph = std::conj(z) / m;
  v(0, 0) *= ph;
  v(1, 0) *= ph;
}

}  // namespace

UnitaryDiagonalization diagonalize_2x2_unitary(const ComplexMatrix& u,
                                               double tol) {
  if (u.rows() != 2 || u.cols() != 2)
    throw Error("diagonalization requires a 2x2 matrix");
  if (!u.is_unitary(tol)) throw Error("matrix is not unitary within tolerance");

  UnitaryDiagonalization d;
  const Complex tr = u(0, 0) + u(1, 1);
  const Complex det = u(0, 0) * u(1, 1) - u(0, 1) * u(1, 0);
  const Complex disc = std::sqrt(tr * tr - 4.0 * det);

  if (std::abs(disc) < 1e-12) {
    // Degenerate spectrum: u is a phase times the identity.
    d.v = ComplexMatrix::identity(2);
    d.theta1 = d.theta2 = std::arg(tr / 2.0);
    return d;
  }

  Complex l1 = (tr + disc) / 2.0;
  Complex l2 = (tr - disc) / 2.0;
  double t1 = std::arg(l1);
  double t2 = std::arg(l2);
  if (t1 > t2) {
    std::swap(l1, l2);
    std::swap(t1, t2);
  }

  if (std::abs(u(0, 1)) < 1e-13 && std::abs(u(1, 0)) < 1e-13) {
    // Already diagonal; keep the computational basis.
    d.v = ComplexMatrix::identity(2);
    d.theta1 = std::arg(u(0, 0));
    d.theta2 = std::arg(u(1, 1));
    if (d.theta1 > d.theta2) {
      // V must still pair column order with phase order.
      d.v = ComplexMatrix(2, 2, {0, 1, 1, 0});
      std::swap(d.theta1, d.theta2);
    }
    return d;
  }

  // Rows of (u - l1) are proportional; pick the better-conditioned kernel
  // vector of the two candidates.
  ComplexMatrix v1a(2, 1, {u(0, 1), l1 - u(0, 0)});
  ComplexMatrix v1b(2, 1, {l1 - u(1, 1), u(1, 0)});
  ComplexMatrix v1 = v1a.max_abs() >= v1b.max_abs() ? v1a : v1b;
  const double n1 = std::sqrt(std::norm(v1(0, 0)) + std::norm(v1(1, 0)));
  v1(0, 0) /= n1;
  v1(1, 0) /= n1;
  fix_phase(v1);
  // u is normal, so the second eigenvector is the orthogonal complement.
  ComplexMatrix v2(2, 1, {-std::conj(v1(1, 0)), std::conj(v1(0, 0))});
  fix_phase(v2);

  d.v = ComplexMatrix(2, 2, {v1(0, 0), v2(0, 0), v1(1, 0), v2(1, 0)});
  d.theta1 = t1;
  d.theta2 = t2;

  const ComplexMatrix rebuilt =
      std::polar(1.0, d.theta_bar()) *
      (d.v * rz(d.delta()) * d.v.dagger());
  if (max_abs_diff(rebuilt, u) > 1e-9)
    throw Error("diagonalization failed to reconstruct its input");
  return d;
}

ComplexMatrix sqrt_unitary(const ComplexMatrix& u, double tol) {
  const UnitaryDiagonalization d = diagonalize_2x2_unitary(u, tol);
  const ComplexMatrix half(
      2, 2,
      {std::polar(1.0, d.theta1 / 2.0), 0, 0, std::polar(1.0, d.theta2 / 2.0)});
  return d.v * half * d.v.dagger();
}

}  // namespace qcpaul

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

#include <array>

#include "qcpaul/matrix.hpp"

namespace qcpaul {

enum class Axis { X, Y, Z };

inline constexpr std::array<Axis, 3> kAxes = {Axis::X, Axis::Y, Axis::Z};

const char* to_string(Axis w);
Axis axis_from_string(const std::string& s);

/// Pauli matrix sigma_w.
ComplexMatrix pauli(Axis w);

/// nb-fold tensor power of the one-bit Hadamard; entry (b, b') is
/// (-1)^(b.b') / sqrt(2^nb) with the bitwise dot product in the exponent.
ComplexMatrix hadamard(std::size_t nb);

/// Number operator n_w = (1 - sigma_w)/2, or its complement
/// nbar_w = (1 + sigma_w)/2 when bar is set.
ComplexMatrix number_op(Axis w, bool bar = false);

/// Lambda^{x,z} = sigma_X^x sigma_Z^z, so Lambda^{00} = 1, Lambda^{10} =
/// sigma_X, Lambda^{01} = sigma_Z and Lambda^{11} = -i sigma_Y. Note the
/// index order: z picks the Z factor, applied first.
ComplexMatrix lambda_xz(int x, int z);

/// diag(1, i), the square root of sigma_Z picked by the principal branch.
ComplexMatrix phase_i_n();

/// exp(i theta_vec . sigma_vec) = cos|t| + i sin|t| (sigma . t_hat);
/// the zero vector gives the identity.
ComplexMatrix rotation(const std::array<double, 3>& theta_vec);

/// exp(i theta sigma_Z) = diag(e^{i theta}, e^{-i theta}).
ComplexMatrix rz(double theta);

/// 2x1 eigenvector of sigma_w with eigenvalue sign (+1 or -1), exactly the
/// conventional components (e.g. |+_Y> = (1, i)/sqrt 2).
ComplexMatrix eigenstate(Axis w, int sign);

/// Projector onto the eigenspace of sigma_{w1} (x) sigma_{w2} with
/// eigenvalue (-1)^j, i.e. (I4 + (-1)^j sigma_{w1} (x) sigma_{w2}) / 2.
ComplexMatrix pi_pair(Axis w1, Axis w2, int j);

/// 4x4 CNOT with the first (more significant) wire as control.
ComplexMatrix cnot_matrix();

/// 4x4 swap.
ComplexMatrix exchanger_matrix();

ComplexMatrix ket0();
ComplexMatrix ket1();

/// U = e^{i theta_bar} V e^{i delta sigma_Z} V^dagger for a 2x2 unitary U.
/// Eigenphases live in (-pi, pi], listed in ascending order; a degenerate
/// spectrum returns V = I.
struct UnitaryDiagonalization {
  ComplexMatrix v;  // 2x2 unitary of eigenvectors (columns)
  double theta1 = 0.0;
  double theta2 = 0.0;
  double delta() const { return (theta1 - theta2) / 2.0; }
  double theta_bar() const { return (theta1 + theta2) / 2.0; }
};

UnitaryDiagonalization diagonalize_2x2_unitary(const ComplexMatrix& u,
                                               double tol = 1e-8);

/// Principal square root: eigenphases in (-pi, pi] halved. sqrt(sigma_Z) is
/// therefore diag(1, i).
ComplexMatrix sqrt_unitary(const ComplexMatrix& u, double tol = 1e-8);

}  // namespace qcpaul

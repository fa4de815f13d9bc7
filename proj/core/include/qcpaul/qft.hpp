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

#include "qcpaul/circuit.hpp"

namespace qcpaul {

/// The two conventional orderings of the Hadamard / controlled-phase
/// ladder; the digits count V gates between consecutive H gates, read in
/// operator order.
enum class QftForm { OneTwoThree, ThreeTwoOne };

/// Wire label for bit position `index` (weight 2^index) in an nb-wire QFT
/// register. Wires are declared q{nb-1} ... q0, most significant first.
std::string qft_wire(std::size_t index);

WireList qft_wires(std::size_t nb);

/// Two-wire diagonal phase exp[i pi n(alpha) n(beta) / 2^|alpha-beta|],
/// stored as diag(1, e^{i pi / 2^|a-b|}) on wire beta controlled by
/// n(alpha). This dot-dot meaning is local to the QFT construction; the
/// plain dot-dot everywhere else is controlled-Z.
CircuitElement v_gate(std::size_t alpha, std::size_t beta);

/// The full transform over wires q{nb-1}..q0. The bit-reversal network acts
/// first; each Hadamard is then dressed with its V ladder in the chosen
/// form. Both forms evaluate to dft_matrix(nb).
Circuit build_qft(std::size_t nb, QftForm form);

/// Reference matrix: entry (y, x) = exp(i 2 pi x y / N) / sqrt(N), N = 2^nb.
ComplexMatrix dft_matrix(std::size_t nb);

/// floor(nb/2) disjoint exchangers realizing |x_{nb-1}..x_0> ->
/// |x_0..x_{nb-1}>; empty for nb = 1.
Circuit bit_reversal_circuit(std::size_t nb);

/// Matrix element <y|U_FT|x> computed as a product of one local factor per
/// wire: the k-th factor is <y_k| H . diag(1, e^{i pi sum_{j<k} y_j/2^{k-j}})
/// |x_{nb-1-k}>. Bit vectors are indexed by weight: x_bits[k] = x_k.
Complex qft_matrix_element(const std::vector<int>& x_bits,
                           const std::vector<int>& y_bits);

}  // namespace qcpaul

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

#include "qcpaul/qft.hpp"

#include <cmath>

namespace qcpaul {

namespace {
constexpr std::size_t kMaxQftBits = 8;

void check_nb(std::size_t nb) {
  if (nb == 0 || nb > kMaxQftBits)
    throw Error("qft size must be between 1 and " +
                std::to_string(kMaxQftBits));
}
}  // namespace

std::string qft_wire(std::size_t index) { return "q" + std::to_string(index); }

WireList qft_wires(std::size_t nb) {
  WireList ws;
  for (std::size_t i = nb; i-- > 0;) ws.push_back(qft_wire(i));
  return ws;
}

CircuitElement v_gate(std::size_t alpha, std::size_t beta) {
  if (alpha == beta) throw Error("v_gate needs two distinct wires");
  const std::size_t d = alpha > beta ? alpha - beta : beta - alpha;
  const double phase = M_PI / static_cast<double>(std::size_t{1} << d);
  GateElement g;
  g.name = "MAT2";
  g.matrix = ComplexMatrix(2, 2, {1, 0, 0, std::polar(1.0, phase)});
  g.targets = {qft_wire(beta)};
  g.controls = {ControlSpec::n(qft_wire(alpha))};
  return g;
}

Circuit bit_reversal_circuit(std::size_t nb) {
  check_nb(nb);
  Circuit c(qft_wires(nb));
  for (std::size_t i = 0; i < nb / 2; ++i)
    c.add(make_gate("E", {qft_wire(nb - 1 - i), qft_wire(i)}));
  return c;
}

Circuit build_qft(std::size_t nb, QftForm form) {
  check_nb(nb);
  Circuit c = bit_reversal_circuit(nb);
  if (form == QftForm::OneTwoThree) {
    for (std::size_t k = 0; k < nb; ++k) {
      c.add(make_gate("H", {qft_wire(k)}));
      for (std::size_t j = k + 1; j < nb; ++j) c.add(v_gate(j, k));
    }
  } else {
    // Each V group rides ahead of its own wire's Hadamard instead.
    for (std::size_t j = 0; j < nb; ++j) {
      for (std::size_t i = 0; i < j; ++i) c.add(v_gate(j, i));
      c.add(make_gate("H", {qft_wire(j)}));
    }
  }
  return c;
}

ComplexMatrix dft_matrix(std::size_t nb) {
  check_nb(nb);
  const std::size_t dim = std::size_t{1} << nb;
  const double norm = 1.0 / std::sqrt(static_cast<double>(dim));
  ComplexMatrix out(dim, dim);
  for (std::size_t y = 0; y < dim; ++y)
    for (std::size_t x = 0; x < dim; ++x)
      out(y, x) =
          std::polar(norm, 2.0 * M_PI * static_cast<double>((x * y) % dim) /
                               static_cast<double>(dim));
  return out;
}

Complex qft_matrix_element(const std::vector<int>& x_bits,
                           const std::vector<int>& y_bits) {
  if (x_bits.size() != y_bits.size())
    throw Error("bit vectors must have equal length");
  const std::size_t nb = x_bits.size();
  check_nb(nb);
  Complex prod(1.0, 0.0);
  for (std::size_t k = 0; k < nb; ++k) {
    const int xin = x_bits[nb - 1 - k];
    double accum = 0.0;
    for (std::size_t j = 0; j < k; ++j)
      accum += static_cast<double>(y_bits[j]) /
               static_cast<double>(std::size_t{1} << (k - j));
    // <y_k| H diag(1, e^{i pi accum}) |xin>
    Complex amp = std::polar(1.0 / std::sqrt(2.0), M_PI * accum * xin);
    if (y_bits[k] == 1 && xin == 1) amp = -amp;
    prod *= amp;
  }
  return prod;
}

}  // namespace qcpaul

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

#include "qcpaul/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace qcpaul {

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, Complex(0.0, 0.0)) {
  if (rows == 0 || cols == 0) throw Error("matrix dimensions must be positive");
}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols,
                             std::vector<Complex> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (rows == 0 || cols == 0) throw Error("matrix dimensions must be positive");
  if (entries_.size() != rows * cols)
    throw Error("entry count does not match matrix dimensions");
  check_finite();
}

void ComplexMatrix::check_finite() const {
  for (const Complex& z : entries_) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
      throw Error("non-finite matrix entry");
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::zero(std::size_t rows, std::size_t cols) {
  return ComplexMatrix(rows, cols);
}

ComplexMatrix ComplexMatrix::ket(Complex a0, Complex a1) {
  return ComplexMatrix(2, 1, {a0, a1});
}

ComplexMatrix ComplexMatrix::bra(Complex a0, Complex a1) {
  return ComplexMatrix(1, 2, {a0, a1});
}

ComplexMatrix ComplexMatrix::operator*(const ComplexMatrix& rhs) const {
  if (cols_ != rhs.rows_)
    throw Error("matrix product dimension mismatch: " + std::to_string(rows_) +
                "x" + std::to_string(cols_) + " * " +
                std::to_string(rhs.rows_) + "x" + std::to_string(rhs.cols_));
  ComplexMatrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Complex aik = entries_[i * cols_ + k];
      if (aik == Complex(0.0, 0.0)) continue;
      const Complex* rrow = &rhs.entries_[k * rhs.cols_];
      Complex* orow = &out.entries_[i * rhs.cols_];
      for (std::size_t j = 0; j < rhs.cols_; ++j) orow[j] += aik * rrow[j];
    }
  }
  return out;
}

ComplexMatrix ComplexMatrix::operator*(Complex scalar) const {
  ComplexMatrix out = *this;
  for (Complex& z : out.entries_) z *= scalar;
  return out;
}

ComplexMatrix ComplexMatrix::operator+(const ComplexMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw Error("matrix sum dimension mismatch");
  ComplexMatrix out = *this;
  for (std::size_t i = 0; i < entries_.size(); ++i)
    out.entries_[i] += rhs.entries_[i];
  return out;
}

ComplexMatrix ComplexMatrix::operator-(const ComplexMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw Error("matrix difference dimension mismatch");
  ComplexMatrix out = *this;
  for (std::size_t i = 0; i < entries_.size(); ++i)
    out.entries_[i] -= rhs.entries_[i];
  return out;
}

ComplexMatrix ComplexMatrix::dagger() const {
  ComplexMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      out(j, i) = std::conj((*this)(i, j));
  return out;
}

ComplexMatrix ComplexMatrix::transpose() const {
  ComplexMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

ComplexMatrix ComplexMatrix::conjugate() const {
  ComplexMatrix out = *this;
  for (Complex& z : out.entries_) z = std::conj(z);
  return out;
}

double ComplexMatrix::max_abs() const {
  double m = 0.0;
  for (const Complex& z : entries_) m = std::max(m, std::abs(z));
  return m;
}

bool ComplexMatrix::is_unitary(double tol) const {
  if (rows_ != cols_) return false;
  return max_abs_diff(dagger() * (*this), identity(rows_)) <= tol;
}

bool ComplexMatrix::is_idempotent(double tol) const {
  if (rows_ != cols_) return false;
  return max_abs_diff((*this) * (*this), *this) <= tol;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i1 = 0; i1 < a.rows(); ++i1)
    for (std::size_t j1 = 0; j1 < a.cols(); ++j1) {
      const Complex v = a(i1, j1);
      if (v == Complex(0.0, 0.0)) continue;
      for (std::size_t i2 = 0; i2 < b.rows(); ++i2)
        for (std::size_t j2 = 0; j2 < b.cols(); ++j2)
          out(i1 * b.rows() + i2, j1 * b.cols() + j2) = v * b(i2, j2);
    }
  return out;
}

ComplexMatrix embed(const ComplexMatrix& op,
                    const std::vector<std::size_t>& target_positions,
                    std::size_t n_wires) {
  if (n_wires > kMaxWires)
    throw Error("register exceeds the " + std::to_string(kMaxWires) +
                "-wire guard");
  const std::size_t k = target_positions.size();
  const std::size_t dim_op = std::size_t{1} << k;
  if (op.rows() != dim_op || op.cols() != dim_op)
    throw Error("embedded operator must be 2^k x 2^k for k targets");
  for (std::size_t p : target_positions)
    if (p >= n_wires) throw Error("target position out of range");

  const std::size_t dim = std::size_t{1} << n_wires;
  // Bit of register position p (p = 0 is most significant) inside a basis
  // index: (index >> (n-1-p)) & 1.
  std::vector<std::size_t> shift(k);
  for (std::size_t t = 0; t < k; ++t)
    shift[t] = n_wires - 1 - target_positions[t];

  ComplexMatrix out(dim, dim);
  for (std::size_t col = 0; col < dim; ++col) {
    std::size_t local_in = 0;
    for (std::size_t t = 0; t < k; ++t)
      local_in = (local_in << 1) | ((col >> shift[t]) & 1u);
    std::size_t cleared = col;
    for (std::size_t t = 0; t < k; ++t)
      cleared &= ~(std::size_t{1} << shift[t]);
    for (std::size_t local_out = 0; local_out < dim_op; ++local_out) {
      const Complex v = op(local_out, local_in);
      if (v == Complex(0.0, 0.0)) continue;
      std::size_t row = cleared;
      for (std::size_t t = 0; t < k; ++t)
        row |= ((local_out >> (k - 1 - t)) & 1u) << shift[t];
      out(row, col) = v;
    }
  }
  return out;
}

ComplexMatrix embed(const ComplexMatrix& op, const WireList& targets,
                    const WireList& all_wires) {
  std::vector<std::size_t> positions;
  positions.reserve(targets.size());
  for (const std::string& t : targets) {
    auto it = std::find(all_wires.begin(), all_wires.end(), t);
    if (it == all_wires.end()) throw Error("target wire '" + t + "' not in register");
    positions.push_back(static_cast<std::size_t>(it - all_wires.begin()));
  }
  return embed(op, positions, all_wires.size());
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw Error("comparison dimension mismatch: " + std::to_string(a.rows()) +
                "x" + std::to_string(a.cols()) + " vs " +
                std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    m = std::max(m, std::abs(a.entries()[i] - b.entries()[i]));
  return m;
}

bool approx_equal(const ComplexMatrix& a, const ComplexMatrix& b, double tol) {
  if (tol < 0) throw Error("tolerance must be nonnegative");
  return max_abs_diff(a, b) <= tol;
}

std::optional<Complex> equal_up_to_phase(const ComplexMatrix& a,
                                         const ComplexMatrix& b, double tol) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw Error("comparison dimension mismatch");
  std::size_t imax = 0;
  double best = 0.0;
  for (std::size_t i = 0; i < b.size(); ++i) {
    const double m = std::abs(b.entries()[i]);
    if (m > best) {
      best = m;
      imax = i;
    }
  }
  if (best == 0.0) {
    if (a.max_abs() <= tol) return Complex(1.0, 0.0);
    return std::nullopt;
  }
  Complex lambda = a.entries()[imax] / b.entries()[imax];
  const double mod = std::abs(lambda);
  if (mod == 0.0) return std::nullopt;
  lambda /= mod;  // candidate is unit-modulus by construction
  if (approx_equal(a, b * lambda, tol)) return lambda;
  return std::nullopt;
}

std::string to_string(const ComplexMatrix& m) {
  std::ostringstream os;
  os.precision(6);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i == 0 ? "[" : " ");
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Complex z = m(i, j);
      os << "(" << z.real() << (z.imag() < 0 ? "" : "+") << z.imag() << "i)";
      if (j + 1 < m.cols()) os << " ";
    }
    os << (i + 1 == m.rows() ? "]" : "\n");
  }
  return os.str();
}

}  // namespace qcpaul

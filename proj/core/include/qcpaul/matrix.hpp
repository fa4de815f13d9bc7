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

#include <complex>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qcpaul {

using Complex = std::complex<double>;

/// Default comparison tolerance used throughout the library.
inline constexpr double kDefaultTol = 1e-10;

/// Hard cap on register width. Everything here is dense, so matrices grow
/// as 4^n; the identities never need more than a handful of wires.
inline constexpr std::size_t kMaxWires = 12;

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Ordered list of distinct wire labels. The first label is the most
/// significant basis bit, so |01> on wires (a, b) is the column (0,1,0,0)^T.
using WireList = std::vector<std::string>;

/// Dense complex matrix with explicit row/column dimensions, row-major.
/// Bras and kets make non-square maps, so no square assumption anywhere.
class ComplexMatrix {
 public:
  ComplexMatrix() : rows_(0), cols_(0) {}
  ComplexMatrix(std::size_t rows, std::size_t cols);
  ComplexMatrix(std::size_t rows, std::size_t cols,
                std::vector<Complex> entries);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix zero(std::size_t rows, std::size_t cols);
  /// 2x1 column from two amplitudes.
  static ComplexMatrix ket(Complex a0, Complex a1);
  /// 1x2 row covector from two amplitudes.
  static ComplexMatrix bra(Complex a0, Complex a1);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  Complex& operator()(std::size_t i, std::size_t j) {
    return entries_[i * cols_ + j];
  }
  const Complex& operator()(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }
  const std::vector<Complex>& entries() const { return entries_; }

  ComplexMatrix operator*(const ComplexMatrix& rhs) const;
  ComplexMatrix operator*(Complex scalar) const;
  ComplexMatrix operator+(const ComplexMatrix& rhs) const;
  ComplexMatrix operator-(const ComplexMatrix& rhs) const;
  bool operator==(const ComplexMatrix& rhs) const = default;

  ComplexMatrix dagger() const;
  ComplexMatrix transpose() const;
  ComplexMatrix conjugate() const;

  double max_abs() const;
  bool is_unitary(double tol = 1e-8) const;
  bool is_idempotent(double tol = 1e-8) const;

  /// Throws if any entry is NaN or infinite.
  void check_finite() const;

 private:
  std::size_t rows_, cols_;
  std::vector<Complex> entries_;
};

inline ComplexMatrix operator*(Complex scalar, const ComplexMatrix& m) {
  return m * scalar;
}

/// Kronecker product; the left factor carries the more significant bits.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Lifts `op` (2^k x 2^k over `targets`, first target = most significant
/// local bit) to the full register described by `all_wires`, acting as the
/// identity elsewhere. Non-adjacent or reordered targets are handled by
/// permuting basis-index bits directly, not by inserting swap gates.
ComplexMatrix embed(const ComplexMatrix& op, const WireList& targets,
                    const WireList& all_wires);

/// Index-based variant: `target_positions[i]` is the register position of
/// the op's i-th wire, positions counted from the most significant bit.
ComplexMatrix embed(const ComplexMatrix& op,
                    const std::vector<std::size_t>& target_positions,
                    std::size_t n_wires);

/// Max-entry absolute difference. Dimension mismatch is an error.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

bool approx_equal(const ComplexMatrix& a, const ComplexMatrix& b,
                  double tol = kDefaultTol);

/// If a == lambda * b for some unit-modulus lambda (within tol), returns
/// lambda, computed from the largest-magnitude entry of b. Exact-scalar
/// comparison is the library default; this exists for exploratory use.
std::optional<Complex> equal_up_to_phase(const ComplexMatrix& a,
                                         const ComplexMatrix& b,
                                         double tol = kDefaultTol);

std::string to_string(const ComplexMatrix& m);

}  // namespace qcpaul

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
#include <cstdint>
#include <string_view>

#include "qcpaul/gates.hpp"
#include "qcpaul/matrix.hpp"

namespace qcpaul {

/// Default seed for every reproducible draw in the library.
inline constexpr std::uint64_t kDefaultSeed = 0xC0FFEE;

/// SplitMix64. Hand-rolled so draws are identical on every platform and
/// standard library; std::uniform_real_distribution makes no such promise.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, 1).
  double uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  std::size_t below(std::size_t n) {
    return static_cast<std::size_t>(next_u64() % n);
  }

 private:
  std::uint64_t state_;
};

/// FNV-1a, used to derive substream seeds from names.
inline std::uint64_t hash_name(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (const char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ull;
  }
  return h;
}

inline Rng seeded_rng(std::uint64_t seed, std::string_view stream) {
  return Rng(seed ^ hash_name(stream));
}

/// Random 2x2 unitary built only from catalog primitives:
/// rotation(theta_vec) . diag(e^{i phi}, 1).
inline ComplexMatrix random_unitary(Rng& rng) {
  const std::array<double, 3> t = {rng.uniform(-2.0, 2.0),
                                   rng.uniform(-2.0, 2.0),
                                   rng.uniform(-2.0, 2.0)};
  const double phi = rng.uniform(0.0, 2.0 * 3.14159265358979323846);
  const ComplexMatrix diag(2, 2, {std::polar(1.0, phi), 0, 0, 1});
  return rotation(t) * diag;
}

/// Random normalized single-qubit state.
inline ComplexMatrix random_state(Rng& rng) {
  const ComplexMatrix u = random_unitary(rng);
  return ComplexMatrix::ket(u(0, 0), u(1, 0));
}

}  // namespace qcpaul

// Copyright 2026 The qcliff Authors
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

#include <cstdint>
#include <optional>
#include <vector>

namespace qcliff {

using Int = std::int64_t;

/// Largest phase modulus accepted; keeps D * D inside a signed 64-bit word.
inline constexpr Int kMaxModulus = 3'037'000'499;

/**
 * The Hilbert-space dimension d of a qudit together with the phase modulus
 * D, which is d for odd d and 2d for even d. Symplectic matrices and gate
 * exponents live mod D; Pauli exponents live mod d.
 */
class Dimension {
 public:
  explicit Dimension(Int d);

  Int d() const { return d_; }
  Int D() const { return D_; }
  bool even() const { return d_ % 2 == 0; }

  friend bool operator==(const Dimension&, const Dimension&) = default;

 private:
  Int d_;
  Int D_;
};

/// Canonical representative of a in [0, m).
inline Int mod(Int a, Int m) {
  Int r = a % m;
  return r < 0 ? r + m : r;
}

/// (a * b) mod m for a, b already reduced into [0, m) with m <= kMaxModulus.
Int mul_mod(Int a, Int b, Int m);

/// gcd on nonnegative integers with gcd0(0, m) = gcd0(m, 0) = m and gcd0(0, 0) = 0.
Int gcd0(Int a, Int b);

/**
 * Quotients of the Euclidean remainder chain a = m1*b + c1, b = m2*c1 + c2, ...
 * Returns an empty list when either input is zero. Throws ContractViolation
 * for (0, 0) or negative inputs.
 */
std::vector<Int> euclid_steps(Int a, Int b);

/// Inverse of a modulo m (m >= 2) in [0, m), or nullopt when gcd(a mod m, m) != 1.
std::optional<Int> mod_inverse(Int a, Int m);

inline bool is_unit(Int a, Int m) { return gcd0(mod(a, m), m) == 1; }

}  // namespace qcliff

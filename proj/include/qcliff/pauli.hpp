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

#include <cstddef>
#include <span>
#include <vector>

#include "qcliff/modring.hpp"

namespace qcliff {

/**
 * Phase-free n-qudit Pauli operator X^a Z^b = X^{a_1}Z^{b_1} (x) ... (x) X^{a_n}Z^{b_n},
 * i.e. one class of the Pauli group modulo its centre. Exponents are stored
 * reduced into [0, d). The flat vector layout is (a_1..a_n, b_1..b_n).
 */
class PauliWord {
 public:
  PauliWord(Dimension dim, std::vector<Int> xexp, std::vector<Int> zexp);

  static PauliWord identity(Dimension dim, std::size_t n);
  static PauliWord x(Dimension dim, std::size_t n, std::size_t qudit, Int power = 1);
  static PauliWord z(Dimension dim, std::size_t n, std::size_t qudit, Int power = 1);
  /// Builds a word from a flat 2n-vector of exponents (reduced mod d).
  static PauliWord from_vector(Dimension dim, std::span<const Int> v);

  std::size_t n() const { return xexp_.size(); }
  const Dimension& dim() const { return dim_; }
  std::span<const Int> xexp() const { return xexp_; }
  std::span<const Int> zexp() const { return zexp_; }
  std::vector<Int> vector() const;
  bool is_identity() const;

  /// Group product in the quotient: componentwise exponent addition mod d.
  PauliWord operator+(const PauliWord& other) const;
  /// r-th power: exponents scaled by r mod d.
  PauliWord scaled(Int r) const;

  friend bool operator==(const PauliWord&, const PauliWord&) = default;

 private:
  Dimension dim_;
  std::vector<Int> xexp_;
  std::vector<Int> zexp_;
};

/// Symplectic inner product sum_i (a_i b'_i - a'_i b_i) mod d.
Int sip(const PauliWord& u, const PauliWord& v);

/// True iff operator representatives of u and v commute exactly.
bool commutes(const PauliWord& u, const PauliWord& v);

/// Same value as sip(), evaluated as (a, b) S (a', b')^T with the explicit block matrix S.
Int sip_matrix_form(const PauliWord& u, const PauliWord& v);

}  // namespace qcliff

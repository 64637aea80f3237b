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
#include <initializer_list>
#include <vector>

#include "qcliff/gates.hpp"
#include "qcliff/modring.hpp"
#include "qcliff/pauli.hpp"

namespace qcliff {

/// Dense square matrix over Z_D, entries kept in [0, D), row-major.
class ModMatrix {
 public:
  ModMatrix(Dimension dim, std::size_t side);

  static ModMatrix identity(Dimension dim, std::size_t side);
  /// Entries are reduced mod D. Throws MalformedMatrix unless rows form a square.
  static ModMatrix from_rows(Dimension dim, const std::vector<std::vector<Int>>& rows);
  static ModMatrix from_rows(Dimension dim, std::initializer_list<std::initializer_list<Int>> rows);

  std::size_t side() const { return side_; }
  const Dimension& dim() const { return dim_; }
  Int modulus() const { return dim_.D(); }

  Int operator()(std::size_t r, std::size_t c) const { return data_[r * side_ + c]; }
  void set(std::size_t r, std::size_t c, Int value) { data_[r * side_ + c] = mod(value, dim_.D()); }

  ModMatrix transpose() const;
  bool is_identity() const;

  /// Row r <- row r + factor * row src, mod D.
  void add_row_multiple(std::size_t r, std::size_t src, Int factor);
  /// Column c <- column c + factor * column src, mod D.
  void add_col_multiple(std::size_t c, std::size_t src, Int factor);
  void scale_row(std::size_t r, Int factor);

  friend ModMatrix operator*(const ModMatrix& a, const ModMatrix& b);
  friend bool operator==(const ModMatrix&, const ModMatrix&) = default;

 private:
  Dimension dim_;
  std::size_t side_;
  std::vector<Int> data_;
};

/// The block matrix S = [[0, I_n], [-I_n, 0]] over Z_D.
ModMatrix symplectic_form(Dimension dim, std::size_t n);

/// N^T S N == S mod D. Throws MalformedMatrix when the side is odd or zero.
bool is_symplectic(const ModMatrix& m);

/**
 * A 2n x 2n matrix over Z_D that preserves the symplectic form: the
 * classical representation of an n-qudit Clifford operator up to phase.
 * Construction from an arbitrary ModMatrix is checked.
 */
class SymplecticMatrix {
 public:
  /// Throws ContractViolation when m is not symplectic.
  explicit SymplecticMatrix(ModMatrix m);

  static SymplecticMatrix identity(Dimension dim, std::size_t n);

  std::size_t n() const { return m_.side() / 2; }
  const Dimension& dim() const { return m_.dim(); }
  const ModMatrix& matrix() const { return m_; }
  Int operator()(std::size_t r, std::size_t c) const { return m_(r, c); }

  friend bool operator==(const SymplecticMatrix&, const SymplecticMatrix&) = default;

 private:
  struct Trusted {};
  SymplecticMatrix(ModMatrix m, Trusted) : m_(std::move(m)) {}

  friend SymplecticMatrix inverse(const SymplecticMatrix&);
  friend SymplecticMatrix compose(const SymplecticMatrix&, const SymplecticMatrix&);
  friend SymplecticMatrix gate_matrix(const Gate&, std::size_t, Dimension);
  friend SymplecticMatrix sequence_matrix(const GateSequence&);

  ModMatrix m_;
};

/// -S M^T S mod D.
SymplecticMatrix inverse(const SymplecticMatrix& m);

/// Matrix product a * b mod D.
SymplecticMatrix compose(const SymplecticMatrix& a, const SymplecticMatrix& b);

/**
 * Embedded classical matrix of one gate on n qudits:
 *   Fourier(i)   R on qudit i
 *   Phase(i, e)  [[I, 0], [e E_ii, I]]
 *   Sum(c, t, e) [[I + e E_tc, 0], [0, I - e E_ct]]
 */
SymplecticMatrix gate_matrix(const Gate& g, std::size_t n, Dimension dim);

/// Product M_k ... M_1 of the program's gate matrices; identity for an empty program.
SymplecticMatrix sequence_matrix(const GateSequence& seq);

/// m <- G m, done as row operations. Cross-checked against gate_matrix in tests.
void left_apply(const Gate& g, ModMatrix& m);
/// m <- m G, done as column operations.
void right_apply(ModMatrix& m, const Gate& g);
/// v <- G v for a flat 2n-vector, arithmetic mod `modulus` (d for words, D for columns).
void left_apply(const Gate& g, std::vector<Int>& v, Int modulus);

/// Phase-free conjugation action: exponent vector M * vec(w), reduced mod d.
PauliWord apply_to_word(const SymplecticMatrix& m, const PauliWord& w);

}  // namespace qcliff

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
#include <variant>
#include <vector>

#include "qcliff/modring.hpp"

namespace qcliff {

/// Discrete quantum Fourier transform on one qudit. Classical matrix R = [[0, -1], [1, 0]].
struct Fourier {
  std::size_t qudit;
  friend bool operator==(const Fourier&, const Fourier&) = default;
};

/// Phase-shift raised to `exponent` (mod D). Classical matrix P^e = [[1, 0], [e, 1]].
struct Phase {
  std::size_t qudit;
  Int exponent;
  friend bool operator==(const Phase&, const Phase&) = default;
};

/// SUM gate |i>|j> -> |i>|i+j> raised to `exponent` (mod D).
struct Sum {
  std::size_t control;
  std::size_t target;
  Int exponent;
  friend bool operator==(const Sum&, const Sum&) = default;
};

using Gate = std::variant<Fourier, Phase, Sum>;

/**
 * An ordered gate program on n qudits of a fixed dimension. Gates are listed
 * in application order: the first element acts first, so the program's
 * classical matrix is M_k ... M_2 M_1.
 */
class GateSequence {
 public:
  GateSequence(std::size_t n, Dimension dim);

  /// Validates indices and reduces exponents into [0, D). Throws IndexError.
  void push_back(Gate g);
  void append(const GateSequence& other);

  /// Program undoing this one: reversed order, every gate inverted (R^{-1} = R^3).
  GateSequence inverse() const;

  /**
   * Re-targets the program onto `new_n` qudits, sending qudit q to qudit_map[q].
   * The map must be injective with values < new_n.
   */
  GateSequence relabeled(std::span<const std::size_t> qudit_map, std::size_t new_n) const;

  /**
   * Peephole cleanup that preserves the program's matrix and unitary exactly:
   * merges adjacent powers of the same gate, removes zero exponents and
   * cancels runs of four Fourier gates on one qudit.
   */
  GateSequence simplified() const;

  std::size_t n() const { return n_; }
  const Dimension& dim() const { return dim_; }
  std::size_t size() const { return gates_.size(); }
  bool empty() const { return gates_.empty(); }
  const Gate& operator[](std::size_t i) const { return gates_[i]; }
  auto begin() const { return gates_.begin(); }
  auto end() const { return gates_.end(); }
  const std::vector<Gate>& gates() const { return gates_; }

  friend bool operator==(const GateSequence&, const GateSequence&) = default;

 private:
  std::size_t n_;
  Dimension dim_;
  std::vector<Gate> gates_;
};

}  // namespace qcliff

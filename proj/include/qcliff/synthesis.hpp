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
#include <optional>

#include "qcliff/gates.hpp"
#include "qcliff/modring.hpp"
#include "qcliff/pauli.hpp"
#include "qcliff/symplectic.hpp"

namespace qcliff {

/// A gate program that maps a word (or vector) to Z^gcd on the last qudit, plus that gcd.
struct PegResult {
  GateSequence program;
  Int gcd;
};

/// A program together with the matrix it realises.
struct SynthesisResult {
  GateSequence program;
  SymplecticMatrix target;
  std::size_t gate_count;
};

/**
 * Single-qudit Euclid reduction. The returned program maps the vector (a, b)
 * to (0, gcd0(a, b)) mod d using R P^m R^3 (subtract from the X exponent) and
 * P^-m (subtract from the Z exponent). Throws DegenerateWord for (0, 0).
 */
PegResult peg_reduce(Int a, Int b, Dimension dim);

/**
 * Writes a 2x2 symplectic matrix as a Fourier/Phase program. A unit in the
 * top-right entry q gives P^m R P^q R P^n directly; a unit elsewhere is moved
 * there with R; otherwise the second column is Euclid-reduced until a unit
 * appears.
 */
GateSequence decompose_single(const SymplecticMatrix& m);

/// Program for diag(k^{-1}, k), i.e. Z -> Z^k. Throws ContractViolation unless k is a unit mod D.
GateSequence scale_sequence(Int k, Dimension dim);

enum class Slot { First, Second };

/**
 * Two-qudit, Sum-only reduction of Z^a (x) Z^b to Z^g on the chosen slot,
 * g = gcd0(a, b). Throws DegenerateWord for (0, 0).
 */
GateSequence sum_peg(Int a, Int b, Dimension dim, Slot slot);

/// Maps w to Z^k on the last qudit, k = gcd of every exponent. Throws DegenerateWord for the identity.
PegResult generalized_peg(const PauliWord& w);

/// A program conjugating p to q, or nullopt when no Clifford maps p to q.
std::optional<GateSequence> transport(const PauliWord& p, const PauliWord& q);

/// Fourier/Phase/Sum program whose classical matrix equals m exactly.
GateSequence decompose(const SymplecticMatrix& m);

/// decompose() plus a recomposition check; throws InvariantViolation on mismatch.
SynthesisResult synthesize(const SymplecticMatrix& m);

/// The fixed nine-gate SWAP program on qudits i and j built from Sum and Fourier only.
GateSequence swap_sequence(std::size_t i, std::size_t j, std::size_t n, Dimension dim);

}  // namespace qcliff

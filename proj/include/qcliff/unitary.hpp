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

#include <complex>
#include <cstddef>
#include <optional>
#include <utility>

#include <Eigen/Dense>

#include "qcliff/gates.hpp"
#include "qcliff/modring.hpp"
#include "qcliff/pauli.hpp"
#include "qcliff/symplectic.hpp"

namespace qcliff {

using Complex = std::complex<double>;

/// Default tolerance for the dense oracle.
inline constexpr double kDefaultTolerance = 1e-9;

/// Oracle paths refuse operators on more than this many basis states.
inline constexpr std::size_t kMaxOracleSide = 256;

/**
 * Dense d^n x d^n complex operator. Basis index i encodes the qudit values
 * with qudit 0 as the most significant digit.
 */
struct DenseOperator {
  Dimension dim;
  std::size_t n;
  Eigen::MatrixXcd data;

  std::size_t side() const { return static_cast<std::size_t>(data.rows()); }
};

/// Shift X|x> = |x+1> and clock Z|z> = w^z |z> on one qudit, w = exp(2 pi i / d).
std::pair<DenseOperator, DenseOperator> pauli_unitaries(Dimension dim);

/**
 * Unitary of one gate embedded on n qudits:
 *   Fourier  |j> -> d^{-1/2} sum_k w^{jk} |k>
 *   Phase    |j> -> w^{j(j-1)/2} |j> (odd d), w^{j^2/2} |j> (even d), raised to the exponent
 *   Sum      |i>|j> -> |i>|i+j>, raised to the exponent
 * Throws ScaleLimit above max_side basis states.
 */
DenseOperator gate_unitary(const Gate& g, std::size_t n, Dimension dim,
                           std::size_t max_side = kMaxOracleSide);

/// Tensor product of X^{a_i} Z^{b_i} factors.
DenseOperator word_unitary(const PauliWord& w);

/// Unitary of a whole program: U_k ... U_1.
DenseOperator program_unitary(const GateSequence& seq);

/// |tr(A^dagger B)| >= side * (1 - tol) for unitary A, B.
bool equal_up_to_phase(const DenseOperator& a, const DenseOperator& b, double tol);

/// The scalar c with a = c * b, if a and b agree up to phase.
std::optional<Complex> relative_phase(const DenseOperator& a, const DenseOperator& b, double tol);

/// U A U^dagger.
DenseOperator conjugate(const DenseOperator& u, const DenseOperator& a);

/**
 * Checks that the program's unitary conjugates every single-qudit generator
 * X_i, Z_i to (a phase times) the word predicted by the classical matrix m.
 */
bool check_program(const GateSequence& seq, const SymplecticMatrix& m, double tol);

}  // namespace qcliff

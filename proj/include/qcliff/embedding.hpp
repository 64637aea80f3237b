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

#include <optional>
#include <string_view>

#include <Eigen/Dense>

#include "qcliff/modring.hpp"
#include "qcliff/pauli.hpp"
#include "qcliff/symplectic.hpp"
#include "qcliff/unitary.hpp"

namespace qcliff {

/// Largest ambient dimension for which the feasibility search runs.
inline constexpr Int kMaxEmbeddingDimension = 1024;

/**
 * GKP-style embedding of an n-level qunit into a qudit of dimension
 * d = n * r_x * r_z, with logical X_L = X^{r_x}, Z_L = Z^{r_z} and
 * stabilizer generated by X^{n r_x} and Z^{n r_z}.
 */
class Embedding {
 public:
  Embedding(Int n, Int r_x, Int r_z);

  Int n() const { return n_; }
  Int r_x() const { return r_x_; }
  Int r_z() const { return r_z_; }
  const Dimension& ambient() const { return ambient_; }
  bool symmetric() const { return r_x_ == r_z_; }

  /// Shifts X^a Z^b with |a| < r_x/2 and |b| < r_z/2 are correctable. Metadata only.
  Int correctable_x_shift() const { return (r_x_ - 1) / 2; }
  Int correctable_z_shift() const { return (r_z_ - 1) / 2; }

 private:
  Int n_;
  Int r_x_;
  Int r_z_;
  Dimension ambient_;
};

enum class LogicalGate { QFT, PhaseShift, SUM };

std::string_view to_string(LogicalGate g);

/// (1/sqrt(r_z)) sum_i |(j + i n) r_x mod d>, for 0 <= j < n.
Eigen::VectorXcd logical_basis_state(const Embedding& e, Int j);

/**
 * True iff m sends each logical generator (X_L, Z_L on every qunit) to the
 * word required by the logical gate, up to the stabilizer lattice
 * (multiples of n r_x in X exponents, n r_z in Z exponents). Checked by
 * direct substitution.
 */
bool satisfies_logical_map(const Embedding& e, LogicalGate g, const SymplecticMatrix& m);

/**
 * Exhaustive search for a 2x2 symplectic matrix over Z_D realising the
 * logical QFT or Phase-shift. Solves each entry's congruence over all
 * lattice offsets mod d, lifts solutions to Z_D and keeps det = 1 mod D.
 * Returns a witness or nullopt. Throws ContractViolation for SUM.
 */
std::optional<SymplecticMatrix> logical_feasible_single(const Embedding& e, LogicalGate g);

/// The qudit SUM matrix, after checking it realises the logical SUM. Throws InvariantViolation otherwise.
std::optional<SymplecticMatrix> logical_feasible_sum(const Embedding& e);

/// Logical QFT and Phase-shift both realisable by qudit Cliffords.
bool is_symplectic_embedding(const Embedding& e);

/**
 * Whether the qudit operator u (one qudit for QFT/Phase-shift, two for SUM)
 * maps the code space to itself and acts on the logical basis as the n-level
 * gate of the same name, up to global phase.
 */
bool acts_as_logical(const Embedding& e, LogicalGate g, const DenseOperator& u, double tol);

/// acts_as_logical for the bare qudit gate (Fourier, Phase or SUM, exponent 1). Requires r_x == r_z.
bool logical_action_holds(const Embedding& e, LogicalGate g, double tol);

/// logical_action_holds for all three gates.
bool check_symmetric_logical_action(const Embedding& e, double tol);

/**
 * A Pauli word W such that u * W acts as the single-qunit logical gate, or
 * nullopt. Diagnostic for operators that are off by a Pauli frame.
 */
std::optional<PauliWord> logical_pauli_correction(const Embedding& e, LogicalGate g,
                                                  const DenseOperator& u, double tol);

}  // namespace qcliff

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

#include "qcliff/embedding.hpp"

#include <cmath>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "qcliff/errors.hpp"
#include "qcliff/gates.hpp"

namespace qcliff {

namespace {

Dimension ambient_of(Int n, Int r_x, Int r_z) {
  if (n < 2) throw DomainError("logical dimension must be at least 2");
  if (r_x < 1 || r_z < 1) throw DomainError("r_x and r_z must be positive");
  if (n > kMaxEmbeddingDimension / r_x / r_z) {
    throw ScaleLimit("embedding dimension exceeds " + std::to_string(kMaxEmbeddingDimension));
  }
  return Dimension(n * r_x * r_z);
}

/// (input word, required image) pairs for each logical generator.
std::vector<std::pair<PauliWord, PauliWord>> logical_map(const Embedding& e, LogicalGate g) {
  const Dimension dim = e.ambient();
  const Int rx = e.r_x(), rz = e.r_z();
  switch (g) {
    case LogicalGate::QFT:
      return {{PauliWord(dim, {rx}, {0}), PauliWord(dim, {0}, {rz})},
              {PauliWord(dim, {0}, {rz}), PauliWord(dim, {-rx}, {0})}};
    case LogicalGate::PhaseShift:
      return {{PauliWord(dim, {rx}, {0}), PauliWord(dim, {rx}, {rz})},
              {PauliWord(dim, {0}, {rz}), PauliWord(dim, {0}, {rz})}};
    case LogicalGate::SUM:
      return {{PauliWord(dim, {rx, 0}, {0, 0}), PauliWord(dim, {rx, rx}, {0, 0})},
              {PauliWord(dim, {0, rx}, {0, 0}), PauliWord(dim, {0, rx}, {0, 0})},
              {PauliWord(dim, {0, 0}, {rz, 0}), PauliWord(dim, {0, 0}, {rz, 0})},
              {PauliWord(dim, {0, 0}, {0, rz}), PauliWord(dim, {0, 0}, {-rz, rz})}};
  }
  throw ContractViolation("unknown logical gate");
}

/// All x in [0, d) with x * r = rhs (mod d).
std::vector<Int> solve_linear(Int r, Int rhs, Int d) {
  const Int rr = mod(r, d);
  const Int g = gcd0(rr, d);
  std::vector<Int> out;
  if (mod(rhs, d) % g != 0) return out;
  const Int step = d / g;
  Int x0 = 0;
  if (step > 1) x0 = mul_mod((mod(rhs, d) / g) % step, *mod_inverse(rr / g, step), step);
  for (Int k = 0; k < g; ++k) out.push_back(x0 + k * step);
  return out;
}

/**
 * Entry values v in Z_D with v * r = target + alpha * lattice (mod d) for
 * some alpha: every offset coset mod d is enumerated, then lifted to Z_D.
 */
std::vector<Int> entry_candidates(Int r, Int target, Int lattice, Dimension dim) {
  const Int d = dim.d();
  std::set<Int> residues;
  for (Int alpha = 0; alpha < d / lattice; ++alpha) {
    for (Int x : solve_linear(r, target + alpha * lattice, d)) residues.insert(x);
  }
  std::vector<Int> out;
  for (Int lift = 0; lift < dim.D(); lift += d)
    for (Int x : residues) out.push_back(x + lift);
  return out;
}

Eigen::MatrixXcd logical_basis(const Embedding& e) {
  Eigen::MatrixXcd b(e.ambient().d(), e.n());
  for (Int j = 0; j < e.n(); ++j) b.col(j) = logical_basis_state(e, j);
  return b;
}

Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

Gate qudit_gate(LogicalGate g) {
  switch (g) {
    case LogicalGate::QFT: return Fourier{0};
    case LogicalGate::PhaseShift: return Phase{0, 1};
    case LogicalGate::SUM: return Sum{0, 1, 1};
  }
  throw ContractViolation("unknown logical gate");
}

std::size_t arity(LogicalGate g) { return g == LogicalGate::SUM ? 2 : 1; }

/// Largest operator handled by the logical-action check (d^2 <= 1024 for SUM).
constexpr std::size_t kMaxLogicalSide = 1024;

}  // namespace

Embedding::Embedding(Int n, Int r_x, Int r_z)
    : n_(n), r_x_(r_x), r_z_(r_z), ambient_(ambient_of(n, r_x, r_z)) {}

std::string_view to_string(LogicalGate g) {
  switch (g) {
    case LogicalGate::QFT: return "QFT";
    case LogicalGate::PhaseShift: return "PhaseShift";
    case LogicalGate::SUM: return "SUM";
  }
  return "?";
}

Eigen::VectorXcd logical_basis_state(const Embedding& e, Int j) {
  if (j < 0 || j >= e.n()) throw IndexError("logical basis index out of range");
  const Int d = e.ambient().d();
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(d);
  const double amp = 1.0 / std::sqrt(static_cast<double>(e.r_z()));
  for (Int i = 0; i < e.r_z(); ++i) v(mod((j + i * e.n()) * e.r_x(), d)) += amp;
  return v;
}

bool satisfies_logical_map(const Embedding& e, LogicalGate g, const SymplecticMatrix& m) {
  if (m.dim() != e.ambient() || m.n() != arity(g)) {
    throw DimensionMismatch("matrix shape does not match the logical gate");
  }
  const Int x_lattice = e.n() * e.r_x();
  const Int z_lattice = e.n() * e.r_z();
  const Int d = e.ambient().d();
  for (const auto& [input, required] : logical_map(e, g)) {
    const PauliWord image = apply_to_word(m, input);
    for (std::size_t q = 0; q < image.n(); ++q) {
      if (mod(image.xexp()[q] - required.xexp()[q], d) % x_lattice != 0) return false;
      if (mod(image.zexp()[q] - required.zexp()[q], d) % z_lattice != 0) return false;
    }
  }
  return true;
}

std::optional<SymplecticMatrix> logical_feasible_single(const Embedding& e, LogicalGate g) {
  if (g == LogicalGate::SUM) throw ContractViolation("SUM is a two-qunit gate");
  const Dimension dim = e.ambient();
  const Int D = dim.D();
  const Int rx = e.r_x(), rz = e.r_z();
  const Int x_lattice = e.n() * rx, z_lattice = e.n() * rz;
  const auto targets = logical_map(e, g);
  const PauliWord& x_image = targets[0].second;
  const PauliWord& z_image = targets[1].second;

  // M = [[a, b], [c, s]]: M (rx, 0) = (a rx, c rx), M (0, rz) = (b rz, s rz).
  const auto as = entry_candidates(rx, x_image.xexp()[0], x_lattice, dim);
  const auto cs = entry_candidates(rx, x_image.zexp()[0], z_lattice, dim);
  const auto bs = entry_candidates(rz, z_image.xexp()[0], x_lattice, dim);
  const auto ss = entry_candidates(rz, z_image.zexp()[0], z_lattice, dim);

  std::unordered_map<Int, std::pair<Int, Int>> products;
  for (Int b : bs)
    for (Int c : cs) products.try_emplace(mul_mod(b, c, D), b, c);

  for (Int a : as) {
    for (Int s : ss) {
      const auto hit = products.find(mod(mul_mod(a, s, D) - 1, D));
      if (hit == products.end()) continue;
      const auto [b, c] = hit->second;
      SymplecticMatrix witness(ModMatrix::from_rows(dim, {{a, b}, {c, s}}));
      if (!satisfies_logical_map(e, g, witness)) {
        throw InvariantViolation("feasibility witness fails substitution check");
      }
      return witness;
    }
  }
  return std::nullopt;
}

std::optional<SymplecticMatrix> logical_feasible_sum(const Embedding& e) {
  SymplecticMatrix c = gate_matrix(Sum{0, 1, 1}, 2, e.ambient());
  if (!satisfies_logical_map(e, LogicalGate::SUM, c)) {
    throw InvariantViolation("qudit SUM does not realise the logical SUM");
  }
  return c;
}

bool is_symplectic_embedding(const Embedding& e) {
  return logical_feasible_single(e, LogicalGate::QFT).has_value() &&
         logical_feasible_single(e, LogicalGate::PhaseShift).has_value();
}

bool acts_as_logical(const Embedding& e, LogicalGate g, const DenseOperator& u, double tol) {
  const std::size_t k = arity(g);
  Eigen::MatrixXcd basis = logical_basis(e);
  if (k == 2) basis = kron(basis, basis);
  if (u.data.rows() != basis.rows()) throw DimensionMismatch("operator does not match the embedding");

  const Eigen::MatrixXcd image = u.data * basis;
  const Eigen::MatrixXcd action = basis.adjoint() * image;
  if ((image - basis * action).cwiseAbs().maxCoeff() > tol) return false;

  const Dimension logical(e.n());
  const DenseOperator expected = gate_unitary(qudit_gate(g), k, logical, kMaxLogicalSide);
  return equal_up_to_phase(DenseOperator{logical, k, action}, expected, tol);
}

bool logical_action_holds(const Embedding& e, LogicalGate g, double tol) {
  if (!e.symmetric()) throw ContractViolation("logical action check needs r_x == r_z");
  const DenseOperator u = gate_unitary(qudit_gate(g), arity(g), e.ambient(), kMaxLogicalSide);
  return acts_as_logical(e, g, u, tol);
}

bool check_symmetric_logical_action(const Embedding& e, double tol) {
  for (LogicalGate g : {LogicalGate::QFT, LogicalGate::PhaseShift, LogicalGate::SUM}) {
    if (!logical_action_holds(e, g, tol)) return false;
  }
  return true;
}

std::optional<PauliWord> logical_pauli_correction(const Embedding& e, LogicalGate g,
                                                  const DenseOperator& u, double tol) {
  if (g == LogicalGate::SUM) throw ContractViolation("Pauli correction search is single-qunit only");
  const Dimension dim = e.ambient();
  for (Int a = 0; a < dim.d(); ++a) {
    for (Int b = 0; b < dim.d(); ++b) {
      PauliWord w(dim, {a}, {b});
      const DenseOperator corrected{dim, 1, u.data * word_unitary(w).data};
      if (acts_as_logical(e, g, corrected, tol)) return w;
    }
  }
  return std::nullopt;
}

}  // namespace qcliff

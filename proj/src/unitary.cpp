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

#include "qcliff/unitary.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "qcliff/errors.hpp"

namespace qcliff {

namespace {

/// exp(2 pi i * num / den) with num reduced first so the angle stays small.
Complex root_of_unity(Int num, Int den) {
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(mod(num, den)) /
                       static_cast<double>(den);
  return std::polar(1.0, angle);
}

std::size_t checked_side(Dimension dim, std::size_t n, std::size_t max_side = kMaxOracleSide) {
  std::size_t side = 1;
  for (std::size_t i = 0; i < n; ++i) {
    side *= static_cast<std::size_t>(dim.d());
    if (side > max_side) {
      throw ScaleLimit("dense oracle limited to " + std::to_string(max_side) +
                       " basis states");
    }
  }
  return side;
}

std::vector<Int> digits(std::size_t index, std::size_t n, Int d) {
  std::vector<Int> out(n);
  for (std::size_t q = n; q-- > 0;) {
    out[q] = static_cast<Int>(index % static_cast<std::size_t>(d));
    index /= static_cast<std::size_t>(d);
  }
  return out;
}

std::size_t index_of(const std::vector<Int>& digits, Int d) {
  std::size_t index = 0;
  for (Int v : digits) index = index * static_cast<std::size_t>(d) + static_cast<std::size_t>(v);
  return index;
}

/// Numerator over D of the phase-gate angle on |j>: exponent * j(j-1)/2 (odd) or exponent * j^2/2 (even).
Int phase_numerator(Int j, Int exponent, Dimension dim) {
  const Int D = dim.D();
  const Int base = dim.even() ? mul_mod(j, j, D) : mod(j * (j - 1) / 2, D);
  return mul_mod(base, mod(exponent, D), D);
}

}  // namespace

std::pair<DenseOperator, DenseOperator> pauli_unitaries(Dimension dim) {
  return {word_unitary(PauliWord::x(dim, 1, 0)), word_unitary(PauliWord::z(dim, 1, 0))};
}

DenseOperator gate_unitary(const Gate& g, std::size_t n, Dimension dim, std::size_t max_side) {
  GateSequence check(n, dim);
  check.push_back(g);
  const Gate& gate = check[0];
  const std::size_t side = checked_side(dim, n, max_side);
  const Int d = dim.d();
  DenseOperator out{dim, n, Eigen::MatrixXcd::Zero(side, side)};

  for (std::size_t col = 0; col < side; ++col) {
    std::vector<Int> in = digits(col, n, d);
    if (const auto* f = std::get_if<Fourier>(&gate)) {
      const double norm = 1.0 / std::sqrt(static_cast<double>(d));
      for (Int k = 0; k < d; ++k) {
        std::vector<Int> outd = in;
        outd[f->qudit] = k;
        out.data(index_of(outd, d), col) = norm * root_of_unity(in[f->qudit] * k, d);
      }
    } else if (const auto* p = std::get_if<Phase>(&gate)) {
      out.data(col, col) = root_of_unity(phase_numerator(in[p->qudit], p->exponent, dim), dim.D());
    } else {
      const auto& s = std::get<Sum>(gate);
      std::vector<Int> outd = in;
      outd[s.target] = mod(in[s.target] + mul_mod(mod(s.exponent, d), in[s.control], d), d);
      out.data(index_of(outd, d), col) = 1.0;
    }
  }
  return out;
}

DenseOperator word_unitary(const PauliWord& w) {
  const Dimension dim = w.dim();
  const std::size_t n = w.n();
  const std::size_t side = checked_side(dim, n);
  const Int d = dim.d();
  DenseOperator out{dim, n, Eigen::MatrixXcd::Zero(side, side)};
  for (std::size_t col = 0; col < side; ++col) {
    std::vector<Int> in = digits(col, n, d);
    Int phase = 0;
    for (std::size_t q = 0; q < n; ++q) {
      // X^a Z^b |z> = w^{b z} |z + a>
      phase = mod(phase + mul_mod(w.zexp()[q], in[q], d), d);
      in[q] = mod(in[q] + w.xexp()[q], d);
    }
    out.data(index_of(in, d), col) = root_of_unity(phase, d);
  }
  return out;
}

DenseOperator program_unitary(const GateSequence& seq) {
  const std::size_t side = checked_side(seq.dim(), seq.n());
  DenseOperator out{seq.dim(), seq.n(), Eigen::MatrixXcd::Identity(side, side)};
  for (const Gate& g : seq) out.data = gate_unitary(g, seq.n(), seq.dim()).data * out.data;
  return out;
}

bool equal_up_to_phase(const DenseOperator& a, const DenseOperator& b, double tol) {
  if (a.side() != b.side()) throw DimensionMismatch("operators of different size");
  const double overlap = std::abs((a.data.adjoint() * b.data).trace());
  return overlap >= static_cast<double>(a.side()) * (1.0 - tol);
}

std::optional<Complex> relative_phase(const DenseOperator& a, const DenseOperator& b, double tol) {
  if (!equal_up_to_phase(a, b, tol)) return std::nullopt;
  // tr(b^dagger a) = c * side when a = c b.
  return (b.data.adjoint() * a.data).trace() / static_cast<double>(a.side());
}

DenseOperator conjugate(const DenseOperator& u, const DenseOperator& a) {
  if (u.side() != a.side()) throw DimensionMismatch("operators of different size");
  return DenseOperator{u.dim, u.n, u.data * a.data * u.data.adjoint()};
}

bool check_program(const GateSequence& seq, const SymplecticMatrix& m, double tol) {
  if (seq.n() != m.n() || seq.dim() != m.dim()) {
    throw DimensionMismatch("program and matrix disagree on n or dimension");
  }
  const DenseOperator u = program_unitary(seq);
  for (std::size_t q = 0; q < seq.n(); ++q) {
    for (const PauliWord& g : {PauliWord::x(seq.dim(), seq.n(), q), PauliWord::z(seq.dim(), seq.n(), q)}) {
      const DenseOperator lhs = conjugate(u, word_unitary(g));
      const DenseOperator rhs = word_unitary(apply_to_word(m, g));
      if (!equal_up_to_phase(lhs, rhs, tol)) return false;
    }
  }
  return true;
}

}  // namespace qcliff

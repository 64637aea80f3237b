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

#include "qcliff/symplectic.hpp"

#include <variant>

#include "qcliff/errors.hpp"

namespace qcliff {

ModMatrix::ModMatrix(Dimension dim, std::size_t side)
    : dim_(dim), side_(side), data_(side * side, 0) {}

ModMatrix ModMatrix::identity(Dimension dim, std::size_t side) {
  ModMatrix m(dim, side);
  for (std::size_t i = 0; i < side; ++i) m.data_[i * side + i] = 1;
  return m;
}

ModMatrix ModMatrix::from_rows(Dimension dim, const std::vector<std::vector<Int>>& rows) {
  ModMatrix m(dim, rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != rows.size()) throw MalformedMatrix("matrix rows must form a square");
    for (std::size_t c = 0; c < rows.size(); ++c) m.set(r, c, rows[r][c]);
  }
  return m;
}

ModMatrix ModMatrix::from_rows(Dimension dim,
                               std::initializer_list<std::initializer_list<Int>> rows) {
  std::vector<std::vector<Int>> v;
  for (const auto& row : rows) v.emplace_back(row);
  return from_rows(dim, v);
}

ModMatrix ModMatrix::transpose() const {
  ModMatrix t(dim_, side_);
  for (std::size_t r = 0; r < side_; ++r)
    for (std::size_t c = 0; c < side_; ++c) t.data_[c * side_ + r] = data_[r * side_ + c];
  return t;
}

bool ModMatrix::is_identity() const { return *this == identity(dim_, side_); }

void ModMatrix::add_row_multiple(std::size_t r, std::size_t src, Int factor) {
  const Int D = dim_.D();
  const Int f = mod(factor, D);
  if (f == 0) return;
  for (std::size_t c = 0; c < side_; ++c) {
    data_[r * side_ + c] = (data_[r * side_ + c] + mul_mod(f, data_[src * side_ + c], D)) % D;
  }
}

void ModMatrix::add_col_multiple(std::size_t c, std::size_t src, Int factor) {
  const Int D = dim_.D();
  const Int f = mod(factor, D);
  if (f == 0) return;
  for (std::size_t r = 0; r < side_; ++r) {
    data_[r * side_ + c] = (data_[r * side_ + c] + mul_mod(f, data_[r * side_ + src], D)) % D;
  }
}

void ModMatrix::scale_row(std::size_t r, Int factor) {
  const Int D = dim_.D();
  const Int f = mod(factor, D);
  for (std::size_t c = 0; c < side_; ++c) data_[r * side_ + c] = mul_mod(f, data_[r * side_ + c], D);
}

ModMatrix operator*(const ModMatrix& a, const ModMatrix& b) {
  if (a.dim_ != b.dim_ || a.side_ != b.side_) {
    throw DimensionMismatch("matrix product of incompatible operands");
  }
  const Int D = a.dim_.D();
  const std::size_t n = a.side_;
  ModMatrix out(a.dim_, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t k = 0; k < n; ++k) {
      const Int x = a.data_[r * n + k];
      if (x == 0) continue;
      for (std::size_t c = 0; c < n; ++c) {
        out.data_[r * n + c] = (out.data_[r * n + c] + mul_mod(x, b.data_[k * n + c], D)) % D;
      }
    }
  }
  return out;
}

ModMatrix symplectic_form(Dimension dim, std::size_t n) {
  ModMatrix s(dim, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    s.set(i, n + i, 1);
    s.set(n + i, i, -1);
  }
  return s;
}

bool is_symplectic(const ModMatrix& m) {
  if (m.side() == 0 || m.side() % 2 != 0) {
    throw MalformedMatrix("symplectic matrices need a positive even side length");
  }
  const ModMatrix s = symplectic_form(m.dim(), m.side() / 2);
  return m.transpose() * s * m == s;
}

SymplecticMatrix::SymplecticMatrix(ModMatrix m) : m_(std::move(m)) {
  if (!is_symplectic(m_)) throw ContractViolation("matrix is not symplectic");
}

SymplecticMatrix SymplecticMatrix::identity(Dimension dim, std::size_t n) {
  return SymplecticMatrix(ModMatrix::identity(dim, 2 * n), Trusted{});
}

SymplecticMatrix inverse(const SymplecticMatrix& m) {
  const ModMatrix s = symplectic_form(m.dim(), m.n());
  ModMatrix out = s * m.matrix().transpose() * s;
  for (std::size_t r = 0; r < out.side(); ++r) out.scale_row(r, -1);
  return SymplecticMatrix(std::move(out), SymplecticMatrix::Trusted{});
}

SymplecticMatrix compose(const SymplecticMatrix& a, const SymplecticMatrix& b) {
  if (a.n() != b.n() || a.dim() != b.dim()) {
    throw DimensionMismatch("cannot compose symplectic matrices of different shape");
  }
  return SymplecticMatrix(a.matrix() * b.matrix(), SymplecticMatrix::Trusted{});
}

void left_apply(const Gate& g, ModMatrix& m) {
  const std::size_t n = m.side() / 2;
  if (const auto* f = std::get_if<Fourier>(&g)) {
    const std::size_t x = f->qudit, z = n + f->qudit;
    for (std::size_t c = 0; c < m.side(); ++c) {
      const Int a = m(x, c), b = m(z, c);
      m.set(x, c, -b);
      m.set(z, c, a);
    }
  } else if (const auto* p = std::get_if<Phase>(&g)) {
    m.add_row_multiple(n + p->qudit, p->qudit, p->exponent);
  } else {
    const auto& s = std::get<Sum>(g);
    m.add_row_multiple(s.target, s.control, s.exponent);
    m.add_row_multiple(n + s.control, n + s.target, -s.exponent);
  }
}

void right_apply(ModMatrix& m, const Gate& g) {
  const std::size_t n = m.side() / 2;
  if (const auto* f = std::get_if<Fourier>(&g)) {
    const std::size_t x = f->qudit, z = n + f->qudit;
    for (std::size_t r = 0; r < m.side(); ++r) {
      const Int a = m(r, x), b = m(r, z);
      m.set(r, x, b);
      m.set(r, z, -a);
    }
  } else if (const auto* p = std::get_if<Phase>(&g)) {
    m.add_col_multiple(p->qudit, n + p->qudit, p->exponent);
  } else {
    const auto& s = std::get<Sum>(g);
    m.add_col_multiple(s.control, s.target, s.exponent);
    m.add_col_multiple(n + s.target, n + s.control, -s.exponent);
  }
}

void left_apply(const Gate& g, std::vector<Int>& v, Int modulus) {
  const std::size_t n = v.size() / 2;
  auto axpy = [&](std::size_t dst, std::size_t src, Int e) {
    v[dst] = mod(v[dst] + mul_mod(mod(e, modulus), v[src], modulus), modulus);
  };
  if (const auto* f = std::get_if<Fourier>(&g)) {
    const Int a = v[f->qudit], b = v[n + f->qudit];
    v[f->qudit] = mod(-b, modulus);
    v[n + f->qudit] = a;
  } else if (const auto* p = std::get_if<Phase>(&g)) {
    axpy(n + p->qudit, p->qudit, p->exponent);
  } else {
    const auto& s = std::get<Sum>(g);
    axpy(s.target, s.control, s.exponent);
    axpy(n + s.control, n + s.target, -s.exponent);
  }
}

SymplecticMatrix gate_matrix(const Gate& g, std::size_t n, Dimension dim) {
  GateSequence check(n, dim);
  check.push_back(g);  // validates indices
  ModMatrix m = ModMatrix::identity(dim, 2 * n);
  const Int D = dim.D();
  if (const auto* f = std::get_if<Fourier>(&g)) {
    const std::size_t i = f->qudit;
    m.set(i, i, 0);
    m.set(n + i, n + i, 0);
    m.set(i, n + i, D - 1);
    m.set(n + i, i, 1);
  } else if (const auto* p = std::get_if<Phase>(&g)) {
    m.set(n + p->qudit, p->qudit, p->exponent);
  } else {
    const auto& s = std::get<Sum>(g);
    m.set(s.target, s.control, s.exponent);
    m.set(n + s.control, n + s.target, -s.exponent);
  }
  return SymplecticMatrix(std::move(m), SymplecticMatrix::Trusted{});
}

SymplecticMatrix sequence_matrix(const GateSequence& seq) {
  ModMatrix m = ModMatrix::identity(seq.dim(), 2 * seq.n());
  for (const Gate& g : seq) left_apply(g, m);
  return SymplecticMatrix(std::move(m), SymplecticMatrix::Trusted{});
}

PauliWord apply_to_word(const SymplecticMatrix& m, const PauliWord& w) {
  if (m.n() != w.n() || m.dim() != w.dim()) {
    throw DimensionMismatch("matrix and word disagree on n or dimension");
  }
  const Int d = w.dim().d();
  const auto v = w.vector();
  std::vector<Int> out(v.size(), 0);
  for (std::size_t r = 0; r < v.size(); ++r) {
    Int acc = 0;
    for (std::size_t c = 0; c < v.size(); ++c) {
      acc = (acc + mul_mod(m(r, c) % d, v[c], d)) % d;
    }
    out[r] = acc;
  }
  return PauliWord::from_vector(w.dim(), out);
}

}  // namespace qcliff

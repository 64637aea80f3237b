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

#include "qcliff/pauli.hpp"

#include <algorithm>

#include "qcliff/errors.hpp"

namespace qcliff {

namespace {

void require_compatible(const PauliWord& u, const PauliWord& v) {
  if (u.dim() != v.dim()) throw DimensionMismatch("Pauli words over different dimensions");
  if (u.n() != v.n()) throw DimensionMismatch("Pauli words on different qudit counts");
}

}  // namespace

PauliWord::PauliWord(Dimension dim, std::vector<Int> xexp, std::vector<Int> zexp)
    : dim_(dim), xexp_(std::move(xexp)), zexp_(std::move(zexp)) {
  if (xexp_.size() != zexp_.size()) {
    throw DimensionMismatch("X and Z exponent vectors differ in length");
  }
  if (xexp_.empty()) throw DomainError("Pauli word needs at least one qudit");
  for (auto& a : xexp_) a = mod(a, dim_.d());
  for (auto& b : zexp_) b = mod(b, dim_.d());
}

PauliWord PauliWord::identity(Dimension dim, std::size_t n) {
  return PauliWord(dim, std::vector<Int>(n, 0), std::vector<Int>(n, 0));
}

PauliWord PauliWord::x(Dimension dim, std::size_t n, std::size_t qudit, Int power) {
  if (qudit >= n) throw IndexError("qudit index out of range");
  std::vector<Int> a(n, 0);
  a[qudit] = power;
  return PauliWord(dim, std::move(a), std::vector<Int>(n, 0));
}

PauliWord PauliWord::z(Dimension dim, std::size_t n, std::size_t qudit, Int power) {
  if (qudit >= n) throw IndexError("qudit index out of range");
  std::vector<Int> b(n, 0);
  b[qudit] = power;
  return PauliWord(dim, std::vector<Int>(n, 0), std::move(b));
}

PauliWord PauliWord::from_vector(Dimension dim, std::span<const Int> v) {
  if (v.size() % 2 != 0) throw MalformedMatrix("word vector must have even length");
  const std::size_t n = v.size() / 2;
  return PauliWord(dim, std::vector<Int>(v.begin(), v.begin() + n),
                   std::vector<Int>(v.begin() + n, v.end()));
}

std::vector<Int> PauliWord::vector() const {
  std::vector<Int> v(xexp_);
  v.insert(v.end(), zexp_.begin(), zexp_.end());
  return v;
}

bool PauliWord::is_identity() const {
  auto zero = [](Int e) { return e == 0; };
  return std::all_of(xexp_.begin(), xexp_.end(), zero) &&
         std::all_of(zexp_.begin(), zexp_.end(), zero);
}

PauliWord PauliWord::operator+(const PauliWord& other) const {
  require_compatible(*this, other);
  std::vector<Int> a(n()), b(n());
  for (std::size_t i = 0; i < n(); ++i) {
    a[i] = xexp_[i] + other.xexp_[i];
    b[i] = zexp_[i] + other.zexp_[i];
  }
  return PauliWord(dim_, std::move(a), std::move(b));
}

PauliWord PauliWord::scaled(Int r) const {
  const Int d = dim_.d();
  const Int rr = mod(r, d);
  std::vector<Int> a(n()), b(n());
  for (std::size_t i = 0; i < n(); ++i) {
    a[i] = mul_mod(xexp_[i], rr, d);
    b[i] = mul_mod(zexp_[i], rr, d);
  }
  return PauliWord(dim_, std::move(a), std::move(b));
}

Int sip(const PauliWord& u, const PauliWord& v) {
  require_compatible(u, v);
  const Int d = u.dim().d();
  Int acc = 0;
  for (std::size_t i = 0; i < u.n(); ++i) {
    acc = mod(acc + mul_mod(u.xexp()[i], v.zexp()[i], d) - mul_mod(v.xexp()[i], u.zexp()[i], d), d);
  }
  return acc;
}

bool commutes(const PauliWord& u, const PauliWord& v) { return sip(u, v) == 0; }

Int sip_matrix_form(const PauliWord& u, const PauliWord& v) {
  require_compatible(u, v);
  const std::size_t n = u.n();
  const Int d = u.dim().d();
  // S = [[0, I], [-I, 0]], entries taken mod d.
  std::vector<Int> s(4 * n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    s[i * 2 * n + (n + i)] = 1;
    s[(n + i) * 2 * n + i] = d - 1;
  }
  const auto left = u.vector();
  const auto right = v.vector();
  Int acc = 0;
  for (std::size_t r = 0; r < 2 * n; ++r) {
    Int row = 0;
    for (std::size_t c = 0; c < 2 * n; ++c) {
      row = (row + mul_mod(s[r * 2 * n + c], right[c], d)) % d;
    }
    acc = (acc + mul_mod(left[r], row, d)) % d;
  }
  return acc;
}

}  // namespace qcliff

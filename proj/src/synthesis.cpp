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

#include "qcliff/synthesis.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "qcliff/errors.hpp"

namespace qcliff {

namespace {

/// Appends g to seq and applies it to the tracked vector.
void emit(GateSequence& seq, std::vector<Int>& v, Int modulus, Gate g) {
  seq.push_back(g);
  left_apply(seq.gates().back(), v, modulus);
}

void emit(GateSequence& seq, ModMatrix& m, Gate g) {
  seq.push_back(g);
  left_apply(seq.gates().back(), m);
}

/// R P^q R^3 as a circuit: subtracts q times the Z entry from the X entry of qudit i.
void emit_upper_step(GateSequence& seq, std::size_t i, Int q, auto& state, auto... modulus) {
  for (int k = 0; k < 3; ++k) emit(seq, state, modulus..., Fourier{i});
  emit(seq, state, modulus..., Phase{i, q});
  emit(seq, state, modulus..., Fourier{i});
}

/// Euclid on (x_i, z_i) of v until one entry vanishes, then moves the gcd into z_i.
void reduce_qudit(GateSequence& seq, std::vector<Int>& v, Int modulus, std::size_t i) {
  const std::size_t n = v.size() / 2;
  const std::size_t x = i, z = n + i;
  if (v[x] == 0 && v[z] == 0) return;
  bool top = true;
  while (v[x] != 0 && v[z] != 0) {
    if (top) {
      const Int q = v[x] / v[z];
      if (q != 0) emit_upper_step(seq, i, q, v, modulus);
    } else {
      const Int q = v[z] / v[x];
      if (q != 0) emit(seq, v, modulus, Phase{i, -q});
    }
    top = !top;
  }
  if (v[z] == 0) emit(seq, v, modulus, Fourier{i});
}

/// Sum-only Euclid on (z_i, z_j), leaving the gcd in the requested slot.
void reduce_pair(GateSequence& seq, std::vector<Int>& v, Int modulus, std::size_t i,
                 std::size_t j, Slot slot) {
  const std::size_t n = v.size() / 2;
  const std::size_t zi = n + i, zj = n + j;
  if (v[zi] == 0 && v[zj] == 0) return;
  bool top = true;
  while (v[zi] != 0 && v[zj] != 0) {
    if (top) {
      const Int q = v[zi] / v[zj];
      if (q != 0) emit(seq, v, modulus, Sum{i, j, q});
    } else {
      const Int q = v[zj] / v[zi];
      if (q != 0) emit(seq, v, modulus, Sum{j, i, q});
    }
    top = !top;
  }
  if (slot == Slot::Second && v[zj] == 0) {
    // C_[i,j] C_[j,i]^{-1}: (g, 0) -> (g, g) -> (0, g)
    emit(seq, v, modulus, Sum{j, i, -1});
    emit(seq, v, modulus, Sum{i, j, 1});
  } else if (slot == Slot::First && v[zi] == 0) {
    // C_[j,i] C_[i,j]^{-1}: (0, g) -> (g, g) -> (g, 0)
    emit(seq, v, modulus, Sum{i, j, -1});
    emit(seq, v, modulus, Sum{j, i, 1});
  }
}

/// Generalized PEG on a flat vector: per-qudit reduction, then a Sum fold into the last qudit.
PegResult reduce_vector(std::vector<Int> v, Int modulus, std::size_t n, Dimension dim) {
  if (std::all_of(v.begin(), v.end(), [](Int e) { return e == 0; })) {
    throw DegenerateWord("cannot reduce the zero vector");
  }
  GateSequence seq(n, dim);
  for (std::size_t i = 0; i < n; ++i) reduce_qudit(seq, v, modulus, i);
  for (std::size_t i = 0; i + 1 < n; ++i) reduce_pair(seq, v, modulus, i, i + 1, Slot::Second);
  for (std::size_t r = 0; r + 1 < v.size(); ++r) {
    if (v[r] != 0) throw InvariantViolation("generalized PEG left a nonzero entry");
  }
  return PegResult{std::move(seq), v.back()};
}

bool any_unit(const ModMatrix& m) {
  for (std::size_t r = 0; r < m.side(); ++r)
    for (std::size_t c = 0; c < m.side(); ++c)
      if (is_unit(m(r, c), m.modulus())) return true;
  return false;
}

/// P^m R P^q R P^n for a 2x2 symplectic m whose top-right entry q is a unit.
GateSequence case_unit_corner(const ModMatrix& m) {
  const Dimension dim = m.dim();
  const Int D = dim.D();
  const Int q = m(0, 1);
  const Int qinv = *mod_inverse(q, D);
  const Int left = mul_mod(qinv, mod(m(1, 1) + 1, D), D);
  const Int right = mul_mod(qinv, mod(m(0, 0) + 1, D), D);
  GateSequence seq(1, dim);
  seq.push_back(Phase{0, right});
  seq.push_back(Fourier{0});
  seq.push_back(Phase{0, q});
  seq.push_back(Fourier{0});
  seq.push_back(Phase{0, left});
  return seq;
}

GateSequence fourier_power(Dimension dim, int count) {
  GateSequence seq(1, dim);
  for (int k = 0; k < count; ++k) seq.push_back(Fourier{0});
  return seq;
}

GateSequence decompose_single_raw(const ModMatrix& m) {
  const Dimension dim = m.dim();
  const Int D = dim.D();
  if (m.is_identity()) return GateSequence(1, dim);
  if (is_unit(m(0, 1), D)) return case_unit_corner(m);

  const ModMatrix r = gate_matrix(Fourier{0}, 1, dim).matrix();
  if (is_unit(m(1, 0), D)) {
    // m = R (R m R) R because R^4 = I.
    GateSequence seq = fourier_power(dim, 1);
    seq.append(case_unit_corner(r * m * r));
    seq.append(fourier_power(dim, 1));
    return seq;
  }
  if (is_unit(m(0, 0), D)) {
    // m = (m R) R^3
    GateSequence seq = fourier_power(dim, 3);
    seq.append(case_unit_corner(m * r));
    return seq;
  }
  if (is_unit(m(1, 1), D)) {
    // m = R^3 (R m)
    GateSequence seq = case_unit_corner(r * m);
    seq.append(fourier_power(dim, 3));
    return seq;
  }

  // No unit entry: Euclid on the second column by left multiplication until one appears.
  ModMatrix work = m;
  GateSequence left(1, dim);
  bool top = true;
  while (!any_unit(work)) {
    if (work(0, 1) == 0 || work(1, 1) == 0) {
      throw InvariantViolation("column reduction finished without a unit entry");
    }
    if (top) {
      const Int q = work(0, 1) / work(1, 1);
      if (q != 0) emit_upper_step(left, 0, q, work);
    } else {
      const Int q = work(1, 1) / work(0, 1);
      if (q != 0) emit(left, work, Phase{0, -q});
    }
    top = !top;
  }
  GateSequence seq = decompose_single_raw(work);
  seq.append(left.inverse());
  return seq;
}

/// Deletes the rows and columns of the last qudit.
ModMatrix drop_last_qudit(const ModMatrix& m) {
  const std::size_t n = m.side() / 2;
  const std::size_t k = n - 1;
  ModMatrix out(m.dim(), 2 * k);
  auto src = [&](std::size_t idx) { return idx < k ? idx : idx + 1; };
  for (std::size_t r = 0; r < 2 * k; ++r)
    for (std::size_t c = 0; c < 2 * k; ++c) out.set(r, c, m(src(r), src(c)));
  return out;
}

bool row_is_unit_vector(const ModMatrix& m, std::size_t r) {
  for (std::size_t c = 0; c < m.side(); ++c)
    if (m(r, c) != (c == r ? 1 : 0)) return false;
  return true;
}

bool col_is_unit_vector(const ModMatrix& m, std::size_t c) {
  for (std::size_t r = 0; r < m.side(); ++r)
    if (m(r, c) != (r == c ? 1 : 0)) return false;
  return true;
}

GateSequence decompose_raw(const ModMatrix& m) {
  const std::size_t n = m.side() / 2;
  const Dimension dim = m.dim();
  const Int D = dim.D();
  if (n == 1) return decompose_single_raw(m);

  const std::size_t last = n - 1;
  const std::size_t xl = last, zl = n + last;
  ModMatrix work = m;

  // Left: reduce the last column to k e_zl, then scale k to 1.
  std::vector<Int> column(2 * n);
  for (std::size_t r = 0; r < 2 * n; ++r) column[r] = work(r, zl);
  PegResult peg = reduce_vector(column, D, n, dim);
  GateSequence left = std::move(peg.program);
  const auto kinv = mod_inverse(peg.gcd, D);
  if (!kinv) throw InvariantViolation("column gcd of a symplectic matrix is not a unit");
  if (*kinv != 1) {
    std::vector<std::size_t> to_last{last};
    left.append(scale_sequence(*kinv, dim).relabeled(to_last, n));
  }
  for (const Gate& g : left) left_apply(g, work);

  // Right: clear the bottom row except the diagonal entry.
  std::vector<Gate> right;
  auto push_right = [&](Gate g) {
    right.push_back(g);
    right_apply(work, g);
  };
  auto clear_right_block = [&] {
    for (std::size_t i = 0; i < last; ++i) {
      const Int e = work(zl, n + i);
      if (e != 0) push_right(Sum{last, i, e});
    }
  };
  clear_right_block();
  if (const Int e = work(zl, xl); e != 0) push_right(Phase{last, mod(-e, D)});
  bool swapped = false;
  for (std::size_t i = 0; i < last; ++i) {
    if (work(zl, i) == 0) continue;
    // R P R P R^2 on qudit i moves column z_i into column x_i.
    for (Gate g : {Gate{Fourier{i}}, Gate{Phase{i, 1}}, Gate{Fourier{i}}, Gate{Phase{i, 1}},
                   Gate{Fourier{i}}, Gate{Fourier{i}}}) {
      push_right(g);
    }
    swapped = true;
  }
  if (swapped) clear_right_block();

  if (!row_is_unit_vector(work, zl) || !col_is_unit_vector(work, zl) ||
      !row_is_unit_vector(work, xl) || !col_is_unit_vector(work, xl)) {
    throw InvariantViolation("reduced matrix does not act as identity on the last qudit");
  }

  std::vector<std::size_t> keep(n - 1);
  std::iota(keep.begin(), keep.end(), std::size_t{0});
  GateSequence inner = decompose_raw(drop_last_qudit(work)).relabeled(keep, n);

  // m = left^{-1} * work * right^{-1}; right^{-1} acts first.
  GateSequence out(n, dim);
  for (const Gate& g : right) {
    GateSequence one(n, dim);
    one.push_back(g);
    out.append(one.inverse());
  }
  out.append(inner);
  out.append(left.inverse());
  return out;
}

}  // namespace

PegResult peg_reduce(Int a, Int b, Dimension dim) {
  const Int d = dim.d();
  std::vector<Int> v{mod(a, d), mod(b, d)};
  if (v[0] == 0 && v[1] == 0) throw DegenerateWord("the identity word has no PEG target");
  GateSequence seq(1, dim);
  reduce_qudit(seq, v, d, 0);
  return PegResult{std::move(seq), v[1]};
}

GateSequence decompose_single(const SymplecticMatrix& m) {
  if (m.n() != 1) throw DimensionMismatch("decompose_single expects a 2x2 matrix");
  return decompose_single_raw(m.matrix()).simplified();
}

GateSequence scale_sequence(Int k, Dimension dim) {
  const Int D = dim.D();
  const auto kinv = mod_inverse(k, D);
  if (!kinv) {
    throw ContractViolation("scale factor " + std::to_string(k) + " is not a unit mod " +
                            std::to_string(D));
  }
  // R P^{k^-1} R P^k R P^{k^-1}, rightmost factor first.
  GateSequence seq(1, dim);
  seq.push_back(Phase{0, *kinv});
  seq.push_back(Fourier{0});
  seq.push_back(Phase{0, k});
  seq.push_back(Fourier{0});
  seq.push_back(Phase{0, *kinv});
  seq.push_back(Fourier{0});
  return seq;
}

GateSequence sum_peg(Int a, Int b, Dimension dim, Slot slot) {
  const Int d = dim.d();
  std::vector<Int> v{0, 0, mod(a, d), mod(b, d)};
  if (v[2] == 0 && v[3] == 0) throw DegenerateWord("Z^0 (x) Z^0 has no SUM-PEG target");
  GateSequence seq(2, dim);
  reduce_pair(seq, v, d, 0, 1, slot);
  return seq;
}

PegResult generalized_peg(const PauliWord& w) {
  if (w.is_identity()) throw DegenerateWord("the identity word has no PEG target");
  return reduce_vector(w.vector(), w.dim().d(), w.n(), w.dim());
}

std::optional<GateSequence> transport(const PauliWord& p, const PauliWord& q) {
  if (p.n() != q.n() || p.dim() != q.dim()) {
    throw DimensionMismatch("transport endpoints disagree on n or dimension");
  }
  if (p.is_identity() || q.is_identity()) throw DegenerateWord("transport of the identity word");
  const std::size_t n = p.n();
  const Dimension dim = p.dim();
  if (p == q) return GateSequence(n, dim);

  const Int d = dim.d();
  PegResult from = generalized_peg(p);
  PegResult to = generalized_peg(q);
  // Need a unit k with k * gcd(p) = gcd(q) mod d.
  std::optional<Int> scale;
  for (Int k = 1; k < d && !scale; ++k) {
    if (is_unit(k, d) && mul_mod(k, from.gcd, d) == to.gcd) scale = k;
  }
  if (!scale) return std::nullopt;

  GateSequence seq = std::move(from.program);
  if (*scale != 1) {
    std::vector<std::size_t> to_last{n - 1};
    seq.append(scale_sequence(*scale, dim).relabeled(to_last, n));
  }
  seq.append(to.program.inverse());
  return seq.simplified();
}

GateSequence decompose(const SymplecticMatrix& m) { return decompose_raw(m.matrix()).simplified(); }

SynthesisResult synthesize(const SymplecticMatrix& m) {
  GateSequence program = decompose(m);
  if (sequence_matrix(program) != m) {
    throw InvariantViolation("synthesized program does not recompose to the target");
  }
  const std::size_t count = program.size();
  return SynthesisResult{std::move(program), m, count};
}

GateSequence swap_sequence(std::size_t i, std::size_t j, std::size_t n, Dimension dim) {
  if (i == j) throw IndexError("swap needs two distinct qudits");
  GateSequence seq(n, dim);
  // R_j R_j C R_ij C R_ij C, rightmost factor first.
  seq.push_back(Sum{i, j, 1});
  seq.push_back(Fourier{i});
  seq.push_back(Fourier{j});
  seq.push_back(Sum{i, j, 1});
  seq.push_back(Fourier{i});
  seq.push_back(Fourier{j});
  seq.push_back(Sum{i, j, 1});
  seq.push_back(Fourier{j});
  seq.push_back(Fourier{j});
  return seq;
}

}  // namespace qcliff

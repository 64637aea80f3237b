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

#include <cstdint>
#include <vector>

#include "qcliff/gates.hpp"
#include "qcliff/modring.hpp"
#include "qcliff/symplectic.hpp"

namespace qcliff::testing {

/// SplitMix64; small, seedable and identical on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, bound).
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }
  Int range(Int lo, Int hi) { return lo + static_cast<Int>(below(static_cast<std::uint64_t>(hi - lo + 1))); }

 private:
  std::uint64_t state_;
};

inline Gate random_gate(Rng& rng, std::size_t n, Dimension dim) {
  const std::uint64_t kinds = n > 1 ? 3 : 2;
  const auto q = static_cast<std::size_t>(rng.below(n));
  switch (rng.below(kinds)) {
    case 0: return Fourier{q};
    case 1: return Phase{q, rng.range(0, dim.D() - 1)};
    default: {
      auto t = static_cast<std::size_t>(rng.below(n - 1));
      if (t >= q) ++t;
      return Sum{q, t, rng.range(0, dim.D() - 1)};
    }
  }
}

inline GateSequence random_program(Rng& rng, std::size_t n, Dimension dim, std::size_t length) {
  GateSequence seq(n, dim);
  for (std::size_t i = 0; i < length; ++i) seq.push_back(random_gate(rng, n, dim));
  return seq;
}

inline SymplecticMatrix random_symplectic(Rng& rng, std::size_t n, Dimension dim, std::size_t length = 24) {
  return sequence_matrix(random_program(rng, n, dim, length));
}

/// Every 2x2 matrix over Z_D with determinant 1, by brute force.
inline std::vector<ModMatrix> all_sl2(Dimension dim) {
  const Int D = dim.D();
  std::vector<ModMatrix> out;
  for (Int a = 0; a < D; ++a)
    for (Int b = 0; b < D; ++b)
      for (Int c = 0; c < D; ++c)
        for (Int s = 0; s < D; ++s)
          if (((a * s - b * c) % D + D) % D == 1) out.push_back(ModMatrix::from_rows(dim, {{a, b}, {c, s}}));
  return out;
}

/// Plain schoolbook product, independent of the library's operator*.
inline std::vector<std::vector<Int>> naive_product(const ModMatrix& a, const ModMatrix& b) {
  const std::size_t s = a.side();
  const Int D = a.dim().D();
  std::vector<std::vector<Int>> out(s, std::vector<Int>(s, 0));
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = 0; j < s; ++j) {
      Int acc = 0;
      for (std::size_t k = 0; k < s; ++k) acc = (acc + a(i, k) * b(k, j)) % D;
      out[i][j] = acc;
    }
  return out;
}

inline std::size_t ceil_log2(Int x) {
  std::size_t k = 0;
  while ((Int{1} << k) < x) ++k;
  return k;
}

}  // namespace qcliff::testing

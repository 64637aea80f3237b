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

#include "qcliff/modring.hpp"

#include <string>

#include "qcliff/errors.hpp"

namespace qcliff {

Dimension::Dimension(Int d) : d_(d), D_(d % 2 == 0 ? 2 * d : d) {
  if (d < 2) {
    throw DomainError("dimension must be at least 2, got " + std::to_string(d));
  }
  if (d > kMaxModulus / 2) {
    throw DomainError("dimension " + std::to_string(d) + " too large");
  }
}

Int mul_mod(Int a, Int b, Int m) { return (a * b) % m; }

Int gcd0(Int a, Int b) {
  if (a < 0 || b < 0) throw ContractViolation("gcd0 expects nonnegative inputs");
  while (b != 0) {
    Int r = a % b;
    a = b;
    b = r;
  }
  return a;
}

std::vector<Int> euclid_steps(Int a, Int b) {
  if (a < 0 || b < 0) throw ContractViolation("euclid_steps expects nonnegative inputs");
  if (a == 0 && b == 0) throw ContractViolation("euclid_steps(0, 0) has no remainder chain");
  std::vector<Int> quotients;
  if (a == 0 || b == 0) return quotients;
  while (b != 0) {
    quotients.push_back(a / b);
    Int r = a % b;
    a = b;
    b = r;
  }
  return quotients;
}

std::optional<Int> mod_inverse(Int a, Int m) {
  if (m < 2) throw ContractViolation("mod_inverse needs modulus >= 2");
  // Extended Euclid on (a mod m, m), tracking the coefficient of a.
  Int old_r = mod(a, m), r = m;
  Int old_s = 1, s = 0;
  while (r != 0) {
    Int q = old_r / r;
    Int t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  if (old_r != 1) return std::nullopt;
  return mod(old_s, m);
}

}  // namespace qcliff

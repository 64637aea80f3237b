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

#include <istream>
#include <ostream>
#include <string>
#include <string_view>

#include "qcliff/gates.hpp"
#include "qcliff/pauli.hpp"
#include "qcliff/symplectic.hpp"

namespace qcliff {

/**
 * Matrix text: `d <d> n <n>` followed by 2n rows of 2n integers in [0, D).
 * Blank lines and lines starting with '#' are ignored. The matrix is not
 * checked for symplecticity here.
 */
ModMatrix parse_matrix(std::istream& in);
std::string format_matrix(const ModMatrix& m);

/// One gate per line: `F <i>`, `P <i> <e>` or `C <c> <t> <e>`; comments as above.
GateSequence parse_program(std::istream& in, std::size_t n, Dimension dim);
std::string format_gate(const Gate& g);
std::string format_program(const GateSequence& seq);

/// `d=<d> n=<n> a=<a1,...> b=<b1,...>`, exponents reduced mod d.
PauliWord parse_word(std::string_view text);
std::string format_word(const PauliWord& w);

}  // namespace qcliff

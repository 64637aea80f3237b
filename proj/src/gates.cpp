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

#include "qcliff/gates.hpp"

#include <string>

#include "qcliff/errors.hpp"

namespace qcliff {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

}  // namespace

GateSequence::GateSequence(std::size_t n, Dimension dim) : n_(n), dim_(dim) {
  if (n == 0) throw DomainError("gate sequence needs at least one qudit");
}

void GateSequence::push_back(Gate g) {
  const Int D = dim_.D();
  std::visit(overloaded{
                 [&](Fourier& f) {
                   if (f.qudit >= n_) throw IndexError("Fourier qudit index out of range");
                 },
                 [&](Phase& p) {
                   if (p.qudit >= n_) throw IndexError("Phase qudit index out of range");
                   p.exponent = mod(p.exponent, D);
                 },
                 [&](Sum& s) {
                   if (s.control >= n_ || s.target >= n_) {
                     throw IndexError("Sum qudit index out of range");
                   }
                   if (s.control == s.target) throw IndexError("Sum control equals target");
                   s.exponent = mod(s.exponent, D);
                 },
             },
             g);
  gates_.push_back(g);
}

void GateSequence::append(const GateSequence& other) {
  if (other.n_ != n_ || other.dim_ != dim_) {
    throw DimensionMismatch("cannot append programs with different n or dimension");
  }
  gates_.insert(gates_.end(), other.gates_.begin(), other.gates_.end());
}

GateSequence GateSequence::inverse() const {
  GateSequence out(n_, dim_);
  const Int D = dim_.D();
  for (auto it = gates_.rbegin(); it != gates_.rend(); ++it) {
    std::visit(overloaded{
                   [&](const Fourier& f) {
                     for (int k = 0; k < 3; ++k) out.gates_.push_back(f);
                   },
                   [&](const Phase& p) {
                     out.gates_.push_back(Phase{p.qudit, mod(D - p.exponent, D)});
                   },
                   [&](const Sum& s) {
                     out.gates_.push_back(Sum{s.control, s.target, mod(D - s.exponent, D)});
                   },
               },
               *it);
  }
  return out;
}

GateSequence GateSequence::relabeled(std::span<const std::size_t> qudit_map,
                                     std::size_t new_n) const {
  if (qudit_map.size() != n_) throw DimensionMismatch("qudit map size differs from n");
  GateSequence out(new_n, dim_);
  for (const Gate& g : gates_) {
    out.push_back(std::visit(overloaded{
                                 [&](const Fourier& f) -> Gate { return Fourier{qudit_map[f.qudit]}; },
                                 [&](const Phase& p) -> Gate {
                                   return Phase{qudit_map[p.qudit], p.exponent};
                                 },
                                 [&](const Sum& s) -> Gate {
                                   return Sum{qudit_map[s.control], qudit_map[s.target], s.exponent};
                                 },
                             },
                             g));
  }
  return out;
}

GateSequence GateSequence::simplified() const {
  const Int D = dim_.D();
  std::vector<Gate> out;
  out.reserve(gates_.size());
  for (const Gate& g : gates_) {
    if (const auto* f = std::get_if<Fourier>(&g)) {
      // R^4 = I: drop the run if this is the fourth consecutive R on the qudit.
      std::size_t run = 0;
      for (auto it = out.rbegin(); it != out.rend() && run < 3; ++it) {
        const auto* prev = std::get_if<Fourier>(&*it);
        if (prev == nullptr || prev->qudit != f->qudit) break;
        ++run;
      }
      if (run == 3) {
        out.resize(out.size() - 3);
      } else {
        out.push_back(g);
      }
    } else if (const auto* p = std::get_if<Phase>(&g)) {
      Int e = p->exponent;
      if (!out.empty()) {
        if (const auto* prev = std::get_if<Phase>(&out.back()); prev && prev->qudit == p->qudit) {
          e = mod(e + prev->exponent, D);
          out.pop_back();
        }
      }
      if (e != 0) out.push_back(Phase{p->qudit, e});
    } else {
      const auto& s = std::get<Sum>(g);
      Int e = s.exponent;
      if (!out.empty()) {
        if (const auto* prev = std::get_if<Sum>(&out.back());
            prev && prev->control == s.control && prev->target == s.target) {
          e = mod(e + prev->exponent, D);
          out.pop_back();
        }
      }
      if (e != 0) out.push_back(Sum{s.control, s.target, e});
    }
  }
  GateSequence result(n_, dim_);
  result.gates_ = std::move(out);
  return result;
}

}  // namespace qcliff

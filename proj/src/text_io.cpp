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

#include "qcliff/text_io.hpp"

#include <charconv>
#include <sstream>
#include <vector>

#include "qcliff/errors.hpp"

namespace qcliff {

namespace {

std::vector<std::string> tokens(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> out;
  for (std::string t; ss >> t;) out.push_back(t);
  return out;
}

Int to_int(std::string_view s, std::string_view what) {
  Int v = 0;
  const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || end != s.data() + s.size()) {
    throw ParseError("expected integer for " + std::string(what) + ", got '" + std::string(s) + "'");
  }
  return v;
}

/// Next non-comment, non-blank line split into tokens; empty at end of input.
std::vector<std::string> next_content(std::istream& in, std::size_t& lineno) {
  for (std::string line; std::getline(in, line);) {
    ++lineno;
    auto t = tokens(line);
    if (t.empty() || t.front().front() == '#') continue;
    return t;
  }
  return {};
}

std::string at(std::size_t lineno) { return "line " + std::to_string(lineno) + ": "; }

std::vector<Int> int_list(std::string_view s, std::string_view what) {
  std::vector<Int> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = s.find(',', start);
    out.push_back(to_int(s.substr(start, comma - start), what));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace

ModMatrix parse_matrix(std::istream& in) {
  std::size_t lineno = 0;
  const auto header = next_content(in, lineno);
  if (header.size() != 4 || header[0] != "d" || header[2] != "n") {
    throw ParseError(at(lineno) + "expected header 'd <d> n <n>'");
  }
  Int d = to_int(header[1], "d");
  Int n = to_int(header[3], "n");
  if (n < 1) throw ParseError(at(lineno) + "n must be positive");
  Dimension dim = [&] {
    try {
      return Dimension(d);
    } catch (const DomainError& e) {
      throw ParseError(at(lineno) + e.what());
    }
  }();
  const std::size_t side = 2 * static_cast<std::size_t>(n);
  std::vector<std::vector<Int>> rows;
  for (std::size_t r = 0; r < side; ++r) {
    const auto t = next_content(in, lineno);
    if (t.size() != side) {
      throw ParseError(at(lineno) + "expected " + std::to_string(side) + " entries");
    }
    std::vector<Int> row;
    for (const auto& s : t) {
      const Int v = to_int(s, "matrix entry");
      if (v < 0 || v >= dim.D()) throw ParseError(at(lineno) + "entry outside [0, D)");
      row.push_back(v);
    }
    rows.push_back(std::move(row));
  }
  if (!next_content(in, lineno).empty()) throw ParseError(at(lineno) + "trailing content");
  return ModMatrix::from_rows(dim, rows);
}

std::string format_matrix(const ModMatrix& m) {
  std::ostringstream out;
  out << "d " << m.dim().d() << " n " << m.side() / 2 << '\n';
  for (std::size_t r = 0; r < m.side(); ++r) {
    for (std::size_t c = 0; c < m.side(); ++c) out << (c ? " " : "") << m(r, c);
    out << '\n';
  }
  return out.str();
}

GateSequence parse_program(std::istream& in, std::size_t n, Dimension dim) {
  GateSequence seq(n, dim);
  std::size_t lineno = 0;
  for (auto t = next_content(in, lineno); !t.empty(); t = next_content(in, lineno)) {
    auto index = [&](const std::string& s) {
      const Int v = to_int(s, "qudit index");
      if (v < 0) throw ParseError(at(lineno) + "negative qudit index");
      return static_cast<std::size_t>(v);
    };
    try {
      if (t[0] == "F" && t.size() == 2) {
        seq.push_back(Fourier{index(t[1])});
      } else if (t[0] == "P" && t.size() == 3) {
        seq.push_back(Phase{index(t[1]), to_int(t[2], "exponent")});
      } else if (t[0] == "C" && t.size() == 4) {
        seq.push_back(Sum{index(t[1]), index(t[2]), to_int(t[3], "exponent")});
      } else {
        throw ParseError("unrecognised gate line");
      }
    } catch (const ParseError& e) {
      throw ParseError(at(lineno) + e.what());
    } catch (const IndexError& e) {
      throw ParseError(at(lineno) + e.what());
    }
  }
  return seq;
}

std::string format_gate(const Gate& g) {
  std::ostringstream out;
  if (const auto* f = std::get_if<Fourier>(&g)) {
    out << "F " << f->qudit;
  } else if (const auto* p = std::get_if<Phase>(&g)) {
    out << "P " << p->qudit << ' ' << p->exponent;
  } else {
    const auto& s = std::get<Sum>(g);
    out << "C " << s.control << ' ' << s.target << ' ' << s.exponent;
  }
  return out.str();
}

std::string format_program(const GateSequence& seq) {
  std::string out;
  for (const auto& g : seq) out += format_gate(g) + '\n';
  return out;
}

PauliWord parse_word(std::string_view text) {
  const auto t = tokens(std::string(text));
  if (t.size() != 4) throw ParseError("word must read 'd=<d> n=<n> a=<...> b=<...>'");
  auto field = [&](std::size_t i, std::string_view key) {
    const std::string& s = t[i];
    if (s.size() < key.size() + 1 || s.compare(0, key.size(), key) != 0 || s[key.size()] != '=') {
      throw ParseError("expected field '" + std::string(key) + "='");
    }
    return std::string_view(s).substr(key.size() + 1);
  };
  const Int d = to_int(field(0, "d"), "d");
  const Int n = to_int(field(1, "n"), "n");
  auto a = int_list(field(2, "a"), "a");
  auto b = int_list(field(3, "b"), "b");
  if (n < 1 || a.size() != static_cast<std::size_t>(n) || b.size() != static_cast<std::size_t>(n)) {
    throw ParseError("word exponent lists must have n entries");
  }
  try {
    return PauliWord(Dimension(d), std::move(a), std::move(b));
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

std::string format_word(const PauliWord& w) {
  std::ostringstream out;
  out << "d=" << w.dim().d() << " n=" << w.n() << " a=";
  for (std::size_t i = 0; i < w.n(); ++i) out << (i ? "," : "") << w.xexp()[i];
  out << " b=";
  for (std::size_t i = 0; i < w.n(); ++i) out << (i ? "," : "") << w.zexp()[i];
  return out.str();
}

}  // namespace qcliff

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

#include <gtest/gtest.h>

#include <sstream>

#include "qcliff/errors.hpp"
#include "qcliff/text_io.hpp"
#include "test_support.hpp"

namespace qcliff {
namespace {

ModMatrix parse(const std::string& text) {
  std::istringstream in(text);
  return parse_matrix(in);
}

TEST(MatrixText, ParsesWithComments) {
  const auto m = parse("# example\nd 6 n 1\n\n10 9\n# row two\n3 4\n");
  EXPECT_EQ(m, ModMatrix::from_rows(Dimension(6), {{10, 9}, {3, 4}}));
}

TEST(MatrixText, RoundTrip) {
  testing::Rng rng(41);
  for (Int d = 2; d <= 7; ++d) {
    const auto m = testing::random_symplectic(rng, 2, Dimension(d)).matrix();
    EXPECT_EQ(parse(format_matrix(m)), m);
  }
}

TEST(MatrixText, Rejects) {
  EXPECT_THROW(parse(""), ParseError);
  EXPECT_THROW(parse("d 6\n1 0\n0 1\n"), ParseError);
  EXPECT_THROW(parse("d 6 n 1\n1 0\n"), ParseError);
  EXPECT_THROW(parse("d 6 n 1\n1 0 0\n0 1\n"), ParseError);
  EXPECT_THROW(parse("d 6 n 1\n12 0\n0 1\n"), ParseError);
  EXPECT_THROW(parse("d 6 n 1\n-1 0\n0 1\n"), ParseError);
  EXPECT_THROW(parse("d 6 n 1\n1 x\n0 1\n"), ParseError);
  EXPECT_THROW(parse("d 1 n 1\n0 0\n0 0\n"), ParseError);
  EXPECT_THROW(parse("d 6 n 1\n1 0\n0 1\n5\n"), ParseError);
}

TEST(ProgramText, RoundTrip) {
  testing::Rng rng(42);
  const Dimension d5(5);
  const auto seq = testing::random_program(rng, 3, d5, 30);
  std::istringstream in(format_program(seq));
  EXPECT_EQ(parse_program(in, 3, d5), seq);
}

TEST(ProgramText, FormatAndErrors) {
  EXPECT_EQ(format_gate(Fourier{1}), "F 1");
  EXPECT_EQ(format_gate(Phase{0, 5}), "P 0 5");
  EXPECT_EQ(format_gate(Sum{0, 1, 11}), "C 0 1 11");
  auto bad = [](const std::string& text) {
    std::istringstream in(text);
    return parse_program(in, 2, Dimension(3));
  };
  EXPECT_TRUE(bad("# nothing\n\n").empty());
  EXPECT_THROW(bad("F 2\n"), ParseError);
  EXPECT_THROW(bad("C 1 1 1\n"), ParseError);
  EXPECT_THROW(bad("P 0\n"), ParseError);
  EXPECT_THROW(bad("Q 0\n"), ParseError);
  EXPECT_THROW(bad("F -1\n"), ParseError);
}

TEST(WordText, ParseAndFormat) {
  const auto w = parse_word("d=6 n=2 a=1,0 b=0,3");
  EXPECT_EQ(w, PauliWord(Dimension(6), {1, 0}, {0, 3}));
  EXPECT_EQ(format_word(w), "d=6 n=2 a=1,0 b=0,3");
  EXPECT_EQ(parse_word("d=5 n=1 a=7 b=-1"), PauliWord(Dimension(5), {2}, {4}));
  EXPECT_THROW(parse_word("d=6 n=2 a=1 b=0,3"), ParseError);
  EXPECT_THROW(parse_word("d=6 n=2 b=1,0 a=0,3"), ParseError);
  EXPECT_THROW(parse_word("d=1 n=1 a=0 b=0"), ParseError);
  EXPECT_THROW(parse_word("d=6 n=1 a=1,"), ParseError);
  EXPECT_THROW(parse_word("d=6 n=1 a= b=1"), ParseError);
}

}  // namespace
}  // namespace qcliff

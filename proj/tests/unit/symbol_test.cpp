// Copyright 2026 The fockop Authors
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

#include "fockop/symbol.hpp"

#include <gtest/gtest.h>

#include <random>

namespace fockop {
namespace {

GaussianRational gi(long re, long im) { return GaussianRational(BigRational(re), BigRational(im)); }

TEST(ParseSymbolTest, SingleTerm) {
  const auto p = parse_symbol("z1*conj(z1)", 1);
  ASSERT_EQ(p.term_count(), 1u);
  EXPECT_EQ(p.coefficient({1}, {1}), GaussianRational(1));
}

TEST(ParseSymbolTest, CollectsTerms) {
  const auto p = parse_symbol("2 + 3*i*z2^2", 2);
  ASSERT_EQ(p.term_count(), 2u);
  EXPECT_EQ(p.coefficient({0, 0}, {0, 0}), GaussianRational(2));
  EXPECT_EQ(p.coefficient({0, 2}, {0, 0}), gi(0, 3));
}

TEST(ParseSymbolTest, CancellationGivesZero) {
  EXPECT_TRUE(parse_symbol("z1 - z1", 1).is_zero());
  EXPECT_EQ(parse_symbol("z1 - z1", 1).to_string(), "0");
}

TEST(ParseSymbolTest, ConjPowerAndParentheses) {
  EXPECT_EQ(parse_symbol("conj(z1)^2", 2), SymbolPolynomial::monomial({0, 0}, {2, 0}));
  // (z + conj(z))^2 = z^2 + 2 z conj(z) + conj(z)^2
  const auto p = parse_symbol("(z + conj(z))^2", 1);
  EXPECT_EQ(p.coefficient({2}, {0}), GaussianRational(1));
  EXPECT_EQ(p.coefficient({1}, {1}), GaussianRational(2));
  EXPECT_EQ(p.coefficient({0}, {2}), GaussianRational(1));
  EXPECT_EQ(parse_symbol("-1/2*z", 1).coefficient({1}, {0}), GaussianRational(BigRational(BigInt(-1), BigInt(2))));
}

TEST(ParseSymbolTest, ErrorsCarryPositions) {
  try {
    parse_symbol("z1 + * z2", 2);
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 5u);
  }
  EXPECT_THROW(parse_symbol("z3", 2), ParseError);
  EXPECT_THROW(parse_symbol("z0", 2), ParseError);
  EXPECT_THROW(parse_symbol("z", 2), ParseError);
  EXPECT_THROW(parse_symbol("z^-1", 1), ParseError);
  EXPECT_THROW(parse_symbol("conj(z+1)", 1), ParseError);
  EXPECT_THROW(parse_symbol("1/0", 1), ParseError);
  EXPECT_THROW(parse_symbol("(z", 1), ParseError);
  EXPECT_THROW(parse_symbol("", 1), ParseError);
  EXPECT_THROW(parse_symbol("2.5*z", 1), ParseError);
}

TEST(ParseSymbolTest, NegativeExponentMessage) {
  try {
    parse_symbol("z^-2", 1);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("negative exponent"), std::string::npos);
  }
}

SymbolPolynomial random_symbol(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<int> exp(0, 3);
  std::uniform_int_distribution<long> c(-9, 9);
  SymbolPolynomial p(n);
  for (int k = 0; k < 4; ++k) {
    std::vector<MultiIndex::value_type> b(n);
    std::vector<MultiIndex::value_type> g(n);
    for (std::size_t j = 0; j < n; ++j) {
      b[j] = exp(rng);
      g[j] = exp(rng);
    }
    p.add_term(MultiIndex(b), MultiIndex(g), GaussianRational(BigRational(BigInt(c(rng)), BigInt(1 + (c(rng) + 9) % 4)),
                                                              BigRational(c(rng))));
  }
  return p;
}

TEST(ParseSymbolTest, PrintParseRoundTrip) {
  std::mt19937_64 rng(17);
  for (std::size_t n : {1u, 2u, 3u}) {
    for (int i = 0; i < 100; ++i) {
      const auto p = random_symbol(rng, n);
      ASSERT_EQ(parse_symbol(p.to_string(), n), p) << p.to_string();
    }
  }
}

TEST(ConjugateTest, Examples) {
  EXPECT_EQ(conjugate(parse_symbol("conj(z)", 1)), parse_symbol("z", 1));
  EXPECT_EQ(conjugate(parse_symbol("3*i*z1^2*conj(z2)", 2)), parse_symbol("-3*i*conj(z1)^2*z2", 2));
  EXPECT_EQ(conjugate(parse_symbol("5", 1)), parse_symbol("5", 1));
}

TEST(ConjugateTest, Involution) {
  std::mt19937_64 rng(19);
  for (int i = 0; i < 50; ++i) {
    const auto p = random_symbol(rng, 2);
    ASSERT_EQ(conjugate(conjugate(p)), p);
  }
}

TEST(HolomorphicSplitTest, Examples) {
  auto s = holomorphic_split(parse_symbol("z^2 + z*conj(z)", 1));
  EXPECT_EQ(s.pure_holomorphic, parse_symbol("z^2", 1));
  EXPECT_EQ(s.remainder, parse_symbol("z*conj(z)", 1));
  s = holomorphic_split(parse_symbol("conj(z)", 1));
  EXPECT_TRUE(s.pure_holomorphic.is_zero());
  EXPECT_EQ(s.remainder, parse_symbol("conj(z)", 1));
  s = holomorphic_split(parse_symbol("7", 1));
  EXPECT_EQ(s.pure_holomorphic, parse_symbol("7", 1));
  EXPECT_TRUE(s.remainder.is_zero());
}

TEST(HolomorphicSplitTest, PartsSumToInput) {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 50; ++i) {
    const auto p = random_symbol(rng, 2);
    const auto s = holomorphic_split(p);
    ASSERT_EQ(s.pure_holomorphic + s.remainder, p);
    for (const auto& [key, c] : s.remainder.terms()) ASSERT_FALSE(key.antiholomorphic.is_zero());
    ASSERT_EQ(is_holomorphic(p), s.remainder.is_zero());
  }
}

TEST(IsConstantTest, Examples) {
  EXPECT_TRUE(is_constant(parse_symbol("5", 1)));
  EXPECT_FALSE(is_constant(parse_symbol("z1", 2)));
  EXPECT_TRUE(is_constant(SymbolPolynomial(2)));
}

TEST(GradedDecomposeTest, LinearUnivariate) {
  const auto d = graded_decompose(parse_symbol("z + conj(z)", 1), 1);
  EXPECT_EQ(d.min_degree, -1);
  EXPECT_EQ(d.max_degree, 1);
  ASSERT_EQ(d.pieces.size(), 3u);
  EXPECT_EQ(d.pieces[0].degree, -1);
  EXPECT_EQ(d.pieces[0].piece, parse_symbol("conj(z)", 1));
  EXPECT_TRUE(d.pieces[1].piece.is_zero());
  EXPECT_EQ(d.pieces[2].piece, parse_symbol("z", 1));
}

TEST(GradedDecomposeTest, MixedDegrees) {
  const auto d = graded_decompose(parse_symbol("z*conj(z) + z^2*conj(z)", 1), 1);
  EXPECT_EQ(d.min_degree, 0);
  EXPECT_EQ(d.max_degree, 1);
  ASSERT_EQ(d.pieces.size(), 2u);
  EXPECT_EQ(d.pieces[0].piece, parse_symbol("z*conj(z)", 1));
  EXPECT_EQ(d.pieces[1].piece, parse_symbol("z^2*conj(z)", 1));
}

TEST(GradedDecomposeTest, Constant) {
  const auto d = graded_decompose(parse_symbol("4", 1), 1);
  EXPECT_EQ(d.min_degree, 0);
  EXPECT_EQ(d.max_degree, 0);
  ASSERT_EQ(d.pieces.size(), 1u);
  EXPECT_EQ(d.pieces[0].piece, parse_symbol("4", 1));
}

TEST(GradedDecomposeTest, PiecesHaveFixedDegree) {
  std::mt19937_64 rng(29);
  for (int i = 0; i < 50; ++i) {
    const auto p = random_symbol(rng, 1);
    if (p.is_zero()) continue;
    const auto d = graded_decompose(p, 1);
    SymbolPolynomial sum(1);
    for (const auto& piece : d.pieces) {
      for (const auto& [key, c] : piece.piece.terms()) {
        ASSERT_EQ(static_cast<long>(key.holomorphic[0]) - static_cast<long>(key.antiholomorphic[0]), piece.degree);
      }
      sum += piece.piece;
    }
    ASSERT_EQ(sum, p);
  }
}

TEST(GradedDecomposeTest, ProductSymbolInTwoVariables) {
  // (z1 + conj(z1)) * (2 + z2)
  const auto p = parse_symbol("(z1 + conj(z1)) * (2 + z2)", 2);
  const auto d = graded_decompose(p, 1);
  EXPECT_EQ(d.factor * d.cofactor, p);
  EXPECT_EQ(d.min_degree, -1);
  EXPECT_EQ(d.max_degree, 1);
  EXPECT_THROW(graded_decompose(parse_symbol("z1 + z2", 2), 1), std::invalid_argument);
  EXPECT_THROW(graded_decompose(SymbolPolynomial(1), 1), std::invalid_argument);
}

}  // namespace
}  // namespace fockop

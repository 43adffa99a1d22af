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

#include "fockop/factorial_ratio.hpp"

#include <gtest/gtest.h>

#include <random>

namespace fockop {
namespace {

// Oracle: full factorials straight from GMP.
BigRational naive(const FactorialRatio& r) {
  BigInt num = 1;
  BigInt den = 1;
  for (auto t : r.numerator_terms()) {
    BigInt f;
    mpz_fac_ui(f.get_mpz_t(), t);
    num *= f;
  }
  for (auto t : r.denominator_terms()) {
    BigInt f;
    mpz_fac_ui(f.get_mpz_t(), t);
    den *= f;
  }
  return BigRational(num, den);
}

BigRational from_primes(const std::vector<std::pair<std::uint64_t, long>>& exps) {
  BigInt num = 1;
  BigInt den = 1;
  for (const auto& [p, e] : exps) {
    BigInt pe;
    mpz_ui_pow_ui(pe.get_mpz_t(), p, static_cast<unsigned long>(std::labs(e)));
    (e > 0 ? num : den) *= pe;
  }
  return BigRational(num, den);
}

FactorialRatio random_ratio(std::mt19937_64& rng, std::uint64_t max_term) {
  std::uniform_int_distribution<int> count(0, 4);
  std::uniform_int_distribution<std::uint64_t> term(0, max_term);
  std::vector<std::uint64_t> num(count(rng));
  std::vector<std::uint64_t> den(count(rng));
  for (auto& t : num) t = term(rng);
  for (auto& t : den) t = term(rng);
  return FactorialRatio(num, den);
}

TEST(FactorialRatioTest, SpecExamples) {
  EXPECT_EQ(FactorialRatio({5}, {3}).evaluate(), BigRational(20));
  EXPECT_EQ(FactorialRatio().evaluate(), BigRational(1));
  EXPECT_EQ(FactorialRatio({10, 3}, {7, 6}).evaluate(), BigRational(6));
}

TEST(FactorialRatioTest, MatchesNaiveEvaluation) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 500; ++i) {
    const FactorialRatio r = random_ratio(rng, 60);
    ASSERT_EQ(r.evaluate(), naive(r)) << i;
  }
}

TEST(FactorialRatioTest, ProductIsMultisetUnion) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    const FactorialRatio a = random_ratio(rng, 40);
    const FactorialRatio b = random_ratio(rng, 40);
    ASSERT_EQ((a * b).evaluate(), a.evaluate() * b.evaluate());
  }
}

TEST(FactorialRatioTest, OrderOfTermsIsIrrelevant) {
  EXPECT_EQ(FactorialRatio({3, 10, 0}, {6, 7}).evaluate(), FactorialRatio({0, 10, 3}, {7, 6}).evaluate());
}

TEST(FactorialRatioTest, PrimeExponentsReconstructValue) {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 200; ++i) {
    const FactorialRatio r = random_ratio(rng, 300);
    ASSERT_EQ(from_primes(r.prime_exponents()), naive(r)) << i;
  }
  // Wide ranges take the Legendre path.
  const FactorialRatio wide({9000, 17}, {4000, 2});
  EXPECT_EQ(from_primes(wide.prime_exponents()), naive(wide));
}

TEST(FactorialRatioTest, MultiIndexTerms) {
  FactorialRatio r;
  r.times(MultiIndex{3, 4}).over(5);
  EXPECT_EQ(r.evaluate(), BigRational(BigInt(6 * 24), BigInt(120)));
  EXPECT_EQ(r.inverse().evaluate() * r.evaluate(), BigRational(1));
  EXPECT_EQ(r.squared().evaluate(), r.evaluate() * r.evaluate());
}

TEST(FactorialRatioTest, RisingProduct) {
  EXPECT_EQ(rising_product(3, 6), BigInt(4 * 5 * 6));
  EXPECT_EQ(rising_product(9, 9), BigInt(1));
  EXPECT_EQ(primes_up_to(20), (std::vector<std::uint64_t>{2, 3, 5, 7, 11, 13, 17, 19}));
}

}  // namespace
}  // namespace fockop

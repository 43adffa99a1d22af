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

#include "fockop/hankel.hpp"

#include <gtest/gtest.h>

#include <stdexcept>

namespace fockop {
namespace {

TEST(HankelClosedFormTest, ConjugateLinearPairIsIdentity) {
  const MonomialPair p{{0}, {1}, {0}, {1}};
  EXPECT_EQ(hankel_coeff_closed_form(p, {5}, SpaceParams(1, 0)), RadicalCoefficient(1));
  EXPECT_EQ(hankel_target(p, {5}), MultiIndex{5});
}

TEST(HankelClosedFormTest, VanishesWhenNuIsZero) {
  for (std::size_t m : {0u, 1u, 3u}) {
    const SpaceParams sp(2, m);
    const MonomialPair p{{1, 0}, {2, 1}, {0, 2}, {0, 0}};
    EXPECT_TRUE(hankel_coeff_closed_form(p, {40, 37}, sp).is_zero());
  }
}

TEST(HankelClosedFormTest, SquaredConjugatePair) {
  // Ladder oracle at m = 0: T_{z^2 conj(z)^2} e_a = (a+2)(a+1) e_a and
  // T_{z^2} T_{conj(z)^2} e_a = a(a-1) e_a, so A_a = 4a + 2.
  const MonomialPair p{{0}, {2}, {0}, {2}};
  const SpaceParams sp(1, 0);
  EXPECT_EQ(hankel_coeff_closed_form(p, {6}, sp), RadicalCoefficient(26));
  for (MultiIndex::value_type a = 4; a < 60; ++a) {
    ASSERT_EQ(hankel_coeff_closed_form(p, {a}, sp), RadicalCoefficient(static_cast<long>(4 * a + 2)));
  }
}

TEST(HankelClosedFormTest, OutsideValidityRangeRejected) {
  const MonomialPair p{{0}, {2}, {0}, {2}};
  EXPECT_THROW(hankel_coeff_closed_form(p, {3}, SpaceParams(1, 0)), std::domain_error);
  EXPECT_EQ(hankel_validity_bound(p), MultiIndex{4});
  EXPECT_EQ(hankel_validity_bound(MonomialPair{{1, 0}, {0, 2}, {2, 1}, {0, 0}}), (MultiIndex{3, 3}));
}

TEST(HankelClosedFormTest, AgreesWithCompositionSmallSweep) {
  for (std::size_t m : {0u, 1u, 2u}) {
    const SpaceParams sp(1, m);
    const auto exps = multi_indices_in_box(1, 2);
    for (const auto& b : exps)
      for (const auto& g : exps)
        for (const auto& u : exps)
          for (const auto& v : exps) {
            const MonomialPair p{b, g, u, v};
            const auto f_sym = SymbolPolynomial::monomial(b, g);
            const auto g_sym = SymbolPolynomial::monomial(u, v);
            for (MultiIndex::value_type a = hankel_validity_bound(p)[0]; a <= 12; ++a) {
              const BasisExpansion composed = hankel_product_apply(f_sym, g_sym, BasisExpansion::basis(sp, {a}));
              ASSERT_EQ(composed.coefficient(hankel_target(p, {a})), hankel_coeff_closed_form(p, {a}, sp));
              ASSERT_LE(composed.size(), 1u);
            }
          }
  }
}

TEST(HankelProductApplyTest, HolomorphicFGivesZero) {
  const SpaceParams sp(2, 1);
  const auto f = parse_symbol("z1^2", 2);
  const auto g = parse_symbol("z1*conj(z1) + conj(z2)^3 - 4", 2);
  for (const auto& a : multi_indices_up_to_order(2, 5)) {
    ASSERT_TRUE(hankel_product_apply(f, g, BasisExpansion::basis(sp, a)).is_zero());
  }
}

TEST(HankelProductApplyTest, ConjugateSymbolOnVacuum) {
  // alpha = 0 lies outside the closed form's range.
  const auto zbar = parse_symbol("conj(z)", 1);
  EXPECT_EQ(hankel_product_apply(zbar, zbar, BasisExpansion::basis(SpaceParams(1, 0), {0})),
            BasisExpansion::basis(SpaceParams(1, 0), {0}));
  EXPECT_EQ(hankel_product_apply(zbar, zbar, BasisExpansion::basis(SpaceParams(1, 2), {10})),
            BasisExpansion::basis(SpaceParams(1, 2), {10}));
}

TEST(HankelProductApplyTest, VacuumPicksUpSobolevOrder) {
  // H*_{conj z} H_{conj z} e_0 = T_{|z|^2} e_0 = (m+1) e_0.
  const auto zbar = parse_symbol("conj(z)", 1);
  for (std::size_t m = 0; m < 5; ++m) {
    BasisExpansion expected(SpaceParams(1, m));
    expected.add({0}, RadicalCoefficient(static_cast<long>(m + 1)));
    ASSERT_EQ(hankel_product_apply(zbar, zbar, BasisExpansion::basis(SpaceParams(1, m), {0})), expected);
  }
}

TEST(HankelProductApplyTest, ConjugateLinearCase) {
  // f = z + 2 conj(z), g = z^3 - conj(z): H*_f H_g = conj(2) * (-1) on e_a, a >= 1.
  const auto f = parse_symbol("z + 2*conj(z)", 1);
  const auto g = parse_symbol("z^3 - conj(z)", 1);
  for (std::size_t m : {0u, 3u}) {
    const SpaceParams sp(1, m);
    for (MultiIndex::value_type a = 1; a < 30; ++a) {
      BasisExpansion expected(sp);
      expected.add({a}, RadicalCoefficient(-2));
      ASSERT_EQ(hankel_product_apply(f, g, BasisExpansion::basis(sp, {a})), expected);
    }
  }
}

}  // namespace
}  // namespace fockop

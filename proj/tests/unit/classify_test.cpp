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

#include "fockop/classify.hpp"

#include <gtest/gtest.h>

#include "fockop/toeplitz.hpp"

#include <vector>

namespace fockop {
namespace {

SymbolPolynomial sym(const char* text, std::size_t n) { return parse_symbol(text, n); }

TEST(ClassifyToeplitzProductTest, Examples) {
  const Verdict both = classify_toeplitz_product(sym("3", 1), sym("5", 1));
  EXPECT_TRUE(both.holds);
  EXPECT_EQ(both.matched_case, VerdictCase::BothConstant);
  EXPECT_EQ(both.property, Property::Bounded);

  const Verdict z1 = classify_toeplitz_product(sym("z1", 2), sym("1", 2));
  EXPECT_FALSE(z1.holds);
  EXPECT_EQ(z1.matched_case, VerdictCase::NonConstantSymbol);
  EXPECT_FALSE(z1.witness.empty());

  EXPECT_TRUE(classify_toeplitz_product(sym("0", 1), sym("0", 1)).holds);
  EXPECT_FALSE(classify_toeplitz_product(sym("0", 1), sym("conj(z)", 1)).holds);
}

TEST(ClassifyHankelProductTest, Examples) {
  const Verdict fh = classify_hankel_product(sym("z1^2", 2), sym("conj(z1)*z1", 2));
  EXPECT_TRUE(fh.holds);
  EXPECT_EQ(fh.matched_case, VerdictCase::FHolomorphic);

  const Verdict lin = classify_hankel_product(sym("z + 2*conj(z)", 1), sym("z^3 - conj(z)", 1));
  EXPECT_TRUE(lin.holds);
  EXPECT_EQ(lin.matched_case, VerdictCase::N1ConjugateLinear);

  const Verdict n2 = classify_hankel_product(sym("conj(z1)", 2), sym("conj(z1)", 2));
  EXPECT_FALSE(n2.holds);
  EXPECT_EQ(n2.matched_case, VerdictCase::NotCovered);
}

TEST(ClassifyHankelProductTest, CasesReportedInOrder) {
  EXPECT_EQ(classify_hankel_product(sym("z", 1), sym("z^2", 1)).matched_case, VerdictCase::FHolomorphic);
  EXPECT_EQ(classify_hankel_product(sym("conj(z)^2", 1), sym("z + 4", 1)).matched_case, VerdictCase::GHolomorphic);
  EXPECT_EQ(classify_hankel_product(sym("conj(z)^2", 1), sym("conj(z)", 1)).matched_case, VerdictCase::NotCovered);
  EXPECT_EQ(classify_hankel_product(sym("z*conj(z)", 1), sym("conj(z)", 1)).matched_case, VerdictCase::NotCovered);
}

TEST(ClassifySingleTest, Examples) {
  EXPECT_FALSE(classify_single(SingleKind::Toeplitz, sym("conj(z2)", 2)).holds);
  EXPECT_EQ(classify_single(SingleKind::Toeplitz, sym("7", 2)).matched_case, VerdictCase::Constant);

  const Verdict hb = classify_single(SingleKind::HankelBounded, sym("z^5 + 7*conj(z)", 1));
  EXPECT_TRUE(hb.holds);
  EXPECT_EQ(hb.property, Property::Bounded);

  const Verdict hc = classify_single(SingleKind::HankelCompact, sym("z^5 + 7*conj(z)", 1));
  EXPECT_FALSE(hc.holds);
  EXPECT_EQ(hc.property, Property::Compact);
  EXPECT_EQ(hc.matched_case, VerdictCase::NotHolomorphic);
  EXPECT_TRUE(classify_single(SingleKind::HankelCompact, sym("z^5 - i", 1)).holds);
}

TEST(VerdictCaseTest, EachCaseHasOneTruthValue) {
  const std::vector<VerdictCase> all = {
      VerdictCase::BothConstant,  VerdictCase::NonConstantSymbol, VerdictCase::Constant,
      VerdictCase::FHolomorphic,  VerdictCase::GHolomorphic,      VerdictCase::Holomorphic,
      VerdictCase::N1ConjugateLinear, VerdictCase::NotCovered,    VerdictCase::NotHolomorphic};
  const std::vector<const char*> symbols = {"0", "3", "z", "conj(z)", "z + 2*conj(z)", "z*conj(z)", "conj(z)^2 - z"};
  for (const char* a : symbols) {
    const auto f = sym(a, 1);
    for (const char* b : symbols) {
      const auto g = sym(b, 1);
      for (const Verdict& v : {classify_toeplitz_product(f, g), classify_hankel_product(f, g)}) {
        ASSERT_EQ(v.holds, case_holds(v.matched_case)) << a << " / " << b;
      }
    }
    for (auto kind : {SingleKind::Toeplitz, SingleKind::HankelBounded, SingleKind::HankelCompact}) {
      const Verdict v = classify_single(kind, f);
      ASSERT_EQ(v.holds, case_holds(v.matched_case)) << a;
    }
  }
  for (auto c : all) EXPECT_FALSE(to_string(c).empty());
}

TEST(VerdictCaseTest, ScaleInvariance) {
  const std::vector<const char*> symbols = {"z1", "conj(z1)", "z1^2 + conj(z2)", "3", "z1*conj(z1) - 2*z2",
                                            "conj(z1)^2*conj(z2)"};
  const std::vector<GaussianRational> scalars = {GaussianRational(-3), GaussianRational(BigRational(1), BigRational(2)),
                                                 GaussianRational(BigRational(BigInt(5), BigInt(7)))};
  for (const char* a : symbols) {
    for (const char* b : symbols) {
      const auto f = sym(a, 2);
      const auto g = sym(b, 2);
      const Verdict t = classify_toeplitz_product(f, g);
      const Verdict h = classify_hankel_product(f, g);
      for (const auto& c : scalars) {
        ASSERT_EQ(classify_toeplitz_product(f * c, g).holds, t.holds);
        ASSERT_EQ(classify_hankel_product(f * c, g).matched_case, h.matched_case);
        ASSERT_EQ(classify_hankel_product(f, g * c).matched_case, h.matched_case);
      }
    }
  }
  const auto f = sym("z + 2*conj(z)", 1);
  const auto g = sym("z^3 - conj(z)", 1);
  EXPECT_EQ(classify_hankel_product(f * GaussianRational(BigRational(0), BigRational(1)), g).matched_case,
            VerdictCase::N1ConjugateLinear);
}

TEST(ClassifyOperatorTest, OperatorsAct) {
  const SpaceParams sp(1, 0);
  const auto e2 = BasisExpansion::basis(sp, {2});
  const auto f = sym("z*conj(z)", 1);
  const BasisExpansion once = apply_operator(single_operator(SingleKind::Toeplitz, f), e2);
  EXPECT_EQ(apply_operator(toeplitz_product_operator(f, f), e2), toeplitz_apply(f, once));
  const auto zbar = sym("conj(z)", 1);
  EXPECT_EQ(apply_operator(hankel_product_operator(zbar, zbar), e2), e2);
  EXPECT_EQ(apply_operator(single_operator(SingleKind::HankelCompact, zbar), e2), e2);
}

}  // namespace
}  // namespace fockop

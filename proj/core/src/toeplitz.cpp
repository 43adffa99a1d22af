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

#include "fockop/toeplitz.hpp"

#include <stdexcept>

namespace fockop {

namespace {

void require_dimension(const MultiIndex& a, const SpaceParams& sp) {
  if (a.dimension() != sp.n) {
    throw std::invalid_argument("multi-index " + a.to_string() + " does not match dimension n = " +
                                std::to_string(sp.n));
  }
}

}  // namespace

FactorialRatio monomial_norm2_ratio(const MultiIndex& a, const SpaceParams& sp) {
  require_dimension(a, sp);
  const std::uint64_t n1 = sp.n - 1;
  const std::uint64_t mn1 = sp.m + sp.n - 1;
  FactorialRatio r;
  r.times(a).times(n1).times(mn1 + a.order());
  r.over(mn1).over(n1 + a.order());
  return r;
}

BigRational monomial_inner(const MultiIndex& a, const MultiIndex& b, const SpaceParams& sp) {
  require_dimension(a, sp);
  require_dimension(b, sp);
  if (a != b) return BigRational(0);
  return monomial_norm2_ratio(a, sp).evaluate();
}

FactorialRatio basis_coefficient_squared(const MultiIndex& alpha, const SpaceParams& sp) {
  return monomial_norm2_ratio(alpha, sp).inverse();
}

RadicalCoefficient basis_coefficient(const MultiIndex& alpha, const SpaceParams& sp) {
  return RadicalCoefficient::from_sqrt(basis_coefficient_squared(alpha, sp));
}

std::optional<BasisTerm> toeplitz_mono_apply(const MultiIndex& beta, const MultiIndex& gamma, const MultiIndex& alpha,
                                             const SpaceParams& sp) {
  require_dimension(beta, sp);
  require_dimension(gamma, sp);
  require_dimension(alpha, sp);
  std::optional<MultiIndex> eta = alpha.shifted(beta, gamma);
  if (!eta) return std::nullopt;
  // coefficient^2 = c_alpha^2 c_eta^2 <z^{alpha+beta}, z^{alpha+beta}>^2
  const FactorialRatio inner = monomial_norm2_ratio(alpha + beta, sp);
  FactorialRatio squared = basis_coefficient_squared(alpha, sp);
  squared *= basis_coefficient_squared(*eta, sp);
  squared *= inner;
  squared *= inner;
  return BasisTerm{std::move(*eta), RadicalCoefficient::from_sqrt(squared)};
}

BasisExpansion toeplitz_apply(const SymbolPolynomial& f, const BasisExpansion& v) {
  const SpaceParams& sp = v.space();
  if (f.dimension() != sp.n) {
    throw std::invalid_argument("symbol dimension " + std::to_string(f.dimension()) +
                                " does not match space dimension " + std::to_string(sp.n));
  }
  BasisExpansion out(sp);
  for (const auto& [alpha, coeff] : v.coefficients()) {
    for (const auto& [key, c] : f.terms()) {
      auto term = toeplitz_mono_apply(key.holomorphic, key.antiholomorphic, alpha, sp);
      if (!term) continue;
      RadicalCoefficient contribution = coeff * term->coefficient;
      contribution *= c;
      out.add(term->target, contribution);
    }
  }
  return out;
}

}  // namespace fockop

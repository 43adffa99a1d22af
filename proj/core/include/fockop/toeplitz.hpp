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

#ifndef FOCKOP_TOEPLITZ_HPP
#define FOCKOP_TOEPLITZ_HPP

#include <optional>

#include "fockop/basis_expansion.hpp"
#include "fockop/factorial_ratio.hpp"
#include "fockop/symbol.hpp"

namespace fockop {

/// <z^a, z^a>_m as a factorial ratio:
///   a! (n-1)! (m+n-1+|a|)! / ((m+n-1)! (n-1+|a|)!)
FactorialRatio monomial_norm2_ratio(const MultiIndex& a, const SpaceParams& sp);

/// <z^a, z^b>_m in F^{2,m}. Distinct monomials are orthogonal.
BigRational monomial_inner(const MultiIndex& a, const MultiIndex& b, const SpaceParams& sp);

/// Square of the normalizing constant of e_alpha = c_alpha z^alpha, i.e.
/// 1 / <z^alpha, z^alpha>_m.
FactorialRatio basis_coefficient_squared(const MultiIndex& alpha, const SpaceParams& sp);

/// c_alpha in canonical radical form.
RadicalCoefficient basis_coefficient(const MultiIndex& alpha, const SpaceParams& sp);

struct BasisTerm {
  MultiIndex target;
  RadicalCoefficient coefficient;
};

/// T_{z^beta conj(z)^gamma} e_alpha = coefficient * e_{alpha+beta-gamma}, or
/// nullopt (the zero vector) unless alpha + beta - gamma >= 0.
///
/// The coefficient is c_alpha c_eta <z^{alpha+beta}, z^{alpha+beta}>_m with
/// eta = alpha + beta - gamma; its radicand depends only on alpha and eta.
std::optional<BasisTerm> toeplitz_mono_apply(const MultiIndex& beta, const MultiIndex& gamma, const MultiIndex& alpha,
                                             const SpaceParams& sp);

/// T_f v, by linearity over the terms of f and of v.
BasisExpansion toeplitz_apply(const SymbolPolynomial& f, const BasisExpansion& v);

}  // namespace fockop

#endif  // FOCKOP_TOEPLITZ_HPP

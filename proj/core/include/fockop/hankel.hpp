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

#ifndef FOCKOP_HANKEL_HPP
#define FOCKOP_HANKEL_HPP

#include "fockop/basis_expansion.hpp"
#include "fockop/symbol.hpp"

namespace fockop {

/// Exponents of the monomial pair f = z^beta conj(z)^gamma, g = z^mu conj(z)^nu.
struct MonomialPair {
  MultiIndex beta;
  MultiIndex gamma;
  MultiIndex mu;
  MultiIndex nu;
};

/// Componentwise |gamma - beta| + |mu - nu|: the smallest alpha for which the
/// closed form of H*_f H_g e_alpha applies.
MultiIndex hankel_validity_bound(const MonomialPair& p);

/// Componentwise maximum of hankel_validity_bound over all term pairs of f, g.
MultiIndex hankel_validity_bound(const SymbolPolynomial& f, const SymbolPolynomial& g);

/// Index alpha + gamma + mu - beta - nu that H*_f H_g maps e_alpha onto.
MultiIndex hankel_target(const MonomialPair& p, const MultiIndex& alpha);

/// Closed-form coefficient A_alpha with H*_f H_g e_alpha = A_alpha e_target,
/// evaluated directly from factorials:
///
///   A = (X - Y) * sqrt(S), target tau = alpha + gamma + mu - beta - nu,
///   X = (a+g+u)! (M+|a+g+u|)! / (a! (N+|a+g+u|)!)
///   Y = (a+u)! (a+g+u-v)! / (a! (a+u-v)!)
///       * (M+|a+u|)! (N+|a+u-v|)! (M+|a+g+u-v|)! / ((N+|a+u|)! (M+|a+u-v|)! (N+|a+g+u-v|)!)
///   S = a! (N+|a|)! (N+|tau|)! / (tau! (M+|a|)! (M+|tau|)!)
///
/// with a = alpha, g = gamma, u = mu, v = nu, N = n-1, M = m+n-1.
/// Throws std::domain_error when alpha is below hankel_validity_bound(p);
/// use hankel_product_apply there.
RadicalCoefficient hankel_coeff_closed_form(const MonomialPair& p, const MultiIndex& alpha, const SpaceParams& sp);

/// H*_f H_g v = T_{conj(f) g} v - T_{conj(f)} T_g v. Valid for every v.
BasisExpansion hankel_product_apply(const SymbolPolynomial& f, const SymbolPolynomial& g, const BasisExpansion& v);

}  // namespace fockop

#endif  // FOCKOP_HANKEL_HPP

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

#include <stdexcept>

#include "fockop/factorial_ratio.hpp"
#include "fockop/toeplitz.hpp"

namespace fockop {

namespace {

MultiIndex::value_type abs_diff(MultiIndex::value_type a, MultiIndex::value_type b) { return a > b ? a - b : b - a; }

void require_dimension(const MultiIndex& a, std::size_t n) {
  if (a.dimension() != n) throw std::invalid_argument("multi-index dimension mismatch in Hankel product");
}

}  // namespace

MultiIndex hankel_validity_bound(const MonomialPair& p) {
  const std::size_t n = p.beta.dimension();
  require_dimension(p.gamma, n);
  require_dimension(p.mu, n);
  require_dimension(p.nu, n);
  std::vector<MultiIndex::value_type> bound(n);
  for (std::size_t j = 0; j < n; ++j) bound[j] = abs_diff(p.gamma[j], p.beta[j]) + abs_diff(p.mu[j], p.nu[j]);
  return MultiIndex(std::move(bound));
}

MultiIndex hankel_validity_bound(const SymbolPolynomial& f, const SymbolPolynomial& g) {
  if (f.dimension() != g.dimension()) throw std::invalid_argument("symbol dimension mismatch");
  MultiIndex bound(f.dimension());
  for (const auto& [kf, cf] : f.terms()) {
    for (const auto& [kg, cg] : g.terms()) {
      bound = bound.max_with(
          hankel_validity_bound({kf.holomorphic, kf.antiholomorphic, kg.holomorphic, kg.antiholomorphic}));
    }
  }
  return bound;
}

MultiIndex hankel_target(const MonomialPair& p, const MultiIndex& alpha) {
  auto target = alpha.shifted(p.gamma + p.mu, p.beta + p.nu);
  if (!target) throw std::domain_error("Hankel target index is negative for alpha = " + alpha.to_string());
  return *target;
}

RadicalCoefficient hankel_coeff_closed_form(const MonomialPair& p, const MultiIndex& alpha, const SpaceParams& sp) {
  require_dimension(alpha, sp.n);
  const MultiIndex bound = hankel_validity_bound(p);
  require_dimension(bound, sp.n);
  if (!dominates(alpha, bound)) {
    throw std::domain_error("alpha = " + alpha.to_string() + " is outside the closed-form range alpha >= " +
                            bound.to_string());
  }
  const std::uint64_t N = sp.n - 1;
  const std::uint64_t M = sp.m + sp.n - 1;

  const MultiIndex a_gu = alpha + p.gamma + p.mu;
  const MultiIndex a_u = alpha + p.mu;
  const MultiIndex a_uv = *alpha.shifted(p.mu, p.nu);
  const MultiIndex a_guv = *a_uv.shifted(p.gamma, MultiIndex(sp.n));
  const MultiIndex tau = hankel_target(p, alpha);

  FactorialRatio x;
  x.times(a_gu).times(M + a_gu.order()).over(alpha).over(N + a_gu.order());

  FactorialRatio y;
  y.times(a_u).times(a_guv).over(alpha).over(a_uv);
  y.times(M + a_u.order()).times(N + a_uv.order()).times(M + a_guv.order());
  y.over(N + a_u.order()).over(M + a_uv.order()).over(N + a_guv.order());

  FactorialRatio s;
  s.times(alpha).times(N + alpha.order()).times(N + tau.order());
  s.over(tau).over(M + alpha.order()).over(M + tau.order());

  const BigRational difference = x.evaluate() - y.evaluate();
  if (difference.is_zero()) return RadicalCoefficient();
  return RadicalCoefficient::from_sqrt(s) * GaussianRational(difference);
}

BasisExpansion hankel_product_apply(const SymbolPolynomial& f, const SymbolPolynomial& g, const BasisExpansion& v) {
  if (f.dimension() != g.dimension()) throw std::invalid_argument("symbol dimension mismatch");
  const SymbolPolynomial f_bar = conjugate(f);
  BasisExpansion out = toeplitz_apply(f_bar * g, v);
  out -= toeplitz_apply(f_bar, toeplitz_apply(g, v));
  return out;
}

}  // namespace fockop

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

#include <stdexcept>

namespace fockop {

namespace {

std::string first_nonconstant_term(const SymbolPolynomial& p) {
  for (const auto& [key, c] : p.terms()) {
    if (!key.holomorphic.is_zero() || !key.antiholomorphic.is_zero()) {
      return SymbolPolynomial::monomial(key.holomorphic, key.antiholomorphic, c).to_string();
    }
  }
  return "";
}

std::string first_antiholomorphic_term(const SymbolPolynomial& p) {
  for (const auto& [key, c] : p.terms()) {
    if (!key.antiholomorphic.is_zero()) {
      return SymbolPolynomial::monomial(key.holomorphic, key.antiholomorphic, c).to_string();
    }
  }
  return "";
}

// Non-holomorphic part is a (possibly zero) multiple of conj(z), n = 1.
bool conjugate_linear_remainder(const SymbolPolynomial& p) {
  if (p.dimension() != 1) return false;
  const SymbolPolynomial rest = holomorphic_split(p).remainder;
  for (const auto& [key, c] : rest.terms()) {
    if (key.holomorphic[0] != 0 || key.antiholomorphic[0] != 1) return false;
  }
  return true;
}

std::string offending_remainder_term(const SymbolPolynomial& p) {
  for (const auto& [key, c] : holomorphic_split(p).remainder.terms()) {
    if (p.dimension() != 1 || key.holomorphic[0] != 0 || key.antiholomorphic[0] != 1) {
      return SymbolPolynomial::monomial(key.holomorphic, key.antiholomorphic, c).to_string();
    }
  }
  return "";
}

Verdict make(Property property, VerdictCase c, std::string witness) {
  return Verdict{property, case_holds(c), c, std::move(witness)};
}

void require_same_dimension(const SymbolPolynomial& f, const SymbolPolynomial& g) {
  if (f.dimension() != g.dimension()) throw std::invalid_argument("symbols f and g differ in dimension");
}

}  // namespace

bool case_holds(VerdictCase c) {
  switch (c) {
    case VerdictCase::BothConstant:
    case VerdictCase::Constant:
    case VerdictCase::FHolomorphic:
    case VerdictCase::GHolomorphic:
    case VerdictCase::Holomorphic:
    case VerdictCase::N1ConjugateLinear:
      return true;
    case VerdictCase::NonConstantSymbol:
    case VerdictCase::NotCovered:
    case VerdictCase::NotHolomorphic:
      return false;
  }
  return false;
}

std::string_view to_string(VerdictCase c) {
  switch (c) {
    case VerdictCase::BothConstant: return "BothConstant";
    case VerdictCase::NonConstantSymbol: return "NonConstantSymbol";
    case VerdictCase::Constant: return "Constant";
    case VerdictCase::FHolomorphic: return "FHolomorphic";
    case VerdictCase::GHolomorphic: return "GHolomorphic";
    case VerdictCase::Holomorphic: return "Holomorphic";
    case VerdictCase::N1ConjugateLinear: return "N1ConjugateLinear";
    case VerdictCase::NotCovered: return "NotCovered";
    case VerdictCase::NotHolomorphic: return "NotHolomorphic";
  }
  return "?";
}

std::string_view to_string(Property p) { return p == Property::Bounded ? "bounded" : "compact"; }

Verdict classify_toeplitz_product(const SymbolPolynomial& f, const SymbolPolynomial& g) {
  require_same_dimension(f, g);
  if (!is_constant(f)) {
    return make(Property::Bounded, VerdictCase::NonConstantSymbol, "f has non-constant term " + first_nonconstant_term(f));
  }
  if (!is_constant(g)) {
    return make(Property::Bounded, VerdictCase::NonConstantSymbol, "g has non-constant term " + first_nonconstant_term(g));
  }
  return make(Property::Bounded, VerdictCase::BothConstant, "f = " + f.to_string() + ", g = " + g.to_string());
}

Verdict classify_hankel_product(const SymbolPolynomial& f, const SymbolPolynomial& g) {
  require_same_dimension(f, g);
  if (is_holomorphic(f)) return make(Property::Bounded, VerdictCase::FHolomorphic, "H_f = 0");
  if (is_holomorphic(g)) return make(Property::Bounded, VerdictCase::GHolomorphic, "H_g = 0");
  if (f.dimension() == 1 && conjugate_linear_remainder(f) && conjugate_linear_remainder(g)) {
    const auto rf = holomorphic_split(f).remainder;
    const auto rg = holomorphic_split(g).remainder;
    return make(Property::Bounded, VerdictCase::N1ConjugateLinear,
                "non-holomorphic parts " + rf.to_string() + " and " + rg.to_string());
  }
  if (f.dimension() != 1) {
    return make(Property::Bounded, VerdictCase::NotCovered,
                "neither symbol is holomorphic and n = " + std::to_string(f.dimension()) + " != 1");
  }
  const std::string bad = conjugate_linear_remainder(f) ? offending_remainder_term(g) : offending_remainder_term(f);
  const char* which = conjugate_linear_remainder(f) ? "g" : "f";
  return make(Property::Bounded, VerdictCase::NotCovered,
              std::string(which) + " has non-holomorphic term " + bad + " that is not a multiple of conj(z)");
}

Verdict classify_single(SingleKind kind, const SymbolPolynomial& f) {
  switch (kind) {
    case SingleKind::Toeplitz:
      if (is_constant(f)) return make(Property::Bounded, VerdictCase::Constant, "f = " + f.to_string());
      return make(Property::Bounded, VerdictCase::NonConstantSymbol, "f has non-constant term " + first_nonconstant_term(f));
    case SingleKind::HankelBounded:
      if (is_holomorphic(f)) return make(Property::Bounded, VerdictCase::Holomorphic, "H_f = 0");
      if (conjugate_linear_remainder(f)) {
        return make(Property::Bounded, VerdictCase::N1ConjugateLinear,
                    "non-holomorphic part " + holomorphic_split(f).remainder.to_string());
      }
      if (f.dimension() != 1) {
        return make(Property::Bounded, VerdictCase::NotCovered,
                    "f is not holomorphic and n = " + std::to_string(f.dimension()) + " != 1");
      }
      return make(Property::Bounded, VerdictCase::NotCovered,
                  "f has non-holomorphic term " + offending_remainder_term(f) + " that is not a multiple of conj(z)");
    case SingleKind::HankelCompact:
      if (is_holomorphic(f)) return make(Property::Compact, VerdictCase::Holomorphic, "H_f = 0");
      return make(Property::Compact, VerdictCase::NotHolomorphic,
                  "f has non-holomorphic term " + first_antiholomorphic_term(f));
  }
  throw std::invalid_argument("unknown classifier kind");
}

OperatorExpr toeplitz_product_operator(const SymbolPolynomial& f, const SymbolPolynomial& g) {
  return OperatorExpr::compose(OperatorExpr::toeplitz(f), OperatorExpr::toeplitz(g));
}

OperatorExpr hankel_product_operator(const SymbolPolynomial& f, const SymbolPolynomial& g) {
  return OperatorExpr::hankel_product(f, g);
}

OperatorExpr single_operator(SingleKind kind, const SymbolPolynomial& f) {
  if (kind == SingleKind::Toeplitz) return OperatorExpr::toeplitz(f);
  return OperatorExpr::hankel_product(f, f);
}

}  // namespace fockop

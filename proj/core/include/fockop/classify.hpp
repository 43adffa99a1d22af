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

#ifndef FOCKOP_CLASSIFY_HPP
#define FOCKOP_CLASSIFY_HPP

#include <string>
#include <string_view>

#include "fockop/operator_expr.hpp"
#include "fockop/symbol.hpp"

namespace fockop {

enum class Property { Bounded, Compact };

/// Reason behind a verdict. Each case implies exactly one truth value of
/// the property it answers (see case_holds()).
enum class VerdictCase {
  BothConstant,       // T_f T_g with f, g constant
  NonConstantSymbol,  // some Toeplitz symbol is not constant
  Constant,           // single T_f with constant f
  FHolomorphic,       // H*_f H_g with f holomorphic
  GHolomorphic,       // H*_f H_g with g holomorphic
  Holomorphic,        // single H_f with holomorphic f
  N1ConjugateLinear,  // n = 1 and both non-holomorphic parts are multiples of conj(z)
  NotCovered,         // no bounded case applies
  NotHolomorphic,     // H_f with non-holomorphic f is not compact
};

bool case_holds(VerdictCase c);
std::string_view to_string(VerdictCase c);
std::string_view to_string(Property p);

struct Verdict {
  Property property = Property::Bounded;
  bool holds = false;  // bounded (or compact, for Property::Compact)
  VerdictCase matched_case = VerdictCase::NotCovered;
  std::string witness;
};

enum class SingleKind { Toeplitz, HankelBounded, HankelCompact };

/// T_f T_g is bounded iff f and g are both constant.
Verdict classify_toeplitz_product(const SymbolPolynomial& f, const SymbolPolynomial& g);

/// H*_f H_g is bounded iff f is holomorphic, g is holomorphic, or n = 1 and
/// f = f1 + a conj(z), g = g1 + b conj(z) with f1, g1 holomorphic. Cases are
/// tried in that order and the first match is reported.
Verdict classify_hankel_product(const SymbolPolynomial& f, const SymbolPolynomial& g);

Verdict classify_single(SingleKind kind, const SymbolPolynomial& f);

/// The operator whose basis-vector norms corroborate a verdict:
/// T_f T_g, H*_f H_g, T_f, or H*_f H_f for the single Hankel kinds.
OperatorExpr toeplitz_product_operator(const SymbolPolynomial& f, const SymbolPolynomial& g);
OperatorExpr hankel_product_operator(const SymbolPolynomial& f, const SymbolPolynomial& g);
OperatorExpr single_operator(SingleKind kind, const SymbolPolynomial& f);

}  // namespace fockop

#endif  // FOCKOP_CLASSIFY_HPP

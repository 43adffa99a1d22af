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

#ifndef FOCKOP_OPERATOR_EXPR_HPP
#define FOCKOP_OPERATOR_EXPR_HPP

#include <memory>
#include <string>
#include <string_view>
#include <variant>

#include "fockop/basis_expansion.hpp"
#include "fockop/symbol.hpp"

namespace fockop {

class OperatorExpr;

struct ToeplitzNode {
  SymbolPolynomial symbol;
};

/// H*_f H_g.
struct HankelProductNode {
  SymbolPolynomial f;
  SymbolPolynomial g;
};

/// left o right: applies right first.
struct CompositionNode {
  std::shared_ptr<const OperatorExpr> left;
  std::shared_ptr<const OperatorExpr> right;
};

/// Immutable expression tree over Toeplitz operators, Hankel products and
/// composition. All symbols share one dimension.
class OperatorExpr {
public:
  using Node = std::variant<ToeplitzNode, HankelProductNode, CompositionNode>;

  static OperatorExpr toeplitz(SymbolPolynomial f);
  static OperatorExpr hankel_product(SymbolPolynomial f, SymbolPolynomial g);
  static OperatorExpr compose(OperatorExpr left, OperatorExpr right);

  const Node& node() const noexcept { return node_; }
  std::size_t dimension() const noexcept { return dimension_; }

  /// Round-trips through parse_operator, e.g. "T(z*conj(z)) * HP(conj(z); conj(z))".
  std::string to_string() const;

private:
  OperatorExpr(Node node, std::size_t dimension) : node_(std::move(node)), dimension_(dimension) {}

  Node node_;
  std::size_t dimension_;
};

/// Parses "T(<symbol>)", "HP(<symbol>; <symbol>)" joined by "*" (or "∘")
/// for composition. Throws ParseError with offsets into `text`.
OperatorExpr parse_operator(std::string_view text, std::size_t dimension);

/// Recursive evaluation; Composition(L, R) applies R then L.
BasisExpansion apply_operator(const OperatorExpr& expr, const BasisExpansion& v);

/// Coefficient of e_eta in expr e_alpha.
RadicalCoefficient matrix_entry(const OperatorExpr& expr, const MultiIndex& alpha, const MultiIndex& eta,
                                const SpaceParams& sp);

}  // namespace fockop

#endif  // FOCKOP_OPERATOR_EXPR_HPP

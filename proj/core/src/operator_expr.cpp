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

#include "fockop/operator_expr.hpp"

#include <cctype>
#include <stdexcept>
#include <vector>

#include "fockop/hankel.hpp"
#include "fockop/toeplitz.hpp"

namespace fockop {

namespace {

constexpr std::string_view kCompose = "\xE2\x88\x98";  // U+2218 RING OPERATOR

struct Span {
  std::size_t begin;
  std::size_t end;
};

Span trim(std::string_view text, Span s) {
  while (s.begin < s.end && std::isspace(static_cast<unsigned char>(text[s.begin]))) ++s.begin;
  while (s.end > s.begin && std::isspace(static_cast<unsigned char>(text[s.end - 1]))) --s.end;
  return s;
}

// Splits on `sep` (or the composition glyph when `compose`) at paren depth 0.
std::vector<Span> split_top_level(std::string_view text, Span s, char sep, bool compose) {
  std::vector<Span> parts;
  int depth = 0;
  std::size_t start = s.begin;
  for (std::size_t i = s.begin; i < s.end; ++i) {
    const char c = text[i];
    if (c == '(') {
      ++depth;
    } else if (c == ')') {
      if (--depth < 0) throw ParseError(i, "unbalanced ')'");
    } else if (depth == 0 && c == sep) {
      parts.push_back({start, i});
      start = i + 1;
    } else if (depth == 0 && compose && text.substr(i, kCompose.size()) == kCompose) {
      parts.push_back({start, i});
      start = i + kCompose.size();
      i += kCompose.size() - 1;
    }
  }
  if (depth != 0) throw ParseError(s.end, "unbalanced '('");
  parts.push_back({start, s.end});
  return parts;
}

SymbolPolynomial parse_symbol_at(std::string_view text, Span s, std::size_t n) {
  const Span t = trim(text, s);
  if (t.begin == t.end) throw ParseError(t.begin, "empty symbol");
  try {
    return parse_symbol(text.substr(t.begin, t.end - t.begin), n);
  } catch (const ParseError& e) {
    throw ParseError(t.begin + e.position(), e.detail());
  }
}

OperatorExpr parse_factor(std::string_view text, Span s, std::size_t n) {
  const Span t = trim(text, s);
  if (t.begin == t.end) throw ParseError(t.begin, "expected T(...) or HP(...; ...)");
  const std::string_view body = text.substr(t.begin, t.end - t.begin);
  std::size_t open = 0;
  bool hankel = false;
  if (body.starts_with("HP")) {
    hankel = true;
    open = 2;
  } else if (body.starts_with("T")) {
    open = 1;
  } else {
    throw ParseError(t.begin, "expected T(...) or HP(...; ...)");
  }
  while (open < body.size() && std::isspace(static_cast<unsigned char>(body[open]))) ++open;
  if (open >= body.size() || body[open] != '(') throw ParseError(t.begin + open, "expected '('");
  if (body.back() != ')') throw ParseError(t.end - 1, "expected ')' closing the operator");
  const Span inner{t.begin + open + 1, t.end - 1};
  if (!hankel) return OperatorExpr::toeplitz(parse_symbol_at(text, inner, n));
  const auto args = split_top_level(text, inner, ';', false);
  if (args.size() != 2) throw ParseError(inner.begin, "HP takes two symbols separated by ';'");
  return OperatorExpr::hankel_product(parse_symbol_at(text, args[0], n), parse_symbol_at(text, args[1], n));
}

}  // namespace

OperatorExpr OperatorExpr::toeplitz(SymbolPolynomial f) {
  const std::size_t n = f.dimension();
  return OperatorExpr(ToeplitzNode{std::move(f)}, n);
}

OperatorExpr OperatorExpr::hankel_product(SymbolPolynomial f, SymbolPolynomial g) {
  if (f.dimension() != g.dimension()) throw std::invalid_argument("Hankel product symbols differ in dimension");
  const std::size_t n = f.dimension();
  return OperatorExpr(HankelProductNode{std::move(f), std::move(g)}, n);
}

OperatorExpr OperatorExpr::compose(OperatorExpr left, OperatorExpr right) {
  if (left.dimension_ != right.dimension_) throw std::invalid_argument("composed operators differ in dimension");
  const std::size_t n = left.dimension_;
  return OperatorExpr(CompositionNode{std::make_shared<const OperatorExpr>(std::move(left)),
                                      std::make_shared<const OperatorExpr>(std::move(right))},
                      n);
}

std::string OperatorExpr::to_string() const {
  struct Printer {
    std::string operator()(const ToeplitzNode& t) const { return "T(" + t.symbol.to_string() + ")"; }
    std::string operator()(const HankelProductNode& h) const {
      return "HP(" + h.f.to_string() + "; " + h.g.to_string() + ")";
    }
    std::string operator()(const CompositionNode& c) const {
      return c.left->to_string() + " * " + c.right->to_string();
    }
  };
  return std::visit(Printer{}, node_);
}

OperatorExpr parse_operator(std::string_view text, std::size_t dimension) {
  const auto parts = split_top_level(text, {0, text.size()}, '*', true);
  // a * b * c = a o (b o c)
  OperatorExpr result = parse_factor(text, parts.back(), dimension);
  for (std::size_t i = parts.size() - 1; i-- > 0;) {
    result = OperatorExpr::compose(parse_factor(text, parts[i], dimension), std::move(result));
  }
  return result;
}

BasisExpansion apply_operator(const OperatorExpr& expr, const BasisExpansion& v) {
  if (expr.dimension() != v.space().n) {
    throw std::invalid_argument("operator dimension " + std::to_string(expr.dimension()) +
                                " does not match space dimension " + std::to_string(v.space().n));
  }
  struct Evaluator {
    const BasisExpansion& v;
    BasisExpansion operator()(const ToeplitzNode& t) const { return toeplitz_apply(t.symbol, v); }
    BasisExpansion operator()(const HankelProductNode& h) const { return hankel_product_apply(h.f, h.g, v); }
    BasisExpansion operator()(const CompositionNode& c) const {
      return apply_operator(*c.left, apply_operator(*c.right, v));
    }
  };
  return std::visit(Evaluator{v}, expr.node());
}

RadicalCoefficient matrix_entry(const OperatorExpr& expr, const MultiIndex& alpha, const MultiIndex& eta,
                                const SpaceParams& sp) {
  if (eta.dimension() != sp.n) throw std::invalid_argument("eta dimension mismatch");
  return apply_operator(expr, BasisExpansion::basis(sp, alpha)).coefficient(eta);
}

}  // namespace fockop

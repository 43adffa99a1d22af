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

#ifndef FOCKOP_SYMBOL_HPP
#define FOCKOP_SYMBOL_HPP

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fockop/multi_index.hpp"
#include "fockop/rational.hpp"

namespace fockop {

/// Exponent pair (beta, gamma) of the monomial z^beta * conj(z)^gamma.
struct MonomialKey {
  MultiIndex holomorphic;      // beta
  MultiIndex antiholomorphic;  // gamma

  friend bool operator==(const MonomialKey&, const MonomialKey&) = default;
  friend auto operator<=>(const MonomialKey&, const MonomialKey&) = default;
};

/// Finite sum of c * z^beta * conj(z)^gamma on C^n with Gaussian-rational c.
///
/// Stored flat: products of per-variable factors are expanded on
/// construction. Zero coefficients are never stored, so the zero polynomial
/// is the empty map.
class SymbolPolynomial {
public:
  using TermMap = std::map<MonomialKey, GaussianRational>;

  explicit SymbolPolynomial(std::size_t dimension);

  static SymbolPolynomial constant(std::size_t dimension, const GaussianRational& c);
  static SymbolPolynomial monomial(const MultiIndex& beta, const MultiIndex& gamma,
                                   const GaussianRational& c = GaussianRational(1));
  /// z_j (1-based j).
  static SymbolPolynomial variable(std::size_t dimension, std::size_t j);
  /// conj(z_j) (1-based j).
  static SymbolPolynomial conj_variable(std::size_t dimension, std::size_t j);

  std::size_t dimension() const noexcept { return dimension_; }
  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t term_count() const noexcept { return terms_.size(); }

  /// Coefficient of z^beta conj(z)^gamma (zero if absent).
  GaussianRational coefficient(const MultiIndex& beta, const MultiIndex& gamma) const;

  /// Adds c to the coefficient of the given monomial, dropping it on cancellation.
  void add_term(const MultiIndex& beta, const MultiIndex& gamma, const GaussianRational& c);

  SymbolPolynomial& operator+=(const SymbolPolynomial& other);
  SymbolPolynomial& operator-=(const SymbolPolynomial& other);
  SymbolPolynomial& operator*=(const GaussianRational& scalar);
  SymbolPolynomial operator-() const;
  friend SymbolPolynomial operator+(SymbolPolynomial a, const SymbolPolynomial& b) { return a += b; }
  friend SymbolPolynomial operator-(SymbolPolynomial a, const SymbolPolynomial& b) { return a -= b; }
  friend SymbolPolynomial operator*(const SymbolPolynomial& a, const SymbolPolynomial& b);
  friend SymbolPolynomial operator*(SymbolPolynomial a, const GaussianRational& c) { return a *= c; }
  SymbolPolynomial pow(unsigned exponent) const;

  friend bool operator==(const SymbolPolynomial&, const SymbolPolynomial&) = default;

  /// Canonical text accepted by parse_symbol: terms in key order, "z" for
  /// n = 1 and "z1".."zn" otherwise.
  std::string to_string() const;

private:
  std::size_t dimension_;
  TermMap terms_;
};

/// Syntax error with 0-based character offset into the parsed text.
class ParseError : public std::invalid_argument {
public:
  ParseError(std::size_t position, const std::string& message);
  std::size_t position() const noexcept { return position_; }
  const std::string& detail() const noexcept { return detail_; }

private:
  std::size_t position_;
  std::string detail_;
};

/// Parses the symbol grammar:
///   expr   := ["-"] term (("+"|"-") term)*
///   term   := factor ("*" factor)*
///   factor := base ("^" uint)?
///   base   := var | "conj(" var ")" | number | "i" | "(" expr ")"
///   var    := "z" uint | "z"        (bare "z" only when n = 1)
///   number := uint | uint "/" uint
/// Whitespace is insignificant. Throws ParseError.
SymbolPolynomial parse_symbol(std::string_view text, std::size_t dimension);

/// Term (beta, gamma, c) -> (gamma, beta, conj(c)).
SymbolPolynomial conjugate(const SymbolPolynomial& p);

struct HolomorphicSplit {
  SymbolPolynomial pure_holomorphic;  // terms with gamma = 0
  SymbolPolynomial remainder;
};

HolomorphicSplit holomorphic_split(const SymbolPolynomial& p);

bool is_holomorphic(const SymbolPolynomial& p);

/// True iff every term has beta = gamma = 0 (the zero polynomial included).
bool is_constant(const SymbolPolynomial& p);

/// Sum of the terms of a per-variable factor whose holomorphic-minus-
/// antiholomorphic degree in that variable equals `degree`.
struct GradedPiece {
  std::size_t variable;  // 1-based s
  long degree;           // theta_s
  SymbolPolynomial piece;
};

struct GradedDecomposition {
  std::vector<GradedPiece> pieces;  // degree ascending from min_degree to max_degree
  long min_degree;                  // i_{0,s}
  long max_degree;                  // i_{1,s}
  /// The factor of p in variable s whose pieces these are: p = factor * cofactor.
  SymbolPolynomial factor;
  SymbolPolynomial cofactor;
};

/// Splits p = q_s(z_s, conj z_s) * r(other variables) and grades q_s by
/// beta_s - gamma_s. For n = 1, q_s = p. Throws std::invalid_argument for
/// the zero polynomial or when p does not factor through variable s.
GradedDecomposition graded_decompose(const SymbolPolynomial& p, std::size_t variable);

}  // namespace fockop

#endif  // FOCKOP_SYMBOL_HPP

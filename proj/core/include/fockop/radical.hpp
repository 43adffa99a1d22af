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

#ifndef FOCKOP_RADICAL_HPP
#define FOCKOP_RADICAL_HPP

#include <complex>
#include <string>

#include "fockop/factorial_ratio.hpp"
#include "fockop/rational.hpp"

namespace fockop {

/// Thrown when an internal invariant of the exact engine is broken (for
/// example, merging coefficients with different radicands). Indicates a
/// bug rather than bad input.
class InvariantViolation : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

/// Exact scalar rational_part * sqrt(radicand).
///
/// Canonical form: radicand is a square-free positive integer and the zero
/// value is (0, 0). Two coefficients are equal iff their canonical forms
/// are componentwise equal.
class RadicalCoefficient {
public:
  /// Zero.
  RadicalCoefficient() = default;
  /// A rational value (radicand 1, or the zero form).
  RadicalCoefficient(GaussianRational value);  // NOLINT(google-explicit-constructor)
  RadicalCoefficient(long value) : RadicalCoefficient(GaussianRational(value)) {}  // NOLINT

  /// Canonicalizes rational_part * sqrt(radicand). The radicand's numerator
  /// and denominator are factored by trial division, so they must stay below
  /// ~1e18; engine paths use from_sqrt() instead. Throws std::domain_error for
  /// a negative or unfactorable radicand.
  static RadicalCoefficient normalize(const GaussianRational& rational_part, const BigRational& radicand);

  /// sqrt(value of r), canonical, using the prime factorization of r.
  static RadicalCoefficient from_sqrt(const FactorialRatio& r);

  const GaussianRational& rational_part() const noexcept { return rational_; }
  const BigRational& radicand() const noexcept { return radicand_; }

  bool is_zero() const { return rational_.is_zero(); }
  /// |value|^2, exact.
  BigRational norm2() const { return rational_.norm2() * radicand_; }
  std::complex<double> to_complex() const;

  RadicalCoefficient conj() const;
  RadicalCoefficient operator-() const;

  /// Throws InvariantViolation unless radicands agree or one side is zero.
  RadicalCoefficient& operator+=(const RadicalCoefficient& other);
  RadicalCoefficient& operator-=(const RadicalCoefficient& other);
  RadicalCoefficient& operator*=(const RadicalCoefficient& other);
  RadicalCoefficient& operator*=(const GaussianRational& scalar);

  friend RadicalCoefficient operator+(RadicalCoefficient a, const RadicalCoefficient& b) { return a += b; }
  friend RadicalCoefficient operator-(RadicalCoefficient a, const RadicalCoefficient& b) { return a -= b; }
  friend RadicalCoefficient operator*(RadicalCoefficient a, const RadicalCoefficient& b) { return a *= b; }
  friend RadicalCoefficient operator*(RadicalCoefficient a, const GaussianRational& b) { return a *= b; }
  friend bool operator==(const RadicalCoefficient&, const RadicalCoefficient&) = default;

  /// "2", "3/2*sqrt(2)", "(1/6+1/6*i)*sqrt(6)".
  std::string to_string() const;

private:
  RadicalCoefficient(GaussianRational rational_part, BigRational radicand)
      : rational_(std::move(rational_part)), radicand_(std::move(radicand)) {}

  GaussianRational rational_;
  BigRational radicand_;
};

/// Splits a positive integer into square * squarefree. Returns the root of
/// the square part and writes the square-free part to `squarefree`.
/// Throws std::domain_error when the value is too large to factor.
BigInt extract_square(const BigInt& value, BigInt& squarefree);

}  // namespace fockop

#endif  // FOCKOP_RADICAL_HPP

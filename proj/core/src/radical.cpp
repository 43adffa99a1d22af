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

#include "fockop/radical.hpp"

#include <cmath>
#include <stdexcept>

namespace fockop {

namespace {

// Trial division covers every prime up to the cube root of the value, so the
// remaining cofactor has at most two prime factors.
const BigInt kFactorLimit = BigInt("1000000000000000000");

BigInt pow_ui(unsigned long base, unsigned long exp) {
  BigInt out;
  mpz_ui_pow_ui(out.get_mpz_t(), base, exp);
  return out;
}

}  // namespace

BigInt extract_square(const BigInt& value, BigInt& squarefree) {
  if (sgn(value) <= 0) throw std::domain_error("extract_square requires a positive integer");
  if (value > kFactorLimit) {
    throw std::domain_error("radicand too large for exact square-free factorization: " + value.get_str());
  }
  static_assert(sizeof(unsigned long) >= 8, "extract_square assumes 64-bit unsigned long");
  unsigned long long rest = value.get_ui();
  unsigned long long root = 1;
  unsigned long long free_part = 1;
  for (unsigned long long p = 2; p * p * p <= rest; p += (p == 2 ? 1 : 2)) {
    unsigned e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    for (unsigned k = 0; k < e / 2; ++k) root *= p;
    if (e % 2) free_part *= p;
  }
  // rest is 1, p, p*q or p^2.
  const auto s = static_cast<unsigned long long>(std::llround(std::sqrt(static_cast<long double>(rest))));
  unsigned long long r = s > 1 ? s - 1 : 1;
  while (r * r < rest) ++r;
  if (rest > 1 && r * r == rest) {
    root *= r;
  } else {
    free_part *= rest;
  }
  squarefree = BigInt(std::to_string(free_part), 10);
  return BigInt(std::to_string(root), 10);
}

RadicalCoefficient::RadicalCoefficient(GaussianRational value) : rational_(std::move(value)) {
  radicand_ = rational_.is_zero() ? BigRational(0) : BigRational(1);
}

RadicalCoefficient RadicalCoefficient::normalize(const GaussianRational& rational_part, const BigRational& radicand) {
  if (radicand.sign() < 0) throw std::domain_error("negative radicand");
  if (rational_part.is_zero() || radicand.is_zero()) return RadicalCoefficient();
  BigInt num_free;
  BigInt den_free;
  const BigInt num_root = extract_square(radicand.numerator(), num_free);
  const BigInt den_root = extract_square(radicand.denominator(), den_free);
  // sqrt(u/v) = sqrt(u*v)/v; the reduced u and v are coprime, so u*v stays square-free.
  GaussianRational scaled = rational_part * GaussianRational(BigRational(num_root, BigInt(den_root * den_free)));
  return RadicalCoefficient(std::move(scaled), BigRational(BigInt(num_free * den_free)));
}

RadicalCoefficient RadicalCoefficient::from_sqrt(const FactorialRatio& r) {
  BigInt num_root = 1;
  BigInt den_root = 1;
  BigInt num_free = 1;
  BigInt den_free = 1;
  for (const auto& [p, e] : r.prime_exponents()) {
    const unsigned long half = static_cast<unsigned long>(std::labs(e) / 2);
    const bool odd = std::labs(e) % 2 == 1;
    BigInt& root = e > 0 ? num_root : den_root;
    BigInt& free_part = e > 0 ? num_free : den_free;
    if (half) root *= pow_ui(static_cast<unsigned long>(p), half);
    if (odd) free_part *= static_cast<unsigned long>(p);
  }
  return RadicalCoefficient(GaussianRational(BigRational(num_root, BigInt(den_root * den_free))),
                            BigRational(BigInt(num_free * den_free)));
}

std::complex<double> RadicalCoefficient::to_complex() const {
  if (is_zero()) return {0.0, 0.0};
  const double root = std::exp(0.5 * radicand_.log());
  return {rational_.re.to_double() * root, rational_.im.to_double() * root};
}

RadicalCoefficient RadicalCoefficient::conj() const { return RadicalCoefficient(rational_.conj(), radicand_); }

RadicalCoefficient RadicalCoefficient::operator-() const { return RadicalCoefficient(-rational_, radicand_); }

RadicalCoefficient& RadicalCoefficient::operator+=(const RadicalCoefficient& other) {
  if (other.is_zero()) return *this;
  if (is_zero()) return *this = other;
  if (radicand_ != other.radicand_) {
    throw InvariantViolation("radicand mismatch when merging coefficients: sqrt(" + radicand_.to_string() +
                             ") vs sqrt(" + other.radicand_.to_string() + ")");
  }
  rational_ += other.rational_;
  if (rational_.is_zero()) radicand_ = BigRational(0);
  return *this;
}

RadicalCoefficient& RadicalCoefficient::operator-=(const RadicalCoefficient& other) { return *this += -other; }

RadicalCoefficient& RadicalCoefficient::operator*=(const RadicalCoefficient& other) {
  if (is_zero() || other.is_zero()) return *this = RadicalCoefficient();
  // sqrt(u1) sqrt(u2) = g sqrt((u1/g)(u2/g)) with g = gcd(u1, u2).
  const BigInt u1 = radicand_.numerator();
  const BigInt u2 = other.radicand_.numerator();
  const BigInt g = gcd(u1, u2);
  rational_ *= other.rational_;
  rational_ *= GaussianRational(BigRational(g));
  radicand_ = BigRational(BigInt((u1 / g) * (u2 / g)));
  return *this;
}

RadicalCoefficient& RadicalCoefficient::operator*=(const GaussianRational& scalar) {
  rational_ *= scalar;
  if (rational_.is_zero()) radicand_ = BigRational(0);
  return *this;
}

std::string RadicalCoefficient::to_string() const {
  if (radicand_ == BigRational(1) || is_zero()) return rational_.to_string();
  std::string head;
  if (rational_ == GaussianRational(1)) {
    head = "";
  } else if (rational_ == GaussianRational(-1)) {
    head = "-";
  } else {
    head = rational_.to_string() + "*";
  }
  return head + "sqrt(" + radicand_.to_string() + ")";
}

}  // namespace fockop

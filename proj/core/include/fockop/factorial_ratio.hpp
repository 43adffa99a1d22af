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

#ifndef FOCKOP_FACTORIAL_RATIO_HPP
#define FOCKOP_FACTORIAL_RATIO_HPP

#include <cstdint>
#include <initializer_list>
#include <utility>
#include <vector>

#include "fockop/multi_index.hpp"
#include "fockop/rational.hpp"

namespace fockop {

/// prod t! (numerator terms) / prod t! (denominator terms).
///
/// Every coefficient produced by the operator engine is either such a
/// ratio or the square root of one. Terms are kept as multisets; the
/// stored order carries no meaning.
class FactorialRatio {
public:
  using term_type = std::uint64_t;

  FactorialRatio() = default;
  FactorialRatio(std::initializer_list<term_type> numerator, std::initializer_list<term_type> denominator)
      : numerator_(numerator), denominator_(denominator) {}
  FactorialRatio(std::vector<term_type> numerator, std::vector<term_type> denominator)
      : numerator_(std::move(numerator)), denominator_(std::move(denominator)) {}

  const std::vector<term_type>& numerator_terms() const noexcept { return numerator_; }
  const std::vector<term_type>& denominator_terms() const noexcept { return denominator_; }

  FactorialRatio& times(term_type t) {
    numerator_.push_back(t);
    return *this;
  }
  FactorialRatio& over(term_type t) {
    denominator_.push_back(t);
    return *this;
  }
  /// alpha! = prod alpha_i!
  FactorialRatio& times(const MultiIndex& alpha);
  FactorialRatio& over(const MultiIndex& alpha);

  /// Multiset union of numerators and of denominators.
  FactorialRatio& operator*=(const FactorialRatio& other);
  friend FactorialRatio operator*(FactorialRatio a, const FactorialRatio& b) { return a *= b; }
  FactorialRatio inverse() const { return FactorialRatio(denominator_, numerator_); }
  FactorialRatio squared() const { return *this * *this; }

  /// Exact value. Numerator and denominator terms are paired largest to
  /// largest and each pair contributes a rising product, so no factorial
  /// larger than the unmatched terms is ever formed.
  BigRational evaluate() const;

  /// Signed prime exponents of the value, via Legendre's formula, sorted by
  /// prime. Primes with zero exponent are omitted.
  std::vector<std::pair<std::uint64_t, long>> prime_exponents() const;

private:
  std::vector<term_type> numerator_;
  std::vector<term_type> denominator_;
};

/// (lo+1)(lo+2)...(hi) for lo <= hi; 1 when lo == hi.
BigInt rising_product(std::uint64_t lo, std::uint64_t hi);

/// Primes <= bound, ascending. Thread-safe; results are cached.
std::vector<std::uint64_t> primes_up_to(std::uint64_t bound);

}  // namespace fockop

#endif  // FOCKOP_FACTORIAL_RATIO_HPP

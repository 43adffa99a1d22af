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

#include "fockop/factorial_ratio.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace fockop {

namespace {

constexpr std::uint64_t kSieveBound = 1u << 20;

// Smallest prime factor for every integer below kSieveBound.
const std::vector<std::uint32_t>& smallest_prime_factor() {
  static const std::vector<std::uint32_t> spf = [] {
    std::vector<std::uint32_t> table(kSieveBound, 0);
    for (std::uint64_t i = 2; i < kSieveBound; ++i) {
      if (table[i] != 0) continue;
      for (std::uint64_t j = i; j < kSieveBound; j += i) {
        if (table[j] == 0) table[j] = static_cast<std::uint32_t>(i);
      }
    }
    return table;
  }();
  return spf;
}

std::vector<std::uint64_t> sieve(std::uint64_t bound) {
  std::vector<std::uint64_t> out;
  if (bound < 2) return out;
  if (bound < kSieveBound) {
    const auto& spf = smallest_prime_factor();
    for (std::uint64_t i = 2; i <= bound; ++i) {
      if (spf[i] == i) out.push_back(i);
    }
    return out;
  }
  std::vector<bool> composite(bound + 1, false);
  for (std::uint64_t i = 2; i <= bound; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (std::uint64_t j = i * i; j <= bound; j += i) composite[j] = true;
  }
  return out;
}

void add_factorization(std::uint64_t value, long sign, std::vector<std::pair<std::uint64_t, long>>& acc) {
  if (value < kSieveBound) {
    const auto& spf = smallest_prime_factor();
    while (value > 1) {
      const std::uint64_t p = spf[value];
      acc.emplace_back(p, sign);
      value /= p;
    }
    return;
  }
  for (std::uint64_t p = 2; p * p <= value; p += (p == 2 ? 1 : 2)) {
    while (value % p == 0) {
      acc.emplace_back(p, sign);
      value /= p;
    }
  }
  if (value > 1) acc.emplace_back(value, sign);
}

long legendre(std::uint64_t n, std::uint64_t p) {
  long e = 0;
  while (n >= p) {
    n /= p;
    e += static_cast<long>(n);
  }
  return e;
}

// Pairs sorted numerator terms against sorted denominator terms. Each pair
// (a, b) stands for a!/b!, and leftover terms stand for a!/0! or 0!/b!.
template <typename PairFn>
void for_each_pair(std::vector<std::uint64_t> num, std::vector<std::uint64_t> den, PairFn&& fn) {
  std::sort(num.begin(), num.end(), std::greater<>());
  std::sort(den.begin(), den.end(), std::greater<>());
  const std::size_t k = std::max(num.size(), den.size());
  for (std::size_t i = 0; i < k; ++i) {
    const std::uint64_t a = i < num.size() ? num[i] : 0;
    const std::uint64_t b = i < den.size() ? den[i] : 0;
    if (a != b) fn(a, b);
  }
}

BigInt product_range(std::uint64_t lo, std::uint64_t hi) {
  // Product of lo+1..hi by binary splitting.
  if (hi <= lo) return 1;
  if (hi - lo <= 16) {
    BigInt acc = 1;
    for (std::uint64_t k = lo + 1; k <= hi; ++k) acc *= static_cast<unsigned long>(k);
    return acc;
  }
  const std::uint64_t mid = lo + (hi - lo) / 2;
  return product_range(lo, mid) * product_range(mid, hi);
}

}  // namespace

BigInt rising_product(std::uint64_t lo, std::uint64_t hi) {
  if (hi < lo) throw std::invalid_argument("rising_product requires lo <= hi");
  return product_range(lo, hi);
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t bound) { return sieve(bound); }

FactorialRatio& FactorialRatio::times(const MultiIndex& alpha) {
  for (auto c : alpha.components()) numerator_.push_back(c);
  return *this;
}

FactorialRatio& FactorialRatio::over(const MultiIndex& alpha) {
  for (auto c : alpha.components()) denominator_.push_back(c);
  return *this;
}

FactorialRatio& FactorialRatio::operator*=(const FactorialRatio& other) {
  numerator_.insert(numerator_.end(), other.numerator_.begin(), other.numerator_.end());
  denominator_.insert(denominator_.end(), other.denominator_.begin(), other.denominator_.end());
  return *this;
}

BigRational FactorialRatio::evaluate() const {
  BigInt num = 1;
  BigInt den = 1;
  for_each_pair(numerator_, denominator_, [&](std::uint64_t a, std::uint64_t b) {
    if (a > b) {
      num *= product_range(b, a);
    } else {
      den *= product_range(a, b);
    }
  });
  return BigRational(num, den);
}

std::vector<std::pair<std::uint64_t, long>> FactorialRatio::prime_exponents() const {
  std::vector<std::pair<std::uint64_t, long>> acc;
  for_each_pair(numerator_, denominator_, [&](std::uint64_t a, std::uint64_t b) {
    const long sign = a > b ? 1 : -1;
    const std::uint64_t lo = std::min(a, b);
    const std::uint64_t hi = std::max(a, b);
    if (hi - lo <= 64) {
      for (std::uint64_t k = lo + 1; k <= hi; ++k) add_factorization(k, sign, acc);
      return;
    }
    for (std::uint64_t p : sieve(hi)) {
      const long e = legendre(hi, p) - legendre(lo, p);
      if (e != 0) acc.emplace_back(p, sign * e);
    }
  });
  std::sort(acc.begin(), acc.end());
  std::vector<std::pair<std::uint64_t, long>> merged;
  for (const auto& [p, e] : acc) {
    if (!merged.empty() && merged.back().first == p) {
      merged.back().second += e;
    } else {
      merged.emplace_back(p, e);
    }
  }
  std::erase_if(merged, [](const auto& pe) { return pe.second == 0; });
  return merged;
}

}  // namespace fockop

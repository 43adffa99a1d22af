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

#include "fockop/basis_expansion.hpp"

#include <stdexcept>

namespace fockop {

SpaceParams::SpaceParams(std::size_t dimension, std::size_t order) : n(dimension), m(order) {
  if (dimension < 1) throw std::invalid_argument("space dimension n must be >= 1");
}

BasisExpansion BasisExpansion::basis(SpaceParams space, const MultiIndex& alpha) {
  BasisExpansion v(space);
  v.add(alpha, RadicalCoefficient(1));
  return v;
}

RadicalCoefficient BasisExpansion::coefficient(const MultiIndex& alpha) const {
  auto it = coeffs_.find(alpha);
  return it == coeffs_.end() ? RadicalCoefficient() : it->second;
}

void BasisExpansion::require_compatible(const MultiIndex& alpha) const {
  if (alpha.dimension() != space_.n) {
    throw std::invalid_argument("basis index " + alpha.to_string() + " does not match dimension n = " +
                                std::to_string(space_.n));
  }
}

void BasisExpansion::require_compatible(const BasisExpansion& other) const {
  if (!(other.space_ == space_)) throw std::invalid_argument("basis expansions live in different spaces");
}

void BasisExpansion::add(const MultiIndex& alpha, const RadicalCoefficient& c) {
  require_compatible(alpha);
  if (c.is_zero()) return;
  auto [it, inserted] = coeffs_.try_emplace(alpha, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) coeffs_.erase(it);
}

BasisExpansion& BasisExpansion::operator+=(const BasisExpansion& other) {
  require_compatible(other);
  for (const auto& [alpha, c] : other.coeffs_) add(alpha, c);
  return *this;
}

BasisExpansion& BasisExpansion::operator-=(const BasisExpansion& other) {
  require_compatible(other);
  for (const auto& [alpha, c] : other.coeffs_) add(alpha, -c);
  return *this;
}

BasisExpansion& BasisExpansion::operator*=(const GaussianRational& scalar) {
  if (scalar.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& [alpha, c] : coeffs_) c *= scalar;
  return *this;
}

std::string BasisExpansion::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (const auto& [alpha, c] : coeffs_) {
    if (!out.empty()) out += " + ";
    const std::string coeff = c.to_string();
    out += (coeff == "1" ? "" : coeff + "*") + "e[" + alpha.to_string() + "]";
  }
  return out;
}

BigRational squared_norm(const BasisExpansion& v) {
  BigRational total;
  for (const auto& [alpha, c] : v.coefficients()) total += c.norm2();
  return total;
}

}  // namespace fockop

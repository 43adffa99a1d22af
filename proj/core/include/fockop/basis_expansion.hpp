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

#ifndef FOCKOP_BASIS_EXPANSION_HPP
#define FOCKOP_BASIS_EXPANSION_HPP

#include <cstddef>
#include <map>
#include <string>

#include "fockop/multi_index.hpp"
#include "fockop/radical.hpp"

namespace fockop {

/// Dimension n >= 1 of C^n and Sobolev order m >= 0 of F^{2,m}.
struct SpaceParams {
  std::size_t n = 1;
  std::size_t m = 0;

  SpaceParams() = default;
  SpaceParams(std::size_t dimension, std::size_t order);

  friend bool operator==(const SpaceParams&, const SpaceParams&) = default;
};

/// Finite combination sum_alpha c_alpha e_alpha in the orthonormal monomial
/// basis of F^{2,m}. Keys iterate in lexicographic order.
class BasisExpansion {
public:
  using CoefficientMap = std::map<MultiIndex, RadicalCoefficient>;

  explicit BasisExpansion(SpaceParams space) : space_(space) {}

  /// The basis vector e_alpha.
  static BasisExpansion basis(SpaceParams space, const MultiIndex& alpha);

  const SpaceParams& space() const noexcept { return space_; }
  const CoefficientMap& coefficients() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  std::size_t size() const noexcept { return coeffs_.size(); }

  RadicalCoefficient coefficient(const MultiIndex& alpha) const;

  /// Merges c into the coefficient of e_alpha. Throws InvariantViolation if
  /// the existing coefficient has a different radicand.
  void add(const MultiIndex& alpha, const RadicalCoefficient& c);

  BasisExpansion& operator+=(const BasisExpansion& other);
  BasisExpansion& operator-=(const BasisExpansion& other);
  BasisExpansion& operator*=(const GaussianRational& scalar);
  friend BasisExpansion operator+(BasisExpansion a, const BasisExpansion& b) { return a += b; }
  friend BasisExpansion operator-(BasisExpansion a, const BasisExpansion& b) { return a -= b; }

  friend bool operator==(const BasisExpansion&, const BasisExpansion&) = default;

  /// e.g. "2*e[3] + sqrt(2)*e[4]"; "0" when empty.
  std::string to_string() const;

private:
  void require_compatible(const MultiIndex& alpha) const;
  void require_compatible(const BasisExpansion& other) const;

  SpaceParams space_;
  CoefficientMap coeffs_;
};

/// sum_alpha |c_alpha|^2, exact (Parseval in the orthonormal basis).
BigRational squared_norm(const BasisExpansion& v);

}  // namespace fockop

#endif  // FOCKOP_BASIS_EXPANSION_HPP

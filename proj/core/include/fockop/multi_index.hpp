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

#ifndef FOCKOP_MULTI_INDEX_HPP
#define FOCKOP_MULTI_INDEX_HPP

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace fockop {

/// Element of N^n. Indexes monomials z^alpha and basis vectors e_alpha.
///
/// The dimension is fixed at construction and every arithmetic operation
/// requires both operands to share it; mismatches throw
/// std::invalid_argument. Ordering (operator<=>) is lexicographic and is
/// only used for deterministic container keys; the partial order used by
/// the operator formulas is `compare()`.
class MultiIndex {
public:
  using value_type = std::uint32_t;

  MultiIndex() = default;
  explicit MultiIndex(std::size_t dimension) : components_(dimension, 0) {}
  MultiIndex(std::initializer_list<value_type> components) : components_(components) {}
  explicit MultiIndex(std::vector<value_type> components) : components_(std::move(components)) {}

  static MultiIndex zero(std::size_t dimension) { return MultiIndex(dimension); }
  static MultiIndex filled(std::size_t dimension, value_type value);
  /// Unit vector e_j (0-based j).
  static MultiIndex unit(std::size_t dimension, std::size_t j);

  /// Parses "a1|a2|..." (the CSV/CLI serialization).
  static MultiIndex parse(std::string_view text);

  std::size_t dimension() const noexcept { return components_.size(); }
  value_type operator[](std::size_t i) const { return components_[i]; }
  std::span<const value_type> components() const noexcept { return components_; }

  /// |alpha|
  std::uint64_t order() const noexcept;

  MultiIndex operator+(const MultiIndex& other) const;
  MultiIndex operator*(value_type scale) const;

  /// this + plus - minus, or nullopt if any component would be negative.
  std::optional<MultiIndex> shifted(const MultiIndex& plus, const MultiIndex& minus) const;
  std::optional<MultiIndex> checked_sub(const MultiIndex& other) const;

  /// Componentwise max.
  MultiIndex max_with(const MultiIndex& other) const;

  bool is_zero() const noexcept;

  /// Serialization "a1|a2|...".
  std::string to_string() const;

  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
  friend auto operator<=>(const MultiIndex& a, const MultiIndex& b) {
    return a.components_ <=> b.components_;
  }

private:
  std::vector<value_type> components_;
};

/// Componentwise partial-order relations between two multi-indices.
/// `greater` and `less` are strict in every component, matching the
/// componentwise convention used for alpha > beta.
struct MultiIndexOrdering {
  bool greater_equal = false;
  bool greater = false;
  bool less_equal = false;
  bool less = false;
  bool incomparable = false;
};

MultiIndexOrdering compare(const MultiIndex& a, const MultiIndex& b);

/// a >= b componentwise.
bool dominates(const MultiIndex& a, const MultiIndex& b);

/// All multi-indices of the given dimension with |alpha| <= max_order,
/// in lexicographic order.
std::vector<MultiIndex> multi_indices_up_to_order(std::size_t dimension, std::uint32_t max_order);

/// All multi-indices with every component <= max_component (a box), in
/// lexicographic order.
std::vector<MultiIndex> multi_indices_in_box(std::size_t dimension, std::uint32_t max_component);

}  // namespace fockop

#endif  // FOCKOP_MULTI_INDEX_HPP

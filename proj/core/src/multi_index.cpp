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

#include "fockop/multi_index.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace fockop {

namespace {

void require_same_dimension(const MultiIndex& a, const MultiIndex& b) {
  if (a.dimension() != b.dimension()) {
    throw std::invalid_argument("multi-index dimension mismatch: " + std::to_string(a.dimension()) +
                                " vs " + std::to_string(b.dimension()));
  }
}

void enumerate_order(std::size_t pos, std::uint32_t remaining, std::vector<MultiIndex::value_type>& current,
                     std::vector<MultiIndex>& out) {
  if (pos == current.size()) {
    out.emplace_back(current);
    return;
  }
  for (std::uint32_t v = 0; v <= remaining; ++v) {
    current[pos] = v;
    enumerate_order(pos + 1, remaining - v, current, out);
  }
  current[pos] = 0;
}

}  // namespace

MultiIndex MultiIndex::filled(std::size_t dimension, value_type value) {
  return MultiIndex(std::vector<value_type>(dimension, value));
}

MultiIndex MultiIndex::unit(std::size_t dimension, std::size_t j) {
  if (j >= dimension) throw std::out_of_range("unit multi-index position out of range");
  MultiIndex out(dimension);
  out.components_[j] = 1;
  return out;
}

MultiIndex MultiIndex::parse(std::string_view text) {
  std::vector<value_type> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t bar = text.find('|', start);
    std::string_view piece = text.substr(start, bar == std::string_view::npos ? std::string_view::npos : bar - start);
    while (!piece.empty() && piece.front() == ' ') piece.remove_prefix(1);
    while (!piece.empty() && piece.back() == ' ') piece.remove_suffix(1);
    value_type v = 0;
    auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), v);
    if (piece.empty() || ec != std::errc() || ptr != piece.data() + piece.size()) {
      throw std::invalid_argument("invalid multi-index component '" + std::string(piece) + "' in '" +
                                  std::string(text) + "'");
    }
    parts.push_back(v);
    if (bar == std::string_view::npos) break;
    start = bar + 1;
  }
  return MultiIndex(std::move(parts));
}

std::uint64_t MultiIndex::order() const noexcept {
  return std::accumulate(components_.begin(), components_.end(), std::uint64_t{0});
}

MultiIndex MultiIndex::operator+(const MultiIndex& other) const {
  require_same_dimension(*this, other);
  MultiIndex out = *this;
  for (std::size_t i = 0; i < components_.size(); ++i) out.components_[i] += other.components_[i];
  return out;
}

MultiIndex MultiIndex::operator*(value_type scale) const {
  MultiIndex out = *this;
  for (auto& c : out.components_) c *= scale;
  return out;
}

std::optional<MultiIndex> MultiIndex::shifted(const MultiIndex& plus, const MultiIndex& minus) const {
  require_same_dimension(*this, plus);
  require_same_dimension(*this, minus);
  MultiIndex out = *this;
  for (std::size_t i = 0; i < components_.size(); ++i) {
    const std::uint64_t up = std::uint64_t{components_[i]} + plus.components_[i];
    if (up < minus.components_[i]) return std::nullopt;
    out.components_[i] = static_cast<value_type>(up - minus.components_[i]);
  }
  return out;
}

std::optional<MultiIndex> MultiIndex::checked_sub(const MultiIndex& other) const {
  return shifted(MultiIndex(dimension()), other);
}

MultiIndex MultiIndex::max_with(const MultiIndex& other) const {
  require_same_dimension(*this, other);
  MultiIndex out = *this;
  for (std::size_t i = 0; i < components_.size(); ++i) {
    out.components_[i] = std::max(components_[i], other.components_[i]);
  }
  return out;
}

bool MultiIndex::is_zero() const noexcept {
  return std::all_of(components_.begin(), components_.end(), [](value_type v) { return v == 0; });
}

std::string MultiIndex::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < components_.size(); ++i) {
    if (i) out += '|';
    out += std::to_string(components_[i]);
  }
  return out;
}

MultiIndexOrdering compare(const MultiIndex& a, const MultiIndex& b) {
  require_same_dimension(a, b);
  MultiIndexOrdering o;
  o.greater_equal = o.greater = o.less_equal = o.less = true;
  const auto ac = a.components();
  const auto bc = b.components();
  for (std::size_t i = 0; i < ac.size(); ++i) {
    if (ac[i] < bc[i]) o.greater_equal = false;
    if (ac[i] <= bc[i]) o.greater = false;
    if (ac[i] > bc[i]) o.less_equal = false;
    if (ac[i] >= bc[i]) o.less = false;
  }
  o.incomparable = !o.greater_equal && !o.less_equal;
  return o;
}

bool dominates(const MultiIndex& a, const MultiIndex& b) { return compare(a, b).greater_equal; }

std::vector<MultiIndex> multi_indices_up_to_order(std::size_t dimension, std::uint32_t max_order) {
  std::vector<MultiIndex> out;
  std::vector<MultiIndex::value_type> current(dimension, 0);
  enumerate_order(0, max_order, current, out);
  return out;
}

std::vector<MultiIndex> multi_indices_in_box(std::size_t dimension, std::uint32_t max_component) {
  std::vector<MultiIndex> out;
  std::vector<MultiIndex::value_type> current(dimension, 0);
  while (true) {
    out.emplace_back(current);
    std::size_t pos = dimension;
    while (pos > 0) {
      --pos;
      if (current[pos] < max_component) {
        ++current[pos];
        std::fill(current.begin() + static_cast<std::ptrdiff_t>(pos) + 1, current.end(), 0);
        break;
      }
      if (pos == 0) return out;
    }
    if (dimension == 0) return out;
  }
}

}  // namespace fockop

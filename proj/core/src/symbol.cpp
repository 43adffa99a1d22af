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

#include "fockop/symbol.hpp"

#include <algorithm>
#include <limits>

namespace fockop {

namespace {

void require_dimension(std::size_t expected, const MultiIndex& idx) {
  if (idx.dimension() != expected) {
    throw std::invalid_argument("monomial exponent has dimension " + std::to_string(idx.dimension()) +
                                ", symbol has " + std::to_string(expected));
  }
}

std::string variable_name(std::size_t dimension, std::size_t j) {
  return dimension == 1 ? std::string("z") : "z" + std::to_string(j + 1);
}

std::string monomial_text(const MonomialKey& key) {
  const std::size_t n = key.holomorphic.dimension();
  std::string out;
  auto append = [&out](const std::string& factor, MultiIndex::value_type power) {
    if (power == 0) return;
    if (!out.empty()) out += '*';
    out += factor;
    if (power > 1) out += '^' + std::to_string(power);
  };
  for (std::size_t j = 0; j < n; ++j) append(variable_name(n, j), key.holomorphic[j]);
  for (std::size_t j = 0; j < n; ++j) append("conj(" + variable_name(n, j) + ")", key.antiholomorphic[j]);
  return out;
}

// (beta_s, gamma_s) of one variable, and the key with that variable zeroed.
std::pair<std::pair<std::uint32_t, std::uint32_t>, MonomialKey> split_key(const MonomialKey& key, std::size_t s) {
  std::vector<MultiIndex::value_type> b(key.holomorphic.components().begin(), key.holomorphic.components().end());
  std::vector<MultiIndex::value_type> g(key.antiholomorphic.components().begin(),
                                        key.antiholomorphic.components().end());
  const auto local = std::make_pair(b[s], g[s]);
  b[s] = 0;
  g[s] = 0;
  return {local, MonomialKey{MultiIndex(std::move(b)), MultiIndex(std::move(g))}};
}

}  // namespace

SymbolPolynomial::SymbolPolynomial(std::size_t dimension) : dimension_(dimension) {
  if (dimension == 0) throw std::invalid_argument("symbol dimension must be >= 1");
}

SymbolPolynomial SymbolPolynomial::constant(std::size_t dimension, const GaussianRational& c) {
  SymbolPolynomial p(dimension);
  p.add_term(MultiIndex(dimension), MultiIndex(dimension), c);
  return p;
}

SymbolPolynomial SymbolPolynomial::monomial(const MultiIndex& beta, const MultiIndex& gamma,
                                            const GaussianRational& c) {
  SymbolPolynomial p(beta.dimension());
  p.add_term(beta, gamma, c);
  return p;
}

SymbolPolynomial SymbolPolynomial::variable(std::size_t dimension, std::size_t j) {
  return monomial(MultiIndex::unit(dimension, j - 1), MultiIndex(dimension));
}

SymbolPolynomial SymbolPolynomial::conj_variable(std::size_t dimension, std::size_t j) {
  return monomial(MultiIndex(dimension), MultiIndex::unit(dimension, j - 1));
}

GaussianRational SymbolPolynomial::coefficient(const MultiIndex& beta, const MultiIndex& gamma) const {
  auto it = terms_.find(MonomialKey{beta, gamma});
  return it == terms_.end() ? GaussianRational() : it->second;
}

void SymbolPolynomial::add_term(const MultiIndex& beta, const MultiIndex& gamma, const GaussianRational& c) {
  require_dimension(dimension_, beta);
  require_dimension(dimension_, gamma);
  if (c.is_zero()) return;
  MonomialKey key{beta, gamma};
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(std::move(key), c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

SymbolPolynomial& SymbolPolynomial::operator+=(const SymbolPolynomial& other) {
  if (other.dimension_ != dimension_) throw std::invalid_argument("symbol dimension mismatch");
  for (const auto& [key, c] : other.terms_) add_term(key.holomorphic, key.antiholomorphic, c);
  return *this;
}

SymbolPolynomial& SymbolPolynomial::operator-=(const SymbolPolynomial& other) { return *this += -other; }

SymbolPolynomial& SymbolPolynomial::operator*=(const GaussianRational& scalar) {
  if (scalar.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [key, c] : terms_) c *= scalar;
  return *this;
}

SymbolPolynomial SymbolPolynomial::operator-() const {
  SymbolPolynomial out = *this;
  for (auto& [key, c] : out.terms_) c = -c;
  return out;
}

SymbolPolynomial operator*(const SymbolPolynomial& a, const SymbolPolynomial& b) {
  if (a.dimension_ != b.dimension_) throw std::invalid_argument("symbol dimension mismatch");
  SymbolPolynomial out(a.dimension_);
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) {
      out.add_term(ka.holomorphic + kb.holomorphic, ka.antiholomorphic + kb.antiholomorphic, ca * cb);
    }
  }
  return out;
}

SymbolPolynomial SymbolPolynomial::pow(unsigned exponent) const {
  SymbolPolynomial result = constant(dimension_, GaussianRational(1));
  SymbolPolynomial base = *this;
  while (exponent) {
    if (exponent & 1u) result = result * base;
    exponent >>= 1;
    if (exponent) base = base * base;
  }
  return result;
}

std::string SymbolPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [key, c] : terms_) {
    const std::string mono = monomial_text(key);
    // A purely real or purely imaginary coefficient carries its sign outside.
    bool negative = false;
    GaussianRational shown = c;
    if ((c.im.is_zero() && c.re.sign() < 0) || (c.re.is_zero() && c.im.sign() < 0)) {
      negative = true;
      shown = -c;
    }
    std::string coeff = shown.to_string();
    std::string term;
    if (mono.empty()) {
      term = coeff;
    } else if (shown == GaussianRational(1)) {
      term = mono;
    } else {
      term = coeff + "*" + mono;
    }
    if (first) {
      out = negative ? "-" + term : term;
    } else {
      out += negative ? " - " : " + ";
      out += term;
    }
    first = false;
  }
  return out;
}

SymbolPolynomial conjugate(const SymbolPolynomial& p) {
  SymbolPolynomial out(p.dimension());
  for (const auto& [key, c] : p.terms()) out.add_term(key.antiholomorphic, key.holomorphic, c.conj());
  return out;
}

HolomorphicSplit holomorphic_split(const SymbolPolynomial& p) {
  HolomorphicSplit split{SymbolPolynomial(p.dimension()), SymbolPolynomial(p.dimension())};
  for (const auto& [key, c] : p.terms()) {
    auto& target = key.antiholomorphic.is_zero() ? split.pure_holomorphic : split.remainder;
    target.add_term(key.holomorphic, key.antiholomorphic, c);
  }
  return split;
}

bool is_holomorphic(const SymbolPolynomial& p) {
  return std::all_of(p.terms().begin(), p.terms().end(),
                     [](const auto& t) { return t.first.antiholomorphic.is_zero(); });
}

bool is_constant(const SymbolPolynomial& p) {
  return std::all_of(p.terms().begin(), p.terms().end(), [](const auto& t) {
    return t.first.holomorphic.is_zero() && t.first.antiholomorphic.is_zero();
  });
}

GradedDecomposition graded_decompose(const SymbolPolynomial& p, std::size_t variable) {
  const std::size_t n = p.dimension();
  if (variable < 1 || variable > n) throw std::invalid_argument("variable index out of range");
  if (p.is_zero()) throw std::invalid_argument("graded decomposition of the zero polynomial is undefined");
  const std::size_t s = variable - 1;

  // Coefficient matrix M[(beta_s, gamma_s)][rest]; p factors through
  // variable s iff M has rank one.
  std::map<std::pair<std::uint32_t, std::uint32_t>, std::map<MonomialKey, GaussianRational>> rows;
  std::map<MonomialKey, bool> columns;
  for (const auto& [key, c] : p.terms()) {
    auto [local, rest] = split_key(key, s);
    rows[local][rest] = c;
    columns[rest] = true;
  }
  const auto& [row0_key, row0] = *rows.begin();
  const MonomialKey col0 = row0.begin()->first;
  const GaussianRational pivot = row0.begin()->second;
  auto entry = [](const std::map<MonomialKey, GaussianRational>& row, const MonomialKey& col) {
    auto it = row.find(col);
    return it == row.end() ? GaussianRational() : it->second;
  };
  for (const auto& [local, row] : rows) {
    for (const auto& [col, unused] : columns) {
      if (entry(row, col) * pivot != entry(row, col0) * entry(row0, col)) {
        throw std::invalid_argument("symbol does not factor as a product over variable z" +
                                    std::to_string(variable));
      }
    }
  }

  // factor = column col0, cofactor = row0 / pivot.
  SymbolPolynomial factor(n);
  for (const auto& [local, row] : rows) {
    const GaussianRational c = entry(row, col0);
    if (c.is_zero()) continue;
    MultiIndex b = MultiIndex::unit(n, s) * local.first;
    MultiIndex g = MultiIndex::unit(n, s) * local.second;
    factor.add_term(b, g, c);
  }
  SymbolPolynomial cofactor(n);
  for (const auto& [col, c] : row0) cofactor.add_term(col.holomorphic, col.antiholomorphic, c / pivot);

  long lo = std::numeric_limits<long>::max();
  long hi = std::numeric_limits<long>::min();
  for (const auto& [key, c] : factor.terms()) {
    const long d = static_cast<long>(key.holomorphic[s]) - static_cast<long>(key.antiholomorphic[s]);
    lo = std::min(lo, d);
    hi = std::max(hi, d);
  }
  GradedDecomposition out{{}, lo, hi, factor, cofactor};
  for (long theta = lo; theta <= hi; ++theta) out.pieces.push_back({variable, theta, SymbolPolynomial(n)});
  for (const auto& [key, c] : factor.terms()) {
    const long d = static_cast<long>(key.holomorphic[s]) - static_cast<long>(key.antiholomorphic[s]);
    out.pieces[static_cast<std::size_t>(d - lo)].piece.add_term(key.holomorphic, key.antiholomorphic, c);
  }
  return out;
}

}  // namespace fockop

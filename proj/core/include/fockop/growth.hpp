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

#ifndef FOCKOP_GROWTH_HPP
#define FOCKOP_GROWTH_HPP

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "fockop/classify.hpp"
#include "fockop/hankel.hpp"
#include "fockop/operator_expr.hpp"

namespace fockop {

/// alpha(t) = base + t * direction for t in t_values.
struct RaySpec {
  MultiIndex base;
  MultiIndex direction;
  std::vector<std::uint64_t> t_values;

  /// Throws std::invalid_argument unless direction >= 1 componentwise, the
  /// dimensions agree and t_values is nonempty, positive and strictly increasing.
  void validate() const;
  MultiIndex alpha(std::uint64_t t) const;
};

/// lo, lo*ratio, ... up to hi (inclusive when hit exactly).
std::vector<std::uint64_t> geometric_t(std::uint64_t lo, std::uint64_t hi, std::uint64_t ratio = 2);
std::vector<std::uint64_t> linear_t(std::uint64_t lo, std::uint64_t hi, std::uint64_t step = 1);

/// Base at the closed-form validity bound of (f, g), all-ones direction,
/// t in {2^6, ..., 2^12} unless given.
RaySpec default_ray(const SymbolPolynomial& f, const SymbolPolynomial& g,
                    std::vector<std::uint64_t> t_values = geometric_t(64, 4096));

enum class GrowthKind { ToeplitzMonoProduct, HankelMonoProduct };

struct PredictedExponent {
  std::optional<BigRational> exponent;  // empty when degenerate
  bool degenerate = false;
};

/// Exponent of t in ||op e_alpha(t)|| for T_f T_g (pair = theta, vartheta,
/// phi, psi) or H*_f H_g (pair = beta, gamma, mu, nu). Each direction
/// component contributes log-slope 1, so the value does not depend on the
/// direction; it is only asserted for equal-component directions.
PredictedExponent predicted_exponent(GrowthKind kind, const MonomialPair& pair, const RaySpec& ray);

struct NormSample {
  std::uint64_t t = 0;
  MultiIndex alpha;
  BigRational squared_norm;
};

/// Exact ||expr e_alpha(t)||^2 for every t of the ray, in t order. Work is
/// split over `jobs` threads in contiguous blocks.
std::vector<NormSample> sample_norms(const OperatorExpr& expr, const SpaceParams& sp, const RaySpec& ray,
                                     unsigned jobs = 1);

enum class FitStatus { Ok, Degenerate };
std::string_view to_string(FitStatus s);

struct ExponentReport {
  std::optional<BigRational> predicted;
  FitStatus status = FitStatus::Ok;
  double fitted = 0.0;    // NaN when degenerate
  double residual = 0.0;  // max_i |exp(y_i - yhat_i) - 1|
  std::vector<NormSample> samples;
};

/// Least-squares slope of (log t, log(squared_norm) / 2). Needs at least 4
/// samples with strictly increasing t; a zero norm yields FitStatus::Degenerate.
ExponentReport fit_exponent(std::vector<NormSample> samples);

/// ||e(t2)|| / (||e(t1)|| * (t2/t1)^p), computed in log space.
double ratio_stabilization(const NormSample& at_t, const NormSample& at_2t, double exponent);

struct Corroboration {
  std::vector<NormSample> samples;
  ExponentReport fit;
  bool consistent = false;
  std::string detail;
};

/// Checks a verdict against exact norms along `ray`:
///   bounded        max ||.||^2 <= bound_factor * ||.||^2 at the first t
///   unbounded      fitted exponent >= min_growth
///   compact        last ||.||^2 <= first / bound_factor
///   not compact    last ||.||^2 >= first / bound_factor, first > 0
Corroboration corroborate(const Verdict& verdict, const OperatorExpr& expr, const SpaceParams& sp,
                          const RaySpec& ray, unsigned jobs = 1, double bound_factor = 4.0,
                          double min_growth = 0.4);

}  // namespace fockop

#endif  // FOCKOP_GROWTH_HPP

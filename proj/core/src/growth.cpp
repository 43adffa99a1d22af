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

#include "fockop/growth.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace fockop {

void RaySpec::validate() const {
  if (base.dimension() == 0 || base.dimension() != direction.dimension()) {
    throw std::invalid_argument("ray base and direction must share a positive dimension");
  }
  for (auto d : direction.components()) {
    if (d < 1) throw std::invalid_argument("ray direction components must be >= 1");
  }
  if (t_values.empty()) throw std::invalid_argument("ray needs at least one t value");
  if (t_values.front() == 0) throw std::invalid_argument("ray t values must be positive");
  for (std::size_t i = 1; i < t_values.size(); ++i) {
    if (t_values[i] <= t_values[i - 1]) throw std::invalid_argument("ray t values must be strictly increasing");
  }
}

MultiIndex RaySpec::alpha(std::uint64_t t) const {
  if (t > std::numeric_limits<MultiIndex::value_type>::max()) throw std::invalid_argument("t too large");
  return base + direction * static_cast<MultiIndex::value_type>(t);
}

std::vector<std::uint64_t> geometric_t(std::uint64_t lo, std::uint64_t hi, std::uint64_t ratio) {
  if (lo == 0 || ratio < 2 || hi < lo) throw std::invalid_argument("geometric grid needs 0 < lo <= hi and ratio >= 2");
  std::vector<std::uint64_t> out;
  for (std::uint64_t t = lo; t <= hi; t *= ratio) {
    out.push_back(t);
    if (t > hi / ratio) break;
  }
  return out;
}

std::vector<std::uint64_t> linear_t(std::uint64_t lo, std::uint64_t hi, std::uint64_t step) {
  if (lo == 0 || step == 0 || hi < lo) throw std::invalid_argument("linear grid needs 0 < lo <= hi and step >= 1");
  std::vector<std::uint64_t> out;
  for (std::uint64_t t = lo; t <= hi; t += step) {
    out.push_back(t);
    if (hi - t < step) break;
  }
  return out;
}

RaySpec default_ray(const SymbolPolynomial& f, const SymbolPolynomial& g, std::vector<std::uint64_t> t_values) {
  RaySpec ray{hankel_validity_bound(f, g), MultiIndex::filled(f.dimension(), 1), std::move(t_values)};
  ray.validate();
  return ray;
}

PredictedExponent predicted_exponent(GrowthKind kind, const MonomialPair& pair, const RaySpec& ray) {
  ray.validate();
  const std::size_t n = ray.base.dimension();
  for (const MultiIndex* a : {&pair.beta, &pair.gamma, &pair.mu, &pair.nu}) {
    if (a->dimension() != n) throw std::invalid_argument("exponent dimension does not match the ray");
  }
  const std::uint64_t total = pair.beta.order() + pair.gamma.order() + pair.mu.order() + pair.nu.order();
  BigRational exponent(BigInt(total), BigInt(2));
  if (kind == GrowthKind::HankelMonoProduct) {
    std::uint64_t overlap = 0;
    for (std::size_t j = 0; j < n; ++j) overlap += std::uint64_t{pair.gamma[j]} * pair.nu[j];
    if (overlap == 0) return {std::nullopt, true};
    exponent -= BigRational(1);
  }
  return {exponent, false};
}

std::vector<NormSample> sample_norms(const OperatorExpr& expr, const SpaceParams& sp, const RaySpec& ray,
                                     unsigned jobs) {
  ray.validate();
  if (ray.base.dimension() != sp.n) throw std::invalid_argument("ray dimension does not match n");
  const std::size_t count = ray.t_values.size();
  std::vector<NormSample> out(count);
  auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      const std::uint64_t t = ray.t_values[i];
      MultiIndex alpha = ray.alpha(t);
      BigRational sq = squared_norm(apply_operator(expr, BasisExpansion::basis(sp, alpha)));
      out[i] = NormSample{t, std::move(alpha), std::move(sq)};
    }
  };
  const std::size_t workers = std::clamp<std::size_t>(jobs, 1, count);
  if (workers == 1) {
    work(0, count);
    return out;
  }
  std::vector<std::future<void>> futures;
  const std::size_t block = (count + workers - 1) / workers;
  for (std::size_t begin = 0; begin < count; begin += block) {
    futures.push_back(std::async(std::launch::async, work, begin, std::min(count, begin + block)));
  }
  for (auto& f : futures) f.get();
  return out;
}

std::string_view to_string(FitStatus s) { return s == FitStatus::Ok ? "ok" : "degenerate"; }

ExponentReport fit_exponent(std::vector<NormSample> samples) {
  if (samples.size() < 4) throw std::invalid_argument("exponent fit needs at least 4 samples");
  for (std::size_t i = 0; i < samples.size(); ++i) {
    if (samples[i].t == 0) throw std::invalid_argument("sample t must be positive");
    if (i > 0 && samples[i].t <= samples[i - 1].t) throw std::invalid_argument("sample t must be strictly increasing");
    if (samples[i].squared_norm.sign() < 0) throw std::invalid_argument("squared norm must be nonnegative");
  }
  ExponentReport report;
  const bool any_zero = std::any_of(samples.begin(), samples.end(),
                                    [](const NormSample& s) { return s.squared_norm.is_zero(); });
  if (any_zero) {
    report.status = FitStatus::Degenerate;
    report.fitted = std::numeric_limits<double>::quiet_NaN();
    report.residual = std::numeric_limits<double>::quiet_NaN();
    report.samples = std::move(samples);
    return report;
  }
  const std::size_t k = samples.size();
  std::vector<double> x(k);
  std::vector<double> y(k);
  double mx = 0.0;
  double my = 0.0;
  for (std::size_t i = 0; i < k; ++i) {
    x[i] = std::log(static_cast<double>(samples[i].t));
    y[i] = 0.5 * samples[i].squared_norm.log();
    mx += x[i];
    my += y[i];
  }
  mx /= static_cast<double>(k);
  my /= static_cast<double>(k);
  double sxy = 0.0;
  double sxx = 0.0;
  for (std::size_t i = 0; i < k; ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
  }
  const double slope = sxy / sxx;
  const double intercept = my - slope * mx;
  double residual = 0.0;
  for (std::size_t i = 0; i < k; ++i) {
    residual = std::max(residual, std::abs(std::expm1(y[i] - (intercept + slope * x[i]))));
  }
  report.fitted = slope;
  report.residual = residual;
  report.samples = std::move(samples);
  return report;
}

double ratio_stabilization(const NormSample& at_t, const NormSample& at_2t, double exponent) {
  if (at_t.squared_norm.is_zero() || at_2t.squared_norm.is_zero()) {
    throw std::domain_error("ratio stabilization needs nonzero norms");
  }
  const double log_ratio = 0.5 * (at_2t.squared_norm.log() - at_t.squared_norm.log());
  const double log_scale = exponent * std::log(static_cast<double>(at_2t.t) / static_cast<double>(at_t.t));
  return std::exp(log_ratio - log_scale);
}

Corroboration corroborate(const Verdict& verdict, const OperatorExpr& expr, const SpaceParams& sp,
                          const RaySpec& ray, unsigned jobs, double bound_factor, double min_growth) {
  Corroboration c;
  c.samples = sample_norms(expr, sp, ray, jobs);
  const BigRational& first = c.samples.front().squared_norm;
  const BigRational& last = c.samples.back().squared_norm;
  BigRational largest = first;
  for (const auto& s : c.samples) largest = std::max(largest, s.squared_norm);
  if (c.samples.size() >= 4) c.fit = fit_exponent(c.samples);

  const BigRational factor{mpq_class(bound_factor)};
  std::ostringstream detail;
  const bool bounded_property = verdict.property == Property::Bounded;
  if (bounded_property && verdict.holds) {
    c.consistent = largest <= first * factor;
    detail << "max/first squared norm = " << (first.is_zero() ? 0.0 : (largest / first).to_double());
  } else if (bounded_property) {
    c.consistent = c.fit.status == FitStatus::Ok && c.samples.size() >= 4 && c.fit.fitted >= min_growth;
    detail << "fitted exponent = " << c.fit.fitted;
  } else if (verdict.holds) {
    c.consistent = last * factor <= first;
    detail << "last/first squared norm = " << (first.is_zero() ? 0.0 : (last / first).to_double());
  } else {
    c.consistent = !first.is_zero() && last * factor >= first;
    detail << "last/first squared norm = " << (first.is_zero() ? 0.0 : (last / first).to_double());
  }
  c.detail = detail.str();
  return c;
}

}  // namespace fockop

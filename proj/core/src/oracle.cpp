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

#include "fockop/oracle.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <complex>
#include <cstdlib>
#include <limits>
#include <random>
#include <stdexcept>
#include <string>
#include <thread>

namespace fockop {

namespace {

constexpr unsigned kMonteCarloChunks = 64;

void require_dimension(const MultiIndex& a, const SpaceParams& sp) {
  if (a.dimension() != sp.n) throw std::invalid_argument("multi-index dimension does not match n");
}

// Gamma(k) for a positive integer k, by the recurrence from Gamma(1) = 1.
double gamma_of_integer(std::uint64_t k) {
  double g = 1.0;
  for (std::uint64_t j = 2; j < k; ++j) g *= static_cast<double>(j);
  return g;
}

// log of the tail bound Gamma(k+1, U) <= U^k e^{-U} / (1 - k/U), U > k.
double log_tail_bound(double k, double u) { return k * std::log(u) - u - std::log1p(-k / u); }

OracleEstimate radial_quadrature(const MultiIndex& a, const MultiIndex& b, const SpaceParams& sp,
                                 const OracleConfig& config) {
  if (sp.n != 1) throw std::invalid_argument("radial quadrature needs n = 1");
  OracleEstimate e;
  e.method = OracleMethod::RadialQuadrature;
  if (a != b) return e;  // angular integral vanishes

  // <z^a, z^a>_m = (1/m!) int_0^inf u^{a+m} e^{-u} du after u = r^2.
  const double k = static_cast<double>(a[0]) + static_cast<double>(sp.m);
  const double log_scale = std::lgamma(k + 1.0);  // only steers the cutoff
  double upper = 2.0 * k + 40.0;
  while (log_tail_bound(k, upper) > std::log(1e-16) + log_scale) upper += 1.0;

  auto integrand = [k](double u) {
    if (u <= 0.0) return k == 0.0 ? 1.0 : 0.0;
    return std::exp(k * std::log(u) - u);
  };
  using Quadrature = boost::math::quadrature::gauss_kronrod<double, 61>;
  double err_head = 0.0;
  double err_tail = 0.0;
  const double split = std::max(k, 1.0);
  const double head = Quadrature::integrate(integrand, 0.0, split, 20, config.tolerance, &err_head);
  const double tail = Quadrature::integrate(integrand, split, upper, 20, config.tolerance, &err_tail);
  const double m_factorial = gamma_of_integer(sp.m + 1);
  e.value = (head + tail) / m_factorial;
  e.error_bound = (err_head + err_tail + std::exp(log_tail_bound(k, upper))) / m_factorial;
  return e;
}

OracleEstimate gamma_identity(const MultiIndex& a, const MultiIndex& b, const SpaceParams& sp) {
  OracleEstimate e;
  e.method = OracleMethod::GammaIdentity;
  if (a != b) return e;
  // prod Gamma(a_i+1) Gamma(n) Gamma(m+n+|a|) / (Gamma(m+n) Gamma(n+|a|))
  const double n = static_cast<double>(sp.n);
  const double m = static_cast<double>(sp.m);
  const double order = static_cast<double>(a.order());
  double log_value = std::lgamma(n) + std::lgamma(m + n + order) - std::lgamma(m + n) - std::lgamma(n + order);
  double magnitude = std::abs(std::lgamma(n)) + std::lgamma(m + n + order) + std::lgamma(m + n) +
                     std::lgamma(n + order);
  for (auto ai : a.components()) {
    const double l = std::lgamma(static_cast<double>(ai) + 1.0);
    log_value += l;
    magnitude += l;
  }
  e.value = std::exp(log_value);
  e.error_bound = e.value * 16.0 * std::numeric_limits<double>::epsilon() * (1.0 + magnitude);
  return e;
}

struct ChunkSums {
  std::vector<double> sum;
  std::vector<double> sum_sq;
};

}  // namespace

std::string_view to_string(OracleMethod m) {
  switch (m) {
    case OracleMethod::RadialQuadrature: return "quadrature";
    case OracleMethod::GammaIdentity: return "gamma";
    case OracleMethod::MonteCarlo: return "monte-carlo";
  }
  return "?";
}

OracleMethod parse_oracle_method(std::string_view text) {
  if (text == "quadrature") return OracleMethod::RadialQuadrature;
  if (text == "gamma") return OracleMethod::GammaIdentity;
  if (text == "monte-carlo") return OracleMethod::MonteCarlo;
  throw std::invalid_argument("unknown oracle method '" + std::string(text) +
                              "' (expected quadrature, gamma or monte-carlo)");
}

OracleConfig OracleConfig::from_env(OracleConfig base) {
  if (const char* env = std::getenv("FOCKOP_SEED"); env != nullptr && *env != '\0') {
    std::size_t used = 0;
    const std::string text(env);
    try {
      base.seed = std::stoull(text, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != text.size()) throw std::invalid_argument("FOCKOP_SEED must be an unsigned integer");
  }
  return base;
}

OracleEstimate oracle_inner(const MultiIndex& a, const MultiIndex& b, const SpaceParams& sp, OracleMethod method,
                            const OracleConfig& config) {
  require_dimension(a, sp);
  require_dimension(b, sp);
  switch (method) {
    case OracleMethod::RadialQuadrature: return radial_quadrature(a, b, sp, config);
    case OracleMethod::GammaIdentity: return gamma_identity(a, b, sp);
    case OracleMethod::MonteCarlo: return monte_carlo_inner({{a, b}}, sp, config).front();
  }
  throw std::invalid_argument("unknown oracle method");
}

std::vector<OracleEstimate> monte_carlo_inner(const std::vector<std::pair<MultiIndex, MultiIndex>>& pairs,
                                              const SpaceParams& sp, const OracleConfig& config) {
  if (config.samples < 2 * kMonteCarloChunks) {
    throw std::invalid_argument("Monte Carlo needs at least " + std::to_string(2 * kMonteCarloChunks) + " samples");
  }
  std::vector<std::uint32_t> max_power(sp.n, 0);
  for (const auto& [a, b] : pairs) {
    require_dimension(a, sp);
    require_dimension(b, sp);
    for (std::size_t j = 0; j < sp.n; ++j) max_power[j] = std::max({max_power[j], a[j], b[j]});
  }

  // z_j = x + iy with x, y ~ N(0, 1/2): density pi^{-n} e^{-|z|^2}. Then
  // <z^a, z^b>_m = Gamma(n) / Gamma(n+m) * E[z^a conj(z)^b |z|^{2m}].
  auto run_chunk = [&](unsigned chunk) {
    const std::uint64_t count =
        config.samples / kMonteCarloChunks + (chunk < config.samples % kMonteCarloChunks ? 1 : 0);
    std::seed_seq seq{static_cast<std::uint32_t>(config.seed), static_cast<std::uint32_t>(config.seed >> 32),
                      static_cast<std::uint32_t>(chunk)};
    std::mt19937_64 rng(seq);
    std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
    ChunkSums sums{std::vector<double>(pairs.size(), 0.0), std::vector<double>(pairs.size(), 0.0)};
    std::vector<std::vector<std::complex<double>>> powers(sp.n);
    for (std::size_t j = 0; j < sp.n; ++j) powers[j].resize(max_power[j] + 1);
    for (std::uint64_t s = 0; s < count; ++s) {
      double radius2 = 0.0;
      for (std::size_t j = 0; j < sp.n; ++j) {
        const double x = normal(rng);
        const double y = normal(rng);
        const std::complex<double> z(x, y);
        radius2 += x * x + y * y;
        powers[j][0] = 1.0;
        for (std::uint32_t p = 1; p <= max_power[j]; ++p) powers[j][p] = powers[j][p - 1] * z;
      }
      double weight = 1.0;
      for (std::size_t i = 0; i < sp.m; ++i) weight *= radius2;
      for (std::size_t k = 0; k < pairs.size(); ++k) {
        std::complex<double> v = weight;
        for (std::size_t j = 0; j < sp.n; ++j) v *= powers[j][pairs[k].first[j]] * std::conj(powers[j][pairs[k].second[j]]);
        sums.sum[k] += v.real();
        sums.sum_sq[k] += v.real() * v.real();
      }
    }
    return sums;
  };

  std::vector<ChunkSums> chunks(kMonteCarloChunks);
  const unsigned workers = std::max(1u, std::min(config.jobs, kMonteCarloChunks));
  if (workers == 1) {
    for (unsigned c = 0; c < kMonteCarloChunks; ++c) chunks[c] = run_chunk(c);
  } else {
    std::vector<std::thread> threads;
    for (unsigned w = 0; w < workers; ++w) {
      threads.emplace_back([&, w] {
        for (unsigned c = w; c < kMonteCarloChunks; c += workers) chunks[c] = run_chunk(c);
      });
    }
    for (auto& t : threads) t.join();
  }

  const double scale = gamma_of_integer(sp.n) / gamma_of_integer(sp.n + sp.m);
  const double total = static_cast<double>(config.samples);
  std::vector<OracleEstimate> out(pairs.size());
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    double sum = 0.0;
    double sum_sq = 0.0;
    for (const auto& c : chunks) {
      sum += c.sum[k];
      sum_sq += c.sum_sq[k];
    }
    const double mean = sum / total;
    const double variance = std::max(0.0, (sum_sq - total * mean * mean) / (total - 1.0));
    out[k].method = OracleMethod::MonteCarlo;
    out[k].samples = config.samples;
    out[k].value = scale * mean;
    out[k].standard_error = scale * std::sqrt(variance / total);
  }
  return out;
}

OracleEstimate oracle_toeplitz_coeff(const MultiIndex& beta, const MultiIndex& gamma, const MultiIndex& alpha,
                                     const SpaceParams& sp, OracleMethod method, const OracleConfig& config) {
  require_dimension(beta, sp);
  require_dimension(gamma, sp);
  require_dimension(alpha, sp);
  if (method == OracleMethod::MonteCarlo) {
    throw std::invalid_argument("Toeplitz coefficients need a deterministic oracle method");
  }
  OracleEstimate e;
  e.method = method;
  const auto eta = alpha.shifted(beta, gamma);
  if (!eta) return e;
  const MultiIndex top = alpha + beta;
  const OracleEstimate num = oracle_inner(top, top, sp, method, config);
  const OracleEstimate da = oracle_inner(alpha, alpha, sp, method, config);
  const OracleEstimate de = oracle_inner(*eta, *eta, sp, method, config);
  e.value = num.value / std::sqrt(da.value * de.value);
  const double relative = num.error_bound / num.value + 0.5 * (da.error_bound / da.value + de.error_bound / de.value);
  e.error_bound = e.value * (relative + 4.0 * std::numeric_limits<double>::epsilon());
  return e;
}

}  // namespace fockop

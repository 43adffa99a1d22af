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

#ifndef FOCKOP_ORACLE_HPP
#define FOCKOP_ORACLE_HPP

#include <cstdint>
#include <string_view>
#include <utility>
#include <vector>

#include "fockop/basis_expansion.hpp"
#include "fockop/multi_index.hpp"

// Floating-point estimates of <z^a, z^b>_m that share no code with the
// exact engine: no FactorialRatio, no BigRational.

namespace fockop {

enum class OracleMethod { RadialQuadrature, GammaIdentity, MonteCarlo };

std::string_view to_string(OracleMethod m);
OracleMethod parse_oracle_method(std::string_view text);

struct OracleConfig {
  std::uint64_t seed = 42;
  std::uint64_t samples = 10'000'000;
  double tolerance = 1e-13;  // relative target of the adaptive quadrature
  unsigned jobs = 1;

  /// Copy of `base` with FOCKOP_SEED applied when set.
  static OracleConfig from_env(OracleConfig base);
};

struct OracleEstimate {
  double value = 0.0;
  double error_bound = 0.0;     // absolute; deterministic methods
  double standard_error = 0.0;  // Monte Carlo
  OracleMethod method = OracleMethod::GammaIdentity;
  std::uint64_t samples = 0;    // Monte Carlo only
};

/// <z^a, z^b>_m. RadialQuadrature needs n = 1 and throws
/// std::invalid_argument otherwise.
OracleEstimate oracle_inner(const MultiIndex& a, const MultiIndex& b, const SpaceParams& sp, OracleMethod method,
                            const OracleConfig& config = {});

/// Monte Carlo estimates of several inner products from one shared set of
/// draws. The draws are split into a fixed number of chunks with their own
/// substreams, so the result depends on the seed only, not on config.jobs.
std::vector<OracleEstimate> monte_carlo_inner(const std::vector<std::pair<MultiIndex, MultiIndex>>& pairs,
                                              const SpaceParams& sp, const OracleConfig& config);

/// <T_{z^beta conj(z)^gamma} e_alpha, e_eta> with eta = alpha + beta - gamma,
/// evaluated as <z^{alpha+beta}, z^{alpha+beta}> / sqrt(<z^alpha, z^alpha> <z^eta, z^eta>).
/// Zero when eta has a negative component. Monte Carlo is rejected.
OracleEstimate oracle_toeplitz_coeff(const MultiIndex& beta, const MultiIndex& gamma, const MultiIndex& alpha,
                                     const SpaceParams& sp, OracleMethod method, const OracleConfig& config = {});

}  // namespace fockop

#endif  // FOCKOP_ORACLE_HPP

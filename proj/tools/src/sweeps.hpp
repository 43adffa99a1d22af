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

#ifndef FOCKOP_CLI_SWEEPS_HPP
#define FOCKOP_CLI_SWEEPS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "fockop/basis_expansion.hpp"
#include "fockop/oracle.hpp"

namespace fockop::cli {

constexpr std::size_t kMaxReportedFailures = 10;

struct OrthonormalitySweep {
  std::uint64_t pairs = 0;
  std::uint64_t failures = 0;
  std::vector<std::string> examples;
};

/// <e_alpha, e_eta> == delta exactly for all |alpha|, |eta| <= max_order.
OrthonormalitySweep sweep_orthonormality(const SpaceParams& sp, std::uint32_t max_order, unsigned jobs);

struct HankelSweep {
  std::uint64_t symbol_pairs = 0;
  std::uint64_t coefficients = 0;  // (pair, alpha) comparisons
  std::uint64_t mismatches = 0;
  std::vector<std::string> mismatch_examples;
  /// Pairs where "identically zero on the validity range" disagrees with
  /// "gamma = 0 or nu = 0".
  std::uint64_t vanishing_violations = 0;
  std::vector<std::string> vanishing_examples;
};

/// Closed form against T_{f̄g} - T_{f̄}T_g for all monomial pairs with
/// exponent components <= max_component and alpha components <= alpha_max
/// inside the validity range.
HankelSweep sweep_hankel_closed_form(const SpaceParams& sp, std::uint32_t max_component, std::uint32_t alpha_max,
                                     unsigned jobs);

struct OracleRow {
  MultiIndex a;
  double exact = 0.0;
  OracleEstimate estimate;
  bool agrees = false;
};

struct OracleSweep {
  std::vector<OracleRow> rows;
  double max_relative_error = 0.0;  // deterministic methods
  std::uint64_t disagreements = 0;
};

/// Diagonal <z^a, z^a>_m for |a| <= max_order against the exact engine.
/// Deterministic methods must agree to `relative_tolerance`; Monte Carlo
/// must bracket the exact value within `sigmas` standard errors.
OracleSweep sweep_oracle(const SpaceParams& sp, std::uint32_t max_order, OracleMethod method,
                         const OracleConfig& config, double relative_tolerance, double sigmas = 3.0);

}  // namespace fockop::cli

#endif  // FOCKOP_CLI_SWEEPS_HPP

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

#include "sweeps.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <thread>

#include "fockop/hankel.hpp"
#include "fockop/toeplitz.hpp"

namespace fockop::cli {

namespace {

// Runs body(i) for i in [0, count) on `jobs` threads, strided so the work
// mix is even. Callers store per-item results and merge them in index order.
void parallel_for(std::size_t count, unsigned jobs, const std::function<void(std::size_t)>& body) {
  const unsigned workers = static_cast<unsigned>(std::clamp<std::size_t>(jobs, 1, std::max<std::size_t>(count, 1)));
  if (workers == 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::vector<std::thread> threads;
  for (unsigned w = 0; w < workers; ++w) {
    threads.emplace_back([&, w] {
      for (std::size_t i = w; i < count; i += workers) body(i);
    });
  }
  for (auto& t : threads) t.join();
}

std::string pair_text(const MonomialPair& p) {
  return "beta=" + p.beta.to_string() + " gamma=" + p.gamma.to_string() + " mu=" + p.mu.to_string() +
         " nu=" + p.nu.to_string();
}

struct PairResult {
  std::uint64_t coefficients = 0;
  std::uint64_t mismatches = 0;
  std::string first_mismatch;
  bool checked_any = false;
  bool all_zero = true;
};

}  // namespace

OrthonormalitySweep sweep_orthonormality(const SpaceParams& sp, std::uint32_t max_order, unsigned jobs) {
  const auto indices = multi_indices_up_to_order(sp.n, max_order);
  std::vector<RadicalCoefficient> c(indices.size());
  parallel_for(indices.size(), jobs, [&](std::size_t i) { c[i] = basis_coefficient(indices[i], sp); });

  std::vector<std::vector<std::size_t>> bad(indices.size());
  parallel_for(indices.size(), jobs, [&](std::size_t i) {
    for (std::size_t j = 0; j < indices.size(); ++j) {
      const RadicalCoefficient inner = c[i] * c[j] * GaussianRational(monomial_inner(indices[i], indices[j], sp));
      if (inner != RadicalCoefficient(i == j ? 1 : 0)) bad[i].push_back(j);
    }
  });
  OrthonormalitySweep out;
  out.pairs = static_cast<std::uint64_t>(indices.size()) * indices.size();
  for (std::size_t i = 0; i < indices.size(); ++i) {
    for (std::size_t j : bad[i]) {
      ++out.failures;
      if (out.examples.size() < kMaxReportedFailures) {
        out.examples.push_back("alpha=" + indices[i].to_string() + " eta=" + indices[j].to_string());
      }
    }
  }
  return out;
}

HankelSweep sweep_hankel_closed_form(const SpaceParams& sp, std::uint32_t max_component, std::uint32_t alpha_max,
                                     unsigned jobs) {
  const auto exps = multi_indices_in_box(sp.n, max_component);
  const auto alphas = multi_indices_in_box(sp.n, alpha_max);
  std::vector<MonomialPair> pairs;
  for (const auto& beta : exps)
    for (const auto& gamma : exps)
      for (const auto& mu : exps)
        for (const auto& nu : exps) pairs.push_back({beta, gamma, mu, nu});

  std::vector<PairResult> results(pairs.size());
  parallel_for(pairs.size(), jobs, [&](std::size_t k) {
    const MonomialPair& p = pairs[k];
    const SymbolPolynomial f = SymbolPolynomial::monomial(p.beta, p.gamma);
    const SymbolPolynomial g = SymbolPolynomial::monomial(p.mu, p.nu);
    const MultiIndex bound = hankel_validity_bound(p);
    PairResult& r = results[k];
    for (const auto& alpha : alphas) {
      if (!dominates(alpha, bound)) continue;
      const RadicalCoefficient closed = hankel_coeff_closed_form(p, alpha, sp);
      BasisExpansion expected(sp);
      expected.add(hankel_target(p, alpha), closed);
      const BasisExpansion composed = hankel_product_apply(f, g, BasisExpansion::basis(sp, alpha));
      ++r.coefficients;
      r.checked_any = true;
      if (!closed.is_zero()) r.all_zero = false;
      if (composed != expected) {
        if (r.mismatches++ == 0) {
          r.first_mismatch = pair_text(p) + " alpha=" + alpha.to_string() + ": closed form " + closed.to_string() +
                             ", composition " + composed.to_string();
        }
      }
    }
  });

  HankelSweep out;
  out.symbol_pairs = pairs.size();
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    const PairResult& r = results[k];
    out.coefficients += r.coefficients;
    out.mismatches += r.mismatches;
    if (r.mismatches > 0 && out.mismatch_examples.size() < kMaxReportedFailures) {
      out.mismatch_examples.push_back(r.first_mismatch);
    }
    if (!r.checked_any) continue;
    const bool claimed_zero = pairs[k].gamma.is_zero() || pairs[k].nu.is_zero();
    if (r.all_zero != claimed_zero) {
      ++out.vanishing_violations;
      if (out.vanishing_examples.size() < kMaxReportedFailures) {
        out.vanishing_examples.push_back(pair_text(pairs[k]) +
                                         (r.all_zero ? ": identically zero" : ": not identically zero"));
      }
    }
  }
  return out;
}

OracleSweep sweep_oracle(const SpaceParams& sp, std::uint32_t max_order, OracleMethod method,
                         const OracleConfig& config, double relative_tolerance, double sigmas) {
  const auto indices = multi_indices_up_to_order(sp.n, max_order);
  OracleSweep out;
  std::vector<OracleEstimate> estimates;
  if (method == OracleMethod::MonteCarlo) {
    std::vector<std::pair<MultiIndex, MultiIndex>> pairs;
    for (const auto& a : indices) pairs.emplace_back(a, a);
    estimates = monte_carlo_inner(pairs, sp, config);
  } else {
    for (const auto& a : indices) estimates.push_back(oracle_inner(a, a, sp, method, config));
  }
  for (std::size_t i = 0; i < indices.size(); ++i) {
    OracleRow row{indices[i], monomial_inner(indices[i], indices[i], sp).to_double(), estimates[i], false};
    const double diff = std::abs(row.estimate.value - row.exact);
    if (method == OracleMethod::MonteCarlo) {
      row.agrees = diff <= sigmas * row.estimate.standard_error;
    } else {
      const double rel = diff / row.exact;
      out.max_relative_error = std::max(out.max_relative_error, rel);
      row.agrees = rel <= relative_tolerance;
    }
    if (!row.agrees) ++out.disagreements;
    out.rows.push_back(std::move(row));
  }
  return out;
}

}  // namespace fockop::cli

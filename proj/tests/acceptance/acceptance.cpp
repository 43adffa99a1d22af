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

// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <gmpxx.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "fockop/classify.hpp"
#include "fockop/growth.hpp"
#include "fockop/hankel.hpp"
#include "fockop/operator_expr.hpp"
#include "fockop/oracle.hpp"
#include "fockop/toeplitz.hpp"

namespace {

using namespace fockop;

struct Outcome {
  bool pass = false;
  std::string detail;
};

mpz_class fac(unsigned long k) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), k);
  return r;
}

// <z^a, z^a>_m straight from factorials.
mpq_class naive_norm2(const MultiIndex& a, const SpaceParams& sp) {
  mpz_class num = fac(sp.n - 1) * fac(sp.m + sp.n - 1 + a.order());
  for (auto ai : a.components()) num *= fac(ai);
  mpq_class q(num, fac(sp.m + sp.n - 1) * fac(sp.n - 1 + a.order()));
  q.canonicalize();
  return q;
}

Outcome orthonormality() {
  std::uint64_t pairs = 0;
  std::uint64_t failures = 0;
  std::string first;
  for (std::size_t n = 1; n <= 3; ++n) {
    for (std::size_t m = 0; m <= 3; ++m) {
      const SpaceParams sp(n, m);
      const auto idx = multi_indices_up_to_order(n, 8);
      std::vector<RadicalCoefficient> c;
      for (const auto& a : idx) {
        c.push_back(basis_coefficient(a, sp));
        if (monomial_inner(a, a, sp) != BigRational(naive_norm2(a, sp))) {
          ++failures;
          if (first.empty()) first = "norm of z^" + a.to_string();
        }
      }
      for (std::size_t i = 0; i < idx.size(); ++i) {
        for (std::size_t j = 0; j < idx.size(); ++j) {
          ++pairs;
          const RadicalCoefficient inner = c[i] * c[j] * GaussianRational(monomial_inner(idx[i], idx[j], sp));
          if (inner != RadicalCoefficient(i == j ? 1 : 0)) {
            ++failures;
            if (first.empty()) first = "n=" + std::to_string(n) + " m=" + std::to_string(m) + " " + idx[i].to_string() +
                                       " vs " + idx[j].to_string();
          }
        }
      }
    }
  }
  std::ostringstream d;
  d << pairs << " pairs, " << failures << " failures";
  if (!first.empty()) d << " (first: " << first << ")";
  return {failures == 0, d.str()};
}

Outcome hankel_closed_form() {
  std::uint64_t coefficients = 0;
  std::uint64_t mismatches = 0;
  std::uint64_t vanishing_violations = 0;
  std::string first_mismatch;
  std::string first_violation;
  std::ostringstream where;
  for (std::size_t n = 1; n <= 2; ++n) {
    const auto exps = multi_indices_in_box(n, 2);
    const auto alphas = multi_indices_in_box(n, 12);
    for (std::size_t m = 0; m <= 2; ++m) {
      const SpaceParams sp(n, m);
      std::uint64_t here = 0;
      for (const auto& beta : exps)
        for (const auto& gamma : exps)
          for (const auto& mu : exps)
            for (const auto& nu : exps) {
              const MonomialPair p{beta, gamma, mu, nu};
              const auto f = SymbolPolynomial::monomial(beta, gamma);
              const auto g = SymbolPolynomial::monomial(mu, nu);
              const MultiIndex bound = hankel_validity_bound(p);
              const bool claimed_zero = gamma.is_zero() || nu.is_zero();
              bool violated = false;
              for (const auto& alpha : alphas) {
                if (!dominates(alpha, bound)) continue;
                ++coefficients;
                const RadicalCoefficient closed = hankel_coeff_closed_form(p, alpha, sp);
                const BasisExpansion composed = hankel_product_apply(f, g, BasisExpansion::basis(sp, alpha));
                const MultiIndex target = hankel_target(p, alpha);
                const bool extra = composed.size() > (composed.coefficient(target).is_zero() ? 0u : 1u);
                if (extra || composed.coefficient(target) != closed) {
                  if (mismatches++ == 0) {
                    first_mismatch = "n=" + std::to_string(n) + " m=" + std::to_string(m) + " alpha=" +
                                     alpha.to_string() + " closed " + closed.to_string() + " composed " +
                                     composed.to_string();
                  }
                }
                if (closed.is_zero() != claimed_zero) violated = true;
              }
              if (violated) {
                ++here;
                if (first_violation.empty()) {
                  first_violation = "n=" + std::to_string(n) + " m=" + std::to_string(m) + " gamma=" +
                                    gamma.to_string() + " nu=" + nu.to_string() + " beta=" + beta.to_string() +
                                    " mu=" + mu.to_string();
                }
              }
            }
      vanishing_violations += here;
      if (here > 0) where << " n=" << n << ",m=" << m << ":" << here;
    }
  }
  std::ostringstream d;
  d << coefficients << " coefficients, " << mismatches << " closed-form mismatches";
  if (mismatches > 0) d << " (first: " << first_mismatch << ")";
  d << "; vanishing iff gamma=0 or nu=0: " << vanishing_violations << " violating symbol pairs";
  if (vanishing_violations > 0) d << " [" << where.str().substr(1) << "] (first: " << first_violation << ")";
  return {mismatches == 0 && vanishing_violations == 0, d.str()};
}

Outcome conjugate_identity() {
  const auto zbar = parse_symbol("conj(z)", 1);
  std::uint64_t failures = 0;
  std::ostringstream bad;
  for (std::size_t m = 0; m <= 3; ++m) {
    const SpaceParams sp(1, m);
    for (MultiIndex::value_type a = 0; a <= 50; ++a) {
      const auto e = BasisExpansion::basis(sp, {a});
      const BasisExpansion r = hankel_product_apply(zbar, zbar, e);
      if (r != e) {
        ++failures;
        bad << " m=" << m << ",alpha=" << a << "->" << r.to_string();
      }
    }
  }
  std::ostringstream d;
  d << "204 vectors, " << failures << " differ from e_alpha";
  if (failures > 0) d << ":" << bad.str();
  return {failures == 0, d.str()};
}

Outcome oracle_agreement() {
  double worst_q = 0.0;
  double worst_g = 0.0;
  for (std::size_t m = 0; m <= 3; ++m) {
    const SpaceParams sp(1, m);
    for (MultiIndex::value_type a = 0; a <= 10; ++a) {
      const double exact = monomial_inner({a}, {a}, sp).to_double();
      const double q = oracle_inner({a}, {a}, sp, OracleMethod::RadialQuadrature).value;
      const double g = oracle_inner({a}, {a}, sp, OracleMethod::GammaIdentity).value;
      worst_q = std::max(worst_q, std::abs(q - exact) / exact);
      worst_g = std::max(worst_g, std::abs(g - exact) / exact);
    }
  }
  OracleConfig config;
  config.seed = 42;
  config.samples = 10'000'000;
  std::uint64_t checked = 0;
  std::uint64_t outside = 0;
  double worst_sigma = 0.0;
  std::string first;
  for (std::size_t m = 0; m <= 2; ++m) {
    const SpaceParams sp(2, m);
    std::vector<std::pair<MultiIndex, MultiIndex>> pairs;
    for (const auto& a : multi_indices_up_to_order(2, 4)) pairs.emplace_back(a, a);
    const auto est = monte_carlo_inner(pairs, sp, config);
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      ++checked;
      const double exact = monomial_inner(pairs[k].first, pairs[k].first, sp).to_double();
      const double sigma = std::abs(est[k].value - exact) / est[k].standard_error;
      worst_sigma = std::max(worst_sigma, sigma);
      if (sigma > 3.0) {
        ++outside;
        if (first.empty()) first = "m=" + std::to_string(m) + " a=" + pairs[k].first.to_string();
      }
    }
  }
  const bool pass = worst_q <= 1e-10 && worst_g <= 1e-10 && outside == 0;
  std::ostringstream d;
  d << "n=1 max rel error quadrature " << worst_q << ", gamma " << worst_g << "; n=2 Monte Carlo seed 42, 1e7 samples: "
    << outside << "/" << checked << " outside 3 SE (max " << worst_sigma << " SE)";
  if (!first.empty()) d << " first " << first;
  return {pass, d.str()};
}

struct RateCheck {
  double fitted = 0.0;
  double worst_ratio = 0.0;  // max |ratio - 1| over t >= 2^10
};

RateCheck rate(const OperatorExpr& op, const SpaceParams& sp, const RaySpec& ray, double predicted) {
  const ExponentReport r = fit_exponent(sample_norms(op, sp, ray));
  RateCheck c{r.fitted, 0.0};
  for (std::size_t i = 0; i + 1 < r.samples.size(); ++i) {
    if (r.samples[i].t < 1024 || r.samples[i + 1].t != 2 * r.samples[i].t) continue;
    c.worst_ratio = std::max(c.worst_ratio, std::abs(ratio_stabilization(r.samples[i], r.samples[i + 1], predicted) - 1.0));
  }
  return c;
}

Outcome toeplitz_rate() {
  const auto f = parse_symbol("z*conj(z)", 1);
  const RaySpec ray{MultiIndex{0}, MultiIndex{1}, geometric_t(64, 4096)};
  const double predicted =
      predicted_exponent(GrowthKind::ToeplitzMonoProduct, MonomialPair{{1}, {1}, {1}, {1}}, ray).exponent->to_double();
  bool pass = true;
  std::ostringstream d;
  d << "predicted " << predicted << ";";
  for (std::size_t m : {0u, 2u}) {
    const RateCheck c = rate(toeplitz_product_operator(f, f), SpaceParams(1, m), ray, predicted);
    pass = pass && std::abs(c.fitted - 2.0) <= 0.05 && c.worst_ratio <= 0.02;
    d << " m=" << m << " fitted " << c.fitted << " ratio dev " << c.worst_ratio << ";";
  }
  return {pass, d.str()};
}

Outcome hankel_rate() {
  const SpaceParams sp(1, 0);
  const auto zbar2 = parse_symbol("conj(z)^2", 1);
  const auto zbar = parse_symbol("conj(z)", 1);
  const RateCheck two = rate(hankel_product_operator(zbar2, zbar2), sp, default_ray(zbar2, zbar2), 1.0);
  const RateCheck one = rate(hankel_product_operator(zbar, zbar), sp, default_ray(zbar, zbar), 0.0);
  std::ostringstream d;
  d << "conj(z)^2 fitted " << two.fitted << " (target 1 +- 0.05); conj(z) fitted " << one.fitted
    << " (target 0 +- 0.02)";
  return {std::abs(two.fitted - 1.0) <= 0.05 && std::abs(one.fitted) <= 0.02, d.str()};
}

enum class Kind { ToeplitzProduct, HankelProduct, Toeplitz, HankelBounded, HankelCompact };

struct Row {
  Kind kind;
  std::size_t n;
  const char* f;
  const char* g;
  bool expected;
};

Outcome truth_table() {
  const std::vector<Row> rows = {
      {Kind::ToeplitzProduct, 1, "3", "5", true},
      {Kind::ToeplitzProduct, 2, "z1", "1", false},
      {Kind::ToeplitzProduct, 1, "z*conj(z)", "z*conj(z)", false},
      {Kind::HankelProduct, 2, "z1^2", "conj(z1)*z1", true},
      {Kind::HankelProduct, 2, "z1^2", "conj(z2)^2 + z1", true},
      {Kind::HankelProduct, 1, "conj(z)", "z + 1", true},
      {Kind::HankelProduct, 1, "z + 2*conj(z)", "z^3 - conj(z)", true},
      {Kind::HankelProduct, 1, "conj(z)^2", "conj(z)^2", false},
      {Kind::HankelProduct, 2, "conj(z1)^2*z2", "conj(z1)", false},
      {Kind::HankelProduct, 2, "conj(z1)", "conj(z1)", false},
      {Kind::Toeplitz, 2, "conj(z2)", "", false},
      {Kind::Toeplitz, 1, "7", "", true},
      {Kind::HankelBounded, 1, "z^5 + 7*conj(z)", "", true},
      {Kind::HankelBounded, 2, "conj(z1)^2", "", false},
      {Kind::HankelCompact, 1, "z^5 + 7*conj(z)", "", false},
      {Kind::HankelCompact, 1, "z^3 - 2*i", "", true},
  };
  std::size_t failures = 0;
  std::ostringstream d;
  for (const Row& row : rows) {
    const SpaceParams sp(row.n, 1);
    const auto f = parse_symbol(row.f, row.n);
    const auto g = parse_symbol(*row.g ? row.g : row.f, row.n);
    Verdict v;
    OperatorExpr op = OperatorExpr::toeplitz(f);
    switch (row.kind) {
      case Kind::ToeplitzProduct:
        v = classify_toeplitz_product(f, g);
        op = toeplitz_product_operator(f, g);
        break;
      case Kind::HankelProduct:
        v = classify_hankel_product(f, g);
        op = hankel_product_operator(f, g);
        break;
      default: {
        const SingleKind k = row.kind == Kind::Toeplitz        ? SingleKind::Toeplitz
                             : row.kind == Kind::HankelBounded ? SingleKind::HankelBounded
                                                               : SingleKind::HankelCompact;
        v = classify_single(k, f);
        op = single_operator(k, f);
      }
    }
    const Corroboration c = corroborate(v, op, sp, default_ray(f, g));
    const bool ok = v.holds == row.expected && c.consistent;
    if (!ok) ++failures;
    std::printf("    %-4s n=%zu %-28s %s: %s %s, %s\n", ok ? "ok" : "BAD", row.n, op.to_string().c_str(),
                to_string(v.property).data(), v.holds ? "yes" : "no", std::string(to_string(v.matched_case)).c_str(),
                c.detail.c_str());
  }
  d << rows.size() << " rows, " << failures << " failing";
  return {failures == 0, d.str()};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"1 exact orthonormality", orthonormality},
      {"2 Hankel closed form and vanishing criterion", hankel_closed_form},
      {"3 H*_conj(z) H_conj(z) e_alpha = e_alpha", conjugate_identity},
      {"4 oracle agreement", oracle_agreement},
      {"5 Toeplitz product growth rate", toeplitz_rate},
      {"6 Hankel product growth rate", hankel_rate},
      {"7 classifier truth table", truth_table},
  };
  int failed = 0;
  for (const auto& [name, check] : criteria) {
    const auto start = std::chrono::steady_clock::now();
    const Outcome o = check();
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s criterion %s (%.1fs): %s\n", o.pass ? "PASS" : "FAIL", name, secs, o.detail.c_str());
    std::fflush(stdout);
    if (!o.pass) ++failed;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}

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

#include <benchmark/benchmark.h>

#include "fockop/factorial_ratio.hpp"
#include "fockop/growth.hpp"
#include "fockop/hankel.hpp"
#include "fockop/oracle.hpp"
#include "fockop/toeplitz.hpp"

namespace {

using namespace fockop;

void BM_MonomialNorm(benchmark::State& state) {
  const SpaceParams sp(3, 2);
  const auto k = static_cast<MultiIndex::value_type>(state.range(0));
  const MultiIndex a{k, k / 2, k / 3};
  for (auto _ : state) benchmark::DoNotOptimize(monomial_inner(a, a, sp));
}
BENCHMARK(BM_MonomialNorm)->RangeMultiplier(8)->Range(8, 4096);

void BM_BasisCoefficient(benchmark::State& state) {
  const SpaceParams sp(2, 3);
  const auto k = static_cast<MultiIndex::value_type>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(basis_coefficient({k, k + 1}, sp));
}
BENCHMARK(BM_BasisCoefficient)->RangeMultiplier(8)->Range(8, 4096);

void BM_ToeplitzApply(benchmark::State& state) {
  const SpaceParams sp(2, 1);
  const auto f = parse_symbol("z1*conj(z1) + 3*z2^2*conj(z1) - i*conj(z2)^2", 2);
  const auto k = static_cast<MultiIndex::value_type>(state.range(0));
  const auto v = BasisExpansion::basis(sp, {k, k});
  for (auto _ : state) benchmark::DoNotOptimize(toeplitz_apply(f, v));
}
BENCHMARK(BM_ToeplitzApply)->RangeMultiplier(8)->Range(8, 4096);

void BM_HankelClosedForm(benchmark::State& state) {
  const SpaceParams sp(2, 2);
  const MonomialPair p{{1, 0}, {2, 1}, {0, 2}, {1, 2}};
  const auto k = static_cast<MultiIndex::value_type>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(hankel_coeff_closed_form(p, {k, k}, sp));
}
BENCHMARK(BM_HankelClosedForm)->RangeMultiplier(8)->Range(8, 4096);

void BM_HankelComposition(benchmark::State& state) {
  const SpaceParams sp(2, 2);
  const auto f = SymbolPolynomial::monomial({1, 0}, {2, 1});
  const auto g = SymbolPolynomial::monomial({0, 2}, {1, 2});
  const auto k = static_cast<MultiIndex::value_type>(state.range(0));
  const auto v = BasisExpansion::basis(sp, {k, k});
  for (auto _ : state) benchmark::DoNotOptimize(hankel_product_apply(f, g, v));
}
BENCHMARK(BM_HankelComposition)->RangeMultiplier(8)->Range(8, 4096);

void BM_NormSweep(benchmark::State& state) {
  const SpaceParams sp(1, 0);
  const auto op = parse_operator("T(z*conj(z)) * T(z*conj(z))", 1);
  const RaySpec ray{MultiIndex{0}, MultiIndex{1}, geometric_t(64, 4096)};
  for (auto _ : state) benchmark::DoNotOptimize(fit_exponent(sample_norms(op, sp, ray)));
}
BENCHMARK(BM_NormSweep);

void BM_MonteCarlo(benchmark::State& state) {
  OracleConfig config;
  config.samples = static_cast<std::uint64_t>(state.range(0));
  std::vector<std::pair<MultiIndex, MultiIndex>> pairs;
  for (const auto& a : multi_indices_up_to_order(2, 4)) pairs.emplace_back(a, a);
  for (auto _ : state) benchmark::DoNotOptimize(monte_carlo_inner(pairs, SpaceParams(2, 1), config));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_MonteCarlo)->Arg(100'000);

}  // namespace

BENCHMARK_MAIN();

// Copyright 2026 The pcone Authors
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

#include <cstdint>
#include <random>
#include <vector>

#include "pcone/autgroup.h"
#include "pcone/cone.h"
#include "pcone/duality.h"
#include "pcone/exponent.h"
#include "pcone/linear_map.h"
#include "pcone/pnorm.h"

namespace pcone {
namespace {

// Exponents indexed by the first benchmark argument.
Exponent ExponentAt(std::int64_t index) {
  switch (index) {
    case 0: return Exponent::Finite(1.0);
    case 1: return Exponent::Finite(1.5);
    case 2: return Exponent::Finite(3.0);
    default: return Exponent::Infinity();
  }
}

Vec RandomVec(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  Vec v(n);
  for (int i = 0; i < n; ++i) v[i] = normal(rng);
  return v;
}

void BM_Norm(benchmark::State& state) {
  const Exponent p = ExponentAt(state.range(0));
  const Vec x = RandomVec(static_cast<int>(state.range(1)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(Norm(x, p));
  state.SetItemsProcessed(state.iterations() * x.size());
}
BENCHMARK(BM_Norm)->ArgsProduct({{0, 1, 2, 3}, {4, 64, 1024}});

void BM_Hessian(benchmark::State& state) {
  const Exponent p = Exponent::Finite(3.0);
  const Vec x = RandomVec(static_cast<int>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(Hessian(x, p));
}
BENCHMARK(BM_Hessian)->Arg(4)->Arg(16)->Arg(64);

void BM_Project(benchmark::State& state) {
  const Exponent p = ExponentAt(state.range(0));
  const int dim = static_cast<int>(state.range(1));
  const ConeSpec spec = ConeSpec::Make(p, dim);
  std::vector<ConePoint> points;
  for (std::uint64_t s = 0; s < 64; ++s) {
    points.push_back(ConePoint::FromStacked(RandomVec(dim, 100 + s)));
  }
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(Project(spec, points[i]));
    i = (i + 1) % points.size();
  }
}
BENCHMARK(BM_Project)->ArgsProduct({{0, 1, 2, 3}, {3, 16, 128}});

void BM_Violation(benchmark::State& state) {
  const ConeSpec from = ConeSpec::Make(Exponent::Finite(1.0), 3);
  const ConeSpec to = ConeSpec::Make(Exponent::Infinity(), 3);
  const SampleNet net =
      SampleNet::Make(from, to, static_cast<int>(state.range(0)), 42);
  const LinearMap a = K1ToKInfMap();
  const Matrix a_inverse = a.Inverse().matrix();
  for (auto _ : state) {
    benchmark::DoNotOptimize(Violation(a.matrix(), a_inverse, net));
  }
}
BENCHMARK(BM_Violation)->Arg(200)->Arg(1000);

void BM_SamplingOracle(benchmark::State& state) {
  const int dim = static_cast<int>(state.range(0));
  const ConeSpec spec = ConeSpec::Make(Exponent::Finite(1.5), dim);
  const std::vector<ConePoint> net = SampleBoundary(spec, 1000, 7);
  const LinearMap a = RandomAutomorphism(spec, 3).ToLinearMap();
  for (auto _ : state) {
    benchmark::DoNotOptimize(SamplingOracleAutomorphism(a, spec, net, 1e-9));
  }
}
BENCHMARK(BM_SamplingOracle)->Arg(3)->Arg(8);

}  // namespace
}  // namespace pcone

// The packaged benchmark_main archive is not linkable with every toolchain.
BENCHMARK_MAIN();

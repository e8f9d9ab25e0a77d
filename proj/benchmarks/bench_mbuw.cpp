// Copyright (c) 2026 The mbuw authors
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

#include "mbuw/datasets.hpp"
#include "mbuw/distributions.hpp"
#include "mbuw/estimation.hpp"
#include "mbuw/goodness_of_fit.hpp"
#include "mbuw/special_functions.hpp"

namespace {

using namespace mbuw;

void BM_MbuwLogPdf(benchmark::State& state) {
  const CoreParam a(5.21392);
  double y = 0.0001;
  for (auto _ : state) {
    benchmark::DoNotOptimize(mbuw_log_pdf(a, y));
    y += 1e-7;
  }
}
BENCHMARK(BM_MbuwLogPdf);

void BM_MbuwQuantile(benchmark::State& state) {
  const CoreParam a(2.0);
  double u = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(mbuw_quantile(a, u));
    u = u < 0.9 ? u + 1e-7 : 0.1;
  }
}
BENCHMARK(BM_MbuwQuantile);

void BM_NllDwellings(benchmark::State& state) {
  const UnitData& d = builtin(DatasetId::Dwellings).data;
  const std::vector<double> theta = {2.2834};
  for (auto _ : state)
    benchmark::DoNotOptimize(nll(ModelKind::MBUR, theta, d));
}
BENCHMARK(BM_NllDwellings);

void BM_FitMburDwellings(benchmark::State& state) {
  const UnitData& d = builtin(DatasetId::Dwellings).data;
  for (auto _ : state) {
    const FitResult f = fit(ModelKind::MBUR, d);
    benchmark::DoNotOptimize(f.nll);
  }
}
BENCHMARK(BM_FitMburDwellings)->Unit(benchmark::kMillisecond);

void BM_KolmogorovExact(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(kolmogorov_cdf(n, 0.18));
}
BENCHMARK(BM_KolmogorovExact)->Arg(20)->Arg(35)->Arg(140);

void BM_KsTestDwellings(benchmark::State& state) {
  const UnitData& d = builtin(DatasetId::Dwellings).data;
  const CoreParam a(5.21392);
  for (auto _ : state) {
    const KsResult r = ks_test(d, [&](double y) { return mbuw_cdf(a, y); });
    benchmark::DoNotOptimize(r.p_value);
  }
}
BENCHMARK(BM_KsTestDwellings);

void BM_NormalizationQuadrature(benchmark::State& state) {
  const CoreParam a(5.21392);
  for (auto _ : state) {
    const QuadratureResult q = integrate(
        [&](double y) { return mbuw_pdf(a, y); }, 0.0, 1.0, 1e-9, 2000000);
    benchmark::DoNotOptimize(q.value);
  }
}
BENCHMARK(BM_NormalizationQuadrature)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();

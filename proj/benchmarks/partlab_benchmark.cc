// Copyright 2026 The Partlab Authors
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

#include <cmath>
#include <cstdint>

#include "partlab/genfun.h"
#include "partlab/growth.h"
#include "partlab/part_set.h"
#include "partlab/partition_table.h"

namespace partlab {
namespace {

void BM_PartitionTableDpAll(benchmark::State& state) {
  const auto limit = static_cast<uint64_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(PartitionTableDp(MakeAll(), limit));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_PartitionTableDpAll)->RangeMultiplier(2)->Range(500, 8000)->Unit(
    benchmark::kMillisecond)->Complexity();

void BM_PartitionTableDpOddParts(benchmark::State& state) {
  const auto limit = static_cast<uint64_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(PartitionTableDp(MakeResidues(2, {1}), limit));
  }
}
BENCHMARK(BM_PartitionTableDpOddParts)->Arg(2000)->Arg(10000)->Unit(
    benchmark::kMillisecond);

void BM_Pentagonal(benchmark::State& state) {
  const auto limit = static_cast<uint64_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(UnrestrictedTablePentagonal(limit));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Pentagonal)->RangeMultiplier(2)->Range(1000, 32000)->Unit(
    benchmark::kMillisecond)->Complexity();

void BM_GrowthRatioSeries(benchmark::State& state) {
  const auto table = UnrestrictedTablePentagonal(50000);
  for (auto _ : state) {
    benchmark::DoNotOptimize(GrowthRatioSeries(table, {1000, 10000, 50000}));
  }
}
BENCHMARK(BM_GrowthRatioSeries);

void BM_LogFEval(benchmark::State& state) {
  const long double x = 1 - std::ldexp(1.0L, -static_cast<int>(state.range(0)));
  const PartSetSpec spec = MakeResidues(2, {1});
  for (auto _ : state) {
    benchmark::DoNotOptimize(LogFEval(spec, x, kDefaultLogFTolerance));
  }
}
BENCHMARK(BM_LogFEval)->DenseRange(8, 14, 2)->Unit(benchmark::kMillisecond);

void BM_SbViaCountingIdentity(benchmark::State& state) {
  const auto n = static_cast<uint64_t>(state.range(0));
  const PartSetSpec spec = MakeResidues(2, {1});
  for (auto _ : state) {
    benchmark::DoNotOptimize(SbViaCountingIdentity(spec, n));
  }
}
BENCHMARK(BM_SbViaCountingIdentity)->Arg(10000)->Arg(100000)->Unit(
    benchmark::kMillisecond);

void BM_BCoefficients(benchmark::State& state) {
  const auto limit = static_cast<uint64_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(BCoefficients(MakePrimes(), limit));
  }
}
BENCHMARK(BM_BCoefficients)->Arg(500)->Arg(2000)->Unit(benchmark::kMillisecond);

void BM_MobiusRoundTrip(benchmark::State& state) {
  const auto limit = static_cast<uint64_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(CheckMobiusRoundTrip(MakeAll(), limit));
  }
}
BENCHMARK(BM_MobiusRoundTrip)->Arg(500)->Arg(2000)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace partlab

BENCHMARK_MAIN();

// Copyright 2026 The Equivariant Trisection Diagrams Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "etd/catalog.hpp"
#include "etd/cmap.hpp"
#include "etd/cover.hpp"
#include "etd/diagram.hpp"
#include "etd/quotient.hpp"
#include "etd/triang.hpp"

namespace etd {
namespace {

void BM_Canonicalize(benchmark::State& state) {
  const ShadowDiagram d = ByName("d6_s4").diagram;
  const auto labels = d.Labels();
  for (auto _ : state) {
    benchmark::DoNotOptimize(Canonicalize(d.surface(), labels));
  }
  state.counters["darts"] = d.surface().num_darts();
}
BENCHMARK(BM_Canonicalize)->Unit(benchmark::kMillisecond);

void BM_Validate(benchmark::State& state) {
  const std::vector<std::string> names = CatalogNames();
  const ShadowDiagram d = ByName(names[state.range(0)]).diagram;
  for (auto _ : state) benchmark::DoNotOptimize(ValidateTrisection(d));
  state.SetLabel(names[state.range(0)]);
}
BENCHMARK(BM_Validate)
    ->DenseRange(0, static_cast<int>(CatalogNames().size()) - 1)
    ->Unit(benchmark::kMillisecond);

void BM_Q8Lift(benchmark::State& state) {
  const CatalogEntry e = Q8LinkBase();
  const VoltageReduction& r = e.reductions[state.range(0)];
  for (auto _ : state) {
    benchmark::DoNotOptimize(DerivedCover(e.diagram, r.voltages));
  }
  state.SetLabel(r.name);
}
BENCHMARK(BM_Q8Lift)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);

void BM_Q8LiftAndValidate(benchmark::State& state) {
  const CatalogEntry e = Q8LinkBase();
  const VoltageReduction& r = e.reductions.back();
  for (auto _ : state) {
    const CoverResult c = DerivedCover(e.diagram, r.voltages);
    benchmark::DoNotOptimize(ValidateTrisection(c.lifted));
  }
}
BENCHMARK(BM_Q8LiftAndValidate)->Unit(benchmark::kMillisecond);

void BM_Quotient(benchmark::State& state) {
  const CatalogEntry e = ByName("d6_s4");
  for (auto _ : state) {
    benchmark::DoNotOptimize(Quotient(e.diagram, e.action, e.action.generators));
  }
}
BENCHMARK(BM_Quotient)->Unit(benchmark::kMillisecond);

void BM_TriangulationCounting(benchmark::State& state) {
  const GTriangulation k = BoundaryOfSimplex5();
  for (auto _ : state) benchmark::DoNotOptimize(TrisectionParameters(k));
}
BENCHMARK(BM_TriangulationCounting)->Unit(benchmark::kMillisecond);

void BM_SigmaOracle(benchmark::State& state) {
  const GTriangulation k =
      state.range(0) == 0 ? DoublePentachoron() : BoundaryOfSimplex5();
  for (auto _ : state) benchmark::DoNotOptimize(SigmaOracle(k));
  state.SetLabel(k.name);
}
BENCHMARK(BM_SigmaOracle)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace etd

BENCHMARK_MAIN();

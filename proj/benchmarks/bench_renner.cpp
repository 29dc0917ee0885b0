// Copyright 2026 The renner Authors
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

#include <string>
#include <vector>

#include "renner/engine.hpp"
#include "renner/model.hpp"
#include "renner/presentation.hpp"

namespace {

using renner::Engine;
using renner::Family;
using renner::MonoidFamily;

void BM_Enumerate(benchmark::State& state, MonoidFamily f) {
  std::size_t size = 0;
  for (auto _ : state) {
    size = renner::enumerate_monoid(f).size();
    benchmark::DoNotOptimize(size);
  }
  state.counters["elements"] = static_cast<double>(size);
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(size));
}

void BM_EngineBuild(benchmark::State& state, MonoidFamily f) {
  for (auto _ : state) {
    Engine eng(f);
    benchmark::DoNotOptimize(eng.admissible_triple_count());
  }
}

void BM_NormalDecompose(benchmark::State& state, MonoidFamily f) {
  Engine const eng(f);
  std::vector<renner::PartialInjection> values;
  for (const auto& t : eng.admissible_triples()) {
    values.push_back(eng.evaluate(t));
  }
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(eng.normal_decompose(values[i]));
    i = i + 1 == values.size() ? 0 : i + 1;
  }
  state.SetItemsProcessed(state.iterations());
}

void BM_Multiply(benchmark::State& state, MonoidFamily f) {
  Engine const eng(f);
  std::vector<renner::NormalForm> const all = eng.admissible_triples();
  std::size_t i = 0, j = all.size() / 2;
  for (auto _ : state) {
    benchmark::DoNotOptimize(eng.multiply(all[i], all[j]));
    i = i + 1 == all.size() ? 0 : i + 1;
    j = j + 3 >= all.size() ? 0 : j + 3;
  }
  state.SetItemsProcessed(state.iterations());
}

void BM_VerifyFull(benchmark::State& state, MonoidFamily f) {
  Engine const eng(f);
  renner::Presentation const p = renner::generate_full(eng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(renner::verify_relations(eng, p).ok());
  }
  state.counters["relations"] = static_cast<double>(p.relations.size());
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<MonoidFamily> const families{
      {Family::A, 4}, {Family::A, 6}, {Family::B, 3},
      {Family::B, 4}, {Family::D, 4}, {Family::D, 5}};
  for (const MonoidFamily& f : families) {
    std::string const n = f.name();
    benchmark::RegisterBenchmark(("Enumerate/" + n).c_str(), BM_Enumerate, f)
        ->Unit(benchmark::kMillisecond);
    benchmark::RegisterBenchmark(("EngineBuild/" + n).c_str(), BM_EngineBuild,
                                 f)
        ->Unit(benchmark::kMillisecond);
    benchmark::RegisterBenchmark(("NormalDecompose/" + n).c_str(),
                                 BM_NormalDecompose, f);
    benchmark::RegisterBenchmark(("Multiply/" + n).c_str(), BM_Multiply, f);
    benchmark::RegisterBenchmark(("VerifyFull/" + n).c_str(), BM_VerifyFull, f)
        ->Unit(benchmark::kMicrosecond);
  }
  benchmark::Initialize(&argc, argv);
  if (benchmark::ReportUnrecognizedArguments(argc, argv)) {
    return 1;
  }
  benchmark::RunSpecifiedBenchmarks();
  benchmark::Shutdown();
  return 0;
}

// Copyright 2026 The GEF Authors. All Rights Reserved.
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

#include "gef/characteristics.hpp"
#include "gef/transfer_function.hpp"

namespace {

void BM_EvalTf(benchmark::State& state) {
  const auto p = gef::make_params(0.1, 1.0, gef::Rational(7, 3));
  double beta = 0.5;
  for (auto _ : state) {
    benchmark::DoNotOptimize(gef::eval_tf(p, beta));
    beta = beta < 2.0 ? beta + 1e-3 : 0.5;
  }
}
BENCHMARK(BM_EvalTf);

void BM_Bode(benchmark::State& state) {
  const auto p = gef::make_params(0.1, 1.0, gef::Rational(5, 2));
  const auto grid = gef::log_grid(0.05, 4.0, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(gef::bode(p, grid));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Bode)->Arg(1000)->Arg(100000);

void BM_Characteristics(benchmark::State& state) {
  const auto p = gef::make_params(0.1, 1.0, gef::Rational(10, 3));
  for (auto _ : state) benchmark::DoNotOptimize(gef::characteristics(p));
}
BENCHMARK(BM_Characteristics)->Unit(benchmark::kMicrosecond);

}  // namespace

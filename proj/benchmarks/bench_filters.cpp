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

#include "gef/filterbank.hpp"
#include "gef/signals.hpp"

namespace {

// One channel on the integer fixture input, 60 scaled-time units at step 0.01.
void BM_FilterMethod(benchmark::State& state) {
  const auto method = static_cast<gef::Method>(state.range(0));
  const auto p = gef::make_params(0.1, 1.0, gef::Rational(3));
  const gef::SampledSignal u = gef::integer_equiv_input().sample(0.01, 6001);
  for (auto _ : state) benchmark::DoNotOptimize(gef::apply_method(u, p, method));
  state.SetLabel(gef::to_string(method));
}
BENCHMARK(BM_FilterMethod)
    ->DenseRange(static_cast<int>(gef::Method::Integral), static_cast<int>(gef::Method::Dft))
    ->Unit(benchmark::kMillisecond);

void BM_Bank(benchmark::State& state) {
  const gef::Filterbank bank =
      gef::build(gef::CfMap::log_spaced(static_cast<std::size_t>(state.range(0)), 200.0, 4000.0),
                 gef::FilterParams{0.1, 1.0, gef::Rational(5, 2), {}});
  const gef::AnalyticInput in = gef::tone_pips(1000.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(gef::process(bank, in, 1.0 / 16000.0, 1600, gef::Method::Integral));
  }
}
BENCHMARK(BM_Bank)->Arg(4)->Arg(16)->Unit(benchmark::kMillisecond);

}  // namespace

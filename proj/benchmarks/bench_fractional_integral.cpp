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

#include <cmath>

#include "gef/fractional_integral.hpp"

namespace {

std::vector<gef::Complex> input(std::size_t n) {
  std::vector<gef::Complex> f(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double t = 0.01 * static_cast<double>(i);
    f[i] = gef::Complex(std::sin(t), std::cos(0.3 * t));
  }
  return f;
}

void BM_RlDirect(benchmark::State& state) {
  const auto f = input(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(gef::rl_integral(f, 2.5, 0.01, gef::RlMethod::Direct));
  }
}
BENCHMARK(BM_RlDirect)->RangeMultiplier(4)->Range(1 << 10, 1 << 14)->Unit(benchmark::kMillisecond);

void BM_RlFast(benchmark::State& state) {
  const auto f = input(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(gef::rl_integral(f, 2.5, 0.01, gef::RlMethod::Fast));
  }
}
BENCHMARK(BM_RlFast)->RangeMultiplier(4)->Range(1 << 10, 1 << 18)->Unit(benchmark::kMillisecond);

void BM_StreamingPush(benchmark::State& state) {
  const auto p = gef::make_params(0.1, 1.0, gef::Rational(5, 2));
  for (auto _ : state) {
    gef::StreamingIntegralFilter filter(p, 0.01);
    for (int i = 0; i < state.range(0); ++i) benchmark::DoNotOptimize(filter.push(std::sin(0.01 * i)));
  }
}
BENCHMARK(BM_StreamingPush)->Arg(2000)->Unit(benchmark::kMillisecond);

}  // namespace

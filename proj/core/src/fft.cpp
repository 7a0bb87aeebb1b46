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

#include "gef/fft.hpp"

#include <fftw3.h>

#include <algorithm>
#include <mutex>

namespace gef::fft {

namespace {

// FFTW planning is not thread-safe; execution of distinct plans is.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

struct Plan {
  fftw_plan handle = nullptr;
  ~Plan() {
    if (handle) {
      std::lock_guard lock(planner_mutex());
      fftw_destroy_plan(handle);
    }
  }
};

fftw_complex* as_fftw(Complex* p) { return reinterpret_cast<fftw_complex*>(p); }

}  // namespace

std::size_t next_pow2(std::size_t n) {
  std::size_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

std::vector<Complex> forward_real(std::span<const double> x) {
  const std::size_t n = x.size();
  std::vector<double> in(x.begin(), x.end());
  std::vector<Complex> out(n / 2 + 1);
  if (n == 0) return out;
  Plan plan;
  {
    std::lock_guard lock(planner_mutex());
    plan.handle = fftw_plan_dft_r2c_1d(static_cast<int>(n), in.data(),
                                       as_fftw(out.data()), FFTW_ESTIMATE);
  }
  fftw_execute(plan.handle);
  return out;
}

std::vector<double> inverse_real(std::span<const Complex> spectrum,
                                 std::size_t n) {
  std::vector<Complex> in(spectrum.begin(), spectrum.end());
  in.resize(n / 2 + 1);
  std::vector<double> out(n);
  if (n == 0) return out;
  Plan plan;
  {
    std::lock_guard lock(planner_mutex());
    plan.handle = fftw_plan_dft_c2r_1d(static_cast<int>(n), as_fftw(in.data()),
                                       out.data(), FFTW_ESTIMATE);
  }
  fftw_execute(plan.handle);
  const double scale = 1.0 / static_cast<double>(n);
  for (double& v : out) v *= scale;
  return out;
}

void transform(std::vector<Complex>& data, int sign) {
  if (data.empty()) return;
  Plan plan;
  {
    std::lock_guard lock(planner_mutex());
    plan.handle = fftw_plan_dft_1d(static_cast<int>(data.size()),
                                   as_fftw(data.data()), as_fftw(data.data()),
                                   sign < 0 ? FFTW_FORWARD : FFTW_BACKWARD,
                                   FFTW_ESTIMATE);
  }
  fftw_execute(plan.handle);
}

std::vector<Complex> convolve(std::span<const Complex> a,
                              std::span<const double> b) {
  if (a.empty() || b.empty()) return {};
  const std::size_t len = a.size() + b.size() - 1;
  const std::size_t n = next_pow2(len);
  std::vector<Complex> fa(n), fb(n);
  std::copy(a.begin(), a.end(), fa.begin());
  std::copy(b.begin(), b.end(), fb.begin());
  transform(fa, -1);
  transform(fb, -1);
  for (std::size_t i = 0; i < n; ++i) fa[i] *= fb[i];
  transform(fa, +1);
  const double scale = 1.0 / static_cast<double>(n);
  fa.resize(len);
  for (Complex& v : fa) v *= scale;
  return fa;
}

std::vector<double> convolve(std::span<const double> a,
                             std::span<const double> b) {
  if (a.empty() || b.empty()) return {};
  const std::size_t len = a.size() + b.size() - 1;
  const std::size_t n = next_pow2(len);
  std::vector<double> pa(n, 0.0), pb(n, 0.0);
  std::copy(a.begin(), a.end(), pa.begin());
  std::copy(b.begin(), b.end(), pb.begin());
  auto fa = forward_real(pa);
  const auto fb = forward_real(pb);
  for (std::size_t i = 0; i < fa.size(); ++i) fa[i] *= fb[i];
  auto out = inverse_real(fa, n);
  out.resize(len);
  return out;
}

}  // namespace gef::fft

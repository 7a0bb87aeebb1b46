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

#include "gef/fractional_integral.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "gef/csv.hpp"
#include "gef/fft.hpp"
#include "gef/parallel.hpp"
#include "gef/special.hpp"

namespace gef {

namespace {

// Below this index the weights are formed directly; above it the direct
// differences lose about log10(k^2) digits, so a binomial series is used.
constexpr std::size_t kSeriesFrom = 8;
constexpr std::size_t kDirectLimit = 512;

double interior_weight(double g, std::size_t k) {
  if (k == 0) return 1.0;
  const double x = static_cast<double>(k);
  if (k < kSeriesFrom) {
    return std::pow(x + 1.0, g) - 2.0 * std::pow(x, g) + std::pow(x - 1.0, g);
  }
  // k^g ((1 + 1/k)^g + (1 - 1/k)^g - 2) = 2 k^g sum_m C(g, 2m) k^(-2m).
  const double inv2 = 1.0 / (x * x);
  double binom = 1.0;
  double power = 1.0;
  double sum = 0.0;
  for (int m = 1; m < 60; ++m) {
    binom *= (g - (2 * m - 2)) * (g - (2 * m - 1)) / ((2.0 * m - 1.0) * (2.0 * m));
    power *= inv2;
    const double term = binom * power;
    sum += term;
    if (std::abs(term) <= 1e-18 * std::abs(sum) || binom == 0.0) break;
  }
  return 2.0 * std::pow(x, g) * sum;
}

double start_weight(double alpha, std::size_t n) {
  if (n == 0) return 0.0;
  const double g = alpha + 1.0;
  const double x = static_cast<double>(n);
  if (n < kSeriesFrom) {
    return std::pow(x - 1.0, g) - (x - 1.0 - alpha) * std::pow(x, alpha);
  }
  // n^g sum_{m >= 2} C(g, m) (-1/n)^m.
  double binom = g;  // C(g, 1)
  double power = -1.0 / x;
  double sum = 0.0;
  for (int m = 2; m < 80; ++m) {
    binom *= (g - (m - 1)) / m;
    power *= -1.0 / x;
    const double term = binom * power;
    sum += term;
    if (std::abs(term) <= 1e-18 * std::abs(sum) || binom == 0.0) break;
  }
  return std::pow(x, g) * sum;
}

void check_order(double order, double step) {
  if (!(order > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "RL order must be positive");
  }
  if (!(step > 0.0)) {
    throw Error(ErrorCode::InvalidGrid, "grid step must be positive");
  }
}

template <typename T>
std::vector<T> rl_direct(std::span<const T> f, const RlWeights& w) {
  std::vector<T> out(f.size(), T{});
  parallel_for(f.size(), [&](std::size_t n) {
    if (n == 0) return;
    T acc = w.start(n) * f[0];
    for (std::size_t j = 1; j <= n; ++j) acc += w.interior(n - j) * f[j];
    out[n] = w.scale() * acc;
  });
  return out;
}

// Causal convolution out[n] += sum_{lo <= j <= n} w[n - j] f[j] for n in
// [lo, hi). Sources left of mid reach targets right of mid through one FFT,
// so every FFT only mixes earlier data into later outputs and rounding stays
// relative to the local scale of the data, which can grow like e^(A t).
template <typename T>
void relaxed_convolve(std::span<const T> f, std::span<const double> w, std::vector<T>& out,
                      std::size_t lo, std::size_t hi) {
  constexpr std::size_t kLeaf = 64;
  if (hi - lo <= kLeaf) {
    for (std::size_t n = lo; n < hi; ++n) {
      T acc{};
      for (std::size_t j = lo; j <= n; ++j) acc += w[n - j] * f[j];
      out[n] += acc;
    }
    return;
  }
  const std::size_t mid = lo + (hi - lo) / 2;
  relaxed_convolve(f, w, out, lo, mid);
  const auto conv = fft::convolve(f.subspan(lo, mid - lo), w.subspan(0, hi - lo));
  for (std::size_t n = mid; n < hi; ++n) out[n] += conv[n - lo];
  relaxed_convolve(f, w, out, mid, hi);
}

template <typename T>
std::vector<T> rl_fast(std::span<const T> f, const RlWeights& w) {
  std::vector<T> conv(f.size(), T{});
  relaxed_convolve(f, w.interior_weights(), conv, 0, f.size());
  std::vector<T> out(f.size(), T{});
  for (std::size_t n = 1; n < f.size(); ++n) {
    out[n] = w.scale() * (conv[n] + (w.start(n) - w.interior(n)) * f[0]);
  }
  return out;
}

template <typename T>
std::vector<T> rl_dispatch(std::span<const T> f, double order, double step,
                           RlMethod method) {
  check_order(order, step);
  if (f.empty()) return {};
  const RlWeights w(order, step, f.size());
  const bool fast =
      method == RlMethod::Fast || (method == RlMethod::Auto && f.size() > kDirectLimit);
  return fast ? rl_fast(f, w) : rl_direct(f, w);
}

void require_integral_exponent(const ValidatedParams& params) {
  if (!(params.exponent() > 1.0)) {
    throw Error(ErrorCode::UnsupportedExponent,
                "integral representation needs B_u > 1, got " +
                    params.b_u().to_string());
  }
}

}  // namespace

RlWeights::RlWeights(double order, double step, std::size_t count)
    : order_(order), step_(step) {
  check_order(order, step);
  scale_ = std::pow(step, order) / gamma_fn(order + 2.0);
  interior_.resize(count);
  start_.resize(count);
  const double g = order + 1.0;
  for (std::size_t k = 0; k < count; ++k) {
    interior_[k] = interior_weight(g, k);
    start_[k] = start_weight(order, k);
  }
}

std::vector<Complex> rl_integral(std::span<const Complex> f, double order,
                                 double step, RlMethod method) {
  return rl_dispatch(f, order, step, method);
}

std::vector<double> rl_integral(std::span<const double> f, double order,
                                double step, RlMethod method) {
  return rl_dispatch(f, order, step, method);
}

namespace {

// Complex pipeline e^(conj(p) t) RL_B(e^(2 i b tau) RL_B(e^(-p T) u(T))) on
// the grid t_j = j h, before the real part is taken.
std::vector<Complex> integral_pipeline(std::span<const double> u, double h,
                                       const ValidatedParams& params, RlMethod method) {
  const std::size_t n = u.size();
  const Complex p = pole(params);
  const double b = params.b_p();
  const double order = params.exponent();
  std::vector<Complex> work(n);
  for (std::size_t j = 0; j < n; ++j) {
    work[j] = std::exp(-p * (h * static_cast<double>(j))) * u[j];
  }
  work = rl_integral(std::span<const Complex>(work), order, h, method);
  for (std::size_t j = 0; j < n; ++j) {
    work[j] *= std::polar(1.0, 2.0 * b * h * static_cast<double>(j));
  }
  work = rl_integral(std::span<const Complex>(work), order, h, method);
  for (std::size_t j = 0; j < n; ++j) {
    work[j] *= std::exp(std::conj(p) * (h * static_cast<double>(j)));
  }
  return work;
}

// Step response on the grid, extrapolated from grids h, h/2 and h/4 to
// cancel the h^2 and h^4 error terms.
std::vector<Complex> step_response(std::size_t n, double h, const ValidatedParams& params,
                                   RlMethod method) {
  std::vector<std::vector<Complex>> levels;
  for (std::size_t refine : {1, 2, 4}) {
    const std::vector<double> ones((n - 1) * refine + 1, 1.0);
    levels.push_back(integral_pipeline(ones, h / static_cast<double>(refine), params, method));
  }
  std::vector<Complex> out(n);
  for (std::size_t j = 0; j < n; ++j) {
    out[j] = (64.0 * levels[2][4 * j] - 20.0 * levels[1][2 * j] + levels[0][j]) / 45.0;
  }
  return out;
}

}  // namespace

IntegralResult gef_response_integral_checked(const SampledSignal& u,
                                             const ValidatedParams& params,
                                             const IntegralOptions& options) {
  require_integral_exponent(params);
  u.check();
  const bool seconds = u.domain == Domain::Seconds;
  const SampledSignal scaled = seconds ? u.to_scaled_time(params.require_cf()) : u;
  if (scaled.start != 0.0) {
    throw Error(ErrorCode::InvalidGrid,
                "integral representation needs a grid starting at t = 0");
  }
  const std::size_t n = scaled.size();
  const double h = scaled.step;
  if (n > 0 && params.a_p() * scaled.time_at(n - 1) > 650.0) {
    throw Error(ErrorCode::Overflow,
                "A_p * duration exceeds 650; split the signal into shorter segments");
  }

  IntegralResult result;
  result.output = scaled;
  result.output.note.clear();
  if (n == 0) return result;

  // A nonzero first sample is a jump away from the zero initial state. The
  // rule's h^2 error for that jump is not real, so the jump is split off as
  // u(0) times a step and its response is extrapolated separately.
  const double jump = scaled.values[0];
  std::vector<double> smooth(scaled.values);
  if (jump != 0.0) {
    for (double& v : smooth) v -= jump;
  }
  std::vector<Complex> q = integral_pipeline(smooth, h, params, options.method);
  if (jump != 0.0 && n > 1) {
    const std::vector<Complex> step = step_response(n, h, params, options.method);
    for (std::size_t j = 0; j < n; ++j) q[j] += jump * step[j];
  }

  double max_re = 0.0;
  double max_im = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    result.output.values[j] = q[j].real();
    max_re = std::max(max_re, std::abs(q[j].real()));
    max_im = std::max(max_im, std::abs(q[j].imag()));
  }
  result.imaginary_residue = max_re > 0.0 ? max_im / max_re : (max_im > 0.0 ? 1.0 : 0.0);
  if (result.imaginary_residue > options.residue_tolerance) {
    throw Error(ErrorCode::ImaginaryResidueTooLarge,
                "imaginary residue " + csv::format(result.imaginary_residue) +
                    " exceeds tolerance " + csv::format(options.residue_tolerance) +
                    "; refine the grid");
  }
  if (seconds) result.output = result.output.to_seconds(params.require_cf());
  return result;
}

SampledSignal gef_response_integral(const SampledSignal& u,
                                    const ValidatedParams& params,
                                    const IntegralOptions& options) {
  return gef_response_integral_checked(u, params, options).output;
}

double gef_response_unit_interval(const ValidatedParams& params,
                                  const std::function<double(double)>& u,
                                  double t_tilde, int quad_order) {
  require_integral_exponent(params);
  if (quad_order < 4) {
    throw Error(ErrorCode::InvalidArgument, "quadrature order must be >= 4");
  }
  if (t_tilde < 0.0) {
    throw Error(ErrorCode::InvalidArgument, "evaluation time must be >= 0");
  }
  if (t_tilde == 0.0) return 0.0;
  const QuadratureRule rule = gauss_legendre_unit(quad_order);
  const double order = params.exponent();
  const Complex p = pole(params);
  const double b = params.b_p();
  const double t = t_tilde;

  Complex total{0.0, 0.0};
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const double x = rule.nodes[i];
    Complex inner{0.0, 0.0};
    for (std::size_t j = 0; j < rule.nodes.size(); ++j) {
      const double y = rule.nodes[j];
      const double tau = t * x * y;
      inner += rule.weights[j] * std::pow(1.0 - y, order - 1.0) *
               std::exp(-p * tau) * u(tau);
    }
    total += rule.weights[i] * std::pow(1.0 - x, order - 1.0) * std::pow(x, order) *
             std::polar(1.0, 2.0 * b * t * x) * inner;
  }
  const double g = gamma_fn(order);
  const Complex q = std::exp(std::conj(p) * t) * std::pow(t, 2.0 * order) / (g * g) * total;
  return q.real();
}

std::vector<Complex> nested_prefix_integral(std::span<const Complex> f, int times,
                                            double step) {
  const std::size_t n = f.size();
  std::vector<Complex> nodes(f.begin(), f.end());
  if (n < 2 || times < 1) {
    if (times >= 1) std::fill(nodes.begin(), nodes.end(), Complex{});
    return nodes;
  }
  // Per-cell polynomial in the local offset s in [0, step].
  std::vector<std::vector<Complex>> cells(n - 1);
  for (std::size_t j = 0; j + 1 < n; ++j) {
    cells[j] = {f[j], (f[j + 1] - f[j]) / step};
  }
  for (int pass = 0; pass < times; ++pass) {
    Complex running{0.0, 0.0};
    nodes[0] = running;
    for (std::size_t j = 0; j + 1 < n; ++j) {
      std::vector<Complex>& c = cells[j];
      std::vector<Complex> next(c.size() + 1);
      next[0] = running;
      for (std::size_t k = 0; k < c.size(); ++k) {
        next[k + 1] = c[k] / static_cast<double>(k + 1);
      }
      Complex end{0.0, 0.0};
      for (auto it = next.rbegin(); it != next.rend(); ++it) end = end * step + *it;
      c = std::move(next);
      running = end;
      nodes[j + 1] = running;
    }
  }
  return nodes;
}

SampledSignal nested_integral_reference(const ValidatedParams& params,
                                        const SampledSignal& u) {
  if (!params.b_u().is_integer() || params.b_u().num() > 3) {
    throw Error(ErrorCode::UnsupportedExponent,
                "nested reference is limited to B_u in {1, 2, 3}");
  }
  u.check();
  const int times = static_cast<int>(params.b_u().num());
  const Complex p = pole(params);
  const double b = params.b_p();
  std::vector<Complex> work(u.size());
  for (std::size_t j = 0; j < u.size(); ++j) {
    work[j] = std::exp(-p * u.time_at(j)) * u.values[j];
  }
  work = nested_prefix_integral(work, times, u.step);
  for (std::size_t j = 0; j < u.size(); ++j) {
    work[j] *= std::polar(1.0, 2.0 * b * u.time_at(j));
  }
  work = nested_prefix_integral(work, times, u.step);
  SampledSignal out = u;
  out.note.clear();
  for (std::size_t j = 0; j < u.size(); ++j) {
    out.values[j] = (std::exp(std::conj(p) * u.time_at(j)) * work[j]).real();
  }
  return out;
}

StreamingIntegralFilter::StreamingIntegralFilter(const ValidatedParams& params,
                                                 double step)
    : order_(params.exponent()), step_(step), pole_(pole(params)), b_p_(params.b_p()) {
  require_integral_exponent(params);
  check_order(order_, step);
}

void StreamingIntegralFilter::grow_weights(std::size_t n) {
  const double g = order_ + 1.0;
  while (interior_.size() <= n) interior_.push_back(interior_weight(g, interior_.size()));
}

double StreamingIntegralFilter::push(double u) {
  const std::size_t n = source_.size();
  const double t = step_ * static_cast<double>(n);
  grow_weights(n);
  source_.push_back(std::exp(-pole_ * t) * u);
  const double scale = std::pow(step_, order_) / gamma_fn(order_ + 2.0);
  auto integrate = [&](const std::vector<Complex>& f) {
    if (n == 0) return Complex{0.0, 0.0};
    Complex acc = start_weight(order_, n) * f[0];
    for (std::size_t j = 1; j <= n; ++j) acc += interior_[n - j] * f[j];
    return scale * acc;
  };
  middle_.push_back(std::polar(1.0, 2.0 * b_p_ * t) * integrate(source_));
  const Complex outer = integrate(middle_);
  return (std::exp(std::conj(pole_) * t) * outer).real();
}

}  // namespace gef

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

#include "gef/impulse_response.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "gef/fft.hpp"
#include "gef/special.hpp"

namespace gef {

namespace {

constexpr std::size_t kMaxKernelSamples = 1'000'000;

// x^(n+1) j_n(x) for B_u = n + 1 = 2..5; coefficients of x^k sin x (k even)
// and x^k cos x (k odd).
struct TableRow {
  std::array<double, 5> sin_coeffs;
  std::array<double, 5> cos_coeffs;
};
constexpr std::array<TableRow, 4> kIntegerRows = {{
    {{1, 0, 0, 0, 0}, {0, -1, 0, 0, 0}},
    {{3, 0, -1, 0, 0}, {0, -3, 0, 0, 0}},
    {{15, 0, -6, 0, 0}, {0, -15, 0, 1, 0}},
    {{105, 0, -45, 0, 1}, {0, -105, 0, 10, 0}},
}};

double poly(const std::vector<double>& c, double x) {
  double acc = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

double factorial(int n) {
  double f = 1.0;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

double double_factorial_odd(int n) {  // (2n-1)!!
  double f = 1.0;
  for (int k = 1; k <= 2 * n - 1; k += 2) f *= k;
  return f;
}

void require_exact_exponent(const ValidatedParams& params) {
  if (!(params.exponent() > 0.5)) {
    throw Error(ErrorCode::UnsupportedExponent,
                "closed-form impulse response needs B_u > 1/2");
  }
}

}  // namespace

double h_exact(const ValidatedParams& params, double t) {
  require_exact_exponent(params);
  if (t <= 0.0) return 0.0;
  const double nu = params.exponent() - 0.5;
  const double b = params.b_p();
  const double log_k = 0.5 * std::log(kPi) - std::lgamma(params.exponent());
  const double log_env =
      log_k - params.a_p() * t + nu * std::log(t / (2.0 * b));
  return std::exp(log_env) * bessel_j(nu, b * t);
}

TrigPolynomial spherical_bessel_polynomial(int n) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "negative order");
  // R_0 = sin x, R_1 = sin x - x cos x.
  TrigPolynomial prev{{1.0}, {0.0}};
  if (n == 0) return prev;
  TrigPolynomial cur{{1.0, 0.0}, {0.0, -1.0}};
  for (int k = 1; k < n; ++k) {
    TrigPolynomial next;
    const std::size_t len = cur.sin_coeffs.size() + 1;
    next.sin_coeffs.assign(len, 0.0);
    next.cos_coeffs.assign(len, 0.0);
    for (std::size_t i = 0; i < cur.sin_coeffs.size(); ++i) {
      next.sin_coeffs[i] += (2.0 * k + 1.0) * cur.sin_coeffs[i];
      next.cos_coeffs[i] += (2.0 * k + 1.0) * cur.cos_coeffs[i];
    }
    for (std::size_t i = 0; i < prev.sin_coeffs.size(); ++i) {
      next.sin_coeffs[i + 2] -= prev.sin_coeffs[i];
      next.cos_coeffs[i + 2] -= prev.cos_coeffs[i];
    }
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

double h_integer_polynomial(const ValidatedParams& params, double t) {
  if (!params.b_u().is_integer()) {
    throw Error(ErrorCode::UnsupportedExponent,
                "polynomial form needs an integer exponent");
  }
  if (t <= 0.0) return 0.0;
  const int n = static_cast<int>(params.b_u().num()) - 1;
  const double b = params.b_p();
  const double x = b * t;
  double trig = 0.0;
  if (n == 0) {
    trig = std::sin(x);
  } else if (n <= 4) {
    const TableRow& row = kIntegerRows[n - 1];
    double xk = 1.0;
    for (int k = 0; k <= n; ++k) {
      trig += xk * (row.sin_coeffs[k] * std::sin(x) + row.cos_coeffs[k] * std::cos(x));
      xk *= x;
    }
  } else {
    const TrigPolynomial tp = spherical_bessel_polynomial(n);
    trig = poly(tp.sin_coeffs, x) * std::sin(x) + poly(tp.cos_coeffs, x) * std::cos(x);
  }
  const double scale =
      1.0 / (std::pow(2.0, n) * factorial(n) * std::pow(b, 2 * n + 1));
  return scale * std::exp(-params.a_p() * t) * trig;
}

double h_half_integer(const ValidatedParams& params, double t) {
  if (!params.b_u().is_half_integer() || params.exponent() < 1.5) {
    throw Error(ErrorCode::UnsupportedExponent,
                "half-integer form needs B_u = n + 1/2 with n >= 1");
  }
  if (t <= 0.0) return 0.0;
  const int n = static_cast<int>((params.b_u().num() - 1) / 2);
  const double b = params.b_p();
  return std::exp(-params.a_p() * t) * std::pow(t, n) *
         bessel_j(static_cast<double>(n), b * t) /
         (double_factorial_odd(n) * std::pow(b, n));
}

std::pair<double, double> exact_envelope_max(const ValidatedParams& params) {
  require_exact_exponent(params);
  const double a = params.a_p();
  const double b = params.b_p();
  const double nu = params.exponent() - 0.5;
  // The peak lies near (B_u - 1)/A_p; scan comfortably past the bound's peak.
  const double t_end = std::max(3.0 * (nu + 1.0) / a, 40.0 * kPi / b);
  const double step = kPi / (32.0 * b);
  const auto count = static_cast<std::size_t>(t_end / step) + 3;
  std::vector<double> mag(count);
  for (std::size_t i = 0; i < count; ++i) {
    mag[i] = std::abs(h_exact(params, step * static_cast<double>(i)));
  }
  struct Peak {
    double t;
    double v;
  };
  std::vector<Peak> peaks;
  for (std::size_t i = 1; i + 1 < count; ++i) {
    if (mag[i] >= mag[i - 1] && mag[i] > mag[i + 1]) {
      const double lo = step * static_cast<double>(i - 1);
      const double hi = step * static_cast<double>(i + 1);
      const double t = golden_section_max(
          [&](double x) { return std::abs(h_exact(params, x)); }, lo, hi, 1e-12);
      peaks.push_back({t, std::abs(h_exact(params, t))});
    }
  }
  if (peaks.empty()) return {0.0, 0.0};
  const auto best = static_cast<std::size_t>(
      std::max_element(peaks.begin(), peaks.end(),
                       [](const Peak& l, const Peak& r) { return l.v < r.v; }) -
      peaks.begin());
  if (best == 0 || best + 1 == peaks.size()) return {peaks[best].t, peaks[best].v};
  // Parabola through three consecutive envelope samples.
  const Peak& p0 = peaks[best - 1];
  const Peak& p1 = peaks[best];
  const Peak& p2 = peaks[best + 1];
  const double d01 = (p1.v - p0.v) / (p1.t - p0.t);
  const double d12 = (p2.v - p1.v) / (p2.t - p1.t);
  const double curv = (d12 - d01) / (p2.t - p0.t);
  if (!(curv < 0.0)) return {p1.t, p1.v};
  const double slope = d01 - curv * (p0.t + p1.t);
  const double t_star = -slope / (2.0 * curv);
  const double v_star = p1.v + d01 * (t_star - p1.t) + curv * (t_star - p0.t) * (t_star - p1.t);
  return {t_star, std::max(v_star, p1.v)};
}

GtfApproximant::GtfApproximant(const ValidatedParams& params, GtfEnvelope envelope)
    : a_p_(params.a_p()),
      b_p_(params.b_p()),
      b_u_(params.exponent()),
      gamma_(envelope == GtfEnvelope::TonalPower ? params.exponent() - 1.0
                                                 : params.exponent() - 0.5),
      base_rate_(envelope == GtfEnvelope::TonalPower ? params.b_p() : 1.0) {
  if (gamma_ < 0.0) {
    throw Error(ErrorCode::UnsupportedExponent,
                "gammatone approximation needs a non-negative envelope power");
  }
  // Unscaled envelope e^(-A t) (rate t)^gamma peaks at gamma / A.
  const double t_pk = gamma_ / a_p_;
  const double env_max =
      gamma_ == 0.0 ? 1.0 : std::exp(-gamma_) * std::pow(base_rate_ * t_pk, gamma_);
  scale_ = exact_envelope_max(params).second / env_max;
}

double GtfApproximant::operator()(double t) const {
  if (t < 0.0) return 0.0;
  const double env = gamma_ == 0.0 ? 1.0 : std::pow(base_rate_ * t, gamma_);
  return scale_ * std::exp(-a_p_ * t) * env *
         std::cos(b_p_ * t - b_u_ * kPi / 2.0);
}

double h_gtf(const ValidatedParams& params, double t, GtfEnvelope envelope) {
  return GtfApproximant(params, envelope)(t);
}

EnvelopePeak envelope_peak_time(const ValidatedParams& params) {
  if (!(params.exponent() > 1.0)) {
    throw Error(ErrorCode::UnsupportedExponent,
                "envelope rise-then-decay needs B_u > 1");
  }
  EnvelopePeak out;
  out.rule = (params.exponent() - 1.0) / params.a_p();
  out.rule_half_power = (params.exponent() - 0.5) / params.a_p();
  const auto [t, v] = exact_envelope_max(params);
  out.numeric = t;
  out.numeric_value = v;
  return out;
}

ImpulseResponseForm::ImpulseResponseForm(ImpulseKind kind,
                                         const ValidatedParams& params)
    : kind_(kind), params_(params) {
  const double b = params.b_p();
  switch (kind) {
    case ImpulseKind::ExactBessel: {
      require_exact_exponent(params);
      const double nu = params.exponent() - 0.5;
      normalization_ = std::sqrt(kPi) / gamma_fn(params.exponent()) /
                       std::pow(2.0 * b, nu);
      eval_ = [p = params](double t) { return h_exact(p, t); };
      break;
    }
    case ImpulseKind::IntegerPolynomial: {
      if (!params.b_u().is_integer()) {
        throw Error(ErrorCode::UnsupportedExponent,
                    "IntegerPolynomial needs an integer B_u >= 1");
      }
      const int n = static_cast<int>(params.b_u().num()) - 1;
      normalization_ = 1.0 / (std::pow(2.0, n) * factorial(n) * std::pow(b, 2 * n + 1));
      eval_ = [p = params](double t) { return h_integer_polynomial(p, t); };
      break;
    }
    case ImpulseKind::HalfIntegerBessel: {
      if (!params.b_u().is_half_integer() || params.exponent() < 1.5) {
        throw Error(ErrorCode::UnsupportedExponent,
                    "HalfIntegerBessel needs 2 B_u odd and B_u >= 3/2");
      }
      const int n = static_cast<int>((params.b_u().num() - 1) / 2);
      normalization_ = 1.0 / (double_factorial_odd(n) * std::pow(b, n));
      eval_ = [p = params](double t) { return h_half_integer(p, t); };
      break;
    }
    case ImpulseKind::GtfApprox: {
      GtfApproximant gtf(params);
      normalization_ = gtf.scale();
      eval_ = gtf;
      break;
    }
  }
}

double ImpulseResponseForm::operator()(double t) const { return eval_(t); }

double impulse_response_seconds(const ValidatedParams& params, double t) {
  const double cf = params.require_cf();
  return kTwoPi * cf * h_exact(params, scaled_time(t, cf));
}

std::size_t kernel_length(const ValidatedParams& params, double step,
                          double rel_threshold) {
  require_exact_exponent(params);
  const double a = params.a_p();
  const double nu = params.exponent() - 0.5;
  // log of the decay bound up to a constant: nu log t - a t, peak at nu / a.
  const double t_pk = nu / a;
  const double log_max = nu > 0.0 ? nu * std::log(t_pk) - a * t_pk : 0.0;
  const double log_cut = log_max + std::log(rel_threshold);
  // Bound is decreasing past t_pk; find the crossing by bisection.
  auto excess = [&](double t) { return nu * std::log(t) - a * t - log_cut; };
  double hi = std::max(2.0 * t_pk, 1.0 / a);
  while (excess(hi) > 0.0) hi *= 2.0;
  const double t_cut = bisect(excess, std::max(t_pk, 1e-12), hi, 1e-10);
  return static_cast<std::size_t>(std::ceil(t_cut / step)) + 1;
}

std::vector<double> convolve_trapezoid(std::span<const double> data,
                                       std::span<const double> kernel,
                                       double step) {
  const std::size_t n = data.size();
  const std::size_t len = std::min(kernel.size(), n);
  std::vector<double> out(n, 0.0);
  if (n == 0 || len == 0) return out;
  const auto k = kernel.first(len);
  if (static_cast<double>(n) * static_cast<double>(len) <= 4e6) {
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t jmax = std::min(i, len - 1);
      double acc = 0.0;
      for (std::size_t j = 0; j <= jmax; ++j) acc += k[j] * data[i - j];
      out[i] = acc;
    }
  } else {
    auto full = fft::convolve(data, k);
    std::copy_n(full.begin(), n, out.begin());
  }
  // Trapezoid end corrections on [0, t_i].
  for (std::size_t i = 0; i < n; ++i) {
    double v = out[i] - 0.5 * k[0] * data[i];
    if (i < len) v -= 0.5 * k[i] * data[0];
    out[i] = step * v;
  }
  return out;
}

SampledSignal filter_with_kernel(const SampledSignal& signal,
                                 const ValidatedParams& params,
                                 const std::function<double(double)>& kernel) {
  signal.check();
  const bool seconds = signal.domain == Domain::Seconds;
  const SampledSignal scaled =
      seconds ? signal.to_scaled_time(params.require_cf()) : signal;
  std::size_t len = scaled.size();
  if (params.exponent() > 0.5) {
    const std::size_t needed = kernel_length(params, scaled.step);
    if (needed > kMaxKernelSamples && scaled.size() > kMaxKernelSamples) {
      throw Error(ErrorCode::KernelTruncation,
                  "impulse response does not decay within 10^6 samples");
    }
    len = std::min(len, needed);
  }
  std::vector<double> k(len);
  for (std::size_t j = 0; j < len; ++j) k[j] = kernel(scaled.step * static_cast<double>(j));
  SampledSignal out = scaled;
  out.values = convolve_trapezoid(scaled.values, k, scaled.step);
  out.note.clear();
  return seconds ? out.to_seconds(params.require_cf()) : out;
}

SampledSignal filter_via_convolution(const SampledSignal& signal,
                                     const ValidatedParams& params) {
  require_exact_exponent(params);
  return filter_with_kernel(signal, params,
                            [&](double t) { return h_exact(params, t); });
}

}  // namespace gef

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

#pragma once

// Closed-form impulse responses h(t~) of the normalized filter, the
// extrapolated gammatone approximation, and convolution-based filtering.

#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "gef/core.hpp"

namespace gef {

/// h(t~) = K e^(-A_p t~) (t~ / (2 b_p))^(B_u - 1/2) J_(B_u - 1/2)(b_p t~) with
/// K = sqrt(pi) / Gamma(B_u). Valid for any real B_u > 1/2; zero for t~ < 0.
/// Throws UnsupportedExponent for B_u <= 1/2.
double h_exact(const ValidatedParams& params, double t_tilde);

/// Polynomial-times-sinusoid form for integer B_u = n + 1:
///   h = e^(-A_p t~) (P_n(x) sin x + Q_n(x) cos x) / (2^n n! b_p^(2n+1)),
/// x = b_p t~. Rows B_u <= 5 come from the tabulated coefficients; larger
/// exponents use the three-term recurrence R_(n+1) = (2n+1) R_n - x^2 R_(n-1).
double h_integer_polynomial(const ValidatedParams& params, double t_tilde);

/// Bessel form for half-integer B_u = n + 1/2 (n >= 1):
///   h = e^(-A_p t~) t~^n J_n(b_p t~) / ((2n-1)!! b_p^n).
double h_half_integer(const ValidatedParams& params, double t_tilde);

/// x^(n+1) j_n(x) = sum_k sin_coeffs[k] x^k sin x + cos_coeffs[k] x^k cos x,
/// where j_n is the spherical Bessel function.
struct TrigPolynomial {
  std::vector<double> sin_coeffs;
  std::vector<double> cos_coeffs;
};
TrigPolynomial spherical_bessel_polynomial(int n);

/// Which power of time carries the gammatone envelope.
enum class GtfEnvelope {
  /// t~_b^(B_u - 1): the highest-order term of the integer-exponent forms and
  /// the large-argument limit of h_exact. Default.
  TonalPower,
  /// t~^(B_u - 1/2): the extrapolated form written with the Bessel prefactor's
  /// power.
  HalfPower,
};

/// Extrapolated gammatone approximant
///   scale * e^(-A_p t~) env(t~)^gamma cos(b_p t~ - B_u pi / 2)
/// with scale chosen so its envelope maximum equals the envelope maximum of
/// h_exact.
class GtfApproximant {
 public:
  GtfApproximant(const ValidatedParams& params,
                 GtfEnvelope envelope = GtfEnvelope::TonalPower);

  double operator()(double t_tilde) const;
  double scale() const { return scale_; }
  double envelope_power() const { return gamma_; }
  /// Time at which the approximant's envelope peaks: gamma / A_p.
  double envelope_peak() const { return gamma_ / a_p_; }

 private:
  double a_p_;
  double b_p_;
  double b_u_;
  double gamma_;
  double base_rate_;  // b_p for TonalPower, 1 for HalfPower
  double scale_ = 1.0;
};

/// One-shot evaluation; builds the approximant (and its scale) on each call.
double h_gtf(const ValidatedParams& params, double t_tilde,
             GtfEnvelope envelope = GtfEnvelope::TonalPower);

struct EnvelopePeak {
  /// (B_u - 1) / A_p.
  double rule = 0.0;
  /// (B_u - 1/2) / A_p, the prediction from the t~^(B_u - 1/2) prefactor.
  double rule_half_power = 0.0;
  /// Numerically located maximum of the envelope of |h_exact|.
  double numeric = 0.0;
  double numeric_value = 0.0;
};

/// Throws UnsupportedExponent for B_u <= 1.
EnvelopePeak envelope_peak_time(const ValidatedParams& params);

/// Envelope maximum of |h_exact|: local maxima of |h| interpolated by a
/// parabola through the largest three. Returns {time, value}.
std::pair<double, double> exact_envelope_max(const ValidatedParams& params);

enum class ImpulseKind { ExactBessel, IntegerPolynomial, HalfIntegerBessel, GtfApprox };

/// Tagged closed form with its scale constant.
class ImpulseResponseForm {
 public:
  /// Throws UnsupportedExponent when the kind does not admit params' B_u.
  ImpulseResponseForm(ImpulseKind kind, const ValidatedParams& params);

  ImpulseKind kind() const { return kind_; }
  const ValidatedParams& params() const { return params_; }
  /// Leading constant of the closed form.
  double normalization() const { return normalization_; }
  double operator()(double t_tilde) const;

 private:
  ImpulseKind kind_;
  ValidatedParams params_;
  double normalization_ = 1.0;
  std::function<double(double)> eval_;
};

/// g(t) = 2 pi CF h(2 pi CF t). Throws MissingCf.
double impulse_response_seconds(const ValidatedParams& params, double t_seconds);

/// Index past the envelope peak where the decay bound
/// K (t~/(2 b_p))^(B_u-1/2) e^(-A_p t~) drops below rel_threshold of its max.
std::size_t kernel_length(const ValidatedParams& params, double step,
                          double rel_threshold = 1e-6);

/// Trapezoidal linear convolution of uniformly sampled data with kernel
/// samples k[j] = kernel(j * step); kernel.size() may be shorter than data.
std::vector<double> convolve_trapezoid(std::span<const double> data,
                                       std::span<const double> kernel,
                                       double step);

/// Filters by discrete convolution with h_exact, truncated where its envelope
/// bound falls below 1e-6 of its maximum. Seconds-domain input needs CF.
/// Throws KernelTruncation when the kernel would exceed 10^6 samples.
SampledSignal filter_via_convolution(const SampledSignal& signal,
                                     const ValidatedParams& params);

/// Same pipeline with an arbitrary kernel of t~.
SampledSignal filter_with_kernel(const SampledSignal& signal,
                                 const ValidatedParams& params,
                                 const std::function<double(double)>& kernel);

}  // namespace gef

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

// Riemann-Liouville integral on uniform grids (product-trapezoid rule) and
// the operator-factorized filter response built from it.

#include <functional>
#include <span>
#include <vector>

#include "gef/core.hpp"

namespace gef {

/// Product-trapezoid weights for the kernel (t - tau)^(order-1) / Gamma(order)
/// on a uniform grid, with data interpolated linearly between samples:
///   I_n = scale * (start(n) f_0 + sum_{j=1..n} interior[n-j] f_j),
///   scale = step^order / Gamma(order + 2).
class RlWeights {
 public:
  /// Throws InvalidArgument for order <= 0 or step <= 0.
  RlWeights(double order, double step, std::size_t count);

  double order() const { return order_; }
  double step() const { return step_; }
  double scale() const { return scale_; }
  std::size_t size() const { return interior_.size(); }
  /// (k+1)^g - 2 k^g + (k-1)^g with g = order + 1; interior(0) = 1.
  double interior(std::size_t k) const { return interior_[k]; }
  /// Weight on f_0 for the integral at grid index n >= 1.
  double start(std::size_t n) const { return start_[n]; }
  std::span<const double> interior_weights() const { return interior_; }

 private:
  double order_;
  double step_;
  double scale_;
  std::vector<double> interior_;
  std::vector<double> start_;
};

enum class RlMethod { Direct, Fast, Auto };

/// RL integral of uniformly sampled f (grid starts at 0) at every grid point.
/// Direct is O(N^2) and parallel over outputs; Fast is a divide-and-conquer
/// FFT convolution, O(N log^2 N), that keeps rounding relative to the local
/// magnitude of f.
std::vector<Complex> rl_integral(std::span<const Complex> f, double order,
                                 double step, RlMethod method = RlMethod::Auto);
std::vector<double> rl_integral(std::span<const double> f, double order,
                                double step, RlMethod method = RlMethod::Auto);

inline constexpr double kImaginaryResidueTolerance = 1e-8;

struct IntegralOptions {
  RlMethod method = RlMethod::Auto;
  /// Max |Im| / max |Re| allowed before the imaginary part is discarded.
  double residue_tolerance = kImaginaryResidueTolerance;
};

struct IntegralResult {
  SampledSignal output;
  /// max |Im q| / max |Re q| of the complex pipeline result.
  double imaginary_residue = 0.0;
};

/// q = Re[e^(conj(p) t) RL_B(e^(2 i b_p tau) RL_B(e^(-p T) u(T)))] with zero
/// initial conditions. Seconds-domain input needs CF; the grid must start at 0.
/// A nonzero first sample is treated as a jump at t = 0: its step-response
/// share is computed on grids h, h/2, h/4 and extrapolated.
/// Throws UnsupportedExponent for B_u <= 1 and ImaginaryResidueTooLarge.
IntegralResult gef_response_integral_checked(const SampledSignal& u,
                                             const ValidatedParams& params,
                                             const IntegralOptions& options = {});

SampledSignal gef_response_integral(const SampledSignal& u,
                                    const ValidatedParams& params,
                                    const IntegralOptions& options = {});

/// Single-time evaluation of the same integral mapped onto the unit square,
///   t^(2B) / Gamma(B)^2 * int_0^1 int_0^1 (1-x)^(B-1) x^B (1-y)^(B-1)
///       e^(2 i b_p t x) e^(-p t x y) u(t x y) dy dx,
/// with a tensor Gauss-Legendre rule of the given order. Throws
/// InvalidArgument for quad_order < 4.
double gef_response_unit_interval(const ValidatedParams& params,
                                  const std::function<double(double)>& u,
                                  double t_tilde, int quad_order = 64);

/// Literal repeated prefix integration of the piecewise-linear input
/// (exact per cell), composed as the integral pipeline. Test oracle only;
/// B_u must be an integer in [1, 3].
SampledSignal nested_integral_reference(const ValidatedParams& params,
                                        const SampledSignal& u);

/// `times`-fold prefix integral of the piecewise-linear interpolant of f,
/// evaluated at the grid points.
std::vector<Complex> nested_prefix_integral(std::span<const Complex> f, int times,
                                            double step);

/// Sample-by-sample form of gef_response_integral; each push is O(n).
class StreamingIntegralFilter {
 public:
  StreamingIntegralFilter(const ValidatedParams& params, double step);

  /// Appends u at the next grid point and returns q there.
  double push(double u);
  std::size_t size() const { return source_.size(); }

 private:
  void grow_weights(std::size_t n);

  double order_;
  double step_;
  Complex pole_;
  double b_p_;
  std::vector<double> interior_;
  std::vector<Complex> source_;  // e^(-p T) u(T)
  std::vector<Complex> middle_;  // e^(2 i b tau) RL_B(source)
};

}  // namespace gef

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

// Independent reference formulas for the tests. Nothing here calls into the
// library's numerics.

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <functional>
#include <stdexcept>

namespace gef::testing {

inline constexpr double kPi = 3.14159265358979323846;

/// Literal impulse-response rows for B = 1..5.
inline double table_integer(int b_u, double a_p, double b_p, double t) {
  if (t < 0.0) return 0.0;
  const double x = b_p * t;
  const double s = std::sin(x);
  const double c = std::cos(x);
  const double e = std::exp(-a_p * t);
  switch (b_u) {
    case 1:
      return e * s / b_p;
    case 2:
      return e * (s - x * c) / (2.0 * std::pow(b_p, 3));
    case 3:
      return e * (3.0 * s - 3.0 * x * c - x * x * s) / (8.0 * std::pow(b_p, 5));
    case 4:
      return e * (15.0 * s - 15.0 * x * c - 6.0 * x * x * s + x * x * x * c) /
             (48.0 * std::pow(b_p, 7));
    case 5:
      return e *
             (105.0 * s - 105.0 * x * c - 45.0 * x * x * s + 10.0 * x * x * x * c +
              x * x * x * x * s) /
             (384.0 * std::pow(b_p, 9));
    default:
      throw std::invalid_argument("no literal row");
  }
}

/// Literal half-integer rows for B = 3/2, 5/2, 7/2, 9/2, given n = B - 1/2.
inline double table_half_integer(int n, double a_p, double b_p, double t) {
  if (t < 0.0) return 0.0;
  static const double kDen[] = {0.0, 1.0, 3.0, 15.0, 105.0};
  if (n < 1 || n > 4) throw std::invalid_argument("no literal row");
  return std::exp(-a_p * t) * std::pow(t, n) * std::cyl_bessel_j(n, b_p * t) /
         (kDen[n] * std::pow(b_p, n));
}

// Local oscillation amplitude of the literal integer row: the sum of the
// absolute values of its terms. Cancellation in the literal formula is bounded
// by rounding relative to this.
inline double integer_row_amplitude(int b_u, double a, double b, double t) {
  const double x = b * t;
  static const double kCoeff[6][5] = {{0},
                                      {1, 0, 0, 0, 0},
                                      {1, 1, 0, 0, 0},
                                      {3, 3, 1, 0, 0},
                                      {15, 15, 6, 1, 0},
                                      {105, 105, 45, 10, 1}};
  static const double kDen[6] = {0, 1, 2, 8, 48, 384};
  double sum = 0.0;
  for (int k = 0; k < b_u; ++k) sum += kCoeff[b_u][k] * std::pow(x, k);
  return std::exp(-a * t) * sum / (kDen[b_u] * std::pow(b, 2 * b_u - 1));
}

inline double half_row_amplitude(int n, double a, double b, double t) {
  const double x = b * t;
  const double env = std::hypot(std::cyl_bessel_j(n, x), std::cyl_bessel_j(n + 1, x));
  return std::abs(table_half_integer(n, a, b, t)) +
         std::exp(-a * t) * std::pow(t, n) * env / std::pow(b, n);
}

/// K e^(-A t) (t / 2b)^nu J_nu(b t), nu = B - 1/2, K = sqrt(pi) / Gamma(B).
inline double bessel_form(double b_u, double a_p, double b_p, double t) {
  if (t <= 0.0) return 0.0;
  const double nu = b_u - 0.5;
  return std::sqrt(kPi) / std::tgamma(b_u) * std::exp(-a_p * t) *
         std::pow(t / (2.0 * b_p), nu) * std::cyl_bessel_j(nu, b_p * t);
}

/// int_0^t h(t - tau) u(tau) d tau by adaptive Gauss-Kronrod on pieces.
inline double convolve_at(const std::function<double(double)>& h,
                          const std::function<double(double)>& u, double t,
                          int pieces = 64) {
  if (t <= 0.0) return 0.0;
  using boost::math::quadrature::gauss_kronrod;
  double sum = 0.0;
  for (int k = 0; k < pieces; ++k) {
    const double lo = t * k / pieces;
    const double hi = t * (k + 1) / pieces;
    sum += gauss_kronrod<double, 31>::integrate(
        [&](double tau) { return h(t - tau) * u(tau); }, lo, hi, 10, 1e-14);
  }
  return sum;
}

}  // namespace gef::testing

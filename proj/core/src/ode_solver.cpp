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

#include "gef/ode_solver.hpp"

#include <cmath>
#include <string>

namespace gef {

namespace {

// Neumaier-compensated accumulation.
struct CompensatedSum {
  double sum = 0.0;
  double carry = 0.0;
  void add(double x) {
    const double t = sum + x;
    if (std::abs(sum) >= std::abs(x)) {
      carry += (sum - t) + x;
    } else {
      carry += (x - t) + sum;
    }
    sum = t;
  }
  double value() const { return sum + carry; }
};

}  // namespace

OperatorCoefficients expand_operator(double a_p, double b_p, int b_u) {
  if (b_u < 1 || b_u > kMaxOdeExponent) {
    throw Error(ErrorCode::UnsupportedExponent,
                "ODE form needs an integer B_u in [1, " +
                    std::to_string(kMaxOdeExponent) + "]");
  }
  const double quad[3] = {1.0, 2.0 * a_p, a_p * a_p + b_p * b_p};
  std::vector<double> poly{1.0};
  for (int k = 0; k < b_u; ++k) {
    std::vector<double> next(poly.size() + 2);
    for (std::size_t i = 0; i < next.size(); ++i) {
      CompensatedSum acc;
      for (std::size_t j = 0; j < 3; ++j) {
        if (i >= j && i - j < poly.size()) acc.add(quad[j] * poly[i - j]);
      }
      next[i] = acc.value();
    }
    poly = std::move(next);
  }
  return {std::move(poly)};
}

OperatorCoefficients expand_operator(const ValidatedParams& params) {
  if (!params.b_u().is_integer() || params.b_u().num() > kMaxOdeExponent) {
    throw Error(ErrorCode::UnsupportedExponent,
                "ODE form needs an integer B_u in [1, " +
                    std::to_string(kMaxOdeExponent) + "], got " +
                    params.b_u().to_string());
  }
  return expand_operator(params.a_p(), params.b_p(),
                         static_cast<int>(params.b_u().num()));
}

StateSpace to_state_space(const OperatorCoefficients& coeffs) {
  const int n = coeffs.order();
  if (n < 1 || coeffs.coeffs.front() != 1.0) {
    throw Error(ErrorCode::InvalidArgument, "operator must be monic of order >= 1");
  }
  StateSpace ss;
  ss.a = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i + 1 < n; ++i) ss.a(i, i + 1) = 1.0;
  // Last row: constant term in column 0 up to the order n-1 coefficient.
  for (int k = 0; k < n; ++k) ss.a(n - 1, k) = -coeffs.coeffs[n - k];
  ss.b = Eigen::VectorXd::Zero(n);
  ss.b(n - 1) = 1.0;
  ss.output_index = 0;
  return ss;
}

std::vector<std::complex<double>> eigenvalues(const StateSpace& ss) {
  Eigen::EigenSolver<Eigen::MatrixXd> solver(ss.a, false);
  const auto ev = solver.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

SampledSignal simulate(const StateSpace& ss, const SampledSignal& u,
                       int step_divisor) {
  u.check();
  if (step_divisor < 1) {
    throw Error(ErrorCode::InvalidArgument, "step divisor must be >= 1");
  }
  const Eigen::Index n = ss.a.rows();
  const double h = u.step / step_divisor;
  const std::size_t count = u.size();
  SampledSignal out = u;
  out.note.clear();
  if (count == 0) return out;
  out.values[0] = 0.0;

  Eigen::VectorXd z = Eigen::VectorXd::Zero(n);
  Eigen::VectorXd k1(n), k2(n), k3(n), k4(n);
  auto rhs = [&](const Eigen::VectorXd& state, double input, Eigen::VectorXd& dz) {
    dz.noalias() = ss.a * state;
    dz += ss.b * input;
  };
  for (std::size_t i = 0; i + 1 < count; ++i) {
    const double u0 = u.values[i];
    const double du = u.values[i + 1] - u0;
    for (int s = 0; s < step_divisor; ++s) {
      const double f0 = static_cast<double>(s) / step_divisor;
      const double fh = (s + 0.5) / step_divisor;
      const double f1 = static_cast<double>(s + 1) / step_divisor;
      rhs(z, u0 + f0 * du, k1);
      rhs(z + 0.5 * h * k1, u0 + fh * du, k2);
      rhs(z + 0.5 * h * k2, u0 + fh * du, k3);
      rhs(z + h * k3, u0 + f1 * du, k4);
      z += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    }
    const double norm = z.norm();
    if (!(norm <= 1e12)) {
      throw Error(ErrorCode::Unstable,
                  "state norm exceeded 1e12 at t = " + std::to_string(u.time_at(i + 1)) +
                      "; step too large for the system's stiffness");
    }
    out.values[i + 1] = z(ss.output_index);
  }
  return out;
}

SampledSignal filter_via_ode(const SampledSignal& signal,
                             const ValidatedParams& params, int step_divisor) {
  const StateSpace ss = to_state_space(expand_operator(params));
  const bool seconds = signal.domain == Domain::Seconds;
  const SampledSignal scaled =
      seconds ? signal.to_scaled_time(params.require_cf()) : signal;
  SampledSignal out = simulate(ss, scaled, step_divisor);
  return seconds ? out.to_seconds(params.require_cf()) : out;
}

}  // namespace gef

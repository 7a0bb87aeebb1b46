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

// Integer-exponent filters as a linear ODE of order 2 B_u: operator
// expansion, companion state space, and fixed-step RK4 simulation.

#include <Eigen/Dense>

#include <complex>
#include <vector>

#include "gef/core.hpp"

namespace gef {

inline constexpr int kMaxOdeExponent = 32;

/// Coefficients of (x^2 + 2 A_p x + |p|^2)^B_u, highest power first.
struct OperatorCoefficients {
  std::vector<double> coeffs;
  int order() const { return static_cast<int>(coeffs.size()) - 1; }
};

/// Throws UnsupportedExponent unless B_u is an integer in [1, 32].
OperatorCoefficients expand_operator(const ValidatedParams& params);
OperatorCoefficients expand_operator(double a_p, double b_p, int b_u);

/// Controllable companion realization. The first state is the output.
struct StateSpace {
  Eigen::MatrixXd a;
  Eigen::VectorXd b;
  int output_index = 0;
};

StateSpace to_state_space(const OperatorCoefficients& coeffs);

std::vector<std::complex<double>> eigenvalues(const StateSpace& ss);

/// Classical RK4 from zero state with step_divisor substeps per input
/// sample; u is linearly interpolated between samples. Returns the output
/// state on u's grid. Throws Unstable when the state norm exceeds 1e12.
SampledSignal simulate(const StateSpace& ss, const SampledSignal& u,
                       int step_divisor = 1);

/// expand_operator + to_state_space + simulate. Seconds-domain input needs CF.
SampledSignal filter_via_ode(const SampledSignal& signal,
                             const ValidatedParams& params, int step_divisor = 1);

}  // namespace gef

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

// Test inputs with exact evaluators and, where available, Laplace
// transforms used to build exact output oracles.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "gef/core.hpp"

namespace gef {

/// c / (s - pole)^order.
struct LaplaceTerm {
  Complex coefficient;
  Complex pole;
  int order = 1;
};

enum class InputKind {
  TonePips,
  QuadraticChirp,
  IntegerEquivalence,
  HalfIntegerEquivalence,
  Step,
  SmoothPulse,
};

std::string to_string(InputKind kind);

struct TonePip {
  double freq_hz = 0.0;
  double center_s = 0.0;
};

struct TonePipParams {
  double cf_hz = 0.0;
  double width_s = 5e-3;
  std::vector<TonePip> pips;
};

struct ChirpParams {
  double f_start_hz = 0.0;
  double f_end_hz = 0.0;
  double duration_s = 0.0;
};

struct HalfIntegerParams {
  double a = 0.5;
  double a_p = 0.1;
  double b_p = 1.0;
};

struct PulseParams {
  double center = 0.0;
  double width = 1.0;
};

class AnalyticInput {
 public:
  AnalyticInput(InputKind kind, Domain domain, std::function<double(double)> eval,
                std::vector<LaplaceTerm> laplace = {});

  InputKind kind() const { return kind_; }
  Domain domain() const { return domain_; }
  double operator()(double t) const { return eval_(t); }
  /// Sum of partial-fraction terms when the transform is rational.
  const std::vector<LaplaceTerm>& laplace() const { return laplace_; }
  bool has_rational_transform() const { return !laplace_.empty(); }

  std::optional<TonePipParams> pips;
  std::optional<ChirpParams> chirp;
  std::optional<HalfIntegerParams> half_integer;
  std::optional<PulseParams> pulse;

  SampledSignal sample(double step, std::size_t count, double start = 0.0) const;

 private:
  InputKind kind_;
  Domain domain_;
  std::function<double(double)> eval_;
  std::vector<LaplaceTerm> laplace_;
};

/// Four Gaussian-windowed tones (seconds):
///   sum_i exp(-(t - t_i)^2 / T^2) sin(2 pi f_i t), T = 5 ms,
///   (f_i, t_i) = (CF, 20 ms), (5 CF, 50 ms), (7/8 CF, 70 ms), (CF/5, 40 ms).
AnalyticInput tone_pips(double cf_hz);

/// Same form with an explicit pip list.
AnalyticInput tone_pips(const TonePipParams& params);

/// sin(2 pi int_0^t f), f(t) = f_start + (f_end - f_start) (t / duration)^2,
/// zero outside [0, duration]. Defaults sweep 0.2 CF to 2 CF over 50 ms.
AnalyticInput quadratic_chirp(double cf_hz);
AnalyticInput quadratic_chirp(const ChirpParams& params);

/// t cos(10 t) e^(-t/2) + t^3 e^(-t) cos t in scaled time.
AnalyticInput integer_equiv_input();

/// e^(-A_p t) t^(a - 1/2) J_(a - 1/2)(b_p t) in scaled time. Its transform
/// is (2 b_p)^(a-1/2) Gamma(a) / sqrt(pi) * base(s)^(-a).
AnalyticInput half_integer_equiv_input(const ValidatedParams& params, double a = 0.5);

/// Unit step in scaled time.
AnalyticInput step_input();

/// Unit-area Gaussian exp(-((t - center) / width)^2) / (width sqrt(pi)).
AnalyticInput smooth_pulse(double center, double width, Domain domain = Domain::ScaledTime);

/// Exact response in scaled time, zero for t < 0.
using OutputFunction = std::function<double(double)>;

/// Residue sum for rational inputs (integer B_u) or exponent addition for
/// the half-integer input. Throws UnsupportedOracleCombination otherwise.
OutputFunction analytic_oracle(const AnalyticInput& input, const ValidatedParams& params);

/// Sum over poles z of e^(z t) sum_k c_k t^k.
struct ExponentialPolynomial {
  struct Group {
    Complex pole;
    std::vector<Complex> coeffs;  // ascending powers of t
  };
  std::vector<Group> groups;
  double operator()(double t) const;
};

/// Inverse Laplace transform of sum(terms) * extra, where extra is a product
/// of (s - z)^(-m) factors, computed by residues in extended precision.
ExponentialPolynomial inverse_laplace(const std::vector<LaplaceTerm>& terms,
                                      const std::vector<std::pair<Complex, int>>& extra_poles);

}  // namespace gef

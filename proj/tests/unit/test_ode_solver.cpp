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

#include <gtest/gtest.h>

#include <cmath>

#include "gef/ode_solver.hpp"
#include "oracles.hpp"

namespace gef {
namespace {

std::vector<double> multiply(const std::vector<double>& a, const std::vector<double>& b) {
  std::vector<double> out(a.size() + b.size() - 1, 0.0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

TEST(ExpandOperator, SecondPowerCoefficients) {
  const double a = 0.1;
  const double c = 1.01;
  const auto op = expand_operator(make_params(a, 1.0, Rational(2)));
  ASSERT_EQ(op.order(), 4);
  const std::vector<double> expected{1.0, 4.0 * a, 4.0 * a * a + 2.0 * c, 4.0 * a * c, c * c};
  for (int i = 0; i <= 4; ++i) EXPECT_NEAR(op.coeffs[i], expected[i], 1e-15);
}

TEST(ExpandOperator, MatchesRepeatedMultiplication) {
  const std::vector<double> base{1.0, 0.14, 0.0049 + 0.64};
  std::vector<double> ref{1.0};
  for (int b_u = 1; b_u <= 8; ++b_u) {
    ref = multiply(ref, base);
    const auto op = expand_operator(0.07, 0.8, b_u);
    ASSERT_EQ(op.coeffs.size(), ref.size());
    for (std::size_t i = 0; i < ref.size(); ++i) {
      EXPECT_NEAR(op.coeffs[i], ref[i], 1e-13 * std::abs(ref[i]) + 1e-300) << b_u << " " << i;
    }
  }
}

TEST(ExpandOperator, RejectsNonIntegerAndHugeExponents) {
  for (Rational b_u : {Rational(5, 2), Rational(kMaxOdeExponent + 1)}) {
    try {
      expand_operator(make_params(0.1, 1.0, b_u));
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::UnsupportedExponent);
    }
  }
  EXPECT_NO_THROW(expand_operator(make_params(0.1, 1.0, Rational(kMaxOdeExponent))));
}

TEST(StateSpace, CompanionStructure) {
  const auto op = expand_operator(0.1, 1.0, 3);
  const StateSpace ss = to_state_space(op);
  const int n = op.order();
  ASSERT_EQ(ss.a.rows(), n);
  for (int i = 0; i + 1 < n; ++i) {
    for (int j = 0; j < n; ++j) EXPECT_EQ(ss.a(i, j), j == i + 1 ? 1.0 : 0.0);
  }
  for (int k = 0; k < n; ++k) EXPECT_EQ(ss.a(n - 1, k), -op.coeffs[n - k]);
  for (int i = 0; i < n; ++i) EXPECT_EQ(ss.b(i), i == n - 1 ? 1.0 : 0.0);
  EXPECT_EQ(ss.output_index, 0);
}

TEST(StateSpace, EigenvaluesClusterAtBasePoles) {
  const Complex p(-0.1, 1.0);
  const double radius_limit[] = {0.0, 1e-12, 1e-7, 1e-5};
  for (int b_u = 1; b_u <= 3; ++b_u) {
    const auto eig = eigenvalues(to_state_space(expand_operator(0.1, 1.0, b_u)));
    ASSERT_EQ(static_cast<int>(eig.size()), 2 * b_u);
    int upper = 0;
    double radius = 0.0;
    for (const auto& z : eig) {
      const Complex target = z.imag() > 0.0 ? p : std::conj(p);
      upper += z.imag() > 0.0;
      radius = std::max(radius, std::abs(z - target));
    }
    EXPECT_EQ(upper, b_u);
    EXPECT_LE(radius, radius_limit[b_u]) << b_u;
  }
}

TEST(Simulate, ZeroInputGivesZeroOutput) {
  const auto ss = to_state_space(expand_operator(0.1, 1.0, 3));
  const SampledSignal u = sample([](double) { return 0.0; }, 0.01, 500);
  for (double v : simulate(ss, u).values) EXPECT_EQ(v, 0.0);
}

TEST(Simulate, StepResponseSettlesToDcGain) {
  for (int b_u : {1, 2, 3}) {
    const auto p = make_params(0.1, 1.0, Rational(b_u));
    const double t_end = 20.0 / 0.1;
    const SampledSignal u = sample([](double) { return 1.0; }, 0.05, 4001);
    const SampledSignal q = filter_via_ode(u, p);
    ASSERT_NEAR(q.time_at(q.size() - 1), t_end, 1e-9);
    const double dc = std::pow(1.01, -b_u);
    EXPECT_NEAR(q.values.back() / dc, 1.0, 1e-3) << b_u;
  }
}

TEST(Simulate, FourthOrderConvergence) {
  // A constant input makes the linear interpolation between samples exact,
  // leaving only the integrator error.
  const auto p = make_params(0.1, 1.0, Rational(2));
  auto h = [](double t) { return testing::table_integer(2, 0.1, 1.0, t); };
  const double ref = testing::convolve_at(h, [](double) { return 1.0; }, 30.0, 128);
  double prev_err = 0.0;
  for (int refine : {2, 4, 8}) {
    const SampledSignal u =
        sample([](double) { return 1.0; }, 0.4 / refine, static_cast<std::size_t>(75 * refine) + 1);
    const double err = std::abs(filter_via_ode(u, p).values.back() - ref);
    if (prev_err > 0.0) EXPECT_GT(prev_err / err, 10.0) << refine;
    prev_err = err;
  }
}

TEST(Simulate, DetectsBlowUp) {
  const auto ss = to_state_space(expand_operator(0.1, 1.0, 2));
  const SampledSignal u = sample([](double) { return 1.0; }, 10.0, 2000);
  try {
    simulate(ss, u);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::Unstable);
  }
}

TEST(Simulate, SubstepsReduceError) {
  const auto p = make_params(0.1, 1.0, Rational(3));
  const SampledSignal u = sample([](double) { return 1.0; }, 0.5, 201);
  auto h = [](double t) { return testing::table_integer(3, 0.1, 1.0, t); };
  const double ref = testing::convolve_at(h, [](double) { return 1.0; }, 100.0);
  const double e1 = std::abs(filter_via_ode(u, p, 1).values.back() - ref);
  const double e4 = std::abs(filter_via_ode(u, p, 4).values.back() - ref);
  EXPECT_LT(e4, e1 / 50.0);
}

TEST(FilterViaOde, SecondsDomainNeedsCf) {
  const SampledSignal u = sample([](double) { return 1.0; }, 1e-5, 10, Domain::Seconds);
  EXPECT_THROW(filter_via_ode(u, make_params(0.1, 1.0, Rational(2))), Error);
  const auto q = filter_via_ode(u, make_params(0.1, 1.0, Rational(2), 1000.0));
  EXPECT_EQ(q.domain, Domain::Seconds);
  EXPECT_DOUBLE_EQ(q.step, 1e-5);
}

}  // namespace
}  // namespace gef

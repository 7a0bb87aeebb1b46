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

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <sstream>

#include "gef/characteristics.hpp"
#include "gef/transfer_function.hpp"
#include "oracles.hpp"

namespace gef {
namespace {

// beta where |P| is n_db below the peak, from the quadratic in beta^2.
Band quadratic_band(double a, double b, double b_u, double n_db) {
  const double c = a * a + b * b;
  const double r = std::pow(10.0, n_db / (10.0 * b_u));
  const double mid = c - 2.0 * a * a;
  const double disc = std::sqrt(mid * mid - c * c + 4.0 * r * a * a * b * b);
  return {std::sqrt(mid - disc), std::sqrt(mid + disc)};
}

// Power integral over beta in [0, inf) via beta = tan(theta).
double power_integral(double a, double b, double b_u) {
  using boost::math::quadrature::gauss_kronrod;
  const double c = a * a + b * b;
  auto f = [&](double theta) {
    const double beta = std::tan(theta);
    const double m2 = (c - beta * beta) * (c - beta * beta) + 4.0 * a * a * beta * beta;
    return std::pow(m2, -b_u) * (1.0 + beta * beta);
  };
  double sum = 0.0;
  const int pieces = 400;
  for (int k = 0; k < pieces; ++k) {
    const double lo = 0.5 * testing::kPi * k / pieces;
    const double hi = 0.5 * testing::kPi * (k + 1) / pieces;
    sum += gauss_kronrod<double, 31>::integrate(f, lo, hi, 8, 1e-14);
  }
  return sum;
}

TEST(PeakBeta, ClosedFormAndNumericAgree) {
  for (double a : {0.05, 0.1, 0.4}) {
    const auto p = make_params(a, 1.0, Rational(5, 2));
    EXPECT_DOUBLE_EQ(peak_beta(p), std::sqrt(1.0 - a * a));
    const auto grid = linear_grid(0.01, 3.0, 3001);
    EXPECT_NEAR(peak_beta_numeric(p, grid), peak_beta(p), 1e-7);
  }
}

TEST(PeakBeta, IndependentOfExponent) {
  for (Rational b_u : {Rational(1, 3), Rational(1), Rational(9, 2)}) {
    EXPECT_DOUBLE_EQ(peak_beta(make_params(0.1, 1.0, b_u)), std::sqrt(0.99));
  }
}

TEST(PeakBeta, DegenerateBandpassThrows) {
  try {
    peak_beta(make_params(1.0, 0.5, Rational(2)));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DegenerateBandpass);
  }
}

TEST(NdbBand, MatchesQuadraticRoots) {
  for (double b_u : {1.5, 2.5, 7.0}) {
    for (double n_db : {3.0, 10.0, 15.0}) {
      const auto p = make_params(0.1, 1.0, Rational::nearest(b_u));
      const Band got = ndb_band(p, n_db);
      const Band ref = quadratic_band(0.1, 1.0, b_u, n_db);
      EXPECT_NEAR(got.lo, ref.lo, 1e-12);
      EXPECT_NEAR(got.hi, ref.hi, 1e-12);
      EXPECT_NEAR(magnitude_db_rel_peak(p, got.lo), -n_db, 1e-9);
    }
  }
}

TEST(NdbBand, NoCrossingWhenResponseIsTooFlat) {
  const auto p = make_params(0.5, 1.0, Rational(1));
  try {
    q_ndb(p, 15.0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NoCrossing);
    EXPECT_TRUE(is_numerical(e.code()));
  }
  EXPECT_THROW(ndb_band(p, -1.0), Error);
}

TEST(Erb, UnitExponentHasClosedForm) {
  for (double a : {0.02, 0.1, 0.3}) {
    const double b = 1.0;
    const double expected = testing::kPi * a * b * b / (a * a + b * b);
    const auto p = make_params(a, b, Rational(1));
    EXPECT_NEAR(erb(p) / expected, 1.0, 1e-9) << a;
    EXPECT_NEAR(erb_whole_line(p) / expected, 1.0, 1e-6) << a;
  }
}

TEST(Erb, MatchesIndependentQuadrature) {
  for (double b_u : {0.5, 1.5, 2.0, 10.0 / 3.0, 6.0}) {
    const double a = 0.1;
    const auto p = make_params(a, 1.0, Rational::nearest(b_u));
    const double peak = std::pow(4.0 * a * a, -b_u);
    EXPECT_NEAR(erb(p) / (power_integral(a, 1.0, b_u) / peak), 1.0, 1e-8) << b_u;
  }
}

TEST(Erb, DivergesForSmallExponent) {
  try {
    erb(make_params(0.1, 1.0, Rational(1, 5)));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::Divergent);
  }
}

TEST(GroupDelay, MatchesFiniteDifferenceOfPhase) {
  const auto p = make_params(0.1, 1.0, Rational(7, 3));
  for (double beta : {0.3, 0.9, 0.995, 1.2, 2.0}) {
    const double h = 1e-5;
    const double fd = -(phase(p, beta + h) - phase(p, beta - h)) / (2.0 * h) / kTwoPi;
    EXPECT_NEAR(group_delay(p, beta), fd, 1e-7 * std::abs(fd));
  }
}

TEST(GroupDelay, MaximumScalesLinearlyWithExponent) {
  const double n1 = group_delay_max(make_params(0.1, 1.0, Rational(1)));
  // Dense grid oracle on the unit-exponent closed form.
  double grid_max = 0.0;
  for (int i = 1; i <= 200000; ++i) {
    const double beta = 3.0 * i / 200000.0;
    const double c = 1.01;
    const double v = 0.2 * (c + beta * beta) /
                     ((c - beta * beta) * (c - beta * beta) + 0.04 * beta * beta) / kTwoPi;
    grid_max = std::max(grid_max, v);
  }
  EXPECT_NEAR(n1, grid_max, 1e-8 * grid_max);
  for (Rational b_u : {Rational(3, 2), Rational(5, 2), Rational(17, 4), Rational(10)}) {
    EXPECT_NEAR(group_delay_max(make_params(0.1, 1.0, b_u)), b_u.value() * n1,
                1e-9 * b_u.value() * n1);
  }
}

TEST(Characteristics, IncreaseWithExponent) {
  const auto b_us = exponent_range(Rational(3, 2), Rational(10), Rational(1, 4));
  const auto rows = characteristics_sweep(0.1, 1.0, b_us);
  ASSERT_EQ(rows.size(), 35u);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    ASSERT_TRUE(rows[i].values && rows[i - 1].values);
    EXPECT_GT(rows[i].values->q_erb, rows[i - 1].values->q_erb);
    EXPECT_GT(rows[i].values->q3, rows[i - 1].values->q3);
    EXPECT_GT(rows[i].values->n_group_delay, rows[i - 1].values->n_group_delay);
  }
}

TEST(Characteristics, RatiosAreConsistent) {
  const Characteristics c = characteristics(make_params(0.1, 1.0, Rational(3)));
  EXPECT_DOUBLE_EQ(c.q_erb_over_n, c.q_erb / c.n_group_delay);
  EXPECT_DOUBLE_EQ(c.q3_over_q15, c.q3 / c.q15);
  EXPECT_GT(c.q3, c.q10);
  EXPECT_GT(c.q10, c.q15);
}

TEST(Characteristics, ErbOverDelayDependsMostlyOnExponent) {
  // Measured spread of Q_erb / N at B = 3: 7.4% over A in {0.02 .. 0.2},
  // 1.7% once A <= 0.1.
  auto ratio = [](double a) { return characteristics(make_params(a, 1.0, Rational(3))).q_erb_over_n; };
  auto spread = [&](std::initializer_list<double> as) {
    double lo = 1e300;
    double hi = 0.0;
    double sum = 0.0;
    for (double a : as) {
      const double r = ratio(a);
      lo = std::min(lo, r);
      hi = std::max(hi, r);
      sum += r;
    }
    return (hi - lo) / (sum / static_cast<double>(as.size()));
  };
  EXPECT_NEAR(spread({0.02, 0.05, 0.1, 0.2}), 0.074, 0.002);
  EXPECT_LT(spread({0.02, 0.05, 0.1}), 0.02);
}

TEST(Sweep, UndefinedFieldsAreNan) {
  const std::vector<Rational> b_us{Rational(1), Rational(8)};
  const auto rows = characteristics_sweep(0.5, 1.0, b_us);
  ASSERT_TRUE(rows[0].values);
  EXPECT_FALSE(rows[0].error.empty());
  EXPECT_TRUE(std::isnan(rows[0].values->q15));
  EXPECT_TRUE(std::isfinite(rows[0].values->q_erb));
  EXPECT_TRUE(rows[1].error.empty());

  std::ostringstream os;
  write_sweep_csv(os, rows);
  EXPECT_EQ(os.str().substr(0, os.str().find('\n')),
            "B_u,beta_peak,Q_erb,Q3,Q10,Q15,N,Qerb_over_N,Qerb_over_Q10,Q3_over_Q15");
  EXPECT_NE(os.str().find("nan"), std::string::npos);
}

TEST(ExponentRange, IncludesEndpoints) {
  const auto r = exponent_range(Rational(1), Rational(2), Rational(1, 3));
  ASSERT_EQ(r.size(), 4u);
  EXPECT_EQ(r.back(), Rational(2));
  EXPECT_THROW(exponent_range(Rational(2), Rational(1), Rational(1)), Error);
}

}  // namespace
}  // namespace gef

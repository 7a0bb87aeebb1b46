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

#include <atomic>
#include <cmath>
#include <random>
#include <sstream>

#include "gef/core.hpp"
#include "gef/csv.hpp"
#include "gef/parallel.hpp"
#include "gef/special.hpp"

namespace gef {
namespace {

template <typename F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected gef::Error";
  return ErrorCode::InternalInvariant;
}

TEST(Rational, ReducesToLowestTerms) {
  const Rational r(10, 4);
  EXPECT_EQ(r.num(), 5);
  EXPECT_EQ(r.den(), 2);
  EXPECT_TRUE(r.is_half_integer());
  EXPECT_EQ(Rational(6, -3), Rational(-2));
  EXPECT_EQ(r.to_string(), "5/2");
  EXPECT_EQ(Rational(3).to_string(), "3");
}

TEST(Rational, ParsesFractionsIntegersAndDecimals) {
  EXPECT_EQ(Rational::parse("7/3"), Rational(7, 3));
  EXPECT_EQ(Rational::parse(" 4 "), Rational(4));
  EXPECT_EQ(Rational::parse("2.5"), Rational(5, 2));
  EXPECT_EQ(Rational::parse("0.3333333333"), Rational(1, 3));
  EXPECT_EQ(code_of([] { Rational::parse("abc"); }), ErrorCode::InvalidArgument);
  EXPECT_EQ(code_of([] { Rational::parse("1/0"); }), ErrorCode::NonRationalExponent);
}

TEST(Rational, NearestRespectsDenominatorCap) {
  const Rational r = Rational::nearest(kPi, 7);
  EXPECT_EQ(r, Rational(22, 7));
  EXPECT_EQ(Rational(1, 2) + Rational(1, 3), Rational(5, 6));
}

TEST(Validate, RejectsNonPositiveConstants) {
  EXPECT_EQ(code_of([] { make_params(0.0, 1.0, Rational(2)); }),
            ErrorCode::NonPositiveConstant);
  EXPECT_EQ(code_of([] { make_params(0.1, -1.0, Rational(2)); }),
            ErrorCode::NonPositiveConstant);
  EXPECT_EQ(code_of([] { make_params(0.1, 1.0, Rational(-3, 2)); }),
            ErrorCode::NonPositiveConstant);
  EXPECT_EQ(code_of([] { make_params(0.1, 1.0, Rational(2), -5.0); }),
            ErrorCode::NonPositiveConstant);
  EXPECT_EQ(code_of([] { make_params(0.1, 1.0, Rational(1, 65)); }),
            ErrorCode::NonRationalExponent);
  EXPECT_EQ(code_of([] { make_params(std::nan(""), 1.0, Rational(2)); }),
            ErrorCode::NonPositiveConstant);
}

TEST(Validate, FlagsDegenerateBandpass) {
  EXPECT_FALSE(make_params(0.1, 1.0, Rational(2)).degenerate_bandpass());
  EXPECT_TRUE(make_params(1.0, 1.0, Rational(2)).degenerate_bandpass());
  EXPECT_TRUE(make_params(2.0, 1.0, Rational(2)).degenerate_bandpass());
}

TEST(Validate, MissingCfIsReported) {
  const auto p = make_params(0.1, 1.0, Rational(2));
  EXPECT_EQ(code_of([&] { p.require_cf(); }), ErrorCode::MissingCf);
  EXPECT_DOUBLE_EQ(p.with_cf(1000.0).require_cf(), 1000.0);
  EXPECT_EQ(pole(p), Complex(-0.1, 1.0));
  EXPECT_DOUBLE_EQ(p.pole_mag2(), 1.01);
}

TEST(ScaledTime, RoundTrips) {
  EXPECT_DOUBLE_EQ(scaled_time(1e-3, 1000.0), kTwoPi);
  EXPECT_NEAR(unscale_time(scaled_time(0.0123, 440.0), 440.0), 0.0123, 1e-18);
}

TEST(SampledSignal, InterpolatesLinearlyAndZeroOutside) {
  const SampledSignal s = sample([](double t) { return 2.0 * t + 1.0; }, 0.5, 5);
  EXPECT_DOUBLE_EQ(s.interpolate(0.75), 2.5);
  EXPECT_DOUBLE_EQ(s.interpolate(2.0), 5.0);
  EXPECT_EQ(s.interpolate(-0.1), 0.0);
  EXPECT_EQ(s.interpolate(2.1), 0.0);
}

TEST(SampledSignal, DomainConversionRescalesTime) {
  SampledSignal s = sample([](double t) { return t; }, 1e-4, 10, Domain::Seconds);
  const SampledSignal scaled = s.to_scaled_time(500.0);
  EXPECT_EQ(scaled.domain, Domain::ScaledTime);
  EXPECT_NEAR(scaled.step, kTwoPi * 500.0 * 1e-4, 1e-15);
  EXPECT_EQ(scaled.values, s.values);
  const SampledSignal back = scaled.to_seconds(500.0);
  EXPECT_NEAR(back.step, 1e-4, 1e-18);
}

TEST(SampledSignal, CheckRejectsBadGrids) {
  SampledSignal s;
  s.values = {1.0, 2.0};
  s.step = 0.0;
  EXPECT_EQ(code_of([&] { s.check(); }), ErrorCode::InvalidGrid);
  s.step = 1.0;
  s.values[1] = std::nan("");
  EXPECT_EQ(code_of([&] { s.check(); }), ErrorCode::InvalidGrid);
}

TEST(Csv, FormatsWithRoundTripPrecision) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> dist(-1e6, 1e6);
  for (int i = 0; i < 200; ++i) {
    const double v = dist(rng) * std::pow(10.0, (i % 40) - 20);
    EXPECT_EQ(std::stod(csv::format(v)), v);
  }
  EXPECT_EQ(csv::format(0.0), "0");
}

TEST(Csv, SignalRoundTrip) {
  const SampledSignal s =
      sample([](double t) { return std::sin(3.0 * t); }, 0.01, 300, Domain::Seconds);
  std::stringstream io;
  csv::write_signal(io, s, "t_seconds", "u");
  const SampledSignal r = csv::read_signal(io, Domain::Seconds);
  ASSERT_EQ(r.size(), s.size());
  EXPECT_NEAR(r.step, s.step, 1e-15);
  for (std::size_t i = 0; i < s.size(); ++i) EXPECT_EQ(r.values[i], s.values[i]);
}

TEST(Csv, RejectsNonUniformSpacing) {
  std::istringstream in("t,u\n0,1\n1,2\n3,3\n");
  EXPECT_EQ(code_of([&] { csv::read_signal(in, Domain::Seconds); }),
            ErrorCode::InvalidGrid);
  std::istringstream bad("t,u\n0,1\n1,x\n");
  EXPECT_EQ(code_of([&] { csv::read_signal(bad, Domain::Seconds); }),
            ErrorCode::InvalidArgument);
}

TEST(Parallel, VisitsEveryIndexOnce) {
  std::vector<std::atomic<int>> hits(1000);
  parallel_for(hits.size(), [&](std::size_t i) { hits[i]++; });
  for (const auto& h : hits) EXPECT_EQ(h.load(), 1);
}

TEST(Parallel, PropagatesExceptions) {
  EXPECT_THROW(parallel_for(64,
                            [](std::size_t i) {
                              if (i == 17) throw std::runtime_error("boom");
                            }),
               std::runtime_error);
}

TEST(Special, BesselMatchesStandardLibrary) {
  for (double nu : {0.0, 0.5, 1.0, 1.5, 2.5, 4.0, 6.5}) {
    for (double x : {1e-3, 0.3, 1.0, 7.5, 40.0, 180.0}) {
      EXPECT_NEAR(bessel_j(nu, x), std::cyl_bessel_j(nu, x), 1e-13) << nu << " " << x;
    }
  }
}

TEST(Special, GammaMatchesStandardLibrary) {
  for (double x : {0.5, 1.0, 2.5, 7.0, 11.25}) {
    EXPECT_NEAR(gamma_fn(x) / std::tgamma(x), 1.0, 1e-14);
  }
  EXPECT_NEAR(gamma_fn(0.5), std::sqrt(kPi), 1e-15);
}

TEST(Special, GaussLegendreIntegratesPolynomialsExactly) {
  const QuadratureRule rule = gauss_legendre_unit(8);
  double sum = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    sum += rule.weights[i] * std::pow(rule.nodes[i], 15);
  }
  EXPECT_NEAR(sum, 1.0 / 16.0, 1e-15);
}

TEST(Special, RootAndMaximumFinders) {
  EXPECT_NEAR(bisect([](double x) { return x * x - 2.0; }, 0.0, 2.0), std::sqrt(2.0),
              1e-13);
  EXPECT_NEAR(golden_section_max([](double x) { return -(x - 0.3) * (x - 0.3); }, 0.0,
                                 1.0, 1e-12),
              0.3, 1e-6);
}

}  // namespace
}  // namespace gef

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

#include "gef/impulse_response.hpp"
#include "gef/transfer_function.hpp"
#include "oracles.hpp"

namespace gef {
namespace {

using testing::bessel_form;
using testing::table_half_integer;
using testing::table_integer;
using testing::half_row_amplitude;
using testing::integer_row_amplitude;

TEST(HExact, ReproducesIntegerRows) {
  for (double a : {0.05, 0.1}) {
    for (double b : {0.8, 1.0}) {
      for (int b_u = 2; b_u <= 5; ++b_u) {
        const auto p = make_params(a, b, Rational(b_u));
        for (int i = 1; i <= 4000; ++i) {
          const double t = 0.05 * i;
          const double ref = table_integer(b_u, a, b, t);
          const double amp = integer_row_amplitude(b_u, a, b, t);
          ASSERT_LE(std::abs(h_exact(p, t) - ref), 1e-10 * amp)
              << "B=" << b_u << " a=" << a << " b=" << b << " t=" << t;
          ASSERT_LE(std::abs(h_integer_polynomial(p, t) - ref), 1e-10 * amp);
        }
      }
    }
  }
}

TEST(HExact, ReproducesHalfIntegerRows) {
  for (double a : {0.05, 0.1}) {
    for (double b : {0.8, 1.0}) {
      for (int n = 1; n <= 4; ++n) {
        const auto p = make_params(a, b, Rational(2 * n + 1, 2));
        for (int i = 1; i <= 4000; ++i) {
          const double t = 0.05 * i;
          const double ref = table_half_integer(n, a, b, t);
          const double amp = half_row_amplitude(n, a, b, t);
          ASSERT_LE(std::abs(h_exact(p, t) - ref), 1e-10 * amp) << n << " " << t;
          ASSERT_LE(std::abs(h_half_integer(p, t) - ref), 1e-10 * amp);
        }
      }
    }
  }
}

TEST(HExact, UnitExponentIsDampedSine) {
  const auto p = make_params(0.1, 1.0, Rational(1));
  for (double t : {0.5, 3.0, 17.0}) {
    EXPECT_NEAR(h_exact(p, t), std::exp(-0.1 * t) * std::sin(t), 1e-14);
  }
}

TEST(HExact, LaplaceTransformIsRationalPowerOfBase) {
  using boost::math::quadrature::gauss_kronrod;
  for (Rational b_u : {Rational(7, 3), Rational(5, 2), Rational(13, 4), Rational(3)}) {
    const auto p = make_params(0.1, 1.0, b_u);
    for (double s : {0.4, 1.0}) {
      double sum = 0.0;
      for (int k = 0; k < 200; ++k) {
        sum += gauss_kronrod<double, 61>::integrate(
            [&](double t) { return std::exp(-s * t) * h_exact(p, t); }, 0.5 * k,
            0.5 * (k + 1), 10, 1e-14);
      }
      const double expected = std::pow(s * s + 0.2 * s + 1.01, -b_u.value());
      EXPECT_NEAR(sum / expected, 1.0, 1e-9) << b_u.to_string() << " s=" << s;
    }
  }
}

TEST(HExact, RecurrenceRowsBeyondTable) {
  for (int b_u = 6; b_u <= 9; ++b_u) {
    const auto p = make_params(0.1, 1.0, Rational(b_u));
    // Small t is left out: the polynomial form cancels there by construction.
    for (double t : {5.0, 40.0, 90.0}) {
      const double ref = bessel_form(b_u, 0.1, 1.0, t);
      EXPECT_NEAR(h_integer_polynomial(p, t), ref, 1e-10 * std::abs(ref) + 1e-300)
          << b_u << " " << t;
    }
  }
}

TEST(HExact, RejectsSmallExponents) {
  try {
    h_exact(make_params(0.1, 1.0, Rational(1, 2)), 1.0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnsupportedExponent);
  }
  EXPECT_THROW(h_integer_polynomial(make_params(0.1, 1.0, Rational(5, 2)), 1.0), Error);
  EXPECT_THROW(h_half_integer(make_params(0.1, 1.0, Rational(3)), 1.0), Error);
  EXPECT_THROW(h_half_integer(make_params(0.1, 1.0, Rational(1, 2)), 1.0), Error);
}

TEST(HExact, ZeroBeforeOnset) {
  const auto p = make_params(0.1, 1.0, Rational(7, 3));
  EXPECT_EQ(h_exact(p, -1.0), 0.0);
  EXPECT_EQ(h_exact(p, 0.0), 0.0);
}

TEST(SphericalBessel, FirstRowsMatchLiteralCoefficients) {
  const TrigPolynomial r3 = spherical_bessel_polynomial(3);
  // x^4 j_3(x) = (15 - 6 x^2) sin x + (x^3 - 15 x) cos x
  ASSERT_GE(r3.sin_coeffs.size(), 3u);
  EXPECT_DOUBLE_EQ(r3.sin_coeffs[0], 15.0);
  EXPECT_DOUBLE_EQ(r3.sin_coeffs[2], -6.0);
  EXPECT_DOUBLE_EQ(r3.cos_coeffs[1], -15.0);
  EXPECT_DOUBLE_EQ(r3.cos_coeffs[3], 1.0);
  for (int n = 0; n <= 7; ++n) {
    const TrigPolynomial tp = spherical_bessel_polynomial(n);
    const double x = 3.7;
    double v = 0.0;
    for (std::size_t k = 0; k < tp.sin_coeffs.size(); ++k) v += tp.sin_coeffs[k] * std::pow(x, k) * std::sin(x);
    for (std::size_t k = 0; k < tp.cos_coeffs.size(); ++k) v += tp.cos_coeffs[k] * std::pow(x, k) * std::cos(x);
    EXPECT_NEAR(v, std::pow(x, n + 1) * std::sph_bessel(n, x), 1e-10 * std::pow(x, n));
  }
}

TEST(ImpulseForm, ScaleConstants) {
  const double b = 0.8;
  EXPECT_DOUBLE_EQ(
      ImpulseResponseForm(ImpulseKind::IntegerPolynomial, make_params(0.1, b, Rational(3)))
          .normalization(),
      1.0 / (8.0 * std::pow(b, 5)));
  EXPECT_DOUBLE_EQ(
      ImpulseResponseForm(ImpulseKind::IntegerPolynomial, make_params(0.1, b, Rational(5)))
          .normalization(),
      1.0 / (384.0 * std::pow(b, 9)));
  EXPECT_DOUBLE_EQ(ImpulseResponseForm(ImpulseKind::HalfIntegerBessel,
                                       make_params(0.1, b, Rational(7, 2)))
                       .normalization(),
                   1.0 / (15.0 * std::pow(b, 3)));
  // sqrt(pi) / Gamma(5/2) / (2 b)^2 equals 1 / (3 b^2).
  EXPECT_NEAR(ImpulseResponseForm(ImpulseKind::ExactBessel, make_params(0.1, b, Rational(5, 2)))
                  .normalization(),
              1.0 / (3.0 * b * b), 1e-15);
  EXPECT_THROW(ImpulseResponseForm(ImpulseKind::IntegerPolynomial,
                                   make_params(0.1, b, Rational(5, 2))),
               Error);
}

TEST(ImpulseForm, SecondsDomainScaling) {
  const auto p = make_params(0.1, 1.0, Rational(5, 2), 1000.0);
  const double t = 2.5e-3;
  EXPECT_NEAR(impulse_response_seconds(p, t),
              kTwoPi * 1000.0 * bessel_form(2.5, 0.1, 1.0, kTwoPi * 1000.0 * t), 1e-9);
  EXPECT_THROW(impulse_response_seconds(make_params(0.1, 1.0, Rational(2)), t), Error);
}

TEST(Gtf, EnvelopeMaximumMatchesExact) {
  for (Rational b_u : {Rational(2), Rational(5, 2), Rational(4)}) {
    const auto p = make_params(0.1, 1.0, b_u);
    const GtfApproximant gtf(p);
    EXPECT_DOUBLE_EQ(gtf.envelope_power(), b_u.value() - 1.0);
    EXPECT_DOUBLE_EQ(gtf.envelope_peak(), (b_u.value() - 1.0) / 0.1);
    const auto [t_max, v_max] = exact_envelope_max(p);
    const double g = gtf.envelope_power();
    const double gtf_env_max =
        gtf.scale() * std::exp(-g) * std::pow(g / 0.1, g);  // (b t)^g e^(-A t) at t = g/A, b = 1
    EXPECT_NEAR(gtf_env_max / v_max, 1.0, 1e-12);
    EXPECT_GT(t_max, 0.0);
  }
  EXPECT_DOUBLE_EQ(GtfApproximant(make_params(0.1, 1.0, Rational(3)), GtfEnvelope::HalfPower)
                       .envelope_power(),
                   2.5);
}

TEST(Gtf, IntegerExponentScaleIsNearLeadingTerm) {
  // Highest-order term of the B = 2 row: -(1 / 2 b^3) x cos x e^(-A t).
  const GtfApproximant gtf(make_params(0.05, 1.0, Rational(2)));
  EXPECT_NEAR(gtf.scale(), 0.5, 0.5 * 0.05);
  const double t = 60.0;
  EXPECT_NEAR(gtf(t), -0.5 * t * std::cos(t) * std::exp(-0.05 * t), 0.05 * t * std::exp(-0.05 * t));
}

// Relative L2 error over [t_pk/2, 5 t_pk].
double gtf_l2_error(double a, Rational b_u) {
  const auto p = make_params(a, 1.0, b_u);
  const GtfApproximant gtf(p);
  const double t_pk = (b_u.value() - 1.0) / a;
  double num = 0.0;
  double den = 0.0;
  const int n = 40000;
  for (int i = 0; i <= n; ++i) {
    const double t = 0.5 * t_pk + 4.5 * t_pk * i / n;
    const double ref = bessel_form(b_u.value(), a, 1.0, t);
    num += (gtf(t) - ref) * (gtf(t) - ref);
    den += ref * ref;
  }
  return std::sqrt(num / den);
}

TEST(Gtf, ErrorShrinksWithDamping) {
  for (Rational b_u : {Rational(2), Rational(5, 2)}) {
    double prev = 1e300;
    for (double a : {0.4, 0.2, 0.1, 0.05}) {
      const double e = gtf_l2_error(a, b_u);
      EXPECT_LT(e, prev) << b_u.to_string() << " " << a;
      prev = e;
    }
  }
}

TEST(EnvelopePeak, RuleAndNumericAgreeForSmallDamping) {
  const EnvelopePeak pk = envelope_peak_time(make_params(0.05, 1.0, Rational(3)));
  EXPECT_DOUBLE_EQ(pk.rule, 40.0);
  EXPECT_DOUBLE_EQ(pk.rule_half_power, 50.0);
  EXPECT_NEAR(pk.numeric / pk.rule, 1.0, 0.05);
  EXPECT_GT(pk.numeric_value, 0.0);
  EXPECT_THROW(envelope_peak_time(make_params(0.05, 1.0, Rational(1))), Error);
}

TEST(KernelLength, EnvelopeIsNegligiblePastCut) {
  const auto p = make_params(0.1, 1.0, Rational(5, 2));
  const double step = 0.05;
  const std::size_t len = kernel_length(p, step);
  const double t_cut = step * static_cast<double>(len);
  const double nu = 2.0;
  auto bound = [&](double t) { return std::pow(t, nu) * std::exp(-0.1 * t); };
  EXPECT_LE(bound(t_cut), 1.0001e-6 * bound(nu / 0.1));
  EXPECT_GE(bound(t_cut - 2.0 * step), 0.999e-6 * bound(nu / 0.1));
}

TEST(ConvolveTrapezoid, ExactForLinearIntegrand) {
  const double step = 0.1;
  std::vector<double> data(50);
  for (std::size_t i = 0; i < data.size(); ++i) data[i] = step * static_cast<double>(i);
  const std::vector<double> ones(50, 1.0);
  const auto out = convolve_trapezoid(data, ones, step);
  for (std::size_t i = 0; i < data.size(); ++i) {
    EXPECT_NEAR(out[i], 0.5 * data[i] * data[i], 1e-13);
  }
}

TEST(ConvolveTrapezoid, FftPathMatchesDirectSum) {
  std::vector<double> data(6000);
  std::vector<double> kernel(1500);
  for (std::size_t i = 0; i < data.size(); ++i) data[i] = std::sin(0.013 * i) + 0.1 * std::cos(0.7 * i);
  for (std::size_t j = 0; j < kernel.size(); ++j) kernel[j] = std::exp(-0.003 * j) * std::cos(0.05 * j);
  const auto out = convolve_trapezoid(data, kernel, 0.5);
  double scale = 0.0;
  double err = 0.0;
  for (std::size_t i = 97; i < data.size(); i += 97) {
    double acc = 0.0;
    const std::size_t jmax = std::min(i, kernel.size() - 1);
    for (std::size_t j = 0; j <= jmax; ++j) {
      const double w = (j == 0 || j == i) ? 0.5 : 1.0;
      acc += w * kernel[j] * data[i - j];
    }
    acc *= 0.5;
    scale = std::max(scale, std::abs(acc));
    err = std::max(err, std::abs(out[i] - acc));
  }
  EXPECT_LT(err / scale, 1e-12);
}

TEST(FilterViaConvolution, StepResponseMatchesQuadrature) {
  const auto p = make_params(0.1, 1.0, Rational(2));
  const SampledSignal u = sample([](double) { return 1.0; }, 0.01, 3001);
  const SampledSignal q = filter_via_convolution(u, p);
  auto h = [](double t) { return table_integer(2, 0.1, 1.0, t); };
  for (std::size_t i : {100u, 777u, 1500u, 3000u}) {
    const double ref = testing::convolve_at(h, [](double) { return 1.0; }, q.time_at(i));
    EXPECT_NEAR(q.values[i], ref, 2e-5) << i;
  }
}

TEST(FilterViaConvolution, LinearAndZeroPreserving) {
  const auto p = make_params(0.1, 1.0, Rational(7, 3));
  const SampledSignal a = sample([](double t) { return std::sin(t); }, 0.05, 800);
  const SampledSignal b = sample([](double t) { return std::exp(-0.1 * t); }, 0.05, 800);
  SampledSignal mix = a;
  for (std::size_t i = 0; i < mix.size(); ++i) mix.values[i] = 2.0 * a.values[i] - 3.0 * b.values[i];
  const auto qa = filter_via_convolution(a, p);
  const auto qb = filter_via_convolution(b, p);
  const auto qm = filter_via_convolution(mix, p);
  for (std::size_t i = 0; i < mix.size(); ++i) {
    EXPECT_NEAR(qm.values[i], 2.0 * qa.values[i] - 3.0 * qb.values[i], 1e-12);
  }
  const SampledSignal zero = sample([](double) { return 0.0; }, 0.05, 100);
  for (double v : filter_via_convolution(zero, p).values) EXPECT_EQ(v, 0.0);
}

TEST(FilterViaConvolution, KernelTruncationOnSlowDecay) {
  const auto p = make_params(1e-7, 1.0, Rational(2));
  const SampledSignal u = sample([](double) { return 0.0; }, 0.01, 1'000'001);
  try {
    filter_via_convolution(u, p);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::KernelTruncation);
  }
}

}  // namespace
}  // namespace gef

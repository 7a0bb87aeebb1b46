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
#include <sstream>

#include "gef/filterbank.hpp"
#include "oracles.hpp"

namespace gef {
namespace {

FilterParams shape(double a_p, Rational b_u) { return FilterParams{a_p, 1.0, b_u, std::nullopt}; }

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::InternalInvariant;
}

TEST(CfMap, LogSpacing) {
  const CfMap m = CfMap::log_spaced(3, 500.0, 2000.0);
  ASSERT_EQ(m.cf_values.size(), 3u);
  EXPECT_DOUBLE_EQ(m.cf_values[0], 500.0);
  EXPECT_NEAR(m.cf_values[1], 1000.0, 1e-9);
  EXPECT_DOUBLE_EQ(m.cf_values[2], 2000.0);
  EXPECT_EQ(CfMap::log_spaced(1, 700.0, 900.0).cf_values, std::vector<double>{700.0});
  EXPECT_EQ(code_of([] { CfMap::log_spaced(0, 1.0, 2.0); }), ErrorCode::InvalidArgument);
  EXPECT_EQ(code_of([] { CfMap::explicit_values({100.0, 50.0}); }), ErrorCode::InvalidArgument);
  EXPECT_EQ(code_of([] { CfMap::explicit_values({}); }), ErrorCode::InvalidArgument);
}

TEST(Build, SharesShapeAndAppliesOverrides) {
  const CfMap m = CfMap::explicit_values({250.0, 1000.0, 4000.0});
  const Filterbank bank =
      build(m, shape(0.1, Rational(5, 2)), {{1, 0.05, Rational(3)}});
  ASSERT_EQ(bank.channels.size(), 3u);
  EXPECT_EQ(bank.cf_values(), m.cf_values);
  EXPECT_DOUBLE_EQ(bank.channels[0].a_p(), 0.1);
  EXPECT_EQ(bank.channels[2].b_u(), Rational(5, 2));
  EXPECT_DOUBLE_EQ(bank.channels[1].a_p(), 0.05);
  EXPECT_EQ(bank.channels[1].b_u(), Rational(3));
  EXPECT_DOUBLE_EQ(bank.channels[2].require_cf(), 4000.0);
  EXPECT_EQ(code_of([&] { build(m, shape(0.1, Rational(2)), {{5, 0.2, {}}}); }),
            ErrorCode::InvalidArgument);
  EXPECT_EQ(code_of([] { build(CfMap{}, shape(0.1, Rational(2))); }), ErrorCode::InvalidArgument);
}

TEST(Method, ParseRoundTrip) {
  for (Method m : {Method::Integral, Method::Ode, Method::Convolution, Method::Dft}) {
    EXPECT_EQ(parse_method(to_string(m)), m);
  }
  EXPECT_EQ(parse_method("conv"), Method::Convolution);
  EXPECT_EQ(code_of([] { parse_method("fir"); }), ErrorCode::InvalidArgument);
}

TEST(Process, MethodCompatibilityIsChecked) {
  const Filterbank bank = build(CfMap::explicit_values({1000.0}), shape(0.1, Rational(5, 2)));
  const AnalyticInput in = tone_pips(1000.0);
  EXPECT_EQ(code_of([&] { process(bank, in, 1e-4, 10, Method::Ode); }),
            ErrorCode::MethodUnsupportedForExponent);
  const Filterbank unit = build(CfMap::explicit_values({1000.0}), shape(0.1, Rational(1)));
  EXPECT_EQ(code_of([&] { process(unit, in, 1e-4, 10, Method::Integral); }),
            ErrorCode::MethodUnsupportedForExponent);
  EXPECT_EQ(code_of([&] { process(bank, integer_equiv_input(), 1e-4, 10, Method::Integral); }),
            ErrorCode::InvalidGrid);
}

TEST(Process, TimeScalingSymmetry) {
  // Channel at CF driven by u(t) equals channel at 2 CF driven by u(2 t) at
  // half the time.
  auto u = [](double t) { return std::sin(2.0 * testing::kPi * 900.0 * t) * std::exp(-200.0 * t); };
  auto u2 = [&](double t) { return u(2.0 * t); };
  const auto low = make_params(0.1, 1.0, Rational(7, 3), 1000.0);
  const auto high = make_params(0.1, 1.0, Rational(7, 3), 2000.0);
  for (Method m : {Method::Integral, Method::Convolution}) {
    const SampledSignal a = process_channel(low, u, 2e-5, 1000, 0.0, m);
    const SampledSignal b = process_channel(high, u2, 1e-5, 1000, 0.0, m);
    double peak = 0.0;
    for (double v : a.values) peak = std::max(peak, std::abs(v));
    for (std::size_t i = 0; i < a.size(); ++i) {
      ASSERT_NEAR(a.values[i], b.values[i], 1e-10 * peak) << to_string(m) << " " << i;
    }
  }
}

TEST(Process, MethodsAgreeOnTonePips) {
  const Filterbank bank =
      build(CfMap::log_spaced(3, 500.0, 2000.0), shape(0.1, Rational(5, 2)));
  const AnalyticInput in = tone_pips(1000.0);
  const std::size_t count = 4001;
  const double step = 0.09 / (count - 1);
  // The integral path is second order in the channel step; 160 samples per
  // cycle brings it within 1e-3 of the converged convolution.
  ProcessOptions opts;
  opts.samples_per_cycle = 160.0;
  const FilterbankOutput a = process(bank, in, step, count, Method::Integral, opts);
  const FilterbankOutput b = process(bank, in, step, count, Method::Convolution, opts);
  ASSERT_EQ(a.channels.size(), 3u);
  for (std::size_t c = 0; c < 3; ++c) {
    double peak = 0.0;
    double err = 0.0;
    for (std::size_t i = 0; i < count; ++i) {
      peak = std::max(peak, std::abs(b.channels[c][i]));
      err = std::max(err, std::abs(a.channels[c][i] - b.channels[c][i]));
    }
    EXPECT_LT(err / peak, 1e-3) << c;
  }
}

TEST(Process, SampledAndAnalyticInputsAgree) {
  const Filterbank bank = build(CfMap::explicit_values({800.0, 1600.0}), shape(0.1, Rational(2)));
  const AnalyticInput in = quadratic_chirp(1000.0);
  const double step = 1.0 / 96000.0;
  const std::size_t count = 4800;
  const FilterbankOutput a = process(bank, in, step, count, Method::Ode);
  const FilterbankOutput b = process(bank, in.sample(step, count), Method::Ode);
  for (std::size_t c = 0; c < 2; ++c) {
    double peak = 0.0;
    double err = 0.0;
    for (std::size_t i = 0; i < count; ++i) {
      peak = std::max(peak, std::abs(a.channels[c][i]));
      err = std::max(err, std::abs(a.channels[c][i] - b.channels[c][i]));
    }
    // Only the linear interpolation of the sampled input differs.
    EXPECT_LT(err / peak, 2e-2) << c;
  }
}

TEST(Process, ZeroInputAndChannelIndependence) {
  const Filterbank bank = build(CfMap::explicit_values({500.0, 1000.0}), shape(0.1, Rational(3)));
  const SampledSignal zero = sample([](double) { return 0.0; }, 1e-4, 200, Domain::Seconds);
  for (const auto& ch : process(bank, zero, Method::Ode).channels) {
    for (double v : ch) EXPECT_EQ(v, 0.0);
  }
  const Filterbank tweaked =
      build(CfMap::explicit_values({500.0, 1000.0}), shape(0.1, Rational(3)), {{0, 0.3, {}}});
  const AnalyticInput in = tone_pips(1000.0);
  const auto a = process(bank, in, 1e-4, 500, Method::Ode);
  const auto b = process(tweaked, in, 1e-4, 500, Method::Ode);
  EXPECT_EQ(a.channels[1], b.channels[1]);
  EXPECT_NE(a.channels[0], b.channels[0]);
}

TEST(Spectrogram, ToneLandsInItsChannel) {
  const Filterbank bank =
      build(CfMap::log_spaced(3, 500.0, 2000.0), shape(0.1, Rational(5, 2)));
  const SampledSignal tone = sample(
      [](double t) { return std::sin(2.0 * testing::kPi * 1000.0 * t); }, 1.0 / 48000.0, 4800,
      Domain::Seconds);
  const FilterbankOutput out = process(bank, tone, Method::Convolution);
  const Spectrogram spec = spectrogramify(out, 0.01);
  ASSERT_EQ(spec.rms.size(), 3u);
  ASSERT_EQ(spec.frame_start.size(), 10u);
  for (std::size_t f = 3; f < spec.frame_start.size(); ++f) {
    EXPECT_GT(spec.rms[1][f], 10.0 * spec.rms[0][f]);
    EXPECT_GT(spec.rms[1][f], 10.0 * spec.rms[2][f]);
  }
  EXPECT_EQ(code_of([&] { spectrogramify(out, 1.0 / 96000.0); }), ErrorCode::InvalidArgument);

  std::ostringstream os;
  write_spectrogram_csv(os, spec);
  EXPECT_EQ(os.str().substr(0, 9), "cf_hz,0,0");
  std::ostringstream longform;
  write_long_csv(longform, out);
  const std::string text = longform.str();
  EXPECT_EQ(text.substr(0, text.find('\n')), "cf_hz,t_seconds,q");
  EXPECT_EQ(static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n')), 1 + 3 * 4800u);
}

}  // namespace
}  // namespace gef

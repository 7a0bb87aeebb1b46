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

#include "gef/core.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace gef {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonPositiveConstant: return "NonPositiveConstant";
    case ErrorCode::NonRationalExponent: return "NonRationalExponent";
    case ErrorCode::DegenerateBandpass: return "DegenerateBandpass";
    case ErrorCode::MissingCf: return "MissingCf";
    case ErrorCode::InvalidGrid: return "InvalidGrid";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::UnsupportedExponent: return "UnsupportedExponent";
    case ErrorCode::MethodUnsupportedForExponent:
      return "MethodUnsupportedForExponent";
    case ErrorCode::UnsupportedOracleCombination:
      return "UnsupportedOracleCombination";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::NoCrossing: return "NoCrossing";
    case ErrorCode::Divergent: return "Divergent";
    case ErrorCode::Unstable: return "Unstable";
    case ErrorCode::ImaginaryResidueTooLarge: return "ImaginaryResidueTooLarge";
    case ErrorCode::KernelTruncation: return "KernelTruncation";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::InternalInvariant: return "InternalInvariant";
  }
  return "Unknown";
}

bool is_numerical(ErrorCode code) {
  switch (code) {
    case ErrorCode::NoCrossing:
    case ErrorCode::Divergent:
    case ErrorCode::Unstable:
    case ErrorCode::ImaginaryResidueTooLarge:
    case ErrorCode::KernelTruncation:
    case ErrorCode::Overflow:
    case ErrorCode::InternalInvariant:
      return true;
    default:
      return false;
  }
}

// ---------------------------------------------------------------------------
// Rational

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) {
    throw Error(ErrorCode::NonRationalExponent, "zero denominator");
  }
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
  num_ = num / (g == 0 ? 1 : g);
  den_ = den / (g == 0 ? 1 : g);
}

Rational Rational::nearest(double x, std::int64_t max_den) {
  if (!std::isfinite(x)) {
    throw Error(ErrorCode::NonRationalExponent, "exponent is not finite");
  }
  std::int64_t best_num = std::llround(x);
  std::int64_t best_den = 1;
  double best_err = std::abs(x - static_cast<double>(best_num));
  for (std::int64_t den = 2; den <= max_den; ++den) {
    const std::int64_t num = std::llround(x * static_cast<double>(den));
    const double err =
        std::abs(x - static_cast<double>(num) / static_cast<double>(den));
    if (err < best_err - 1e-15) {
      best_err = err;
      best_num = num;
      best_den = den;
    }
  }
  return Rational(best_num, best_den);
}

namespace {

bool parse_int(const std::string& s, std::int64_t& out) {
  if (s.empty()) return false;
  std::size_t used = 0;
  try {
    out = std::stoll(s, &used);
  } catch (const std::exception&) {
    return false;
  }
  return used == s.size();
}

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t");
  return s.substr(first, last - first + 1);
}

}  // namespace

Rational Rational::parse(const std::string& raw, std::int64_t max_den) {
  const std::string text = trim(raw);
  if (const auto slash = text.find('/'); slash != std::string::npos) {
    std::int64_t num = 0;
    std::int64_t den = 0;
    if (!parse_int(trim(text.substr(0, slash)), num) ||
        !parse_int(trim(text.substr(slash + 1)), den)) {
      throw Error(ErrorCode::InvalidArgument,
                  "cannot parse exponent '" + raw + "'");
    }
    return Rational(num, den);
  }
  std::int64_t whole = 0;
  if (parse_int(text, whole)) return Rational(whole);
  std::size_t used = 0;
  double x = 0.0;
  try {
    x = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size()) {
    throw Error(ErrorCode::InvalidArgument,
                "cannot parse exponent '" + raw + "'");
  }
  return nearest(x, max_den);
}

std::string Rational::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational operator+(Rational a, Rational b) {
  return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

// ---------------------------------------------------------------------------
// Parameters

double ValidatedParams::require_cf() const {
  if (!raw_.cf_hz) {
    throw Error(ErrorCode::MissingCf,
                "characteristic frequency is required for seconds-domain work");
  }
  return *raw_.cf_hz;
}

ValidatedParams ValidatedParams::with_exponent(Rational b_u) const {
  FilterParams p = raw_;
  p.b_u = b_u;
  return validate(p);
}

ValidatedParams ValidatedParams::with_cf(std::optional<double> cf_hz) const {
  FilterParams p = raw_;
  p.cf_hz = cf_hz;
  return validate(p);
}

ValidatedParams ValidatedParams::with_damping(double a_p) const {
  FilterParams p = raw_;
  p.a_p = a_p;
  return validate(p);
}

ValidatedParams validate(const FilterParams& params) {
  auto positive = [](double v) { return std::isfinite(v) && v > 0.0; };
  if (!positive(params.a_p)) {
    throw Error(ErrorCode::NonPositiveConstant, "A_p must be positive");
  }
  if (!positive(params.b_p)) {
    throw Error(ErrorCode::NonPositiveConstant, "b_p must be positive");
  }
  if (params.b_u.den() <= 0) {
    throw Error(ErrorCode::NonRationalExponent, "zero exponent denominator");
  }
  if (params.b_u.num() <= 0) {
    throw Error(ErrorCode::NonPositiveConstant, "B_u must be positive");
  }
  if (params.b_u.den() > kMaxExponentDenominator) {
    throw Error(ErrorCode::NonRationalExponent,
                "exponent denominator exceeds " +
                    std::to_string(kMaxExponentDenominator));
  }
  if (params.cf_hz && !positive(*params.cf_hz)) {
    throw Error(ErrorCode::NonPositiveConstant, "CF must be positive");
  }
  return ValidatedParams(params, params.b_p <= params.a_p);
}

ValidatedParams make_params(double a_p, double b_p, Rational b_u,
                            std::optional<double> cf_hz) {
  return validate(FilterParams{a_p, b_p, b_u, cf_hz});
}

Complex pole(const ValidatedParams& params) {
  return {-params.a_p(), params.b_p()};
}

double scaled_time(double t_seconds, double cf_hz) {
  if (!(cf_hz > 0.0) || !std::isfinite(cf_hz)) {
    throw Error(ErrorCode::NonPositiveConstant, "CF must be positive");
  }
  return kTwoPi * cf_hz * t_seconds;
}

double unscale_time(double t_tilde, double cf_hz) {
  if (!(cf_hz > 0.0) || !std::isfinite(cf_hz)) {
    throw Error(ErrorCode::NonPositiveConstant, "CF must be positive");
  }
  return t_tilde / (kTwoPi * cf_hz);
}

// ---------------------------------------------------------------------------
// SampledSignal

std::vector<double> SampledSignal::times() const {
  std::vector<double> t(values.size());
  for (std::size_t i = 0; i < t.size(); ++i) t[i] = time_at(i);
  return t;
}

void SampledSignal::check() const {
  if (!(step > 0.0) || !std::isfinite(step)) {
    throw Error(ErrorCode::InvalidGrid, "sample step must be positive");
  }
  if (!std::all_of(values.begin(), values.end(),
                   [](double v) { return std::isfinite(v); })) {
    throw Error(ErrorCode::InvalidGrid, "signal contains non-finite samples");
  }
}

SampledSignal SampledSignal::to_scaled_time(double cf_hz) const {
  if (domain == Domain::ScaledTime) return *this;
  SampledSignal out = *this;
  out.domain = Domain::ScaledTime;
  out.step = scaled_time(step, cf_hz);
  out.start = scaled_time(start, cf_hz);
  return out;
}

SampledSignal SampledSignal::to_seconds(double cf_hz) const {
  if (domain == Domain::Seconds) return *this;
  SampledSignal out = *this;
  out.domain = Domain::Seconds;
  out.step = unscale_time(step, cf_hz);
  out.start = unscale_time(start, cf_hz);
  return out;
}

double SampledSignal::interpolate(double coordinate) const {
  if (values.empty()) return 0.0;
  const double x = (coordinate - start) / step;
  if (x < 0.0) return x > -1e-9 ? values.front() : 0.0;
  const double last = static_cast<double>(values.size() - 1);
  if (x >= last) return x <= last + 1e-9 ? values.back() : 0.0;
  const auto i = static_cast<std::size_t>(x);
  const double frac = x - static_cast<double>(i);
  return values[i] + frac * (values[i + 1] - values[i]);
}

}  // namespace gef

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

// Parameter types and conventions shared by every filter representation.
//
// A generalized exponent filter (GEF) is the second-order all-pole base filter
//   base(s) = s^2 + 2 A_p s + A_p^2 + b_p^2
// raised to a positive rational exponent B_u:
//   P(s) = base(s)^(-B_u).
// Frequencies are normalized by the characteristic frequency (beta = f / CF,
// s = i beta) and time is scaled as t~ = 2 pi CF t. The gain constant is fixed
// to one, so every output here is the normalized response.

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gef/error.hpp"

namespace gef {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

/// Largest exponent denominator accepted anywhere in the library.
inline constexpr std::int64_t kMaxExponentDenominator = 64;

/// Exact positive rational, always stored in lowest terms.
class Rational {
 public:
  Rational() = default;
  /// Reduces to lowest terms. Throws NonRationalExponent when den == 0.
  Rational(std::int64_t num, std::int64_t den = 1);

  /// Parses "m/n", an integer, or a decimal. Decimals snap to the nearest
  /// rational whose denominator is at most max_den.
  static Rational parse(const std::string& text,
                        std::int64_t max_den = kMaxExponentDenominator);
  /// Best approximation of x with denominator <= max_den.
  static Rational nearest(double x,
                          std::int64_t max_den = kMaxExponentDenominator);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  double value() const {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }
  bool is_integer() const { return den_ == 1; }
  /// Odd multiple of 1/2.
  bool is_half_integer() const { return den_ == 2; }
  std::string to_string() const;

  friend Rational operator+(Rational a, Rational b);
  friend bool operator==(const Rational&, const Rational&) = default;

 private:
  std::int64_t num_ = 1;
  std::int64_t den_ = 1;
};

/// Raw, unchecked filter constants. Run through validate() before use.
struct FilterParams {
  double a_p = 0.1;
  double b_p = 1.0;
  Rational b_u{2};
  std::optional<double> cf_hz;
};

/// Filter constants that passed validate(). Immutable.
class ValidatedParams {
 public:
  double a_p() const { return raw_.a_p; }
  double b_p() const { return raw_.b_p; }
  Rational b_u() const { return raw_.b_u; }
  double exponent() const { return raw_.b_u.value(); }
  const std::optional<double>& cf_hz() const { return raw_.cf_hz; }
  /// CF in Hz; throws MissingCf when absent.
  double require_cf() const;

  /// |p|^2 = A_p^2 + b_p^2.
  double pole_mag2() const { return raw_.a_p * raw_.a_p + raw_.b_p * raw_.b_p; }

  /// b_p <= A_p: the magnitude response has no interior peak.
  bool degenerate_bandpass() const { return degenerate_; }

  const FilterParams& raw() const { return raw_; }

  ValidatedParams with_exponent(Rational b_u) const;
  ValidatedParams with_cf(std::optional<double> cf_hz) const;
  ValidatedParams with_damping(double a_p) const;

 private:
  friend ValidatedParams validate(const FilterParams& params);
  ValidatedParams(const FilterParams& raw, bool degenerate)
      : raw_(raw), degenerate_(degenerate) {}

  FilterParams raw_;
  bool degenerate_ = false;
};

/// Checks positivity of A_p, b_p, B_u (and CF when present) and the exponent
/// denominator cap. b_p <= A_p is flagged, not rejected.
ValidatedParams validate(const FilterParams& params);

/// Convenience for validate({a_p, b_p, b_u, cf_hz}).
ValidatedParams make_params(double a_p, double b_p, Rational b_u,
                            std::optional<double> cf_hz = std::nullopt);

/// Upper-half-plane pole p = -A_p + i b_p of the base filter.
Complex pole(const ValidatedParams& params);

/// t~ = 2 pi CF t.
double scaled_time(double t_seconds, double cf_hz);
double unscale_time(double t_tilde, double cf_hz);

enum class Domain { Seconds, ScaledTime };

/// Uniformly sampled real series.
struct SampledSignal {
  std::vector<double> values;
  double step = 1.0;
  Domain domain = Domain::ScaledTime;
  double start = 0.0;
  /// Free-form caveat attached by the producing method.
  std::string note;

  std::size_t size() const { return values.size(); }
  double time_at(std::size_t i) const {
    return start + step * static_cast<double>(i);
  }
  std::vector<double> times() const;

  /// Checks step > 0 and finite values. Throws InvalidGrid.
  void check() const;

  /// Same samples re-labelled in scaled time (or seconds) using CF.
  SampledSignal to_scaled_time(double cf_hz) const;
  SampledSignal to_seconds(double cf_hz) const;

  /// Piecewise-linear value at an arbitrary coordinate; zero outside.
  double interpolate(double coordinate) const;
};

/// Samples f(start + i*step) for i in [0, count).
template <typename F>
SampledSignal sample(F&& f, double step, std::size_t count,
                     Domain domain = Domain::ScaledTime, double start = 0.0) {
  SampledSignal s;
  s.step = step;
  s.domain = domain;
  s.start = start;
  s.values.resize(count);
  for (std::size_t i = 0; i < count; ++i) {
    s.values[i] = f(start + step * static_cast<double>(i));
  }
  return s;
}

}  // namespace gef

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

#include "gef/signals.hpp"

#include <cmath>
#include <map>

#include "gef/impulse_response.hpp"
#include "gef/special.hpp"

namespace gef {

namespace {

using LongComplex = std::complex<long double>;

struct PoleKey {
  double re;
  double im;
  bool operator<(const PoleKey& o) const {
    return re < o.re || (re == o.re && im < o.im);
  }
};

void require_positive(double v, const char* what) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    throw Error(ErrorCode::NonPositiveConstant, std::string(what) + " must be positive");
  }
}

}  // namespace

std::string to_string(InputKind kind) {
  switch (kind) {
    case InputKind::TonePips: return "tone-pips";
    case InputKind::QuadraticChirp: return "quadratic-chirp";
    case InputKind::IntegerEquivalence: return "integer-equivalence";
    case InputKind::HalfIntegerEquivalence: return "half-integer-equivalence";
    case InputKind::Step: return "step";
    case InputKind::SmoothPulse: return "smooth-pulse";
  }
  return "unknown";
}

AnalyticInput::AnalyticInput(InputKind kind, Domain domain,
                             std::function<double(double)> eval,
                             std::vector<LaplaceTerm> laplace)
    : kind_(kind), domain_(domain), eval_(std::move(eval)), laplace_(std::move(laplace)) {}

SampledSignal AnalyticInput::sample(double step, std::size_t count, double start) const {
  return gef::sample(eval_, step, count, domain_, start);
}

AnalyticInput tone_pips(const TonePipParams& params) {
  require_positive(params.width_s, "pip width");
  const auto pips = params.pips;
  const double width = params.width_s;
  AnalyticInput in(InputKind::TonePips, Domain::Seconds, [pips, width](double t) {
    double acc = 0.0;
    for (const TonePip& pip : pips) {
      const double d = (t - pip.center_s) / width;
      acc += std::exp(-d * d) * std::sin(kTwoPi * pip.freq_hz * t);
    }
    return acc;
  });
  in.pips = params;
  return in;
}

AnalyticInput tone_pips(double cf_hz) {
  require_positive(cf_hz, "CF");
  TonePipParams p;
  p.cf_hz = cf_hz;
  p.width_s = 5e-3;
  p.pips = {{cf_hz, 20e-3}, {5.0 * cf_hz, 50e-3}, {7.0 / 8.0 * cf_hz, 70e-3},
            {cf_hz / 5.0, 40e-3}};
  return tone_pips(p);
}

AnalyticInput quadratic_chirp(const ChirpParams& params) {
  require_positive(params.duration_s, "chirp duration");
  require_positive(params.f_start_hz, "chirp start frequency");
  require_positive(params.f_end_hz, "chirp end frequency");
  const ChirpParams c = params;
  AnalyticInput in(InputKind::QuadraticChirp, Domain::Seconds, [c](double t) {
    if (t < 0.0 || t > c.duration_s) return 0.0;
    const double cycles = c.f_start_hz * t + (c.f_end_hz - c.f_start_hz) * t * t * t /
                                                 (3.0 * c.duration_s * c.duration_s);
    return std::sin(kTwoPi * cycles);
  });
  in.chirp = params;
  return in;
}

AnalyticInput quadratic_chirp(double cf_hz) {
  require_positive(cf_hz, "CF");
  return quadratic_chirp(ChirpParams{0.2 * cf_hz, 2.0 * cf_hz, 0.05});
}

AnalyticInput integer_equiv_input() {
  // t e^(z t) -> 1/(s - z)^2 and t^3 e^(w t) -> 6/(s - w)^4; the cosines
  // split into conjugate halves.
  const Complex z{-0.5, 10.0};
  const Complex w{-1.0, 1.0};
  std::vector<LaplaceTerm> terms = {
      {0.5, z, 2}, {0.5, std::conj(z), 2}, {3.0, w, 4}, {3.0, std::conj(w), 4}};
  return AnalyticInput(
      InputKind::IntegerEquivalence, Domain::ScaledTime,
      [](double t) {
        if (t < 0.0) return 0.0;
        return t * std::cos(10.0 * t) * std::exp(-t / 2.0) +
               t * t * t * std::exp(-t) * std::cos(t);
      },
      std::move(terms));
}

AnalyticInput half_integer_equiv_input(const ValidatedParams& params, double a) {
  require_positive(a, "input exponent a");
  const double nu = a - 0.5;
  const double a_p = params.a_p();
  const double b_p = params.b_p();
  AnalyticInput in(InputKind::HalfIntegerEquivalence, Domain::ScaledTime,
                   [nu, a_p, b_p](double t) {
                     if (t < 0.0) return 0.0;
                     if (t == 0.0) return nu == 0.0 ? 1.0 : 0.0;
                     return std::exp(-a_p * t) * std::pow(t, nu) * bessel_j(nu, b_p * t);
                   });
  in.half_integer = HalfIntegerParams{a, a_p, b_p};
  return in;
}

AnalyticInput step_input() {
  return AnalyticInput(
      InputKind::Step, Domain::ScaledTime, [](double t) { return t >= 0.0 ? 1.0 : 0.0; },
      {{1.0, 0.0, 1}});
}

AnalyticInput smooth_pulse(double center, double width, Domain domain) {
  require_positive(width, "pulse width");
  AnalyticInput in(InputKind::SmoothPulse, domain, [center, width](double t) {
    const double d = (t - center) / width;
    return std::exp(-d * d) / (width * std::sqrt(kPi));
  });
  in.pulse = PulseParams{center, width};
  return in;
}

double ExponentialPolynomial::operator()(double t) const {
  if (t < 0.0) return 0.0;
  Complex acc{0.0, 0.0};
  for (const Group& g : groups) {
    Complex poly{0.0, 0.0};
    for (auto it = g.coeffs.rbegin(); it != g.coeffs.rend(); ++it) poly = poly * t + *it;
    acc += std::exp(g.pole * t) * poly;
  }
  return acc.real();
}

ExponentialPolynomial inverse_laplace(
    const std::vector<LaplaceTerm>& terms,
    const std::vector<std::pair<Complex, int>>& extra_poles) {
  std::map<PoleKey, std::vector<LongComplex>> acc;
  for (const LaplaceTerm& term : terms) {
    std::map<PoleKey, int> poles;
    poles[{term.pole.real(), term.pole.imag()}] += term.order;
    for (const auto& [z, m] : extra_poles) poles[{z.real(), z.imag()}] += m;

    for (const auto& [key, m] : poles) {
      const LongComplex z0(key.re, key.im);
      // Taylor series of (s - z0)^m Y(s) around z0 up to degree m - 1.
      std::vector<LongComplex> g(m, LongComplex{0.0L, 0.0L});
      g[0] = LongComplex(term.coefficient.real(), term.coefficient.imag());
      for (const auto& [other, r] : poles) {
        if (!(other < key) && !(key < other)) continue;
        const LongComplex d = z0 - LongComplex(other.re, other.im);
        std::vector<LongComplex> factor(m);
        factor[0] = std::pow(d, static_cast<long double>(-r));
        for (int i = 1; i < m; ++i) {
          factor[i] = factor[i - 1] * (-static_cast<long double>(r + i - 1) / i) / d;
        }
        std::vector<LongComplex> prod(m, LongComplex{0.0L, 0.0L});
        for (int i = 0; i < m; ++i) {
          for (int j = 0; i + j < m; ++j) prod[i + j] += g[i] * factor[j];
        }
        g = std::move(prod);
      }
      // Residue of G(eps) e^(eps t) / eps^m: t^j coefficient G_(m-1-j) / j!.
      auto& coeffs = acc[key];
      if (coeffs.size() < static_cast<std::size_t>(m)) coeffs.resize(m);
      long double fact = 1.0L;
      for (int j = 0; j < m; ++j) {
        if (j > 0) fact *= j;
        coeffs[j] += g[m - 1 - j] / fact;
      }
    }
  }
  ExponentialPolynomial out;
  for (const auto& [key, coeffs] : acc) {
    ExponentialPolynomial::Group grp;
    grp.pole = Complex(key.re, key.im);
    for (const LongComplex& c : coeffs) {
      grp.coeffs.emplace_back(static_cast<double>(c.real()), static_cast<double>(c.imag()));
    }
    out.groups.push_back(std::move(grp));
  }
  return out;
}

OutputFunction analytic_oracle(const AnalyticInput& input, const ValidatedParams& params) {
  switch (input.kind()) {
    case InputKind::IntegerEquivalence:
    case InputKind::Step: {
      if (!params.b_u().is_integer()) {
        throw Error(ErrorCode::UnsupportedOracleCombination,
                    "residue oracle for " + to_string(input.kind()) +
                        " needs an integer B_u, got " + params.b_u().to_string());
      }
      const int m = static_cast<int>(params.b_u().num());
      const Complex p = pole(params);
      ExponentialPolynomial y =
          inverse_laplace(input.laplace(), {{p, m}, {std::conj(p), m}});
      return [y = std::move(y)](double t) { return y(t); };
    }
    case InputKind::HalfIntegerEquivalence: {
      const HalfIntegerParams& h = *input.half_integer;
      if (h.a_p != params.a_p() || h.b_p != params.b_p()) {
        throw Error(ErrorCode::UnsupportedOracleCombination,
                    "exponent addition needs the input's A_p and b_p to match the filter");
      }
      // a is stored as a double; snap it so a + B_u stays exact.
      const Rational a = Rational::nearest(h.a);
      const ValidatedParams sum = params.with_exponent(a + params.b_u());
      const double scale =
          std::pow(2.0 * h.b_p, h.a - 0.5) * gamma_fn(h.a) / std::sqrt(kPi);
      if (sum.b_u().is_integer()) {
        return [sum, scale](double t) { return scale * h_integer_polynomial(sum, t); };
      }
      return [sum, scale](double t) { return scale * h_exact(sum, t); };
    }
    default:
      throw Error(ErrorCode::UnsupportedOracleCombination,
                  "no analytic oracle for " + to_string(input.kind()));
  }
}

}  // namespace gef

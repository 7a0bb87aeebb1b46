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

#include "gef/characteristics.hpp"

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>

#include "gef/csv.hpp"
#include "gef/parallel.hpp"
#include "gef/special.hpp"

namespace gef {

namespace {

double base_mag2(const ValidatedParams& params, double beta) {
  const double re = params.pole_mag2() - beta * beta;
  const double im = 2.0 * params.a_p() * beta;
  return re * re + im * im;
}

// |base(i beta_peak)|^2 = 4 A_p^2 b_p^2.
double peak_base_mag2(const ValidatedParams& params) {
  return 4.0 * params.a_p() * params.a_p() * params.b_p() * params.b_p();
}

void require_bandpass(const ValidatedParams& params) {
  if (params.degenerate_bandpass()) {
    throw Error(ErrorCode::DegenerateBandpass,
                "b_p <= A_p: the response has no interior magnitude peak");
  }
}

// |P(beta)|^2 / |P(beta_peak)|^2.
double relative_power(const ValidatedParams& params, double beta) {
  return std::pow(base_mag2(params, beta) / peak_base_mag2(params),
                  -params.exponent());
}

}  // namespace

double peak_beta(const ValidatedParams& params) {
  require_bandpass(params);
  return std::sqrt(params.b_p() * params.b_p() - params.a_p() * params.a_p());
}

double peak_beta_numeric(const ValidatedParams& params,
                         std::span<const double> betas) {
  if (betas.size() < 3) {
    throw Error(ErrorCode::InvalidGrid, "peak search needs at least 3 points");
  }
  std::size_t best = 0;
  double best_mag = base_mag2(params, betas[0]);
  for (std::size_t i = 1; i < betas.size(); ++i) {
    const double m = base_mag2(params, betas[i]);
    if (m < best_mag) {
      best_mag = m;
      best = i;
    }
  }
  if (best == 0 || best + 1 == betas.size()) return betas[best];
  return golden_section_max(
      [&](double beta) { return -base_mag2(params, beta); }, betas[best - 1],
      betas[best + 1], 1e-14);
}

double magnitude_db_rel_peak(const ValidatedParams& params, double beta) {
  require_bandpass(params);
  return -10.0 * params.exponent() *
         std::log10(base_mag2(params, beta) / peak_base_mag2(params));
}

Band ndb_band(const ValidatedParams& params, double n_db) {
  if (!(n_db > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "dB drop must be positive");
  }
  const double beta_pk = peak_beta(params);
  const double ratio = std::pow(10.0, n_db / (10.0 * params.exponent()));
  const double ref = peak_base_mag2(params);
  auto excess = [&](double beta) { return base_mag2(params, beta) / ref - ratio; };

  if (excess(0.0) <= 0.0) {
    throw Error(ErrorCode::NoCrossing,
                "response never falls " + csv::format(n_db) +
                    " dB below the peak on the low side");
  }
  Band band;
  band.lo = bisect(excess, 0.0, beta_pk);
  double hi = 2.0 * beta_pk;
  while (excess(hi) <= 0.0) {
    hi *= 2.0;
    if (hi > 1e12) {
      throw Error(ErrorCode::NoCrossing, "no high-side crossing found");
    }
  }
  band.hi = bisect(excess, beta_pk, hi);
  return band;
}

double q_ndb(const ValidatedParams& params, double n_db) {
  return peak_beta(params) / ndb_band(params, n_db).width();
}

double erb(const ValidatedParams& params) {
  require_bandpass(params);
  if (!(params.exponent() > 0.25)) {
    throw Error(ErrorCode::Divergent,
                "power integral diverges for B_u <= 1/4");
  }
  using boost::math::quadrature::gauss_kronrod;
  const double beta_pk = peak_beta(params);
  auto f = [&](double beta) { return relative_power(params, beta); };

  // Peak region split at beta_pk and at a few bandwidths above it, then a
  // tail beyond X handled through beta = X / u. Since the integrand decays
  // like beta^(-4 B_u), the mapped integrand ~ u^(4 B_u - 2) is integrable.
  const double width = std::max(params.a_p(), 1e-3);
  const double mid = beta_pk + 40.0 * width;
  const double tail_start = std::max(3.0 * beta_pk, mid + beta_pk);
  double err = 0.0;
  const double low = gauss_kronrod<double, 61>::integrate(f, 0.0, beta_pk, 20, 1e-13, &err);
  const double near = gauss_kronrod<double, 61>::integrate(f, beta_pk, mid, 20, 1e-13, &err);
  const double far = gauss_kronrod<double, 61>::integrate(f, mid, tail_start, 20, 1e-13, &err);
  boost::math::quadrature::tanh_sinh<double> ts;
  const double tail = ts.integrate(
      [&](double u) {
        if (u <= 0.0) return 0.0;
        // f(beta) beta^2 / X in log form; beta^4 overflows as u -> 0.
        const double log_beta = std::log(tail_start) - std::log(u);
        const double r = params.pole_mag2() * std::exp(-2.0 * log_beta);
        const double a = 2.0 * params.a_p() * std::exp(-log_beta);
        const double log_mag2 = 4.0 * log_beta + std::log((r - 1.0) * (r - 1.0) + a * a);
        const double log_rel = -params.exponent() * (log_mag2 - std::log(peak_base_mag2(params)));
        return std::exp(log_rel + 2.0 * log_beta - std::log(tail_start));
      },
      0.0, 1.0, 1e-13);
  return low + near + far + tail;
}

double erb_whole_line(const ValidatedParams& params) {
  require_bandpass(params);
  if (!(params.exponent() > 0.25)) {
    throw Error(ErrorCode::Divergent,
                "power integral diverges for B_u <= 1/4");
  }
  boost::math::quadrature::exp_sinh<double> es;
  return es.integrate([&](double beta) { return relative_power(params, beta); },
                      0.0, std::numeric_limits<double>::infinity(), 1e-13);
}

double q_erb(const ValidatedParams& params) {
  return peak_beta(params) / erb(params);
}

double phase(const ValidatedParams& params, double beta) {
  return -params.exponent() *
         std::atan2(2.0 * params.a_p() * beta, params.pole_mag2() - beta * beta);
}

double group_delay(const ValidatedParams& params, double beta) {
  // d/d beta atan2(2 A beta, c - beta^2) = 2 A (c + beta^2) / |base|^2.
  const double c = params.pole_mag2();
  const double d_theta =
      2.0 * params.a_p() * (c + beta * beta) / base_mag2(params, beta);
  return params.exponent() * d_theta / kTwoPi;
}

double group_delay_max(const ValidatedParams& params) {
  // The delay depends on B_u only as a factor, so the maximizer is found on
  // the unit-exponent curve.
  const ValidatedParams unit = params.with_exponent(Rational(1));
  const double hi = 3.0 * std::sqrt(params.pole_mag2());
  const std::size_t n = 2048;
  std::size_t best = 0;
  double best_val = -1.0;
  for (std::size_t i = 0; i <= n; ++i) {
    const double beta = hi * static_cast<double>(i) / static_cast<double>(n);
    const double v = group_delay(unit, beta);
    if (v > best_val) {
      best_val = v;
      best = i;
    }
  }
  const double step = hi / static_cast<double>(n);
  const double lo_b = std::max(0.0, (static_cast<double>(best) - 1.0) * step);
  const double hi_b = (static_cast<double>(best) + 1.0) * step;
  const double arg = golden_section_max(
      [&](double beta) { return group_delay(unit, beta); }, lo_b, hi_b, 1e-14);
  return params.exponent() * std::max(group_delay(unit, arg), best_val);
}

Characteristics characteristics(const ValidatedParams& params) {
  Characteristics c;
  c.beta_peak = peak_beta(params);
  c.q_erb = c.beta_peak / erb(params);
  c.q3 = q_ndb(params, 3.0);
  c.q10 = q_ndb(params, 10.0);
  c.q15 = q_ndb(params, 15.0);
  c.n_group_delay = group_delay_max(params);
  c.q_erb_over_n = c.q_erb / c.n_group_delay;
  c.q_erb_over_q10 = c.q_erb / c.q10;
  c.q3_over_q15 = c.q3 / c.q15;
  return c;
}

namespace {

// Field-by-field version for rows where some quantity is undefined; the
// undefined fields are NaN.
std::optional<Characteristics> partial_characteristics(double a_p, double b_p, Rational b_u) {
  const double nan = std::numeric_limits<double>::quiet_NaN();
  auto guarded = [nan](auto&& fn) {
    try {
      return fn();
    } catch (const Error&) {
      return nan;
    }
  };
  try {
    const ValidatedParams p = make_params(a_p, b_p, b_u);
    Characteristics c;
    c.beta_peak = guarded([&] { return peak_beta(p); });
    c.q_erb = guarded([&] { return q_erb(p); });
    c.q3 = guarded([&] { return q_ndb(p, 3.0); });
    c.q10 = guarded([&] { return q_ndb(p, 10.0); });
    c.q15 = guarded([&] { return q_ndb(p, 15.0); });
    c.n_group_delay = guarded([&] { return group_delay_max(p); });
    c.q_erb_over_n = c.q_erb / c.n_group_delay;
    c.q_erb_over_q10 = c.q_erb / c.q10;
    c.q3_over_q15 = c.q3 / c.q15;
    return c;
  } catch (const Error&) {
    return std::nullopt;
  }
}

}  // namespace

std::vector<SweepRow> characteristics_sweep(double a_p, double b_p,
                                            std::span<const Rational> b_us) {
  std::vector<SweepRow> rows(b_us.size());
  parallel_for(b_us.size(), [&](std::size_t i) {
    rows[i].b_u = b_us[i];
    try {
      rows[i].values = characteristics(make_params(a_p, b_p, b_us[i]));
    } catch (const Error& e) {
      rows[i].error = e.what();
      rows[i].values = partial_characteristics(a_p, b_p, b_us[i]);
    }
  });
  return rows;
}

std::vector<Rational> exponent_range(Rational lo, Rational hi, Rational step) {
  if (step.value() <= 0.0 || hi.value() < lo.value()) {
    throw Error(ErrorCode::InvalidArgument, "bad exponent range");
  }
  std::vector<Rational> out;
  for (Rational b = lo; b.value() <= hi.value() + 1e-12; b = b + step) {
    out.push_back(b);
  }
  return out;
}

void write_sweep_csv(std::ostream& os, std::span<const SweepRow> rows) {
  os << "B_u,beta_peak,Q_erb,Q3,Q10,Q15,N,Qerb_over_N,Qerb_over_Q10,Q3_over_Q15\n";
  for (const SweepRow& row : rows) {
    os << csv::format(row.b_u.value());
    if (!row.values) {
      os << ",nan,nan,nan,nan,nan,nan,nan,nan,nan\n";
      continue;
    }
    const Characteristics& c = *row.values;
    for (double v : {c.beta_peak, c.q_erb, c.q3, c.q10, c.q15, c.n_group_delay,
                     c.q_erb_over_n, c.q_erb_over_q10, c.q3_over_q15}) {
      os << ',' << csv::format(v);
    }
    os << '\n';
  }
}

}  // namespace gef

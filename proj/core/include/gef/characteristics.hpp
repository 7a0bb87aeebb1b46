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

// Frequency-domain characteristics computed from the closed-form magnitude
// and phase of P: peak frequency, n-dB and equivalent-rectangular quality
// factors, and maximum normalized group delay.

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gef/core.hpp"

namespace gef {

struct Characteristics {
  double beta_peak = 0.0;
  double q_erb = 0.0;
  double q3 = 0.0;
  double q10 = 0.0;
  double q15 = 0.0;
  /// Maximum normalized group delay in cycles.
  double n_group_delay = 0.0;
  double q_erb_over_n = 0.0;
  double q_erb_over_q10 = 0.0;
  double q3_over_q15 = 0.0;
};

/// argmax |P(i beta)| = sqrt(b_p^2 - A_p^2). Throws DegenerateBandpass when
/// b_p <= A_p. The location does not depend on B_u.
double peak_beta(const ValidatedParams& params);

/// Grid argmax of |P| refined by golden-section search; cross-check for
/// peak_beta.
double peak_beta_numeric(const ValidatedParams& params,
                         std::span<const double> betas);

/// Magnitude in dB relative to the peak, from the closed form.
double magnitude_db_rel_peak(const ValidatedParams& params, double beta);

struct Band {
  double lo = 0.0;
  double hi = 0.0;
  double width() const { return hi - lo; }
};

/// Frequencies where the response is n_db below the peak, by bisection.
/// Throws NoCrossing when the low side never drops n_db.
Band ndb_band(const ValidatedParams& params, double n_db);

/// beta_peak / (n-dB bandwidth).
double q_ndb(const ValidatedParams& params, double n_db);

/// Power equivalent rectangular bandwidth:
///   (1 / |P(beta_peak)|^2) * integral_0^inf |P(beta)|^2 d beta.
/// Requires B_u > 1/4 for the integral to converge (Divergent otherwise).
double erb(const ValidatedParams& params);

/// Same integral evaluated as one half-infinite quadrature with no split at
/// the peak; used to cross-check erb().
double erb_whole_line(const ValidatedParams& params);

double q_erb(const ValidatedParams& params);

/// Closed-form phase of P at beta (radians, continuous on beta >= 0).
double phase(const ValidatedParams& params, double beta);

/// -(1/2 pi) d phase / d beta at beta, in closed form.
double group_delay(const ValidatedParams& params, double beta);

/// Maximum of group_delay over beta > 0.
double group_delay_max(const ValidatedParams& params);

Characteristics characteristics(const ValidatedParams& params);

struct SweepRow {
  Rational b_u;
  std::optional<Characteristics> values;
  std::string error;  // non-empty when some field is undefined
};

/// One row per exponent, computed in parallel. Rows where some quantity is
/// undefined carry the error text and NaN in the affected fields.
std::vector<SweepRow> characteristics_sweep(double a_p, double b_p,
                                            std::span<const Rational> b_us);

/// Exponents lo, lo+step, ..., hi (all rationals).
std::vector<Rational> exponent_range(Rational lo, Rational hi, Rational step);

/// CSV with header
/// B_u,beta_peak,Q_erb,Q3,Q10,Q15,N,Qerb_over_N,Qerb_over_Q10,Q3_over_Q15.
void write_sweep_csv(std::ostream& os, std::span<const SweepRow> rows);

}  // namespace gef

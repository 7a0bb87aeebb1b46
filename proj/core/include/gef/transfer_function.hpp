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

// Frequency-domain representation: P(i beta) = base(i beta)^(-B_u).

#include <iosfwd>
#include <span>
#include <vector>

#include "gef/core.hpp"

namespace gef {

/// Complex response on an ascending grid of normalized frequencies.
struct FrequencyResponse {
  std::vector<double> betas;
  std::vector<Complex> values;
};

/// Magnitude in dB relative to the grid peak and unwrapped phase in cycles
/// relative to a reference grid point.
struct BodeData {
  std::vector<double> betas;
  std::vector<double> mag_db_rel_peak;
  std::vector<double> phase_cycles_rel_ref;
};

/// (A_p^2 + b_p^2 - beta^2) + i 2 A_p beta, the base quadratic at s = i beta.
Complex base_at(const ValidatedParams& params, double beta);

/// P(i beta). Non-negative beta uses the principal branch of the complex
/// power, which is continuous there because Im(base) >= 0. Negative beta is
/// answered through conjugate symmetry.
Complex eval_tf(const ValidatedParams& params, double beta);

FrequencyResponse frequency_response(const ValidatedParams& params,
                                     std::span<const double> betas);

/// Throws InvalidGrid for fewer than 3 points, non-increasing or non-positive
/// betas, or a reference index outside the grid.
BodeData bode(const ValidatedParams& params, std::span<const double> betas,
              std::size_t reference_index = 0);

/// Unwraps a phase sequence in radians, removing jumps larger than pi.
std::vector<double> unwrap_phase(std::span<const double> raw);

struct CascadeReport {
  std::int64_t m = 1;  // numerator of B_u
  std::int64_t n = 1;  // denominator of B_u
  double max_deviation = 0.0;
  double beta_at_max = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  bool overflow = false;
};

/// Checks P(i beta)^n == base(i beta)^(-m) for B_u = m/n over the grid: a
/// cascade of n exponent-B_u filters equals m cascaded base filters.
CascadeReport cascade_check(const ValidatedParams& params,
                            std::span<const double> betas, double tolerance);

/// n log-spaced points on [lo, hi].
std::vector<double> log_grid(double lo, double hi, std::size_t n);
/// n evenly spaced points on [lo, hi].
std::vector<double> linear_grid(double lo, double hi, std::size_t n);

/// Filters a signal by multiplying its zero-padded DFT with P at each bin's
/// normalized frequency. Seconds-domain input needs CF on params. The result
/// carries a note: early samples deviate from the continuous-time response
/// because the DFT treats the record as periodic and discrete.
SampledSignal filter_via_dft(const SampledSignal& signal,
                             const ValidatedParams& params);

/// CSV with header beta,mag_db,phase_cycles.
void write_bode_csv(std::ostream& os, const BodeData& bode);

}  // namespace gef

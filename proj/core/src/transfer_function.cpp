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

#include "gef/transfer_function.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "gef/csv.hpp"
#include "gef/fft.hpp"

namespace gef {

namespace {

using LongComplex = std::complex<long double>;

LongComplex base_long(const ValidatedParams& params, long double beta) {
  const long double a = params.a_p();
  const long double b = params.b_p();
  return {a * a + b * b - beta * beta, 2.0L * a * beta};
}

LongComplex int_power(LongComplex z, std::int64_t k) {
  LongComplex result{1.0L, 0.0L};
  while (k > 0) {
    if (k & 1) result *= z;
    z *= z;
    k >>= 1;
  }
  return result;
}

void check_grid(std::span<const double> betas) {
  for (std::size_t i = 0; i < betas.size(); ++i) {
    if (!(betas[i] > 0.0) || !std::isfinite(betas[i])) {
      throw Error(ErrorCode::InvalidGrid, "frequency grid must be positive");
    }
    if (i > 0 && !(betas[i] > betas[i - 1])) {
      throw Error(ErrorCode::InvalidGrid,
                  "frequency grid must be strictly increasing");
    }
  }
}

}  // namespace

Complex base_at(const ValidatedParams& params, double beta) {
  const double a = params.a_p();
  return {params.pole_mag2() - beta * beta, 2.0 * a * beta};
}

namespace {

// Principal-branch P(i beta) for beta >= 0 in extended precision.
LongComplex eval_tf_long(const ValidatedParams& params, double beta) {
  const LongComplex base = base_long(params, beta);
  const long double r = std::hypot(base.real(), base.imag());
  if (r == 0.0L) {
    throw Error(ErrorCode::InternalInvariant, "base filter vanished on the axis");
  }
  const long double theta = std::atan2(base.imag(), base.real());
  const long double exponent = static_cast<long double>(params.b_u().num()) /
                               static_cast<long double>(params.b_u().den());
  const long double mag = std::exp(-exponent * std::log(r));
  const long double phase = -exponent * theta;
  return {mag * std::cos(phase), mag * std::sin(phase)};
}

}  // namespace

Complex eval_tf(const ValidatedParams& params, double beta) {
  if (beta < 0.0) return std::conj(eval_tf(params, -beta));
  const LongComplex v = eval_tf_long(params, beta);
  return {static_cast<double>(v.real()), static_cast<double>(v.imag())};
}

FrequencyResponse frequency_response(const ValidatedParams& params,
                                     std::span<const double> betas) {
  FrequencyResponse fr;
  fr.betas.assign(betas.begin(), betas.end());
  fr.values.reserve(betas.size());
  for (double beta : betas) fr.values.push_back(eval_tf(params, beta));
  return fr;
}

std::vector<double> unwrap_phase(std::span<const double> raw) {
  std::vector<double> out(raw.begin(), raw.end());
  double offset = 0.0;
  for (std::size_t i = 1; i < raw.size(); ++i) {
    const double jump = raw[i] - raw[i - 1];
    if (jump > kPi) {
      offset -= kTwoPi * std::ceil((jump - kPi) / kTwoPi);
    } else if (jump < -kPi) {
      offset += kTwoPi * std::ceil((-jump - kPi) / kTwoPi);
    }
    out[i] = raw[i] + offset;
  }
  return out;
}

BodeData bode(const ValidatedParams& params, std::span<const double> betas,
              std::size_t reference_index) {
  if (betas.size() < 3) {
    throw Error(ErrorCode::InvalidGrid,
                "Bode data needs at least 3 grid points for phase unwrapping");
  }
  check_grid(betas);
  if (reference_index >= betas.size()) {
    throw Error(ErrorCode::InvalidGrid, "phase reference index outside grid");
  }
  BodeData out;
  out.betas.assign(betas.begin(), betas.end());
  out.mag_db_rel_peak.resize(betas.size());
  std::vector<double> raw_phase(betas.size());
  for (std::size_t i = 0; i < betas.size(); ++i) {
    const Complex v = eval_tf(params, betas[i]);
    out.mag_db_rel_peak[i] = 20.0 * std::log10(std::abs(v));
    raw_phase[i] = std::arg(v);
  }
  const double peak =
      *std::max_element(out.mag_db_rel_peak.begin(), out.mag_db_rel_peak.end());
  for (double& db : out.mag_db_rel_peak) db -= peak;

  const auto unwrapped = unwrap_phase(raw_phase);
  out.phase_cycles_rel_ref.resize(betas.size());
  for (std::size_t i = 0; i < betas.size(); ++i) {
    out.phase_cycles_rel_ref[i] =
        (unwrapped[i] - unwrapped[reference_index]) / kTwoPi;
  }
  return out;
}

CascadeReport cascade_check(const ValidatedParams& params,
                            std::span<const double> betas, double tolerance) {
  CascadeReport report;
  report.m = params.b_u().num();
  report.n = params.b_u().den();
  report.tolerance = tolerance;
  for (double beta : betas) {
    // |P|^n reaches 1e7 near the peak for small A_p, so P itself is kept in
    // extended precision; a double P alone would contribute ~1e-9.
    const LongComplex lhs = int_power(eval_tf_long(params, std::abs(beta)), report.n);
    const LongComplex rhs =
        1.0L / int_power(base_long(params, beta), report.m);
    const long double dev = std::abs(lhs - rhs);
    if (!std::isfinite(static_cast<double>(std::abs(lhs))) ||
        !std::isfinite(static_cast<double>(std::abs(rhs))) ||
        !std::isfinite(static_cast<double>(dev))) {
      report.overflow = true;
      continue;
    }
    if (static_cast<double>(dev) > report.max_deviation) {
      report.max_deviation = static_cast<double>(dev);
      report.beta_at_max = beta;
    }
  }
  report.passed = !report.overflow && report.max_deviation <= tolerance;
  return report;
}

std::vector<double> log_grid(double lo, double hi, std::size_t n) {
  if (!(lo > 0.0) || !(hi > lo) || n < 2) {
    throw Error(ErrorCode::InvalidGrid, "log grid needs 0 < lo < hi and n >= 2");
  }
  std::vector<double> g(n);
  const double llo = std::log(lo);
  const double lhi = std::log(hi);
  for (std::size_t i = 0; i < n; ++i) {
    g[i] = std::exp(llo + (lhi - llo) * static_cast<double>(i) /
                              static_cast<double>(n - 1));
  }
  g.front() = lo;
  g.back() = hi;
  return g;
}

std::vector<double> linear_grid(double lo, double hi, std::size_t n) {
  if (!(hi > lo) || n < 2) {
    throw Error(ErrorCode::InvalidGrid, "linear grid needs lo < hi and n >= 2");
  }
  std::vector<double> g(n);
  for (std::size_t i = 0; i < n; ++i) {
    g[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
  }
  return g;
}

SampledSignal filter_via_dft(const SampledSignal& signal,
                             const ValidatedParams& params) {
  signal.check();
  if (signal.size() < 2) {
    throw Error(ErrorCode::InvalidGrid, "DFT filtering needs at least 2 samples");
  }
  const bool seconds = signal.domain == Domain::Seconds;
  const SampledSignal scaled =
      seconds ? signal.to_scaled_time(params.require_cf()) : signal;

  const std::size_t n = scaled.size();
  const std::size_t padded = fft::next_pow2(2 * n);
  std::vector<double> buffer(padded, 0.0);
  std::copy(scaled.values.begin(), scaled.values.end(), buffer.begin());
  auto spectrum = fft::forward_real(buffer);
  const double bin_width = kTwoPi / (static_cast<double>(padded) * scaled.step);
  for (std::size_t k = 0; k < spectrum.size(); ++k) {
    spectrum[k] *= eval_tf(params, bin_width * static_cast<double>(k));
  }
  auto filtered = fft::inverse_real(spectrum, padded);
  filtered.resize(n);

  SampledSignal out = scaled;
  out.values = std::move(filtered);
  out.note =
      "dft: periodic/discrete spectrum assumption; expect early-time deviation "
      "from the continuous-time response";
  return seconds ? out.to_seconds(params.require_cf()) : out;
}

void write_bode_csv(std::ostream& os, const BodeData& bode) {
  os << "beta,mag_db,phase_cycles\n";
  for (std::size_t i = 0; i < bode.betas.size(); ++i) {
    csv::write_row(os, {bode.betas[i], bode.mag_db_rel_peak[i],
                        bode.phase_cycles_rel_ref[i]});
  }
}

}  // namespace gef

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

// Parallel banks of filters over a CF map. Each channel runs in its own
// scaled time and maps back to seconds.

#include <iosfwd>
#include <optional>
#include <vector>

#include "gef/core.hpp"
#include "gef/signals.hpp"

namespace gef {

enum class CfMapKind { LogSpaced, Explicit };

struct CfMap {
  CfMapKind kind = CfMapKind::LogSpaced;
  std::vector<double> cf_values;

  /// n geometrically spaced CFs from f_lo to f_hi inclusive (n = 1 gives f_lo).
  static CfMap log_spaced(std::size_t n, double f_lo, double f_hi);
  /// Throws InvalidArgument unless values are positive and ascending.
  static CfMap explicit_values(std::vector<double> values);
};

/// Per-channel replacement of the shared shape constants.
struct ChannelOverride {
  std::size_t channel = 0;
  std::optional<double> a_p;
  std::optional<Rational> b_u;
};

struct Filterbank {
  std::vector<ValidatedParams> channels;  // each with its CF set
  std::vector<double> cf_values() const;
};

/// One filter per CF with the shared (A_p, b_p, B_u) of shape. Throws
/// InvalidArgument for an empty map.
Filterbank build(const CfMap& map, const FilterParams& shape,
                 const std::vector<ChannelOverride>& overrides = {});

enum class Method { Integral, Ode, Convolution, Dft };

std::string to_string(Method m);
/// Accepts integral, ode, convolution (or conv), dft.
Method parse_method(const std::string& text);

struct ProcessOptions {
  /// Sub-steps per sample for the ODE method.
  int ode_step_divisor = 1;
  /// Samples per tonal cycle on each channel's scaled-time grid.
  double samples_per_cycle = 40.0;
};

/// Runs one representation on a signal in either domain. Throws
/// MethodUnsupportedForExponent when B_u does not admit the method.
SampledSignal apply_method(const SampledSignal& u, const ValidatedParams& params,
                           Method method, const ProcessOptions& options = {});

struct FilterbankOutput {
  std::vector<double> time;  // seconds
  std::vector<std::vector<double>> channels;
  std::vector<double> cf_values;
};

/// Throws MethodUnsupportedForExponent when a channel's B_u does not admit
/// the method (Ode: integer B_u; Integral: B_u > 1).
FilterbankOutput process(const Filterbank& bank, const SampledSignal& signal,
                         Method method, const ProcessOptions& options = {});

/// Same, with each channel's grid filled by exact evaluation of the input.
/// The output grid is start + k * step, k < count, in seconds.
FilterbankOutput process(const Filterbank& bank, const AnalyticInput& input,
                         double step_s, std::size_t count, Method method,
                         const ProcessOptions& options = {});

/// Single channel with a callable input (seconds) resampled on the channel
/// grid; returns the output on the given seconds grid.
SampledSignal process_channel(const ValidatedParams& channel,
                              const std::function<double(double)>& input,
                              double step_s, std::size_t count, double start_s,
                              Method method, const ProcessOptions& options = {});

struct Spectrogram {
  std::vector<double> frame_start;  // seconds
  std::vector<double> cf_values;
  std::vector<std::vector<double>> rms;  // rows ordered by CF
};

/// Per-channel RMS over non-overlapping frames. Throws InvalidArgument when
/// the frame is not longer than the sample step.
Spectrogram spectrogramify(const FilterbankOutput& output, double frame_s);

/// cf_hz,t_seconds,q
void write_long_csv(std::ostream& os, const FilterbankOutput& output);
/// Header cf_hz,<frame starts...>; one row per CF.
void write_spectrogram_csv(std::ostream& os, const Spectrogram& spec);

}  // namespace gef

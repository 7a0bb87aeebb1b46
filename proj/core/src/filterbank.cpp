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

#include "gef/filterbank.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "gef/csv.hpp"
#include "gef/fractional_integral.hpp"
#include "gef/impulse_response.hpp"
#include "gef/ode_solver.hpp"
#include "gef/parallel.hpp"
#include "gef/transfer_function.hpp"

namespace gef {

namespace {

void require_method(const ValidatedParams& ch, Method method) {
  bool ok = true;
  switch (method) {
    case Method::Ode:
      ok = ch.b_u().is_integer() && ch.b_u().num() <= kMaxOdeExponent;
      break;
    case Method::Integral:
      ok = ch.exponent() > 1.0;
      break;
    case Method::Convolution:
      ok = ch.exponent() > 0.5;
      break;
    case Method::Dft:
      break;
  }
  if (!ok) {
    throw Error(ErrorCode::MethodUnsupportedForExponent,
                "method " + to_string(method) + " does not support B_u = " +
                    ch.b_u().to_string());
  }
}

SampledSignal run_method(const SampledSignal& u, const ValidatedParams& ch,
                         Method method, const ProcessOptions& options) {
  switch (method) {
    case Method::Integral: return gef_response_integral(u, ch);
    case Method::Ode: return filter_via_ode(u, ch, options.ode_step_divisor);
    case Method::Convolution: return filter_via_convolution(u, ch);
    case Method::Dft: return filter_via_dft(u, ch);
  }
  throw Error(ErrorCode::InternalInvariant, "unknown method");
}

}  // namespace

SampledSignal apply_method(const SampledSignal& u, const ValidatedParams& params,
                           Method method, const ProcessOptions& options) {
  require_method(params, method);
  return run_method(u, params, method, options);
}

CfMap CfMap::log_spaced(std::size_t n, double f_lo, double f_hi) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "CF map needs at least one channel");
  if (!(f_lo > 0.0) || !(f_hi >= f_lo) || (n > 1 && !(f_hi > f_lo))) {
    throw Error(ErrorCode::InvalidArgument, "CF map needs 0 < f_lo < f_hi");
  }
  CfMap map;
  map.kind = CfMapKind::LogSpaced;
  map.cf_values.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double frac = n == 1 ? 0.0 : static_cast<double>(i) / static_cast<double>(n - 1);
    map.cf_values[i] = f_lo * std::pow(f_hi / f_lo, frac);
  }
  map.cf_values.front() = f_lo;
  if (n > 1) map.cf_values.back() = f_hi;
  return map;
}

CfMap CfMap::explicit_values(std::vector<double> values) {
  if (values.empty()) throw Error(ErrorCode::InvalidArgument, "CF map is empty");
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!(values[i] > 0.0) || (i > 0 && !(values[i] > values[i - 1]))) {
      throw Error(ErrorCode::InvalidArgument, "CFs must be positive and ascending");
    }
  }
  return {CfMapKind::Explicit, std::move(values)};
}

std::vector<double> Filterbank::cf_values() const {
  std::vector<double> out;
  out.reserve(channels.size());
  for (const auto& ch : channels) out.push_back(*ch.cf_hz());
  return out;
}

Filterbank build(const CfMap& map, const FilterParams& shape,
                 const std::vector<ChannelOverride>& overrides) {
  if (map.cf_values.empty()) {
    throw Error(ErrorCode::InvalidArgument, "CF map is empty");
  }
  Filterbank bank;
  for (double cf : map.cf_values) {
    FilterParams p = shape;
    p.cf_hz = cf;
    bank.channels.push_back(validate(p));
  }
  for (const ChannelOverride& o : overrides) {
    if (o.channel >= bank.channels.size()) {
      throw Error(ErrorCode::InvalidArgument, "override for a missing channel");
    }
    FilterParams p = bank.channels[o.channel].raw();
    if (o.a_p) p.a_p = *o.a_p;
    if (o.b_u) p.b_u = *o.b_u;
    bank.channels[o.channel] = validate(p);
  }
  return bank;
}

std::string to_string(Method m) {
  switch (m) {
    case Method::Integral: return "integral";
    case Method::Ode: return "ode";
    case Method::Convolution: return "convolution";
    case Method::Dft: return "dft";
  }
  return "unknown";
}

Method parse_method(const std::string& text) {
  if (text == "integral") return Method::Integral;
  if (text == "ode") return Method::Ode;
  if (text == "convolution" || text == "conv") return Method::Convolution;
  if (text == "dft") return Method::Dft;
  throw Error(ErrorCode::InvalidArgument, "unknown method '" + text + "'");
}

SampledSignal process_channel(const ValidatedParams& channel,
                              const std::function<double(double)>& input,
                              double step_s, std::size_t count, double start_s,
                              Method method, const ProcessOptions& options) {
  require_method(channel, method);
  if (!(step_s > 0.0)) throw Error(ErrorCode::InvalidGrid, "sample step must be positive");
  if (!(options.samples_per_cycle > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "samples per cycle must be positive");
  }
  const double cf = channel.require_cf();
  SampledSignal out;
  out.step = step_s;
  out.start = start_s;
  out.domain = Domain::Seconds;
  out.values.assign(count, 0.0);
  if (count == 0) return out;

  // Refine the global grid by an integer factor so every output sample is a
  // channel-grid sample.
  const double global = scaled_time(step_s, cf);
  const double finest = kTwoPi / (options.samples_per_cycle * channel.b_p());
  const auto factor = static_cast<std::size_t>(std::max(1.0, std::ceil(global / finest - 1e-9)));
  const double h = global / static_cast<double>(factor);
  const std::size_t n = (count - 1) * factor + 1;

  SampledSignal u;
  u.step = h;
  u.domain = Domain::ScaledTime;
  u.values.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    u.values[j] = input(start_s + unscale_time(h * static_cast<double>(j), cf));
  }
  const SampledSignal q = run_method(u, channel.with_cf(std::nullopt), method, options);
  for (std::size_t k = 0; k < count; ++k) out.values[k] = q.values[k * factor];
  out.note = q.note;
  return out;
}

FilterbankOutput process(const Filterbank& bank, const SampledSignal& signal,
                         Method method, const ProcessOptions& options) {
  signal.check();
  if (signal.domain != Domain::Seconds) {
    throw Error(ErrorCode::InvalidGrid, "filterbank input must be in seconds");
  }
  for (const auto& ch : bank.channels) require_method(ch, method);
  FilterbankOutput out;
  out.time = signal.times();
  out.cf_values = bank.cf_values();
  out.channels.resize(bank.channels.size());
  auto input = [&signal](double t) { return signal.interpolate(t); };
  parallel_for(bank.channels.size(), [&](std::size_t c) {
    out.channels[c] = process_channel(bank.channels[c], input, signal.step, signal.size(),
                                      signal.start, method, options)
                          .values;
  });
  return out;
}

FilterbankOutput process(const Filterbank& bank, const AnalyticInput& input,
                         double step_s, std::size_t count, Method method,
                         const ProcessOptions& options) {
  if (input.domain() != Domain::Seconds) {
    throw Error(ErrorCode::InvalidGrid, "filterbank input must be in seconds");
  }
  for (const auto& ch : bank.channels) require_method(ch, method);
  FilterbankOutput out;
  out.time.resize(count);
  for (std::size_t k = 0; k < count; ++k) out.time[k] = step_s * static_cast<double>(k);
  out.cf_values = bank.cf_values();
  out.channels.resize(bank.channels.size());
  auto fn = [&input](double t) { return input(t); };
  parallel_for(bank.channels.size(), [&](std::size_t c) {
    out.channels[c] =
        process_channel(bank.channels[c], fn, step_s, count, 0.0, method, options).values;
  });
  return out;
}

Spectrogram spectrogramify(const FilterbankOutput& output, double frame_s) {
  if (output.time.size() < 2) {
    throw Error(ErrorCode::InvalidGrid, "spectrogram needs at least 2 samples");
  }
  const double step = output.time[1] - output.time[0];
  if (!(frame_s > step)) {
    throw Error(ErrorCode::InvalidArgument, "frame must be longer than the sample step");
  }
  const auto per_frame = static_cast<std::size_t>(std::llround(frame_s / step));
  const std::size_t frames = output.time.size() / per_frame;
  Spectrogram spec;
  spec.cf_values = output.cf_values;
  for (std::size_t f = 0; f < frames; ++f) spec.frame_start.push_back(output.time[f * per_frame]);
  spec.rms.resize(output.channels.size());
  for (std::size_t c = 0; c < output.channels.size(); ++c) {
    spec.rms[c].resize(frames);
    for (std::size_t f = 0; f < frames; ++f) {
      double acc = 0.0;
      for (std::size_t k = f * per_frame; k < (f + 1) * per_frame; ++k) {
        acc += output.channels[c][k] * output.channels[c][k];
      }
      spec.rms[c][f] = std::sqrt(acc / static_cast<double>(per_frame));
    }
  }
  return spec;
}

void write_long_csv(std::ostream& os, const FilterbankOutput& output) {
  os << "cf_hz,t_seconds,q\n";
  for (std::size_t c = 0; c < output.channels.size(); ++c) {
    for (std::size_t k = 0; k < output.time.size(); ++k) {
      csv::write_row(os, {output.cf_values[c], output.time[k], output.channels[c][k]});
    }
  }
}

void write_spectrogram_csv(std::ostream& os, const Spectrogram& spec) {
  os << "cf_hz";
  for (double t : spec.frame_start) os << ',' << csv::format(t);
  os << '\n';
  for (std::size_t c = 0; c < spec.rms.size(); ++c) {
    std::vector<double> row{spec.cf_values[c]};
    row.insert(row.end(), spec.rms[c].begin(), spec.rms[c].end());
    csv::write_row(os, row);
  }
}

}  // namespace gef

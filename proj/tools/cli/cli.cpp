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

#include "cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

#include "gef/characteristics.hpp"
#include "gef/csv.hpp"
#include "gef/equivalence.hpp"
#include "gef/fft.hpp"
#include "gef/filterbank.hpp"
#include "gef/impulse_response.hpp"
#include "gef/signals.hpp"
#include "gef/transfer_function.hpp"
#include "wav.hpp"

namespace gef::cli {

namespace {

struct Common {
  double a_p = 0.1;
  double b_p = 1.0;
  std::optional<std::string> b_u;
  std::optional<double> cf;
  std::string out = "-";
  bool plot = false;
};

// Destination for the primary CSV: the provided stream or a file.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : path_(path) {
    if (path == "-") {
      os_ = &fallback;
    } else {
      file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
      if (!*file_) throw Error(ErrorCode::InvalidArgument, "cannot write " + path);
      os_ = file_.get();
    }
  }
  std::ostream& stream() { return *os_; }
  bool is_file() const { return path_ != "-"; }
  const std::string& path() const { return path_; }

 private:
  std::string path_;
  std::unique_ptr<std::ofstream> file_;
  std::ostream* os_ = nullptr;
};

std::ofstream open_file(const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorCode::InvalidArgument, "cannot write " + path);
  return f;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string item;
  std::istringstream ss(text);
  while (std::getline(ss, item, sep)) parts.push_back(item);
  return parts;
}

double to_double(const std::string& text, const std::string& what) {
  try {
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw Error(ErrorCode::InvalidArgument, "bad " + what + " '" + text + "'");
  }
}

Rational parse_exponent(const std::string& text, std::ostream& err) {
  const Rational r = Rational::parse(text);
  if (text.find_first_of(".eE") != std::string::npos) {
    err << "note: B_u " << text << " interpreted as " << r.to_string() << '\n';
  }
  return r;
}

ValidatedParams params_from(const Common& c, const std::string& default_bu,
                            std::ostream& err) {
  return make_params(c.a_p, c.b_p, parse_exponent(c.b_u.value_or(default_bu), err), c.cf);
}

// lo:hi:n[:log|lin]
std::vector<double> parse_grid(const std::string& spec) {
  const auto parts = split(spec, ':');
  if (parts.size() < 3 || parts.size() > 4) {
    throw Error(ErrorCode::InvalidGrid, "grid spec must be lo:hi:n[:log|lin], got '" + spec + "'");
  }
  const double lo = to_double(parts[0], "grid bound");
  const double hi = to_double(parts[1], "grid bound");
  const double n = to_double(parts[2], "grid size");
  if (!(n >= 3.0) || n != std::floor(n)) {
    throw Error(ErrorCode::InvalidGrid, "grid needs an integer size >= 3");
  }
  const std::string scale = parts.size() == 4 ? parts[3] : "log";
  if (scale == "log") return log_grid(lo, hi, static_cast<std::size_t>(n));
  if (scale == "lin") return linear_grid(lo, hi, static_cast<std::size_t>(n));
  throw Error(ErrorCode::InvalidGrid, "grid scale must be log or lin");
}

void write_plot(const Sink& sink, const std::string& body) {
  if (!sink.is_file()) {
    throw Error(ErrorCode::InvalidArgument, "--plot needs --out to name a file");
  }
  std::ofstream gp = open_file(sink.path() + ".gp");
  gp << "# gnuplot script for " << sink.path() << "\n"
     << "set datafile separator ','\n"
     << "set key autotitle columnhead\n"
     << body;
}

std::string quoted(const std::string& path) { return "'" + path + "'"; }

// ---- input signals shared by filter and bank ----

struct InputSpec {
  std::string path;
  std::string domain = "seconds";
  std::string builtin;
  std::optional<double> signal_cf;
  double duration = 0.1;
  double rate = 96000.0;
  double step = 0.01;
};

void add_input_options(CLI::App* cmd, InputSpec& in) {
  cmd->add_option("--input", in.path, "Input CSV (t,value) or 16-bit mono WAV");
  cmd->add_option("--domain", in.domain, "Time axis of a CSV input")
      ->check(CLI::IsMember({"seconds", "scaled"}));
  cmd->add_option("--signal", in.builtin, "Built-in input instead of --input")
      ->check(CLI::IsMember({"pips", "chirp", "integer", "half-integer", "step", "pulse"}));
  cmd->add_option("--signal-cf", in.signal_cf, "CF (Hz) for pips and chirp; defaults to --cf");
  cmd->add_option("--duration", in.duration,
                  "Built-in input length (seconds, or scaled time for scaled inputs)");
  cmd->add_option("--rate", in.rate, "Sample rate (Hz) for seconds-domain built-ins");
  cmd->add_option("--step", in.step, "Sample step in scaled time for scaled built-ins");
}

struct LoadedInput {
  SampledSignal sampled;
  std::optional<AnalyticInput> analytic;
};

LoadedInput load_input(const InputSpec& in, const ValidatedParams& params) {
  if (in.path.empty() == in.builtin.empty()) {
    throw Error(ErrorCode::InvalidArgument, "give exactly one of --input or --signal");
  }
  LoadedInput li;
  if (!in.path.empty()) {
    const bool wav = in.path.size() > 4 && in.path.substr(in.path.size() - 4) == ".wav";
    if (wav) {
      li.sampled = read_wav(in.path);
    } else {
      std::ifstream f(in.path);
      if (!f) throw Error(ErrorCode::InvalidArgument, "cannot read " + in.path);
      li.sampled = csv::read_signal(f, in.domain == "seconds" ? Domain::Seconds
                                                               : Domain::ScaledTime);
    }
    return li;
  }
  auto seconds_cf = [&] {
    if (in.signal_cf) return *in.signal_cf;
    if (params.cf_hz()) return *params.cf_hz();
    throw Error(ErrorCode::MissingCf, "--signal " + in.builtin + " needs --signal-cf or --cf");
  };
  AnalyticInput a = [&] {
    if (in.builtin == "pips") return tone_pips(seconds_cf());
    if (in.builtin == "chirp") return quadratic_chirp(seconds_cf());
    if (in.builtin == "integer") return integer_equiv_input();
    if (in.builtin == "half-integer") return half_integer_equiv_input(params);
    if (in.builtin == "step") return step_input();
    return smooth_pulse(5.0, 1.0);
  }();
  const bool seconds = a.domain() == Domain::Seconds;
  const double step = seconds ? 1.0 / in.rate : in.step;
  if (!(step > 0.0) || !(in.duration > step)) {
    throw Error(ErrorCode::InvalidGrid, "built-in input needs 0 < step < duration");
  }
  const auto count = static_cast<std::size_t>(std::llround(in.duration / step)) + 1;
  li.sampled = a.sample(step, count);
  li.analytic = std::move(a);
  return li;
}

// ---- subcommands ----

int cmd_bode(const Common& c, const std::string& grid, std::size_t ref, std::ostream& out,
             std::ostream& err) {
  const ValidatedParams p = params_from(c, "2", err);
  const auto betas = parse_grid(grid);
  const BodeData data = bode(p, betas, ref);
  Sink sink(c.out, out);
  write_bode_csv(sink.stream(), data);
  if (c.plot) {
    write_plot(sink, "set logscale x\nset xlabel 'beta'\nset multiplot layout 2,1\n"
                     "plot " + quoted(sink.path()) + " using 1:2 with lines\n"
                     "plot " + quoted(sink.path()) + " using 1:3 with lines\n"
                     "unset multiplot\n");
  }
  return kExitOk;
}

int cmd_chars(const Common& c, const std::string& sweep, std::ostream& out, std::ostream& err) {
  std::vector<Rational> exps;
  if (!sweep.empty()) {
    const auto parts = split(sweep, ':');
    if (parts.size() != 3) {
      throw Error(ErrorCode::InvalidArgument, "sweep spec must be lo:step:hi");
    }
    exps = exponent_range(Rational::parse(parts[0]), Rational::parse(parts[2]),
                          Rational::parse(parts[1]));
  } else if (c.b_u) {
    exps = {parse_exponent(*c.b_u, err)};
  } else {
    exps = exponent_range(Rational(3, 2), Rational(10), Rational(1, 4));
  }
  validate(FilterParams{c.a_p, c.b_p, Rational(1), std::nullopt});
  const auto rows = characteristics_sweep(c.a_p, c.b_p, exps);
  Sink sink(c.out, out);
  write_sweep_csv(sink.stream(), rows);
  for (const SweepRow& r : rows) {
    if (!r.error.empty()) err << "warning: B_u " << r.b_u.to_string() << ": " << r.error << '\n';
  }
  if (c.plot) {
    write_plot(sink, "set xlabel 'B_u'\nplot " + quoted(sink.path()) +
                         " using 1:3 with linespoints, '' using 1:4 with linespoints, "
                         "'' using 1:7 with linespoints\n");
  }
  return kExitOk;
}

struct ImpulseOptions {
  std::string form = "exact";
  double t_max = 200.0;
  double step = 0.01;
  bool seconds = false;
  bool gtf = false;
  std::string envelope = "tonal";
  std::string tf_of_h;
  double beta_max = 4.0;
};

int cmd_impulse(const Common& c, const ImpulseOptions& o, std::ostream& out, std::ostream& err) {
  const ValidatedParams p = params_from(c, "2", err);
  const ImpulseKind kind = o.form == "exact"          ? ImpulseKind::ExactBessel
                           : o.form == "integer"      ? ImpulseKind::IntegerPolynomial
                           : o.form == "half-integer" ? ImpulseKind::HalfIntegerBessel
                                                      : ImpulseKind::GtfApprox;
  const ImpulseResponseForm form(kind, p);
  const GtfEnvelope env =
      o.envelope == "half" ? GtfEnvelope::HalfPower : GtfEnvelope::TonalPower;
  std::optional<GtfApproximant> gtf;
  if (o.gtf) gtf.emplace(p, env);
  if (!(o.step > 0.0) || !(o.t_max > o.step)) {
    throw Error(ErrorCode::InvalidGrid, "impulse grid needs 0 < step < t-max");
  }

  const auto count = static_cast<std::size_t>(std::llround(o.t_max / o.step)) + 1;
  const double cf = o.seconds ? p.require_cf() : 1.0;
  Sink sink(c.out, out);
  std::ostream& os = sink.stream();
  os << (o.seconds ? "t_seconds,g" : "t_tilde,h") << (o.gtf ? (o.seconds ? ",g_gtf" : ",h_gtf") : "")
     << '\n';
  std::vector<double> h(count);
  for (std::size_t i = 0; i < count; ++i) {
    const double t = o.step * static_cast<double>(i);
    h[i] = form(t);
    if (o.seconds) {
      // step and t-max are in seconds here.
      const double tt = scaled_time(t, cf);
      std::vector<double> row{t, kTwoPi * cf * form(tt)};
      if (gtf) row.push_back(kTwoPi * cf * (*gtf)(tt));
      csv::write_row(os, row);
    } else {
      std::vector<double> row{t, h[i]};
      if (gtf) row.push_back((*gtf)(t));
      csv::write_row(os, row);
    }
  }
  if (!o.tf_of_h.empty()) {
    if (o.seconds) {
      throw Error(ErrorCode::InvalidArgument, "--tf-of-h works on the scaled-time response");
    }
    // Zero-padded DFT of the sampled response against the closed-form transfer function.
    std::vector<double> buf(fft::next_pow2(4 * count), 0.0);
    std::copy(h.begin(), h.end(), buf.begin());
    const auto spec = fft::forward_real(buf);
    const double bin = kTwoPi / (static_cast<double>(buf.size()) * o.step);
    std::ofstream tf = open_file(o.tf_of_h);
    tf << "beta,dft_re,dft_im,tf_re,tf_im\n";
    for (std::size_t k = 1; k < spec.size() && bin * static_cast<double>(k) <= o.beta_max; ++k) {
      const double beta = bin * static_cast<double>(k);
      const Complex d = o.step * spec[k];
      const Complex t = eval_tf(p, beta);
      csv::write_row(tf, {beta, d.real(), d.imag(), t.real(), t.imag()});
    }
  }
  if (c.plot) {
    std::string body = "set xlabel '" + std::string(o.seconds ? "t (s)" : "t~") + "'\nplot " +
                       quoted(sink.path()) + " using 1:2 with lines";
    if (o.gtf) body += ", '' using 1:3 with lines";
    write_plot(sink, body + "\n");
  }
  return kExitOk;
}

int cmd_filter(const Common& c, const InputSpec& in, const std::string& method_name,
               int divisor, std::ostream& out, std::ostream& err) {
  const ValidatedParams p = params_from(c, "2", err);
  const Method method = parse_method(method_name);
  ProcessOptions opts;
  opts.ode_step_divisor = divisor;
  const LoadedInput li = load_input(in, p);
  SampledSignal q;
  if (li.sampled.domain == Domain::Seconds) {
    const ValidatedParams ch = p.with_cf(p.require_cf());
    std::function<double(double)> fn;
    if (li.analytic) {
      fn = [&a = *li.analytic](double t) { return a(t); };
    } else {
      fn = [&s = li.sampled](double t) { return s.interpolate(t); };
    }
    q = process_channel(ch, fn, li.sampled.step, li.sampled.size(), li.sampled.start, method,
                        opts);
  } else {
    SampledSignal shifted = li.sampled;
    shifted.start = 0.0;
    q = apply_method(shifted, p.with_cf(std::nullopt), method, opts);
    q.start = li.sampled.start;
  }
  if (!q.note.empty()) err << "note: " << q.note << '\n';
  Sink sink(c.out, out);
  csv::write_signal(sink.stream(), q, q.domain == Domain::Seconds ? "t_seconds" : "t_tilde", "q");
  if (c.plot) {
    write_plot(sink, "set xlabel 't'\nplot " + quoted(sink.path()) + " using 1:2 with lines\n");
  }
  return kExitOk;
}

CfMap parse_cf_map(const std::string& spec) {
  const auto parts = split(spec, ':');
  if (parts.size() == 4 && parts[0] == "log") {
    const double n = to_double(parts[1], "channel count");
    if (!(n >= 1.0) || n != std::floor(n)) {
      throw Error(ErrorCode::InvalidArgument, "channel count must be a positive integer");
    }
    return CfMap::log_spaced(static_cast<std::size_t>(n), to_double(parts[2], "CF"),
                             to_double(parts[3], "CF"));
  }
  if (parts.size() == 2 && parts[0] == "list") {
    std::vector<double> cfs;
    for (const auto& v : split(parts[1], ',')) cfs.push_back(to_double(v, "CF"));
    return CfMap::explicit_values(std::move(cfs));
  }
  throw Error(ErrorCode::InvalidArgument,
              "CF map must be log:n:lo:hi or list:cf1,cf2,..., got '" + spec + "'");
}

int cmd_bank(const Common& c, const InputSpec& in, const std::string& map_spec,
             const std::string& method_name, int divisor, double frame,
             const std::string& spectrogram_path, std::ostream& out, std::ostream& err) {
  const CfMap map = parse_cf_map(map_spec);
  const Rational b_u = parse_exponent(c.b_u.value_or("2"), err);
  const Filterbank bank = build(map, FilterParams{c.a_p, c.b_p, b_u, std::nullopt});
  const Method method = parse_method(method_name);
  ProcessOptions opts;
  opts.ode_step_divisor = divisor;
  const ValidatedParams shape = make_params(c.a_p, c.b_p, b_u, c.cf);
  const LoadedInput li = load_input(in, shape);
  if (li.sampled.domain != Domain::Seconds) {
    throw Error(ErrorCode::InvalidArgument, "bank input must be in seconds");
  }
  const FilterbankOutput result =
      li.analytic ? process(bank, *li.analytic, li.sampled.step, li.sampled.size(), method, opts)
                  : process(bank, li.sampled, method, opts);
  Sink sink(c.out, out);
  write_long_csv(sink.stream(), result);
  if (!spectrogram_path.empty()) {
    std::ofstream f = open_file(spectrogram_path);
    write_spectrogram_csv(f, spectrogramify(result, frame));
  }
  if (c.plot) {
    write_plot(sink, "set xlabel 't (s)'\nset ylabel 'CF (Hz)'\n"
                     "plot " + quoted(sink.path()) + " using 2:1:3 with image\n");
  }
  return kExitOk;
}

int cmd_equiv(const Common& c, const std::string& which, const EquivalenceGrid& grid,
              const std::string& outputs_path, std::ostream& out, std::ostream& err) {
  const bool integer = which == "integer";
  const ValidatedParams p = params_from(c, integer ? "3" : "5/2", err);
  const EquivalenceReport report = integer ? run_integer_case(p, grid)
                                           : run_half_integer_case(p, grid);
  Sink sink(c.out, out);
  write_report_csv(sink.stream(), report);
  if (!outputs_path.empty()) {
    std::ofstream f = open_file(outputs_path);
    f << "t_tilde,input,oracle";
    for (const MethodError& m : report.methods) f << ',' << m.method;
    f << '\n';
    for (std::size_t i = 0; i < report.oracle.size(); ++i) {
      std::vector<double> row{report.oracle.time_at(i), report.input.values[i],
                              report.oracle.values[i]};
      for (const SampledSignal& s : report.outputs) row.push_back(s.values[i]);
      csv::write_row(f, row);
    }
  }
  if (c.plot) {
    write_plot(sink, "set style data histograms\nset logscale y\nplot " + quoted(sink.path()) +
                         " using 4:xtic(2)\n");
  }
  return kExitOk;
}

int cmd_cascade(const Common& c, const std::string& grid, double tol, std::ostream& out,
                std::ostream& err) {
  const ValidatedParams p = params_from(c, "5/2", err);
  const auto betas = parse_grid(grid);
  const CascadeReport r = cascade_check(p, betas, tol);
  Sink sink(c.out, out);
  std::ostream& os = sink.stream();
  os << "B_u,m,n,max_deviation,beta_at_max,tolerance,overflow,passed\n";
  os << p.b_u().to_string() << ',' << r.m << ',' << r.n << ',' << csv::format(r.max_deviation)
     << ',' << csv::format(r.beta_at_max) << ',' << csv::format(r.tolerance) << ','
     << (r.overflow ? 1 : 0) << ',' << (r.passed ? 1 : 0) << '\n';
  if (!r.passed) {
    err << "error: cascade identity deviation " << csv::format(r.max_deviation)
        << (r.overflow ? " (overflow)" : "") << " exceeds " << csv::format(tol) << '\n';
    return kExitNumerical;
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Generalized exponent filter toolkit", "gef"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_config("--config", "", "Read key=value options from a file");

  Common c;
  app.add_option("--Ap", c.a_p, "Damping constant A_p")->capture_default_str();
  app.add_option("--bp", c.b_p, "Tonal frequency b_p")->capture_default_str();
  app.add_option("--Bu", c.b_u, "Exponent B_u as m/n or a decimal");
  app.add_option("--cf", c.cf, "Characteristic frequency in Hz");
  app.add_option("-o,--out", c.out, "Output CSV path ('-' for stdout)")->capture_default_str();
  app.add_flag("--plot", c.plot, "Also write a gnuplot script next to --out");

  std::string grid;
  std::size_t ref = 0;
  auto* bode_cmd = app.add_subcommand("bode", "Magnitude (dB re peak) and phase (cycles)");
  bode_cmd->add_option("--grid", grid, "Frequency grid lo:hi:n[:log|lin]")->required();
  bode_cmd->add_option("--ref-index", ref, "Grid index used as phase reference");

  std::string sweep;
  auto* chars_cmd = app.add_subcommand("chars", "Characteristics over an exponent sweep");
  chars_cmd->add_option("--sweep", sweep, "Exponents lo:step:hi (rationals allowed)");

  ImpulseOptions io;
  auto* imp_cmd = app.add_subcommand("impulse", "Impulse response samples");
  imp_cmd->add_option("--form", io.form, "Closed form to evaluate")
      ->check(CLI::IsMember({"exact", "integer", "half-integer", "gtf"}));
  imp_cmd->add_option("--t-max", io.t_max, "Last sample time (scaled, or seconds with --seconds)");
  imp_cmd->add_option("--step", io.step, "Sample step");
  imp_cmd->add_flag("--seconds", io.seconds, "Emit g(t) in seconds (needs --cf)");
  imp_cmd->add_flag("--gtf", io.gtf, "Add the gammatone approximation column");
  imp_cmd->add_option("--envelope", io.envelope, "Gammatone envelope power")
      ->check(CLI::IsMember({"tonal", "half"}));
  imp_cmd->add_option("--tf-of-h", io.tf_of_h, "Write DFT of h against the transfer function");
  imp_cmd->add_option("--beta-max", io.beta_max, "Upper frequency for --tf-of-h");

  InputSpec filter_in;
  std::string filter_method = "integral";
  int filter_div = 1;
  auto* filter_cmd = app.add_subcommand("filter", "Filter one signal");
  add_input_options(filter_cmd, filter_in);
  filter_cmd->add_option("--method", filter_method, "integral, ode, convolution or dft");
  filter_cmd->add_option("--ode-divisor", filter_div, "RK4 substeps per sample");

  InputSpec bank_in;
  std::string cf_map;
  std::string bank_method = "integral";
  int bank_div = 1;
  double frame = 1e-3;
  std::string spectrogram;
  auto* bank_cmd = app.add_subcommand("bank", "Filterbank over a CF map");
  add_input_options(bank_cmd, bank_in);
  bank_cmd->add_option("--cf-map", cf_map, "log:n:lo:hi or list:cf1,cf2,...")->required();
  bank_cmd->add_option("--method", bank_method, "integral, ode, convolution or dft");
  bank_cmd->add_option("--ode-divisor", bank_div, "RK4 substeps per sample");
  bank_cmd->add_option("--frame", frame, "Spectrogram frame length in seconds");
  bank_cmd->add_option("--spectrogram", spectrogram, "Spectrogram CSV path");

  std::string which;
  EquivalenceGrid eg;
  std::string outputs;
  auto* equiv_cmd = app.add_subcommand("equiv", "Representation equivalence against exact output");
  equiv_cmd->add_option("case", which, "integer or half-integer")
      ->required()
      ->check(CLI::IsMember({"integer", "half-integer"}));
  equiv_cmd->add_option("--step", eg.step, "Grid step in scaled time");
  equiv_cmd->add_option("--duration", eg.duration, "Grid length in scaled time");
  equiv_cmd->add_option("--ode-divisor", eg.ode_step_divisor, "RK4 substeps per sample");
  equiv_cmd->add_option("--outputs", outputs, "Per-method output CSV path");

  std::string cgrid = "0.05:4:2000:lin";
  double tol = 1e-10;
  auto* cascade_cmd = app.add_subcommand("cascade-check", "P^n against base^(-m)");
  cascade_cmd->add_option("--grid", cgrid, "Frequency grid lo:hi:n[:log|lin]")->capture_default_str();
  cascade_cmd->add_option("--tol", tol, "Allowed deviation")->capture_default_str();

  std::vector<std::string> argv_rev(args.rbegin(), args.rend());
  try {
    app.parse(argv_rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n";
    const CLI::App* sub = app.get_subcommands().empty() ? &app : app.get_subcommands().front();
    err << sub->help();
    return kExitValidation;
  }

  try {
    if (bode_cmd->parsed()) return cmd_bode(c, grid, ref, out, err);
    if (chars_cmd->parsed()) return cmd_chars(c, sweep, out, err);
    if (imp_cmd->parsed()) return cmd_impulse(c, io, out, err);
    if (filter_cmd->parsed()) return cmd_filter(c, filter_in, filter_method, filter_div, out, err);
    if (bank_cmd->parsed()) {
      return cmd_bank(c, bank_in, cf_map, bank_method, bank_div, frame, spectrogram, out, err);
    }
    if (equiv_cmd->parsed()) return cmd_equiv(c, which, eg, outputs, out, err);
    if (cascade_cmd->parsed()) return cmd_cascade(c, cgrid, tol, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return is_numerical(e.code()) ? kExitNumerical : kExitValidation;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitNumerical;
  }
  return kExitValidation;
}

}  // namespace gef::cli

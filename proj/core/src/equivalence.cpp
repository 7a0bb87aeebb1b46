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

#include "gef/equivalence.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "gef/csv.hpp"
#include "gef/fractional_integral.hpp"
#include "gef/impulse_response.hpp"
#include "gef/ode_solver.hpp"
#include "gef/parallel.hpp"
#include "gef/signals.hpp"
#include "gef/transfer_function.hpp"

namespace gef {

namespace {

using Runner = std::function<SampledSignal(const SampledSignal&)>;

void check_grid(const EquivalenceGrid& grid) {
  if (!(grid.step > 0.0) || !(grid.duration > grid.step)) {
    throw Error(ErrorCode::InvalidGrid, "equivalence grid needs 0 < step < duration");
  }
}

EquivalenceReport run_methods(std::string case_id, std::string oracle_id,
                              const ValidatedParams& params, const EquivalenceGrid& grid,
                              const AnalyticInput& input,
                              const std::vector<std::pair<std::string, Runner>>& runners) {
  EquivalenceReport report;
  report.case_id = std::move(case_id);
  report.oracle_id = std::move(oracle_id);
  report.grid = grid;
  report.early_boundary = (params.exponent() - 1.0) / params.a_p();
  report.input = input.sample(grid.step, grid.count());
  const OutputFunction oracle = analytic_oracle(input, params);
  report.oracle = sample(oracle, grid.step, grid.count());

  report.outputs.resize(runners.size());
  parallel_for(runners.size(),
               [&](std::size_t i) { report.outputs[i] = runners[i].second(report.input); });
  for (std::size_t i = 0; i < runners.size(); ++i) {
    report.methods.push_back(
        compare(runners[i].first, report.outputs[i], report.oracle, report.early_boundary));
  }
  return report;
}

}  // namespace

std::size_t EquivalenceGrid::count() const {
  return static_cast<std::size_t>(std::llround(duration / step)) + 1;
}

const MethodError& EquivalenceReport::method(const std::string& name) const {
  for (const MethodError& m : methods) {
    if (m.method == name) return m;
  }
  throw Error(ErrorCode::InvalidArgument, "no method '" + name + "' in report");
}

MethodError compare(const std::string& name, const SampledSignal& q,
                    const SampledSignal& oracle, double early_boundary) {
  if (q.size() != oracle.size()) {
    throw Error(ErrorCode::InternalInvariant, "method output and oracle grids differ");
  }
  MethodError e;
  e.method = name;
  double ref = 0.0;
  double early = 0.0;
  double late = 0.0;
  for (std::size_t i = 0; i < q.size(); ++i) {
    const double d = std::abs(q.values[i] - oracle.values[i]);
    ref = std::max(ref, std::abs(oracle.values[i]));
    e.max_abs = std::max(e.max_abs, d);
    if (oracle.time_at(i) < early_boundary) {
      early = std::max(early, d);
    } else {
      late = std::max(late, d);
    }
  }
  const double denom = ref > 0.0 ? ref : 1.0;
  e.rel_max = e.max_abs / denom;
  e.early = early / denom;
  e.late = late / denom;
  return e;
}

EquivalenceReport run_integer_case(const ValidatedParams& params,
                                   const EquivalenceGrid& grid) {
  check_grid(grid);
  if (!params.b_u().is_integer() || params.b_u().num() < 2 || params.b_u().num() > 5) {
    throw Error(ErrorCode::UnsupportedExponent,
                "integer case needs B_u in {2, 3, 4, 5}, got " + params.b_u().to_string());
  }
  const ValidatedParams p = params.with_cf(std::nullopt);
  const GtfApproximant gtf(p);
  std::vector<std::pair<std::string, Runner>> runners = {
      {"convolution", [p](const SampledSignal& u) { return filter_via_convolution(u, p); }},
      {"ode",
       [p, d = grid.ode_step_divisor](const SampledSignal& u) {
         return filter_via_ode(u, p, d);
       }},
      {"integral", [p](const SampledSignal& u) { return gef_response_integral(u, p); }},
      {"gtf",
       [p, gtf](const SampledSignal& u) {
         return filter_with_kernel(u, p, [&gtf](double t) { return gtf(t); });
       }},
  };
  return run_methods("integer", "residues", p, grid, integer_equiv_input(), runners);
}

EquivalenceReport run_half_integer_case(const ValidatedParams& params,
                                        const EquivalenceGrid& grid) {
  check_grid(grid);
  const Rational b = params.b_u();
  if (!(b == Rational(3, 2) || b == Rational(5, 2) || b == Rational(7, 2))) {
    throw Error(ErrorCode::UnsupportedExponent,
                "half-integer case needs B_u in {3/2, 5/2, 7/2}, got " + b.to_string());
  }
  const ValidatedParams p = params.with_cf(std::nullopt);
  std::vector<std::pair<std::string, Runner>> runners = {
      {"convolution", [p](const SampledSignal& u) { return filter_via_convolution(u, p); }},
      {"integral", [p](const SampledSignal& u) { return gef_response_integral(u, p); }},
      {"dft", [p](const SampledSignal& u) { return filter_via_dft(u, p); }},
  };
  return run_methods("half-integer", "exponent-addition", p, grid,
                     half_integer_equiv_input(p), runners);
}

void write_report_csv(std::ostream& os, const EquivalenceReport& report) {
  os << "case,method,max_abs,rel_max,early,late\n";
  for (const MethodError& m : report.methods) {
    os << report.case_id << ',' << m.method << ',' << csv::format(m.max_abs) << ','
       << csv::format(m.rel_max) << ',' << csv::format(m.early) << ','
       << csv::format(m.late) << '\n';
  }
}

}  // namespace gef

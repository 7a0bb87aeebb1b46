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

// Runs every applicable representation on a fixture input and compares
// each against the exact output.

#include <iosfwd>
#include <string>
#include <vector>

#include "gef/core.hpp"

namespace gef {

struct EquivalenceGrid {
  double step = 0.01;
  double duration = 60.0;
  int ode_step_divisor = 1;
  std::size_t count() const;
};

struct MethodError {
  std::string method;
  double max_abs = 0.0;
  /// max |q - oracle| / max |oracle| over the whole grid.
  double rel_max = 0.0;
  /// Same numerator restricted to t < (B_u - 1) / A_p (early) or after it.
  double early = 0.0;
  double late = 0.0;
};

struct EquivalenceReport {
  std::string case_id;
  std::string oracle_id;
  EquivalenceGrid grid;
  double early_boundary = 0.0;
  std::vector<MethodError> methods;
  SampledSignal input;
  SampledSignal oracle;
  std::vector<SampledSignal> outputs;  // aligned with methods

  const MethodError& method(const std::string& name) const;
};

/// Error metrics of q against the oracle samples on the same grid.
MethodError compare(const std::string& name, const SampledSignal& q,
                    const SampledSignal& oracle, double early_boundary);

/// Convolution, ODE, integral and gammatone approximation on the integer
/// fixture input. Needs an integer B_u in [2, 5].
EquivalenceReport run_integer_case(const ValidatedParams& params,
                                   const EquivalenceGrid& grid = {});

/// Convolution, integral and DFT on the half-integer fixture input
/// (a = 1/2). Needs B_u in {3/2, 5/2, 7/2}.
EquivalenceReport run_half_integer_case(const ValidatedParams& params,
                                        const EquivalenceGrid& grid = {});

/// case,method,max_abs,rel_max,early,late
void write_report_csv(std::ostream& os, const EquivalenceReport& report);

}  // namespace gef

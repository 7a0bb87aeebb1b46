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

// Deterministic CSV helpers: 17 significant digits, '.' decimal, '\n' endings.

#include <iosfwd>
#include <string>
#include <vector>

#include "gef/core.hpp"

namespace gef::csv {

std::string format(double v);

void write_row(std::ostream& os, const std::vector<double>& values);

/// Two-column dump: header "<time_name>,<value_name>".
void write_signal(std::ostream& os, const SampledSignal& signal,
                  const std::string& time_name, const std::string& value_name);

/// Reads a two-column numeric CSV (optional header line) with uniformly
/// spaced first column. Throws InvalidGrid on non-uniform spacing.
SampledSignal read_signal(std::istream& is, Domain domain);

}  // namespace gef::csv

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

#include "gef/csv.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

namespace gef::csv {

std::string format(double v) {
  if (v == 0.0) return "0";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_row(std::ostream& os, const std::vector<double>& values) {
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) os << ',';
    os << format(values[i]);
  }
  os << '\n';
}

void write_signal(std::ostream& os, const SampledSignal& signal,
                  const std::string& time_name, const std::string& value_name) {
  os << time_name << ',' << value_name << '\n';
  for (std::size_t i = 0; i < signal.size(); ++i) {
    os << format(signal.time_at(i)) << ',' << format(signal.values[i]) << '\n';
  }
}

SampledSignal read_signal(std::istream& is, Domain domain) {
  std::vector<double> t;
  std::vector<double> v;
  std::string line;
  bool first = true;
  while (std::getline(is, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::istringstream row(line);
    std::string a, b;
    std::getline(row, a, ',');
    std::getline(row, b, ',');
    try {
      std::size_t ua = 0, ub = 0;
      const double ta = std::stod(a, &ua);
      const double vb = std::stod(b, &ub);
      t.push_back(ta);
      v.push_back(vb);
    } catch (const std::exception&) {
      if (first) {
        first = false;
        continue;  // header
      }
      throw Error(ErrorCode::InvalidArgument, "malformed CSV row: " + line);
    }
    first = false;
  }
  if (t.size() < 2) {
    throw Error(ErrorCode::InvalidGrid, "input signal needs at least 2 samples");
  }
  SampledSignal s;
  s.domain = domain;
  s.start = t.front();
  s.step = (t.back() - t.front()) / static_cast<double>(t.size() - 1);
  for (std::size_t i = 1; i < t.size(); ++i) {
    const double d = t[i] - t[i - 1];
    if (std::abs(d - s.step) > 1e-6 * std::abs(s.step)) {
      throw Error(ErrorCode::InvalidGrid, "input samples are not uniformly spaced");
    }
  }
  s.values = std::move(v);
  s.check();
  return s;
}

}  // namespace gef::csv

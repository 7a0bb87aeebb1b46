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

// Thin FFTW wrappers used by the DFT filter path and the fast convolutions.

#include <cstddef>
#include <span>
#include <vector>

#include "gef/core.hpp"

namespace gef::fft {

/// Smallest power of two >= n.
std::size_t next_pow2(std::size_t n);

/// Unnormalized forward DFT of a real sequence: the n/2+1 non-negative bins.
std::vector<Complex> forward_real(std::span<const double> x);

/// Inverse of forward_real for a length-n real sequence, including the 1/n
/// normalization.
std::vector<double> inverse_real(std::span<const Complex> spectrum, std::size_t n);

/// In-place complex DFT. sign = -1 forward, +1 backward (unnormalized).
void transform(std::vector<Complex>& data, int sign);

/// Full linear convolution (length a.size() + b.size() - 1).
std::vector<Complex> convolve(std::span<const Complex> a, std::span<const double> b);
std::vector<double> convolve(std::span<const double> a, std::span<const double> b);

}  // namespace gef::fft

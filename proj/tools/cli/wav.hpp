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

#include <string>

#include "gef/core.hpp"

namespace gef::cli {

/// Reads a 16-bit PCM mono WAV file into [-1, 1] samples in seconds.
/// Throws InvalidArgument for other encodings or malformed files.
SampledSignal read_wav(const std::string& path);

/// Writes 16-bit PCM mono; values are clipped to [-1, 1].
void write_wav(const std::string& path, const SampledSignal& signal);

}  // namespace gef::cli

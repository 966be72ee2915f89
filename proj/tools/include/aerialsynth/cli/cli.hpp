// Copyright 2026 The AerialSynth Authors.
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
#include <vector>

namespace aerialsynth::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitStageFailure = 1;
inline constexpr int kExitUsage = 2;

// Log verbosity: trace, debug, info (default), warn, error, critical, off.
inline constexpr const char* kLogEnvVar = "AERIALSYNTH_LOG";

int run(int argc, const char* const* argv);
// `args` excludes the program name.
int run(const std::vector<std::string>& args);

}  // namespace aerialsynth::cli

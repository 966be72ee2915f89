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

#include <cstdint>
#include <random>
#include <string_view>

namespace aerialsynth {

// Stable 64-bit hash of a string (FNV-1a). Used for sub-seeding and colors,
// so the value must never change between releases.
std::uint64_t stable_hash(std::string_view text) noexcept;

std::uint64_t mix_seed(std::uint64_t value) noexcept;

// Child seeds depend only on the master seed and the tag, never on call
// order, so per-class and per-image streams are independent.
std::uint64_t derive_seed(std::uint64_t master, std::string_view tag) noexcept;
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t ordinal) noexcept;

// Portable random stream. std::mt19937_64 output is fixed by the standard but
// the <random> distributions are not, so the mapping to ranges lives here.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform integer in [0, n). n must be > 0.
  std::uint64_t uniform_index(std::uint64_t n);

  // Uniform integer in [lo, hi]. Requires lo <= hi.
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);

  // Uniform double in [0, 1) with 53 bits of resolution.
  double uniform01();

  // Uniform double in [lo, hi].
  double uniform_real(double lo, double hi);

 private:
  std::mt19937_64 engine_;
};

}  // namespace aerialsynth

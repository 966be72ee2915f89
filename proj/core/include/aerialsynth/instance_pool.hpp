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
#include <filesystem>
#include <map>
#include <string>
#include <vector>

namespace aerialsynth {

struct PoolEntry {
  std::string class_name;
  std::int64_t seed = 0;
  std::int64_t sample_index = 0;
  std::filesystem::path path;
  int width = 0;
  int height = 0;

  friend bool operator==(const PoolEntry&, const PoolEntry&) = default;
};

struct PoolIndex {
  // Sorted by class name, then (seed, sample_index).
  std::map<std::string, std::vector<PoolEntry>> by_class;
  std::vector<std::string> warnings;

  std::size_t size() const noexcept;
  std::size_t count(const std::string& class_name) const noexcept;
  std::vector<std::string> class_names() const;
};

// "seed<k>_<i>.png"
std::string pool_file_name(std::int64_t seed, std::int64_t sample_index);

// Indexes <root>/<class_name>/seed<k>_<i>.png. Files that do not decode or
// do not match the naming scheme become warnings. Throws EmptyPoolError
// when nothing usable is found.
PoolIndex ingest_pool(const std::filesystem::path& root, unsigned jobs = 0);

struct MockPoolOptions {
  int min_side = 12;
  int max_side = 48;
  // Files per seed directory slot: sample i is written as
  // seed<i / samples_per_seed>_<i % samples_per_seed>.png.
  int samples_per_seed = 10;
};

// Deterministic stand-in for a diffusion-generated pool: per class,
// `per_class` flat-color rectangles with a class-hashed hue, a one pixel
// darker border, and sides drawn from [min_side, max_side]. Throws
// std::invalid_argument when per_class < 1.
PoolIndex make_mock_pool(const std::vector<std::string>& classes,
                         int per_class, std::uint64_t seed,
                         const std::filesystem::path& out,
                         const MockPoolOptions& options = {});

}  // namespace aerialsynth

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
#include <string>
#include <string_view>
#include <vector>

#include "aerialsynth/annotation.hpp"
#include "aerialsynth/tiler.hpp"

namespace aerialsynth {

inline constexpr std::string_view kPromptPrefix = "birdview of ";

// "birdview of <class_name>"
std::string make_prompt(std::string_view class_name);

struct CropRecord {
  std::string crop_id;
  std::string source_image_id;
  std::string class_name;
  HBox crop_rect;  // source pixels, margin applied, clamped, pixel aligned
  std::string prompt;
  int width = 0;
  int height = 0;
  std::filesystem::path output_path;

  friend bool operator==(const CropRecord&, const CropRecord&) = default;
};

enum class SamplingStrategy { kUniformSample, kMinResControl };

std::string_view to_string(SamplingStrategy s) noexcept;
// Accepts "uniform_sample" and "min_res_control". Throws ConfigError.
SamplingStrategy parse_sampling_strategy(std::string_view text);

struct SamplingConfig {
  SamplingStrategy strategy = SamplingStrategy::kMinResControl;
  int min_size = 15;
  std::size_t per_class_cap = 200;
  std::uint64_t seed = 0;

  void validate() const;
};

struct ManifestEntry {
  std::string crop_id;
  std::filesystem::path path;
  std::string prompt;
  std::string class_name;

  friend bool operator==(const ManifestEntry&, const ManifestEntry&) = default;
};

struct PromptManifest {
  std::vector<ManifestEntry> entries;
  std::uint64_t seed = 0;
  SamplingStrategy strategy = SamplingStrategy::kMinResControl;
  std::vector<std::string> warnings;
};

// Grows every side by `margin` pixels, then clamps to the image.
HBox expand_box(const HBox& b, double margin, int image_w, int image_h);

struct ExtractionResult {
  std::vector<CropRecord> crops;  // image order, then object order
  std::vector<ImageFailure> failures;
};

// One PNG per object at <out_dir>/<crop_id>.png where crop_id is
// "<image_id>_obj<k>" and k is the object's position in its image.
ExtractionResult extract_crops(const DatasetIndex& ds, double margin,
                               const std::filesystem::path& out_dir,
                               unsigned jobs = 0);

// Per class (in class-name order), filters candidates by strategy and draws
// min(per_class_cap, |candidates|) of them without replacement. Each class
// has its own stream seeded from (seed, class_name), and candidates are
// ordered by crop_id first, so the result ignores input order and other
// classes. Entries inside a class are listed by crop_id.
PromptManifest sample_finetune_set(const std::vector<CropRecord>& crops,
                                   const SamplingConfig& cfg);

// JSON Lines, one {"crop_id","path","prompt","class"} object per entry.
std::string manifest_to_jsonl(const PromptManifest& manifest);
std::vector<ManifestEntry> manifest_entries_from_jsonl(std::string_view text);

// JSON Lines of every CropRecord, the hand-off between extraction and
// sampling.
std::string crops_to_jsonl(const std::vector<CropRecord>& crops);
std::vector<CropRecord> crops_from_jsonl(std::string_view text);

}  // namespace aerialsynth

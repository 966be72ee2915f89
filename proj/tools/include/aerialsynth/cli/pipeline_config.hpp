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

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string_view>

#include <nlohmann/json.hpp>

#include "aerialsynth/class_stats.hpp"
#include "aerialsynth/compositor.hpp"
#include "aerialsynth/roi_extractor.hpp"
#include "aerialsynth/tiler.hpp"

namespace aerialsynth::cli {

enum class RoiSource { kOriginal, kTiled };
enum class StatsBasis { kTiled, kOriginal };

std::string_view to_string(RoiSource s) noexcept;
std::string_view to_string(StatsBasis b) noexcept;

struct StagePaths {
  std::filesystem::path tiled;
  std::filesystem::path crops;
  std::filesystem::path manifest;  // directory holding manifest.jsonl
  std::filesystem::path pool;
  std::filesystem::path synthetic;
  std::filesystem::path reports;
};

struct PipelineConfig {
  std::filesystem::path dataset;
  std::filesystem::path output_root;
  StagePaths stages;
  std::filesystem::path classes_file;
  std::uint64_t seed = 0;
  unsigned jobs = 0;

  TilingConfig tiling;
  double roi_margin = 10.0;
  RoiSource roi_source = RoiSource::kOriginal;
  SamplingConfig sampling;
  // True when `stages.pool` names an existing pool (e.g. diffusion output)
  // instead of a mock pool written by the pipeline.
  bool external_pool = false;
  int mock_per_class = 200;
  CompositionConfig composition;
  std::size_t synthetic_count = 100;
  StatsBasis stats_basis = StatsBasis::kTiled;
  LongTailPolicy long_tail;

  // Fills unset stage paths under output_root and derives the per-stage
  // seeds from `seed`.
  void resolve();
  // Throws ConfigError.
  void validate() const;
};

// Relative paths in the document are resolved against `base_dir`. Unknown
// keys are rejected.
PipelineConfig pipeline_config_from_json(const nlohmann::json& doc,
                                         const std::filesystem::path& base_dir);
PipelineConfig load_pipeline_config(const std::filesystem::path& file);

nlohmann::ordered_json pipeline_config_to_json(const PipelineConfig& cfg);

}  // namespace aerialsynth::cli

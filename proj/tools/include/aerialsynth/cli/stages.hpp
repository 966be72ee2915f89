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

// Stage helpers shared by the subcommands and the pipeline runner. Each one
// owns the on-disk layout of a stage's outputs.

#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "aerialsynth/annotation.hpp"
#include "aerialsynth/compositor.hpp"
#include "aerialsynth/instance_pool.hpp"
#include "aerialsynth/report.hpp"
#include "aerialsynth/roi_extractor.hpp"
#include "aerialsynth/tiler.hpp"

namespace aerialsynth::cli {

inline constexpr std::string_view kCropsFile = "crops.jsonl";
inline constexpr std::string_view kManifestFile = "manifest.jsonl";
inline constexpr std::string_view kManifestMetaFile = "manifest.meta.json";
inline constexpr std::string_view kStatsFile = "stats.json";

// Writes `text` to `path`, creating parent directories. Throws IoError.
void write_text_file(const std::filesystem::path& path, std::string_view text);
std::string read_text_file(const std::filesystem::path& path);

// Discovers a dataset and logs discovery warnings.
DatasetIndex load_dataset(const std::filesystem::path& root,
                          const std::filesystem::path& classes_file,
                          unsigned jobs);

// <dir>/crops.jsonl with crop paths stored relative to `dir`.
std::filesystem::path write_crop_records(const std::filesystem::path& dir,
                                         std::vector<CropRecord> crops);
// Relative crop paths are resolved against the file's directory.
std::vector<CropRecord> read_crop_records(const std::filesystem::path& file);

// Writes manifest.jsonl (four contract keys, paths relative to the manifest
// directory) and the manifest.meta.json sidecar next to it.
void write_manifest(const std::filesystem::path& manifest_file,
                    PromptManifest manifest);

// report.json and report.txt under `dir`.
void write_report(const std::filesystem::path& dir, const DatasetReport& report);
// diff.json and diff.txt under `dir`.
void write_diff(const std::filesystem::path& dir, const ReportDiff& diff);

// Concatenates image lists; class order follows first appearance.
DatasetIndex merge_datasets(const std::vector<const DatasetIndex*>& parts);

// Tiles tile_dataset would write for `ds`, computed without decoding.
std::size_t planned_tile_count(const DatasetIndex& ds, const TilingConfig& cfg);

// Per-class object counts, declared-but-absent classes included.
nlohmann::ordered_json class_counts_json(const DatasetIndex& ds);

// Pasted instances per class over all plans, keyed by class name.
nlohmann::ordered_json pasted_counts_json(const std::vector<PastePlan>& plans);
nlohmann::ordered_json pool_counts_json(const PoolIndex& pool);
// Logs each failure as a warning as well.
nlohmann::ordered_json failures_json(const std::vector<ImageFailure>& failures);

}  // namespace aerialsynth::cli

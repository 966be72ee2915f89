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

#include "aerialsynth/cli/pipeline_config.hpp"

#include <algorithm>
#include <initializer_list>
#include <string>
#include <vector>

#include "aerialsynth/error.hpp"
#include "aerialsynth/random.hpp"
#include "aerialsynth/cli/stages.hpp"

namespace aerialsynth::cli {
namespace fs = std::filesystem;
using json = nlohmann::json;

namespace {

void check_keys(const json& obj, std::initializer_list<std::string_view> allowed,
                const std::string& where) {
  if (!obj.is_object()) throw ConfigError(where + " must be an object");
  for (const auto& [key, value] : obj.items()) {
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      throw ConfigError("unknown key '" + key + "' in " + where);
    }
  }
}

template <typename T>
void read_opt(const json& obj, const char* key, T& out, const std::string& where) {
  const auto it = obj.find(key);
  if (it == obj.end() || it->is_null()) return;
  try {
    out = it->get<T>();
  } catch (const json::exception&) {
    throw ConfigError(where + "." + key + " has the wrong type");
  }
}

void read_path(const json& obj, const char* key, fs::path& out, const fs::path& base,
               const std::string& where) {
  std::string text;
  read_opt(obj, key, text, where);
  if (!text.empty()) out = (base / text).lexically_normal();
}

RoiSource parse_roi_source(std::string_view text) {
  if (text == "original") return RoiSource::kOriginal;
  if (text == "tiled") return RoiSource::kTiled;
  throw ConfigError("roi.source must be original or tiled, got '" + std::string(text) + "'");
}

StatsBasis parse_stats_basis(std::string_view text) {
  if (text == "tiled") return StatsBasis::kTiled;
  if (text == "original") return StatsBasis::kOriginal;
  throw ConfigError("composition.stats_basis must be tiled or original, got '" +
                    std::string(text) + "'");
}

}  // namespace

std::string_view to_string(RoiSource s) noexcept {
  return s == RoiSource::kOriginal ? "original" : "tiled";
}

std::string_view to_string(StatsBasis b) noexcept {
  return b == StatsBasis::kTiled ? "tiled" : "original";
}

void PipelineConfig::resolve() {
  auto fill = [&](fs::path& p, const char* name) {
    if (p.empty()) p = (output_root / name).lexically_normal();
  };
  fill(stages.tiled, "tiled");
  fill(stages.crops, "crops");
  fill(stages.manifest, "manifest");
  fill(stages.pool, "pool");
  fill(stages.synthetic, "synthetic");
  fill(stages.reports, "reports");
  sampling.seed = derive_seed(seed, "sampling");
  composition.seed = derive_seed(seed, "composition");
}

void PipelineConfig::validate() const {
  if (dataset.empty()) throw ConfigError("dataset is required");
  if (output_root.empty()) throw ConfigError("output_root is required");
  tiling.validate();
  sampling.validate();
  composition.validate();
  long_tail.validate();
  if (!(roi_margin >= 0.0)) throw ConfigError("roi.margin must be >= 0");
  if (mock_per_class < 1) throw ConfigError("pool.per_class must be >= 1");
  if (synthetic_count < 1) throw ConfigError("composition.count must be >= 1");

  const std::vector<std::pair<const char*, fs::path>> paths{
      {"dataset", dataset},          {"tiled", stages.tiled},
      {"crops", stages.crops},       {"manifest", stages.manifest},
      {"pool", stages.pool},         {"synthetic", stages.synthetic},
      {"reports", stages.reports}};
  for (std::size_t i = 0; i < paths.size(); ++i) {
    for (std::size_t j = i + 1; j < paths.size(); ++j) {
      if (fs::weakly_canonical(paths[i].second) == fs::weakly_canonical(paths[j].second)) {
        throw ConfigError(std::string("stage paths must be distinct: ") + paths[i].first +
                          " and " + paths[j].first + " are both " + paths[i].second.string());
      }
    }
  }
}

PipelineConfig pipeline_config_from_json(const json& doc, const fs::path& base_dir) {
  check_keys(doc,
             {"dataset", "output_root", "stages", "classes_file", "seed", "jobs", "tiling",
              "roi", "sampling", "pool", "composition", "long_tail"},
             "config");
  PipelineConfig cfg;
  read_path(doc, "dataset", cfg.dataset, base_dir, "config");
  read_path(doc, "output_root", cfg.output_root, base_dir, "config");
  read_path(doc, "classes_file", cfg.classes_file, base_dir, "config");
  read_opt(doc, "seed", cfg.seed, "config");
  read_opt(doc, "jobs", cfg.jobs, "config");

  if (const auto it = doc.find("stages"); it != doc.end()) {
    check_keys(*it, {"tiled", "crops", "manifest", "pool", "synthetic", "reports"}, "stages");
    read_path(*it, "tiled", cfg.stages.tiled, base_dir, "stages");
    read_path(*it, "crops", cfg.stages.crops, base_dir, "stages");
    read_path(*it, "manifest", cfg.stages.manifest, base_dir, "stages");
    read_path(*it, "synthetic", cfg.stages.synthetic, base_dir, "stages");
    read_path(*it, "reports", cfg.stages.reports, base_dir, "stages");
    if (it->contains("pool")) {
      throw ConfigError("set an existing pool with pool.path, not stages.pool");
    }
  }
  if (const auto it = doc.find("tiling"); it != doc.end()) {
    check_keys(*it, {"tile_size", "overlap", "visibility_threshold", "keep_empty_tiles"},
               "tiling");
    read_opt(*it, "tile_size", cfg.tiling.tile_size, "tiling");
    read_opt(*it, "overlap", cfg.tiling.overlap, "tiling");
    read_opt(*it, "visibility_threshold", cfg.tiling.visibility_threshold, "tiling");
    read_opt(*it, "keep_empty_tiles", cfg.tiling.keep_empty_tiles, "tiling");
  }
  if (const auto it = doc.find("roi"); it != doc.end()) {
    check_keys(*it, {"margin", "source"}, "roi");
    read_opt(*it, "margin", cfg.roi_margin, "roi");
    std::string source;
    read_opt(*it, "source", source, "roi");
    if (!source.empty()) cfg.roi_source = parse_roi_source(source);
  }
  if (const auto it = doc.find("sampling"); it != doc.end()) {
    check_keys(*it, {"strategy", "min_size", "per_class_cap"}, "sampling");
    std::string strategy;
    read_opt(*it, "strategy", strategy, "sampling");
    if (!strategy.empty()) cfg.sampling.strategy = parse_sampling_strategy(strategy);
    read_opt(*it, "min_size", cfg.sampling.min_size, "sampling");
    read_opt(*it, "per_class_cap", cfg.sampling.per_class_cap, "sampling");
  }
  if (const auto it = doc.find("pool"); it != doc.end()) {
    check_keys(*it, {"path", "per_class"}, "pool");
    read_path(*it, "path", cfg.stages.pool, base_dir, "pool");
    cfg.external_pool = !cfg.stages.pool.empty();
    read_opt(*it, "per_class", cfg.mock_per_class, "pool");
  }
  if (const auto it = doc.find("composition"); it != doc.end()) {
    check_keys(*it,
               {"count", "instances_per_image", "max_placement_attempts", "collision_iou_max",
                "class_filter", "geometry_jitter", "background_source", "stats_basis"},
               "composition");
    auto& c = cfg.composition;
    read_opt(*it, "count", cfg.synthetic_count, "composition");
    if (const auto n = it->find("instances_per_image"); n != it->end()) {
      if (!n->is_array() || n->size() != 2 || !(*n)[0].is_number_integer() ||
          !(*n)[1].is_number_integer()) {
        throw ConfigError("composition.instances_per_image must be [min, max]");
      }
      c.instances_min = (*n)[0].get<int>();
      c.instances_max = (*n)[1].get<int>();
    }
    read_opt(*it, "max_placement_attempts", c.max_placement_attempts, "composition");
    read_opt(*it, "collision_iou_max", c.collision_iou_max, "composition");
    read_opt(*it, "class_filter", c.class_filter, "composition");
    read_opt(*it, "geometry_jitter", c.geometry_jitter, "composition");
    std::string text;
    read_opt(*it, "background_source", text, "composition");
    if (!text.empty()) c.background_source = parse_background_source(text);
    text.clear();
    read_opt(*it, "stats_basis", text, "composition");
    if (!text.empty()) cfg.stats_basis = parse_stats_basis(text);
  }
  if (const auto it = doc.find("long_tail"); it != doc.end()) {
    check_keys(*it, {"max_images"}, "long_tail");
    read_opt(*it, "max_images", cfg.long_tail.max_images, "long_tail");
  }
  return cfg;
}

PipelineConfig load_pipeline_config(const fs::path& file) {
  json doc;
  try {
    doc = json::parse(read_text_file(file));
  } catch (const json::parse_error& e) {
    throw ConfigError("config " + file.string() + " is not valid JSON: " + e.what());
  }
  return pipeline_config_from_json(doc, file.parent_path());
}

nlohmann::ordered_json pipeline_config_to_json(const PipelineConfig& cfg) {
  nlohmann::ordered_json j;
  j["dataset"] = cfg.dataset.generic_string();
  j["output_root"] = cfg.output_root.generic_string();
  j["stages"] = {{"tiled", cfg.stages.tiled.generic_string()},
                 {"crops", cfg.stages.crops.generic_string()},
                 {"manifest", cfg.stages.manifest.generic_string()},
                 {"pool", cfg.stages.pool.generic_string()},
                 {"synthetic", cfg.stages.synthetic.generic_string()},
                 {"reports", cfg.stages.reports.generic_string()}};
  j["classes_file"] = cfg.classes_file.generic_string();
  j["seed"] = cfg.seed;
  j["jobs"] = cfg.jobs;
  j["tiling"] = {{"tile_size", cfg.tiling.tile_size},
                 {"overlap", cfg.tiling.overlap},
                 {"visibility_threshold", cfg.tiling.visibility_threshold},
                 {"keep_empty_tiles", cfg.tiling.keep_empty_tiles}};
  j["roi"] = {{"margin", cfg.roi_margin}, {"source", to_string(cfg.roi_source)}};
  j["sampling"] = {{"strategy", to_string(cfg.sampling.strategy)},
                   {"min_size", cfg.sampling.min_size},
                   {"per_class_cap", cfg.sampling.per_class_cap},
                   {"seed", cfg.sampling.seed}};
  j["pool"] = {{"path", cfg.stages.pool.generic_string()},
               {"external", cfg.external_pool},
               {"per_class", cfg.mock_per_class}};
  const auto& c = cfg.composition;
  j["composition"] = {{"count", cfg.synthetic_count},
                      {"instances_per_image", {c.instances_min, c.instances_max}},
                      {"max_placement_attempts", c.max_placement_attempts},
                      {"collision_iou_max", c.collision_iou_max},
                      {"class_filter", c.class_filter},
                      {"geometry_jitter", c.geometry_jitter},
                      {"background_source", to_string(c.background_source)},
                      {"stats_basis", to_string(cfg.stats_basis)},
                      {"seed", c.seed}};
  j["long_tail"] = {{"max_images", cfg.long_tail.max_images}};
  return j;
}

}  // namespace aerialsynth::cli

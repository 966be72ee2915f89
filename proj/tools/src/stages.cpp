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

#include "aerialsynth/cli/stages.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include <spdlog/spdlog.h>

#include "aerialsynth/dota_io.hpp"
#include "aerialsynth/error.hpp"

namespace aerialsynth::cli {
namespace fs = std::filesystem;

void write_text_file(const fs::path& path, std::string_view text) {
  if (path.has_parent_path()) {
    std::error_code ec;
    fs::create_directories(path.parent_path(), ec);
    if (ec) throw IoError("cannot create " + path.parent_path().string() + ": " + ec.message());
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw IoError("cannot write " + path.string());
}

std::string read_text_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

DatasetIndex load_dataset(const fs::path& root, const fs::path& classes_file,
                          unsigned jobs) {
  std::error_code ec;
  if (!fs::is_directory(root, ec)) throw IoError("dataset root is not a directory: " + root.string());
  DiscoverOptions opts;
  opts.jobs = jobs;
  if (!classes_file.empty()) opts.declared_classes = read_class_list(classes_file);
  std::vector<std::string> warnings;
  DatasetIndex ds = discover_dataset(root, opts, &warnings);
  for (const auto& w : warnings) spdlog::warn("{}", w);
  spdlog::info("dataset={} images={} objects={} classes={}", root.string(), ds.images.size(),
               ds.object_count(), ds.class_names.size());
  return ds;
}

fs::path write_crop_records(const fs::path& dir, std::vector<CropRecord> crops) {
  for (auto& c : crops) c.output_path = c.output_path.lexically_relative(dir);
  const fs::path file = dir / kCropsFile;
  write_text_file(file, crops_to_jsonl(crops));
  return file;
}

std::vector<CropRecord> read_crop_records(const fs::path& file) {
  auto crops = crops_from_jsonl(read_text_file(file));
  for (auto& c : crops) {
    if (c.output_path.is_relative()) c.output_path = file.parent_path() / c.output_path;
  }
  return crops;
}

void write_manifest(const fs::path& manifest_file, PromptManifest manifest) {
  const fs::path dir = manifest_file.parent_path();
  std::error_code ec;
  fs::create_directories(dir.empty() ? fs::path(".") : dir, ec);
  const fs::path base = fs::weakly_canonical(dir.empty() ? fs::path(".") : dir);
  for (auto& e : manifest.entries) {
    e.path = fs::weakly_canonical(e.path).lexically_relative(base);
  }
  write_text_file(manifest_file, manifest_to_jsonl(manifest));

  nlohmann::ordered_json meta;
  meta["seed"] = manifest.seed;
  meta["strategy"] = to_string(manifest.strategy);
  meta["entries"] = manifest.entries.size();
  std::map<std::string, std::size_t> per_class;
  for (const auto& e : manifest.entries) ++per_class[e.class_name];
  meta["per_class"] = per_class;
  meta["warnings"] = manifest.warnings;
  write_text_file(dir / kManifestMetaFile, meta.dump(2) + "\n");
}

void write_report(const fs::path& dir, const DatasetReport& report) {
  write_text_file(dir / "report.json", report_to_json(report).dump(2) + "\n");
  write_text_file(dir / "report.txt", render_text(report));
}

void write_diff(const fs::path& dir, const ReportDiff& diff) {
  write_text_file(dir / "diff.json", diff_to_json(diff).dump(2) + "\n");
  write_text_file(dir / "diff.txt", render_text(diff));
}

DatasetIndex merge_datasets(const std::vector<const DatasetIndex*>& parts) {
  DatasetIndex out;
  std::vector<std::string> declared;
  for (const auto* part : parts) {
    if (out.root.empty()) out.root = part->root;
    out.images.insert(out.images.end(), part->images.begin(), part->images.end());
    for (const auto& name : part->class_names) {
      if (std::find(declared.begin(), declared.end(), name) == declared.end()) {
        declared.push_back(name);
      }
    }
  }
  assign_class_names(out, declared);
  return out;
}

std::size_t planned_tile_count(const DatasetIndex& ds, const TilingConfig& cfg) {
  cfg.validate();
  std::size_t n = 0;
  for (const auto& im : ds.images) {
    for (const auto& tile : plan_tiles(im.width, im.height, cfg)) {
      if (cfg.keep_empty_tiles || !assign_objects(tile, im.objects, cfg).empty()) ++n;
    }
  }
  return n;
}

nlohmann::ordered_json pasted_counts_json(const std::vector<PastePlan>& plans) {
  std::map<std::string, std::size_t> counts;
  for (const auto& p : plans)
    for (const auto& pl : p.placements) ++counts[pl.entry.class_name];
  nlohmann::ordered_json out = nlohmann::ordered_json::object();
  for (const auto& [name, n] : counts) out[name] = n;
  return out;
}

nlohmann::ordered_json class_counts_json(const DatasetIndex& ds) {
  std::map<std::string, std::size_t> counts;
  for (const auto& name : ds.class_names) counts[name] = 0;
  for (const auto& im : ds.images) {
    for (const auto& obj : im.objects) ++counts[obj.class_name];
  }
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (const auto& [name, n] : counts) j[name] = n;
  return j;
}

nlohmann::ordered_json pool_counts_json(const PoolIndex& pool) {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (const auto& [name, entries] : pool.by_class) j[name] = entries.size();
  return j;
}

nlohmann::ordered_json failures_json(const std::vector<ImageFailure>& failures) {
  nlohmann::ordered_json j = nlohmann::ordered_json::array();
  for (const auto& f : failures) {
    spdlog::warn("image={} failed: {}", f.image_id, f.message);
    j.push_back({{"image_id", f.image_id}, {"message", f.message}});
  }
  return j;
}

}  // namespace aerialsynth::cli


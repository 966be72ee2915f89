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

#include "aerialsynth/roi_extractor.hpp"

#include <algorithm>
#include <map>
#include <optional>

#include <nlohmann/json.hpp>

#include "aerialsynth/error.hpp"
#include "aerialsynth/image.hpp"
#include "aerialsynth/parallel.hpp"
#include "aerialsynth/random.hpp"

namespace aerialsynth {
namespace {

template <typename Fn>
void for_each_line(std::string_view text, Fn&& fn) {
  std::size_t pos = 0;
  std::size_t line_no = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.find_first_not_of(" \t") == std::string_view::npos) continue;
    fn(line, line_no);
  }
}

nlohmann::json parse_json_line(std::string_view line, std::size_t line_no) {
  try {
    return nlohmann::json::parse(line);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(line_no, e.what());
  }
}

}  // namespace

std::string make_prompt(std::string_view class_name) {
  std::string p(kPromptPrefix);
  p += class_name;
  return p;
}

std::string_view to_string(SamplingStrategy s) noexcept {
  switch (s) {
    case SamplingStrategy::kUniformSample:
      return "uniform_sample";
    case SamplingStrategy::kMinResControl:
      return "min_res_control";
  }
  return "unknown";
}

SamplingStrategy parse_sampling_strategy(std::string_view text) {
  if (text == "uniform_sample") return SamplingStrategy::kUniformSample;
  if (text == "min_res_control") return SamplingStrategy::kMinResControl;
  throw ConfigError("unknown sampling strategy '" + std::string(text) +
                    "' (expected uniform_sample or min_res_control)");
}

void SamplingConfig::validate() const {
  if (min_size < 1) throw ConfigError("min_size must be >= 1");
  if (per_class_cap < 1) throw ConfigError("per_class_cap must be >= 1");
}

HBox expand_box(const HBox& b, double margin, int image_w, int image_h) {
  return {std::clamp(b.xmin - margin, 0.0, double(image_w)),
          std::clamp(b.ymin - margin, 0.0, double(image_h)),
          std::clamp(b.xmax + margin, 0.0, double(image_w)),
          std::clamp(b.ymax + margin, 0.0, double(image_h))};
}

ExtractionResult extract_crops(const DatasetIndex& ds, double margin,
                               const std::filesystem::path& out_dir,
                               unsigned jobs) {
  if (margin < 0) throw ConfigError("margin must be >= 0");
  struct PerImage {
    std::vector<CropRecord> crops;
    std::optional<ImageFailure> failure;
  };
  std::vector<PerImage> results(ds.images.size());

  parallel_for(ds.images.size(), jobs, [&](std::size_t i) {
    const ImageRecord& im = ds.images[i];
    if (im.objects.empty()) return;
    Image pixels;
    try {
      pixels = read_image(im.path);
    } catch (const Error& e) {
      results[i].failure = ImageFailure{im.image_id, e.what()};
      return;
    }
    for (std::size_t k = 0; k < im.objects.size(); ++k) {
      const ObjectRecord& obj = im.objects[k];
      const HBox grown = expand_box(obj.hbox, margin, pixels.width(), pixels.height());
      const PixelRect rect = covering_rect(grown, pixels.width(), pixels.height());
      if (rect.width <= 0 || rect.height <= 0) continue;
      CropRecord rec;
      rec.crop_id = im.image_id + "_obj" + std::to_string(k);
      rec.source_image_id = im.image_id;
      rec.class_name = obj.class_name;
      rec.crop_rect = rect.to_hbox();
      rec.prompt = make_prompt(obj.class_name);
      rec.width = rect.width;
      rec.height = rect.height;
      rec.output_path = out_dir / (rec.crop_id + ".png");
      write_png(rec.output_path, crop(pixels, rect));
      results[i].crops.push_back(std::move(rec));
    }
  });

  ExtractionResult out;
  for (auto& r : results) {
    if (r.failure) out.failures.push_back(std::move(*r.failure));
    for (auto& c : r.crops) out.crops.push_back(std::move(c));
  }
  return out;
}

PromptManifest sample_finetune_set(const std::vector<CropRecord>& crops,
                                   const SamplingConfig& cfg) {
  cfg.validate();
  PromptManifest manifest;
  manifest.seed = cfg.seed;
  manifest.strategy = cfg.strategy;

  std::map<std::string, std::vector<const CropRecord*>> by_class;
  for (const auto& c : crops) by_class[c.class_name].push_back(&c);

  for (auto& [name, all] : by_class) {
    std::vector<const CropRecord*> candidates;
    for (const auto* c : all) {
      if (cfg.strategy == SamplingStrategy::kMinResControl &&
          (c->width < cfg.min_size || c->height < cfg.min_size)) {
        continue;
      }
      candidates.push_back(c);
    }
    if (candidates.empty()) {
      manifest.warnings.push_back("class '" + name + "' has no crops of at least " +
                                  std::to_string(cfg.min_size) + "x" +
                                  std::to_string(cfg.min_size) + "; omitted");
      continue;
    }
    std::sort(candidates.begin(), candidates.end(),
              [](const CropRecord* a, const CropRecord* b) { return a->crop_id < b->crop_id; });

    const std::size_t take = std::min(cfg.per_class_cap, candidates.size());
    Rng rng(derive_seed(cfg.seed, name));
    for (std::size_t i = 0; i < take; ++i) {
      const std::size_t j = i + rng.uniform_index(candidates.size() - i);
      std::swap(candidates[i], candidates[j]);
    }
    candidates.resize(take);
    std::sort(candidates.begin(), candidates.end(),
              [](const CropRecord* a, const CropRecord* b) { return a->crop_id < b->crop_id; });
    for (const auto* c : candidates) {
      manifest.entries.push_back({c->crop_id, c->output_path, make_prompt(c->class_name),
                                  c->class_name});
    }
  }
  return manifest;
}

std::string manifest_to_jsonl(const PromptManifest& manifest) {
  std::string out;
  for (const auto& e : manifest.entries) {
    nlohmann::ordered_json j;
    j["crop_id"] = e.crop_id;
    j["path"] = e.path.generic_string();
    j["prompt"] = e.prompt;
    j["class"] = e.class_name;
    out += j.dump();
    out += '\n';
  }
  return out;
}

std::vector<ManifestEntry> manifest_entries_from_jsonl(std::string_view text) {
  std::vector<ManifestEntry> entries;
  for_each_line(text, [&](std::string_view line, std::size_t line_no) {
    const auto j = parse_json_line(line, line_no);
    try {
      entries.push_back({j.at("crop_id").get<std::string>(),
                         j.at("path").get<std::string>(),
                         j.at("prompt").get<std::string>(),
                         j.at("class").get<std::string>()});
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(line_no, e.what());
    }
  });
  return entries;
}

std::string crops_to_jsonl(const std::vector<CropRecord>& crops) {
  std::string out;
  for (const auto& c : crops) {
    nlohmann::ordered_json j;
    j["crop_id"] = c.crop_id;
    j["source_image_id"] = c.source_image_id;
    j["class"] = c.class_name;
    j["crop_rect"] = {c.crop_rect.xmin, c.crop_rect.ymin, c.crop_rect.xmax,
                      c.crop_rect.ymax};
    j["prompt"] = c.prompt;
    j["width"] = c.width;
    j["height"] = c.height;
    j["path"] = c.output_path.generic_string();
    out += j.dump();
    out += '\n';
  }
  return out;
}

std::vector<CropRecord> crops_from_jsonl(std::string_view text) {
  std::vector<CropRecord> crops;
  for_each_line(text, [&](std::string_view line, std::size_t line_no) {
    const auto j = parse_json_line(line, line_no);
    try {
      CropRecord c;
      c.crop_id = j.at("crop_id").get<std::string>();
      c.source_image_id = j.at("source_image_id").get<std::string>();
      c.class_name = j.at("class").get<std::string>();
      const auto& r = j.at("crop_rect");
      c.crop_rect = {r.at(0).get<double>(), r.at(1).get<double>(),
                     r.at(2).get<double>(), r.at(3).get<double>()};
      c.prompt = j.at("prompt").get<std::string>();
      c.width = j.at("width").get<int>();
      c.height = j.at("height").get<int>();
      c.output_path = j.at("path").get<std::string>();
      crops.push_back(std::move(c));
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(line_no, e.what());
    }
  });
  return crops;
}

}  // namespace aerialsynth

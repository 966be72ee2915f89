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

#include "aerialsynth/compositor.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>

#include "aerialsynth/dota_io.hpp"
#include "aerialsynth/error.hpp"
#include "aerialsynth/parallel.hpp"

namespace aerialsynth {
namespace {

bool fits_ranges(int w, int h, const ClassStats& stats) {
  const double area = static_cast<double>(w) * static_cast<double>(h);
  const double aspect = static_cast<double>(w) / static_cast<double>(h);
  return stats.area_range.contains(area) && stats.aspect_range.contains(aspect);
}

}  // namespace

std::string_view to_string(BackgroundSource s) noexcept {
  switch (s) {
    case BackgroundSource::kNegativesOnly:
      return "negatives_only";
    case BackgroundSource::kAllTiles:
      return "all_tiles";
  }
  return "unknown";
}

BackgroundSource parse_background_source(std::string_view text) {
  if (text == "negatives_only") return BackgroundSource::kNegativesOnly;
  if (text == "all_tiles") return BackgroundSource::kAllTiles;
  throw ConfigError("unknown background source '" + std::string(text) +
                    "' (expected negatives_only or all_tiles)");
}

void CompositionConfig::validate() const {
  if (instances_min < 0 || instances_max < instances_min) {
    throw ConfigError("instances_per_image must satisfy 0 <= min <= max");
  }
  if (max_placement_attempts < 1) {
    throw ConfigError("max_placement_attempts must be >= 1");
  }
  if (!(collision_iou_max >= 0.0 && collision_iou_max < 1.0)) {
    throw ConfigError("collision_iou_max must be in [0, 1)");
  }
  if (!(geometry_jitter >= 0.0 && geometry_jitter < 1.0)) {
    throw ConfigError("geometry_jitter must be in [0, 1)");
  }
}

GeometrySample draw_geometry(const ClassStats& stats, const CompositionConfig& cfg,
                             Rng& rng) {
  if (stats.samples.empty()) {
    throw CompositionError("no geometry recorded for class '" + stats.class_name + "'");
  }
  const GeometrySample& base = stats.samples[rng.uniform_index(stats.samples.size())];
  const double j = cfg.geometry_jitter;
  const double area_factor = rng.uniform_real(1.0 - j, 1.0 + j);
  const double aspect_factor = rng.uniform_real(1.0 - j, 1.0 + j);
  return {std::clamp(base.area * area_factor, stats.area_range.min, stats.area_range.max),
          std::clamp(base.aspect * aspect_factor, stats.aspect_range.min,
                     stats.aspect_range.max)};
}

TargetSize snap_to_pixels(const GeometrySample& sample, const ClassStats& stats) {
  const double tw = std::sqrt(sample.area * sample.aspect);
  const double th = std::sqrt(sample.area / sample.aspect);
  const TargetSize rounded{std::max(1, static_cast<int>(std::lround(tw))),
                           std::max(1, static_cast<int>(std::lround(th)))};
  if (stats.samples.empty() || fits_ranges(rounded.width, rounded.height, stats)) {
    return rounded;
  }

  // For a fixed width the feasible heights form one interval (both limits
  // are monotone in h), so only the integers around the clamped target
  // height need an exact check.
  const auto [amin, amax] = stats.area_range;
  const auto [rmin, rmax] = stats.aspect_range;
  const int w_limit = static_cast<int>(
      std::min(1e6, std::ceil(std::sqrt(amax * rmax)) + 2.0));
  const double log_tw = std::log(std::max(tw, 1e-9));
  const double log_th = std::log(std::max(th, 1e-9));
  std::optional<TargetSize> best;
  double best_cost = std::numeric_limits<double>::infinity();
  for (int w = 1; w <= w_limit; ++w) {
    const double hlo = std::max(amin / w, w / rmax);
    const double hhi = std::min(amax / w, w / rmin);
    if (hlo > hhi + 1.0) continue;
    const double target = std::clamp(th, hlo, hhi);
    const int h0 = static_cast<int>(std::floor(target));
    for (int h = std::max(1, h0 - 1); h <= h0 + 2; ++h) {
      if (!fits_ranges(w, h, stats)) continue;
      const double cost = std::fabs(std::log(double(w)) - log_tw) +
                          std::fabs(std::log(double(h)) - log_th);
      if (cost < best_cost) {
        best_cost = cost;
        best = TargetSize{w, h};
      }
    }
  }
  // No integer rectangle satisfies both ranges (fractional single-size
  // classes); plain rounding is the closest honest answer.
  return best.value_or(rounded);
}

TargetSize sample_target_geometry(const ClassStats& stats, const CompositionConfig& cfg,
                                  Rng& rng) {
  return snap_to_pixels(draw_geometry(stats, cfg, rng), stats);
}

std::optional<HBox> place_instance(int bg_w, int bg_h, std::span<const HBox> occupied,
                                   int w, int h, const CompositionConfig& cfg, Rng& rng,
                                   std::span<const HBox> disjoint) {
  if (w < 1 || h < 1 || w > bg_w || h > bg_h) return std::nullopt;
  for (int attempt = 0; attempt < cfg.max_placement_attempts; ++attempt) {
    const auto x = static_cast<double>(rng.uniform_int(0, bg_w - w));
    const auto y = static_cast<double>(rng.uniform_int(0, bg_h - h));
    const HBox box{x, y, x + w, y + h};
    const bool clear =
        std::all_of(occupied.begin(), occupied.end(),
                    [&](const HBox& o) { return iou(box, o) <= cfg.collision_iou_max; }) &&
        std::all_of(disjoint.begin(), disjoint.end(),
                    [&](const HBox& o) { return intersection_area(box, o) == 0.0; });
    if (clear) return box;
  }
  return std::nullopt;
}

std::shared_ptr<const Image> PoolImageCache::get(const PoolEntry& entry) {
  const std::string key = entry.path.string();
  {
    std::lock_guard lock(mutex_);
    if (auto it = images_.find(key); it != images_.end()) return it->second;
  }
  // Decode outside the lock; a racing decode of the same file is harmless.
  auto image = std::make_shared<const Image>(read_image(entry.path));
  std::lock_guard lock(mutex_);
  return images_.try_emplace(key, std::move(image)).first->second;
}

std::vector<std::string> eligible_classes(const PoolIndex& pool, const StatsMap& stats,
                                          const CompositionConfig& cfg) {
  std::vector<std::string> out;
  for (const auto& name : pool.class_names()) {
    if (!cfg.class_filter.empty() && !cfg.class_filter.contains(name)) continue;
    const auto it = stats.find(name);
    if (it == stats.end() || it->second.empty()) continue;
    out.push_back(name);
  }
  return out;
}

Composition compose_image(const ImageRecord& background, const Image& background_pixels,
                          const PoolIndex& pool, const StatsMap& stats,
                          const CompositionConfig& cfg, Rng& rng, PoolImageCache& cache) {
  const auto classes = eligible_classes(pool, stats, cfg);
  if (classes.empty()) {
    throw CompositionError("no class is present in the pool, the statistics and the filter");
  }
  Composition out;
  out.pixels = background_pixels;
  out.objects = background.objects;
  out.plan.background_image_id = background.image_id;
  out.plan.requested = static_cast<int>(rng.uniform_int(cfg.instances_min, cfg.instances_max));

  std::vector<HBox> ground_truth;
  for (const auto& obj : background.objects) ground_truth.push_back(obj.hbox);
  std::vector<HBox> pasted;

  for (int k = 0; k < out.plan.requested; ++k) {
    const std::string& cls = classes[rng.uniform_index(classes.size())];
    const auto& entries = pool.by_class.at(cls);
    const PoolEntry& entry = entries[rng.uniform_index(entries.size())];
    const TargetSize size = sample_target_geometry(stats.at(cls), cfg, rng);
    // Pasted instances may graze ground truth but never each other, so every
    // paste rectangle keeps exactly the pixels written into it.
    std::vector<HBox> occupied = ground_truth;
    occupied.insert(occupied.end(), pasted.begin(), pasted.end());
    const auto box = place_instance(out.pixels.width(), out.pixels.height(), occupied,
                                    size.width, size.height, cfg, rng, pasted);
    if (!box) {
      ++out.plan.failed;
      continue;
    }
    const auto source = cache.get(entry);
    paste(out.pixels, resize(*source, size.width, size.height),
          static_cast<int>(box->xmin), static_cast<int>(box->ymin));
    pasted.push_back(*box);
    out.objects.push_back(ObjectRecord::from_hbox(*box, cls, false));
    out.plan.placements.push_back({entry, *box});
  }
  return out;
}

std::string synthetic_image_id(std::size_t ordinal) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "synth_%08zu", ordinal);
  return buf;
}

nlohmann::ordered_json audit_record(std::string_view image_id, const PastePlan& plan) {
  using json = nlohmann::ordered_json;
  json placements = json::array();
  for (const auto& p : plan.placements) {
    placements.push_back({{"class", p.entry.class_name},
                          {"seed", p.entry.seed},
                          {"sample_index", p.entry.sample_index},
                          {"rect",
                           {std::llround(p.target.xmin), std::llround(p.target.ymin),
                            std::llround(p.target.xmax), std::llround(p.target.ymax)}}});
  }
  json j;
  j["image_id"] = image_id;
  j["background"] = plan.background_image_id;
  j["requested"] = plan.requested;
  j["placed"] = plan.placements.size();
  j["failed"] = plan.failed;
  j["placements"] = std::move(placements);
  return j;
}

SyntheticResult generate_synthetic_set(const DatasetIndex& ds, const PoolIndex& pool,
                                       const StatsMap& stats, const CompositionConfig& cfg,
                                       std::size_t count,
                                       const std::filesystem::path& out_root,
                                       unsigned jobs) {
  cfg.validate();
  if (count < 1) throw ConfigError("synthetic image count must be >= 1");

  std::vector<const ImageRecord*> backgrounds;
  for (const auto& im : ds.images) {
    if (cfg.background_source == BackgroundSource::kAllTiles || im.objects.empty()) {
      backgrounds.push_back(&im);
    }
  }
  std::sort(backgrounds.begin(), backgrounds.end(),
            [](const ImageRecord* a, const ImageRecord* b) { return a->image_id < b->image_id; });
  if (backgrounds.empty()) {
    throw CompositionError(std::string("no background images available for source ") +
                           std::string(to_string(cfg.background_source)));
  }
  if (eligible_classes(pool, stats, cfg).empty()) {
    throw CompositionError("no class is present in the pool, the statistics and the filter");
  }

  SyntheticResult result;
  result.index.root = out_root;
  result.index.images.resize(count);
  result.plans.resize(count);
  PoolImageCache cache;

  parallel_for(count, jobs, [&](std::size_t i) {
    Rng rng(derive_seed(cfg.seed, static_cast<std::uint64_t>(i)));
    const ImageRecord& bg = *backgrounds[rng.uniform_index(backgrounds.size())];
    const Image bg_pixels = read_image(bg.path);
    Composition comp = compose_image(bg, bg_pixels, pool, stats, cfg, rng, cache);

    ImageRecord rec;
    rec.image_id = synthetic_image_id(i);
    rec.path = image_path_for(out_root, rec.image_id);
    rec.width = comp.pixels.width();
    rec.height = comp.pixels.height();
    rec.objects = std::move(comp.objects);
    write_png(rec.path, comp.pixels);
    write_dota_file(annotation_path_for(out_root, rec.image_id), rec.objects);
    result.index.images[i] = std::move(rec);
    result.plans[i] = std::move(comp.plan);
  });

  std::string audit;
  for (std::size_t i = 0; i < count; ++i) {
    audit += audit_record(result.index.images[i].image_id, result.plans[i]).dump();
    audit += '\n';
  }
  const auto audit_path = out_root / "audit.jsonl";
  std::ofstream f(audit_path, std::ios::binary | std::ios::trunc);
  f.write(audit.data(), static_cast<std::streamsize>(audit.size()));
  if (!f) throw IoError("cannot write " + audit_path.string());

  assign_class_names(result.index, ds.class_names);
  return result;
}

}  // namespace aerialsynth

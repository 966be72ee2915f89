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
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include <nlohmann/json.hpp>

#include "aerialsynth/annotation.hpp"
#include "aerialsynth/class_stats.hpp"
#include "aerialsynth/image.hpp"
#include "aerialsynth/instance_pool.hpp"
#include "aerialsynth/random.hpp"

namespace aerialsynth {

enum class BackgroundSource { kNegativesOnly, kAllTiles };

std::string_view to_string(BackgroundSource s) noexcept;
BackgroundSource parse_background_source(std::string_view text);

struct CompositionConfig {
  int instances_min = 1;
  int instances_max = 5;
  int max_placement_attempts = 50;
  double collision_iou_max = 0.05;
  // Empty means every class.
  std::set<std::string> class_filter;
  double geometry_jitter = 0.10;
  BackgroundSource background_source = BackgroundSource::kNegativesOnly;
  std::uint64_t seed = 0;

  void validate() const;
};

struct TargetSize {
  int width = 0;
  int height = 0;

  friend bool operator==(const TargetSize&, const TargetSize&) = default;
};

// Draws one recorded (area, aspect) pair uniformly, scales each by an
// independent factor in [1 - jitter, 1 + jitter], then clamps both into the
// class ranges. Throws CompositionError for a class without samples.
GeometrySample draw_geometry(const ClassStats& stats,
                             const CompositionConfig& cfg, Rng& rng);

// Converts a continuous (area, aspect) into whole pixels:
// w = sqrt(area * aspect), h = sqrt(area / aspect), each at least 1. When
// plain rounding lands outside the class area/aspect ranges, the nearest
// integer size inside both ranges is used instead (nearest in log space).
TargetSize snap_to_pixels(const GeometrySample& sample,
                          const ClassStats& stats);

TargetSize sample_target_geometry(const ClassStats& stats,
                                  const CompositionConfig& cfg, Rng& rng);

// Up to max_placement_attempts uniform top-left draws; returns the first box
// whose IoU with every occupied box is <= collision_iou_max and which shares
// no area with any box in `disjoint`.
std::optional<HBox> place_instance(int bg_w, int bg_h,
                                   std::span<const HBox> occupied, int w,
                                   int h, const CompositionConfig& cfg,
                                   Rng& rng,
                                   std::span<const HBox> disjoint = {});

// Thread-safe decoded-pixel cache for pool entries.
class PoolImageCache {
 public:
  std::shared_ptr<const Image> get(const PoolEntry& entry);

 private:
  std::mutex mutex_;
  std::unordered_map<std::string, std::shared_ptr<const Image>> images_;
};

struct Placement {
  PoolEntry entry;
  HBox target;
};

struct PastePlan {
  std::string background_image_id;
  int requested = 0;
  int failed = 0;
  std::vector<Placement> placements;
};

struct Composition {
  Image pixels;
  // Background objects first, then one record per successful paste.
  std::vector<ObjectRecord> objects;
  PastePlan plan;
};

// Classes that can be pasted: filter (if any) intersected with pool classes
// and classes that have geometry samples. Sorted by name.
std::vector<std::string> eligible_classes(const PoolIndex& pool,
                                          const StatsMap& stats,
                                          const CompositionConfig& cfg);

// Pastes n ~ U[instances_min, instances_max] pool instances onto
// `background_pixels`. Each instance is rescaled to a sampled class
// geometry and written over the background without blending; its
// annotation is exactly the paste rectangle. Throws CompositionError when no
// class is eligible.
Composition compose_image(const ImageRecord& background,
                          const Image& background_pixels,
                          const PoolIndex& pool, const StatsMap& stats,
                          const CompositionConfig& cfg, Rng& rng,
                          PoolImageCache& cache);

struct SyntheticResult {
  DatasetIndex index;
  std::vector<PastePlan> plans;  // one per output image, ordinal order
};

// "synth_<ordinal, 8 digits>"
std::string synthetic_image_id(std::size_t ordinal);

// Composes `count` images on backgrounds drawn with replacement from `ds`
// (restricted to object-free images under kNegativesOnly). Image i uses the
// stream derive_seed(cfg.seed, i), so output is identical for any `jobs`.
// Writes images/, annotations/ and audit.jsonl under `out_root`.
SyntheticResult generate_synthetic_set(const DatasetIndex& ds,
                                       const PoolIndex& pool,
                                       const StatsMap& stats,
                                       const CompositionConfig& cfg,
                                       std::size_t count,
                                       const std::filesystem::path& out_root,
                                       unsigned jobs = 0);

nlohmann::ordered_json audit_record(std::string_view image_id,
                                    const PastePlan& plan);

}  // namespace aerialsynth

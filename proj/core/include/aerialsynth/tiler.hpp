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

#include <filesystem>
#include <string>
#include <vector>

#include "aerialsynth/annotation.hpp"

namespace aerialsynth {

struct TilingConfig {
  int tile_size = 512;
  int overlap = 200;
  // Minimum visible fraction of a clipped object for it to stay in a tile.
  double visibility_threshold = 0.5;
  bool keep_empty_tiles = true;

  // Throws ConfigError unless 0 <= overlap < tile_size and
  // 0 < visibility_threshold <= 1.
  void validate() const;
  int stride() const noexcept { return tile_size - overlap; }
};

struct TileSpec {
  std::string parent_image_id;
  int origin_x = 0;
  int origin_y = 0;
  int tile_w = 0;
  int tile_h = 0;
  int row = 0;
  int col = 0;

  HBox window() const noexcept {
    return {static_cast<double>(origin_x), static_cast<double>(origin_y),
            static_cast<double>(origin_x + tile_w),
            static_cast<double>(origin_y + tile_h)};
  }
  // "<parent>_r<row>_c<col>"
  std::string tile_id() const;

  friend bool operator==(const TileSpec&, const TileSpec&) = default;
};

// Window start positions along one axis: 0, stride, 2*stride, ... while
// position + tile_size < extent, then the clamped final position
// max(0, extent - tile_size) if not already present.
std::vector<int> plan_axis(int extent, int tile_size, int overlap);

// Row-major cross product of plan_axis over both axes. Tiles never extend
// past the image; images smaller than a tile produce a single short tile.
std::vector<TileSpec> plan_tiles(int width, int height,
                                 const TilingConfig& cfg);

// Objects of the parent image that stay visible in `tile`, translated into
// tile-local coordinates with their geometry replaced by the clipped hull.
std::vector<ObjectRecord> assign_objects(const TileSpec& tile,
                                         const std::vector<ObjectRecord>& objects,
                                         const TilingConfig& cfg);

struct ImageFailure {
  std::string image_id;
  std::string message;
};

struct TilingResult {
  DatasetIndex index;
  std::vector<ImageFailure> failures;
};

// Writes <out_root>/images/<tile_id>.png and
// <out_root>/annotations/<tile_id>.txt for every kept tile. Images that fail
// to decode are reported in `failures`; the rest proceed. The returned index
// is sorted by (parent, row, col) for any `jobs`.
TilingResult tile_dataset(const DatasetIndex& ds, const TilingConfig& cfg,
                          const std::filesystem::path& out_root,
                          unsigned jobs = 0);

}  // namespace aerialsynth

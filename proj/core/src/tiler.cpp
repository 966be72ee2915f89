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

#include "aerialsynth/tiler.hpp"

#include <algorithm>
#include <optional>

#include "aerialsynth/dota_io.hpp"
#include "aerialsynth/error.hpp"
#include "aerialsynth/image.hpp"
#include "aerialsynth/parallel.hpp"

namespace aerialsynth {

void TilingConfig::validate() const {
  if (tile_size < 1) throw ConfigError("tile_size must be >= 1");
  if (overlap < 0 || overlap >= tile_size) {
    throw ConfigError("overlap must satisfy 0 <= overlap < tile_size");
  }
  if (!(visibility_threshold > 0.0 && visibility_threshold <= 1.0)) {
    throw ConfigError("visibility_threshold must be in (0, 1]");
  }
}

std::string TileSpec::tile_id() const {
  return parent_image_id + "_r" + std::to_string(row) + "_c" +
         std::to_string(col);
}

std::vector<int> plan_axis(int extent, int tile_size, int overlap) {
  if (extent <= tile_size) return {0};
  const int stride = tile_size - overlap;
  std::vector<int> positions;
  for (int p = 0; p + tile_size < extent; p += stride) positions.push_back(p);
  const int last = std::max(0, extent - tile_size);
  if (positions.empty() || positions.back() != last) positions.push_back(last);
  return positions;
}

std::vector<TileSpec> plan_tiles(int width, int height, const TilingConfig& cfg) {
  cfg.validate();
  if (width < 1 || height < 1) throw GeometryError("image extent must be >= 1");
  const auto xs = plan_axis(width, cfg.tile_size, cfg.overlap);
  const auto ys = plan_axis(height, cfg.tile_size, cfg.overlap);
  const int tw = std::min(width, cfg.tile_size);
  const int th = std::min(height, cfg.tile_size);
  std::vector<TileSpec> tiles;
  tiles.reserve(xs.size() * ys.size());
  for (std::size_t r = 0; r < ys.size(); ++r) {
    for (std::size_t c = 0; c < xs.size(); ++c) {
      TileSpec t;
      t.origin_x = xs[c];
      t.origin_y = ys[r];
      t.tile_w = tw;
      t.tile_h = th;
      t.row = static_cast<int>(r);
      t.col = static_cast<int>(c);
      tiles.push_back(std::move(t));
    }
  }
  return tiles;
}

std::vector<ObjectRecord> assign_objects(const TileSpec& tile,
                                         const std::vector<ObjectRecord>& objects,
                                         const TilingConfig& cfg) {
  const HBox window = tile.window();
  const double dx = tile.origin_x;
  const double dy = tile.origin_y;
  std::vector<ObjectRecord> kept;
  for (const auto& obj : objects) {
    const auto clip = clip_box(obj.hbox, window);
    if (!clip || clip->visible_fraction < cfg.visibility_threshold) continue;
    const HBox local{clip->clipped.xmin - dx, clip->clipped.ymin - dy,
                     clip->clipped.xmax - dx, clip->clipped.ymax - dy};
    kept.push_back(ObjectRecord::from_hbox(local, obj.class_name, obj.difficult));
  }
  return kept;
}

TilingResult tile_dataset(const DatasetIndex& ds, const TilingConfig& cfg,
                          const std::filesystem::path& out_root, unsigned jobs) {
  cfg.validate();
  struct PerImage {
    std::vector<ImageRecord> tiles;
    std::optional<ImageFailure> failure;
  };
  std::vector<PerImage> results(ds.images.size());

  parallel_for(ds.images.size(), jobs, [&](std::size_t i) {
    const ImageRecord& parent = ds.images[i];
    PerImage& res = results[i];
    Image pixels;
    try {
      pixels = read_image(parent.path);
    } catch (const Error& e) {
      res.failure = ImageFailure{parent.image_id, e.what()};
      return;
    }
    // Trust the decoded size over the probed header.
    auto specs = plan_tiles(pixels.width(), pixels.height(), cfg);
    for (auto& spec : specs) {
      spec.parent_image_id = parent.image_id;
      auto objects = assign_objects(spec, parent.objects, cfg);
      if (objects.empty() && !cfg.keep_empty_tiles) continue;
      ImageRecord tile;
      tile.image_id = spec.tile_id();
      tile.path = image_path_for(out_root, tile.image_id);
      tile.width = spec.tile_w;
      tile.height = spec.tile_h;
      tile.objects = std::move(objects);
      write_png(tile.path,
                crop(pixels, {spec.origin_x, spec.origin_y, spec.tile_w, spec.tile_h}));
      write_dota_file(annotation_path_for(out_root, tile.image_id), tile.objects);
      res.tiles.push_back(std::move(tile));
    }
  });

  std::vector<std::size_t> order(results.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return ds.images[a].image_id < ds.images[b].image_id;
  });

  TilingResult out;
  out.index.root = out_root;
  for (std::size_t i : order) {
    auto& r = results[i];
    if (r.failure) out.failures.push_back(std::move(*r.failure));
    for (auto& t : r.tiles) out.index.images.push_back(std::move(t));
  }
  assign_class_names(out.index, ds.class_names);
  return out;
}

}  // namespace aerialsynth

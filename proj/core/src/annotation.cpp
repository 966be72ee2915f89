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

#include "aerialsynth/annotation.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

#include "aerialsynth/error.hpp"

namespace aerialsynth {

ObjectRecord ObjectRecord::make(const QuadBox& geometry,
                                std::string class_name, bool difficult) {
  if (class_name.empty()) throw GeometryError("empty class name");
  ObjectRecord r;
  r.hbox = quad_to_hbox(geometry);
  r.geometry = geometry;
  r.class_name = std::move(class_name);
  r.difficult = difficult;
  return r;
}

ObjectRecord ObjectRecord::from_hbox(const HBox& box, std::string class_name,
                                     bool difficult) {
  return make(hbox_to_quad(box), std::move(class_name), difficult);
}

std::size_t DatasetIndex::object_count() const noexcept {
  std::size_t n = 0;
  for (const auto& im : images) n += im.objects.size();
  return n;
}

const ImageRecord* DatasetIndex::find(std::string_view image_id) const noexcept {
  for (const auto& im : images) {
    if (im.image_id == image_id) return &im;
  }
  return nullptr;
}

std::size_t clamp_objects_to_image(ImageRecord& image) {
  const double w = image.width;
  const double h = image.height;
  std::size_t removed = 0;
  std::vector<ObjectRecord> kept;
  kept.reserve(image.objects.size());
  for (auto& obj : image.objects) {
    QuadBox q = obj.geometry;
    for (auto& p : q.vertices) {
      p.x = std::clamp(p.x, 0.0, w);
      p.y = std::clamp(p.y, 0.0, h);
    }
    try {
      kept.push_back(ObjectRecord::make(q, std::move(obj.class_name),
                                        obj.difficult));
    } catch (const GeometryError&) {
      ++removed;
    }
  }
  image.objects = std::move(kept);
  return removed;
}

void assign_class_names(DatasetIndex& ds,
                        const std::vector<std::string>& declared) {
  std::vector<std::string> names;
  std::unordered_set<std::string> seen;
  auto add = [&](const std::string& n) {
    if (seen.insert(n).second) names.push_back(n);
  };
  for (const auto& n : declared) add(n);
  for (const auto& im : ds.images) {
    for (const auto& obj : im.objects) add(obj.class_name);
  }
  ds.class_names = std::move(names);
}

void check_unique_image_ids(const DatasetIndex& ds) {
  std::set<std::string_view> ids;
  for (const auto& im : ds.images) {
    if (!ids.insert(im.image_id).second) {
      throw IndexingError("duplicate image id: " + im.image_id);
    }
  }
}

}  // namespace aerialsynth

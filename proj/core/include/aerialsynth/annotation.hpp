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
#include <optional>
#include <string>
#include <vector>

#include "aerialsynth/geometry.hpp"

namespace aerialsynth {

// One ground-truth instance. `hbox` is always the hull of `geometry`; build
// through `make` or `from_hbox` to keep that true.
struct ObjectRecord {
  QuadBox geometry;
  HBox hbox;
  std::string class_name;
  bool difficult = false;

  // Throws GeometryError on an invalid quad or empty class name.
  static ObjectRecord make(const QuadBox& geometry, std::string class_name,
                           bool difficult = false);
  static ObjectRecord from_hbox(const HBox& box, std::string class_name,
                                bool difficult = false);

  friend bool operator==(const ObjectRecord&, const ObjectRecord&) = default;
};

struct ImageRecord {
  std::string image_id;
  std::filesystem::path path;
  int width = 0;
  int height = 0;
  std::vector<ObjectRecord> objects;

  friend bool operator==(const ImageRecord&, const ImageRecord&) = default;
};

struct DatasetIndex {
  std::filesystem::path root;
  std::vector<ImageRecord> images;
  // Category universe in id order: declared classes first, then classes in
  // first-seen order over `images`.
  std::vector<std::string> class_names;

  std::size_t object_count() const noexcept;
  const ImageRecord* find(std::string_view image_id) const noexcept;
};

// Clamps every object of `image` into [0,width]x[0,height]. Objects whose
// clamped hull is degenerate are removed; returns how many were removed.
std::size_t clamp_objects_to_image(ImageRecord& image);

// Rebuilds `ds.class_names` as `declared` followed by every other class in
// first-seen order.
void assign_class_names(DatasetIndex& ds,
                        const std::vector<std::string>& declared = {});

// Throws IndexingError when image ids repeat.
void check_unique_image_ids(const DatasetIndex& ds);

}  // namespace aerialsynth

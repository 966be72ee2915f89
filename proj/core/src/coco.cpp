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

#include "aerialsynth/coco.hpp"

#include <cmath>
#include <fstream>
#include <unordered_map>

#include "aerialsynth/error.hpp"

namespace aerialsynth {
namespace {

double round6(double v) {
  const double r = std::round(v * 1e6) / 1e6;
  return r == 0.0 ? 0.0 : r;
}

}  // namespace

nlohmann::ordered_json coco_document(const DatasetIndex& ds) {
  using json = nlohmann::ordered_json;
  json images = json::array();
  json categories = json::array();
  json annotations = json::array();

  std::unordered_map<std::string, int> category_id;
  for (std::size_t i = 0; i < ds.class_names.size(); ++i) {
    const int id = static_cast<int>(i) + 1;
    category_id.emplace(ds.class_names[i], id);
    categories.push_back({{"id", id},
                          {"name", ds.class_names[i]},
                          {"supercategory", "none"}});
  }

  std::int64_t ann_id = 1;
  for (std::size_t i = 0; i < ds.images.size(); ++i) {
    const auto& im = ds.images[i];
    const auto image_id = static_cast<std::int64_t>(i) + 1;
    images.push_back({{"id", image_id},
                      {"file_name", im.path.filename().string()},
                      {"width", im.width},
                      {"height", im.height}});
    for (const auto& obj : im.objects) {
      auto it = category_id.find(obj.class_name);
      if (it == category_id.end()) {
        // Index built without assign_class_names; keep the class anyway.
        const int id = static_cast<int>(category_id.size()) + 1;
        it = category_id.emplace(obj.class_name, id).first;
        categories.push_back(
            {{"id", id}, {"name", obj.class_name}, {"supercategory", "none"}});
      }
      const double w = obj.hbox.width();
      const double h = obj.hbox.height();
      annotations.push_back(
          {{"id", ann_id++},
           {"image_id", image_id},
           {"category_id", it->second},
           {"bbox",
            {round6(obj.hbox.xmin), round6(obj.hbox.ymin), round6(w), round6(h)}},
           {"area", round6(w * h)},
           {"iscrowd", 0}});
    }
  }

  json doc;
  doc["images"] = std::move(images);
  doc["categories"] = std::move(categories);
  doc["annotations"] = std::move(annotations);
  return doc;
}

void write_coco_dataset(const DatasetIndex& ds, const std::filesystem::path& out) {
  const std::string text = coco_document(ds).dump(1) + "\n";
  std::error_code ec;
  if (out.has_parent_path()) std::filesystem::create_directories(out.parent_path(), ec);
  std::ofstream f(out, std::ios::binary | std::ios::trunc);
  f.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!f) throw IoError("cannot write " + out.string());
}

}  // namespace aerialsynth

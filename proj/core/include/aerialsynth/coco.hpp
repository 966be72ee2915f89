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

#include <nlohmann/json.hpp>

#include "aerialsynth/annotation.hpp"

namespace aerialsynth {

// Builds the COCO detection document for `ds`: "images", "categories"
// (ids from 1 in class_names order) and "annotations" (bbox [x, y, w, h],
// area = w * h, iscrowd 0). Ids are dense and follow index order; floats
// are rounded to 6 decimal places.
nlohmann::ordered_json coco_document(const DatasetIndex& ds);

// Writes coco_document(ds) to `out`. Throws IoError.
void write_coco_dataset(const DatasetIndex& ds,
                        const std::filesystem::path& out);

}  // namespace aerialsynth

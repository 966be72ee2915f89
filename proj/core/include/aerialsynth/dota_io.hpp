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
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "aerialsynth/annotation.hpp"

namespace aerialsynth {

// Parses the text of one DOTA annotation file. Each object line holds
// exactly ten tokens "x1 y1 x2 y2 x3 y3 x4 y4 class difficult".
// "imagesource"/"gsd" header lines and blank lines are skipped. Negative
// coordinates are clamped to zero. Throws ParseError with the 1-based line.
std::vector<ObjectRecord> parse_dota_annotation(std::string_view text,
                                                std::string_view image_id);

// Shortest decimal that reads back to the same double: integers print
// without a fraction ("10"), halves as "10.5".
std::string format_coordinate(double value);

// One newline-terminated line per record, in order.
std::string write_dota_annotation(const std::vector<ObjectRecord>& records);

std::vector<ObjectRecord> read_dota_file(const std::filesystem::path& path,
                                         std::string_view image_id);
void write_dota_file(const std::filesystem::path& path,
                     const std::vector<ObjectRecord>& records);

// One class per line, blank lines and '#' comments ignored.
std::vector<std::string> read_class_list(const std::filesystem::path& path);

struct DiscoverOptions {
  std::string images_dir = "images";
  std::string annotations_dir = "annotations";
  // Pins category order; classes seen in annotations are appended after.
  std::vector<std::string> declared_classes;
  // Applied to every parsed class name before indexing.
  std::map<std::string, std::string> class_aliases;
  unsigned jobs = 0;
};

// Pairs <root>/<images_dir>/<stem>.{png,jpg,jpeg} with
// <root>/<annotations_dir>/<stem>.txt. Images without an annotation file
// are indexed with no objects. Image sizes come from file headers. Objects
// are clamped into image bounds; objects left with no area are dropped and
// reported through `warnings` when given. Images are sorted by stem.
// A missing root or empty images directory yields an empty index.
// Throws IndexingError on duplicate stems, unreadable headers, or
// malformed annotation files.
DatasetIndex discover_dataset(const std::filesystem::path& root,
                              const DiscoverOptions& options = {},
                              std::vector<std::string>* warnings = nullptr);

// Layout shared by every stage that writes a dataset tree.
std::filesystem::path image_path_for(const std::filesystem::path& root,
                                     std::string_view image_id);
std::filesystem::path annotation_path_for(const std::filesystem::path& root,
                                          std::string_view image_id);

}  // namespace aerialsynth

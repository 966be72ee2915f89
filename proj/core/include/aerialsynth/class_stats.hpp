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

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "aerialsynth/annotation.hpp"

namespace aerialsynth {

// One observed instance: hbox area (pixels^2) and aspect ratio (w / h).
struct GeometrySample {
  double area = 0.0;
  double aspect = 0.0;

  friend auto operator<=>(const GeometrySample&, const GeometrySample&) = default;
};

struct Range {
  double min = 0.0;
  double max = 0.0;

  bool contains(double v) const noexcept { return v >= min && v <= max; }
  friend bool operator==(const Range&, const Range&) = default;
};

struct ClassStats {
  std::string class_name;
  std::size_t image_count = 0;
  std::size_t instance_count = 0;
  // Paired samples sorted by (area, aspect); the compositor resamples these.
  std::vector<GeometrySample> samples;
  std::vector<double> areas;          // sorted ascending
  std::vector<double> aspect_ratios;  // sorted ascending
  Range area_range;
  Range aspect_range;

  bool empty() const noexcept { return samples.empty(); }
  friend bool operator==(const ClassStats&, const ClassStats&) = default;
};

using StatsMap = std::map<std::string, ClassStats>;

struct LongTailPolicy {
  std::size_t max_images = 200;

  void validate() const;
  bool is_long_tail(std::size_t image_count) const noexcept {
    return image_count > 0 && image_count <= max_images;
  }
};

// Exact per-class counts and sorted geometry lists. Every declared class in
// ds.class_names gets an entry, zero-filled when absent from the images.
StatsMap compute_class_stats(const DatasetIndex& ds);

// Classes with 0 < image_count <= max_images, ascending by image_count then
// name.
std::vector<std::string> long_tail_classes(const StatsMap& stats,
                                           const LongTailPolicy& policy = {});

// Linear-interpolated quantile of a sorted list; q in [0, 1].
double quantile(const std::vector<double>& sorted, double q);

// JSON export: counts, ranges, decile summaries and the paired samples.
// stats_from_json(stats_to_json(s)) == s.
nlohmann::ordered_json stats_to_json(const StatsMap& stats);
StatsMap stats_from_json(const nlohmann::json& doc);

}  // namespace aerialsynth

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

#include "aerialsynth/class_stats.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "aerialsynth/error.hpp"

namespace aerialsynth {

void LongTailPolicy::validate() const {
  if (max_images < 1) throw ConfigError("long-tail max_images must be >= 1");
}

StatsMap compute_class_stats(const DatasetIndex& ds) {
  StatsMap stats;
  for (const auto& name : ds.class_names) stats[name].class_name = name;
  for (const auto& im : ds.images) {
    std::set<std::string_view> present;
    for (const auto& obj : im.objects) {
      ClassStats& s = stats[obj.class_name];
      s.class_name = obj.class_name;
      s.samples.push_back({obj.hbox.area(), obj.hbox.width() / obj.hbox.height()});
      present.insert(obj.class_name);
    }
    for (auto name : present) ++stats[std::string(name)].image_count;
  }
  for (auto& [name, s] : stats) {
    std::sort(s.samples.begin(), s.samples.end());
    s.instance_count = s.samples.size();
    s.areas.clear();
    s.aspect_ratios.clear();
    for (const auto& g : s.samples) {
      s.areas.push_back(g.area);
      s.aspect_ratios.push_back(g.aspect);
    }
    std::sort(s.areas.begin(), s.areas.end());
    std::sort(s.aspect_ratios.begin(), s.aspect_ratios.end());
    if (!s.areas.empty()) {
      s.area_range = {s.areas.front(), s.areas.back()};
      s.aspect_range = {s.aspect_ratios.front(), s.aspect_ratios.back()};
    }
  }
  return stats;
}

std::vector<std::string> long_tail_classes(const StatsMap& stats,
                                           const LongTailPolicy& policy) {
  std::vector<const ClassStats*> picked;
  for (const auto& [name, s] : stats) {
    if (policy.is_long_tail(s.image_count)) picked.push_back(&s);
  }
  std::sort(picked.begin(), picked.end(), [](const ClassStats* a, const ClassStats* b) {
    if (a->image_count != b->image_count) return a->image_count < b->image_count;
    return a->class_name < b->class_name;
  });
  std::vector<std::string> out;
  out.reserve(picked.size());
  for (const auto* s : picked) out.push_back(s->class_name);
  return out;
}

double quantile(const std::vector<double>& sorted, double q) {
  if (sorted.empty()) return 0.0;
  const double pos = std::clamp(q, 0.0, 1.0) * static_cast<double>(sorted.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(pos));
  const auto hi = std::min(lo + 1, sorted.size() - 1);
  const double t = pos - static_cast<double>(lo);
  return sorted[lo] + (sorted[hi] - sorted[lo]) * t;
}

namespace {

nlohmann::ordered_json deciles(const std::vector<double>& sorted) {
  auto out = nlohmann::ordered_json::array();
  if (sorted.empty()) return out;
  for (int d = 0; d <= 10; ++d) out.push_back(quantile(sorted, d / 10.0));
  return out;
}

}  // namespace

nlohmann::ordered_json stats_to_json(const StatsMap& stats) {
  using json = nlohmann::ordered_json;
  json classes = json::array();
  for (const auto& [name, s] : stats) {
    json samples = json::array();
    for (const auto& g : s.samples) samples.push_back({g.area, g.aspect});
    classes.push_back({
        {"name", name},
        {"image_count", s.image_count},
        {"instance_count", s.instance_count},
        {"area_range", {s.area_range.min, s.area_range.max}},
        {"aspect_range", {s.aspect_range.min, s.aspect_range.max}},
        {"area_deciles", deciles(s.areas)},
        {"aspect_deciles", deciles(s.aspect_ratios)},
        {"samples", std::move(samples)},
    });
  }
  json doc;
  doc["classes"] = std::move(classes);
  return doc;
}

StatsMap stats_from_json(const nlohmann::json& doc) {
  StatsMap stats;
  try {
    for (const auto& c : doc.at("classes")) {
      ClassStats s;
      s.class_name = c.at("name").get<std::string>();
      s.image_count = c.at("image_count").get<std::size_t>();
      for (const auto& g : c.at("samples")) {
        s.samples.push_back({g.at(0).get<double>(), g.at(1).get<double>()});
      }
      std::sort(s.samples.begin(), s.samples.end());
      s.instance_count = s.samples.size();
      if (s.instance_count != c.at("instance_count").get<std::size_t>()) {
        throw ConfigError("stats for '" + s.class_name +
                          "': instance_count does not match samples");
      }
      for (const auto& g : s.samples) {
        s.areas.push_back(g.area);
        s.aspect_ratios.push_back(g.aspect);
      }
      std::sort(s.areas.begin(), s.areas.end());
      std::sort(s.aspect_ratios.begin(), s.aspect_ratios.end());
      if (!s.areas.empty()) {
        s.area_range = {s.areas.front(), s.areas.back()};
        s.aspect_range = {s.aspect_ratios.front(), s.aspect_ratios.back()};
      }
      stats.emplace(s.class_name, std::move(s));
    }
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("malformed stats document: ") + e.what());
  }
  return stats;
}

}  // namespace aerialsynth

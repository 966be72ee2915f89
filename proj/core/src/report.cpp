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

#include "aerialsynth/report.hpp"

#include <algorithm>
#include <cstdio>
#include <map>

#include "aerialsynth/error.hpp"

namespace aerialsynth {
namespace {

std::string format(const char* fmt, auto... args) {
  char buf[256];
  std::snprintf(buf, sizeof(buf), fmt, args...);
  return buf;
}

std::string pad_right(std::string s, std::size_t width) {
  if (s.size() < width) s.append(width - s.size(), ' ');
  return s;
}

std::string pad_left(std::string s, std::size_t width) {
  if (s.size() < width) s.insert(0, width - s.size(), ' ');
  return s;
}

std::string signed_count(std::int64_t v) {
  return (v > 0 ? "+" : "") + std::to_string(v);
}

}  // namespace

std::string_view to_string(ReportBasis b) noexcept {
  switch (b) {
    case ReportBasis::kOriginal:
      return "original";
    case ReportBasis::kTiled:
      return "tiled";
    case ReportBasis::kAugmented:
      return "augmented";
  }
  return "unknown";
}

ReportBasis parse_report_basis(std::string_view text) {
  if (text == "original") return ReportBasis::kOriginal;
  if (text == "tiled") return ReportBasis::kTiled;
  if (text == "augmented") return ReportBasis::kAugmented;
  throw ConfigError("unknown report basis '" + std::string(text) + "'");
}

DatasetReport build_report(const DatasetIndex& ds, const LongTailPolicy& policy,
                           ReportBasis basis) {
  return build_report(compute_class_stats(ds), ds.images.size(), policy, basis);
}

DatasetReport build_report(const StatsMap& stats, std::size_t dataset_images,
                           const LongTailPolicy& policy, ReportBasis basis) {
  policy.validate();
  DatasetReport report;
  report.basis = basis;
  report.long_tail_max_images = policy.max_images;
  report.totals.dataset_images = dataset_images;
  for (const auto& [name, s] : stats) {
    ReportRow row;
    row.class_name = name;
    row.image_count = s.image_count;
    row.instance_count = s.instance_count;
    row.area_range = s.area_range;
    row.aspect_range = s.aspect_range;
    row.long_tail = policy.is_long_tail(s.image_count);
    report.totals.image_count += row.image_count;
    report.totals.instance_count += row.instance_count;
    report.totals.long_tail_classes += row.long_tail ? 1 : 0;
    report.rows.push_back(std::move(row));
  }
  std::sort(report.rows.begin(), report.rows.end(), [](const ReportRow& a, const ReportRow& b) {
    if (a.image_count != b.image_count) return a.image_count > b.image_count;
    return a.class_name < b.class_name;
  });
  return report;
}

std::string render_text(const DatasetReport& report) {
  std::size_t name_w = 5;
  for (const auto& r : report.rows) name_w = std::max(name_w, r.class_name.size());
  std::string out;
  out += "basis: " + std::string(to_string(report.basis)) +
         "   long-tail: 0 < images <= " + std::to_string(report.long_tail_max_images) + "\n";
  out += pad_right("class", name_w) + "  " + pad_left("images", 9) + "  " +
         pad_left("instances", 10) + "  " + pad_left("area min..max", 25) + "  " +
         pad_left("aspect min..max", 17) + "  long-tail\n";
  for (const auto& r : report.rows) {
    out += pad_right(r.class_name, name_w) + "  " + pad_left(std::to_string(r.image_count), 9) +
           "  " + pad_left(std::to_string(r.instance_count), 10) + "  " +
           pad_left(format("%.1f..%.1f", r.area_range.min, r.area_range.max), 25) + "  " +
           pad_left(format("%.3f..%.3f", r.aspect_range.min, r.aspect_range.max), 17) + "  " +
           (r.long_tail ? "yes" : "no") + "\n";
  }
  out += pad_right("total", name_w) + "  " +
         pad_left(std::to_string(report.totals.image_count), 9) + "  " +
         pad_left(std::to_string(report.totals.instance_count), 10) + "\n";
  out += "dataset images: " + std::to_string(report.totals.dataset_images) +
         "   long-tail classes: " + std::to_string(report.totals.long_tail_classes) + "\n";
  return out;
}

nlohmann::ordered_json report_to_json(const DatasetReport& report) {
  using json = nlohmann::ordered_json;
  json rows = json::array();
  for (const auto& r : report.rows) {
    rows.push_back({{"name", r.class_name},
                    {"image_count", r.image_count},
                    {"instance_count", r.instance_count},
                    {"area_range", {r.area_range.min, r.area_range.max}},
                    {"aspect_range", {r.aspect_range.min, r.aspect_range.max}},
                    {"long_tail", r.long_tail}});
  }
  json j;
  j["basis"] = to_string(report.basis);
  j["long_tail_max_images"] = report.long_tail_max_images;
  j["totals"] = {{"dataset_images", report.totals.dataset_images},
                 {"image_count", report.totals.image_count},
                 {"instance_count", report.totals.instance_count},
                 {"long_tail_classes", report.totals.long_tail_classes}};
  j["rows"] = std::move(rows);
  return j;
}

DatasetReport report_from_json(const nlohmann::json& doc) {
  DatasetReport report;
  try {
    report.basis = parse_report_basis(doc.at("basis").get<std::string>());
    report.long_tail_max_images = doc.at("long_tail_max_images").get<std::size_t>();
    const auto& t = doc.at("totals");
    report.totals.dataset_images = t.at("dataset_images").get<std::size_t>();
    report.totals.image_count = t.at("image_count").get<std::size_t>();
    report.totals.instance_count = t.at("instance_count").get<std::size_t>();
    report.totals.long_tail_classes = t.at("long_tail_classes").get<std::size_t>();
    for (const auto& r : doc.at("rows")) {
      ReportRow row;
      row.class_name = r.at("name").get<std::string>();
      row.image_count = r.at("image_count").get<std::size_t>();
      row.instance_count = r.at("instance_count").get<std::size_t>();
      row.area_range = {r.at("area_range").at(0).get<double>(),
                        r.at("area_range").at(1).get<double>()};
      row.aspect_range = {r.at("aspect_range").at(0).get<double>(),
                          r.at("aspect_range").at(1).get<double>()};
      row.long_tail = r.at("long_tail").get<bool>();
      report.rows.push_back(std::move(row));
    }
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("malformed report document: ") + e.what());
  }
  return report;
}

bool ReportDiff::all_zero() const noexcept {
  return std::all_of(rows.begin(), rows.end(), [](const DiffRow& r) {
    return r.image_delta() == 0 && r.instance_delta() == 0;
  });
}

ReportDiff diff_reports(const DatasetReport& a, const DatasetReport& b) {
  std::map<std::string, DiffRow> merged;
  for (const auto& r : a.rows) {
    auto& d = merged[r.class_name];
    d.class_name = r.class_name;
    d.images_a = static_cast<std::int64_t>(r.image_count);
    d.instances_a = static_cast<std::int64_t>(r.instance_count);
  }
  for (const auto& r : b.rows) {
    auto& d = merged[r.class_name];
    d.class_name = r.class_name;
    d.images_b = static_cast<std::int64_t>(r.image_count);
    d.instances_b = static_cast<std::int64_t>(r.instance_count);
  }
  ReportDiff diff;
  for (auto& [name, row] : merged) diff.rows.push_back(std::move(row));
  return diff;
}

std::string render_text(const ReportDiff& diff) {
  std::size_t name_w = 5;
  for (const auto& r : diff.rows) name_w = std::max(name_w, r.class_name.size());
  std::string out = pad_right("class", name_w) + "  " + pad_left("images a", 9) + "  " +
                    pad_left("images b", 9) + "  " + pad_left("delta", 8) + "  " +
                    pad_left("inst a", 9) + "  " + pad_left("inst b", 9) + "  " +
                    pad_left("delta", 8) + "\n";
  for (const auto& r : diff.rows) {
    out += pad_right(r.class_name, name_w) + "  " + pad_left(std::to_string(r.images_a), 9) +
           "  " + pad_left(std::to_string(r.images_b), 9) + "  " +
           pad_left(signed_count(r.image_delta()), 8) + "  " +
           pad_left(std::to_string(r.instances_a), 9) + "  " +
           pad_left(std::to_string(r.instances_b), 9) + "  " +
           pad_left(signed_count(r.instance_delta()), 8) + "\n";
  }
  return out;
}

nlohmann::ordered_json diff_to_json(const ReportDiff& diff) {
  using json = nlohmann::ordered_json;
  json rows = json::array();
  for (const auto& r : diff.rows) {
    rows.push_back({{"name", r.class_name},
                    {"images_a", r.images_a},
                    {"images_b", r.images_b},
                    {"image_delta", r.image_delta()},
                    {"instances_a", r.instances_a},
                    {"instances_b", r.instances_b},
                    {"instance_delta", r.instance_delta()}});
  }
  json j;
  j["rows"] = std::move(rows);
  return j;
}

}  // namespace aerialsynth

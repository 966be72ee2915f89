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

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "aerialsynth/annotation.hpp"
#include "aerialsynth/class_stats.hpp"

namespace aerialsynth {

enum class ReportBasis { kOriginal, kTiled, kAugmented };

std::string_view to_string(ReportBasis b) noexcept;
ReportBasis parse_report_basis(std::string_view text);

struct ReportRow {
  std::string class_name;
  std::size_t image_count = 0;
  std::size_t instance_count = 0;
  Range area_range;
  Range aspect_range;
  bool long_tail = false;

  friend bool operator==(const ReportRow&, const ReportRow&) = default;
};

struct ReportTotals {
  std::size_t dataset_images = 0;  // distinct images in the dataset
  std::size_t image_count = 0;     // sum of row image counts
  std::size_t instance_count = 0;  // sum of row instance counts
  std::size_t long_tail_classes = 0;

  friend bool operator==(const ReportTotals&, const ReportTotals&) = default;
};

struct DatasetReport {
  ReportBasis basis = ReportBasis::kOriginal;
  std::size_t long_tail_max_images = 200;
  // Descending image_count, ties by name.
  std::vector<ReportRow> rows;
  ReportTotals totals;

  friend bool operator==(const DatasetReport&, const DatasetReport&) = default;
};

DatasetReport build_report(const DatasetIndex& ds, const LongTailPolicy& policy,
                           ReportBasis basis = ReportBasis::kOriginal);
DatasetReport build_report(const StatsMap& stats, std::size_t dataset_images,
                           const LongTailPolicy& policy, ReportBasis basis);

std::string render_text(const DatasetReport& report);
nlohmann::ordered_json report_to_json(const DatasetReport& report);
DatasetReport report_from_json(const nlohmann::json& doc);

struct DiffRow {
  std::string class_name;
  std::int64_t images_a = 0;
  std::int64_t images_b = 0;
  std::int64_t instances_a = 0;
  std::int64_t instances_b = 0;

  std::int64_t image_delta() const noexcept { return images_b - images_a; }
  std::int64_t instance_delta() const noexcept {
    return instances_b - instances_a;
  }
};

struct ReportDiff {
  // Union of both class sets, sorted by name.
  std::vector<DiffRow> rows;

  bool all_zero() const noexcept;
};

ReportDiff diff_reports(const DatasetReport& a, const DatasetReport& b);
std::string render_text(const ReportDiff& diff);
nlohmann::ordered_json diff_to_json(const ReportDiff& diff);

}  // namespace aerialsynth

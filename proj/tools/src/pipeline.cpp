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

#include "aerialsynth/cli/pipeline.hpp"

#include <set>

#include <spdlog/spdlog.h>

#include "aerialsynth/class_stats.hpp"
#include "aerialsynth/compositor.hpp"
#include "aerialsynth/error.hpp"
#include "aerialsynth/instance_pool.hpp"
#include "aerialsynth/random.hpp"
#include "aerialsynth/report.hpp"
#include "aerialsynth/cli/stages.hpp"

namespace aerialsynth::cli {
namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

namespace {

json dry_run_plan(const PipelineConfig& cfg, const DatasetIndex& original) {
  json plan;
  plan["dataset_images"] = original.images.size();
  plan["dataset_objects"] = original.object_count();
  plan["tiles"] = planned_tile_count(original, cfg.tiling);
  plan["crops_from_original"] = original.object_count();
  plan["pool"] = cfg.external_pool ? "ingest " + cfg.stages.pool.generic_string()
                                   : "mock, " + std::to_string(cfg.mock_per_class) +
                                         " per sampled class";
  plan["synthetic_images"] = cfg.synthetic_count;
  plan["steps"] = {"tile", "extract-rois", "sample-finetune",
                   cfg.external_pool ? "ingest-pool" : "mock-pool", "compose", "report"};
  return plan;
}

}  // namespace

json run_pipeline(const PipelineConfig& cfg, bool dry_run) {
  cfg.validate();
  json summary;
  summary["tool"] = "aerialsynth";
  summary["command"] = "pipeline";
  summary["status"] = "ok";
  summary["dry_run"] = dry_run;
  summary["config"] = pipeline_config_to_json(cfg);

  const DatasetIndex original = load_dataset(cfg.dataset, cfg.classes_file, cfg.jobs);
  if (dry_run) {
    summary["plan"] = dry_run_plan(cfg, original);
    return summary;
  }
  json& stages = summary["stages"];

  spdlog::info("stage=tile out={}", cfg.stages.tiled.string());
  const TilingResult tiled = tile_dataset(original, cfg.tiling, cfg.stages.tiled, cfg.jobs);
  stages["tile"] = {{"images", original.images.size()},
                    {"tiles", tiled.index.images.size()},
                    {"objects", tiled.index.object_count()},
                    {"failures", failures_json(tiled.failures)}};

  spdlog::info("stage=extract-rois source={} out={}", to_string(cfg.roi_source),
               cfg.stages.crops.string());
  const DatasetIndex& roi_source =
      cfg.roi_source == RoiSource::kOriginal ? original : tiled.index;
  const ExtractionResult extracted =
      extract_crops(roi_source, cfg.roi_margin, cfg.stages.crops, cfg.jobs);
  write_crop_records(cfg.stages.crops, extracted.crops);
  stages["extract-rois"] = {{"source", to_string(cfg.roi_source)},
                            {"crops", extracted.crops.size()},
                            {"failures", failures_json(extracted.failures)}};

  spdlog::info("stage=sample-finetune strategy={}", to_string(cfg.sampling.strategy));
  const PromptManifest manifest = sample_finetune_set(extracted.crops, cfg.sampling);
  for (const auto& w : manifest.warnings) spdlog::warn("{}", w);
  write_manifest(cfg.stages.manifest / kManifestFile, manifest);
  std::set<std::string> sampled_classes;
  for (const auto& e : manifest.entries) sampled_classes.insert(e.class_name);
  stages["sample-finetune"] = {{"entries", manifest.entries.size()},
                               {"classes", sampled_classes},
                               {"warnings", manifest.warnings}};

  if (!cfg.external_pool) {
    spdlog::info("stage=mock-pool classes={} per_class={}", sampled_classes.size(),
                 cfg.mock_per_class);
    if (sampled_classes.empty()) {
      throw CompositionError("the finetune manifest is empty; no classes for a mock pool");
    }
    make_mock_pool({sampled_classes.begin(), sampled_classes.end()}, cfg.mock_per_class,
                   derive_seed(cfg.seed, "pool"), cfg.stages.pool);
  }
  spdlog::info("stage=ingest-pool root={}", cfg.stages.pool.string());
  const PoolIndex pool = ingest_pool(cfg.stages.pool, cfg.jobs);
  for (const auto& w : pool.warnings) spdlog::warn("{}", w);
  stages["pool"] = {{"external", cfg.external_pool},
                    {"entries", pool.size()},
                    {"per_class", pool_counts_json(pool)},
                    {"warnings", pool.warnings}};

  const StatsMap stats = compute_class_stats(
      cfg.stats_basis == StatsBasis::kTiled ? tiled.index : original);
  write_text_file(cfg.stages.reports / kStatsFile, stats_to_json(stats).dump(2) + "\n");

  spdlog::info("stage=compose count={} out={}", cfg.synthetic_count,
               cfg.stages.synthetic.string());
  const SyntheticResult synthetic =
      generate_synthetic_set(tiled.index, pool, stats, cfg.composition, cfg.synthetic_count,
                             cfg.stages.synthetic, cfg.jobs);
  int requested = 0, failed = 0;
  std::size_t placed = 0;
  for (const auto& p : synthetic.plans) {
    requested += p.requested;
    failed += p.failed;
    placed += p.placements.size();
  }
  stages["compose"] = {{"images", synthetic.index.images.size()},
                       {"requested", requested},
                       {"placed", placed},
                       {"failed", failed},
                       {"pasted_per_class", pasted_counts_json(synthetic.plans)}};

  spdlog::info("stage=report out={}", cfg.stages.reports.string());
  const DatasetIndex augmented = merge_datasets({&tiled.index, &synthetic.index});
  const DatasetReport original_report =
      build_report(original, cfg.long_tail, ReportBasis::kOriginal);
  const DatasetReport tiled_report = build_report(tiled.index, cfg.long_tail, ReportBasis::kTiled);
  const DatasetReport augmented_report =
      build_report(augmented, cfg.long_tail, ReportBasis::kAugmented);
  write_report(cfg.stages.reports / "original", original_report);
  write_report(cfg.stages.reports / "tiled", tiled_report);
  write_report(cfg.stages.reports / "augmented", augmented_report);
  write_diff(cfg.stages.reports, diff_reports(tiled_report, augmented_report));
  stages["report"] = {
      {"long_tail_tiled", long_tail_classes(compute_class_stats(tiled.index), cfg.long_tail)},
      {"augmented_images", augmented.images.size()}};
  return summary;
}

}  // namespace aerialsynth::cli

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

#include "aerialsynth/cli/cli.hpp"

#include <cstdlib>
#include <functional>
#include <iostream>
#include <memory>
#include <optional>
#include <set>

#include <CLI11.hpp>
#include <spdlog/sinks/stdout_sinks.h>
#include <spdlog/spdlog.h>

#include "aerialsynth/class_stats.hpp"
#include "aerialsynth/coco.hpp"
#include "aerialsynth/compositor.hpp"
#include "aerialsynth/error.hpp"
#include "aerialsynth/instance_pool.hpp"
#include "aerialsynth/random.hpp"
#include "aerialsynth/report.hpp"
#include "aerialsynth/roi_extractor.hpp"
#include "aerialsynth/tiler.hpp"
#include "aerialsynth/cli/pipeline.hpp"
#include "aerialsynth/cli/pipeline_config.hpp"
#include "aerialsynth/cli/stages.hpp"

namespace aerialsynth::cli {
namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

namespace {

void configure_logging() {
  static const auto logger = [] {
    auto l = std::make_shared<spdlog::logger>(
        "aerialsynth", std::make_shared<spdlog::sinks::stderr_sink_mt>());
    l->set_pattern("%Y-%m-%dT%H:%M:%S.%e %l %v");
    return l;
  }();
  spdlog::set_default_logger(logger);
  spdlog::level::level_enum level = spdlog::level::info;
  bool unknown = false;
  if (const char* env = std::getenv(kLogEnvVar); env != nullptr && *env != '\0') {
    const std::string text(env);
    level = spdlog::level::from_str(text);
    // from_str maps unknown names to off.
    if (level == spdlog::level::off && text != "off") {
      level = spdlog::level::info;
      unknown = true;
    }
  }
  logger->set_level(level);
  if (unknown) spdlog::warn("ignoring unknown {} value '{}'", kLogEnvVar, std::getenv(kLogEnvVar));
}

struct Common {
  unsigned jobs = 0;
  std::string summary;
  bool dry_run = false;
};

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("--jobs,-j", c.jobs, "Worker threads (0 = available parallelism)")
      ->capture_default_str();
  sub->add_option("--summary", c.summary, "Write a machine-readable summary JSON here");
  sub->add_flag("--dry-run", c.dry_run, "Validate inputs and print the plan; write nothing");
}

json start_summary(std::string_view command, const Common& c) {
  json j;
  j["tool"] = "aerialsynth";
  j["command"] = command;
  j["status"] = "ok";
  j["dry_run"] = c.dry_run;
  return j;
}

// ---------------------------------------------------------------- tile

struct TileArgs {
  Common common;
  std::string input, output, classes;
  TilingConfig cfg;
};

void add_tile(CLI::App& app, TileArgs& a) {
  auto* sub = app.add_subcommand("tile", "Slice a DOTA dataset into overlapping tiles");
  sub->add_option("--input,-i", a.input, "Dataset root (images/, annotations/)")->required();
  sub->add_option("--output,-o", a.output, "Output dataset root")->required();
  sub->add_option("--classes", a.classes, "Class list file pinning category order");
  sub->add_option("--tile-size", a.cfg.tile_size, "Tile edge in pixels")->capture_default_str();
  sub->add_option("--overlap", a.cfg.overlap, "Overlap between tiles in pixels")
      ->capture_default_str();
  sub->add_option("--visibility-threshold", a.cfg.visibility_threshold,
                  "Minimum visible fraction for a clipped object to be kept")
      ->capture_default_str();
  sub->add_flag("--keep-empty-tiles,!--drop-empty-tiles", a.cfg.keep_empty_tiles,
                "Write tiles without objects (default on)");
  add_common(sub, a.common);
}

json cmd_tile(const TileArgs& a) {
  a.cfg.validate();
  json s = start_summary("tile", a.common);
  const DatasetIndex ds = load_dataset(a.input, a.classes, a.common.jobs);
  s["input"] = a.input;
  s["output"] = a.output;
  s["tiling"] = {{"tile_size", a.cfg.tile_size},
                 {"overlap", a.cfg.overlap},
                 {"visibility_threshold", a.cfg.visibility_threshold},
                 {"keep_empty_tiles", a.cfg.keep_empty_tiles}};
  s["images"] = ds.images.size();
  if (a.common.dry_run) {
    s["planned_tiles"] = planned_tile_count(ds, a.cfg);
    return s;
  }
  const TilingResult r = tile_dataset(ds, a.cfg, a.output, a.common.jobs);
  s["tiles"] = r.index.images.size();
  s["objects"] = r.index.object_count();
  s["objects_per_class"] = class_counts_json(r.index);
  s["failures"] = failures_json(r.failures);
  spdlog::info("stage=tile images={} tiles={} objects={} failures={}", ds.images.size(),
               r.index.images.size(), r.index.object_count(), r.failures.size());
  return s;
}

// ---------------------------------------------------------------- extract-rois

struct ExtractArgs {
  Common common;
  std::string input, output, classes;
  double margin = 10.0;
};

void add_extract(CLI::App& app, ExtractArgs& a) {
  auto* sub = app.add_subcommand("extract-rois", "Crop every ground-truth box with a margin");
  sub->add_option("--input,-i", a.input, "Dataset root")->required();
  sub->add_option("--output,-o", a.output, "Crop directory (PNGs and crops.jsonl)")->required();
  sub->add_option("--classes", a.classes, "Class list file pinning category order");
  sub->add_option("--margin", a.margin, "Pixels added on each side before clamping")
      ->capture_default_str()
      ->check(CLI::NonNegativeNumber);
  add_common(sub, a.common);
}

json cmd_extract(const ExtractArgs& a) {
  json s = start_summary("extract-rois", a.common);
  const DatasetIndex ds = load_dataset(a.input, a.classes, a.common.jobs);
  s["input"] = a.input;
  s["output"] = a.output;
  s["margin"] = a.margin;
  if (a.common.dry_run) {
    s["planned_crops"] = ds.object_count();
    return s;
  }
  const ExtractionResult r = extract_crops(ds, a.margin, a.output, a.common.jobs);
  s["crops"] = r.crops.size();
  s["records"] = write_crop_records(a.output, r.crops).generic_string();
  s["failures"] = failures_json(r.failures);
  spdlog::info("stage=extract-rois crops={} failures={}", r.crops.size(), r.failures.size());
  return s;
}

// ---------------------------------------------------------------- sample-finetune

struct SampleArgs {
  Common common;
  std::string crops, output, strategy = "min_res_control";
  SamplingConfig cfg;
};

void add_sample(CLI::App& app, SampleArgs& a) {
  auto* sub = app.add_subcommand("sample-finetune", "Assemble the balanced finetune manifest");
  sub->add_option("--crops", a.crops, "crops.jsonl written by extract-rois")->required();
  sub->add_option("--output,-o", a.output, "Manifest path (JSON Lines)")->required();
  sub->add_option("--strategy", a.strategy, "uniform_sample or min_res_control")
      ->capture_default_str()
      ->check(CLI::IsMember({"uniform_sample", "min_res_control"}));
  sub->add_option("--min-size", a.cfg.min_size, "Minimum crop width and height")
      ->capture_default_str();
  sub->add_option("--cap", a.cfg.per_class_cap, "Maximum crops per class")
      ->capture_default_str();
  sub->add_option("--seed", a.cfg.seed, "Sampling seed")->capture_default_str();
  add_common(sub, a.common);
}

json cmd_sample(SampleArgs a) {
  a.cfg.strategy = parse_sampling_strategy(a.strategy);
  a.cfg.validate();
  json s = start_summary("sample-finetune", a.common);
  const auto crops = read_crop_records(a.crops);
  const PromptManifest m = sample_finetune_set(crops, a.cfg);
  for (const auto& w : m.warnings) spdlog::warn("{}", w);
  std::map<std::string, std::size_t> per_class;
  for (const auto& e : m.entries) ++per_class[e.class_name];
  s["crops"] = a.crops;
  s["output"] = a.output;
  s["strategy"] = to_string(a.cfg.strategy);
  s["min_size"] = a.cfg.min_size;
  s["cap"] = a.cfg.per_class_cap;
  s["seed"] = a.cfg.seed;
  s["candidates"] = crops.size();
  s["entries"] = m.entries.size();
  s["per_class"] = per_class;
  s["warnings"] = m.warnings;
  if (!a.common.dry_run) write_manifest(a.output, m);
  spdlog::info("stage=sample-finetune candidates={} entries={}", crops.size(), m.entries.size());
  return s;
}

// ---------------------------------------------------------------- mock-pool

struct MockPoolArgs {
  Common common;
  std::string output, manifest;
  std::vector<std::string> classes;
  int per_class = 200;
  std::uint64_t seed = 0;
  MockPoolOptions options;
};

void add_mock_pool(CLI::App& app, MockPoolArgs& a) {
  auto* sub = app.add_subcommand("mock-pool", "Write a deterministic stand-in instance pool");
  sub->add_option("--output,-o", a.output, "Pool root")->required();
  auto* classes = sub->add_option("--classes", a.classes, "Class names (comma separated)")
                      ->delimiter(',');
  sub->add_option("--manifest", a.manifest, "Take the class list from a finetune manifest")
      ->excludes(classes);
  sub->add_option("--per-class", a.per_class, "Images per class")->capture_default_str();
  sub->add_option("--seed", a.seed, "Generator seed")->capture_default_str();
  sub->add_option("--min-side", a.options.min_side, "Smallest generated side")
      ->capture_default_str();
  sub->add_option("--max-side", a.options.max_side, "Largest generated side")
      ->capture_default_str();
  add_common(sub, a.common);
}

json cmd_mock_pool(const MockPoolArgs& a) {
  if (a.per_class < 1) throw ConfigError("--per-class must be >= 1");
  std::set<std::string> classes(a.classes.begin(), a.classes.end());
  if (!a.manifest.empty()) {
    for (const auto& e : manifest_entries_from_jsonl(read_text_file(a.manifest))) {
      classes.insert(e.class_name);
    }
  }
  if (classes.empty()) throw ConfigError("mock-pool needs --classes or a non-empty --manifest");
  json s = start_summary("mock-pool", a.common);
  s["output"] = a.output;
  s["classes"] = classes;
  s["per_class"] = a.per_class;
  s["seed"] = a.seed;
  if (a.common.dry_run) {
    s["planned_files"] = classes.size() * static_cast<std::size_t>(a.per_class);
    return s;
  }
  const PoolIndex pool =
      make_mock_pool({classes.begin(), classes.end()}, a.per_class, a.seed, a.output, a.options);
  s["files"] = pool.size();
  spdlog::info("stage=mock-pool classes={} files={}", classes.size(), pool.size());
  return s;
}

// ---------------------------------------------------------------- ingest-pool

struct IngestArgs {
  Common common;
  std::string pool;
};

void add_ingest(CLI::App& app, IngestArgs& a) {
  auto* sub = app.add_subcommand("ingest-pool", "Index and validate an instance pool");
  sub->add_option("--pool,-i", a.pool, "Pool root (<class>/seed<k>_<i>.png)")->required();
  add_common(sub, a.common);
}

json cmd_ingest(const IngestArgs& a) {
  json s = start_summary("ingest-pool", a.common);
  const PoolIndex pool = ingest_pool(a.pool, a.common.jobs);
  for (const auto& w : pool.warnings) spdlog::warn("{}", w);
  s["pool"] = a.pool;
  s["entries"] = pool.size();
  s["per_class"] = pool_counts_json(pool);
  s["warnings"] = pool.warnings;
  for (const auto& [name, entries] : pool.by_class) {
    std::cout << name << '\t' << entries.size() << '\n';
  }
  return s;
}

// ---------------------------------------------------------------- compose

struct ComposeArgs {
  Common common;
  std::string input, pool, output, stats, stats_from, classes;
  std::string background_source = "negatives_only";
  std::vector<std::string> class_filter;
  std::size_t count = 100;
  CompositionConfig cfg;
};

void add_compose(CLI::App& app, ComposeArgs& a) {
  auto* sub = app.add_subcommand("compose", "Paste pool instances onto background tiles");
  sub->add_option("--input,-i", a.input, "Background dataset root (usually tiled)")->required();
  sub->add_option("--pool", a.pool, "Instance pool root")->required();
  sub->add_option("--output,-o", a.output, "Synthetic dataset root")->required();
  sub->add_option("--classes", a.classes, "Class list file pinning category order");
  auto* stats = sub->add_option("--stats", a.stats, "Class statistics JSON (from `stats`)");
  sub->add_option("--stats-from", a.stats_from,
                  "Dataset to compute class statistics on (default: --input)")
      ->excludes(stats);
  sub->add_option("--count,-n", a.count, "Synthetic images to write")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  sub->add_option("--instances-min", a.cfg.instances_min, "Fewest pastes per image")
      ->capture_default_str();
  sub->add_option("--instances-max", a.cfg.instances_max, "Most pastes per image")
      ->capture_default_str();
  sub->add_option("--max-placement-attempts", a.cfg.max_placement_attempts,
                  "Placement draws per instance")
      ->capture_default_str();
  sub->add_option("--collision-iou-max", a.cfg.collision_iou_max,
                  "Largest IoU allowed against ground truth")
      ->capture_default_str();
  sub->add_option("--class-filter", a.class_filter, "Only paste these classes (comma separated)")
      ->delimiter(',');
  sub->add_option("--geometry-jitter", a.cfg.geometry_jitter,
                  "Relative jitter on sampled area and aspect")
      ->capture_default_str();
  sub->add_option("--background-source", a.background_source, "negatives_only or all_tiles")
      ->capture_default_str()
      ->check(CLI::IsMember({"negatives_only", "all_tiles"}));
  sub->add_option("--seed", a.cfg.seed, "Composition seed")->capture_default_str();
  add_common(sub, a.common);
}

json cmd_compose(ComposeArgs a) {
  a.cfg.background_source = parse_background_source(a.background_source);
  a.cfg.class_filter = {a.class_filter.begin(), a.class_filter.end()};
  a.cfg.validate();
  json s = start_summary("compose", a.common);
  const DatasetIndex backgrounds = load_dataset(a.input, a.classes, a.common.jobs);
  StatsMap stats;
  std::string stats_source;
  if (!a.stats.empty()) {
    stats = stats_from_json(nlohmann::json::parse(read_text_file(a.stats)));
    stats_source = a.stats;
  } else if (!a.stats_from.empty()) {
    stats = compute_class_stats(load_dataset(a.stats_from, a.classes, a.common.jobs));
    stats_source = a.stats_from;
  } else {
    stats = compute_class_stats(backgrounds);
    stats_source = a.input;
  }
  const PoolIndex pool = ingest_pool(a.pool, a.common.jobs);
  for (const auto& w : pool.warnings) spdlog::warn("{}", w);

  s["input"] = a.input;
  s["pool"] = a.pool;
  s["output"] = a.output;
  s["stats_source"] = stats_source;
  s["count"] = a.count;
  s["seed"] = a.cfg.seed;
  s["instances_per_image"] = {a.cfg.instances_min, a.cfg.instances_max};
  s["class_filter"] = a.cfg.class_filter;
  s["background_source"] = to_string(a.cfg.background_source);
  s["eligible_classes"] = eligible_classes(pool, stats, a.cfg);
  if (a.common.dry_run) return s;

  const SyntheticResult r =
      generate_synthetic_set(backgrounds, pool, stats, a.cfg, a.count, a.output, a.common.jobs);
  int requested = 0, failed = 0;
  std::size_t placed = 0;
  for (const auto& p : r.plans) {
    requested += p.requested;
    failed += p.failed;
    placed += p.placements.size();
  }
  s["images"] = r.index.images.size();
  s["requested"] = requested;
  s["placed"] = placed;
  s["failed"] = failed;
  s["pasted_per_class"] = pasted_counts_json(r.plans);
  s["audit"] = (fs::path(a.output) / "audit.jsonl").generic_string();
  spdlog::info("stage=compose images={} placed={} failed={}", r.index.images.size(), placed,
               failed);
  return s;
}

// ---------------------------------------------------------------- report

struct ReportArgs {
  Common common;
  std::vector<std::string> inputs;
  std::string output, baseline, classes, basis = "original";
  std::size_t long_tail_max = 200;
};

void add_report(CLI::App& app, ReportArgs& a) {
  auto* sub = app.add_subcommand("report", "Class frequency table with long-tail flags");
  sub->add_option("--input,-i", a.inputs, "Dataset root; repeat to report on a union")
      ->required();
  sub->add_option("--output,-o", a.output, "Directory for report.json and report.txt")
      ->required();
  sub->add_option("--basis", a.basis, "original, tiled or augmented")
      ->capture_default_str()
      ->check(CLI::IsMember({"original", "tiled", "augmented"}));
  sub->add_option("--long-tail-max", a.long_tail_max, "Largest image count still long-tail")
      ->capture_default_str();
  sub->add_option("--baseline", a.baseline, "report.json to diff against (writes diff.*)");
  sub->add_option("--classes", a.classes, "Class list file pinning category order");
  add_common(sub, a.common);
}

json cmd_report(const ReportArgs& a) {
  LongTailPolicy policy;
  policy.max_images = a.long_tail_max;
  policy.validate();
  std::vector<DatasetIndex> parts;
  for (const auto& in : a.inputs) parts.push_back(load_dataset(in, a.classes, a.common.jobs));
  std::vector<const DatasetIndex*> ptrs;
  for (const auto& p : parts) ptrs.push_back(&p);
  const DatasetIndex ds = merge_datasets(ptrs);
  const DatasetReport report = build_report(ds, policy, parse_report_basis(a.basis));

  json s = start_summary("report", a.common);
  s["inputs"] = a.inputs;
  s["output"] = a.output;
  s["basis"] = a.basis;
  s["classes"] = report.rows.size();
  s["long_tail"] = long_tail_classes(compute_class_stats(ds), policy);
  std::optional<ReportDiff> diff;
  if (!a.baseline.empty()) {
    diff = diff_reports(report_from_json(nlohmann::json::parse(read_text_file(a.baseline))),
                        report);
    s["baseline"] = a.baseline;
    s["diff_all_zero"] = diff->all_zero();
  }
  std::cout << render_text(report);
  if (diff) std::cout << render_text(*diff);
  if (!a.common.dry_run) {
    write_report(a.output, report);
    if (diff) write_diff(a.output, *diff);
  }
  return s;
}

// ---------------------------------------------------------------- stats, export-coco

struct DatasetFileArgs {
  Common common;
  std::string input, output, classes;
};

void add_dataset_file(CLI::App& app, DatasetFileArgs& a, const char* name, const char* help,
                      const char* output_help) {
  auto* sub = app.add_subcommand(name, help);
  sub->add_option("--input,-i", a.input, "Dataset root")->required();
  sub->add_option("--output,-o", a.output, output_help)->required();
  sub->add_option("--classes", a.classes, "Class list file pinning category order");
  add_common(sub, a.common);
}

json cmd_stats(const DatasetFileArgs& a) {
  json s = start_summary("stats", a.common);
  const StatsMap stats = compute_class_stats(load_dataset(a.input, a.classes, a.common.jobs));
  s["input"] = a.input;
  s["output"] = a.output;
  s["classes"] = stats.size();
  if (!a.common.dry_run) write_text_file(a.output, stats_to_json(stats).dump(2) + "\n");
  return s;
}

json cmd_export_coco(const DatasetFileArgs& a) {
  json s = start_summary("export-coco", a.common);
  const DatasetIndex ds = load_dataset(a.input, a.classes, a.common.jobs);
  s["input"] = a.input;
  s["output"] = a.output;
  s["images"] = ds.images.size();
  s["annotations"] = ds.object_count();
  s["categories"] = ds.class_names.size();
  if (!a.common.dry_run) write_coco_dataset(ds, a.output);
  return s;
}

// ---------------------------------------------------------------- pipeline

struct PipelineArgs {
  Common common;
  std::string config, dataset, output_root;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> count;
};

void add_pipeline(CLI::App& app, PipelineArgs& a) {
  auto* sub = app.add_subcommand("pipeline", "Run every stage from a JSON config");
  sub->add_option("--config,-c", a.config, "Pipeline config JSON")->required();
  sub->add_option("--dataset", a.dataset, "Override the config's dataset root");
  sub->add_option("--output-root", a.output_root, "Override the config's output root");
  sub->add_option("--seed", a.seed, "Override the master seed");
  sub->add_option("--count,-n", a.count, "Override the synthetic image count");
  add_common(sub, a.common);
}

json cmd_pipeline(const PipelineArgs& a, CLI::App* sub) {
  PipelineConfig cfg = load_pipeline_config(a.config);
  if (!a.dataset.empty()) cfg.dataset = a.dataset;
  if (!a.output_root.empty()) cfg.output_root = a.output_root;
  if (a.seed) cfg.seed = *a.seed;
  if (a.count) cfg.synthetic_count = *a.count;
  if (sub->count("--jobs") > 0) cfg.jobs = a.common.jobs;
  cfg.resolve();
  return run_pipeline(cfg, a.common.dry_run);
}

void write_summary(const Common& c, const json& summary) {
  if (c.dry_run) {
    std::cout << summary.dump(2) << '\n';
  } else if (!c.summary.empty()) {
    write_text_file(c.summary, summary.dump(2) + "\n");
  }
}

}  // namespace

int run(int argc, const char* const* argv) {
  configure_logging();
  CLI::App app{"Synthetic copy-paste augmentation for aerial object detection", "aerialsynth"};
  app.require_subcommand(1);
  app.fallthrough(false);

  TileArgs tile;
  ExtractArgs extract;
  SampleArgs sample;
  MockPoolArgs mock;
  IngestArgs ingest;
  ComposeArgs compose;
  ReportArgs report;
  DatasetFileArgs stats, coco;
  PipelineArgs pipeline;
  add_tile(app, tile);
  add_extract(app, extract);
  add_sample(app, sample);
  add_mock_pool(app, mock);
  add_ingest(app, ingest);
  add_compose(app, compose);
  add_report(app, report);
  add_dataset_file(app, stats, "stats", "Per-class geometry statistics as JSON",
                   "Statistics JSON path");
  add_dataset_file(app, coco, "export-coco", "Convert a DOTA dataset to COCO JSON",
                   "COCO JSON path");
  add_pipeline(app, pipeline);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  CLI::App* sub = app.get_subcommands().front();
  const std::string name = sub->get_name();
  const std::map<std::string, std::pair<const Common*, std::function<json()>>> actions{
      {"tile", {&tile.common, [&] { return cmd_tile(tile); }}},
      {"extract-rois", {&extract.common, [&] { return cmd_extract(extract); }}},
      {"sample-finetune", {&sample.common, [&] { return cmd_sample(sample); }}},
      {"mock-pool", {&mock.common, [&] { return cmd_mock_pool(mock); }}},
      {"ingest-pool", {&ingest.common, [&] { return cmd_ingest(ingest); }}},
      {"compose", {&compose.common, [&] { return cmd_compose(compose); }}},
      {"report", {&report.common, [&] { return cmd_report(report); }}},
      {"stats", {&stats.common, [&] { return cmd_stats(stats); }}},
      {"export-coco", {&coco.common, [&] { return cmd_export_coco(coco); }}},
      {"pipeline", {&pipeline.common, [&] { return cmd_pipeline(pipeline, sub); }}},
  };
  const auto& [common, action] = actions.at(name);

  auto fail = [&](int code, const std::exception& e) {
    spdlog::error("{} failed: {}", name, e.what());
    if (!common->dry_run && !common->summary.empty()) {
      json s = start_summary(name, *common);
      s["status"] = "error";
      s["exit_code"] = code;
      s["error"] = e.what();
      try {
        write_text_file(common->summary, s.dump(2) + "\n");
      } catch (const std::exception& inner) {
        spdlog::error("{}", inner.what());
      }
    }
    return code;
  };
  try {
    write_summary(*common, action());
  } catch (const ConfigError& e) {
    return fail(kExitUsage, e);
  } catch (const std::exception& e) {
    return fail(kExitStageFailure, e);
  }
  return kExitOk;
}

int run(const std::vector<std::string>& args) {
  std::vector<const char*> argv{"aerialsynth"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data());
}

}  // namespace aerialsynth::cli

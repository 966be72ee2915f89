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

// Acceptance gate. Each criterion prints one PASS/FAIL line with the values
// it measured; the exit status is non-zero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <regex>
#include <set>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "aerialsynth/class_stats.hpp"
#include "aerialsynth/coco.hpp"
#include "aerialsynth/compositor.hpp"
#include "aerialsynth/dota_io.hpp"
#include "aerialsynth/error.hpp"
#include "aerialsynth/instance_pool.hpp"
#include "aerialsynth/random.hpp"
#include "aerialsynth/report.hpp"
#include "aerialsynth/roi_extractor.hpp"
#include "aerialsynth/tiler.hpp"
#include "aerialsynth/cli/cli.hpp"
#include "aerialsynth/cli/stages.hpp"
#include "json_schema.hpp"
#include "test_util.hpp"

namespace aerialsynth {
namespace {

namespace fs = std::filesystem;
using testing::box;
using testing::TempDir;

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Collects the first few failed expectations of one criterion.
class Verdict {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (ok) return;
    ++failures_;
    if (failures_ <= 3) notes_ += (notes_.empty() ? "" : "; ") + what;
  }
  Outcome outcome(const std::string& summary) const {
    std::string detail = summary + " [" + std::to_string(checks_) + " checks";
    if (failures_ > 0) detail += ", " + std::to_string(failures_) + " failed: " + notes_;
    return {failures_ == 0, detail + "]"};
  }

 private:
  std::size_t checks_ = 0;
  std::size_t failures_ = 0;
  std::string notes_;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), f, v);
  return buf;
}

std::string join(const std::set<int>& values) {
  std::string out = "{";
  for (int v : values) out += (out.size() > 1 ? "," : "") + std::to_string(v);
  return out + "}";
}

// ---------------------------------------------------------------------------

Outcome tiling_parameters() {
  TempDir dir;
  const Image source = testing::textured_image(1024, 1024, 7);
  write_png(image_path_for(dir / "ds", "scene"), source);
  write_dota_file(annotation_path_for(dir / "ds", "scene"), {box(480, 480, 544, 544, "plane")});
  const DatasetIndex ds = discover_dataset(dir / "ds");

  TilingConfig cfg;
  cfg.tile_size = 512;
  cfg.overlap = 200;
  const auto t0 = std::chrono::steady_clock::now();
  const TilingResult r = tile_dataset(ds, cfg, dir / "tiled");
  const double elapsed = seconds_since(t0);

  Verdict v;
  v.expect(r.failures.empty(), "tiling reported failures");
  v.expect(r.index.images.size() == 9, std::to_string(r.index.images.size()) + " tiles");
  std::set<int> xs, ys;
  std::vector<HBox> windows;
  for (const auto& tile : plan_tiles(1024, 1024, cfg)) {
    xs.insert(tile.origin_x);
    ys.insert(tile.origin_y);
    windows.push_back(tile.window());
    v.expect(tile.tile_w == 512 && tile.tile_h == 512, "short tile");
  }
  v.expect(xs == std::set<int>{0, 312, 512}, "x positions " + join(xs));
  v.expect(ys == std::set<int>{0, 312, 512}, "y positions " + join(ys));

  // Every cell of a 64x64 grid over the image (16 px cells) lies inside a
  // tile window.
  int covered = 0;
  for (int gy = 0; gy < 64; ++gy) {
    for (int gx = 0; gx < 64; ++gx) {
      const HBox cell{gx * 16.0, gy * 16.0, gx * 16.0 + 16, gy * 16.0 + 16};
      bool inside = false;
      for (const auto& w : windows) inside = inside || contains(w, cell);
      covered += inside;
    }
  }
  v.expect(covered == 64 * 64, std::to_string(covered) + "/4096 cells covered");

  // Written tiles carry the source pixels of their window.
  const std::vector<int> xv(xs.begin(), xs.end()), yv(ys.begin(), ys.end());
  for (const auto& im : r.index.images) {
    const Image pixels = read_image(im.path);
    const std::string id = im.image_id;
    const int row = std::stoi(id.substr(id.find("_r") + 2));
    const int col = std::stoi(id.substr(id.find("_c") + 2));
    v.expect(pixels == crop(source, {xv.at(col), yv.at(row), 512, 512}),
             id + " pixels differ from source");
  }
  v.expect(elapsed < 1.0, fmt("runtime %.3f s", elapsed));
  return v.outcome("9 tiles at x,y " + join(xs) + ", coverage " + std::to_string(covered) +
                   "/4096, " + fmt("%.3f s", elapsed));
}

Outcome roi_margin() {
  Verdict v;
  auto check = [&](HBox in, HBox want, const char* label) {
    const HBox got = expand_box(in, 10, 512, 512);
    v.expect(got == want, label);
  };
  check({100, 100, 130, 140}, {90, 90, 140, 150}, "interior");
  check({5, 200, 20, 220}, {0, 190, 30, 230}, "left border");
  check({200, 3, 220, 20}, {190, 0, 230, 30}, "top border");
  check({500, 200, 508, 220}, {490, 190, 512, 230}, "right border");
  check({200, 495, 220, 510}, {190, 485, 230, 512}, "bottom border");
  check({2, 2, 510, 510}, {0, 0, 512, 512}, "all borders");

  // The same rectangles through extract_crops on a real image.
  TempDir dir;
  const Image source = testing::textured_image(512, 512, 5);
  write_png(image_path_for(dir / "ds", "img"), source);
  write_dota_file(annotation_path_for(dir / "ds", "img"),
                  {box(100, 100, 130, 140, "plane"), box(5, 200, 20, 220, "plane"),
                   box(500, 200, 508, 220, "ship"), box(200, 495, 220, 510, "ship")});
  const auto crops = extract_crops(discover_dataset(dir / "ds"), 10, dir / "crops").crops;
  const std::vector<PixelRect> want{{90, 90, 50, 60}, {0, 190, 30, 40}, {490, 190, 22, 40},
                                    {190, 485, 40, 27}};
  v.expect(crops.size() == want.size(), "crop count");
  for (std::size_t i = 0; i < std::min(crops.size(), want.size()); ++i) {
    v.expect(read_image(crops[i].output_path) == crop(source, want[i]),
             crops[i].crop_id + " pixels");
  }
  return v.outcome("expand_box((100,100,130,140), 10) = (90,90,140,150); clamped at 4 borders");
}

std::vector<CropRecord> sampling_population() {
  std::vector<CropRecord> crops;
  for (const std::string cls : {"helicopter", "helipad", "storage-tank"}) {
    for (int k = 0; k < 500; ++k) {
      // 14x14, 15x15, 14x40, 40x14, 15x60 repeating.
      static const int sizes[5][2] = {{14, 14}, {15, 15}, {14, 40}, {40, 14}, {15, 60}};
      CropRecord c;
      c.source_image_id = cls + "_src" + std::to_string(k / 4);
      c.crop_id = c.source_image_id + "_obj" + std::to_string(k % 4);
      c.class_name = cls;
      c.width = sizes[k % 5][0];
      c.height = sizes[k % 5][1];
      c.crop_rect = {0, 0, double(c.width), double(c.height)};
      c.prompt = make_prompt(cls);
      c.output_path = "crops/" + c.crop_id + ".png";
      crops.push_back(c);
    }
  }
  return crops;
}

Outcome sampling_constraints() {
  const auto crops = sampling_population();
  std::map<std::string, const CropRecord*> by_id;
  for (const auto& c : crops) by_id[c.crop_id] = &c;

  Verdict v;
  SamplingConfig cfg;
  cfg.seed = 2024;
  std::map<std::string, int> per_class, small_uniform;
  int small_controlled = 0;
  const auto controlled = sample_finetune_set(crops, cfg);
  for (const auto& e : controlled.entries) {
    ++per_class[e.class_name];
    const auto* c = by_id.at(e.crop_id);
    small_controlled += (c->width < 15 || c->height < 15);
  }
  for (const auto& [cls, n] : per_class) v.expect(n == 200, cls + " has " + std::to_string(n));
  v.expect(per_class.size() == 3, "class count");
  v.expect(small_controlled == 0, std::to_string(small_controlled) + " sub-15 crops sampled");

  cfg.strategy = SamplingStrategy::kUniformSample;
  const auto uniform = sample_finetune_set(crops, cfg);
  int uniform_total = 0;
  for (const auto& e : uniform.entries) {
    const auto* c = by_id.at(e.crop_id);
    small_uniform[e.class_name] += (c->width < 15 || c->height < 15);
    ++uniform_total;
  }
  v.expect(uniform_total == 600, "uniform_sample total " + std::to_string(uniform_total));
  int uniform_small = 0;
  for (const auto& [cls, n] : small_uniform) uniform_small += n;
  v.expect(uniform_small > 0, "uniform_sample never drew a sub-15 crop");
  return v.outcome("min_res_control: 200/200/200, " + std::to_string(small_controlled) +
                   " sub-15; uniform_sample: " + std::to_string(uniform_small) +
                   " sub-15 of 600");
}

Outcome prompt_contract() {
  TempDir dir;
  SamplingConfig cfg;
  cfg.seed = 1;
  cli::write_manifest(dir / "m/manifest.jsonl", sample_finetune_set(sampling_population(), cfg));
  const auto entries =
      manifest_entries_from_jsonl(cli::read_text_file(dir / "m/manifest.jsonl"));
  const std::regex re("birdview of (.+)");
  Verdict v;
  std::size_t matched = 0;
  for (const auto& e : entries) {
    std::smatch m;
    const bool ok = std::regex_match(e.prompt, m, re) && m[1].str() == e.class_name;
    matched += ok;
    v.expect(ok, e.crop_id + " prompt '" + e.prompt + "'");
  }
  v.expect(!entries.empty(), "empty manifest");
  return v.outcome(std::to_string(matched) + "/" + std::to_string(entries.size()) +
                   " entries match \"birdview of <class>\"");
}

Outcome composition_geometry() {
  TempDir dir;
  const std::vector<std::string> classes{"helipad", "plane", "ship", "storage-tank"};
  // Backgrounds: negatives plus scenes whose ground truth defines the stats.
  Rng layout(77);
  for (int i = 0; i < 12; ++i) {
    std::vector<ObjectRecord> objects;
    if (i % 2 == 1) {
      for (int k = 0; k < 6; ++k) {
        const auto& cls = classes[layout.uniform_index(classes.size())];
        const double w = 12 + layout.uniform_int(0, 60), h = 12 + layout.uniform_int(0, 45);
        const double x = layout.uniform_int(0, 512 - 80), y = layout.uniform_int(0, 512 - 80);
        objects.push_back(box(x, y, x + w, y + h, cls));
      }
    }
    testing::add_image(dir / "ds", "bg" + std::to_string(i), 512, 512, objects, true, i);
  }
  const DatasetIndex ds = discover_dataset(dir / "ds");
  const StatsMap stats = compute_class_stats(ds);
  const PoolIndex pool = make_mock_pool(classes, 20, 5, dir / "pool");

  CompositionConfig cfg;
  cfg.seed = 31337;
  cfg.instances_min = 3;
  cfg.instances_max = 6;
  cfg.background_source = BackgroundSource::kAllTiles;
  const auto t0 = std::chrono::steady_clock::now();
  const SyntheticResult r = generate_synthetic_set(ds, pool, stats, cfg, 300, dir / "syn");
  const double elapsed = seconds_since(t0);

  Verdict v;
  std::size_t instances = 0, pairs = 0;
  std::map<std::string, Image> pool_pixels;
  for (std::size_t i = 0; i < r.index.images.size(); ++i) {
    const ImageRecord& out = r.index.images[i];
    const PastePlan& plan = r.plans[i];
    const ImageRecord* bg = ds.find(plan.background_image_id);
    const Image composed = read_image(out.path);
    const auto written = read_dota_file(annotation_path_for(dir / "syn", out.image_id), out.image_id);
    v.expect(written.size() == bg->objects.size() + plan.placements.size(),
             out.image_id + " annotation count");
    for (const auto& obj : written) {
      v.expect(obj.hbox.xmin >= 0 && obj.hbox.ymin >= 0 && obj.hbox.xmax <= out.width &&
                   obj.hbox.ymax <= out.height && obj.hbox.area() > 0,
               out.image_id + " annotation out of bounds");
    }
    for (std::size_t k = 0; k < plan.placements.size(); ++k) {
      const auto& p = plan.placements[k];
      const HBox& t = p.target;
      const auto& s = stats.at(p.entry.class_name);
      ++instances;
      v.expect(s.area_range.contains(t.area()), out.image_id + " area outside class range");
      v.expect(s.aspect_range.contains(t.width() / t.height()),
               out.image_id + " aspect outside class range");
      for (const auto& gt : bg->objects) {
        v.expect(iou(t, gt.hbox) <= 0.05, out.image_id + " IoU vs ground truth");
      }
      for (std::size_t j = k + 1; j < plan.placements.size(); ++j) {
        ++pairs;
        v.expect(iou(t, plan.placements[j].target) <= 0.05, out.image_id + " pairwise IoU");
      }
      if (k + bg->objects.size() < written.size()) {
        v.expect(written[bg->objects.size() + k].hbox == t, out.image_id + " hbox != paste");
      }
      const std::string key = p.entry.path.string();
      if (!pool_pixels.contains(key)) pool_pixels.emplace(key, read_image(p.entry.path));
      const PixelRect rect{int(t.xmin), int(t.ymin), int(t.width()), int(t.height())};
      v.expect(crop(composed, rect) == resize(pool_pixels.at(key), rect.width, rect.height),
               out.image_id + " pasted pixels differ");
    }
  }
  v.expect(instances >= 1000, std::to_string(instances) + " instances < 1000");
  v.expect(elapsed < 30.0, fmt("runtime %.2f s", elapsed));
  return v.outcome(std::to_string(instances) + " instances on " +
                   std::to_string(r.index.images.size()) + " images, " +
                   std::to_string(pairs) + " pasted pairs, " + fmt("%.2f s", elapsed));
}

Outcome determinism() {
  TempDir dir;
  testing::add_image(dir / "ds", "P0001", 900, 700,
                     {box(100, 100, 140, 150, "plane"), box(600, 420, 660, 450, "plane"),
                      box(300, 500, 330, 530, "helipad"), box(820, 30, 860, 60, "ship")},
                     true, 1);
  testing::add_image(dir / "ds", "P0002", 640, 640,
                     {box(50, 50, 90, 70, "ship"), box(400, 400, 424, 424, "helipad")}, true, 2);
  testing::add_image(dir / "ds", "P0003", 800, 600, {}, false, 3);
  auto config = [&](const std::string& name, int seed) {
    const nlohmann::json cfg = {{"dataset", (dir / "ds").string()},
                                {"output_root", (dir / name).string()},
                                {"seed", seed},
                                {"pool", {{"per_class", 10}}},
                                {"composition", {{"count", 12}}}};
    testing::write_file(dir / (name + ".json"), cfg.dump());
    return cli::run({"pipeline", "--config", (dir / (name + ".json")).string()});
  };
  Verdict v;
  v.expect(config("a", 2024) == 0, "pipeline run a failed");
  v.expect(config("b", 2024) == 0, "pipeline run b failed");
  v.expect(config("c", 2025) == 0, "pipeline run c failed");

  const auto a = testing::snapshot_tree(dir / "a");
  const auto b = testing::snapshot_tree(dir / "b");
  std::size_t annotations = 0, manifests = 0, reports = 0;
  for (const auto& [rel, bytes] : a) {
    annotations += rel.find("/annotations/") != std::string::npos;
    manifests += rel.rfind("manifest/", 0) == 0;
    reports += rel.rfind("reports/", 0) == 0;
  }
  v.expect(annotations > 0 && manifests == 2 && reports > 0, "expected outputs missing");
  v.expect(a == b, "same seed produced different trees");
  const std::string plan_a = testing::read_file(dir / "a/synthetic/audit.jsonl");
  const std::string plan_c = testing::read_file(dir / "c/synthetic/audit.jsonl");
  v.expect(!plan_a.empty() && plan_a != plan_c, "different seeds gave the same plan");
  return v.outcome(std::to_string(a.size()) + " files byte-identical (" +
                   std::to_string(annotations) + " annotation, " + std::to_string(manifests) +
                   " manifest, " + std::to_string(reports) +
                   " report files); seed 2025 changes the composition plan");
}

Outcome dota_round_trip() {
  Rng rng(99);
  const std::vector<std::string> classes{"plane", "ship", "storage-tank", "baseball-diamond",
                                         "helipad", "container-crane", "small-vehicle"};
  auto coord = [&] {
    switch (rng.uniform_index(3)) {
      case 0: return double(rng.uniform_int(0, 8000));
      case 1: return rng.uniform_int(0, 16000) / 2.0;
      default: return rng.uniform_real(0.0, 8000.0);
    }
  };
  std::vector<ObjectRecord> records;
  while (records.size() < 10000) {
    QuadBox q;
    for (auto& p : q.vertices) p = {coord(), coord()};
    try {
      records.push_back(ObjectRecord::make(q, classes[rng.uniform_index(classes.size())],
                                           rng.uniform_index(2) == 1));
    } catch (const GeometryError&) {
      // Degenerate random quad; draw again.
    }
  }
  const std::string first = write_dota_annotation(records);
  const auto parsed = parse_dota_annotation(first, "roundtrip");
  const std::string second = write_dota_annotation(parsed);
  Verdict v;
  v.expect(parsed.size() == 10000, std::to_string(parsed.size()) + " records parsed");
  v.expect(first == second, "second write differs");
  std::size_t mismatched = 0;
  for (std::size_t i = 0; i < std::min(parsed.size(), records.size()); ++i) {
    mismatched += !(parsed[i].geometry.vertices == records[i].geometry.vertices &&
                    parsed[i].class_name == records[i].class_name &&
                    parsed[i].difficult == records[i].difficult);
  }
  v.expect(mismatched == 0, std::to_string(mismatched) + " records changed value");
  return v.outcome("10000 records, " + std::to_string(first.size()) +
                   " bytes, write->parse->write identical");
}

Outcome long_tail_policy() {
  const std::vector<std::pair<std::string, int>> counts{
      {"small-vehicle", 24341}, {"at-threshold", 200}, {"helipad", 91}, {"absent", 0}};
  DatasetIndex ds;
  std::vector<std::string> declared;
  for (const auto& [name, n] : counts) {
    declared.push_back(name);
    for (int i = 0; i < n; ++i) {
      ds.images.push_back({name + "_" + std::to_string(i), "x.png", 512, 512,
                           {box(1, 1, 21, 11, name)}});
    }
  }
  assign_class_names(ds, declared);
  const auto stats = compute_class_stats(ds);
  const auto report = build_report(ds, {});
  Verdict v;
  const std::map<std::string, bool> want{
      {"small-vehicle", false}, {"at-threshold", true}, {"helipad", true}, {"absent", false}};
  for (const auto& row : report.rows) {
    v.expect(want.at(row.class_name) == row.long_tail, row.class_name + " flag");
  }
  v.expect(report.rows.size() == 4 && report.rows.front().class_name == "small-vehicle" &&
               report.rows.front().image_count == 24341,
           "report order");
  v.expect(long_tail_classes(stats) == std::vector<std::string>{"helipad", "at-threshold"},
           "long_tail_classes");
  return v.outcome("long-tail = {helipad (91), at-threshold (200)}; small-vehicle (24341) "
                   "and absent (0) not flagged");
}

Outcome coco_export() {
  TempDir dir;
  Rng rng(8);
  const std::vector<std::string> classes{"plane", "ship", "helipad", "bridge"};
  for (int i = 0; i < 25; ++i) {
    std::vector<ObjectRecord> objects;
    const int n = static_cast<int>(rng.uniform_int(0, 8));
    for (int k = 0; k < n; ++k) {
      const double x = rng.uniform_real(0, 400), y = rng.uniform_real(0, 300);
      objects.push_back(box(x, y, x + rng.uniform_real(2, 90), y + rng.uniform_real(2, 90),
                            classes[rng.uniform_index(classes.size())], rng.uniform_index(5) == 0));
    }
    testing::add_image(dir / "ds", "img" + std::to_string(i), 500, 400, objects, true, i);
  }
  const DatasetIndex ds = discover_dataset(dir / "ds");
  write_coco_dataset(ds, dir / "coco.json");
  const auto doc = nlohmann::json::parse(testing::read_file(dir / "coco.json"));

  std::map<std::string, std::size_t> src_counts, coco_counts;
  double src_area = 0, coco_area = 0;
  for (const auto& im : ds.images) {
    for (const auto& obj : im.objects) {
      ++src_counts[obj.class_name];
      src_area += obj.hbox.area();
    }
  }
  std::map<long, std::string> category;
  for (const auto& c : doc["categories"]) category[c["id"].get<long>()] = c["name"];
  for (const auto& a : doc["annotations"]) {
    ++coco_counts[category.at(a["category_id"].get<long>())];
    coco_area += a["area"].get<double>();
  }
  const double rel = std::fabs(coco_area - src_area) / src_area;

  const auto schema = nlohmann::json::parse(testing::read_file(AERIALSYNTH_COCO_SCHEMA));
  const auto errors = testing::SchemaValidator().validate(schema, doc);

  Verdict v;
  v.expect(doc["annotations"].size() == ds.object_count(), "annotation count");
  v.expect(doc["images"].size() == ds.images.size(), "image count");
  v.expect(coco_counts == src_counts, "per-class counts");
  v.expect(rel <= 1e-6, fmt("area relative error %.3g", rel));
  v.expect(errors.empty(), errors.empty() ? "" : "schema: " + errors.front());
  return v.outcome(std::to_string(ds.object_count()) + " annotations, " +
                   std::to_string(src_counts.size()) + " classes, area rel. error " +
                   fmt("%.2g", rel) + ", schema errors " + std::to_string(errors.size()));
}

}  // namespace
}  // namespace aerialsynth

int main() {
  using aerialsynth::Outcome;
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"tiling-parameters", aerialsynth::tiling_parameters},
      {"roi-margin", aerialsynth::roi_margin},
      {"sampling-constraints", aerialsynth::sampling_constraints},
      {"prompt-contract", aerialsynth::prompt_contract},
      {"composition-geometry", aerialsynth::composition_geometry},
      {"determinism", aerialsynth::determinism},
      {"dota-round-trip", aerialsynth::dota_round_trip},
      {"long-tail-policy", aerialsynth::long_tail_policy},
      {"coco-export", aerialsynth::coco_export},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.pass;
    std::printf("%s  %-22s %s\n", o.pass ? "PASS" : "FAIL", name, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}

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

#include "aerialsynth/compositor.hpp"

#include <cmath>

#include <gtest/gtest.h>

#include "aerialsynth/dota_io.hpp"
#include "aerialsynth/error.hpp"
#include "test_util.hpp"

namespace aerialsynth {
namespace {

using testing::add_image;
using testing::box;
using testing::snapshot_tree;
using testing::TempDir;

StatsMap stats_from_boxes(const std::vector<ObjectRecord>& objects) {
  DatasetIndex ds;
  ds.images.push_back({"src", "src.png", 4096, 4096, objects});
  assign_class_names(ds);
  return compute_class_stats(ds);
}

// Every integer position for a w x h box, checked against the same rules.
int feasible_positions(int bg_w, int bg_h, const std::vector<HBox>& occupied, int w, int h,
                       double iou_max) {
  int n = 0;
  for (int y = 0; y + h <= bg_h; ++y) {
    for (int x = 0; x + w <= bg_w; ++x) {
      const HBox b{double(x), double(y), double(x + w), double(y + h)};
      bool ok = true;
      for (const auto& o : occupied) ok = ok && iou(b, o) <= iou_max;
      n += ok;
    }
  }
  return n;
}

TEST(GeometryTest, SquareAndElongatedWithoutJitter) {
  CompositionConfig cfg;
  cfg.geometry_jitter = 0.0;
  Rng rng(1);
  const auto square = stats_from_boxes({box(0, 0, 20, 20, "tank")});
  EXPECT_EQ(sample_target_geometry(square.at("tank"), cfg, rng), (TargetSize{20, 20}));
  const auto wide = stats_from_boxes({box(0, 0, 40, 10, "bridge")});
  EXPECT_EQ(sample_target_geometry(wide.at("bridge"), cfg, rng), (TargetSize{40, 10}));
}

TEST(GeometryTest, JitterStaysNearADrawnSample) {
  const auto stats = stats_from_boxes({box(0, 0, 10, 10, "ship"), box(0, 0, 40, 40, "ship")});
  const auto& s = stats.at("ship");
  CompositionConfig cfg;
  Rng rng(42);
  for (int i = 0; i < 2000; ++i) {
    const auto g = draw_geometry(s, cfg, rng);
    const bool near_small = g.area >= 100 && g.area <= 110;
    const bool near_large = g.area >= 1440 && g.area <= 1600;
    EXPECT_TRUE(near_small || near_large) << g.area;
    EXPECT_DOUBLE_EQ(g.aspect, 1.0);
  }
}

TEST(GeometryTest, SnappedSizesRespectClassRanges) {
  const auto stats = stats_from_boxes({box(0, 0, 31, 9, "v"), box(0, 0, 12, 17, "v"),
                                       box(0, 0, 55.5, 20.25, "v"), box(0, 0, 8, 8, "v")});
  const auto& s = stats.at("v");
  CompositionConfig cfg;
  Rng rng(3);
  for (int i = 0; i < 3000; ++i) {
    const auto t = sample_target_geometry(s, cfg, rng);
    EXPECT_TRUE(s.area_range.contains(double(t.width) * t.height));
    EXPECT_TRUE(s.aspect_range.contains(double(t.width) / t.height));
  }
}

TEST(GeometryTest, EmptyStatsThrow) {
  ClassStats empty;
  empty.class_name = "none";
  Rng rng(1);
  EXPECT_THROW(draw_geometry(empty, {}, rng), CompositionError);
}

TEST(PlacementTest, EmptyBackgroundAndOversizedTarget) {
  CompositionConfig cfg;
  Rng rng(5);
  const auto b = place_instance(100, 80, {}, 30, 20, cfg, rng);
  ASSERT_TRUE(b.has_value());
  EXPECT_EQ(b->width(), 30);
  EXPECT_LE(b->xmax, 100);
  EXPECT_LE(b->ymax, 80);
  EXPECT_FALSE(place_instance(100, 80, {}, 101, 20, cfg, rng).has_value());
  EXPECT_FALSE(place_instance(100, 80, {}, 30, 81, cfg, rng).has_value());
}

TEST(PlacementTest, FullyCoveredCanvasHasNoSlot) {
  const std::vector<HBox> occupied{{0, 0, 10, 10}};
  ASSERT_EQ(feasible_positions(10, 10, occupied, 3, 3, 0.05), 0);
  CompositionConfig cfg;
  cfg.max_placement_attempts = 500;
  Rng rng(9);
  EXPECT_FALSE(place_instance(10, 10, occupied, 3, 3, cfg, rng).has_value());
}

TEST(PlacementTest, ResultsAgreeWithExhaustiveCheck) {
  const std::vector<HBox> occupied{{0, 0, 40, 64}, {50, 10, 60, 20}};
  ASSERT_GT(feasible_positions(64, 64, occupied, 8, 8, 0.05), 0);
  CompositionConfig cfg;
  Rng rng(11);
  int placed = 0;
  for (int i = 0; i < 300; ++i) {
    const auto b = place_instance(64, 64, occupied, 8, 8, cfg, rng);
    if (!b) continue;
    ++placed;
    for (const auto& o : occupied) EXPECT_LE(iou(*b, o), 0.05);
  }
  EXPECT_GT(placed, 250);
}

TEST(PlacementTest, DisjointBoxesAreNeverTouched) {
  const std::vector<HBox> pasted{{10, 10, 30, 30}};
  CompositionConfig cfg;
  Rng rng(2);
  for (int i = 0; i < 300; ++i) {
    const auto b = place_instance(40, 40, pasted, 8, 8, cfg, rng, pasted);
    if (b) EXPECT_EQ(intersection_area(*b, pasted[0]), 0.0);
  }
}

class ComposeTest : public ::testing::Test {
 protected:
  void SetUp() override {
    pool_ = make_mock_pool({"helipad", "plane"}, 4, 1, dir_ / "pool");
    stats_ = stats_from_boxes({box(0, 0, 20, 20, "helipad"), box(0, 0, 30, 24, "helipad"),
                               box(0, 0, 40, 30, "plane"), box(0, 0, 25, 36, "plane")});
  }

  TempDir dir_;
  PoolIndex pool_;
  StatsMap stats_;
  PoolImageCache cache_;
};

TEST_F(ComposeTest, SinglePasteOnNegativeTile) {
  const ImageRecord bg{"neg", "neg.png", 256, 256, {}};
  const Image pixels = testing::textured_image(256, 256);
  CompositionConfig cfg;
  cfg.instances_min = cfg.instances_max = 1;
  Rng rng(7);
  const auto comp = compose_image(bg, pixels, pool_, stats_, cfg, rng, cache_);
  ASSERT_EQ(comp.plan.placements.size(), 1u);
  ASSERT_EQ(comp.objects.size(), 1u);
  EXPECT_EQ(comp.objects[0].hbox, comp.plan.placements[0].target);
  EXPECT_EQ(comp.objects[0].class_name, comp.plan.placements[0].entry.class_name);
  EXPECT_FALSE(comp.objects[0].difficult);
  EXPECT_EQ(comp.plan.requested, 1);
}

TEST_F(ComposeTest, ClassFilterRestrictsPastes) {
  const ImageRecord bg{"neg", "neg.png", 256, 256, {}};
  const Image pixels(256, 256);
  CompositionConfig cfg;
  cfg.class_filter = {"helipad"};
  Rng rng(8);
  for (int i = 0; i < 20; ++i) {
    for (const auto& obj : compose_image(bg, pixels, pool_, stats_, cfg, rng, cache_).objects) {
      EXPECT_EQ(obj.class_name, "helipad");
    }
  }
  cfg.class_filter = {"ship"};
  EXPECT_THROW(compose_image(bg, pixels, pool_, stats_, cfg, rng, cache_), CompositionError);
}

TEST_F(ComposeTest, CrowdedBackgroundKeepsGroundTruthAndRules) {
  ImageRecord bg{"busy", "busy.png", 128, 128, {}};
  for (int y = 0; y < 128; y += 32) {
    for (int x = 0; x < 128; x += 64) bg.objects.push_back(box(x, y, x + 40, y + 28, "ship"));
  }
  const Image pixels = testing::textured_image(128, 128);
  CompositionConfig cfg;
  cfg.instances_min = cfg.instances_max = 3;
  Rng rng(4);
  for (int trial = 0; trial < 30; ++trial) {
    const auto comp = compose_image(bg, pixels, pool_, stats_, cfg, rng, cache_);
    EXPECT_EQ(comp.plan.requested, 3);
    EXPECT_EQ(comp.plan.failed + int(comp.plan.placements.size()), 3);
    ASSERT_EQ(comp.objects.size(), bg.objects.size() + comp.plan.placements.size());
    for (std::size_t i = 0; i < bg.objects.size(); ++i) EXPECT_EQ(comp.objects[i], bg.objects[i]);
    const auto& ps = comp.plan.placements;
    for (std::size_t i = 0; i < ps.size(); ++i) {
      for (const auto& gt : bg.objects) EXPECT_LE(iou(ps[i].target, gt.hbox), 0.05);
      for (std::size_t j = i + 1; j < ps.size(); ++j) {
        EXPECT_EQ(intersection_area(ps[i].target, ps[j].target), 0.0);
      }
    }
  }
}

TEST_F(ComposeTest, PastedPixelsEqualResizedPoolImage) {
  const ImageRecord bg{"neg", "neg.png", 200, 150, {}};
  const Image pixels = testing::textured_image(200, 150, 3);
  CompositionConfig cfg;
  cfg.instances_min = 2;
  cfg.instances_max = 5;
  Rng rng(21);
  for (int trial = 0; trial < 10; ++trial) {
    const auto comp = compose_image(bg, pixels, pool_, stats_, cfg, rng, cache_);
    Image expected = pixels;
    for (const auto& p : comp.plan.placements) {
      const PixelRect r = covering_rect(p.target, 200, 150);
      const Image want = resize(read_image(p.entry.path), r.width, r.height);
      EXPECT_EQ(crop(comp.pixels, r), want);
      paste(expected, want, r.x, r.y);
    }
    EXPECT_EQ(comp.pixels, expected);
  }
}

TEST_F(ComposeTest, SyntheticSetIsDeterministic) {
  add_image(dir_ / "ds", "neg0", 160, 120, {}, true, 1);
  add_image(dir_ / "ds", "neg1", 96, 96, {}, true, 2);
  add_image(dir_ / "ds", "pos", 96, 96, {box(5, 5, 30, 30, "plane")});
  const auto ds = discover_dataset(dir_ / "ds");
  CompositionConfig cfg;
  cfg.seed = 99;

  const auto a = generate_synthetic_set(ds, pool_, stats_, cfg, 10, dir_ / "a", 1);
  generate_synthetic_set(ds, pool_, stats_, cfg, 10, dir_ / "b", 6);
  ASSERT_EQ(a.index.images.size(), 10u);
  EXPECT_EQ(a.index.images[3].image_id, "synth_00000003");
  for (const auto& plan : a.plans) EXPECT_NE(plan.background_image_id, "pos");
  EXPECT_EQ(snapshot_tree(dir_ / "a"), snapshot_tree(dir_ / "b"));

  const auto reread = discover_dataset(dir_ / "a");
  ASSERT_EQ(reread.images.size(), 10u);
  for (std::size_t i = 0; i < 10; ++i) {
    EXPECT_EQ(reread.images[i].objects.size(), a.plans[i].placements.size());
  }

  cfg.seed = 100;
  generate_synthetic_set(ds, pool_, stats_, cfg, 10, dir_ / "c", 1);
  EXPECT_NE(testing::read_file(dir_ / "a/audit.jsonl"), testing::read_file(dir_ / "c/audit.jsonl"));
}

TEST_F(ComposeTest, NoBackgroundsIsAnError) {
  add_image(dir_ / "ds", "pos", 96, 96, {box(5, 5, 30, 30, "plane")});
  const auto ds = discover_dataset(dir_ / "ds");
  EXPECT_THROW(generate_synthetic_set(ds, pool_, stats_, {}, 1, dir_ / "out"), CompositionError);
  CompositionConfig all;
  all.background_source = BackgroundSource::kAllTiles;
  EXPECT_EQ(generate_synthetic_set(ds, pool_, stats_, all, 2, dir_ / "out").index.images.size(),
            2u);
}

TEST(AuditRecordTest, Shape) {
  PastePlan plan{"bg", 2, 1, {{{"plane", 3, 4, "p.png", 10, 10}, {5, 6, 15, 16}}}};
  EXPECT_EQ(audit_record("synth_00000000", plan).dump(),
            "{\"image_id\":\"synth_00000000\",\"background\":\"bg\",\"requested\":2,"
            "\"placed\":1,\"failed\":1,\"placements\":[{\"class\":\"plane\",\"seed\":3,"
            "\"sample_index\":4,\"rect\":[5,6,15,16]}]}");
}

TEST(CompositionConfigTest, Validation) {
  CompositionConfig cfg;
  cfg.instances_min = 4;
  cfg.instances_max = 2;
  EXPECT_THROW(cfg.validate(), ConfigError);
  cfg = {};
  cfg.collision_iou_max = 1.0;
  EXPECT_THROW(cfg.validate(), ConfigError);
  EXPECT_THROW(parse_background_source("everything"), ConfigError);
}

}  // namespace
}  // namespace aerialsynth

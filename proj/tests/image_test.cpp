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

#include "aerialsynth/image.hpp"

#include <cmath>

#include <gtest/gtest.h>

#include "aerialsynth/error.hpp"
#include "test_util.hpp"

namespace aerialsynth {
namespace {

using testing::TempDir;
using testing::textured_image;

std::string jpeg_header(int sof_marker, int width, int height) {
  std::string s = "\xFF\xD8";
  // APP0 segment with a 14 byte payload.
  s += "\xFF\xE0";
  s += std::string("\x00\x10", 2);
  s += std::string("JFIF\0\x01\x01\x00\x00\x01\x00\x01\x00\x00", 14);
  s += '\xFF';
  s += static_cast<char>(sof_marker);
  s += std::string("\x00\x11\x08", 3);
  s += static_cast<char>(height >> 8);
  s += static_cast<char>(height & 0xFF);
  s += static_cast<char>(width >> 8);
  s += static_cast<char>(width & 0xFF);
  s += std::string(12, '\x01');
  return s;
}

TEST(ImageTest, PngRoundTripAndDeterministicBytes) {
  TempDir dir;
  const Image im = textured_image(37, 21, 4);
  write_png(dir / "a/b.png", im);
  write_png(dir / "c.png", im);
  EXPECT_EQ(read_image(dir / "a/b.png"), im);
  EXPECT_EQ(testing::read_file(dir / "a/b.png"), testing::read_file(dir / "c.png"));
  EXPECT_EQ(probe_image_size(dir / "c.png"), (ImageSize{37, 21}));
}

TEST(ImageTest, ProbeJpegBaselineAndProgressive) {
  TempDir dir;
  testing::write_file(dir / "a.jpg", jpeg_header(0xC0, 4000, 3000));
  testing::write_file(dir / "b.jpeg", jpeg_header(0xC2, 640, 480));
  EXPECT_EQ(probe_image_size(dir / "a.jpg"), (ImageSize{4000, 3000}));
  EXPECT_EQ(probe_image_size(dir / "b.jpeg"), (ImageSize{640, 480}));
}

TEST(ImageTest, ProbeRejectsGarbage) {
  TempDir dir;
  testing::write_file(dir / "x.png", "not an image at all");
  testing::write_file(dir / "t.png", std::string("\x89PNG\r\n\x1a\n\0\0", 10));
  EXPECT_THROW(probe_image_size(dir / "x.png"), IoError);
  EXPECT_THROW(probe_image_size(dir / "t.png"), IoError);
  EXPECT_THROW(probe_image_size(dir / "missing.png"), IoError);
  EXPECT_THROW(read_image(dir / "x.png"), IoError);
}

TEST(ResizeTest, IdentityIsCopy) {
  const Image im = textured_image(9, 5);
  EXPECT_EQ(resize(im, 9, 5), im);
}

TEST(ResizeTest, HalvingAveragesTwoByTwoBlocks) {
  const Image im = textured_image(8, 6, 11);
  const Image out = resize(im, 4, 3);
  for (int y = 0; y < 3; ++y) {
    for (int x = 0; x < 4; ++x) {
      for (int c = 0; c < 3; ++c) {
        const double sum = im.row(2 * y)[3 * (2 * x) + c] + im.row(2 * y)[3 * (2 * x + 1) + c] +
                           im.row(2 * y + 1)[3 * (2 * x) + c] +
                           im.row(2 * y + 1)[3 * (2 * x + 1) + c];
        EXPECT_EQ(out.row(y)[3 * x + c], std::lround(sum / 4.0)) << x << "," << y;
      }
    }
  }
}

TEST(ResizeTest, BilinearDoublingOfTwoPixels) {
  Image im(2, 1);
  im.row(0)[0] = 0;
  im.row(0)[3] = 200;
  const Image out = resize(im, 4, 1);
  // Centers map to -0.25 (clamped), 0.25, 0.75, 1.25 (clamped).
  EXPECT_EQ(out.row(0)[0], 0);
  EXPECT_EQ(out.row(0)[3], 50);
  EXPECT_EQ(out.row(0)[6], 150);
  EXPECT_EQ(out.row(0)[9], 200);
}

TEST(ResizeTest, ConstantImageStaysConstantForAnyScale) {
  Image im(13, 7);
  im.fill(10, 120, 250);
  for (auto [w, h] : {std::pair{1, 1}, {5, 3}, {40, 2}, {3, 29}, {26, 14}}) {
    const Image out = resize(im, w, h);
    ASSERT_EQ(out.width(), w);
    ASSERT_EQ(out.height(), h);
    for (int y = 0; y < h; ++y) {
      for (int x = 0; x < w; ++x) {
        EXPECT_EQ(out.row(y)[3 * x + 0], 10);
        EXPECT_EQ(out.row(y)[3 * x + 1], 120);
        EXPECT_EQ(out.row(y)[3 * x + 2], 250);
      }
    }
  }
}

TEST(ImageTest, CropPasteAndCoveringRect) {
  const Image im = textured_image(20, 10);
  const Image patch = crop(im, {3, 2, 5, 4});
  EXPECT_EQ(patch.row(0)[0], im.row(2)[9]);
  Image canvas(20, 10);
  paste(canvas, patch, 3, 2);
  EXPECT_EQ(crop(canvas, {3, 2, 5, 4}), patch);
  EXPECT_THROW(crop(im, {18, 0, 5, 4}), GeometryError);
  EXPECT_THROW(paste(canvas, patch, 16, 0), GeometryError);
  EXPECT_EQ(covering_rect({1.5, 2.2, 4.1, 9.0}, 20, 10), (PixelRect{1, 2, 4, 7}));
  EXPECT_EQ(covering_rect({-3, -1, 30, 30}, 20, 10), (PixelRect{0, 0, 20, 10}));
}

}  // namespace
}  // namespace aerialsynth

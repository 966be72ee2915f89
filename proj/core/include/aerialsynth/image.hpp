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
#include <filesystem>
#include <vector>

#include "aerialsynth/geometry.hpp"

namespace aerialsynth {

struct ImageSize {
  int width = 0;
  int height = 0;

  friend bool operator==(const ImageSize&, const ImageSize&) = default;
};

// Pixel rectangle, half-open: columns [x, x + width), rows [y, y + height).
struct PixelRect {
  int x = 0;
  int y = 0;
  int width = 0;
  int height = 0;

  HBox to_hbox() const noexcept {
    return {static_cast<double>(x), static_cast<double>(y),
            static_cast<double>(x + width), static_cast<double>(y + height)};
  }
  friend bool operator==(const PixelRect&, const PixelRect&) = default;
};

// Interleaved 8-bit image, three channels in BGR order.
class Image {
 public:
  static constexpr int kChannels = 3;

  Image() = default;
  Image(int width, int height);

  int width() const noexcept { return width_; }
  int height() const noexcept { return height_; }
  bool empty() const noexcept { return pixels_.empty(); }

  std::uint8_t* row(int y) noexcept {
    return pixels_.data() + static_cast<std::size_t>(y) * stride();
  }
  const std::uint8_t* row(int y) const noexcept {
    return pixels_.data() + static_cast<std::size_t>(y) * stride();
  }
  std::size_t stride() const noexcept {
    return static_cast<std::size_t>(width_) * kChannels;
  }
  const std::vector<std::uint8_t>& data() const noexcept { return pixels_; }
  std::vector<std::uint8_t>& data() noexcept { return pixels_; }

  void fill(std::uint8_t b, std::uint8_t g, std::uint8_t r);
  void fill_rect(const PixelRect& rect, std::uint8_t b, std::uint8_t g,
                 std::uint8_t r);

  friend bool operator==(const Image&, const Image&) = default;

 private:
  int width_ = 0;
  int height_ = 0;
  std::vector<std::uint8_t> pixels_;
};

// Reads width and height from a PNG or JPEG header without decoding pixel
// data. Throws IoError for unreadable files or unsupported formats.
ImageSize probe_image_size(const std::filesystem::path& path);

bool is_supported_image(const std::filesystem::path& path);

// Decodes PNG or JPEG into 3-channel BGR. Throws IoError on failure.
Image read_image(const std::filesystem::path& path);

// Writes a PNG with fixed encoder settings so identical pixels always give
// identical bytes. Creates parent directories. Throws IoError.
void write_png(const std::filesystem::path& path, const Image& image);

// Copy of `rect`, which must lie inside the image.
Image crop(const Image& image, const PixelRect& rect);

// Separable resampler. Each axis that shrinks uses area averaging (box
// filter with fractional coverage); each axis that grows uses bilinear
// interpolation on pixel centers. Same size returns a copy.
Image resize(const Image& image, int width, int height);

// Overwrites the destination region with `patch`; no blending.
void paste(Image& dst, const Image& patch, int x, int y);

// Smallest integer pixel rectangle that covers `box`, clipped to the image.
PixelRect covering_rect(const HBox& box, int image_width, int image_height);

}  // namespace aerialsynth

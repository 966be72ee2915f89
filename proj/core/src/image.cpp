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

#include <algorithm>
#include <array>
#include <cmath>
#include <cstring>
#include <fstream>

#include <opencv2/core.hpp>
#include <opencv2/imgcodecs.hpp>

#include "aerialsynth/error.hpp"

namespace aerialsynth {
namespace {

std::string lower_extension(const std::filesystem::path& p) {
  std::string ext = p.extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return ext;
}

std::uint32_t read_be32(const unsigned char* p) {
  return (std::uint32_t{p[0]} << 24) | (std::uint32_t{p[1]} << 16) |
         (std::uint32_t{p[2]} << 8) | std::uint32_t{p[3]};
}

std::uint16_t read_be16(const unsigned char* p) {
  return static_cast<std::uint16_t>((p[0] << 8) | p[1]);
}

ImageSize probe_png(std::ifstream& in, const std::filesystem::path& path) {
  // 8-byte signature, then IHDR: length(4) type(4) width(4) height(4).
  std::array<unsigned char, 24> head{};
  in.read(reinterpret_cast<char*>(head.data()), head.size());
  if (in.gcount() != static_cast<std::streamsize>(head.size()) ||
      std::memcmp(head.data() + 12, "IHDR", 4) != 0) {
    throw IoError("truncated PNG header: " + path.string());
  }
  const auto w = read_be32(head.data() + 16);
  const auto h = read_be32(head.data() + 20);
  if (w == 0 || h == 0 || w > 0x7fffffffU || h > 0x7fffffffU) {
    throw IoError("invalid PNG dimensions: " + path.string());
  }
  return {static_cast<int>(w), static_cast<int>(h)};
}

ImageSize probe_jpeg(std::ifstream& in, const std::filesystem::path& path) {
  in.seekg(2);
  auto fail = [&]() -> ImageSize {
    throw IoError("no frame header in JPEG: " + path.string());
  };
  for (;;) {
    int c = in.get();
    if (c == EOF) return fail();
    if (c != 0xFF) continue;
    int marker;
    do {
      marker = in.get();
    } while (marker == 0xFF);
    if (marker == EOF) return fail();
    // Standalone markers carry no length.
    if (marker == 0x01 || (marker >= 0xD0 && marker <= 0xD7)) continue;
    if (marker == 0xD9 || marker == 0xDA) return fail();
    std::array<unsigned char, 2> len_bytes{};
    in.read(reinterpret_cast<char*>(len_bytes.data()), 2);
    if (in.gcount() != 2) return fail();
    const int len = read_be16(len_bytes.data());
    if (len < 2) return fail();
    const bool sof = marker >= 0xC0 && marker <= 0xCF && marker != 0xC4 &&
                     marker != 0xC8 && marker != 0xCC;
    if (sof) {
      std::array<unsigned char, 5> frame{};
      in.read(reinterpret_cast<char*>(frame.data()), frame.size());
      if (in.gcount() != static_cast<std::streamsize>(frame.size())) {
        return fail();
      }
      const int h = read_be16(frame.data() + 1);
      const int w = read_be16(frame.data() + 3);
      if (w == 0 || h == 0) {
        throw IoError("invalid JPEG dimensions: " + path.string());
      }
      return {w, h};
    }
    in.seekg(len - 2, std::ios::cur);
  }
}

struct Tap {
  int index;
  double weight;
};

// Source taps for every destination sample along one axis.
std::vector<std::vector<Tap>> axis_taps(int src, int dst) {
  std::vector<std::vector<Tap>> taps(dst);
  if (dst == src) {
    for (int i = 0; i < dst; ++i) taps[i] = {{i, 1.0}};
  } else if (dst < src) {
    const double scale = static_cast<double>(src) / dst;
    for (int i = 0; i < dst; ++i) {
      const double lo = i * scale;
      const double hi = (i + 1) * scale;
      const int first = static_cast<int>(std::floor(lo));
      const int last = std::min(src - 1, static_cast<int>(std::ceil(hi)) - 1);
      for (int s = first; s <= last; ++s) {
        const double cover = std::min(hi, s + 1.0) - std::max(lo, double(s));
        if (cover > 0) taps[i].push_back({s, cover / scale});
      }
    }
  } else {
    const double scale = static_cast<double>(src) / dst;
    for (int i = 0; i < dst; ++i) {
      const double pos =
          std::clamp((i + 0.5) * scale - 0.5, 0.0, double(src - 1));
      const int x0 = static_cast<int>(std::floor(pos));
      const int x1 = std::min(x0 + 1, src - 1);
      const double t = pos - x0;
      if (x1 == x0 || t == 0.0) {
        taps[i] = {{x0, 1.0}};
      } else {
        taps[i] = {{x0, 1.0 - t}, {x1, t}};
      }
    }
  }
  return taps;
}

}  // namespace

Image::Image(int width, int height)
    : width_(width),
      height_(height),
      pixels_(static_cast<std::size_t>(width) * height * kChannels, 0) {
  if (width <= 0 || height <= 0) {
    throw std::invalid_argument("image dimensions must be positive");
  }
}

void Image::fill(std::uint8_t b, std::uint8_t g, std::uint8_t r) {
  fill_rect({0, 0, width_, height_}, b, g, r);
}

void Image::fill_rect(const PixelRect& rect, std::uint8_t b, std::uint8_t g,
                      std::uint8_t r) {
  const int x0 = std::max(0, rect.x);
  const int y0 = std::max(0, rect.y);
  const int x1 = std::min(width_, rect.x + rect.width);
  const int y1 = std::min(height_, rect.y + rect.height);
  for (int y = y0; y < y1; ++y) {
    std::uint8_t* p = row(y) + static_cast<std::size_t>(x0) * kChannels;
    for (int x = x0; x < x1; ++x, p += kChannels) {
      p[0] = b;
      p[1] = g;
      p[2] = r;
    }
  }
}

bool is_supported_image(const std::filesystem::path& path) {
  const auto ext = lower_extension(path);
  return ext == ".png" || ext == ".jpg" || ext == ".jpeg";
}

ImageSize probe_image_size(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open image: " + path.string());
  std::array<unsigned char, 8> sig{};
  in.read(reinterpret_cast<char*>(sig.data()), sig.size());
  if (in.gcount() >= 8 &&
      std::memcmp(sig.data(), "\x89PNG\r\n\x1a\n", 8) == 0) {
    in.seekg(0);
    return probe_png(in, path);
  }
  if (in.gcount() >= 3 && sig[0] == 0xFF && sig[1] == 0xD8 && sig[2] == 0xFF) {
    in.clear();
    return probe_jpeg(in, path);
  }
  throw IoError("unrecognized image header: " + path.string());
}

Image read_image(const std::filesystem::path& path) {
  cv::Mat mat = cv::imread(path.string(), cv::IMREAD_COLOR);
  if (mat.empty() || mat.type() != CV_8UC3) {
    throw IoError("cannot decode image: " + path.string());
  }
  Image out(mat.cols, mat.rows);
  for (int y = 0; y < mat.rows; ++y) {
    std::memcpy(out.row(y), mat.ptr<std::uint8_t>(y), out.stride());
  }
  return out;
}

void write_png(const std::filesystem::path& path, const Image& image) {
  if (image.empty()) throw IoError("refusing to write empty image: " + path.string());
  std::error_code ec;
  if (path.has_parent_path()) {
    std::filesystem::create_directories(path.parent_path(), ec);
  }
  const cv::Mat mat(image.height(), image.width(), CV_8UC3,
                    const_cast<std::uint8_t*>(image.data().data()),
                    image.stride());
  std::vector<std::uint8_t> bytes;
  const std::vector<int> params{cv::IMWRITE_PNG_COMPRESSION, 3};
  if (!cv::imencode(".png", mat, bytes, params)) {
    throw IoError("PNG encoding failed: " + path.string());
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) throw IoError("cannot write " + path.string());
}

Image crop(const Image& image, const PixelRect& rect) {
  if (rect.x < 0 || rect.y < 0 || rect.width <= 0 || rect.height <= 0 ||
      rect.x + rect.width > image.width() ||
      rect.y + rect.height > image.height()) {
    throw GeometryError("crop rectangle outside image");
  }
  Image out(rect.width, rect.height);
  for (int y = 0; y < rect.height; ++y) {
    std::memcpy(out.row(y),
                image.row(rect.y + y) +
                    static_cast<std::size_t>(rect.x) * Image::kChannels,
                out.stride());
  }
  return out;
}

Image resize(const Image& image, int width, int height) {
  if (width == image.width() && height == image.height()) return image;
  const auto xt = axis_taps(image.width(), width);
  const auto yt = axis_taps(image.height(), height);
  constexpr int C = Image::kChannels;

  // Horizontal pass into a float buffer of width x source height.
  std::vector<double> tmp(static_cast<std::size_t>(width) * image.height() * C);
  for (int y = 0; y < image.height(); ++y) {
    const std::uint8_t* src = image.row(y);
    double* dst = tmp.data() + static_cast<std::size_t>(y) * width * C;
    for (int x = 0; x < width; ++x) {
      for (int c = 0; c < C; ++c) {
        double acc = 0.0;
        for (const auto& t : xt[x]) acc += t.weight * src[t.index * C + c];
        dst[x * C + c] = acc;
      }
    }
  }

  Image out(width, height);
  for (int y = 0; y < height; ++y) {
    std::uint8_t* dst = out.row(y);
    for (int x = 0; x < width; ++x) {
      for (int c = 0; c < C; ++c) {
        double acc = 0.0;
        for (const auto& t : yt[y]) {
          acc += t.weight *
                 tmp[(static_cast<std::size_t>(t.index) * width + x) * C + c];
        }
        dst[x * C + c] =
            static_cast<std::uint8_t>(std::clamp(std::lround(acc), 0L, 255L));
      }
    }
  }
  return out;
}

void paste(Image& dst, const Image& patch, int x, int y) {
  if (x < 0 || y < 0 || x + patch.width() > dst.width() ||
      y + patch.height() > dst.height()) {
    throw GeometryError("paste region outside destination");
  }
  for (int r = 0; r < patch.height(); ++r) {
    std::memcpy(dst.row(y + r) + static_cast<std::size_t>(x) * Image::kChannels,
                patch.row(r), patch.stride());
  }
}

PixelRect covering_rect(const HBox& box, int image_width, int image_height) {
  const int x0 = std::clamp(static_cast<int>(std::floor(box.xmin)), 0, image_width);
  const int y0 = std::clamp(static_cast<int>(std::floor(box.ymin)), 0, image_height);
  const int x1 = std::clamp(static_cast<int>(std::ceil(box.xmax)), 0, image_width);
  const int y1 = std::clamp(static_cast<int>(std::ceil(box.ymax)), 0, image_height);
  return {x0, y0, x1 - x0, y1 - y0};
}

}  // namespace aerialsynth

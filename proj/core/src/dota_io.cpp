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

#include "aerialsynth/dota_io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include "aerialsynth/error.hpp"
#include "aerialsynth/image.hpp"
#include "aerialsynth/parallel.hpp"

namespace aerialsynth {
namespace fs = std::filesystem;
namespace {

bool starts_with(std::string_view s, std::string_view prefix) {
  return s.substr(0, prefix.size()) == prefix;
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

double parse_number(std::string_view tok, std::size_t line_no) {
  double v = 0.0;
  const char* first = tok.data();
  const char* last = tok.data() + tok.size();
  if (first != last && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last || !std::isfinite(v)) {
    throw ParseError(line_no, "bad coordinate '" + std::string(tok) + "'");
  }
  return v;
}

std::string read_text(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

std::vector<ObjectRecord> parse_dota_annotation(std::string_view text,
                                                std::string_view image_id) {
  std::vector<ObjectRecord> records;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    const auto tokens = split_ws(line);
    if (tokens.empty()) continue;
    if (starts_with(tokens[0], "imagesource") || starts_with(tokens[0], "gsd")) {
      continue;
    }
    if (tokens.size() != 10) {
      throw ParseError(line_no, "expected 10 tokens, found " +
                                    std::to_string(tokens.size()) + " in " +
                                    std::string(image_id));
    }
    QuadBox q;
    for (int i = 0; i < 4; ++i) {
      // Annotations routinely spill a pixel past the border.
      q.vertices[i].x = std::max(0.0, parse_number(tokens[2 * i], line_no));
      q.vertices[i].y = std::max(0.0, parse_number(tokens[2 * i + 1], line_no));
    }
    const std::string_view difficult = tokens[9];
    if (difficult != "0" && difficult != "1") {
      throw ParseError(line_no, "difficult flag must be 0 or 1");
    }
    if (tokens[8].empty()) throw ParseError(line_no, "empty class name");
    try {
      records.push_back(ObjectRecord::make(q, std::string(tokens[8]),
                                           difficult == "1"));
    } catch (const GeometryError& e) {
      throw ParseError(line_no, e.what());
    }
  }
  return records;
}

std::string format_coordinate(double value) {
  if (value == 0.0) return "0";  // also folds -0
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, ptr);
}

std::string write_dota_annotation(const std::vector<ObjectRecord>& records) {
  std::string out;
  for (const auto& r : records) {
    for (const auto& p : r.geometry.vertices) {
      out += format_coordinate(p.x);
      out += ' ';
      out += format_coordinate(p.y);
      out += ' ';
    }
    out += r.class_name;
    out += r.difficult ? " 1\n" : " 0\n";
  }
  return out;
}

std::vector<ObjectRecord> read_dota_file(const fs::path& path,
                                         std::string_view image_id) {
  return parse_dota_annotation(read_text(path), image_id);
}

void write_dota_file(const fs::path& path,
                     const std::vector<ObjectRecord>& records) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  const std::string text = write_dota_annotation(records);
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw IoError("cannot write " + path.string());
}

std::vector<std::string> read_class_list(const fs::path& path) {
  const std::string text = read_text(path);
  std::vector<std::string> names;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto tokens = split_ws(line);
    if (tokens.empty() || tokens[0].front() == '#') continue;
    names.emplace_back(tokens[0]);
  }
  return names;
}

fs::path image_path_for(const fs::path& root, std::string_view image_id) {
  return root / "images" / (std::string(image_id) + ".png");
}

fs::path annotation_path_for(const fs::path& root, std::string_view image_id) {
  return root / "annotations" / (std::string(image_id) + ".txt");
}

DatasetIndex discover_dataset(const fs::path& root,
                              const DiscoverOptions& options,
                              std::vector<std::string>* warnings) {
  DatasetIndex ds;
  ds.root = root;
  const fs::path images_dir = root / options.images_dir;
  const fs::path ann_dir = root / options.annotations_dir;

  std::map<std::string, fs::path> by_stem;
  std::error_code ec;
  if (fs::is_directory(images_dir, ec)) {
    for (const auto& entry : fs::directory_iterator(images_dir)) {
      if (!entry.is_regular_file() || !is_supported_image(entry.path())) continue;
      const std::string stem = entry.path().stem().string();
      const auto [it, inserted] = by_stem.emplace(stem, entry.path());
      if (!inserted) {
        throw IndexingError("duplicate image stem '" + stem + "': " +
                            it->second.filename().string() + " and " +
                            entry.path().filename().string());
      }
    }
  }

  ds.images.resize(by_stem.size());
  std::vector<std::size_t> dropped(by_stem.size(), 0);
  std::vector<std::pair<std::string, fs::path>> work(by_stem.begin(),
                                                     by_stem.end());
  parallel_for(work.size(), options.jobs, [&](std::size_t i) {
    const auto& [stem, path] = work[i];
    ImageRecord rec;
    rec.image_id = stem;
    rec.path = path;
    ImageSize size;
    try {
      size = probe_image_size(path);
    } catch (const IoError& e) {
      throw IndexingError(std::string("unreadable image header: ") + e.what());
    }
    rec.width = size.width;
    rec.height = size.height;
    const fs::path ann = ann_dir / (stem + ".txt");
    std::error_code fec;
    if (fs::is_regular_file(ann, fec)) {
      try {
        rec.objects = read_dota_file(ann, stem);
      } catch (const ParseError& e) {
        throw IndexingError(ann.string() + ": " + e.what());
      }
      for (auto& obj : rec.objects) {
        if (auto it = options.class_aliases.find(obj.class_name);
            it != options.class_aliases.end()) {
          obj.class_name = it->second;
        }
      }
      dropped[i] = clamp_objects_to_image(rec);
    }
    ds.images[i] = std::move(rec);
  });

  if (warnings) {
    for (std::size_t i = 0; i < dropped.size(); ++i) {
      if (dropped[i] > 0) {
        warnings->push_back(ds.images[i].image_id + ": dropped " +
                            std::to_string(dropped[i]) +
                            " object(s) lying outside the image");
      }
    }
  }
  assign_class_names(ds, options.declared_classes);
  return ds;
}

}  // namespace aerialsynth

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

#include "aerialsynth/instance_pool.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <regex>
#include <set>
#include <stdexcept>

#include "aerialsynth/error.hpp"
#include "aerialsynth/image.hpp"
#include "aerialsynth/parallel.hpp"
#include "aerialsynth/random.hpp"

namespace aerialsynth {
namespace fs = std::filesystem;
namespace {

bool entry_less(const PoolEntry& a, const PoolEntry& b) {
  if (a.seed != b.seed) return a.seed < b.seed;
  return a.sample_index < b.sample_index;
}

struct Bgr {
  std::uint8_t b, g, r;
};

// HSV with fixed saturation/value; hue in degrees.
Bgr hue_to_bgr(double hue, double sat, double val) {
  const double c = val * sat;
  const double hp = std::fmod(hue, 360.0) / 60.0;
  const double x = c * (1.0 - std::fabs(std::fmod(hp, 2.0) - 1.0));
  double r = 0, g = 0, b = 0;
  if (hp < 1) { r = c; g = x; }
  else if (hp < 2) { r = x; g = c; }
  else if (hp < 3) { g = c; b = x; }
  else if (hp < 4) { g = x; b = c; }
  else if (hp < 5) { r = x; b = c; }
  else { r = c; b = x; }
  const double m = val - c;
  auto to8 = [](double v) {
    return static_cast<std::uint8_t>(std::clamp(std::lround(v * 255.0), 0L, 255L));
  };
  return {to8(b + m), to8(g + m), to8(r + m)};
}

void check_class_dir_name(const std::string& name) {
  if (name.empty() || name == "." || name == ".." ||
      name.find_first_of("/\\") != std::string::npos) {
    throw std::invalid_argument("class name unusable as a directory: '" + name + "'");
  }
}

}  // namespace

std::size_t PoolIndex::size() const noexcept {
  std::size_t n = 0;
  for (const auto& [name, entries] : by_class) n += entries.size();
  return n;
}

std::size_t PoolIndex::count(const std::string& class_name) const noexcept {
  const auto it = by_class.find(class_name);
  return it == by_class.end() ? 0 : it->second.size();
}

std::vector<std::string> PoolIndex::class_names() const {
  std::vector<std::string> names;
  for (const auto& [name, entries] : by_class) {
    if (!entries.empty()) names.push_back(name);
  }
  return names;
}

std::string pool_file_name(std::int64_t seed, std::int64_t sample_index) {
  return "seed" + std::to_string(seed) + "_" + std::to_string(sample_index) + ".png";
}

PoolIndex ingest_pool(const fs::path& root, unsigned jobs) {
  std::error_code ec;
  if (!fs::is_directory(root, ec)) {
    throw EmptyPoolError("instance pool root is not a directory: " + root.string());
  }
  static const std::regex kName(R"(seed(\d+)_(\d+)\.png)");

  PoolIndex index;
  std::vector<PoolEntry> candidates;
  std::vector<fs::path> class_dirs;
  for (const auto& e : fs::directory_iterator(root)) {
    if (e.is_directory()) class_dirs.push_back(e.path());
  }
  std::sort(class_dirs.begin(), class_dirs.end());
  for (const auto& dir : class_dirs) {
    std::vector<fs::path> files;
    for (const auto& e : fs::directory_iterator(dir)) {
      if (e.is_regular_file()) files.push_back(e.path());
    }
    std::sort(files.begin(), files.end());
    for (const auto& f : files) {
      std::smatch m;
      const std::string fname = f.filename().string();
      if (!std::regex_match(fname, m, kName)) {
        index.warnings.push_back("ignored file not matching seed<k>_<i>.png: " +
                                 f.string());
        continue;
      }
      PoolEntry entry;
      entry.class_name = dir.filename().string();
      try {
        entry.seed = std::stoll(m[1].str());
        entry.sample_index = std::stoll(m[2].str());
      } catch (const std::out_of_range&) {
        index.warnings.push_back("seed or index out of range: " + f.string());
        continue;
      }
      entry.path = f;
      candidates.push_back(std::move(entry));
    }
  }

  std::vector<std::optional<std::string>> problems(candidates.size());
  parallel_for(candidates.size(), jobs, [&](std::size_t i) {
    try {
      const Image im = read_image(candidates[i].path);
      candidates[i].width = im.width();
      candidates[i].height = im.height();
    } catch (const Error& e) {
      problems[i] = std::string("skipped undecodable pool image: ") + e.what();
    }
  });

  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (problems[i]) {
      index.warnings.push_back(*problems[i]);
      continue;
    }
    index.by_class[candidates[i].class_name].push_back(std::move(candidates[i]));
  }
  for (auto& [name, entries] : index.by_class) {
    std::stable_sort(entries.begin(), entries.end(), entry_less);
    // seed01_2.png and seed1_2.png name the same sample; keep the first.
    auto dup = std::adjacent_find(entries.begin(), entries.end(),
                                  [](const PoolEntry& a, const PoolEntry& b) {
                                    return !entry_less(a, b);
                                  });
    while (dup != entries.end()) {
      index.warnings.push_back("duplicate pool sample ignored: " +
                               std::next(dup)->path.string());
      entries.erase(std::next(dup));
      dup = std::adjacent_find(entries.begin(), entries.end(),
                               [](const PoolEntry& a, const PoolEntry& b) {
                                 return !entry_less(a, b);
                               });
    }
  }
  if (index.size() == 0) {
    throw EmptyPoolError("no usable instance images under " + root.string());
  }
  return index;
}

PoolIndex make_mock_pool(const std::vector<std::string>& classes, int per_class,
                         std::uint64_t seed, const fs::path& out,
                         const MockPoolOptions& options) {
  if (per_class < 1) throw std::invalid_argument("per_class must be >= 1");
  if (options.min_side < 3 || options.max_side < options.min_side ||
      options.samples_per_seed < 1) {
    throw std::invalid_argument("invalid mock pool options");
  }
  const std::set<std::string> unique(classes.begin(), classes.end());
  PoolIndex index;
  for (const auto& name : unique) {
    check_class_dir_name(name);
    const double hue = static_cast<double>(stable_hash(name) % 360);
    const Bgr fill = hue_to_bgr(hue, 0.65, 0.85);
    const Bgr edge = hue_to_bgr(hue, 0.65, 0.45);
    const std::uint64_t class_seed = derive_seed(seed, name);
    auto& entries = index.by_class[name];
    for (int i = 0; i < per_class; ++i) {
      Rng rng(derive_seed(class_seed, static_cast<std::uint64_t>(i)));
      const int w = static_cast<int>(rng.uniform_int(options.min_side, options.max_side));
      const int h = static_cast<int>(rng.uniform_int(options.min_side, options.max_side));
      Image im(w, h);
      im.fill(edge.b, edge.g, edge.r);
      im.fill_rect({1, 1, w - 2, h - 2}, fill.b, fill.g, fill.r);

      PoolEntry entry;
      entry.class_name = name;
      entry.seed = i / options.samples_per_seed;
      entry.sample_index = i % options.samples_per_seed;
      entry.path = out / name / pool_file_name(entry.seed, entry.sample_index);
      entry.width = w;
      entry.height = h;
      write_png(entry.path, im);
      entries.push_back(std::move(entry));
    }
    std::sort(entries.begin(), entries.end(), entry_less);
  }
  return index;
}

}  // namespace aerialsynth

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

#include "aerialsynth/geometry.hpp"

#include <algorithm>
#include <cmath>

#include "aerialsynth/error.hpp"

namespace aerialsynth {

bool HBox::valid() const noexcept {
  return std::isfinite(xmin) && std::isfinite(ymin) && std::isfinite(xmax) &&
         std::isfinite(ymax) && xmin < xmax && ymin < ymax;
}

bool QuadBox::valid() const noexcept {
  for (const auto& p : vertices) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y) || p.x < 0 || p.y < 0) {
      return false;
    }
  }
  return !std::all_of(vertices.begin() + 1, vertices.end(),
                      [&](const Point& p) { return p == vertices[0]; });
}

HBox quad_to_hbox(const QuadBox& q) {
  if (!q.valid()) throw GeometryError("invalid quadrilateral");
  HBox b{q.vertices[0].x, q.vertices[0].y, q.vertices[0].x, q.vertices[0].y};
  for (const auto& p : q.vertices) {
    b.xmin = std::min(b.xmin, p.x);
    b.ymin = std::min(b.ymin, p.y);
    b.xmax = std::max(b.xmax, p.x);
    b.ymax = std::max(b.ymax, p.y);
  }
  if (!b.valid()) throw GeometryError("quadrilateral hull has zero area");
  return b;
}

QuadBox hbox_to_quad(const HBox& b) noexcept {
  return QuadBox{{Point{b.xmin, b.ymin}, Point{b.xmax, b.ymin},
                  Point{b.xmax, b.ymax}, Point{b.xmin, b.ymax}}};
}

double intersection_area(const HBox& a, const HBox& b) noexcept {
  const double w = std::min(a.xmax, b.xmax) - std::max(a.xmin, b.xmin);
  const double h = std::min(a.ymax, b.ymax) - std::max(a.ymin, b.ymin);
  if (w <= 0 || h <= 0) return 0.0;
  return w * h;
}

double iou(const HBox& a, const HBox& b) noexcept {
  const double inter = intersection_area(a, b);
  if (inter <= 0) return 0.0;
  const double uni = a.area() + b.area() - inter;
  if (uni <= 0) return 0.0;
  return std::clamp(inter / uni, 0.0, 1.0);
}

std::optional<ClipResult> clip_box(const HBox& b, const HBox& window) noexcept {
  const HBox c{std::max(b.xmin, window.xmin), std::max(b.ymin, window.ymin),
               std::min(b.xmax, window.xmax), std::min(b.ymax, window.ymax)};
  if (!(c.xmin < c.xmax) || !(c.ymin < c.ymax)) return std::nullopt;
  const double area = b.area();
  if (area <= 0) return std::nullopt;
  // Compare coordinates rather than areas so full containment gives exactly 1.
  const double fraction = c == b ? 1.0 : std::min(1.0, c.area() / area);
  return ClipResult{c, fraction};
}

bool contains(const HBox& outer, const HBox& inner) noexcept {
  return inner.xmin >= outer.xmin && inner.ymin >= outer.ymin &&
         inner.xmax <= outer.xmax && inner.ymax <= outer.ymax;
}

}  // namespace aerialsynth

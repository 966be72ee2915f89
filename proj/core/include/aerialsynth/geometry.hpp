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

#include <array>
#include <optional>

namespace aerialsynth {

// Axis-aligned box in image pixel space, origin top-left.
struct HBox {
  double xmin = 0.0;
  double ymin = 0.0;
  double xmax = 0.0;
  double ymax = 0.0;

  double width() const noexcept { return xmax - xmin; }
  double height() const noexcept { return ymax - ymin; }
  double area() const noexcept { return width() * height(); }
  bool valid() const noexcept;

  friend bool operator==(const HBox&, const HBox&) = default;
};

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point&, const Point&) = default;
};

// Oriented quadrilateral as stored in DOTA files, vertices in file order.
struct QuadBox {
  std::array<Point, 4> vertices{};

  // Finite, non-negative coordinates and not all four vertices equal.
  bool valid() const noexcept;

  friend bool operator==(const QuadBox&, const QuadBox&) = default;
};

struct ClipResult {
  HBox clipped;
  double visible_fraction = 0.0;
};

// Axis-aligned hull of the quad. Throws GeometryError when the hull has
// zero width or height.
HBox quad_to_hbox(const QuadBox& q);

// Corner quad of a box: (xmin,ymin) (xmax,ymin) (xmax,ymax) (xmin,ymax).
QuadBox hbox_to_quad(const HBox& b) noexcept;

double intersection_area(const HBox& a, const HBox& b) noexcept;

double iou(const HBox& a, const HBox& b) noexcept;

// Intersection of `b` with `window` plus the fraction of `b` that survived.
// Empty when the intersection has zero width or height.
std::optional<ClipResult> clip_box(const HBox& b, const HBox& window) noexcept;

// True when `inner` lies inside `outer` (edges may touch).
bool contains(const HBox& outer, const HBox& inner) noexcept;

}  // namespace aerialsynth

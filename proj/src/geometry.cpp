// Copyright 2026 The maiou Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "maiou/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace maiou {

Box::Box(double x1, double y1, double x2, double y2)
    : x1(x1), y1(y1), x2(x2), y2(y2) {
  if (!(std::isfinite(x1) && std::isfinite(y1) && std::isfinite(x2) &&
        std::isfinite(y2))) {
    throw std::invalid_argument("Box: coordinates must be finite");
  }
  if (!(x2 > x1 && y2 > y1)) {
    throw std::invalid_argument(
        "Box: requires x2 > x1 and y2 > y1, got (" + std::to_string(x1) +
        ", " + std::to_string(y1) + ", " + std::to_string(x2) + ", " +
        std::to_string(y2) + ")");
  }
}

double area(const Box& b) { return b.width() * b.height(); }

namespace {

double intersection_area(const Box& a, const Box& b) {
  const double w = std::min(a.x2, b.x2) - std::max(a.x1, b.x1);
  const double h = std::min(a.y2, b.y2) - std::max(a.y1, b.y1);
  if (w <= 0.0 || h <= 0.0) return 0.0;
  return w * h;
}

Box enclosing_box(const Box& a, const Box& b) {
  return Box(std::min(a.x1, b.x1), std::min(a.y1, b.y1), std::max(a.x2, b.x2),
             std::max(a.y2, b.y2));
}

}  // namespace

double iou(const Box& a, const Box& b) {
  const double inter = intersection_area(a, b);
  if (inter == 0.0) return 0.0;
  return inter / (area(a) + area(b) - inter);
}

double giou(const Box& a, const Box& b) {
  const double inter = intersection_area(a, b);
  const double uni = area(a) + area(b) - inter;
  const double enclosing = area(enclosing_box(a, b));
  return inter / uni - (enclosing - uni) / enclosing;
}

double diou(const Box& a, const Box& b) {
  const Box c = enclosing_box(a, b);
  const double diag_sq = c.width() * c.width() + c.height() * c.height();
  const double dx = a.center_x() - b.center_x();
  const double dy = a.center_y() - b.center_y();
  return iou(a, b) - (dx * dx + dy * dy) / diag_sq;
}

double center_distance(const Box& a, const Box& b) {
  const double dx = a.center_x() - b.center_x();
  const double dy = a.center_y() - b.center_y();
  return std::sqrt(dx * dx + dy * dy);
}

}  // namespace maiou

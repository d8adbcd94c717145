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

#ifndef MAIOU_GEOMETRY_HPP_
#define MAIOU_GEOMETRY_HPP_

namespace maiou {

// Axis-aligned rectangle in continuous pixel coordinates. x runs along
// columns, y along rows, origin at the top-left. Width and height are
// strictly positive; degenerate boxes are rejected at construction so the
// arithmetic below never has to special-case them.
struct Box {
  double x1;
  double y1;
  double x2;
  double y2;

  // Throws std::invalid_argument unless x2 > x1, y2 > y1 and all
  // coordinates are finite.
  Box(double x1, double y1, double x2, double y2);

  double width() const { return x2 - x1; }
  double height() const { return y2 - y1; }
  double center_x() const { return 0.5 * (x1 + x2); }
  double center_y() const { return 0.5 * (y1 + y2); }

  friend bool operator==(const Box&, const Box&) = default;
};

double area(const Box& b);

// Intersection area over union area; 0 for disjoint boxes.
double iou(const Box& a, const Box& b);

// iou(a,b) - (|C| - |a u b|) / |C| with C the minimum enclosing box.
// Range (-1, 1].
double giou(const Box& a, const Box& b);

// iou(a,b) - rho^2 / c^2 with rho the distance between box centers and c
// the diagonal of the minimum enclosing box. Range (-1, 1].
double diou(const Box& a, const Box& b);

// Euclidean distance between box centers.
double center_distance(const Box& a, const Box& b);

}  // namespace maiou

#endif  // MAIOU_GEOMETRY_HPP_

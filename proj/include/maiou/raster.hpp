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

#ifndef MAIOU_RASTER_HPP_
#define MAIOU_RASTER_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "maiou/geometry.hpp"

namespace maiou {

struct Point2 {
  double x;
  double y;
};

// Row-major binary grid of height x width pixels, each cell 0 or 1.
class BinaryMask {
 public:
  // All-zero mask.
  BinaryMask(int height, int width);
  // Takes ownership of `data` (size height*width, entries 0/1).
  BinaryMask(int height, int width, std::vector<std::uint8_t> data);

  int height() const { return height_; }
  int width() const { return width_; }
  bool at(int row, int col) const {
    return data_[static_cast<std::size_t>(row) * width_ + col] != 0;
  }
  void set(int row, int col, bool value) {
    data_[static_cast<std::size_t>(row) * width_ + col] = value ? 1 : 0;
  }
  std::span<const std::uint8_t> data() const { return data_; }

  friend bool operator==(const BinaryMask&, const BinaryMask&) = default;

 private:
  int height_;
  int width_;
  std::vector<std::uint8_t> data_;
};

// Prefix-sum table of a mask: an (m+1) x (n+1) grid whose entry (i, j)
// counts the mask pixels in rows < i and columns < j. Row 0 and column 0
// are all zero and the bottom-right entry is the total pixel count, which
// makes any rectangle sum a four-lookup query.
class IntegralImage {
 public:
  explicit IntegralImage(const BinaryMask& mask);

  int mask_height() const { return m_; }
  int mask_width() const { return n_; }
  // Table lookup, 0 <= i <= m, 0 <= j <= n.
  std::int64_t at(int i, int j) const {
    return table_[static_cast<std::size_t>(i) * (n_ + 1) + j];
  }

  friend bool operator==(const IntegralImage&, const IntegralImage&) = default;

 private:
  int m_;
  int n_;
  std::vector<std::int64_t> table_;
};

// Half-open integer pixel rectangle [x1, x2) x [y1, y2), validated against
// the grid it indexes: 0 <= x1 < x2 <= width and 0 <= y1 < y2 <= height.
struct PixelBox {
  int x1;
  int y1;
  int x2;
  int y2;

  PixelBox(int x1, int y1, int x2, int y2, int grid_height, int grid_width);

  std::int64_t area() const {
    return static_cast<std::int64_t>(x2 - x1) * (y2 - y1);
  }

  friend bool operator==(const PixelBox&, const PixelBox&) = default;
};

// Pixel (i, j) is set iff its center (j+0.5, i+0.5) lies inside the polygon
// under the even-odd rule; centers exactly on an edge resolve by half-open
// crossing counting. Throws InvalidAnnotationError for < 3 vertices.
BinaryMask rasterize_polygon(std::span<const Point2> vertices, int height,
                             int width);

// COCO uncompressed RLE: column-major runs alternating zero/one, starting
// with zeros. Throws InvalidAnnotationError unless counts sum to
// height*width.
BinaryMask decode_rle(std::span<const std::int64_t> counts, int height,
                      int width);

IntegralImage build_integral(const BinaryMask& mask);

// Total mask pixel count (the bottom-right table entry).
std::int64_t mask_total(const IntegralImage& ii);

// Mask pixels inside `pb`: T(y2,x2) + T(y1,x1) - T(y2,x1) - T(y1,x2).
std::int64_t mask_in_box(const IntegralImage& ii, const PixelBox& pb);

// Outer pixel cover of a continuous box: floor the low edges, ceil the high
// edges, clamp to the grid. Empty when the clipped cover has zero area.
std::optional<PixelBox> discretize(const Box& b, int grid_height,
                                   int grid_width);

// Overlap pixel count of two pixel boxes on the same grid.
std::int64_t pixel_overlap(const PixelBox& a, const PixelBox& b);

}  // namespace maiou

#endif  // MAIOU_RASTER_HPP_

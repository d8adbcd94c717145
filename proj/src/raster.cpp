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

#include "maiou/raster.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "maiou/errors.hpp"

namespace maiou {

namespace {

void check_dims(int height, int width) {
  if (height < 1 || width < 1) {
    throw std::invalid_argument("mask dimensions must be positive, got " +
                                std::to_string(height) + "x" +
                                std::to_string(width));
  }
}

}  // namespace

BinaryMask::BinaryMask(int height, int width)
    : height_(height),
      width_(width),
      data_(static_cast<std::size_t>(height) * width, 0) {
  check_dims(height, width);
}

BinaryMask::BinaryMask(int height, int width, std::vector<std::uint8_t> data)
    : height_(height), width_(width), data_(std::move(data)) {
  check_dims(height, width);
  if (data_.size() != static_cast<std::size_t>(height) * width) {
    throw std::invalid_argument("mask data size does not match dimensions");
  }
  for (std::uint8_t v : data_) {
    if (v > 1) {
      throw std::invalid_argument("mask cells must be 0 or 1");
    }
  }
}

IntegralImage::IntegralImage(const BinaryMask& mask)
    : m_(mask.height()),
      n_(mask.width()),
      table_(static_cast<std::size_t>(m_ + 1) * (n_ + 1), 0) {
  const std::size_t stride = static_cast<std::size_t>(n_) + 1;
  for (int i = 0; i < m_; ++i) {
    std::int64_t row_sum = 0;
    const std::int64_t* above = table_.data() + static_cast<std::size_t>(i) * stride;
    std::int64_t* current = table_.data() + static_cast<std::size_t>(i + 1) * stride;
    for (int j = 0; j < n_; ++j) {
      row_sum += mask.at(i, j) ? 1 : 0;
      current[j + 1] = above[j + 1] + row_sum;
    }
  }
}

PixelBox::PixelBox(int x1, int y1, int x2, int y2, int grid_height,
                   int grid_width)
    : x1(x1), y1(y1), x2(x2), y2(y2) {
  if (!(0 <= x1 && x1 < x2 && x2 <= grid_width && 0 <= y1 && y1 < y2 &&
        y2 <= grid_height)) {
    throw std::invalid_argument(
        "PixelBox: bounds (" + std::to_string(x1) + ", " + std::to_string(y1) +
        ", " + std::to_string(x2) + ", " + std::to_string(y2) +
        ") out of range for grid " + std::to_string(grid_height) + "x" +
        std::to_string(grid_width));
  }
}

BinaryMask rasterize_polygon(std::span<const Point2> vertices, int height,
                             int width) {
  check_dims(height, width);
  if (vertices.size() < 3) {
    throw InvalidAnnotationError("polygon needs at least 3 vertices, got " +
                                 std::to_string(vertices.size()));
  }

  BinaryMask mask(height, width);
  std::vector<double> crossings;
  for (int row = 0; row < height; ++row) {
    const double py = row + 0.5;
    crossings.clear();
    for (std::size_t e = 0; e < vertices.size(); ++e) {
      const Point2& a = vertices[e];
      const Point2& b = vertices[(e + 1) % vertices.size()];
      // Half-open vertical span so each vertex is counted once.
      if ((a.y <= py && py < b.y) || (b.y <= py && py < a.y)) {
        crossings.push_back(a.x + (py - a.y) / (b.y - a.y) * (b.x - a.x));
      }
    }
    std::sort(crossings.begin(), crossings.end());
    // A center px is inside iff an odd number of crossings lie strictly to
    // its right, i.e. px in [crossings[2t], crossings[2t+1]).
    for (std::size_t t = 0; t + 1 < crossings.size(); t += 2) {
      const int first =
          std::max(0, static_cast<int>(std::ceil(crossings[t] - 0.5)));
      const int last = std::min(
          width - 1, static_cast<int>(std::ceil(crossings[t + 1] - 0.5)) - 1);
      for (int col = first; col <= last; ++col) {
        mask.set(row, col, true);
      }
    }
  }
  return mask;
}

BinaryMask decode_rle(std::span<const std::int64_t> counts, int height,
                      int width) {
  check_dims(height, width);
  const std::int64_t expected =
      static_cast<std::int64_t>(height) * static_cast<std::int64_t>(width);
  std::int64_t sum = 0;
  for (std::int64_t c : counts) {
    if (c < 0) {
      throw InvalidAnnotationError("RLE counts must be non-negative");
    }
    sum += c;
  }
  if (sum != expected) {
    throw InvalidAnnotationError(
        "RLE counts sum to " + std::to_string(sum) + ", expected " +
        std::to_string(expected) + " for " + std::to_string(height) + "x" +
        std::to_string(width));
  }

  BinaryMask mask(height, width);
  std::int64_t pos = 0;
  bool value = false;  // runs start with zeros
  for (std::int64_t c : counts) {
    if (value) {
      for (std::int64_t k = 0; k < c; ++k) {
        const std::int64_t p = pos + k;
        // Column-major: linear index p maps to row p % height, col p / height.
        mask.set(static_cast<int>(p % height), static_cast<int>(p / height),
                 true);
      }
    }
    pos += c;
    value = !value;
  }
  return mask;
}

IntegralImage build_integral(const BinaryMask& mask) {
  return IntegralImage(mask);
}

std::int64_t mask_total(const IntegralImage& ii) {
  return ii.at(ii.mask_height(), ii.mask_width());
}

std::int64_t mask_in_box(const IntegralImage& ii, const PixelBox& pb) {
  return ii.at(pb.y2, pb.x2) + ii.at(pb.y1, pb.x1) - ii.at(pb.y2, pb.x1) -
         ii.at(pb.y1, pb.x2);
}

std::optional<PixelBox> discretize(const Box& b, int grid_height,
                                   int grid_width) {
  check_dims(grid_height, grid_width);
  // Clamp in the continuous domain first so huge coordinates cannot
  // overflow the integer cast.
  const double w = grid_width;
  const double h = grid_height;
  const int x1 = static_cast<int>(std::clamp(std::floor(b.x1), 0.0, w));
  const int x2 = static_cast<int>(std::clamp(std::ceil(b.x2), 0.0, w));
  const int y1 = static_cast<int>(std::clamp(std::floor(b.y1), 0.0, h));
  const int y2 = static_cast<int>(std::clamp(std::ceil(b.y2), 0.0, h));
  if (x2 <= x1 || y2 <= y1) {
    return std::nullopt;
  }
  return PixelBox(x1, y1, x2, y2, grid_height, grid_width);
}

std::int64_t pixel_overlap(const PixelBox& a, const PixelBox& b) {
  const std::int64_t w = std::min(a.x2, b.x2) - std::max(a.x1, b.x1);
  const std::int64_t h = std::min(a.y2, b.y2) - std::max(a.y1, b.y1);
  if (w <= 0 || h <= 0) return 0;
  return w * h;
}

}  // namespace maiou

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

#ifndef MAIOU_ANCHORS_HPP_
#define MAIOU_ANCHORS_HPP_

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "maiou/geometry.hpp"

namespace maiou {

// One anchor per (cell, scale, ratio) on every pyramid level. The defaults
// are the single square anchor configuration: one 1:1 anchor of side
// 4 * stride per location.
struct AnchorConfig {
  std::vector<int> strides{8, 16, 32, 64, 128};
  std::vector<double> scales{4.0};
  std::vector<double> ratios{1.0};
  double offset = 0.5;

  // Throws std::invalid_argument on empty lists, non-increasing strides,
  // non-positive entries, or offset outside [0, 1].
  void validate() const;
};

// rows = ceil(image_h / stride), cols = ceil(image_w / stride).
std::pair<int, int> level_dims(int image_h, int image_w, int stride);

// Dense anchor grids for one image size. Global anchor order is level-major,
// then row-major within the level, then per-location (scale-major, ratio
// within scale). Anchors are not clipped to the image.
class AnchorSet {
 public:
  struct Level {
    int stride = 0;
    int rows = 0;
    int cols = 0;
    std::size_t first = 0;  // global index of this level's first anchor
    std::size_t count = 0;
  };

  // Structured address of one anchor.
  struct Coords {
    int level;
    int row;
    int col;
    int slot;  // index into the per-location (scale, ratio) combinations

    friend bool operator==(const Coords&, const Coords&) = default;
  };

  static AnchorSet generate(int image_h, int image_w, const AnchorConfig& cfg);

  // Hand-built set for tests and small scenes: one entry per level, each a
  // level of explicit boxes (treated as a 1 x N grid, one anchor per cell).
  static AnchorSet from_boxes(std::vector<std::vector<Box>> per_level);

  std::size_t size() const { return boxes_.size(); }
  const Box& box(std::size_t flat) const { return boxes_[flat]; }
  std::span<const Box> boxes() const { return boxes_; }
  const std::vector<Level>& levels() const { return levels_; }
  int per_location() const { return per_location_; }

  int level_of(std::size_t flat) const;
  Coords coords(std::size_t flat) const;
  std::size_t flat_index(const Coords& c) const;

 private:
  std::vector<Box> boxes_;
  std::vector<Level> levels_;
  int per_location_ = 1;
};

}  // namespace maiou

#endif  // MAIOU_ANCHORS_HPP_

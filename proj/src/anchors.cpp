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

#include "maiou/anchors.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace maiou {

void AnchorConfig::validate() const {
  if (strides.empty() || scales.empty() || ratios.empty()) {
    throw std::invalid_argument(
        "AnchorConfig: strides, scales and ratios must be non-empty");
  }
  int prev = 0;
  for (int s : strides) {
    if (s <= prev) {
      throw std::invalid_argument(
          "AnchorConfig: strides must be positive and strictly increasing");
    }
    prev = s;
  }
  for (double s : scales) {
    if (!(s > 0.0)) {
      throw std::invalid_argument("AnchorConfig: scales must be positive");
    }
  }
  for (double r : ratios) {
    if (!(r > 0.0)) {
      throw std::invalid_argument("AnchorConfig: ratios must be positive");
    }
  }
  if (!(offset >= 0.0 && offset <= 1.0)) {
    throw std::invalid_argument("AnchorConfig: offset must lie in [0, 1]");
  }
}

std::pair<int, int> level_dims(int image_h, int image_w, int stride) {
  if (image_h < 1 || image_w < 1 || stride < 1) {
    throw std::invalid_argument("level_dims: inputs must be positive");
  }
  return {(image_h + stride - 1) / stride, (image_w + stride - 1) / stride};
}

AnchorSet AnchorSet::generate(int image_h, int image_w,
                              const AnchorConfig& cfg) {
  cfg.validate();
  AnchorSet set;
  set.per_location_ = static_cast<int>(cfg.scales.size() * cfg.ratios.size());

  std::size_t total = 0;
  for (int stride : cfg.strides) {
    const auto [rows, cols] = level_dims(image_h, image_w, stride);
    Level level;
    level.stride = stride;
    level.rows = rows;
    level.cols = cols;
    level.first = total;
    level.count = static_cast<std::size_t>(rows) * cols * set.per_location_;
    total += level.count;
    set.levels_.push_back(level);
  }
  set.boxes_.reserve(total);

  for (const Level& level : set.levels_) {
    const double s = level.stride;
    for (int row = 0; row < level.rows; ++row) {
      const double cy = (row + cfg.offset) * s;
      for (int col = 0; col < level.cols; ++col) {
        const double cx = (col + cfg.offset) * s;
        for (double scale : cfg.scales) {
          const double side = scale * s;
          for (double ratio : cfg.ratios) {
            const double w = side * std::sqrt(ratio);
            const double h = side / std::sqrt(ratio);
            set.boxes_.emplace_back(cx - 0.5 * w, cy - 0.5 * h, cx + 0.5 * w,
                                    cy + 0.5 * h);
          }
        }
      }
    }
  }
  return set;
}

AnchorSet AnchorSet::from_boxes(std::vector<std::vector<Box>> per_level) {
  AnchorSet set;
  set.per_location_ = 1;
  std::size_t total = 0;
  for (auto& boxes : per_level) {
    if (boxes.empty()) {
      throw std::invalid_argument("AnchorSet::from_boxes: empty level");
    }
    Level level;
    level.stride = 0;
    level.rows = 1;
    level.cols = static_cast<int>(boxes.size());
    level.first = total;
    level.count = boxes.size();
    total += level.count;
    set.levels_.push_back(level);
    for (const Box& b : boxes) set.boxes_.push_back(b);
  }
  return set;
}

int AnchorSet::level_of(std::size_t flat) const {
  for (std::size_t l = levels_.size(); l-- > 0;) {
    if (flat >= levels_[l].first) return static_cast<int>(l);
  }
  throw std::out_of_range("AnchorSet::level_of: index out of range");
}

AnchorSet::Coords AnchorSet::coords(std::size_t flat) const {
  if (flat >= boxes_.size()) {
    throw std::out_of_range("AnchorSet::coords: index " +
                            std::to_string(flat) + " out of range");
  }
  const int l = level_of(flat);
  const Level& level = levels_[l];
  std::size_t within = flat - level.first;
  const int slot = static_cast<int>(within % per_location_);
  within /= per_location_;
  const int col = static_cast<int>(within % level.cols);
  const int row = static_cast<int>(within / level.cols);
  return Coords{l, row, col, slot};
}

std::size_t AnchorSet::flat_index(const Coords& c) const {
  const Level& level = levels_.at(c.level);
  if (c.row < 0 || c.row >= level.rows || c.col < 0 || c.col >= level.cols ||
      c.slot < 0 || c.slot >= per_location_) {
    throw std::out_of_range("AnchorSet::flat_index: coords out of range");
  }
  return level.first +
         (static_cast<std::size_t>(c.row) * level.cols + c.col) *
             per_location_ +
         c.slot;
}

}  // namespace maiou

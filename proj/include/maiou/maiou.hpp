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

#ifndef MAIOU_MAIOU_HPP_
#define MAIOU_MAIOU_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "maiou/geometry.hpp"
#include "maiou/raster.hpp"

namespace maiou {

class AnchorSet;

// One annotated object: its box, its mask, and the mask's integral image
// built once at construction so every anchor query afterwards is four table
// lookups. Immutable.
class GroundTruth {
 public:
  // Throws std::invalid_argument when the box discretizes to nothing on the
  // mask grid. An empty mask (count 0) is allowed; measure code falls back
  // to box IoU for it.
  GroundTruth(Box box, BinaryMask mask, int category = 0);

  const Box& box() const { return box_; }
  const BinaryMask& mask() const { return mask_; }
  const IntegralImage& integral() const { return integral_; }
  std::int64_t mask_count() const { return mask_count_; }
  int category() const { return category_; }
  // The box's pixel cover on the mask grid (non-empty by invariant).
  const PixelBox& pixel_box() const { return pixel_box_; }

 private:
  Box box_;
  BinaryMask mask_;
  IntegralImage integral_;
  std::int64_t mask_count_;
  PixelBox pixel_box_;
  int category_;
};

enum class ProximityMeasure { IoU, GIoU, DIoU, MaIoU };

// "iou" | "giou" | "diou" | "maiou"; throws UsageError listing the valid
// names otherwise.
ProximityMeasure parse_measure(const std::string& name);
std::string measure_name(ProximityMeasure measure);

// Dense row-major matrix of measure values, rows = anchors, cols = gts.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  double& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  double at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  std::span<const double> data() const { return data_; }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

struct MaIoUResult {
  double value = 0.0;
  // True when the ground truth mask was empty and the value is the
  // pixel-domain box IoU instead.
  bool iou_fallback = false;
};

// Fraction of b's pixel cover that lies on the ground-truth mask,
// |cover(b) n M| / |cover(b)|. 0 when the cover is empty.
double mob(const Box& b, const GroundTruth& gt);

// Box IoU counted on the discretized pixel grid (both boxes clipped to it).
double pixel_iou(const Box& a, const Box& b, int grid_height, int grid_width);

// Mask-aware IoU via the integral image: four lookups for the on-mask count,
// inclusion-exclusion for the union, exact integers until one final division.
MaIoUResult maiou_fast(const Box& anchor, const GroundTruth& gt);

// Same value as maiou_fast, counted by walking every pixel of the union
// region and recounting the mask from scratch. The oracle; does not touch
// the integral image.
MaIoUResult maiou_brute(const Box& anchor, const GroundTruth& gt);

// measure(anchor, gt): box measures in the continuous domain, MaIoU in the
// pixel domain.
double proximity(const Box& anchor, const GroundTruth& gt,
                 ProximityMeasure measure);

// (num_anchors x num_gts) matrix of the chosen measure. Empty inputs give an
// empty matrix. Row ranges may be split across workers; the result does not
// depend on the worker count.
Matrix pairwise(const AnchorSet& anchors, std::span<const GroundTruth> gts,
                ProximityMeasure measure, int workers = 1);

}  // namespace maiou

#endif  // MAIOU_MAIOU_HPP_

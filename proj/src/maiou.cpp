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

#include "maiou/maiou.hpp"

#include <algorithm>
#include <stdexcept>

#include "maiou/anchors.hpp"
#include "maiou/errors.hpp"
#include "maiou/parallel.hpp"

namespace maiou {

namespace {

// Single rounding site shared by the fast path and the oracle: identical
// integer counts always produce bit-identical values.
double maiou_from_counts(std::int64_t gt_px, std::int64_t on_mask,
                         std::int64_t mask_count, std::int64_t union_px) {
  return static_cast<double>(gt_px) * static_cast<double>(on_mask) /
         (static_cast<double>(mask_count) * static_cast<double>(union_px));
}

double iou_from_counts(std::int64_t inter, std::int64_t uni) {
  if (inter == 0) return 0.0;
  return static_cast<double>(inter) / static_cast<double>(uni);
}

}  // namespace

GroundTruth::GroundTruth(Box box, BinaryMask mask, int category)
    : box_(box),
      mask_(std::move(mask)),
      integral_(mask_),
      mask_count_(mask_total(integral_)),
      pixel_box_([&]() {
        auto pb = discretize(box_, mask_.height(), mask_.width());
        if (!pb) {
          throw std::invalid_argument(
              "GroundTruth: box discretizes to an empty region on the mask "
              "grid");
        }
        return *pb;
      }()),
      category_(category) {}

ProximityMeasure parse_measure(const std::string& name) {
  if (name == "iou") return ProximityMeasure::IoU;
  if (name == "giou") return ProximityMeasure::GIoU;
  if (name == "diou") return ProximityMeasure::DIoU;
  if (name == "maiou") return ProximityMeasure::MaIoU;
  throw UsageError("unknown measure '" + name +
                   "' (valid: iou, giou, diou, maiou)");
}

std::string measure_name(ProximityMeasure measure) {
  switch (measure) {
    case ProximityMeasure::IoU:
      return "iou";
    case ProximityMeasure::GIoU:
      return "giou";
    case ProximityMeasure::DIoU:
      return "diou";
    case ProximityMeasure::MaIoU:
      return "maiou";
  }
  return "unknown";
}

double mob(const Box& b, const GroundTruth& gt) {
  const auto pb = discretize(b, gt.mask().height(), gt.mask().width());
  if (!pb) return 0.0;
  return static_cast<double>(mask_in_box(gt.integral(), *pb)) /
         static_cast<double>(pb->area());
}

double pixel_iou(const Box& a, const Box& b, int grid_height, int grid_width) {
  const auto pa = discretize(a, grid_height, grid_width);
  const auto pb = discretize(b, grid_height, grid_width);
  if (!pa || !pb) return 0.0;
  const std::int64_t inter = pixel_overlap(*pa, *pb);
  return iou_from_counts(inter, pa->area() + pb->area() - inter);
}

MaIoUResult maiou_fast(const Box& anchor, const GroundTruth& gt) {
  const int m = gt.mask().height();
  const int n = gt.mask().width();
  if (gt.mask_count() == 0) {
    return {pixel_iou(anchor, gt.box(), m, n), true};
  }
  const auto pa = discretize(anchor, m, n);
  if (!pa) return {0.0, false};
  const PixelBox& pg = gt.pixel_box();
  const std::int64_t inter = pixel_overlap(*pa, pg);
  const std::int64_t union_px = pa->area() + pg.area() - inter;
  const std::int64_t on_mask = mask_in_box(gt.integral(), *pa);
  return {maiou_from_counts(pg.area(), on_mask, gt.mask_count(), union_px),
          false};
}

MaIoUResult maiou_brute(const Box& anchor, const GroundTruth& gt) {
  const int m = gt.mask().height();
  const int n = gt.mask().width();
  const BinaryMask& mask = gt.mask();

  // Recount |M| from the raw mask; the oracle trusts nothing cached.
  std::int64_t mask_count = 0;
  for (int r = 0; r < m; ++r) {
    for (int c = 0; c < n; ++c) {
      if (mask.at(r, c)) ++mask_count;
    }
  }

  const auto pa = discretize(anchor, m, n);
  const auto pg = discretize(gt.box(), m, n);

  if (mask_count == 0) {
    // Same fallback as the fast path, with counts from explicit iteration.
    if (!pa || !pg) return {0.0, true};
    std::int64_t inter = 0;
    std::int64_t uni = 0;
    for (int r = std::min(pa->y1, pg->y1); r < std::max(pa->y2, pg->y2); ++r) {
      for (int c = std::min(pa->x1, pg->x1); c < std::max(pa->x2, pg->x2);
           ++c) {
        const bool in_a = pa->x1 <= c && c < pa->x2 && pa->y1 <= r && r < pa->y2;
        const bool in_g = pg->x1 <= c && c < pg->x2 && pg->y1 <= r && r < pg->y2;
        if (in_a || in_g) ++uni;
        if (in_a && in_g) ++inter;
      }
    }
    return {iou_from_counts(inter, uni), true};
  }

  if (!pa) return {0.0, false};

  std::int64_t gt_px = 0;
  std::int64_t union_px = 0;
  std::int64_t on_mask = 0;
  for (int r = std::min(pa->y1, pg->y1); r < std::max(pa->y2, pg->y2); ++r) {
    for (int c = std::min(pa->x1, pg->x1); c < std::max(pa->x2, pg->x2); ++c) {
      const bool in_a = pa->x1 <= c && c < pa->x2 && pa->y1 <= r && r < pa->y2;
      const bool in_g = pg->x1 <= c && c < pg->x2 && pg->y1 <= r && r < pg->y2;
      if (in_g) ++gt_px;
      if (in_a || in_g) ++union_px;
      if (in_a && mask.at(r, c)) ++on_mask;
    }
  }
  return {maiou_from_counts(gt_px, on_mask, mask_count, union_px), false};
}

double proximity(const Box& anchor, const GroundTruth& gt,
                 ProximityMeasure measure) {
  switch (measure) {
    case ProximityMeasure::IoU:
      return iou(anchor, gt.box());
    case ProximityMeasure::GIoU:
      return giou(anchor, gt.box());
    case ProximityMeasure::DIoU:
      return diou(anchor, gt.box());
    case ProximityMeasure::MaIoU:
      return maiou_fast(anchor, gt).value;
  }
  throw std::invalid_argument("unhandled proximity measure");
}

Matrix pairwise(const AnchorSet& anchors, std::span<const GroundTruth> gts,
                ProximityMeasure measure, int workers) {
  Matrix result(anchors.size(), gts.size());
  if (anchors.size() == 0 || gts.empty()) return result;
  parallel_for(anchors.size(), workers,
               [&](std::size_t begin, std::size_t end) {
                 for (std::size_t i = begin; i < end; ++i) {
                   const Box& a = anchors.box(i);
                   for (std::size_t j = 0; j < gts.size(); ++j) {
                     result.at(i, j) = proximity(a, gts[j], measure);
                   }
                 }
               });
  return result;
}

}  // namespace maiou

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

#include "maiou/dataset.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <optional>

#include <json.hpp>

#include "maiou/errors.hpp"
#include "maiou/log.hpp"

namespace maiou {

namespace {

using nlohmann::json;

struct ImageInfo {
  int width = 0;
  int height = 0;
};

// Tight pixel bounds of the set mask pixels, if any.
std::optional<PixelBox> mask_extent(const BinaryMask& mask) {
  int min_r = mask.height(), max_r = -1, min_c = mask.width(), max_c = -1;
  for (int r = 0; r < mask.height(); ++r) {
    for (int c = 0; c < mask.width(); ++c) {
      if (!mask.at(r, c)) continue;
      min_r = std::min(min_r, r);
      max_r = std::max(max_r, r);
      min_c = std::min(min_c, c);
      max_c = std::max(max_c, c);
    }
  }
  if (max_r < 0) return std::nullopt;
  return PixelBox(min_c, min_r, max_c + 1, max_r + 1, mask.height(),
                  mask.width());
}

// bbox-vs-mask disagreement check: overlap of the annotated box with the
// mask's tight bounds, measured as pixel IoU.
bool bbox_matches_mask(const PixelBox& box_cover, const PixelBox& extent) {
  const std::int64_t inter = pixel_overlap(box_cover, extent);
  const std::int64_t uni = box_cover.area() + extent.area() - inter;
  return static_cast<double>(inter) >= 0.9 * static_cast<double>(uni);
}

BinaryMask decode_segmentation(const json& segm, std::int64_t ann_id,
                               int height, int width) {
  if (segm.is_array()) {
    // One or more polygons, each a flat [x0, y0, x1, y1, ...] list.
    BinaryMask combined(height, width);
    for (const json& poly : segm) {
      if (!poly.is_array() || poly.size() % 2 != 0 || poly.size() < 6) {
        throw InvalidAnnotationError(
            "annotation " + std::to_string(ann_id) +
            ": polygon must be a flat list of >= 3 (x, y) pairs");
      }
      std::vector<Point2> vertices;
      vertices.reserve(poly.size() / 2);
      for (std::size_t i = 0; i < poly.size(); i += 2) {
        vertices.push_back({poly[i].get<double>(), poly[i + 1].get<double>()});
      }
      const BinaryMask part = rasterize_polygon(vertices, height, width);
      for (int r = 0; r < height; ++r) {
        for (int c = 0; c < width; ++c) {
          if (part.at(r, c)) combined.set(r, c, true);
        }
      }
    }
    return combined;
  }

  if (segm.is_object() && segm.contains("counts")) {
    if (segm["counts"].is_string()) {
      throw UnsupportedFormatError(
          "annotation " + std::to_string(ann_id) +
          ": compressed RLE is not supported; use polygons or uncompressed "
          "RLE");
    }
    int rle_h = height;
    int rle_w = width;
    if (segm.contains("size") && segm["size"].is_array() &&
        segm["size"].size() == 2) {
      rle_h = segm["size"][0].get<int>();
      rle_w = segm["size"][1].get<int>();
    }
    if (rle_h != height || rle_w != width) {
      throw InvalidAnnotationError("annotation " + std::to_string(ann_id) +
                                   ": RLE size does not match its image");
    }
    std::vector<std::int64_t> counts;
    for (const json& c : segm["counts"]) {
      counts.push_back(c.get<std::int64_t>());
    }
    return decode_rle(counts, height, width);
  }

  throw InvalidAnnotationError("annotation " + std::to_string(ann_id) +
                               ": unrecognized segmentation field");
}

}  // namespace

std::int64_t LoadResult::total_gts() const {
  std::int64_t n = 0;
  for (const Scene& s : scenes) n += static_cast<std::int64_t>(s.gts.size());
  return n;
}

LoadResult load_annotations(const std::string& path,
                            const LoadOptions& options) {
  std::ifstream in(path);
  if (!in) {
    throw InputError("cannot open annotation file: " + path);
  }
  json root;
  try {
    root = json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError("malformed JSON in " + path + ": " + e.what());
  }

  if (!root.contains("images") || !root.contains("annotations")) {
    throw InputError(path + ": not a COCO instances file (missing images or "
                            "annotations)");
  }

  LoadResult result;
  std::map<std::int64_t, ImageInfo> images;  // ordered by image id
  for (const json& img : root["images"]) {
    ImageInfo info;
    info.width = img.at("width").get<int>();
    info.height = img.at("height").get<int>();
    if (info.width < 1 || info.height < 1) {
      throw InputError(path + ": image with non-positive dimensions");
    }
    images[img.at("id").get<std::int64_t>()] = info;
    ++result.stats.images;
  }

  struct PendingGt {
    std::int64_t ann_id;
    GroundTruth gt;
  };
  std::map<std::int64_t, std::vector<PendingGt>> per_image;

  for (const json& ann : root["annotations"]) {
    ++result.stats.annotations;
    const std::int64_t ann_id =
        ann.contains("id") ? ann.at("id").get<std::int64_t>()
                           : result.stats.annotations;
    const std::int64_t image_id = ann.at("image_id").get<std::int64_t>();

    const auto img_it = images.find(image_id);
    if (img_it == images.end()) {
      ++result.stats.skipped_orphan;
      log::warn("annotation " + std::to_string(ann_id) +
                " references missing image " + std::to_string(image_id));
      continue;
    }
    if (!options.include_crowd && ann.value("iscrowd", 0) != 0) {
      ++result.stats.skipped_crowd;
      continue;
    }

    const ImageInfo& info = img_it->second;
    const json& bbox = ann.at("bbox");
    if (!bbox.is_array() || bbox.size() != 4) {
      throw InvalidAnnotationError("annotation " + std::to_string(ann_id) +
                                   ": bbox must be [x, y, w, h]");
    }
    const double bx = bbox[0].get<double>();
    const double by = bbox[1].get<double>();
    const double bw = bbox[2].get<double>();
    const double bh = bbox[3].get<double>();
    const double x1 = std::clamp(bx, 0.0, static_cast<double>(info.width));
    const double y1 = std::clamp(by, 0.0, static_cast<double>(info.height));
    const double x2 =
        std::clamp(bx + bw, 0.0, static_cast<double>(info.width));
    const double y2 =
        std::clamp(by + bh, 0.0, static_cast<double>(info.height));
    if (!(x2 > x1 && y2 > y1)) {
      ++result.stats.skipped_degenerate_box;
      log::warn("annotation " + std::to_string(ann_id) +
                ": degenerate box, skipped");
      continue;
    }

    BinaryMask mask =
        decode_segmentation(ann.at("segmentation"), ann_id, info.height,
                            info.width);
    const Box box(x1, y1, x2, y2);
    GroundTruth gt(box, std::move(mask), ann.value("category_id", 0));

    if (const auto extent = mask_extent(gt.mask())) {
      if (!bbox_matches_mask(gt.pixel_box(), *extent)) {
        ++result.stats.bbox_mask_mismatch_warnings;
        log::warn("annotation " + std::to_string(ann_id) +
                  ": bbox and mask extent disagree by more than 10%");
      }
    }

    per_image[image_id].push_back({ann_id, std::move(gt)});
  }

  for (auto& [image_id, pending] : per_image) {
    if (pending.empty()) continue;
    std::stable_sort(pending.begin(), pending.end(),
                     [](const PendingGt& a, const PendingGt& b) {
                       return a.ann_id < b.ann_id;
                     });
    Scene scene;
    scene.image_id = image_id;
    scene.width = images[image_id].width;
    scene.height = images[image_id].height;
    for (PendingGt& p : pending) {
      scene.gts.push_back(std::move(p.gt));
    }
    result.scenes.push_back(std::move(scene));
  }
  return result;
}

}  // namespace maiou

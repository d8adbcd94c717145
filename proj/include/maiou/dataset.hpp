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

#ifndef MAIOU_DATASET_HPP_
#define MAIOU_DATASET_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "maiou/maiou.hpp"

namespace maiou {

// One annotated image: dimensions plus its ground-truth objects. Boxes are
// clamped to [0, width] x [0, height]; masks are rasterized at the native
// image resolution.
struct Scene {
  std::int64_t image_id = 0;
  int width = 0;
  int height = 0;
  std::vector<GroundTruth> gts;
};

struct LoadOptions {
  bool include_crowd = false;
};

struct LoadStats {
  std::int64_t images = 0;       // images listed in the file
  std::int64_t annotations = 0;  // annotations listed in the file
  std::int64_t skipped_crowd = 0;
  std::int64_t skipped_degenerate_box = 0;  // zero-size or fully outside
  std::int64_t skipped_orphan = 0;          // annotation without its image
  std::int64_t bbox_mask_mismatch_warnings = 0;
};

struct LoadResult {
  std::vector<Scene> scenes;
  LoadStats stats;

  std::int64_t total_gts() const;
};

// Reads a COCO-instances JSON file into Scenes, one per image with at least
// one usable annotation, ordered by image id (gts by annotation id).
// Polygons rasterize with multi-polygon union; uncompressed RLE decodes
// column-major. Throws InputError for unreadable or malformed files and
// UnsupportedFormatError (naming the annotation id) for compressed RLE.
LoadResult load_annotations(const std::string& path,
                            const LoadOptions& options = {});

}  // namespace maiou

#endif  // MAIOU_DATASET_HPP_

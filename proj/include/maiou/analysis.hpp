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

#ifndef MAIOU_ANALYSIS_HPP_
#define MAIOU_ANALYSIS_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "maiou/assigner.hpp"
#include "maiou/dataset.hpp"

namespace maiou {

// Uniform binning over [0, 1]. Values land in the left-closed bin containing
// them; 1.0 goes to the top bin.
struct Histogram {
  std::vector<double> edges;          // bins + 1, strictly increasing
  std::vector<std::int64_t> counts;   // one per bin

  std::int64_t total() const;
};

struct MobHistogram {
  Histogram hist;
  double fraction_below_half = 0.0;
  std::int64_t num_gts = 0;
};

// Distribution of MOB(B, M) over every ground truth in the scenes.
// Throws UsageError when the scenes carry no ground truths.
MobHistogram mob_histogram(std::span<const Scene> scenes, int bins = 20);

// 2-D histogram of (pixel-domain IoU, maIoU) over anchor-gt pairs. Both
// axes share one pixel domain so the MOB=1 diagonal identity is exact.
// Pairs where both measures are zero are dropped.
struct JointHistogram {
  std::vector<double> x_edges;       // IoU axis
  std::vector<double> y_edges;       // maIoU axis
  std::vector<std::int64_t> counts;  // x-major, counts[ix * y_bins + iy]
  std::int64_t pairs = 0;
  std::int64_t low_iou_high_maiou = 0;   // IoU < 0.5, maIoU >= 0.5
  std::int64_t high_iou_low_maiou = 0;   // IoU >= 0.5, maIoU < 0.5

  std::int64_t at(int ix, int iy) const {
    return counts[static_cast<std::size_t>(ix) * (y_edges.size() - 1) + iy];
  }
};

JointHistogram joint_histogram(std::span<const Scene> scenes,
                               const AnchorConfig& anchor_cfg, int bins = 20,
                               int workers = 1);

// One benchmark configuration: brute-force maIoU over all pairs vs the
// integral-image path (table build per gt + constant-time pairs).
struct BenchRow {
  int grid = 0;
  int anchors = 0;
  int gts = 0;
  int repetitions = 0;
  double brute_median_ms = 0.0;
  double fast_median_ms = 0.0;  // includes the integral builds
  double speedup = 0.0;
  bool low_confidence = false;  // fewer than 5 repetitions
  bool values_match = false;    // both paths produced identical matrices
};

struct BenchReport {
  std::vector<BenchRow> rows;
  std::string note;
};

// Cross product of grids x anchor_counts x gt_counts. An anchor count of 0
// means "however many the default anchor configuration yields for the
// grid". Scenes are synthetic and fully determined by `seed`. Timed
// sections run single-threaded.
BenchReport bench_maiou(std::span<const int> grid_sizes,
                        std::span<const int> anchor_counts,
                        std::span<const int> gt_counts, int repetitions,
                        std::uint64_t seed = 0);

struct AssignerSummary {
  std::string spec;
  std::int64_t positives = 0;
  std::int64_t negatives = 0;
  std::int64_t ignores = 0;
  std::vector<std::int64_t> positives_per_gt;  // flattened over scenes

  double mean_positives_per_gt() const;
};

struct CompareReport {
  struct PairDiff {
    int spec_a = 0;
    int spec_b = 0;
    std::array<std::array<std::int64_t, 3>, 3> transitions{};
  };

  std::vector<AssignerSummary> summaries;
  std::vector<PairDiff> diffs;  // every unordered spec pair, a < b
};

// Runs every spec over every scene and tallies labels plus pairwise label
// transitions. Throws UsageError when no specs are given.
CompareReport compare_assigners(std::span<const Scene> scenes,
                                const AnchorConfig& anchor_cfg,
                                std::span<const AssignerSpec> specs,
                                int workers = 1);

}  // namespace maiou

#endif  // MAIOU_ANALYSIS_HPP_

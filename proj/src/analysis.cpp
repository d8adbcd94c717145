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

#include "maiou/analysis.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>
#include <random>

#include "maiou/errors.hpp"
#include "maiou/parallel.hpp"

namespace maiou {

namespace {

std::vector<double> uniform_edges(int bins) {
  if (bins < 1) {
    throw UsageError("histogram needs at least 1 bin");
  }
  std::vector<double> edges(bins + 1);
  for (int i = 0; i <= bins; ++i) {
    edges[i] = static_cast<double>(i) / bins;
  }
  return edges;
}

int bin_of(double value, int bins) {
  const int b = static_cast<int>(value * bins);
  return std::clamp(b, 0, bins - 1);
}

double median(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  const std::size_t n = values.size();
  if (n % 2 == 1) return values[n / 2];
  return 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

}  // namespace

std::int64_t Histogram::total() const {
  return std::accumulate(counts.begin(), counts.end(), std::int64_t{0});
}

MobHistogram mob_histogram(std::span<const Scene> scenes, int bins) {
  MobHistogram result;
  result.hist.edges = uniform_edges(bins);
  result.hist.counts.assign(bins, 0);

  std::int64_t below_half = 0;
  for (const Scene& scene : scenes) {
    for (const GroundTruth& gt : scene.gts) {
      const double value = mob(gt.box(), gt);
      ++result.hist.counts[bin_of(value, bins)];
      if (value < 0.5) ++below_half;
      ++result.num_gts;
    }
  }
  if (result.num_gts == 0) {
    throw UsageError("mob_histogram: scenes carry no ground truths");
  }
  result.fraction_below_half =
      static_cast<double>(below_half) / static_cast<double>(result.num_gts);
  return result;
}

JointHistogram joint_histogram(std::span<const Scene> scenes,
                               const AnchorConfig& anchor_cfg, int bins,
                               int workers) {
  anchor_cfg.validate();
  JointHistogram result;
  result.x_edges = uniform_edges(bins);
  result.y_edges = uniform_edges(bins);
  result.counts.assign(static_cast<std::size_t>(bins) * bins, 0);

  for (const Scene& scene : scenes) {
    if (scene.gts.empty()) continue;
    const AnchorSet anchors =
        AnchorSet::generate(scene.height, scene.width, anchor_cfg);

    // Per-worker partials merged in a fixed order.
    struct Partial {
      std::vector<std::int64_t> counts;
      std::int64_t pairs = 0;
      std::int64_t low_high = 0;
      std::int64_t high_low = 0;
    };
    const std::size_t slots = std::max(1, workers);
    std::vector<Partial> partials(slots);
    for (Partial& p : partials) {
      p.counts.assign(result.counts.size(), 0);
    }
    const std::size_t chunk = (anchors.size() + slots - 1) / slots;

    parallel_for(anchors.size(), workers,
                 [&](std::size_t begin, std::size_t end) {
                   Partial& p = partials[begin / chunk];
                   for (std::size_t i = begin; i < end; ++i) {
                     const Box& a = anchors.box(i);
                     for (const GroundTruth& gt : scene.gts) {
                       const double x = pixel_iou(a, gt.box(), scene.height,
                                                  scene.width);
                       const double y = maiou_fast(a, gt).value;
                       if (x == 0.0 && y == 0.0) continue;
                       ++p.counts[static_cast<std::size_t>(bin_of(x, bins)) *
                                      bins +
                                  bin_of(y, bins)];
                       ++p.pairs;
                       if (x < 0.5 && y >= 0.5) ++p.low_high;
                       if (x >= 0.5 && y < 0.5) ++p.high_low;
                     }
                   }
                 });
    for (const Partial& p : partials) {
      for (std::size_t i = 0; i < result.counts.size(); ++i) {
        result.counts[i] += p.counts[i];
      }
      result.pairs += p.pairs;
      result.low_iou_high_maiou += p.low_high;
      result.high_iou_low_maiou += p.high_low;
    }
  }
  return result;
}

namespace {

// Deterministic synthetic scene: boxes from the seeded generator, each mask
// the filled ellipse inscribed in its box.
std::vector<GroundTruth> synthetic_gts(int grid, int count,
                                       std::mt19937_64& rng) {
  std::vector<GroundTruth> gts;
  gts.reserve(count);
  std::uniform_real_distribution<double> size_dist(grid / 8.0, grid / 2.0);
  for (int g = 0; g < count; ++g) {
    const double w = std::max(1.0, size_dist(rng));
    const double h = std::max(1.0, size_dist(rng));
    std::uniform_real_distribution<double> x_dist(0.0, grid - w);
    std::uniform_real_distribution<double> y_dist(0.0, grid - h);
    const double x1 = x_dist(rng);
    const double y1 = y_dist(rng);
    const Box box(x1, y1, x1 + w, y1 + h);

    BinaryMask mask(grid, grid);
    const double cx = box.center_x();
    const double cy = box.center_y();
    const double rx = 0.5 * w;
    const double ry = 0.5 * h;
    for (int r = std::max(0, static_cast<int>(std::floor(y1)));
         r < std::min(grid, static_cast<int>(std::ceil(y1 + h))); ++r) {
      for (int c = std::max(0, static_cast<int>(std::floor(x1)));
           c < std::min(grid, static_cast<int>(std::ceil(x1 + w))); ++c) {
        const double dx = (c + 0.5 - cx) / rx;
        const double dy = (r + 0.5 - cy) / ry;
        if (dx * dx + dy * dy <= 1.0) mask.set(r, c, true);
      }
    }
    if (mask_total(build_integral(mask)) == 0) {
      // Tiny box whose ellipse missed every center: set one pixel.
      mask.set(std::min(grid - 1, static_cast<int>(cy)),
               std::min(grid - 1, static_cast<int>(cx)), true);
    }
    gts.emplace_back(box, std::move(mask));
  }
  return gts;
}

std::vector<Box> bench_anchors(int grid, int requested) {
  const AnchorSet generated = AnchorSet::generate(grid, grid, AnchorConfig{});
  std::vector<Box> anchors;
  const std::size_t total =
      requested <= 0 ? generated.size() : static_cast<std::size_t>(requested);
  anchors.reserve(total);
  for (std::size_t i = 0; i < total; ++i) {
    anchors.push_back(generated.box(i % generated.size()));
  }
  return anchors;
}

}  // namespace

BenchReport bench_maiou(std::span<const int> grid_sizes,
                        std::span<const int> anchor_counts,
                        std::span<const int> gt_counts, int repetitions,
                        std::uint64_t seed) {
  if (repetitions < 1) {
    throw UsageError("bench_maiou: repetitions must be >= 1");
  }
  using clock = std::chrono::steady_clock;
  const auto to_ms = [](clock::duration d) {
    return std::chrono::duration<double, std::milli>(d).count();
  };

  BenchReport report;
  report.note =
      "medians over timed repetitions after one warm-up; fast path times "
      "include the per-gt integral builds; single-threaded";

  const std::vector<int> default_anchor_counts{0};
  std::span<const int> anchor_span =
      anchor_counts.empty() ? std::span<const int>(default_anchor_counts)
                            : anchor_counts;

  for (int grid : grid_sizes) {
    for (int anchor_count : anchor_span) {
      for (int gt_count : gt_counts) {
        std::mt19937_64 rng(seed ^ (static_cast<std::uint64_t>(grid) << 32 ^
                                    static_cast<std::uint64_t>(gt_count)));
        const std::vector<GroundTruth> gts =
            synthetic_gts(grid, gt_count, rng);
        const std::vector<Box> anchors = bench_anchors(grid, anchor_count);

        BenchRow row;
        row.grid = grid;
        row.anchors = static_cast<int>(anchors.size());
        row.gts = gt_count;
        row.repetitions = repetitions;
        row.low_confidence = repetitions < 5;

        Matrix brute_values(anchors.size(), gts.size());
        Matrix fast_values(anchors.size(), gts.size());

        const auto run_brute = [&](Matrix& out) {
          for (std::size_t i = 0; i < anchors.size(); ++i) {
            for (std::size_t j = 0; j < gts.size(); ++j) {
              out.at(i, j) = maiou_brute(anchors[i], gts[j]).value;
            }
          }
        };
        const auto run_fast = [&](Matrix& out) {
          // Rebuild each ground truth inside the timed section: the per-gt
          // integral build is part of what this path costs.
          for (std::size_t j = 0; j < gts.size(); ++j) {
            const GroundTruth rebuilt(gts[j].box(), gts[j].mask(),
                                      gts[j].category());
            for (std::size_t i = 0; i < anchors.size(); ++i) {
              out.at(i, j) = maiou_fast(anchors[i], rebuilt).value;
            }
          }
        };

        std::vector<double> brute_ms;
        std::vector<double> fast_ms;
        for (int rep = 0; rep < repetitions + 1; ++rep) {
          const auto t0 = clock::now();
          run_brute(brute_values);
          const auto t1 = clock::now();
          run_fast(fast_values);
          const auto t2 = clock::now();
          if (rep == 0) continue;  // warm-up
          brute_ms.push_back(to_ms(t1 - t0));
          fast_ms.push_back(to_ms(t2 - t1));
        }

        row.brute_median_ms = median(brute_ms);
        row.fast_median_ms = median(fast_ms);
        row.speedup = row.fast_median_ms > 0.0
                          ? row.brute_median_ms / row.fast_median_ms
                          : 0.0;
        row.values_match = brute_values == fast_values;
        report.rows.push_back(row);
      }
    }
  }
  return report;
}

double AssignerSummary::mean_positives_per_gt() const {
  if (positives_per_gt.empty()) return 0.0;
  const std::int64_t sum = std::accumulate(
      positives_per_gt.begin(), positives_per_gt.end(), std::int64_t{0});
  return static_cast<double>(sum) /
         static_cast<double>(positives_per_gt.size());
}

CompareReport compare_assigners(std::span<const Scene> scenes,
                                const AnchorConfig& anchor_cfg,
                                std::span<const AssignerSpec> specs,
                                int workers) {
  if (specs.empty()) {
    throw UsageError("compare_assigners: need at least one assigner spec");
  }
  anchor_cfg.validate();

  CompareReport report;
  report.summaries.resize(specs.size());
  for (std::size_t s = 0; s < specs.size(); ++s) {
    report.summaries[s].spec = specs[s].name();
  }
  for (std::size_t a = 0; a < specs.size(); ++a) {
    for (std::size_t b = a + 1; b < specs.size(); ++b) {
      CompareReport::PairDiff diff;
      diff.spec_a = static_cast<int>(a);
      diff.spec_b = static_cast<int>(b);
      report.diffs.push_back(diff);
    }
  }

  for (const Scene& scene : scenes) {
    const AnchorSet anchors =
        AnchorSet::generate(scene.height, scene.width, anchor_cfg);
    std::vector<AssignmentResult> results(specs.size());
    for (std::size_t s = 0; s < specs.size(); ++s) {
      results[s] = run_assigner(specs[s], anchors, scene.gts, workers);
      AssignerSummary& summary = report.summaries[s];
      summary.positives += results[s].count(AnchorLabelKind::Positive);
      summary.negatives += results[s].count(AnchorLabelKind::Negative);
      summary.ignores += results[s].count(AnchorLabelKind::Ignore);
      summary.positives_per_gt.insert(summary.positives_per_gt.end(),
                                      results[s].per_gt_positives.begin(),
                                      results[s].per_gt_positives.end());
    }
    for (CompareReport::PairDiff& diff : report.diffs) {
      const DiffReport d =
          assignment_diff(results[diff.spec_a], results[diff.spec_b]);
      for (int from = 0; from < 3; ++from) {
        for (int to = 0; to < 3; ++to) {
          diff.transitions[from][to] += d.counts[from][to];
        }
      }
    }
  }
  return report;
}

}  // namespace maiou

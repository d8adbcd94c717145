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

#ifndef MAIOU_ASSIGNER_HPP_
#define MAIOU_ASSIGNER_HPP_

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "maiou/anchors.hpp"
#include "maiou/maiou.hpp"

namespace maiou {

enum class AnchorLabelKind : std::uint8_t { Positive = 0, Negative = 1, Ignore = 2 };

struct AnchorLabel {
  AnchorLabelKind kind = AnchorLabelKind::Negative;
  std::int32_t gt = -1;  // valid gt index iff kind == Positive

  friend bool operator==(const AnchorLabel&, const AnchorLabel&) = default;
};

struct AssignmentResult {
  std::vector<AnchorLabel> labels;             // one per anchor
  std::vector<std::int64_t> per_gt_positives;  // one per gt
  std::vector<double> adaptive_thresholds;     // one per gt, ATSS only

  std::int64_t count(AnchorLabelKind kind) const;

  friend bool operator==(const AssignmentResult&,
                         const AssignmentResult&) = default;
};

// tau_neg <= tau_pos, both in [0, 1]. Anchors at or above tau_pos are
// positive, strictly below tau_neg negative, in between ignored.
struct FixedThresholds {
  double tau_neg = 0.40;
  double tau_pos = 0.50;

  FixedThresholds() = default;
  FixedThresholds(double tau_neg, double tau_pos);
};

// Fixed-threshold rule over a precomputed proximity matrix. Per anchor the
// max over gts decides the band; argmax ties go to the lowest gt index.
// Zero gts labels everything negative.
AssignmentResult assign_fixed(const Matrix& prox, const FixedThresholds& th);

// ATSS: per gt, top-k anchors by center distance on each level become
// candidates; the adaptive threshold is mean + population std of their
// scores; survivors additionally need their center strictly inside the gt
// box. Anchors claimed by several gts go to the highest score (ties to the
// lowest gt index). Produces no Ignore labels.
AssignmentResult atss_assign(const AnchorSet& anchors,
                             std::span<const GroundTruth> gts,
                             ProximityMeasure measure, int top_k,
                             int workers = 1);

// Label transition counts and the anchor indices behind each transition.
// Indexed [from][to] in the order Positive, Negative, Ignore.
struct DiffReport {
  std::array<std::array<std::int64_t, 3>, 3> counts{};
  std::array<std::array<std::vector<std::int32_t>, 3>, 3> indices;

  std::int64_t changed() const;
};

// Throws UsageError when the two results cover different anchor counts.
DiffReport assignment_diff(const AssignmentResult& a,
                           const AssignmentResult& b);

// Which assigner to run, with its knobs. `kind` selects which knobs apply.
struct AssignerSpec {
  enum class Kind { Fixed, Atss };

  Kind kind = Kind::Atss;
  ProximityMeasure measure = ProximityMeasure::MaIoU;
  int top_k = 9;                // ATSS
  FixedThresholds thresholds;   // Fixed

  std::string name() const;

  // "atss:MEASURE[:K]" or "fixed:MEASURE[:TAU_NEG:TAU_POS]"; throws
  // UsageError on malformed input.
  static AssignerSpec parse(const std::string& text);
};

// Runs the spec on one scene's anchors and gts.
AssignmentResult run_assigner(const AssignerSpec& spec,
                              const AnchorSet& anchors,
                              std::span<const GroundTruth> gts,
                              int workers = 1);

}  // namespace maiou

#endif  // MAIOU_ASSIGNER_HPP_

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

#include "maiou/assigner.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "maiou/errors.hpp"
#include "maiou/parallel.hpp"

namespace maiou {

std::int64_t AssignmentResult::count(AnchorLabelKind kind) const {
  std::int64_t n = 0;
  for (const AnchorLabel& l : labels) {
    if (l.kind == kind) ++n;
  }
  return n;
}

FixedThresholds::FixedThresholds(double tau_neg, double tau_pos)
    : tau_neg(tau_neg), tau_pos(tau_pos) {
  if (!(0.0 <= tau_neg && tau_neg <= tau_pos && tau_pos <= 1.0)) {
    throw std::invalid_argument(
        "FixedThresholds: need 0 <= tau_neg <= tau_pos <= 1");
  }
}

AssignmentResult assign_fixed(const Matrix& prox, const FixedThresholds& th) {
  AssignmentResult result;
  result.labels.resize(prox.rows());
  result.per_gt_positives.assign(prox.cols(), 0);

  if (prox.cols() == 0) {
    for (auto& label : result.labels) {
      label = {AnchorLabelKind::Negative, -1};
    }
    return result;
  }

  for (std::size_t i = 0; i < prox.rows(); ++i) {
    std::size_t best_gt = 0;
    double best = prox.at(i, 0);
    for (std::size_t j = 1; j < prox.cols(); ++j) {
      if (prox.at(i, j) > best) {  // strict: ties keep the lowest gt index
        best = prox.at(i, j);
        best_gt = j;
      }
    }
    if (best >= th.tau_pos) {
      result.labels[i] = {AnchorLabelKind::Positive,
                          static_cast<std::int32_t>(best_gt)};
      ++result.per_gt_positives[best_gt];
    } else if (best < th.tau_neg) {
      result.labels[i] = {AnchorLabelKind::Negative, -1};
    } else {
      result.labels[i] = {AnchorLabelKind::Ignore, -1};
    }
  }
  return result;
}

namespace {

struct Survivor {
  std::size_t anchor;
  double score;
};

bool center_strictly_inside(const Box& anchor, const Box& gt) {
  const double cx = anchor.center_x();
  const double cy = anchor.center_y();
  return gt.x1 < cx && cx < gt.x2 && gt.y1 < cy && cy < gt.y2;
}

}  // namespace

AssignmentResult atss_assign(const AnchorSet& anchors,
                             std::span<const GroundTruth> gts,
                             ProximityMeasure measure, int top_k,
                             int workers) {
  if (top_k < 1) {
    throw std::invalid_argument("atss_assign: top_k must be >= 1");
  }

  AssignmentResult result;
  result.labels.assign(anchors.size(), {AnchorLabelKind::Negative, -1});
  result.per_gt_positives.assign(gts.size(), 0);
  result.adaptive_thresholds.assign(gts.size(), 0.0);
  if (gts.empty() || anchors.size() == 0) return result;

  std::vector<std::vector<Survivor>> survivors(gts.size());

  parallel_for(gts.size(), workers, [&](std::size_t begin, std::size_t end) {
    std::vector<std::pair<double, std::size_t>> by_distance;
    std::vector<std::size_t> candidates;
    for (std::size_t g = begin; g < end; ++g) {
      const GroundTruth& gt = gts[g];
      candidates.clear();

      for (const AnchorSet::Level& level : anchors.levels()) {
        by_distance.clear();
        by_distance.reserve(level.count);
        for (std::size_t i = level.first; i < level.first + level.count; ++i) {
          by_distance.emplace_back(center_distance(anchors.box(i), gt.box()),
                                   i);
        }
        const std::size_t take =
            std::min<std::size_t>(top_k, by_distance.size());
        // (distance, index) pairs give a strict total order, so the selected
        // set is deterministic.
        std::partial_sort(by_distance.begin(), by_distance.begin() + take,
                          by_distance.end());
        for (std::size_t t = 0; t < take; ++t) {
          candidates.push_back(by_distance[t].second);
        }
      }

      std::vector<double> scores(candidates.size());
      double mean = 0.0;
      for (std::size_t t = 0; t < candidates.size(); ++t) {
        scores[t] = proximity(anchors.box(candidates[t]), gt, measure);
        mean += scores[t];
      }
      mean /= static_cast<double>(scores.size());
      double variance = 0.0;
      for (double s : scores) {
        variance += (s - mean) * (s - mean);
      }
      variance /= static_cast<double>(scores.size());  // population std
      const double threshold = mean + std::sqrt(variance);
      result.adaptive_thresholds[g] = threshold;

      for (std::size_t t = 0; t < candidates.size(); ++t) {
        if (scores[t] >= threshold &&
            center_strictly_inside(anchors.box(candidates[t]), gt.box())) {
          survivors[g].push_back({candidates[t], scores[t]});
        }
      }
    }
  });

  // Sequential conflict resolution: highest score wins, ties keep the
  // lowest gt index (earlier iteration).
  std::vector<double> best_score(anchors.size(), 0.0);
  for (std::size_t g = 0; g < gts.size(); ++g) {
    for (const Survivor& s : survivors[g]) {
      AnchorLabel& label = result.labels[s.anchor];
      if (label.kind != AnchorLabelKind::Positive ||
          s.score > best_score[s.anchor]) {
        label = {AnchorLabelKind::Positive, static_cast<std::int32_t>(g)};
        best_score[s.anchor] = s.score;
      }
    }
  }
  for (const AnchorLabel& label : result.labels) {
    if (label.kind == AnchorLabelKind::Positive) {
      ++result.per_gt_positives[label.gt];
    }
  }
  return result;
}

std::int64_t DiffReport::changed() const {
  std::int64_t n = 0;
  for (int from = 0; from < 3; ++from) {
    for (int to = 0; to < 3; ++to) {
      if (from != to) n += counts[from][to];
    }
  }
  return n;
}

DiffReport assignment_diff(const AssignmentResult& a,
                           const AssignmentResult& b) {
  if (a.labels.size() != b.labels.size()) {
    throw UsageError("assignment_diff: results cover " +
                     std::to_string(a.labels.size()) + " vs " +
                     std::to_string(b.labels.size()) + " anchors");
  }
  DiffReport report;
  for (std::size_t i = 0; i < a.labels.size(); ++i) {
    const int from = static_cast<int>(a.labels[i].kind);
    const int to = static_cast<int>(b.labels[i].kind);
    ++report.counts[from][to];
    report.indices[from][to].push_back(static_cast<std::int32_t>(i));
  }
  return report;
}

std::string AssignerSpec::name() const {
  std::ostringstream out;
  if (kind == Kind::Atss) {
    out << "atss:" << measure_name(measure) << ":k=" << top_k;
  } else {
    out << "fixed:" << measure_name(measure) << ":" << thresholds.tau_neg
        << ":" << thresholds.tau_pos;
  }
  return out.str();
}

AssignerSpec AssignerSpec::parse(const std::string& text) {
  std::vector<std::string> parts;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ':')) parts.push_back(token);
  if (parts.size() < 2) {
    throw UsageError("bad assigner spec '" + text +
                     "' (want atss:MEASURE[:K] or "
                     "fixed:MEASURE[:TAU_NEG:TAU_POS])");
  }

  AssignerSpec spec;
  spec.measure = parse_measure(parts[1]);
  try {
    if (parts[0] == "atss") {
      spec.kind = Kind::Atss;
      if (parts.size() > 3) throw UsageError("too many fields");
      if (parts.size() == 3) spec.top_k = std::stoi(parts[2]);
      if (spec.top_k < 1) throw UsageError("k must be >= 1");
    } else if (parts[0] == "fixed") {
      spec.kind = Kind::Fixed;
      if (parts.size() != 2 && parts.size() != 4) {
        throw UsageError("fixed spec wants 2 or 4 fields");
      }
      if (parts.size() == 4) {
        spec.thresholds =
            FixedThresholds(std::stod(parts[2]), std::stod(parts[3]));
      }
    } else {
      throw UsageError("unknown assigner kind '" + parts[0] +
                       "' (valid: fixed, atss)");
    }
  } catch (const UsageError&) {
    throw;
  } catch (const std::exception& e) {
    throw UsageError("bad assigner spec '" + text + "': " + e.what());
  }
  return spec;
}

AssignmentResult run_assigner(const AssignerSpec& spec,
                              const AnchorSet& anchors,
                              std::span<const GroundTruth> gts, int workers) {
  if (spec.kind == AssignerSpec::Kind::Atss) {
    return atss_assign(anchors, gts, spec.measure, spec.top_k, workers);
  }
  return assign_fixed(pairwise(anchors, gts, spec.measure, workers),
                      spec.thresholds);
}

}  // namespace maiou

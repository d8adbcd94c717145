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

#include "maiou/reports.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace maiou {

using nlohmann::json;

namespace {

const char* kLabelNames[3] = {"positive", "negative", "ignore"};

std::string format_double(double v, int precision = 3) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(precision) << v;
  return out.str();
}

}  // namespace

json report_json(const MobHistogram& report) {
  return json{{"schema_version", kSchemaVersion},
              {"kind", "mob_histogram"},
              {"edges", report.hist.edges},
              {"counts", report.hist.counts},
              {"total", report.num_gts},
              {"fraction_below_half", report.fraction_below_half}};
}

json report_json(const JointHistogram& report) {
  return json{{"schema_version", kSchemaVersion},
              {"kind", "joint_histogram"},
              {"iou_edges", report.x_edges},
              {"maiou_edges", report.y_edges},
              {"counts", report.counts},
              {"pairs", report.pairs},
              {"low_iou_high_maiou", report.low_iou_high_maiou},
              {"high_iou_low_maiou", report.high_iou_low_maiou}};
}

json report_json(const BenchReport& report) {
  json rows = json::array();
  for (const BenchRow& row : report.rows) {
    rows.push_back(json{{"grid", row.grid},
                        {"anchors", row.anchors},
                        {"gts", row.gts},
                        {"repetitions", row.repetitions},
                        {"brute_median_ms", row.brute_median_ms},
                        {"fast_median_ms", row.fast_median_ms},
                        {"speedup", row.speedup},
                        {"low_confidence", row.low_confidence},
                        {"values_match", row.values_match}});
  }
  return json{{"schema_version", kSchemaVersion},
              {"kind", "bench"},
              {"note", report.note},
              {"rows", rows}};
}

json report_json(const CompareReport& report) {
  json summaries = json::array();
  for (const AssignerSummary& s : report.summaries) {
    std::int64_t min_pos = 0;
    std::int64_t max_pos = 0;
    if (!s.positives_per_gt.empty()) {
      const auto [lo, hi] = std::minmax_element(s.positives_per_gt.begin(),
                                                s.positives_per_gt.end());
      min_pos = *lo;
      max_pos = *hi;
    }
    summaries.push_back(json{{"spec", s.spec},
                             {"positives", s.positives},
                             {"negatives", s.negatives},
                             {"ignores", s.ignores},
                             {"gts", s.positives_per_gt.size()},
                             {"positives_per_gt", s.positives_per_gt},
                             {"mean_positives_per_gt",
                              s.mean_positives_per_gt()},
                             {"min_positives_per_gt", min_pos},
                             {"max_positives_per_gt", max_pos}});
  }
  json diffs = json::array();
  for (const CompareReport::PairDiff& d : report.diffs) {
    json transitions = json::object();
    for (int from = 0; from < 3; ++from) {
      for (int to = 0; to < 3; ++to) {
        transitions[std::string(kLabelNames[from]) + "_to_" +
                    kLabelNames[to]] = d.transitions[from][to];
      }
    }
    diffs.push_back(json{{"spec_a", report.summaries[d.spec_a].spec},
                         {"spec_b", report.summaries[d.spec_b].spec},
                         {"transitions", transitions}});
  }
  return json{{"schema_version", kSchemaVersion},
              {"kind", "compare"},
              {"specs", summaries},
              {"diffs", diffs}};
}

std::string csv_field(const std::string& value) {
  if (value.find_first_of(",\"\r\n") == std::string::npos) {
    return value;
  }
  std::string quoted = "\"";
  for (char c : value) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

std::string mob_histogram_csv(const MobHistogram& report) {
  std::ostringstream out;
  out << "bin_start,bin_end,count\r\n";
  for (std::size_t i = 0; i < report.hist.counts.size(); ++i) {
    out << report.hist.edges[i] << ',' << report.hist.edges[i + 1] << ','
        << report.hist.counts[i] << "\r\n";
  }
  return out.str();
}

std::string joint_histogram_csv(const JointHistogram& report) {
  const std::size_t y_bins = report.y_edges.size() - 1;
  std::ostringstream out;
  out << "iou_bin_start,iou_bin_end,maiou_bin_start,maiou_bin_end,count\r\n";
  for (std::size_t ix = 0; ix + 1 < report.x_edges.size(); ++ix) {
    for (std::size_t iy = 0; iy < y_bins; ++iy) {
      out << report.x_edges[ix] << ',' << report.x_edges[ix + 1] << ','
          << report.y_edges[iy] << ',' << report.y_edges[iy + 1] << ','
          << report.counts[ix * y_bins + iy] << "\r\n";
    }
  }
  return out.str();
}

std::string text_table(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> widths;
  for (const auto& row : rows) {
    if (row.size() > widths.size()) widths.resize(row.size(), 0);
    for (std::size_t c = 0; c < row.size(); ++c) {
      widths[c] = std::max(widths[c], row[c].size());
    }
  }
  std::ostringstream out;
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c > 0) out << "  ";
      out << std::left << std::setw(static_cast<int>(widths[c])) << row[c];
    }
    out << '\n';
  }
  return out.str();
}

std::string bench_table(const BenchReport& report) {
  std::vector<std::vector<std::string>> rows;
  rows.push_back({"grid", "anchors", "gts", "reps", "brute_ms", "fast_ms",
                  "speedup", "flags"});
  for (const BenchRow& row : report.rows) {
    std::string flags;
    if (row.low_confidence) flags += "low-confidence ";
    if (!row.values_match) flags += "VALUE-MISMATCH";
    rows.push_back({std::to_string(row.grid), std::to_string(row.anchors),
                    std::to_string(row.gts), std::to_string(row.repetitions),
                    format_double(row.brute_median_ms),
                    format_double(row.fast_median_ms),
                    format_double(row.speedup, 1), flags});
  }
  return text_table(rows) + report.note + "\n";
}

std::string compare_table(const CompareReport& report) {
  std::vector<std::vector<std::string>> rows;
  rows.push_back(
      {"spec", "positives", "negatives", "ignores", "mean_pos_per_gt"});
  for (const AssignerSummary& s : report.summaries) {
    rows.push_back({s.spec, std::to_string(s.positives),
                    std::to_string(s.negatives), std::to_string(s.ignores),
                    format_double(s.mean_positives_per_gt())});
  }
  std::string out = text_table(rows);
  for (const CompareReport::PairDiff& d : report.diffs) {
    out += "\n" + report.summaries[d.spec_a].spec + " -> " +
           report.summaries[d.spec_b].spec + " transitions:\n";
    std::vector<std::vector<std::string>> trows;
    trows.push_back({"", "to_positive", "to_negative", "to_ignore"});
    for (int from = 0; from < 3; ++from) {
      trows.push_back({std::string("from_") + kLabelNames[from],
                       std::to_string(d.transitions[from][0]),
                       std::to_string(d.transitions[from][1]),
                       std::to_string(d.transitions[from][2])});
    }
    out += text_table(trows);
  }
  return out;
}

}  // namespace maiou

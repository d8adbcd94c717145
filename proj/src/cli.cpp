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

#include "maiou/cli.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>

#include "maiou/errors.hpp"
#include "maiou/log.hpp"
#include "maiou/reports.hpp"

namespace maiou {

using nlohmann::json;

namespace {

void write_file(const std::filesystem::path& path, const std::string& body) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw InputError("cannot write " + path.string());
  }
  out << body;
}

void write_json(const std::filesystem::path& path, const json& value) {
  write_file(path, value.dump(2) + "\n");
}

std::filesystem::path prepare_out_dir(const RunConfig& config) {
  std::filesystem::path dir(config.out_dir);
  std::filesystem::create_directories(dir);
  write_json(dir / "run_config.json", run_config_json(config));
  return dir;
}

LoadResult load_dataset(const RunConfig& config) {
  if (config.dataset.empty()) {
    throw UsageError("this command needs a dataset (--dataset PATH)");
  }
  LoadOptions options;
  options.include_crowd = config.include_crowd;
  LoadResult result = load_annotations(config.dataset, options);
  log::info("loaded " + std::to_string(result.scenes.size()) + " scenes, " +
            std::to_string(result.total_gts()) + " ground truths from " +
            config.dataset);
  return result;
}

std::vector<int> parse_int_list(const json& value, const char* key) {
  if (!value.is_array()) {
    throw UsageError(std::string("config key '") + key +
                     "' must be an array of integers");
  }
  std::vector<int> out;
  for (const json& v : value) out.push_back(v.get<int>());
  return out;
}

}  // namespace

void RunConfig::validate() const {
  if (workers < 1) throw UsageError("workers must be >= 1");
  anchors.validate();
  if (assigners.empty()) throw UsageError("need at least one assigner spec");
  if (stats.bins < 1) throw UsageError("stats bins must be >= 1");
  if (bench.repetitions < 1) throw UsageError("bench repetitions must be >= 1");
  if (bench.grids.empty()) throw UsageError("bench needs at least one grid");
  for (int g : bench.grids) {
    if (g < 1) throw UsageError("bench grid sizes must be positive");
  }
  for (int g : bench.gt_counts) {
    if (g < 1) throw UsageError("bench gt counts must be positive");
  }
}

void apply_config(RunConfig& config, const json& overlay) {
  if (!overlay.is_object()) {
    throw UsageError("config file must hold a JSON object");
  }
  for (const auto& [key, value] : overlay.items()) {
    if (key == "dataset") {
      config.dataset = value.get<std::string>();
    } else if (key == "out") {
      config.out_dir = value.get<std::string>();
    } else if (key == "workers") {
      config.workers = value.get<int>();
    } else if (key == "seed") {
      config.seed = value.get<std::uint64_t>();
    } else if (key == "include_crowd") {
      config.include_crowd = value.get<bool>();
    } else if (key == "anchors") {
      for (const auto& [akey, avalue] : value.items()) {
        if (akey == "strides") {
          config.anchors.strides = parse_int_list(avalue, "anchors.strides");
        } else if (akey == "scales") {
          config.anchors.scales = avalue.get<std::vector<double>>();
        } else if (akey == "ratios") {
          config.anchors.ratios = avalue.get<std::vector<double>>();
        } else if (akey == "offset") {
          config.anchors.offset = avalue.get<double>();
        } else {
          throw UsageError("unknown config key 'anchors." + akey + "'");
        }
      }
    } else if (key == "assigners") {
      config.assigners.clear();
      for (const json& spec : value) {
        config.assigners.push_back(AssignerSpec::parse(spec.get<std::string>()));
      }
    } else if (key == "stats") {
      for (const auto& [skey, svalue] : value.items()) {
        if (skey == "bins") {
          config.stats.bins = svalue.get<int>();
        } else if (skey == "select") {
          config.stats.mob = false;
          config.stats.joint = false;
          for (const json& sel : svalue) {
            const std::string name = sel.get<std::string>();
            if (name == "mob") {
              config.stats.mob = true;
            } else if (name == "joint") {
              config.stats.joint = true;
            } else {
              throw UsageError("unknown stats selection '" + name +
                               "' (valid: mob, joint)");
            }
          }
        } else {
          throw UsageError("unknown config key 'stats." + skey + "'");
        }
      }
    } else if (key == "bench") {
      for (const auto& [bkey, bvalue] : value.items()) {
        if (bkey == "grids") {
          config.bench.grids = parse_int_list(bvalue, "bench.grids");
        } else if (bkey == "anchor_counts") {
          config.bench.anchor_counts =
              parse_int_list(bvalue, "bench.anchor_counts");
        } else if (bkey == "gt_counts") {
          config.bench.gt_counts = parse_int_list(bvalue, "bench.gt_counts");
        } else if (bkey == "repetitions") {
          config.bench.repetitions = bvalue.get<int>();
        } else {
          throw UsageError("unknown config key 'bench." + bkey + "'");
        }
      }
    } else {
      throw UsageError("unknown config key '" + key + "'");
    }
  }
}

RunConfig load_run_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw InputError("cannot open config file: " + path);
  }
  json overlay;
  try {
    overlay = json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError("malformed JSON in " + path + ": " + e.what());
  }
  RunConfig config;
  apply_config(config, overlay);
  return config;
}

json run_config_json(const RunConfig& config) {
  json assigners = json::array();
  for (const AssignerSpec& spec : config.assigners) {
    assigners.push_back(spec.name());
  }
  json select = json::array();
  if (config.stats.mob) select.push_back("mob");
  if (config.stats.joint) select.push_back("joint");
  return json{
      {"schema_version", kSchemaVersion},
      {"dataset", config.dataset},
      {"out", config.out_dir},
      {"workers", config.workers},
      {"seed", config.seed},
      {"include_crowd", config.include_crowd},
      {"anchors",
       {{"strides", config.anchors.strides},
        {"scales", config.anchors.scales},
        {"ratios", config.anchors.ratios},
        {"offset", config.anchors.offset}}},
      {"assigners", assigners},
      {"stats", {{"bins", config.stats.bins}, {"select", select}}},
      {"bench",
       {{"grids", config.bench.grids},
        {"anchor_counts", config.bench.anchor_counts},
        {"gt_counts", config.bench.gt_counts},
        {"repetitions", config.bench.repetitions}}}};
}

int cmd_assign(const RunConfig& config) {
  config.validate();
  const AssignerSpec& spec = config.assigners.front();
  const LoadResult data = load_dataset(config);

  json scenes = json::array();
  std::int64_t total_anchors = 0;
  std::int64_t total_gts = 0;
  std::int64_t totals[3] = {0, 0, 0};
  for (const Scene& scene : data.scenes) {
    const AnchorSet anchors =
        AnchorSet::generate(scene.height, scene.width, config.anchors);
    const AssignmentResult result =
        run_assigner(spec, anchors, scene.gts, config.workers);

    json entry{{"image_id", scene.image_id},
               {"width", scene.width},
               {"height", scene.height},
               {"anchors", anchors.size()},
               {"gts", scene.gts.size()},
               {"positives", result.count(AnchorLabelKind::Positive)},
               {"negatives", result.count(AnchorLabelKind::Negative)},
               {"ignores", result.count(AnchorLabelKind::Ignore)},
               {"per_gt_positives", result.per_gt_positives},
               {"adaptive_thresholds", result.adaptive_thresholds}};
    scenes.push_back(entry);

    total_anchors += static_cast<std::int64_t>(anchors.size());
    total_gts += static_cast<std::int64_t>(scene.gts.size());
    totals[0] += result.count(AnchorLabelKind::Positive);
    totals[1] += result.count(AnchorLabelKind::Negative);
    totals[2] += result.count(AnchorLabelKind::Ignore);
  }

  const json summary{{"schema_version", kSchemaVersion},
                     {"command", "assign"},
                     {"spec", spec.name()},
                     {"scenes", scenes},
                     {"totals",
                      {{"anchors", total_anchors},
                       {"gts", total_gts},
                       {"positives", totals[0]},
                       {"negatives", totals[1]},
                       {"ignores", totals[2]}}}};

  const auto dir = prepare_out_dir(config);
  write_json(dir / "assign_summary.json", summary);
  std::cout << "assign: " << data.scenes.size() << " scenes, " << totals[0]
            << " positives -> " << (dir / "assign_summary.json").string()
            << "\n";
  return 0;
}

int cmd_stats(const RunConfig& config) {
  config.validate();
  if (!config.stats.mob && !config.stats.joint) {
    throw UsageError("stats: empty analysis selection (choose mob, joint, or "
                     "both)");
  }
  const LoadResult data = load_dataset(config);

  std::optional<MobHistogram> mob_report;
  std::optional<JointHistogram> joint_report;
  if (config.stats.mob) {
    mob_report = mob_histogram(data.scenes, config.stats.bins);
  }
  if (config.stats.joint) {
    joint_report = joint_histogram(data.scenes, config.anchors,
                                   config.stats.bins, config.workers);
  }

  const auto dir = prepare_out_dir(config);
  if (mob_report) {
    write_json(dir / "mob_histogram.json", report_json(*mob_report));
    write_file(dir / "mob_histogram.csv", mob_histogram_csv(*mob_report));
    std::cout << "mob: " << mob_report->num_gts << " gts, fraction below 0.5 = "
              << mob_report->fraction_below_half << "\n";
  }
  if (joint_report) {
    write_json(dir / "joint_histogram.json", report_json(*joint_report));
    write_file(dir / "joint_histogram.csv",
               joint_histogram_csv(*joint_report));
    std::cout << "joint: " << joint_report->pairs << " pairs, low-IoU/high-maIoU = "
              << joint_report->low_iou_high_maiou << ", high-IoU/low-maIoU = "
              << joint_report->high_iou_low_maiou << "\n";
  }
  std::cout << "stats written to " << dir.string() << "\n";
  return 0;
}

int cmd_bench(const RunConfig& config) {
  config.validate();
  const BenchReport report =
      bench_maiou(config.bench.grids, config.bench.anchor_counts,
                  config.bench.gt_counts, config.bench.repetitions,
                  config.seed);

  const auto dir = prepare_out_dir(config);
  write_json(dir / "bench.json", report_json(report));
  std::cout << bench_table(report);
  return 0;
}

int cmd_compare(const RunConfig& config) {
  config.validate();
  if (config.assigners.size() < 2) {
    throw UsageError("compare needs at least two assigner specs (--spec)");
  }
  const LoadResult data = load_dataset(config);
  const CompareReport report = compare_assigners(
      data.scenes, config.anchors, config.assigners, config.workers);

  const auto dir = prepare_out_dir(config);
  write_json(dir / "compare.json", report_json(report));
  std::cout << compare_table(report);
  return 0;
}

}  // namespace maiou

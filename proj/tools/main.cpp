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

#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "maiou/cli.hpp"
#include "maiou/errors.hpp"

namespace {

using maiou::RunConfig;

// Flags land in this staging struct first; only flags the user actually
// passed override the config file.
struct FlagValues {
  std::string config_path;
  std::string dataset;
  std::string out_dir;
  int workers = 1;
  std::uint64_t seed = 0;
  bool include_crowd = false;
  std::vector<std::string> specs;
  int bins = 20;
  std::string select;
  std::vector<int> grids;
  std::vector<int> gt_counts;
  std::vector<int> anchor_counts;
  int repetitions = 5;
};

void add_common_flags(CLI::App* cmd, FlagValues& flags) {
  cmd->add_option("--config", flags.config_path,
                  "JSON config file; flags override its values");
  cmd->add_option("--dataset", flags.dataset,
                  "COCO instances annotation JSON");
  cmd->add_option("--out", flags.out_dir, "output directory");
  cmd->add_option("--workers", flags.workers, "worker thread count");
  cmd->add_option("--seed", flags.seed, "RNG seed for synthetic data");
  cmd->add_flag("--include-crowd", flags.include_crowd,
                "keep iscrowd=1 annotations");
}

RunConfig build_config(const CLI::App* cmd, const FlagValues& flags) {
  RunConfig config;
  if (cmd->count("--config") > 0) {
    config = maiou::load_run_config(flags.config_path);
  }
  if (cmd->count("--dataset") > 0) config.dataset = flags.dataset;
  if (cmd->count("--out") > 0) config.out_dir = flags.out_dir;
  if (cmd->count("--workers") > 0) config.workers = flags.workers;
  if (cmd->count("--seed") > 0) config.seed = flags.seed;
  if (cmd->count("--include-crowd") > 0) {
    config.include_crowd = flags.include_crowd;
  }
  if (cmd->count("--spec") > 0) {
    config.assigners.clear();
    for (const std::string& text : flags.specs) {
      config.assigners.push_back(maiou::AssignerSpec::parse(text));
    }
  }
  if (cmd->count("--bins") > 0) config.stats.bins = flags.bins;
  if (cmd->count("--select") > 0) {
    config.stats.mob = false;
    config.stats.joint = false;
    std::istringstream in(flags.select);
    std::string name;
    while (std::getline(in, name, ',')) {
      if (name == "mob") {
        config.stats.mob = true;
      } else if (name == "joint") {
        config.stats.joint = true;
      } else if (!name.empty()) {
        throw maiou::UsageError("unknown stats selection '" + name +
                                "' (valid: mob, joint)");
      }
    }
  }
  if (cmd->count("--grid") > 0) config.bench.grids = flags.grids;
  if (cmd->count("--gts") > 0) config.bench.gt_counts = flags.gt_counts;
  if (cmd->count("--anchors") > 0) {
    config.bench.anchor_counts = flags.anchor_counts;
  }
  if (cmd->count("--repetitions") > 0) {
    config.bench.repetitions = flags.repetitions;
  }
  return config;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"mask-aware IoU toolkit: anchor assignment, statistics, and "
               "benchmarks"};
  app.require_subcommand(1);

  FlagValues flags;
  int (*command)(const RunConfig&) = nullptr;

  CLI::App* assign = app.add_subcommand(
      "assign", "label anchors for every scene and write summaries");
  add_common_flags(assign, flags);
  assign->add_option("--spec", flags.specs,
                     "assigner spec, e.g. atss:maiou:9 or fixed:iou:0.4:0.5");
  assign->callback([&] { command = maiou::cmd_assign; });

  CLI::App* stats = app.add_subcommand(
      "stats", "MOB and IoU-vs-maIoU histograms over a dataset");
  add_common_flags(stats, flags);
  stats->add_option("--bins", flags.bins, "histogram bins on [0, 1]");
  stats->add_option("--select", flags.select,
                    "comma list of analyses: mob,joint");
  stats->callback([&] { command = maiou::cmd_stats; });

  CLI::App* bench = app.add_subcommand(
      "bench", "time brute-force vs integral-image maIoU");
  add_common_flags(bench, flags);
  bench->add_option("--grid", flags.grids, "square image sizes to bench");
  bench->add_option("--gts", flags.gt_counts, "ground truths per scene");
  bench->add_option("--anchors", flags.anchor_counts,
                    "anchor counts (0 = default config count)");
  bench->add_option("--repetitions", flags.repetitions,
                    "timed repetitions after one warm-up");
  bench->callback([&] { command = maiou::cmd_bench; });

  CLI::App* compare = app.add_subcommand(
      "compare", "run several assigners and diff their labels");
  add_common_flags(compare, flags);
  compare->add_option("--spec", flags.specs,
                      "assigner spec (give two or more)");
  compare->callback([&] { command = maiou::cmd_compare; });

  CLI11_PARSE(app, argc, argv);

  try {
    const CLI::App* active = app.get_subcommands().front();
    return command(build_config(active, flags));
  } catch (const maiou::UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

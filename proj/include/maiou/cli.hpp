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

#ifndef MAIOU_CLI_HPP_
#define MAIOU_CLI_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "maiou/analysis.hpp"

namespace maiou {

struct StatsOptions {
  int bins = 20;
  bool mob = true;
  bool joint = true;
};

struct BenchOptions {
  std::vector<int> grids{8, 550};
  std::vector<int> anchor_counts;  // empty: default config count per grid
  std::vector<int> gt_counts{8};
  int repetitions = 5;
};

// Everything one run needs, assembled from defaults, an optional JSON
// config file, and flag overrides (flags win). The effective config is
// written into the output directory as run_config.json.
struct RunConfig {
  std::string dataset;
  std::string out_dir = "maiou-out";
  int workers = 1;
  std::uint64_t seed = 0;
  bool include_crowd = false;
  AnchorConfig anchors;
  std::vector<AssignerSpec> assigners{AssignerSpec{}};  // default atss:maiou
  StatsOptions stats;
  BenchOptions bench;

  void validate() const;
};

// Overlays `overlay` (parsed config file content) onto `config`. Unknown
// keys raise UsageError so typos fail loudly.
void apply_config(RunConfig& config, const nlohmann::json& overlay);

// Reads and overlays a JSON config file.
RunConfig load_run_config(const std::string& path);

nlohmann::json run_config_json(const RunConfig& config);

// Command entry points. Each validates and computes everything before
// writing any file, then returns 0. Failures throw; the binary maps
// UsageError to exit code 2 and other errors to 1.
int cmd_assign(const RunConfig& config);
int cmd_stats(const RunConfig& config);
int cmd_bench(const RunConfig& config);
int cmd_compare(const RunConfig& config);

}  // namespace maiou

#endif  // MAIOU_CLI_HPP_

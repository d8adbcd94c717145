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

#ifndef MAIOU_REPORTS_HPP_
#define MAIOU_REPORTS_HPP_

#include <string>
#include <vector>

#include <json.hpp>

#include "maiou/analysis.hpp"

namespace maiou {

inline constexpr int kSchemaVersion = 1;

nlohmann::json report_json(const MobHistogram& report);
nlohmann::json report_json(const JointHistogram& report);
nlohmann::json report_json(const BenchReport& report);
nlohmann::json report_json(const CompareReport& report);

// RFC-4180 field quoting (quotes only when the field needs it).
std::string csv_field(const std::string& value);

std::string mob_histogram_csv(const MobHistogram& report);
std::string joint_histogram_csv(const JointHistogram& report);

// Aligned-column plain-text rendering. Each row is one line; the first row
// is the header.
std::string text_table(const std::vector<std::vector<std::string>>& rows);

std::string bench_table(const BenchReport& report);
std::string compare_table(const CompareReport& report);

}  // namespace maiou

#endif  // MAIOU_REPORTS_HPP_

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

#ifndef MAIOU_LOG_HPP_
#define MAIOU_LOG_HPP_

#include <string>

namespace maiou::log {

// Levels in increasing verbosity; selected once per process from the
// MAIOU_LOG environment variable (error|warn|info|debug, default warn).
enum class Level { Error = 0, Warn = 1, Info = 2, Debug = 3 };

Level level();

void error(const std::string& message);
void warn(const std::string& message);
void info(const std::string& message);
void debug(const std::string& message);

}  // namespace maiou::log

#endif  // MAIOU_LOG_HPP_

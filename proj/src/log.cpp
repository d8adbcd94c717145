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

#include "maiou/log.hpp"

#include <cstdlib>
#include <iostream>
#include <mutex>

namespace maiou::log {

namespace {

Level read_level() {
  const char* env = std::getenv("MAIOU_LOG");
  if (env == nullptr) return Level::Warn;
  const std::string value(env);
  if (value == "error") return Level::Error;
  if (value == "warn") return Level::Warn;
  if (value == "info") return Level::Info;
  if (value == "debug") return Level::Debug;
  return Level::Warn;
}

std::mutex& mutex() {
  static std::mutex m;
  return m;
}

void emit(Level lvl, const char* tag, const std::string& message) {
  if (static_cast<int>(lvl) > static_cast<int>(level())) return;
  std::lock_guard<std::mutex> lock(mutex());
  std::cerr << "[" << tag << "] " << message << "\n";
}

}  // namespace

Level level() {
  static const Level lvl = read_level();
  return lvl;
}

void error(const std::string& message) { emit(Level::Error, "error", message); }
void warn(const std::string& message) { emit(Level::Warn, "warn", message); }
void info(const std::string& message) { emit(Level::Info, "info", message); }
void debug(const std::string& message) { emit(Level::Debug, "debug", message); }

}  // namespace maiou::log

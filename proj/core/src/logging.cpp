// Copyright 2026 The maxent-hierarchy Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "maxent/logging.hpp"

#include <atomic>
#include <cstdlib>
#include <iostream>
#include <string_view>

namespace maxent::log {

namespace {

Level parse_env() {
  const char* raw = std::getenv("MAXENT_LOG");
  if (raw == nullptr) return Level::warn;
  std::string_view v(raw);
  if (v == "error") return Level::error;
  if (v == "warn") return Level::warn;
  if (v == "info") return Level::info;
  if (v == "debug") return Level::debug;
  return Level::warn;
}

std::atomic<int>& threshold_storage() {
  static std::atomic<int> value{static_cast<int>(parse_env())};
  return value;
}

const char* label(Level level) {
  switch (level) {
    case Level::error: return "error";
    case Level::warn: return "warn";
    case Level::info: return "info";
    case Level::debug: return "debug";
  }
  return "?";
}

}  // namespace

Level threshold() { return static_cast<Level>(threshold_storage().load()); }

void set_threshold(Level level) {
  threshold_storage().store(static_cast<int>(level));
}

bool enabled(Level level) {
  return static_cast<int>(level) <= threshold_storage().load();
}

void write(Level level, const std::string& message) {
  if (!enabled(level)) return;
  std::cerr << "[maxent:" << label(level) << "] " << message << '\n';
}

}  // namespace maxent::log

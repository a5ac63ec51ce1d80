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

#ifndef MAXENT_LOGGING_HPP
#define MAXENT_LOGGING_HPP

#include <string>

namespace maxent::log {

enum class Level : int { error = 0, warn = 1, info = 2, debug = 3 };

// Threshold is initialized once from the MAXENT_LOG environment variable
// (error|warn|info|debug, default warn) and can be overridden at runtime.
Level threshold();
void set_threshold(Level level);

bool enabled(Level level);

// Writes "[maxent:<level>] <message>\n" to stderr when enabled.
void write(Level level, const std::string& message);

inline void error(const std::string& m) { write(Level::error, m); }
inline void warn(const std::string& m) { write(Level::warn, m); }
inline void info(const std::string& m) { write(Level::info, m); }
inline void debug(const std::string& m) { write(Level::debug, m); }

}  // namespace maxent::log

#endif  // MAXENT_LOGGING_HPP

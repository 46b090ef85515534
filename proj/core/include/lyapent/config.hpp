// Copyright 2026 The lyapent Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Flat `key = value` configuration text.
//
//   # comment
//   model.eta = 0.1        # trailing comments are allowed
//   initial_state = |++>
//
// Keys are dotted paths; later duplicates are rejected.

#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace lyapent {

/// Invalid configuration. `field()` names the offending key when known.
class ConfigError : public std::invalid_argument {
 public:
  ConfigError(std::string field, const std::string& message)
      : std::invalid_argument(field.empty() ? message : field + ": " + message),
        field_(std::move(field)) {}
  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

class KeyValues {
 public:
  static KeyValues parse(std::string_view text);
  static KeyValues load(const std::filesystem::path& path);

  bool contains(const std::string& key) const { return values_.count(key) > 0; }
  std::optional<std::string> get(const std::string& key) const;
  /// Marks the key as used.
  std::optional<std::string> take(const std::string& key);

  std::optional<double> take_double(const std::string& key);
  std::optional<long long> take_int(const std::string& key);
  std::optional<bool> take_bool(const std::string& key);

  /// Keys never passed to take*().
  std::vector<std::string> unused() const;

 private:
  std::map<std::string, std::string> values_;
  std::map<std::string, bool> used_;
};

std::string trim(std::string_view s);
std::vector<std::string> split(std::string_view s, char sep);

/// Strict double parse (whole string must be consumed).
double parse_double(std::string_view text, const std::string& field);

}  // namespace lyapent

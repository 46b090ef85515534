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

#include "lyapent/config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace lyapent {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    const auto pos = s.find(sep, start);
    out.push_back(trim(s.substr(start, pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

double parse_double(std::string_view text, const std::string& field) {
  const std::string t = trim(text);
  double value = 0.0;
  const auto* begin = t.data();
  const auto* end = t.data() + t.size();
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (t.empty() || ec != std::errc{} || ptr != end || !std::isfinite(value)) {
    throw ConfigError(field, "expected a finite number, got '" + t + "'");
  }
  return value;
}

KeyValues KeyValues::parse(std::string_view text) {
  KeyValues kv;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    const std::string body = trim(line);
    if (body.empty()) continue;
    const auto eq = body.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("", "line " + std::to_string(lineno) +
                                ": expected 'key = value'");
    }
    const std::string key = trim(std::string_view(body).substr(0, eq));
    const std::string value = trim(std::string_view(body).substr(eq + 1));
    if (key.empty()) {
      throw ConfigError("", "line " + std::to_string(lineno) + ": empty key");
    }
    if (kv.values_.count(key) > 0) {
      throw ConfigError(key, "duplicate key on line " + std::to_string(lineno));
    }
    kv.values_[key] = value;
    kv.used_[key] = false;
  }
  return kv;
}

KeyValues KeyValues::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw ConfigError("", "cannot open config file '" + path.string() + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

std::optional<std::string> KeyValues::get(const std::string& key) const {
  const auto it = values_.find(key);
  if (it == values_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::string> KeyValues::take(const std::string& key) {
  const auto it = values_.find(key);
  if (it == values_.end()) return std::nullopt;
  used_[key] = true;
  return it->second;
}

std::optional<double> KeyValues::take_double(const std::string& key) {
  const auto v = take(key);
  if (!v) return std::nullopt;
  return parse_double(*v, key);
}

std::optional<long long> KeyValues::take_int(const std::string& key) {
  const auto v = take(key);
  if (!v) return std::nullopt;
  long long value = 0;
  const auto* end = v->data() + v->size();
  const auto [ptr, ec] = std::from_chars(v->data(), end, value);
  if (v->empty() || ec != std::errc{} || ptr != end) {
    throw ConfigError(key, "expected an integer, got '" + *v + "'");
  }
  return value;
}

std::optional<bool> KeyValues::take_bool(const std::string& key) {
  const auto v = take(key);
  if (!v) return std::nullopt;
  std::string t = *v;
  std::transform(t.begin(), t.end(), t.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  if (t == "true" || t == "1" || t == "yes") return true;
  if (t == "false" || t == "0" || t == "no") return false;
  throw ConfigError(key, "expected true/false, got '" + *v + "'");
}

std::vector<std::string> KeyValues::unused() const {
  std::vector<std::string> out;
  for (const auto& [key, used] : used_) {
    if (!used) out.push_back(key);
  }
  return out;
}

}  // namespace lyapent

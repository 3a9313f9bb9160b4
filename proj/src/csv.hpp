// Copyright 2026 The Edgeplan Authors.
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

// Minimal reader for the plain comma-separated files this project reads.
// No quoting: none of the schemas carry commas inside fields.

#pragma once

#include <charconv>
#include <cstdint>
#include <initializer_list>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "edgeplan/errors.hpp"

namespace edgeplan::internal {

inline std::string_view Trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

inline bool ParseInt(std::string_view s, std::int64_t& out) {
  s = Trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size() && !s.empty();
}

inline bool ParseDouble(std::string_view s, double& out) {
  s = Trim(s);
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size() && !s.empty();
}

class CsvReader {
 public:
  explicit CsvReader(std::istream& in) : in_(in) {}

  // Reads the first non-blank line and checks it names exactly `columns`.
  void ExpectHeader(std::initializer_list<std::string_view> columns) {
    std::vector<std::string> fields;
    if (!Next(fields)) throw EmptyInput("input is empty");
    bool ok = fields.size() == columns.size();
    std::size_t i = 0;
    for (std::string_view column : columns) {
      if (!ok) break;
      ok = fields[i++] == column;
    }
    if (!ok) {
      std::string expected;
      for (std::string_view column : columns) expected += (expected.empty() ? "" : ",") + std::string(column);
      throw MalformedInput("line " + std::to_string(line_) + ": expected header '" + expected + "'");
    }
  }

  // Splits the next non-blank line on commas. Returns false at end of input.
  bool Next(std::vector<std::string>& fields) {
    std::string line;
    while (std::getline(in_, line)) {
      ++line_;
      const std::string_view trimmed = Trim(line);
      if (trimmed.empty()) continue;
      fields.clear();
      std::size_t begin = 0;
      while (true) {
        const std::size_t comma = trimmed.find(',', begin);
        fields.emplace_back(Trim(trimmed.substr(begin, comma - begin)));
        if (comma == std::string_view::npos) break;
        begin = comma + 1;
      }
      return true;
    }
    return false;
  }

  std::int64_t line() const { return line_; }

 private:
  std::istream& in_;
  std::int64_t line_ = 0;
};

}  // namespace edgeplan::internal

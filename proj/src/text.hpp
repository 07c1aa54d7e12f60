// Copyright 2026 The kuniform Authors
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

// Line-oriented helpers shared by the text file formats.

#ifndef KUF_SRC_TEXT_HPP_
#define KUF_SRC_TEXT_HPP_

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace kuf::text {

/// A non-blank line with its comment stripped, split on whitespace.
struct Line {
  std::size_t number;  // 1-based
  std::vector<std::string> tokens;
};

/// Drops everything after '#', blank lines, and surrounding whitespace.
std::vector<Line> tokenize(std::string_view text);

std::uint64_t parse_uint(const std::string& token, std::size_t line,
                         std::string_view what);
std::int64_t parse_int(const std::string& token, std::size_t line,
                       std::string_view what);
double parse_double(const std::string& token, std::size_t line,
                    std::string_view what);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view content);

}  // namespace kuf::text

#endif  // KUF_SRC_TEXT_HPP_

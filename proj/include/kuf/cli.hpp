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

#ifndef KUF_CLI_HPP_
#define KUF_CLI_HPP_

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace kuf::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line (without the program name). Reports go to `out`
/// as JSON (or a text grid for `table --format text`); one-line
/// diagnostics go to `err`. Returns kExitPass, kExitFail for a verified
/// failure or refused construction, kExitUsage for bad usage or input.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

/// "fnv1a64:" followed by 16 lowercase hex digits.
std::string fnv1a64(std::string_view data);

}  // namespace kuf::cli

#endif  // KUF_CLI_HPP_

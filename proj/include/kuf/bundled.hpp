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

#ifndef KUF_BUNDLED_HPP_
#define KUF_BUNDLED_HPP_

#include <string>
#include <string_view>
#include <vector>

namespace kuf {

/// Contents of a file shipped under data/, by relative path
/// (e.g. "codes/golay12_3.code"). Throws DomainError for unknown names.
std::string_view bundled_text(std::string_view name);

std::vector<std::string> bundled_names();

}  // namespace kuf

#endif  // KUF_BUNDLED_HPP_

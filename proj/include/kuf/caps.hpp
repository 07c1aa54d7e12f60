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

#ifndef KUF_CAPS_HPP_
#define KUF_CAPS_HPP_

#include <cstdint>
#include <string_view>

namespace kuf {

/// Limits on exhaustive enumerations. Every computation that would exceed
/// one of these refuses with CapExceeded.
struct Caps {
  std::uint64_t field_order = 1u << 16;
  std::uint64_t codewords = 1u << 24;
  std::uint64_t oa_rows = 1u << 20;
  std::uint64_t pairwise_rows = 1u << 14;
  std::uint64_t matrix_dim = 4096;
  std::uint64_t qecc_errors = 1u << 22;
  std::uint64_t state_terms = 1u << 24;
};

Caps caps();
void set_caps(const Caps& c);

/// Applies overrides of the form "codewords=33554432,matrix_dim=8192".
/// Unknown keys or malformed values throw DomainError.
Caps parse_caps(std::string_view spec, Caps base = Caps{});

/// Reads KUF_CAPS from the environment, if set, and installs it.
void load_caps_from_env();

}  // namespace kuf

#endif  // KUF_CAPS_HPP_

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

#include <atomic>
#include <cstdlib>
#include <mutex>
#include <string>

#include "kuf/caps.hpp"
#include "kuf/error.hpp"
#include "kuf/parallel.hpp"

namespace kuf {
namespace {

std::mutex caps_mu;
Caps current_caps;
std::atomic<unsigned> threads{1};

}  // namespace

Caps caps() {
  std::lock_guard<std::mutex> lock(caps_mu);
  return current_caps;
}

void set_caps(const Caps& c) {
  std::lock_guard<std::mutex> lock(caps_mu);
  current_caps = c;
}

Caps parse_caps(std::string_view spec, Caps base) {
  std::size_t pos = 0;
  while (pos < spec.size()) {
    std::size_t end = spec.find(',', pos);
    if (end == std::string_view::npos) end = spec.size();
    const std::string_view item = spec.substr(pos, end - pos);
    pos = end + 1;
    if (item.empty()) continue;
    const std::size_t eq = item.find('=');
    if (eq == std::string_view::npos) {
      throw DomainError("cap override '" + std::string(item) +
                        "' is not key=value");
    }
    const std::string key(item.substr(0, eq));
    const std::string val(item.substr(eq + 1));
    std::uint64_t v = 0;
    try {
      std::size_t used = 0;
      v = std::stoull(val, &used);
      if (used != val.size()) throw std::invalid_argument(val);
    } catch (const std::exception&) {
      throw DomainError("cap '" + key + "' has non-integer value '" + val + "'");
    }
    if (key == "field_order") {
      base.field_order = v;
    } else if (key == "codewords") {
      base.codewords = v;
    } else if (key == "oa_rows") {
      base.oa_rows = v;
    } else if (key == "pairwise_rows") {
      base.pairwise_rows = v;
    } else if (key == "matrix_dim") {
      base.matrix_dim = v;
    } else if (key == "qecc_errors") {
      base.qecc_errors = v;
    } else if (key == "state_terms") {
      base.state_terms = v;
    } else {
      throw DomainError("unknown cap '" + key + "'");
    }
  }
  return base;
}

void load_caps_from_env() {
  if (const char* env = std::getenv("KUF_CAPS")) {
    set_caps(parse_caps(env, caps()));
  }
}

unsigned thread_count() { return threads.load(); }

void set_thread_count(unsigned n) { threads.store(n == 0 ? 1 : n); }

}  // namespace kuf

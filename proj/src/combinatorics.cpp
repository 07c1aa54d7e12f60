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

#include "kuf/combinatorics.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace kuf {

std::optional<std::uint64_t> checked_pow(std::uint64_t base, unsigned exp) {
  constexpr std::uint64_t kLimit = std::uint64_t{1} << 63;
  std::uint64_t r = 1;
  for (unsigned i = 0; i < exp; ++i) {
    if (base != 0 && r > kLimit / base) return std::nullopt;
    r *= base;
  }
  return r;
}

std::uint64_t binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (unsigned i = 1; i <= k; ++i) {
    // r * (n - k + i) / i is exact at every step; divide first via gcd.
    std::uint64_t num = n - k + i, den = i;
    const std::uint64_t g = std::gcd(r, den);
    r /= g;
    den /= g;
    num /= den;
    if (r > std::numeric_limits<std::uint64_t>::max() / num) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    r *= num;
  }
  return r;
}

bool next_subset(std::vector<int>& subset, int n) {
  const int k = static_cast<int>(subset.size());
  int i = k - 1;
  while (i >= 0 && subset[i] == n - k + i) --i;
  if (i < 0) return false;
  ++subset[i];
  for (int j = i + 1; j < k; ++j) subset[j] = subset[j - 1] + 1;
  return true;
}

std::vector<std::vector<int>> k_subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > n) return out;
  std::vector<int> s(k);
  std::iota(s.begin(), s.end(), 0);
  do {
    out.push_back(s);
  } while (next_subset(s, n));
  return out;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t f = 2; f * f <= n; ++f) {
    if (n % f == 0) return false;
  }
  return true;
}

std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (std::uint64_t f = 2; f * f <= n; ++f) {
    unsigned e = 0;
    while (n % f == 0) {
      n /= f;
      ++e;
    }
    if (e) out.emplace_back(f, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::optional<std::pair<unsigned, unsigned>> prime_power(std::uint64_t n) {
  const auto f = factorize(n);
  if (f.size() != 1) return std::nullopt;
  return std::make_pair(static_cast<unsigned>(f[0].first), f[0].second);
}

}  // namespace kuf

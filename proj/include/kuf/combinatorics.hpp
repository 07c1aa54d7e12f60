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

#ifndef KUF_COMBINATORICS_HPP_
#define KUF_COMBINATORICS_HPP_

#include <cstdint>
#include <optional>
#include <vector>

namespace kuf {

/// base^exp, or nullopt if the result does not fit in 63 bits.
std::optional<std::uint64_t> checked_pow(std::uint64_t base, unsigned exp);

/// Binomial coefficient, saturating at UINT64_MAX.
std::uint64_t binomial(unsigned n, unsigned k);

/// All k-subsets of {0, ..., n-1} in lexicographic order.
std::vector<std::vector<int>> k_subsets(int n, int k);

/// Advances `subset` (sorted, values in [0, n)) to the next k-subset in
/// lexicographic order. Returns false after the last one.
bool next_subset(std::vector<int>& subset, int n);

bool is_prime(std::uint64_t n);

/// (prime, exponent) pairs in increasing prime order.
std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n);

/// If n = p^m for a prime p, returns (p, m).
std::optional<std::pair<unsigned, unsigned>> prime_power(std::uint64_t n);

}  // namespace kuf

#endif  // KUF_COMBINATORICS_HPP_

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

#ifndef KUF_OA_HPP_
#define KUF_OA_HPP_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "kuf/codes.hpp"

namespace kuf {

/// An r × N array over the symbols {0, ..., d-1} with a claimed strength.
///
/// Arrays built from a linear code remember the generator of the columns
/// they keep, so distance queries can go through the code instead of
/// comparing row pairs.
class OrthogonalArray {
 public:
  using Symbol = std::uint16_t;

  /// `symbols` is row-major with N entries per row. Throws DomainError on
  /// ragged data, d < 1, d > 65536 or symbols outside [0, d).
  OrthogonalArray(unsigned d, std::size_t n, std::vector<Symbol> symbols,
                  int strength, std::string provenance = {});

  static OrthogonalArray from_rows(unsigned d,
                                   const std::vector<std::vector<unsigned>>& rows,
                                   int strength, std::string provenance = {});

  unsigned levels() const { return d_; }
  std::size_t factors() const { return n_; }
  std::size_t runs() const { return n_ == 0 ? 0 : symbols_.size() / n_; }
  int strength() const { return strength_; }
  /// r / d^k for the claimed strength, or nullopt when not an integer.
  std::optional<std::uint64_t> index() const;
  const std::string& provenance() const { return provenance_; }

  Symbol at(std::size_t row, std::size_t col) const {
    return symbols_[row * n_ + col];
  }
  std::span<const Symbol> row(std::size_t r) const {
    return {symbols_.data() + r * n_, n_};
  }
  const std::vector<Symbol>& symbols() const { return symbols_; }

  /// Generator of the code whose codewords (with multiplicity) are the rows,
  /// when the array came from oa_from_code.
  const std::optional<LinearCode>& source_code() const { return code_; }

 private:
  friend OrthogonalArray oa_from_code(const LinearCode& code);
  friend OrthogonalArray delete_columns(const OrthogonalArray& a,
                                        std::span<const std::size_t> cols);

  unsigned d_;
  std::size_t n_;
  std::vector<Symbol> symbols_;
  int strength_;
  std::string provenance_;
  std::optional<LinearCode> code_;
  // Rows are the codewords of code_ repeated this many times each.
  std::uint64_t code_multiplicity_ = 1;
};

/// All q^t codewords as rows, strength w⊥ - 1 (N for the full space).
/// Throws CapExceeded above caps().oa_rows.
OrthogonalArray oa_from_code(const LinearCode& code);

/// Exact check that every choice of k columns contains every k-tuple
/// exactly r / d^k times. False when r / d^k is not an integer.
bool verify_strength(const OrthogonalArray& a, int k);

/// Largest k with verify_strength true.
int max_strength(const OrthogonalArray& a);

/// Minimum Hamming distance between two distinct rows, 0 when some row is
/// duplicated. Linear arrays go through the code; others compare all pairs
/// and throw CapExceeded above caps().pairwise_rows runs.
int oa_min_distance(const OrthogonalArray& a);

/// Strength k and minimum distance at least k + 1.
bool is_irredundant(const OrthogonalArray& a, int k);

/// Strength k and, after removing any k columns, all rows distinct.
/// Independent of oa_min_distance; used to cross-check is_irredundant.
bool is_irredundant_by_deletion(const OrthogonalArray& a, int k);

/// Removes the listed columns. The claimed strength is kept (capped at the
/// new column count). Throws DomainError on bad indices or when nothing
/// would remain.
OrthogonalArray delete_columns(const OrthogonalArray& a,
                               std::span<const std::size_t> cols);

/// Deletes trailing columns down to `target_n`. The array must claim
/// strength >= k, and target_n must lie in [N - w + k + 1, N] where w is
/// the minimum distance; otherwise DomainError.
OrthogonalArray trim_to_iroa(const OrthogonalArray& a, int k,
                             std::size_t target_n);

/// Row multisets are equal.
bool same_rows(const OrthogonalArray& a, const OrthogonalArray& b);

/// A column permutation plus one symbol bijection per column taking one
/// array's rows onto another's: row x maps to y with
/// y[j] = symbol_maps[j][x[columns[j]]].
struct Relabeling {
  std::vector<std::size_t> columns;
  std::vector<std::vector<unsigned>> symbol_maps;
};

OrthogonalArray apply_relabeling(const OrthogonalArray& a,
                                 const Relabeling& map);

/// Searches for a relabeling of `a` with the same row multiset as `b`.
/// Backtracks column by column, pruning on the multiset of prefix
/// projections. Meant for small arrays.
std::optional<Relabeling> find_relabeling(const OrthogonalArray& a,
                                          const OrthogonalArray& b);

/// Text format: header `oa r N d k`, then r rows of N symbols.
std::string format_oa(const OrthogonalArray& a);
OrthogonalArray parse_oa(std::string_view text);
OrthogonalArray load_oa(const std::filesystem::path& path);
void save_oa(const OrthogonalArray& a, const std::filesystem::path& path);

}  // namespace kuf

#endif  // KUF_OA_HPP_

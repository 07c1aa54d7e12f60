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

#ifndef KUF_CODES_HPP_
#define KUF_CODES_HPP_

#include <cstdint>
#include <filesystem>
#include <functional>
#include <limits>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "kuf/gf.hpp"
#include "kuf/matrix.hpp"

namespace kuf {

/// Distance of a code with no nonzero codewords (the zero code).
inline constexpr int kInfiniteDistance = std::numeric_limits<int>::max();

/// Parity check matrix H: H · cᵀ = 0 exactly for the codewords c.
struct ParityCheck {
  GfMatrix h;
};

/// A linear [N, t, w]_q code stored by its generator matrix.
///
/// The generator always has full row rank. Dimension 0 is allowed only for
/// the zero code (the dual of a full space); its distance is
/// kInfiniteDistance. Minimum and dual distances are computed lazily by
/// exhaustive enumeration and published once; copies share the cache.
class LinearCode {
 public:
  using Element = FiniteField::Element;

  /// Throws RankError if `generator` is rank deficient and DomainError if it
  /// has no columns or entries outside the field.
  LinearCode(FieldPtr field, GfMatrix generator);

  static LinearCode zero_code(FieldPtr field, std::size_t length);

  const FiniteField& field() const { return *field_; }
  const FieldPtr& field_ptr() const { return field_; }
  std::size_t length() const { return generator_.cols(); }
  std::size_t dimension() const { return generator_.rows(); }
  const GfMatrix& generator() const { return generator_; }

  /// q^t, or nullopt when it does not fit in 63 bits.
  std::optional<std::uint64_t> size() const;

  /// Exact minimum nonzero Hamming weight; kInfiniteDistance for the zero
  /// code. Throws CapExceeded when q^t > caps().codewords.
  int min_distance() const;
  /// Minimum distance of the dual code.
  int dual_distance() const;

  ParityCheck parity_check() const;

  /// Calls fn(codeword) for all q^t codewords, coefficient vectors in
  /// lexicographic order of their element encodings (first row most
  /// significant). Throws CapExceeded above `cap`.
  void for_each_codeword(
      const std::function<void(std::span<const Element>)>& fn,
      std::uint64_t cap) const;

  /// True iff both codes have the same field, length and codeword set.
  bool same_codewords(const LinearCode& other) const;

 private:
  struct DistanceCache;

  FieldPtr field_;
  GfMatrix generator_;
  std::shared_ptr<DistanceCache> cache_;
};

/// Extended Reed–Solomon [q+1, t, q-t+2]_q code: one column
/// (1, x, ..., x^{t-1}) per field element x in encoding order, then the point
/// at infinity (0, ..., 0, 1). Requires 1 <= t <= q+1.
LinearCode mds_code(FieldPtr field, std::size_t t);

/// Annihilator code. The dual of a full space is the zero code.
LinearCode dual(const LinearCode& code);

inline int min_distance(const LinearCode& code) { return code.min_distance(); }
inline int dual_distance(const LinearCode& code) {
  return code.dual_distance();
}

/// Block-diagonal generator diag(G1, G2). Throws FieldMismatch.
LinearCode direct_sum(const LinearCode& a, const LinearCode& b);

/// N = 2t and G·Gᵀ = 0.
bool is_self_dual(const LinearCode& code);

/// Keeps the first `length` coordinates. Throws RankError when puncturing
/// collapses two codewords.
LinearCode puncture(const LinearCode& code, std::size_t length);

/// Smallest s such that some s columns of G are linearly dependent, or
/// kInfiniteDistance when all columns are independent. Equals the dual
/// distance; used as an independent route to it.
int smallest_dependent_columns(const LinearCode& code);

/// Text format: header `code p m N t`, then t rows of N element encodings.
/// `#` starts a comment. Distances are never stored.
std::string format_code(const LinearCode& code);

/// Throws ParseError (with line number), RankError, or FieldMismatch when
/// `expected` is given and differs from the file's field.
LinearCode parse_code(std::string_view text,
                      const FiniteField* expected = nullptr);

LinearCode load_code(const std::filesystem::path& path,
                     const FiniteField* expected = nullptr);
void save_code(const LinearCode& code, const std::filesystem::path& path);

/// "[N,t,w]_q" with w printed as "inf" for the zero code.
std::string describe(const LinearCode& code);

}  // namespace kuf

#endif  // KUF_CODES_HPP_

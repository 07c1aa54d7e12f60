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

#ifndef KUF_STATES_HPP_
#define KUF_STATES_HPP_

#include <complex>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "kuf/gaussian.hpp"
#include "kuf/oa.hpp"

namespace kuf {

/// Tolerance on |<psi|psi> - 1| for floating-point states.
inline constexpr double kNormTolerance = 1e-12;
/// Entrywise tolerance when comparing floating-point reductions.
inline constexpr double kEntryTolerance = 1e-10;

/// Sparse pure state on N parties of local dimension d.
///
/// A basis index packs the digits (x_0, ..., x_{N-1}) in base d with party 0
/// most significant, so sorting indices sorts tuples lexicographically.
/// Exact states store Gaussian-integer numerators z(x) with physical
/// amplitude z(x) / sqrt(r); floating states store complex amplitudes
/// directly (r = 1). Terms are sorted by index with no zeros or repeats.
class PureState {
 public:
  using Index = std::uint64_t;
  struct ExactTerm {
    Index index;
    GaussInt amp;
  };
  struct FloatTerm {
    Index index;
    std::complex<double> amp;
  };

  /// Sorts the terms and drops zeros. Throws DomainError on repeated or
  /// out-of-range indices, d^N above 2^63, or sum |z|^2 != r.
  static PureState exact(unsigned n, unsigned d, std::int64_t norm_sq,
                         std::vector<ExactTerm> terms,
                         std::string provenance = {});
  /// As above with the norm checked to kNormTolerance.
  static PureState floating(unsigned n, unsigned d,
                            std::vector<FloatTerm> terms,
                            std::string provenance = {});

  unsigned parties() const { return n_; }
  unsigned local_dim() const { return d_; }
  bool is_exact() const { return exact_; }
  std::int64_t norm_sq() const { return r_; }
  std::size_t term_count() const {
    return exact_ ? exact_terms_.size() : float_terms_.size();
  }
  const std::vector<ExactTerm>& exact_terms() const { return exact_terms_; }
  const std::vector<FloatTerm>& float_terms() const { return float_terms_; }
  const std::string& provenance() const { return provenance_; }
  void set_provenance(std::string p) { provenance_ = std::move(p); }

  /// d^N.
  Index dimension() const { return dim_; }
  std::vector<unsigned> digits(Index index) const;
  Index encode(std::span<const unsigned> digits) const;

  /// Physical amplitude of a basis index (0 if absent).
  std::complex<double> amplitude(Index index) const;
  /// Same state in floating mode.
  PureState to_float() const;

 private:
  PureState() = default;
  void init_shape(unsigned n, unsigned d);

  unsigned n_ = 0;
  unsigned d_ = 0;
  Index dim_ = 1;
  bool exact_ = true;
  std::int64_t r_ = 1;
  std::vector<ExactTerm> exact_terms_;
  std::vector<FloatTerm> float_terms_;
  std::string provenance_;
};

/// Sparse d^k × d^k operator on a party subset.
///
/// Exact operators hold Gaussian-integer numerators over one positive
/// denominator; floating operators hold complex values. Only nonzero
/// entries are stored, sorted by (row, col).
class DensityOperator {
 public:
  struct Entry {
    std::uint64_t row;
    std::uint64_t col;
    GaussInt num;                // exact mode
    std::complex<double> value;  // both modes (exact: num / denominator)
  };

  DensityOperator(std::vector<int> parties, std::uint64_t dim, bool exact,
                  std::int64_t denominator, std::vector<Entry> entries);

  const std::vector<int>& parties() const { return parties_; }
  std::uint64_t dim() const { return dim_; }
  bool is_exact() const { return exact_; }
  std::int64_t denominator() const { return denominator_; }
  const std::vector<Entry>& entries() const { return entries_; }
  std::complex<double> entry(std::uint64_t row, std::uint64_t col) const;

  bool is_zero() const { return entries_.empty(); }
  /// Exactly I / dim in exact mode, within kEntryTolerance otherwise.
  bool is_maximally_mixed() const;
  /// max |entry - (I/dim)_entry|; exactly 0.0 for an exact pass.
  double deviation_from_maximally_mixed() const;
  bool is_hermitian() const;
  /// Exact in exact mode.
  bool has_unit_trace() const;
  /// Smallest eigenvalue via a dense Hermitian eigensolver. Throws
  /// CapExceeded for dim > 1024.
  double min_eigenvalue() const;
  /// True iff every diagonal entry is present and all others vanish.
  bool is_diagonal() const;

 private:
  std::vector<int> parties_;
  std::uint64_t dim_;
  bool exact_;
  std::int64_t denominator_;
  std::vector<Entry> entries_;
};

/// Exact equality (cross-multiplied) when both are exact, otherwise
/// entrywise within kEntryTolerance.
bool same_operator(const DensityOperator& a, const DensityOperator& b);
double max_abs_difference(const DensityOperator& a, const DensityOperator& b);

/// Tr over the complement of `parties` of |s><t|. Exact when both states are
/// exact and r_s · r_t is a perfect square. Throws DomainError for shape
/// mismatch or bad parties and CapExceeded when d^k > caps().matrix_dim.
DensityOperator cross_reduction(const PureState& s, const PureState& t,
                                std::span<const int> parties);

/// rho_B = Tr_{B^c} |psi><psi|.
DensityOperator reduction(const PureState& s, std::span<const int> parties);

struct SubsetFailure {
  std::vector<int> subset;
  double max_abs_dev;
};

struct UniformityReport {
  unsigned n = 0;
  unsigned d = 0;
  int k = 0;
  bool exact = true;
  /// False when k > floor(N/2); no subsets are checked then.
  bool possible = true;
  std::uint64_t subsets_checked = 0;
  std::vector<SubsetFailure> failures;
  double worst_deviation = 0.0;
  bool pass = false;
};

/// Checks every k-subset of parties. Runs in parallel across subsets; the
/// failure list is in lexicographic subset order.
UniformityReport verify_k_uniform(const PureState& s, int k);

/// <s1|s2> = sum conj(z1) z2 / sqrt(r1 r2).
struct Overlap {
  GaussInt numerator;
  std::int64_t r1 = 1;
  std::int64_t r2 = 1;
  bool exact = true;
  std::complex<double> value;

  /// Exact comparisons when `exact`, otherwise within 1e-10.
  bool is_zero() const;
  bool is_one() const;
};

Overlap inner_product(const PureState& s1, const PureState& s2);

/// (1/sqrt(d)) sum_j |j...j>.
PureState ghz(unsigned d, unsigned n);
PureState basis_state(unsigned d, std::span<const unsigned> digits);

/// Uniform superposition of the rows of an irredundant array. Throws
/// DomainError naming the failed criterion (strength or distance).
PureState state_from_iroa(const OrthogonalArray& a, int k);

/// Party l of the result is the pair (A_l, B_l) with index i1 * d2 + i2.
PureState tensor_parties(const PureState& s1, const PureState& s2);

/// Text format: header `state N d r mode` (mode exact|float), then one
/// line `x_1 ... x_N re im` per nonzero term.
std::string format_state(const PureState& s);
PureState parse_state(std::string_view text);
PureState load_state(const std::filesystem::path& path);
void save_state(const PureState& s, const std::filesystem::path& path);

}  // namespace kuf

#endif  // KUF_STATES_HPP_

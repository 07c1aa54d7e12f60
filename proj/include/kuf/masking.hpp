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

#ifndef KUF_MASKING_HPP_
#define KUF_MASKING_HPP_

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "kuf/states.hpp"

namespace kuf {

/// Image family |psi_0>, ..., |psi_{d-1}> of a masker: basis state |j> of
/// the input qudit is sent to |psi_j> on N parties. Only the isometry is
/// represented; no ancilla or unitary extension is chosen.
struct Masker {
  unsigned d = 0;
  unsigned n = 0;
  std::vector<PureState> images;
  /// Highest k verified in this process, -1 if none.
  int verified_k = -1;
  std::string provenance;
};

/// Checks that there are d images of equal shape (N, d) that are
/// orthonormal. Throws DomainError otherwise.
Masker make_masker(std::vector<PureState> images, std::string provenance = {});

/// Splits a (k+1)-uniform state on N+1 parties at `split_party`:
/// |psi> = (1/sqrt(d)) sum_j |j>_split |psi_j>. Image j keeps the terms
/// with digit j at the split party (that digit removed) and the same
/// numerators over r/d. Throws DomainError when the input is not
/// (k+1)-uniform or the result fails verify_masker at k.
Masker build_masker(const PureState& psi, int split_party, int k);

struct MaskingViolation {
  std::vector<int> subset;
  unsigned s = 0;
  unsigned t = 0;
  double max_abs_dev = 0.0;
};

struct MaskingReport {
  unsigned d = 0;
  unsigned n = 0;
  int k = 0;
  bool exact = true;
  std::uint64_t subsets_checked = 0;
  /// Reduction of psi_0 on each subset, in lexicographic subset order.
  std::vector<DensityOperator> common;
  std::vector<MaskingViolation> violations;
  bool pass = false;
};

/// For every k-subset A and every pair (s, t):
/// Tr_{A^c} |psi_s><psi_t| = delta_st rho_A with rho_A the reduction of
/// psi_0. Exact when the images are.
MaskingReport verify_masker(const Masker& m, int k);

struct SamplingReport {
  int samples = 0;
  double max_deviation = 0.0;
  bool pass = false;
};

/// Independent sanity check: draws `samples` random input superpositions
/// from a seeded generator and compares every k-party reduction of the
/// encoded state with that of the first sample (tolerance 1e-9).
SamplingReport sample_masking(const Masker& m, int k, int samples,
                              std::uint64_t seed);

struct Feasibility {
  bool feasible = false;
  /// True when the answer is settled (a theorem or a construction),
  /// false when it rests on an Unknown catalog verdict.
  bool settled = false;
  std::string reason;
};

/// Strong masking into N parties of dimension d, i.e. floor(N/2)-uniform.
/// Even N is never feasible; odd N is feasible iff an AME state on N+1
/// parties is known to exist.
Feasibility strong_masking_feasible(int n, unsigned d);

struct QeccViolation {
  std::string error;  // e.g. "X^1 Z^0 @0, X^0 Z^1 @3"
  std::size_t i = 0;
  std::size_t j = 0;
  double magnitude = 0.0;
};

struct QeccReport {
  unsigned n = 0;
  unsigned d = 0;
  std::size_t dimension = 0;  // K
  int delta = 0;
  bool exact = true;
  std::uint64_t errors_checked = 0;
  double worst_violation = 0.0;
  std::vector<QeccViolation> violations;  // at most one per support set
  bool pass = false;
};

/// Pure-code condition for every generalized Pauli E = X^a Z^b of weight
/// 1 .. delta-1: <psi_i|E|psi_j> = 0 for all i, j (these E are traceless).
/// X|x> = |x+1 mod d>, Z|x> = w^x |x>, w = exp(2 pi i / d). Exact for
/// d in {2, 4} with exact states, otherwise tolerance 1e-9. Throws
/// DomainError for a non-orthonormal basis and CapExceeded above
/// caps().qecc_errors.
QeccReport verify_pure_qecc(const std::vector<PureState>& basis, int delta);

/// Every k-party cross reduction of the basis is delta_st I / d^k, so
/// every unit vector in the span is k-uniform.
bool kuniform_subspace_check(const std::vector<PureState>& basis, int k);

/// K <= d^(N - 2k); false when N < 2k.
bool singleton_check(int n, std::uint64_t dimension, int k, unsigned d);

/// Bundle directory: psi_<j>.state per image plus manifest.json with
/// {d, N, verified_k, checks, images, provenance}.
void save_masker(const Masker& m, const std::filesystem::path& dir,
                 const MaskingReport* report = nullptr);
/// Loads and checks orthonormality; verified_k is reset to -1.
Masker load_masker(const std::filesystem::path& dir);

/// Masker shipped under data/maskers/<name>.
Masker bundled_masker(const std::string& name);

}  // namespace kuf

#endif  // KUF_MASKING_HPP_

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

#ifndef KUF_CATALOG_HPP_
#define KUF_CATALOG_HPP_

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kuf/states.hpp"

namespace kuf {

/// A construction that can be executed to produce a k-uniform state.
struct Recipe {
  enum class Kind {
    kMdsTrim,      // [d+1, k]_d extended Reed-Solomon, trailing columns cut
    kBundledCode,  // a shipped self-dual code, trailing columns cut
    kDirectSum,    // direct sum of trimmed [d+1, k]_d codes of lengths `parts`
    kTensor,       // tensor_parties of two recipes with equal N
  };
  Kind kind = Kind::kMdsTrim;
  int k = 0;
  unsigned d = 0;
  int n = 0;
  std::vector<int> parts;
  std::string code_name;
  std::vector<Recipe> factors;

  /// One-line human-readable pipeline.
  std::string describe() const;
};

enum class Status { kExistsConstructive, kExistsCited, kNotExists, kUnknown };

/// "exists_constructive", "exists_cited", "not_exists", "unknown".
std::string_view status_name(Status s);
/// UTF-8 table symbol: √ for both Exists kinds, × and ?.
std::string_view status_symbol(Status s);

struct ExistenceVerdict {
  Status status = Status::kUnknown;
  std::optional<Recipe> recipe;  // set iff kExistsConstructive
  std::string citation;          // source of a cited or derived verdict

  bool exists() const {
    return status == Status::kExistsConstructive ||
           status == Status::kExistsCited;
  }
  /// Recipe description or citation.
  std::string provenance() const;
};

/// One line of the fact table.
struct Fact {
  int k = 0;
  unsigned d_lo = 0;
  unsigned d_hi = 0;  // 0 means unbounded
  int n_lo = 0;
  int n_hi = 0;  // 0 means unbounded
  bool exists = false;
  std::string filter;
  std::string citation;
  bool matches(int k, unsigned d, int n) const;
};

struct FactTable {
  std::string version;
  std::vector<Fact> facts;
  /// First matching fact, if any.
  const Fact* find(int k, unsigned d, int n) const;
};

FactTable parse_facts(std::string_view text);
/// The table shipped in data/facts, parsed once.
const FactTable& bundled_facts();

/// A plan from the implemented code rules alone, for prime-power d:
/// MDS trimming when d >= 2k - 1 and 2k <= N <= d + 1; a shipped
/// self-dual code whose irredundant window contains N; direct sums of
/// trimmed MDS codes when d >= 4k - 2 and N >= 2k.
std::optional<Recipe> plan_prime_power(int k, unsigned d, int n);

/// Decides existence for k >= 1, d >= 2, N >= 2, in order: the bound
/// k <= floor(N/2), the code rules, tensor products of constructive
/// verdicts over every factorization d = a * b, the fact table, tensor
/// products of any existing verdicts, and finally Unknown. Memoized and
/// thread safe.
ExistenceVerdict exists_k_uniform(int k, unsigned d, int n);

/// Executes a recipe. The result is built from an irredundant array but is
/// not re-verified here.
PureState execute_recipe(const Recipe& recipe);

/// Builds the state when exists_k_uniform returns a constructive verdict;
/// otherwise throws DomainError carrying the verdict.
PureState construct_k_uniform(int k, unsigned d, int n);

/// Row or column of a table: one label standing for sampled values.
struct Axis {
  std::string label;
  std::vector<int> values;
};

struct TableCell {
  Status status = Status::kUnknown;
  /// Per-cell provenance. For a class cell with several members this
  /// summarizes their verdicts.
  std::string provenance;
  /// (d, N, verdict) of every sampled member.
  struct Member {
    unsigned d;
    int n;
    ExistenceVerdict verdict;
  };
  std::vector<Member> members;
};

struct ExistenceTable {
  int k = 0;
  std::vector<Axis> rows;  // values are local dimensions
  std::vector<Axis> cols;  // values are party counts
  std::vector<std::vector<TableCell>> cells;
};

/// A cell is √ (resp. ×) when every sampled member is, and ? otherwise.
ExistenceTable emit_table(int k, const std::vector<Axis>& rows,
                          const std::vector<Axis>& cols);

/// One row per d and one column per N.
ExistenceTable emit_table(int k, int d_lo, int d_hi, int n_lo, int n_hi);

/// Row classes and columns as laid out in the published tables for k = 4
/// and k = 5. Open-ended classes are sampled up to d = 64 and N = 24
/// (k = 4) or 26 (k = 5). Throws DomainError for other k.
ExistenceTable published_table(int k);

/// Grid of symbols with row and column labels.
std::string format_table_text(const ExistenceTable& table);

}  // namespace kuf

#endif  // KUF_CATALOG_HPP_

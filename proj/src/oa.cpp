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

#include "kuf/oa.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <sstream>
#include <utility>

#include "kuf/caps.hpp"
#include "kuf/combinatorics.hpp"
#include "kuf/error.hpp"
#include "kuf/parallel.hpp"
#include "text.hpp"

namespace kuf {
namespace {

using Symbol = OrthogonalArray::Symbol;

// Rows restricted to `cols`, sorted, for multiset comparisons.
std::vector<std::vector<Symbol>> sorted_projection(
    const OrthogonalArray& a, std::span<const std::size_t> cols) {
  std::vector<std::vector<Symbol>> out(a.runs());
  for (std::size_t r = 0; r < a.runs(); ++r) {
    out[r].reserve(cols.size());
    for (std::size_t c : cols) out[r].push_back(a.at(r, c));
  }
  std::sort(out.begin(), out.end());
  return out;
}

int pairwise_min_distance(const OrthogonalArray& a) {
  const std::size_t r = a.runs();
  if (r > caps().pairwise_rows) {
    throw CapExceeded("pairwise distance over " + std::to_string(r) +
                      " rows exceeds cap " +
                      std::to_string(caps().pairwise_rows));
  }
  if (r < 2) return kInfiniteDistance;
  std::vector<int> best(r, kInfiniteDistance);
  parallel_for(r, [&](std::size_t i) {
    int local = kInfiniteDistance;
    const auto x = a.row(i);
    for (std::size_t j = i + 1; j < r && local > 0; ++j) {
      const auto y = a.row(j);
      int dist = 0;
      for (std::size_t c = 0; c < x.size() && dist < local; ++c) {
        dist += x[c] != y[c];
      }
      local = std::min(local, dist);
    }
    best[i] = local;
  });
  return *std::min_element(best.begin(), best.end());
}

}  // namespace

OrthogonalArray::OrthogonalArray(unsigned d, std::size_t n,
                                 std::vector<Symbol> symbols, int strength,
                                 std::string provenance)
    : d_(d),
      n_(n),
      symbols_(std::move(symbols)),
      strength_(strength),
      provenance_(std::move(provenance)) {
  if (d < 1 || d > 65536) throw DomainError("OA levels must be in [1, 65536]");
  if (n == 0) throw DomainError("OA needs at least one column");
  if (symbols_.size() % n != 0) throw DomainError("OA data is ragged");
  if (strength < 0) throw DomainError("OA strength must be non-negative");
  for (Symbol s : symbols_) {
    if (s >= d) {
      throw DomainError("OA symbol " + std::to_string(s) + " outside [0, " +
                        std::to_string(d) + ")");
    }
  }
}

OrthogonalArray OrthogonalArray::from_rows(
    unsigned d, const std::vector<std::vector<unsigned>>& rows, int strength,
    std::string provenance) {
  if (rows.empty()) throw DomainError("OA needs at least one row");
  const std::size_t n = rows.front().size();
  std::vector<Symbol> flat;
  flat.reserve(rows.size() * n);
  for (const auto& row : rows) {
    if (row.size() != n) throw DomainError("OA rows have different lengths");
    for (unsigned s : row) {
      if (s >= d) throw DomainError("OA symbol outside [0, d)");
      flat.push_back(static_cast<Symbol>(s));
    }
  }
  return OrthogonalArray(d, n, std::move(flat), strength,
                         std::move(provenance));
}

std::optional<std::uint64_t> OrthogonalArray::index() const {
  const auto dk = checked_pow(d_, static_cast<unsigned>(strength_));
  if (!dk || runs() % *dk != 0) return std::nullopt;
  return runs() / *dk;
}

OrthogonalArray oa_from_code(const LinearCode& code) {
  const auto size = code.size();
  if (!size || *size > caps().oa_rows) {
    throw CapExceeded("OA from " + describe(code) + " would exceed " +
                      std::to_string(caps().oa_rows) + " rows");
  }
  const std::size_t n = code.length();
  std::vector<Symbol> flat;
  flat.reserve(*size * n);
  code.for_each_codeword(
      [&](std::span<const FiniteField::Element> word) {
        for (auto e : word) flat.push_back(static_cast<Symbol>(e));
      },
      caps().oa_rows);
  const int dual_w = code.dual_distance();
  const int strength =
      dual_w == kInfiniteDistance ? static_cast<int>(n) : dual_w - 1;
  OrthogonalArray out(code.field().order(), n, std::move(flat), strength,
                      "codewords of " + describe(code));
  out.code_ = code;
  return out;
}

bool verify_strength(const OrthogonalArray& a, int k) {
  const std::size_t n = a.factors();
  if (k < 0 || static_cast<std::size_t>(k) > n) return false;
  const std::size_t r = a.runs();
  if (k == 0) return r > 0;
  const auto dk = checked_pow(a.levels(), static_cast<unsigned>(k));
  if (!dk || *dk > r || r % *dk != 0) return false;
  const std::uint64_t lambda = r / *dk;
  const auto subsets = k_subsets(static_cast<int>(n), k);
  std::atomic<bool> ok{true};
  parallel_for(subsets.size(), [&](std::size_t s) {
    if (!ok.load(std::memory_order_relaxed)) return;
    const auto& cols = subsets[s];
    std::vector<std::uint64_t> tally(*dk, 0);
    for (std::size_t row = 0; row < r; ++row) {
      std::uint64_t key = 0;
      for (int c : cols) key = key * a.levels() + a.at(row, c);
      if (++tally[key] > lambda) {
        ok.store(false, std::memory_order_relaxed);
        return;
      }
    }
  });
  // Counts never exceed lambda and sum to r = lambda * d^k, so all equal it.
  return ok.load();
}

int max_strength(const OrthogonalArray& a) {
  int k = 0;
  while (static_cast<std::size_t>(k) < a.factors() && verify_strength(a, k + 1)) {
    ++k;
  }
  return k;
}

int oa_min_distance(const OrthogonalArray& a) {
  if (a.source_code()) {
    try {
      if (a.runs() > 1 && a.source_code()->dimension() == 0) return 0;
      // Repeated codewords are detected by the multiplicity in the code path.
      const auto size = a.source_code()->size();
      if (size && *size < a.runs()) return 0;
      return a.source_code()->min_distance();
    } catch (const CapExceeded&) {
      // Fall through to the pairwise route.
    }
  }
  return pairwise_min_distance(a);
}

bool is_irredundant(const OrthogonalArray& a, int k) {
  if (!verify_strength(a, k)) return false;
  const int w = oa_min_distance(a);
  return w == kInfiniteDistance || w >= k + 1;
}

bool is_irredundant_by_deletion(const OrthogonalArray& a, int k) {
  if (!verify_strength(a, k)) return false;
  const int n = static_cast<int>(a.factors());
  const auto removed = k_subsets(n, k);
  std::atomic<bool> ok{true};
  parallel_for(removed.size(), [&](std::size_t s) {
    if (!ok.load(std::memory_order_relaxed)) return;
    std::vector<std::size_t> keep;
    std::size_t next = 0;
    for (int c = 0; c < n; ++c) {
      if (next < removed[s].size() && removed[s][next] == c) {
        ++next;
      } else {
        keep.push_back(static_cast<std::size_t>(c));
      }
    }
    const auto rows = sorted_projection(a, keep);
    if (std::adjacent_find(rows.begin(), rows.end()) != rows.end()) {
      ok.store(false, std::memory_order_relaxed);
    }
  });
  return ok.load();
}

OrthogonalArray delete_columns(const OrthogonalArray& a,
                               std::span<const std::size_t> cols) {
  const std::size_t n = a.factors();
  std::vector<bool> drop(n, false);
  for (std::size_t c : cols) {
    if (c >= n) {
      throw DomainError("column " + std::to_string(c) + " outside [0, " +
                        std::to_string(n) + ")");
    }
    drop[c] = true;
  }
  std::vector<std::size_t> keep;
  for (std::size_t c = 0; c < n; ++c) {
    if (!drop[c]) keep.push_back(c);
  }
  if (keep.empty()) throw DomainError("cannot delete every column");
  std::vector<Symbol> flat;
  flat.reserve(a.runs() * keep.size());
  for (std::size_t r = 0; r < a.runs(); ++r) {
    for (std::size_t c : keep) flat.push_back(a.at(r, c));
  }
  const int strength =
      std::min(a.strength(), static_cast<int>(keep.size()));
  std::string provenance = a.provenance();
  if (keep.size() != n) {
    provenance += (provenance.empty() ? "" : ", ") + std::string("deleted ") +
                  std::to_string(n - keep.size()) + " columns";
  }
  OrthogonalArray out(a.levels(), keep.size(), std::move(flat), strength,
                      std::move(provenance));
  if (a.source_code()) {
    const LinearCode& code = *a.source_code();
    const FieldPtr& f = code.field_ptr();
    const GfMatrix sub = code.generator().select_columns(keep);
    const RowReduction rr = row_reduce(*f, sub);
    if (rr.rank == 0) {
      out.code_ = LinearCode::zero_code(f, keep.size());
    } else {
      GfMatrix g(rr.rank, keep.size());
      for (std::size_t i = 0; i < rr.rank; ++i) {
        for (std::size_t c = 0; c < keep.size(); ++c) {
          g.at(i, c) = rr.reduced.at(i, c);
        }
      }
      out.code_ = LinearCode(f, std::move(g));
    }
    out.code_multiplicity_ = a.code_multiplicity_;
    for (std::size_t i = rr.rank; i < code.dimension(); ++i) {
      out.code_multiplicity_ *= f->order();
    }
  }
  return out;
}

OrthogonalArray trim_to_iroa(const OrthogonalArray& a, int k,
                             std::size_t target_n) {
  const std::size_t n = a.factors();
  if (a.strength() < k) {
    throw DomainError("array claims strength " + std::to_string(a.strength()) +
                      ", below " + std::to_string(k));
  }
  const int w = oa_min_distance(a);
  if (w == 0) throw DomainError("array has repeated rows");
  const std::int64_t lo =
      w == kInfiniteDistance
          ? 1
          : static_cast<std::int64_t>(n) - w + k + 1;
  if (static_cast<std::int64_t>(target_n) < lo || target_n > n) {
    throw DomainError("target length " + std::to_string(target_n) +
                      " outside the irredundant window [" + std::to_string(lo) +
                      ", " + std::to_string(n) + "]");
  }
  std::vector<std::size_t> tail;
  for (std::size_t c = target_n; c < n; ++c) tail.push_back(c);
  return delete_columns(a, tail);
}

bool same_rows(const OrthogonalArray& a, const OrthogonalArray& b) {
  if (a.factors() != b.factors() || a.runs() != b.runs()) return false;
  std::vector<std::size_t> all(a.factors());
  std::iota(all.begin(), all.end(), 0);
  return sorted_projection(a, all) == sorted_projection(b, all);
}

OrthogonalArray apply_relabeling(const OrthogonalArray& a,
                                 const Relabeling& map) {
  const std::size_t n = map.columns.size();
  if (n != a.factors() || map.symbol_maps.size() != n) {
    throw DomainError("relabeling does not match the array shape");
  }
  std::vector<Symbol> flat;
  flat.reserve(a.runs() * n);
  for (std::size_t r = 0; r < a.runs(); ++r) {
    for (std::size_t j = 0; j < n; ++j) {
      flat.push_back(
          static_cast<Symbol>(map.symbol_maps[j].at(a.at(r, map.columns[j]))));
    }
  }
  return OrthogonalArray(a.levels(), n, std::move(flat), a.strength(),
                         a.provenance() + ", relabeled");
}

namespace {

struct RelabelSearch {
  const OrthogonalArray& a;
  const OrthogonalArray& b;
  std::size_t n;
  unsigned d;
  Relabeling current;
  std::vector<bool> used;

  // Prefix rows of `a` under the partial relabeling, sorted.
  std::vector<std::vector<Symbol>> mapped_prefix(std::size_t len) const {
    std::vector<std::vector<Symbol>> out(a.runs());
    for (std::size_t r = 0; r < a.runs(); ++r) {
      for (std::size_t j = 0; j < len; ++j) {
        out[r].push_back(static_cast<Symbol>(
            current.symbol_maps[j][a.at(r, current.columns[j])]));
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  bool search(std::size_t j) {
    if (j == n) return true;
    std::vector<std::size_t> prefix(j + 1);
    std::iota(prefix.begin(), prefix.end(), 0);
    const auto target = sorted_projection(b, prefix);
    for (std::size_t c = 0; c < n; ++c) {
      if (used[c]) continue;
      used[c] = true;
      current.columns.push_back(c);
      std::vector<unsigned> perm(d);
      std::iota(perm.begin(), perm.end(), 0u);
      do {
        current.symbol_maps.push_back(perm);
        if (mapped_prefix(j + 1) == target && search(j + 1)) return true;
        current.symbol_maps.pop_back();
      } while (std::next_permutation(perm.begin(), perm.end()));
      current.columns.pop_back();
      used[c] = false;
    }
    return false;
  }
};

}  // namespace

std::optional<Relabeling> find_relabeling(const OrthogonalArray& a,
                                          const OrthogonalArray& b) {
  if (a.levels() != b.levels() || a.factors() != b.factors() ||
      a.runs() != b.runs()) {
    return std::nullopt;
  }
  if (a.levels() > 8 || a.factors() > 12) {
    throw CapExceeded("relabeling search is limited to d <= 8 and N <= 12");
  }
  RelabelSearch s{a, b, a.factors(), a.levels(), {}, std::vector<bool>(a.factors())};
  if (!s.search(0)) return std::nullopt;
  return s.current;
}

std::string format_oa(const OrthogonalArray& a) {
  std::ostringstream out;
  if (!a.provenance().empty()) out << "# " << a.provenance() << "\n";
  out << "oa " << a.runs() << ' ' << a.factors() << ' ' << a.levels() << ' '
      << a.strength() << '\n';
  for (std::size_t r = 0; r < a.runs(); ++r) {
    for (std::size_t c = 0; c < a.factors(); ++c) {
      if (c) out << ' ';
      out << a.at(r, c);
    }
    out << '\n';
  }
  return out.str();
}

OrthogonalArray parse_oa(std::string_view text) {
  const auto lines = text::tokenize(text);
  if (lines.empty()) throw ParseError("empty OA file", 0);
  const auto& head = lines.front();
  if (head.tokens.size() != 5 || head.tokens[0] != "oa") {
    throw ParseError("expected header 'oa r N d k'", head.number);
  }
  const auto r = text::parse_uint(head.tokens[1], head.number, "r");
  const auto n = text::parse_uint(head.tokens[2], head.number, "N");
  const auto d = text::parse_uint(head.tokens[3], head.number, "d");
  const auto k = text::parse_uint(head.tokens[4], head.number, "k");
  if (n == 0 || d == 0 || d > 65536) {
    throw ParseError("need N >= 1 and 1 <= d <= 65536", head.number);
  }
  if (lines.size() - 1 != r) {
    throw ParseError("expected " + std::to_string(r) + " rows, found " +
                         std::to_string(lines.size() - 1),
                     lines.back().number);
  }
  std::vector<Symbol> flat;
  flat.reserve(r * n);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& line = lines[i];
    if (line.tokens.size() != n) {
      throw ParseError("expected " + std::to_string(n) + " symbols, found " +
                           std::to_string(line.tokens.size()),
                       line.number);
    }
    for (const auto& tok : line.tokens) {
      const auto s = text::parse_uint(tok, line.number, "symbol");
      if (s >= d) throw ParseError("symbol " + tok + " outside [0, d)", line.number);
      flat.push_back(static_cast<Symbol>(s));
    }
  }
  return OrthogonalArray(static_cast<unsigned>(d), n, std::move(flat),
                         static_cast<int>(k), "loaded");
}

OrthogonalArray load_oa(const std::filesystem::path& path) {
  return parse_oa(text::read_file(path));
}

void save_oa(const OrthogonalArray& a, const std::filesystem::path& path) {
  text::write_file(path, format_oa(a));
}

}  // namespace kuf

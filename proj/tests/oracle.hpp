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

// Slow, obviously-correct reference implementations used only by tests.
// Nothing here calls the routine it is checking.

#ifndef KUF_TESTS_ORACLE_HPP_
#define KUF_TESTS_ORACLE_HPP_

#include <algorithm>
#include <complex>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "kuf/codes.hpp"
#include "kuf/oa.hpp"
#include "kuf/states.hpp"

namespace kuf::oracle {

// Schoolbook product of two field elements written as base-p digit
// polynomials, reduced by the monic `modulus` (coefficients c0 upward).
inline unsigned poly_mul(unsigned a, unsigned b, unsigned p,
                         const std::vector<unsigned>& modulus) {
  const std::size_t m = modulus.size() - 1;
  std::vector<unsigned> x(m), y(m), z(2 * m, 0);
  for (std::size_t i = 0; i < m; ++i, a /= p, b /= p) {
    x[i] = a % p;
    y[i] = b % p;
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) z[i + j] = (z[i + j] + x[i] * y[j]) % p;
  }
  for (std::size_t deg = 2 * m - 1; deg >= m; --deg) {
    const unsigned c = z[deg];
    if (c == 0) continue;
    for (std::size_t i = 0; i <= m; ++i) {
      z[deg - m + i] = (z[deg - m + i] + p * p - c * modulus[i] % p) % p;
    }
  }
  unsigned out = 0;
  for (std::size_t i = m; i-- > 0;) out = out * p + z[i];
  return out;
}

// Every codeword of the code spanned by `g`, by explicit coefficient loops.
inline std::vector<std::vector<unsigned>> all_codewords(const LinearCode& c) {
  const FiniteField& f = c.field();
  const std::size_t t = c.dimension();
  const std::size_t n = c.length();
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> coeff(t, 0);
  while (true) {
    std::vector<unsigned> word(n, 0);
    for (std::size_t i = 0; i < t; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        word[j] = f.add(word[j], f.mul(coeff[i], c.generator().at(i, j)));
      }
    }
    out.push_back(std::move(word));
    std::size_t pos = t;
    while (pos > 0 && ++coeff[pos - 1] == f.order()) coeff[--pos] = 0;
    if (pos == 0) break;
  }
  return out;
}

inline int weight(const std::vector<unsigned>& w) {
  return static_cast<int>(std::count_if(w.begin(), w.end(),
                                        [](unsigned x) { return x != 0; }));
}

inline int min_distance(const LinearCode& c) {
  int best = kInfiniteDistance;
  for (const auto& w : all_codewords(c)) {
    const int wt = weight(w);
    if (wt > 0) best = std::min(best, wt);
  }
  return best;
}

// Smallest number of generator columns that admit a nontrivial vanishing
// combination, found by trying every subset and every coefficient vector.
inline int smallest_dependent_columns(const LinearCode& c) {
  const FiniteField& f = c.field();
  const std::size_t n = c.length();
  const std::size_t t = c.dimension();
  for (std::size_t size = 1; size <= n; ++size) {
    std::vector<bool> pick(n, false);
    std::fill(pick.begin(), pick.begin() + size, true);
    do {
      std::vector<std::size_t> cols;
      for (std::size_t j = 0; j < n; ++j) {
        if (pick[j]) cols.push_back(j);
      }
      std::vector<unsigned> coeff(size, 0);
      while (true) {
        std::size_t pos = size;
        while (pos > 0 && ++coeff[pos - 1] == f.order()) coeff[--pos] = 0;
        if (pos == 0) break;
        bool zero = true;
        for (std::size_t i = 0; i < t && zero; ++i) {
          unsigned acc = 0;
          for (std::size_t s = 0; s < size; ++s) {
            acc = f.add(acc, f.mul(coeff[s], c.generator().at(i, cols[s])));
          }
          zero = acc == 0;
        }
        if (zero) return static_cast<int>(size);
      }
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  return kInfiniteDistance;
}

inline std::vector<std::vector<unsigned>> rows_of(const OrthogonalArray& a) {
  std::vector<std::vector<unsigned>> rows;
  for (std::size_t r = 0; r < a.runs(); ++r) {
    rows.emplace_back(a.row(r).begin(), a.row(r).end());
  }
  return rows;
}

// Strength by tallying every k-column projection in a map.
inline bool has_strength(const OrthogonalArray& a, int k) {
  const auto rows = rows_of(a);
  const int n = static_cast<int>(a.factors());
  if (k > n) return false;
  std::uint64_t cells = 1;
  for (int i = 0; i < k; ++i) cells *= a.levels();
  if (rows.size() % cells != 0) return false;
  const std::uint64_t lambda = rows.size() / cells;
  std::vector<bool> pick(n, false);
  std::fill(pick.begin(), pick.begin() + k, true);
  do {
    std::map<std::vector<unsigned>, std::uint64_t> tally;
    for (const auto& row : rows) {
      std::vector<unsigned> key;
      for (int j = 0; j < n; ++j) {
        if (pick[j]) key.push_back(row[j]);
      }
      ++tally[key];
    }
    if (tally.size() != cells) return false;
    for (const auto& [key, count] : tally) {
      if (count != lambda) return false;
    }
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return true;
}

inline int pairwise_distance(const OrthogonalArray& a) {
  const auto rows = rows_of(a);
  int best = kInfiniteDistance;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = i + 1; j < rows.size(); ++j) {
      int diff = 0;
      for (std::size_t c = 0; c < rows[i].size(); ++c) diff += rows[i][c] != rows[j][c];
      best = std::min(best, diff);
    }
  }
  return best;
}

// Rows stay distinct after deleting any k columns.
inline bool distinct_after_deleting(const OrthogonalArray& a, int k) {
  const auto rows = rows_of(a);
  const int n = static_cast<int>(a.factors());
  if (k > n) return false;
  std::vector<bool> drop(n, false);
  std::fill(drop.begin(), drop.begin() + k, true);
  do {
    std::set<std::vector<unsigned>> seen;
    for (const auto& row : rows) {
      std::vector<unsigned> key;
      for (int j = 0; j < n; ++j) {
        if (!drop[j]) key.push_back(row[j]);
      }
      if (!seen.insert(key).second) return false;
    }
  } while (std::prev_permutation(drop.begin(), drop.end()));
  return true;
}

using Dense = std::vector<std::vector<std::complex<double>>>;

inline std::vector<std::complex<double>> amplitudes(const PureState& s) {
  std::vector<std::complex<double>> v(s.dimension());
  for (std::uint64_t i = 0; i < s.dimension(); ++i) v[i] = s.amplitude(i);
  return v;
}

// Tr over the complement of `parties` of |s><t| from the full amplitude
// vectors, with subset digits in the listed order.
inline Dense dense_cross_reduction(const PureState& s, const PureState& t,
                                   const std::vector<int>& parties) {
  const unsigned n = s.parties();
  const unsigned d = s.local_dim();
  std::uint64_t dim = 1;
  for (std::size_t i = 0; i < parties.size(); ++i) dim *= d;
  Dense rho(dim, std::vector<std::complex<double>>(dim));
  const auto a = amplitudes(s);
  const auto b = amplitudes(t);
  for (std::uint64_t x = 0; x < s.dimension(); ++x) {
    if (a[x] == 0.0) continue;
    const auto dx = s.digits(x);
    for (std::uint64_t y = 0; y < t.dimension(); ++y) {
      if (b[y] == 0.0) continue;
      const auto dy = t.digits(y);
      bool same_rest = true;
      for (unsigned p = 0; p < n && same_rest; ++p) {
        if (std::find(parties.begin(), parties.end(), static_cast<int>(p)) ==
            parties.end()) {
          same_rest = dx[p] == dy[p];
        }
      }
      if (!same_rest) continue;
      std::uint64_t u = 0, v = 0;
      for (int p : parties) {
        u = u * d + dx[p];
        v = v * d + dy[p];
      }
      rho[u][v] += a[x] * std::conj(b[y]);
    }
  }
  return rho;
}

inline double max_deviation_from_mixed(const Dense& rho) {
  const double diag = 1.0 / static_cast<double>(rho.size());
  double worst = 0.0;
  for (std::size_t i = 0; i < rho.size(); ++i) {
    for (std::size_t j = 0; j < rho.size(); ++j) {
      worst = std::max(worst, std::abs(rho[i][j] - (i == j ? diag : 0.0)));
    }
  }
  return worst;
}

}  // namespace kuf::oracle

#endif  // KUF_TESTS_ORACLE_HPP_

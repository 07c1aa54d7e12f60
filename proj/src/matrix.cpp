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

#include "kuf/matrix.hpp"

#include <utility>

#include "kuf/error.hpp"

namespace kuf {

GfMatrix GfMatrix::from_rows(const std::vector<std::vector<Element>>& rows,
                             std::size_t cols) {
  GfMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) {
      throw DomainError("row " + std::to_string(r) + " has " +
                        std::to_string(rows[r].size()) + " entries, expected " +
                        std::to_string(cols));
    }
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = rows[r][c];
  }
  return m;
}

GfMatrix GfMatrix::transpose() const {
  GfMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  }
  return t;
}

GfMatrix GfMatrix::select_columns(std::span<const std::size_t> keep) const {
  GfMatrix out(rows_, keep.size());
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t j = 0; j < keep.size(); ++j) out.at(r, j) = at(r, keep[j]);
  }
  return out;
}

RowReduction row_reduce(const FiniteField& f, GfMatrix m) {
  RowReduction out;
  std::size_t lead = 0;
  for (std::size_t c = 0; c < m.cols() && lead < m.rows(); ++c) {
    std::size_t pivot = lead;
    while (pivot < m.rows() && m.at(pivot, c) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != lead) {
      for (std::size_t j = 0; j < m.cols(); ++j) {
        std::swap(m.at(pivot, j), m.at(lead, j));
      }
    }
    const auto scale = f.inv(m.at(lead, c));
    for (std::size_t j = 0; j < m.cols(); ++j) {
      m.at(lead, j) = f.mul(m.at(lead, j), scale);
    }
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == lead || m.at(r, c) == 0) continue;
      const auto factor = f.neg(m.at(r, c));
      for (std::size_t j = 0; j < m.cols(); ++j) {
        m.at(r, j) = f.add(m.at(r, j), f.mul(factor, m.at(lead, j)));
      }
    }
    out.pivots.push_back(c);
    ++lead;
  }
  out.rank = lead;
  out.reduced = std::move(m);
  return out;
}

std::size_t rank(const FiniteField& f, const GfMatrix& m) {
  return row_reduce(f, m).rank;
}

GfMatrix null_space(const FiniteField& f, const GfMatrix& m) {
  const RowReduction rr = row_reduce(f, m);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (std::size_t i = 0; i < rr.rank; ++i) is_pivot[rr.pivots[i]] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < n; ++c) {
    if (!is_pivot[c]) free_cols.push_back(c);
  }
  GfMatrix basis(free_cols.size(), n);
  for (std::size_t b = 0; b < free_cols.size(); ++b) {
    const std::size_t fc = free_cols[b];
    basis.at(b, fc) = 1;
    for (std::size_t i = 0; i < rr.rank; ++i) {
      basis.at(b, rr.pivots[i]) = f.neg(rr.reduced.at(i, fc));
    }
  }
  return basis;
}

GfMatrix multiply_transpose(const FiniteField& f, const GfMatrix& a,
                            const GfMatrix& b) {
  if (a.cols() != b.cols()) {
    throw DomainError("multiply_transpose: column counts differ");
  }
  GfMatrix out(a.rows(), b.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.rows(); ++j) {
      FiniteField::Element s = 0;
      for (std::size_t c = 0; c < a.cols(); ++c) {
        s = f.add(s, f.mul(a.at(i, c), b.at(j, c)));
      }
      out.at(i, j) = s;
    }
  }
  return out;
}

std::vector<FiniteField::Element> vector_times(
    const FiniteField& f, std::span<const FiniteField::Element> x,
    const GfMatrix& m) {
  if (x.size() != m.rows()) throw DomainError("vector_times: size mismatch");
  std::vector<FiniteField::Element> out(m.cols(), 0);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (x[r] == 0) continue;
    for (std::size_t c = 0; c < m.cols(); ++c) {
      out[c] = f.add(out[c], f.mul(x[r], m.at(r, c)));
    }
  }
  return out;
}

}  // namespace kuf

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

#ifndef KUF_MATRIX_HPP_
#define KUF_MATRIX_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include "kuf/gf.hpp"

namespace kuf {

/// Dense row-major matrix of field elements.
class GfMatrix {
 public:
  using Element = FiniteField::Element;

  GfMatrix() = default;
  GfMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  /// Throws DomainError when the rows are ragged.
  static GfMatrix from_rows(const std::vector<std::vector<Element>>& rows,
                            std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Element& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Element at(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }
  std::span<const Element> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  std::span<Element> row(std::size_t r) {
    return {data_.data() + r * cols_, cols_};
  }

  GfMatrix transpose() const;
  /// Columns listed in `keep`, in that order.
  GfMatrix select_columns(std::span<const std::size_t> keep) const;

  bool operator==(const GfMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Element> data_;
};

/// Reduced row echelon form. `pivots[i]` is the pivot column of row i for
/// i < rank; rows at and after `rank` are zero.
struct RowReduction {
  GfMatrix reduced;
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
};

RowReduction row_reduce(const FiniteField& f, GfMatrix m);
std::size_t rank(const FiniteField& f, const GfMatrix& m);

/// Basis (as rows) of { x : m · xᵀ = 0 }, built from the reduced form as
/// [-Aᵀ | I] with the column permutation of the pivots undone.
GfMatrix null_space(const FiniteField& f, const GfMatrix& m);

/// a · bᵀ.
GfMatrix multiply_transpose(const FiniteField& f, const GfMatrix& a,
                            const GfMatrix& b);

/// x · m for a row vector x of length m.rows().
std::vector<FiniteField::Element> vector_times(
    const FiniteField& f, std::span<const FiniteField::Element> x,
    const GfMatrix& m);

}  // namespace kuf

#endif  // KUF_MATRIX_HPP_

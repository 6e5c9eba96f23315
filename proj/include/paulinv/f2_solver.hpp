// Copyright 2026 The paulinv Authors
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

#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "paulinv/bit_vector.hpp"

namespace paulinv {

class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Row-major packed GF(2) matrix. Padding bits past cols() in each row stay 0.
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), stride_(words_for(cols)), data_(rows * stride_, 0) {}

  static BitMatrix from_rows(const std::vector<std::string>& rows) {
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    BitMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].size() != cols) throw DimensionMismatch("BitMatrix::from_rows: ragged rows");
      m.set_row(r, BitVector::from_string(rows[r]));
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t stride() const { return stride_; }

  bool get(std::size_t r, std::size_t c) const {
    return (data_[r * stride_ + c / kWordBits] >> (c % kWordBits)) & 1U;
  }
  void set(std::size_t r, std::size_t c, bool v = true) {
    word_t& w = data_[r * stride_ + c / kWordBits];
    const word_t m = word_t{1} << (c % kWordBits);
    w = v ? (w | m) : (w & ~m);
  }

  std::span<const word_t> row(std::size_t r) const { return {data_.data() + r * stride_, stride_}; }
  std::span<word_t> row(std::size_t r) { return {data_.data() + r * stride_, stride_}; }

  void set_row(std::size_t r, const BitVector& v) {
    if (v.size() != cols_) throw DimensionMismatch("BitMatrix::set_row: length mismatch");
    std::copy(v.words().begin(), v.words().end(), row(r).begin());
  }

  BitVector row_vector(std::size_t r) const {
    BitVector v(cols_);
    std::copy(row(r).begin(), row(r).end(), v.words().begin());
    return v;
  }

  /// Evaluates row r against assignment v over GF(2).
  bool row_dot(std::size_t r, const BitVector& v) const {
    if (v.size() != cols_) throw DimensionMismatch("BitMatrix::row_dot: length mismatch");
    word_t acc = 0;
    const auto rw = row(r);
    const auto vw = v.words();
    for (std::size_t k = 0; k < stride_; ++k) acc ^= rw[k] & vw[k];
    return std::popcount(acc) & 1;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t stride_ = 0;
  std::vector<word_t> data_;
};

struct F2Solution {
  BitVector assignment;
  std::vector<std::size_t> satisfied_rows;
  std::vector<std::size_t> free_columns;
};

namespace detail {

/// Incremental echelon basis over the augmented system [A | b].
///
/// Each stored row has its pivot at the lowest set column and is zero in the
/// pivot columns of every row inserted before it. Columns are cols+1 wide; the
/// extra column holds the right-hand side bit.
class EchelonBasis {
 public:
  explicit EchelonBasis(std::size_t cols) : cols_(cols), stride_(words_for(cols + 1)), scratch_(stride_) {}

  enum class Outcome { Pivot, Redundant, Contradiction };

  /// Reduces `row` (cols_ wide) with right-hand side `rhs` and inserts it when
  /// it is independent. Contradictory rows are left out.
  Outcome insert(std::span<const word_t> row, bool rhs) {
    std::copy(row.begin(), row.end(), scratch_.begin());
    std::fill(scratch_.begin() + static_cast<std::ptrdiff_t>(row.size()), scratch_.end(), 0);
    if (rhs) scratch_[cols_ / kWordBits] |= word_t{1} << (cols_ % kWordBits);

    for (std::size_t k = 0; k < pivots_.size(); ++k) {
      const std::size_t pc = pivots_[k];
      if ((scratch_[pc / kWordBits] >> (pc % kWordBits)) & 1U) {
        const word_t* b = basis_.data() + k * stride_;
        for (std::size_t w = 0; w < stride_; ++w) scratch_[w] ^= b[w];
      }
    }
    const std::size_t pc = lowest_coefficient();
    if (pc == cols_) {
      const bool aug = (scratch_[cols_ / kWordBits] >> (cols_ % kWordBits)) & 1U;
      return aug ? Outcome::Contradiction : Outcome::Redundant;
    }
    pivots_.push_back(pc);
    basis_.insert(basis_.end(), scratch_.begin(), scratch_.end());
    return Outcome::Pivot;
  }

  /// Back-substitution with free variables set to 0.
  BitVector solve() const {
    BitVector v(cols_);
    for (std::size_t k = pivots_.size(); k-- > 0;) {
      const word_t* b = basis_.data() + k * stride_;
      bool val = (b[cols_ / kWordBits] >> (cols_ % kWordBits)) & 1U;
      const auto vw = v.words();
      word_t acc = 0;
      for (std::size_t w = 0; w < vw.size(); ++w) {
        word_t bw = b[w];
        if (w == cols_ / kWordBits) bw &= tail_mask(cols_);
        acc ^= bw & vw[w];
      }
      // v[pivot] is still 0 here, so acc only sees later-pivot columns.
      val ^= std::popcount(acc) & 1;
      v.set(pivots_[k], val);
    }
    return v;
  }

  std::vector<std::size_t> free_columns() const {
    std::vector<bool> is_pivot(cols_, false);
    for (std::size_t p : pivots_) is_pivot[p] = true;
    std::vector<std::size_t> out;
    for (std::size_t c = 0; c < cols_; ++c) {
      if (!is_pivot[c]) out.push_back(c);
    }
    return out;
  }

  std::size_t rank() const { return pivots_.size(); }

 private:
  std::size_t lowest_coefficient() const {
    for (std::size_t w = 0; w < stride_; ++w) {
      word_t x = scratch_[w];
      // The word holding the rhs bit only contributes its lower coefficient bits.
      if (w == cols_ / kWordBits) x &= (word_t{1} << (cols_ % kWordBits)) - 1;
      if (x != 0) return w * kWordBits + static_cast<std::size_t>(std::countr_zero(x));
    }
    return cols_;
  }

  std::size_t cols_;
  std::size_t stride_;
  std::vector<word_t> scratch_;
  std::vector<word_t> basis_;
  std::vector<std::size_t> pivots_;
};

inline void check_rhs(const BitMatrix& a, const BitVector& b) {
  if (b.size() != a.rows()) {
    throw DimensionMismatch("right-hand side has " + std::to_string(b.size()) + " entries for " +
                            std::to_string(a.rows()) + " rows");
  }
}

inline std::vector<std::size_t> satisfied(const BitMatrix& a, const BitVector& b, const BitVector& v) {
  std::vector<std::size_t> out;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    if (a.row_dot(r, v) == b.get(r)) out.push_back(r);
  }
  return out;
}

}  // namespace detail

/// Solves A v = b over GF(2). Returns nullopt when the system is inconsistent.
/// Free variables are set to 0, so the result is deterministic.
inline std::optional<F2Solution> solve_affine(const BitMatrix& a, const BitVector& b) {
  detail::check_rhs(a, b);
  detail::EchelonBasis basis(a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    if (basis.insert(a.row(r), b.get(r)) == detail::EchelonBasis::Outcome::Contradiction) return std::nullopt;
  }
  F2Solution sol;
  sol.assignment = basis.solve();
  sol.satisfied_rows.resize(a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r) sol.satisfied_rows[r] = r;
  sol.free_columns = basis.free_columns();
  return sol;
}

/// Greedy max-consistent solve: rows are taken in input order and a row is
/// kept iff it is consistent with the rows kept so far. satisfied_rows is
/// recomputed against the final assignment, so it can include skipped rows
/// that happen to hold.
inline F2Solution solve_max_consistent(const BitMatrix& a, const BitVector& b) {
  detail::check_rhs(a, b);
  detail::EchelonBasis basis(a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) basis.insert(a.row(r), b.get(r));
  F2Solution sol;
  sol.assignment = basis.solve();
  sol.satisfied_rows = detail::satisfied(a, b, sol.assignment);
  sol.free_columns = basis.free_columns();
  return sol;
}

}  // namespace paulinv

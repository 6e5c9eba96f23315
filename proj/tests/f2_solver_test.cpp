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

#include "paulinv/f2_solver.hpp"

#include <random>

#include <gtest/gtest.h>

namespace paulinv {
namespace {

BitMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
  BitMatrix a(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) a.set(r, c, rng() & 1);
  }
  return a;
}

BitVector random_vector(std::mt19937_64& rng, std::size_t n) {
  BitVector v(n);
  for (std::size_t i = 0; i < n; ++i) v.set(i, rng() & 1);
  return v;
}

BitVector evaluate(const BitMatrix& a, const BitVector& v) {
  BitVector b(a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    bool acc = false;
    for (std::size_t c = 0; c < a.cols(); ++c) acc ^= a.get(r, c) && v.get(c);
    b.set(r, acc);
  }
  return b;
}

TEST(SolveAffine, OneByOne) {
  const auto sol = solve_affine(BitMatrix::from_rows({"1"}), BitVector::from_string("1"));
  ASSERT_TRUE(sol);
  EXPECT_EQ(sol->assignment.str(), "1");
}

TEST(SolveAffine, ContradictoryRows) {
  EXPECT_FALSE(solve_affine(BitMatrix::from_rows({"10", "10"}), BitVector::from_string("10")));
}

TEST(SolveAffine, FreeVariablesAreZero) {
  const auto sol = solve_affine(BitMatrix::from_rows({"110"}), BitVector::from_string("1"));
  ASSERT_TRUE(sol);
  EXPECT_EQ(sol->assignment.str(), "100");
  EXPECT_EQ(sol->free_columns, (std::vector<std::size_t>{1, 2}));
}

TEST(SolveAffine, PlantedSolutions) {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 200; ++t) {
    const std::size_t rows = 1 + rng() % 80;
    const std::size_t cols = 1 + rng() % 130;
    const BitMatrix a = random_matrix(rng, rows, cols);
    const BitVector planted = random_vector(rng, cols);
    const BitVector b = evaluate(a, planted);
    const auto sol = solve_affine(a, b);
    ASSERT_TRUE(sol);
    EXPECT_EQ(evaluate(a, sol->assignment), b);
    EXPECT_EQ(sol->satisfied_rows.size(), rows);
    EXPECT_EQ(solve_affine(a, b)->assignment, sol->assignment);
  }
}

TEST(SolveAffine, InconsistencyMatchesBruteForce) {
  std::mt19937_64 rng(22);
  for (int t = 0; t < 300; ++t) {
    const std::size_t rows = 1 + rng() % 10;
    const std::size_t cols = 1 + rng() % 8;
    const BitMatrix a = random_matrix(rng, rows, cols);
    const BitVector b = random_vector(rng, rows);
    bool exists = false;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << cols) && !exists; ++m) {
      BitVector v(cols);
      for (std::size_t c = 0; c < cols; ++c) v.set(c, (m >> c) & 1U);
      exists = evaluate(a, v) == b;
    }
    const auto sol = solve_affine(a, b);
    ASSERT_EQ(sol.has_value(), exists);
    if (sol) {
      EXPECT_EQ(evaluate(a, sol->assignment), b);
    }
  }
}

TEST(SolveAffine, DimensionMismatch) {
  EXPECT_THROW(solve_affine(BitMatrix(3, 2), BitVector(2)), DimensionMismatch);
  EXPECT_THROW(solve_max_consistent(BitMatrix(3, 2), BitVector(4)), DimensionMismatch);
}

TEST(SolveMaxConsistent, FullyConsistent) {
  std::mt19937_64 rng(23);
  const BitMatrix a = random_matrix(rng, 30, 12);
  const BitVector b = evaluate(a, random_vector(rng, 12));
  EXPECT_EQ(solve_max_consistent(a, b).satisfied_rows.size(), 30u);
}

TEST(SolveMaxConsistent, SkipsContradiction) {
  const auto sol = solve_max_consistent(BitMatrix::from_rows({"10", "10", "01"}), BitVector::from_string("101"));
  EXPECT_EQ(sol.satisfied_rows, (std::vector<std::size_t>{0, 2}));
  EXPECT_EQ(sol.assignment.str(), "11");
}

// Greedy replay: a row is kept iff the kept rows so far plus this row are
// consistent, checked by brute force over all assignments.
TEST(SolveMaxConsistent, GreedyReplay) {
  std::mt19937_64 rng(24);
  for (int t = 0; t < 20; ++t) {
    const std::size_t cols = 12;
    const BitMatrix a = random_matrix(rng, 200, cols);
    const BitVector b = random_vector(rng, 200);
    const F2Solution sol = solve_max_consistent(a, b);

    std::vector<std::uint64_t> alive(std::size_t{1} << cols);
    for (std::size_t m = 0; m < alive.size(); ++m) alive[m] = m;
    std::vector<std::size_t> kept;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      std::vector<std::uint64_t> next;
      for (std::uint64_t m : alive) {
        bool acc = false;
        for (std::size_t c = 0; c < cols; ++c) acc ^= a.get(r, c) && ((m >> c) & 1U);
        if (acc == b.get(r)) next.push_back(m);
      }
      if (!next.empty()) {
        alive = std::move(next);
        kept.push_back(r);
      }
    }
    const BitVector got = evaluate(a, sol.assignment);
    for (std::size_t r : kept) EXPECT_EQ(got.get(r), b.get(r)) << "kept row " << r;
    for (std::size_t r : sol.satisfied_rows) EXPECT_EQ(got.get(r), b.get(r));
    EXPECT_GE(sol.satisfied_rows.size(), kept.size());
  }
}

TEST(BitMatrix, PaddingStaysClear) {
  BitMatrix a(2, 70);
  a.set_row(0, BitVector::ones(70));
  EXPECT_EQ(a.row(0)[1] >> 6, 0u);
  EXPECT_THROW(BitMatrix::from_rows({"10", "1"}), DimensionMismatch);
}

}  // namespace
}  // namespace paulinv

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

#include "paulinv/pauli.hpp"

#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "paulinv/dense.hpp"

namespace paulinv {
namespace {

TEST(ParsePauli, TokensAndIdentity) {
  const PauliOperator p = parse_pauli("X0 Z2", 3);
  EXPECT_EQ(p.letter(0), 'X');
  EXPECT_EQ(p.letter(1), 'I');
  EXPECT_EQ(p.letter(2), 'Z');
  EXPECT_EQ(p.phase_exp(), 0u);
  EXPECT_EQ(p.str(), "X0 Z2");
  EXPECT_TRUE(parse_pauli("I", 2).is_identity());
  EXPECT_EQ(parse_pauli("  Z2   X0 ", 3), p);
}

PauliParseError::Kind parse_error_kind(const std::string& text, std::size_t n) {
  try {
    parse_pauli(text, n);
  } catch (const PauliParseError& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error for '" << text << "'";
  return PauliParseError::Kind::Malformed;
}

TEST(ParsePauli, ErrorsAreDistinct) {
  using K = PauliParseError::Kind;
  EXPECT_EQ(parse_error_kind("X0 X0", 2), K::DuplicateIndex);
  EXPECT_EQ(parse_error_kind("X2", 2), K::IndexOutOfRange);
  EXPECT_EQ(parse_error_kind("Q1", 2), K::Malformed);
  EXPECT_EQ(parse_error_kind("X", 2), K::Malformed);
  EXPECT_EQ(parse_error_kind("X1a", 2), K::Malformed);
  EXPECT_EQ(parse_error_kind("I X0", 2), K::Malformed);
  EXPECT_EQ(parse_error_kind("", 2), K::Malformed);
  try {
    parse_pauli("X0 Y7", 3);
  } catch (const PauliParseError& e) {
    EXPECT_EQ(e.token(), "Y7");
  }
}

TEST(Symplectic, KnownEncodings) {
  EXPECT_EQ(to_symplectic(parse_pauli("X0 Y1", 2)).str(), "1101");
  EXPECT_EQ(to_symplectic(parse_pauli("X0 Y2", 3)).str(), "101001");
  EXPECT_EQ(to_symplectic(PauliOperator::identity(2)).str(), "0000");
}

TEST(Symplectic, RoundTripExhaustive) {
  for (std::size_t n = 1; n <= 3; ++n) {
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << (2 * n)); ++code) {
      const PauliOperator p = oracle::word_from_code(n, code);
      EXPECT_EQ(from_symplectic(to_symplectic(p)), p);
    }
  }
}

TEST(Multiply, SingleQubitTable) {
  const PauliOperator x = parse_pauli("X0", 1), y = parse_pauli("Y0", 1), z = parse_pauli("Z0", 1);
  const PauliOperator xy = multiply(x, y);
  EXPECT_TRUE(xy.same_word(z));
  EXPECT_EQ(xy.phase_exp(), 1u);
  EXPECT_EQ(multiply(y, x).phase_exp(), 3u);
  EXPECT_EQ(multiply(z, x).phase_exp(), 1u);
  EXPECT_EQ(multiply(y, z).phase_exp(), 1u);
}

TEST(Multiply, SelfProductIsIdentity) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 200; ++t) {
    const PauliOperator p = oracle::random_word(rng, 1 + rng() % 70, true);
    EXPECT_TRUE(multiply(p, p).is_identity()) << p.str();
  }
}

TEST(Multiply, ZZTimesXMatchesDense) {
  const PauliOperator r = multiply(parse_pauli("Z0 Z1", 2), parse_pauli("X0", 2));
  EXPECT_TRUE(r.same_word(parse_pauli("Y0 Z1", 2)));
  EXPECT_TRUE(oracle::dense(r).isApprox(oracle::dense(parse_pauli("Z0 Z1", 2)) * oracle::dense(parse_pauli("X0", 2))));
}

TEST(Multiply, RandomTriplesAgainstDense) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 1000; ++t) {
    const std::size_t n = 1 + rng() % 3;
    PauliOperator a = oracle::random_word(rng, n, true);
    PauliOperator b = oracle::random_word(rng, n, true);
    PauliOperator c = oracle::random_word(rng, n, true);
    a = PauliOperator(a.x_bits(), a.z_bits(), static_cast<unsigned>(rng() % 4));
    const PauliOperator left = multiply(multiply(a, b), c);
    const PauliOperator right = multiply(a, multiply(b, c));
    ASSERT_EQ(left, right);
    const oracle::Mat expect = oracle::dense(a) * oracle::dense(b) * oracle::dense(c);
    ASSERT_TRUE(oracle::dense(left).isApprox(expect, 1e-12)) << a.str() << " " << b.str() << " " << c.str();
  }
}

TEST(Multiply, QubitMismatchThrows) {
  EXPECT_THROW(multiply(parse_pauli("X0", 1), parse_pauli("X0", 2)), QubitCountMismatch);
  EXPECT_THROW(commutes(parse_pauli("X0", 1), parse_pauli("X0", 2)), QubitCountMismatch);
}

TEST(Commutes, Examples) {
  EXPECT_FALSE(commutes(parse_pauli("X0", 1), parse_pauli("Z0", 1)));
  EXPECT_FALSE(commutes(parse_pauli("Z0 Y1", 2), parse_pauli("Z0 Z1", 2)));
}

TEST(Commutes, ExhaustiveAgainstDense) {
  for (std::size_t n = 1; n <= 3; ++n) {
    const std::uint64_t total = std::uint64_t{1} << (2 * n);
    std::vector<oracle::Mat> mats;
    for (std::uint64_t c = 0; c < total; ++c) mats.push_back(oracle::dense(oracle::word_from_code(n, c)));
    for (std::uint64_t a = 0; a < total; ++a) {
      for (std::uint64_t b = 0; b < total; ++b) {
        const bool dense_commutes = (mats[a] * mats[b] - mats[b] * mats[a]).norm() < 1e-12;
        ASSERT_EQ(commutes(oracle::word_from_code(n, a), oracle::word_from_code(n, b)), dense_commutes);
      }
    }
  }
}

TEST(Commutes, HalfOfAllWordsAntiCommute) {
  for (std::size_t n = 1; n <= 3; ++n) {
    const std::uint64_t total = std::uint64_t{1} << (2 * n);
    for (std::uint64_t a = 1; a < total; ++a) {
      std::uint64_t anti = 0;
      for (std::uint64_t b = 0; b < total; ++b) {
        anti += !commutes(oracle::word_from_code(n, a), oracle::word_from_code(n, b));
      }
      EXPECT_EQ(anti, total / 2);
    }
  }
}

TEST(YParity, Examples) {
  EXPECT_TRUE(y_parity(parse_pauli("Y0", 1)));
  EXPECT_FALSE(y_parity(parse_pauli("Y0 Y1", 2)));
  EXPECT_FALSE(y_parity(parse_pauli("X0 Z1", 2)));
}

TEST(DenseMatrix, Examples) {
  EXPECT_TRUE(dense_matrix(PauliOperator::identity(1)).isApprox(Matrix::Identity(2, 2)));
  Matrix y(2, 2);
  y << 0, cplx(0, -1), cplx(0, 1), 0;
  EXPECT_TRUE(dense_matrix(parse_pauli("Y0", 1)).isApprox(y));
  const Matrix zz = dense_matrix(parse_pauli("Z0 Z1", 2));
  EXPECT_TRUE(zz.isApprox(Eigen::Vector4cd(1, -1, -1, 1).asDiagonal().toDenseMatrix()));
}

TEST(DenseMatrix, AgreesWithKroneckerOracle) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 300; ++t) {
    PauliOperator p = oracle::random_word(rng, 1 + rng() % 4, true);
    p = PauliOperator(p.x_bits(), p.z_bits(), static_cast<unsigned>(rng() % 4));
    ASSERT_TRUE(dense_matrix(p).isApprox(oracle::dense(p))) << p.str();
  }
}

TEST(DenseMatrix, CapEnforced) {
  EXPECT_THROW(dense_matrix(PauliOperator::identity(9)), SimulatorCapExceeded);
  EXPECT_THROW(dense_matrix(PauliOperator::identity(11), 11), SimulatorCapExceeded);
}

TEST(PauliOperator, CanonicalText) {
  EXPECT_EQ(PauliOperator::identity(3).str(), "I");
  EXPECT_EQ(multiply(parse_pauli("X0", 1), parse_pauli("Y0", 1)).str(), "i*Z0");
  EXPECT_EQ(multiply(parse_pauli("Y0", 1), parse_pauli("X0", 1)).str(), "-i*Z0");
}

}  // namespace
}  // namespace paulinv

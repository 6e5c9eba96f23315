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

// Reference implementations used only by the tests. They work letter by
// letter and through Kronecker products, sharing no code with the bit-packed
// library paths they check.

#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "paulinv/pauli.hpp"
#include "paulinv/support.hpp"

namespace oracle {

using cplx = std::complex<double>;
using Mat = Eigen::MatrixXcd;

inline Mat letter_matrix(char c) {
  Mat m(2, 2);
  switch (c) {
    case 'X': m << 0, 1, 1, 0; break;
    case 'Y': m << 0, cplx(0, -1), cplx(0, 1), 0; break;
    case 'Z': m << 1, 0, 0, -1; break;
    default: m << 1, 0, 0, 1; break;
  }
  return m;
}

inline Mat kron(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  }
  return out;
}

/// Dense matrix from letters, qubit 0 leftmost, times i^phase.
inline Mat dense(const paulinv::PauliOperator& p) {
  Mat m = Mat::Identity(1, 1);
  for (std::size_t q = 0; q < p.n_qubits(); ++q) m = kron(m, letter_matrix(p.letter(q)));
  static const cplx kI[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  return kI[p.phase_exp()] * m;
}

/// Commutation by counting positions with distinct non-identity letters.
inline bool letters_commute(const paulinv::PauliOperator& a, const paulinv::PauliOperator& b) {
  std::size_t clashes = 0;
  for (std::size_t q = 0; q < a.n_qubits(); ++q) {
    const char x = a.letter(q), y = b.letter(q);
    if (x != 'I' && y != 'I' && x != y) ++clashes;
  }
  return clashes % 2 == 0;
}

inline std::size_t y_letters(const paulinv::PauliOperator& p) {
  std::size_t k = 0;
  for (std::size_t q = 0; q < p.n_qubits(); ++q) k += p.letter(q) == 'Y';
  return k;
}

/// The word with index `code` in base 4 (digit q is qubit q: 0=I,1=X,2=Y,3=Z).
inline paulinv::PauliOperator word_from_code(std::size_t n, std::uint64_t code) {
  static const char kL[4] = {'I', 'X', 'Y', 'Z'};
  paulinv::PauliOperator p(n);
  for (std::size_t q = 0; q < n; ++q) {
    p.set_letter(q, kL[code & 3U]);
    code >>= 2;
  }
  return p;
}

inline paulinv::PauliOperator random_word(std::mt19937_64& rng, std::size_t n, bool allow_identity = false) {
  std::uniform_int_distribution<std::uint64_t> d(allow_identity ? 0 : 1, (std::uint64_t{1} << (2 * n)) - 1);
  return word_from_code(n, d(rng));
}

inline paulinv::PauliSupport random_support(std::mt19937_64& rng, std::size_t n, std::size_t m) {
  paulinv::PauliSupport s(n);
  while (s.size() < m) s.add(random_word(rng, n));
  return s;
}

/// First word in base-4 order whose commutation with each term matches
/// `anti[j]` (true = anti-commute).
inline std::optional<paulinv::PauliOperator> brute_force_pattern(const paulinv::PauliSupport& s,
                                                                 const std::vector<bool>& anti) {
  const std::uint64_t total = std::uint64_t{1} << (2 * s.n_qubits());
  for (std::uint64_t code = 0; code < total; ++code) {
    const auto v = word_from_code(s.n_qubits(), code);
    bool ok = true;
    for (std::size_t j = 0; j < s.size() && ok; ++j) ok = letters_commute(s[j], v) != anti[j];
    if (ok) return v;
  }
  return std::nullopt;
}

/// True iff some subset multiplies to a multiple of the identity and
/// weight(subset) is odd, where weight counts members with flagged[j].
/// Products are formed with dense matrices.
inline bool dense_identity_subset(const paulinv::PauliSupport& s, const std::vector<bool>& flagged) {
  const std::size_t m = s.size();
  const Eigen::Index dim = Eigen::Index{1} << s.n_qubits();
  std::vector<Mat> mats;
  for (const auto& t : s) mats.push_back(dense(t));
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) {
    Mat prod = Mat::Identity(dim, dim);
    std::size_t w = 0;
    for (std::size_t j = 0; j < m; ++j) {
      if ((mask >> j) & 1U) {
        prod = prod * mats[j];
        w += flagged[j];
      }
    }
    if (w % 2 == 0) continue;
    // prod is a Pauli up to phase; it is proportional to I iff |Tr| = dim.
    if (std::abs(std::abs(prod.trace()) - static_cast<double>(dim)) < 1e-9) return true;
  }
  return false;
}

}  // namespace oracle

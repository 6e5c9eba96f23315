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

#include <complex>
#include <bit>
#include <cstddef>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

#include "paulinv/pauli.hpp"

namespace paulinv {

using cplx = std::complex<double>;
using Matrix = Eigen::MatrixXcd;

inline constexpr std::size_t kDefaultMaxQubits = 8;
inline constexpr std::size_t kHardMaxQubits = 10;

class SimulatorCapExceeded : public std::runtime_error {
 public:
  SimulatorCapExceeded(std::size_t n, std::size_t cap)
      : std::runtime_error("dense simulation of " + std::to_string(n) + " qubits exceeds the cap of " +
                           std::to_string(cap)) {}
};

inline void check_qubit_cap(std::size_t n_qubits, std::size_t max_qubits) {
  if (max_qubits > kHardMaxQubits) throw SimulatorCapExceeded(max_qubits, kHardMaxQubits);
  if (n_qubits > max_qubits) throw SimulatorCapExceeded(n_qubits, max_qubits);
}

/// Dense 2^N x 2^N matrix of `p`, phase included. Qubit 0 is the most
/// significant bit of the basis index.
inline Matrix dense_matrix(const PauliOperator& p, std::size_t max_qubits = kDefaultMaxQubits) {
  const std::size_t n = p.n_qubits();
  check_qubit_cap(n, max_qubits);
  const std::size_t dim = std::size_t{1} << n;

  std::size_t xmask = 0, zmask = 0;
  for (std::size_t q = 0; q < n; ++q) {
    const std::size_t bit = std::size_t{1} << (n - 1 - q);
    if (p.x_bits().get(q)) xmask |= bit;
    if (p.z_bits().get(q)) zmask |= bit;
  }
  // sigma|b> = i^{#Y} (-1)^{b.z} |b ^ x>
  static const cplx kIPow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  const cplx base = kIPow[(p.phase_exp() + p.y_count()) & 3U];

  Matrix m = Matrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  for (std::size_t b = 0; b < dim; ++b) {
    const bool neg = std::popcount(b & zmask) & 1;
    m(static_cast<Eigen::Index>(b ^ xmask), static_cast<Eigen::Index>(b)) = neg ? -base : base;
  }
  return m;
}

}  // namespace paulinv

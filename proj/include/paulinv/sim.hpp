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

// Dense statevector-free simulation of circuit programs: every program is
// evaluated as a full 2^N x 2^N unitary and compared with its target up to
// global phase.

#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <numeric>
#include <random>
#include <thread>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include "paulinv/circuit.hpp"
#include "paulinv/dense.hpp"
#include "paulinv/support.hpp"

namespace paulinv {

inline constexpr std::size_t kDefaultSamples = 16;
inline constexpr double kDefaultTolerance = 1e-9;

/// splitmix64 finalizer, used to derive independent per-sample seeds.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::mt19937_64 sample_rng(std::uint64_t seed, std::uint64_t index) {
  return std::mt19937_64(splitmix64(seed ^ splitmix64(index)));
}

namespace detail {

struct PauliMasks {
  std::size_t x = 0;
  std::size_t z = 0;
  cplx base{1, 0};
};

inline PauliMasks masks_of(const PauliOperator& p) {
  static const cplx kIPow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  PauliMasks m;
  const std::size_t n = p.n_qubits();
  for (std::size_t q = 0; q < n; ++q) {
    const std::size_t bit = std::size_t{1} << (n - 1 - q);
    if (p.x_bits().get(q)) m.x |= bit;
    if (p.z_bits().get(q)) m.z |= bit;
  }
  m.base = kIPow[(p.phase_exp() + p.y_count()) & 3U];
  return m;
}

}  // namespace detail

/// H += coeff * P without forming P densely.
inline void add_pauli(Matrix& h, const PauliOperator& p, double coeff) {
  const auto m = detail::masks_of(p);
  const auto dim = static_cast<std::size_t>(h.rows());
  for (std::size_t b = 0; b < dim; ++b) {
    const cplx v = (std::popcount(b & m.z) & 1) ? -m.base : m.base;
    h(static_cast<Eigen::Index>(b ^ m.x), static_cast<Eigen::Index>(b)) += coeff * v;
  }
}

/// Returns P * a.
inline Matrix apply_pauli_left(const PauliOperator& p, const Matrix& a) {
  const auto m = detail::masks_of(p);
  Matrix out(a.rows(), a.cols());
  for (std::size_t b = 0; b < static_cast<std::size_t>(a.rows()); ++b) {
    const cplx v = (std::popcount(b & m.z) & 1) ? -m.base : m.base;
    out.row(static_cast<Eigen::Index>(b ^ m.x)) = v * a.row(static_cast<Eigen::Index>(b));
  }
  return out;
}

inline Matrix build_hamiltonian(const PauliSupport& s, const std::vector<double>& coeffs,
                                std::size_t max_qubits = kDefaultMaxQubits) {
  check_qubit_cap(s.n_qubits(), max_qubits);
  if (coeffs.size() != s.size()) throw DimensionMismatch("coefficient count does not match support size");
  const auto dim = static_cast<Eigen::Index>(std::size_t{1} << s.n_qubits());
  Matrix h = Matrix::Zero(dim, dim);
  for (std::size_t j = 0; j < s.size(); ++j) add_pauli(h, s[j], coeffs[j]);
  return h;
}

/// exp(-i t H) for Hermitian H via its eigendecomposition.
inline Matrix evolve(const Matrix& h, double t = 1.0) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(h);
  const Eigen::VectorXd& lam = es.eigenvalues();
  Eigen::VectorXcd ph(lam.size());
  for (Eigen::Index k = 0; k < lam.size(); ++k) ph(k) = std::exp(cplx(0, -t * lam(k)));
  return es.eigenvectors() * ph.asDiagonal() * es.eigenvectors().adjoint();
}

/// Unitary implemented by `prog` when each query is `u`.
inline Matrix apply_program(const CircuitProgram& prog, const Matrix& u) {
  Matrix r = Matrix::Identity(u.rows(), u.cols());
  for (const auto& s : prog.steps()) {
    r = is_query(s) ? Matrix(u * r) : apply_pauli_left(std::get<FrameGate>(s).pauli, r);
  }
  return r;
}

/// |Tr(A^dagger B)|^2 / d^2; equals 1 iff A and B agree up to a global phase.
/// Rounding overshoot above 1 is clipped.
inline double phase_invariant_fidelity(const Matrix& a, const Matrix& b) {
  const cplx tr = (a.adjoint() * b).trace();
  const double d = static_cast<double>(a.rows());
  return std::min(1.0, std::norm(tr) / (d * d));
}

inline Matrix task_target(Task task, const Matrix& u) {
  switch (task) {
    case Task::Invert: return u.adjoint();
    case Task::Conjugate: return u.conjugate();
    case Task::Transpose: return u.transpose();
  }
  return u;
}

inline std::vector<double> gaussian_coefficients(std::mt19937_64& rng, std::size_t m) {
  std::normal_distribution<double> nd(0.0, 1.0);
  std::vector<double> c(m);
  for (auto& x : c) x = nd(rng);
  return c;
}

struct VerificationReport {
  Task task = Task::Invert;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  double tolerance = kDefaultTolerance;
  std::vector<double> fidelities;
  double min_fidelity = 0;
  double mean_fidelity = 0;
  double max_infidelity = 0;
  bool pass = false;
};

namespace detail {

/// Runs fn(i) for i in [0, count) on up to `threads` workers. Results must be
/// written by index so the outcome does not depend on scheduling.
template <class Fn>
void parallel_for(std::size_t count, std::size_t threads, Fn&& fn) {
  threads = std::max<std::size_t>(1, std::min(threads, count));
  if (threads == 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      for (std::size_t i = t; i < count; i += threads) fn(i);
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace detail

/// Draws `samples` Hamiltonians on S with i.i.d. standard normal coefficients
/// and t = 1, and compares the program's unitary with the task target. Passes
/// iff every fidelity is at least 1 - tol.
inline VerificationReport certify_program(const PauliSupport& s, const CircuitProgram& prog, Task task,
                                          std::size_t samples = kDefaultSamples, std::uint64_t seed = 0,
                                          double tol = kDefaultTolerance,
                                          std::size_t max_qubits = kDefaultMaxQubits, std::size_t threads = 1) {
  check_qubit_cap(s.n_qubits(), max_qubits);
  if (prog.n_qubits() != s.n_qubits()) throw QubitCountMismatch(prog.n_qubits(), s.n_qubits());
  VerificationReport rep;
  rep.task = task;
  rep.samples = samples;
  rep.seed = seed;
  rep.tolerance = tol;
  rep.fidelities.assign(samples, 0.0);
  detail::parallel_for(samples, threads, [&](std::size_t i) {
    auto rng = sample_rng(seed, i);
    const Matrix u = evolve(build_hamiltonian(s, gaussian_coefficients(rng, s.size()), max_qubits));
    rep.fidelities[i] = phase_invariant_fidelity(task_target(task, u), apply_program(prog, u));
  });
  rep.min_fidelity = samples ? *std::min_element(rep.fidelities.begin(), rep.fidelities.end()) : 1.0;
  rep.mean_fidelity = samples ? std::min(1.0, std::accumulate(rep.fidelities.begin(), rep.fidelities.end(), 0.0) /
                                                  static_cast<double>(samples))
                              : 1.0;
  rep.max_infidelity = 1.0 - rep.min_fidelity;
  rep.pass = rep.min_fidelity >= 1.0 - tol;
  return rep;
}

// ---------------------------------------------------------------------------
// Robustness to terms outside the support

inline constexpr std::size_t kNoisePoolLimit = 512;

struct RobustnessPoint {
  double delta = 0;
  double mean_fidelity = 0;
  double min_fidelity = 0;
};

/// All non-identity Pauli words on n qubits that are not in S, in index order.
inline std::vector<PauliOperator> support_complement(const PauliSupport& s) {
  const std::size_t n = s.n_qubits();
  std::vector<PauliOperator> out;
  const std::size_t total = std::size_t{1} << (2 * n);
  for (std::size_t code = 1; code < total; ++code) {
    BitVector bits(2 * n);
    for (std::size_t c = 0; c < 2 * n; ++c) bits.set(c, (code >> c) & 1U);
    PauliOperator p = from_symplectic({bits});
    if (!s.contains(p)) out.push_back(std::move(p));
  }
  return out;
}

/// Perturbs H_S by a Hamiltonian on the complement of S whose coefficient
/// L1 norm is delta times that of H_S, and reports the fidelity of the
/// inversion program against exp(+i H_S). The same draws are reused for every
/// delta. For N >= 6 each sample uses a random subset of kNoisePoolLimit
/// complement terms.
inline std::vector<RobustnessPoint> robustness_sweep(const PauliSupport& s, const CircuitProgram& prog,
                                                     const std::vector<double>& deltas, std::size_t samples,
                                                     std::uint64_t seed = 0,
                                                     std::size_t max_qubits = kDefaultMaxQubits) {
  check_qubit_cap(s.n_qubits(), max_qubits);
  if (prog.n_qubits() != s.n_qubits()) throw QubitCountMismatch(prog.n_qubits(), s.n_qubits());
  const std::vector<PauliOperator> pool = support_complement(s);
  const auto dim = static_cast<Eigen::Index>(std::size_t{1} << s.n_qubits());

  std::vector<std::vector<double>> fid(deltas.size(), std::vector<double>(samples));
  for (std::size_t i = 0; i < samples; ++i) {
    auto rng = sample_rng(seed, i);
    const std::vector<double> alpha = gaussian_coefficients(rng, s.size());
    std::vector<std::size_t> chosen(pool.size());
    std::iota(chosen.begin(), chosen.end(), std::size_t{0});
    if (pool.size() > kNoisePoolLimit) {
      std::shuffle(chosen.begin(), chosen.end(), rng);
      chosen.resize(kNoisePoolLimit);
    }
    const std::vector<double> beta = gaussian_coefficients(rng, chosen.size());

    double l1a = 0, l1b = 0;
    for (double a : alpha) l1a += std::abs(a);
    for (double b : beta) l1b += std::abs(b);
    const Matrix hs = build_hamiltonian(s, alpha, max_qubits);
    Matrix hn = Matrix::Zero(dim, dim);
    for (std::size_t k = 0; k < chosen.size(); ++k) add_pauli(hn, pool[chosen[k]], beta[k]);
    const Matrix target = evolve(hs, -1.0);
    for (std::size_t d = 0; d < deltas.size(); ++d) {
      const double scale = l1b > 0 ? deltas[d] * l1a / l1b : 0.0;
      const Matrix u = evolve(hs + scale * hn);
      fid[d][i] = phase_invariant_fidelity(target, apply_program(prog, u));
    }
  }

  std::vector<RobustnessPoint> out;
  for (std::size_t d = 0; d < deltas.size(); ++d) {
    RobustnessPoint p;
    p.delta = deltas[d];
    p.mean_fidelity =
        samples ? std::min(1.0, std::accumulate(fid[d].begin(), fid[d].end(), 0.0) / static_cast<double>(samples)) : 1.0;
    p.min_fidelity = samples ? *std::min_element(fid[d].begin(), fid[d].end()) : 1.0;
    out.push_back(p);
  }
  return out;
}

/// Least-squares slope of log(1 - F) against log(delta).
inline double log_log_slope(const std::vector<RobustnessPoint>& pts) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  double k = 0;
  for (const auto& p : pts) {
    if (p.delta <= 0) continue;
    const double x = std::log(p.delta);
    const double y = std::log(std::max(1.0 - p.mean_fidelity, std::numeric_limits<double>::min()));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    k += 1;
  }
  return (k * sxy - sx * sy) / (k * sxx - sx * sx);
}

// ---------------------------------------------------------------------------
// Single-qubit transpose by linear combination of Pauli sandwiches

/// Haar-distributed single-qubit unitary.
inline Matrix random_unitary(std::mt19937_64& rng, Eigen::Index dim) {
  std::normal_distribution<double> nd(0.0, 1.0);
  Matrix g(dim, dim);
  for (Eigen::Index r = 0; r < dim; ++r) {
    for (Eigen::Index c = 0; c < dim; ++c) g(r, c) = cplx(nd(rng), nd(rng));
  }
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ();
  const Matrix rr = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index k = 0; k < dim; ++k) {
    const cplx d = rr(k, k);
    q.col(k) *= std::abs(d) > 0 ? d / std::abs(d) : cplx(1, 0);
  }
  return q;
}

/// Largest entrywise residual of I U I + X U X - Y U Y + Z U Z - 2 U^T over
/// `samples` random single-qubit unitaries.
inline double lcu_transpose_residual(std::size_t samples, std::uint64_t seed = 0) {
  const Matrix i2 = Matrix::Identity(2, 2);
  const Matrix x = dense_matrix(PauliOperator::single(1, 0, 'X'));
  const Matrix y = dense_matrix(PauliOperator::single(1, 0, 'Y'));
  const Matrix z = dense_matrix(PauliOperator::single(1, 0, 'Z'));
  double worst = 0;
  for (std::size_t i = 0; i < samples; ++i) {
    auto rng = sample_rng(seed, i);
    const Matrix u = random_unitary(rng, 2);
    const Matrix lhs = i2 * u * i2 + x * u * x - y * u * y + z * u * z;
    worst = std::max(worst, (lhs - 2.0 * u.transpose()).cwiseAbs().maxCoeff());
  }
  return worst;
}

}  // namespace paulinv

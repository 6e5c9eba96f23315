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

// Complex conjugation of Pauli-supported unitaries.
//
// Three routes, tried in order: a single Pauli sandwich, a sign plan when S
// pairwise commutes, and a split S = S0 + S1 in which S0 is central and
// conjugated by its own subcircuit while S1 is handled by one final sandwich.

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "paulinv/analysis.hpp"
#include "paulinv/circuit.hpp"
#include "paulinv/sim.hpp"
#include "paulinv/support.hpp"

namespace paulinv {

/// Split certificate for conjugation. V0 anti-commutes with S1 and commutes
/// with S0. V0' matches the conjugation signs on S1 and the opposite signs on
/// S0. `s0_subcircuit` conjugates exp(-i H0) for any H0 on S0.
struct ConjugationCertificate {
  std::vector<std::size_t> s0_indices;
  std::vector<std::size_t> s1_indices;
  PauliOperator v0;
  PauliOperator v0_prime;
  CircuitProgram s0_subcircuit;

  /// Two queries per subcircuit query plus the final sandwich.
  std::size_t query_count() const { return 2 * s0_subcircuit.query_count() + 1; }
};

struct ConjugationOptions {
  std::size_t cap = kSplitSearchCap;
  /// Used in place of the sign-plan search for S0 when set.
  std::optional<CircuitProgram> s0_subcircuit;
  /// Candidates are checked numerically when N is within this cap.
  std::size_t max_qubits = kDefaultMaxQubits;
  std::size_t validation_samples = kDefaultSamples;
  double validation_tol = kDefaultTolerance;
};

namespace detail {

inline BitVector v0_prime_pattern(const PauliSupport& s, const std::vector<std::size_t>& s0) {
  BitVector in_s0(s.size());
  for (std::size_t i : s0) in_s0.set(i);
  BitVector r(s.size());
  for (std::size_t j = 0; j < s.size(); ++j) r.set(j, y_parity(s[j]) == in_s0.get(j));
  return r;
}

inline bool numerically_valid(const PauliSupport& s, const CircuitProgram& prog, const ConjugationOptions& opt) {
  if (s.n_qubits() > opt.max_qubits) return true;
  return certify_program(s, prog, Task::Conjugate, opt.validation_samples, 0, opt.validation_tol, opt.max_qubits)
      .pass;
}

}  // namespace detail

/// Builds the full program from a certificate. With c_k the frame seen by
/// query k of the S0 subcircuit, each k contributes the sandwiches by c_k V0
/// and c_k; the final sandwich is by V0'.
inline CircuitProgram synth_conjugation_split(std::size_t n_qubits, const ConjugationCertificate& cert) {
  const QueryFrames qf = query_frames(cert.s0_subcircuit);
  CircuitProgram p(Task::Conjugate, n_qubits);
  for (const auto& c : qf.before_query) {
    const PauliOperator cv = multiply(c, cert.v0).without_phase();
    p.push_frame(cv);
    p.push_query();
    p.push_frame(cv);
    p.push_frame(c);
    p.push_query();
    p.push_frame(c);
  }
  p.push_frame(cert.v0_prime);
  p.push_query();
  p.push_frame(cert.v0_prime);
  return p;
}

/// Searches S0 among subsets of the central terms, smallest first, and
/// returns the certificate with the fewest queries at the first size that
/// admits one. Throws SearchCapExceeded when |S| > cap.
inline std::optional<ConjugationCertificate> find_conjugation_certificate(const PauliSupport& s,
                                                                          const ConjugationOptions& opt = {}) {
  const std::size_t m = s.size();
  if (m > opt.cap) throw SearchCapExceeded("conjugation split search", m, opt.cap);
  if (m < 2) return std::nullopt;
  const BitMatrix rows = build_constraint_rows(s);
  const std::vector<std::size_t> pool = detail::central_terms(s);

  for (std::size_t k = 1; k <= pool.size() && k < m; ++k) {
    std::optional<ConjugationCertificate> best;
    detail::for_each_combination(pool, k, [&](const std::vector<std::size_t>& s0) {
      const std::vector<std::size_t> s1 = detail::complement(m, s0);
      auto v0 = solve_affine(rows, detail::split_pattern(m, s1));
      if (!v0) return true;
      auto vp = solve_affine(rows, detail::v0_prime_pattern(s, s0));
      if (!vp) return true;

      const PauliSupport sub = s.subset(s0);
      const std::vector<int> targets = target_signs(sub, Task::Conjugate);
      std::optional<CircuitProgram> inner;
      if (opt.s0_subcircuit) {
        if (opt.s0_subcircuit->n_qubits() == s.n_qubits() && verify_commuting_plan(sub, *opt.s0_subcircuit, targets)) {
          inner = *opt.s0_subcircuit;
        }
      } else {
        std::optional<std::vector<PauliOperator>> plan;
        try {
          plan = find_commuting_sign_plan(sub, targets);
        } catch (const SearchCapExceeded&) {
        }
        if (plan) inner = synth_sandwiches(Task::Conjugate, s.n_qubits(), *plan);
      }
      if (!inner) return true;

      ConjugationCertificate cert{s0, s1, pauli_from_assignment(v0->assignment), pauli_from_assignment(vp->assignment),
                                  *inner};
      if (best && cert.query_count() >= best->query_count()) return true;
      if (!detail::numerically_valid(s, synth_conjugation_split(s.n_qubits(), cert), opt)) return true;
      best = std::move(cert);
      return true;
    });
    if (best) return best;
  }
  return std::nullopt;
}

enum class ConjugationRoute { SingleQuery, SignPlan, Split };

inline const char* route_name(ConjugationRoute r) {
  switch (r) {
    case ConjugationRoute::SingleQuery: return "single-query";
    case ConjugationRoute::SignPlan: return "sign-plan";
    case ConjugationRoute::Split: return "split";
  }
  return "?";
}

struct ConjugationResult {
  ConjugationRoute route = ConjugationRoute::SingleQuery;
  CircuitProgram program;
  std::optional<ConjugationCertificate> certificate;
};

/// Tries the single-query, sign-plan and split routes in that order.
inline std::optional<ConjugationResult> synth_conjugate(const PauliSupport& s, const ConjugationOptions& opt = {}) {
  if (auto v = find_single_query_conjugator(s)) {
    return ConjugationResult{ConjugationRoute::SingleQuery, synth_single_query(Task::Conjugate, *v), std::nullopt};
  }
  if (check_pairwise_commuting(s)) {
    std::optional<std::vector<PauliOperator>> plan;
    try {
      plan = find_commuting_sign_plan(s, target_signs(s, Task::Conjugate));
    } catch (const SearchCapExceeded&) {
    }
    if (plan) {
      return ConjugationResult{ConjugationRoute::SignPlan, synth_sandwiches(Task::Conjugate, s.n_qubits(), *plan),
                               std::nullopt};
    }
  }
  if (auto cert = find_conjugation_certificate(s, opt)) {
    CircuitProgram prog = synth_conjugation_split(s.n_qubits(), *cert);
    return ConjugationResult{ConjugationRoute::Split, std::move(prog), std::move(cert)};
  }
  return std::nullopt;
}

}  // namespace paulinv

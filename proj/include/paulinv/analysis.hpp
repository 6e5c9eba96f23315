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

// Feasibility checks and certificates for inverting, conjugating and
// transposing an evolution with known Pauli support.
//
// Every certificate reduces to a GF(2) affine system: a Pauli V given as
// [x | z] anti-commutes with term P iff  P_z . V_x + P_x . V_z = 1, so the
// constraint row for P is its symplectic vector with the halves swapped.

#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "paulinv/f2_solver.hpp"
#include "paulinv/pauli.hpp"
#include "paulinv/support.hpp"

namespace paulinv {

/// Raised when an exhaustive search would exceed its configured size cap.
/// Distinct from "searched everything and found nothing".
class SearchCapExceeded : public std::runtime_error {
 public:
  SearchCapExceeded(const std::string& what, std::size_t size, std::size_t cap)
      : std::runtime_error(what + ": size " + std::to_string(size) + " exceeds cap " + std::to_string(cap)),
        size_(size),
        cap_(cap) {}
  std::size_t size() const { return size_; }
  std::size_t cap() const { return cap_; }

 private:
  std::size_t size_;
  std::size_t cap_;
};

inline constexpr std::size_t kOracleCap = 24;
inline constexpr std::size_t kSplitSearchCap = 20;

// ---------------------------------------------------------------------------
// Constraint system

inline BitMatrix build_constraint_rows(const PauliSupport& s) {
  const std::size_t n = s.n_qubits();
  BitMatrix a(s.size(), 2 * n);
  for (std::size_t j = 0; j < s.size(); ++j) a.set_row(j, s[j].z_bits().concat(s[j].x_bits()));
  return a;
}

/// Pauli word with symplectic vector `v` = [x | z].
inline PauliOperator pauli_from_assignment(const BitVector& v) { return from_symplectic({v}); }

/// Right-hand sides for each task: bit j = 1 means V must anti-commute with
/// term j.
inline BitVector inverse_pattern(const PauliSupport& s) { return BitVector::ones(s.size()); }

inline BitVector conjugation_pattern(const PauliSupport& s) {
  BitVector r(s.size());
  for (std::size_t j = 0; j < s.size(); ++j) r.set(j, !y_parity(s[j]));
  return r;
}

inline BitVector transpose_pattern(const PauliSupport& s) {
  BitVector r(s.size());
  for (std::size_t j = 0; j < s.size(); ++j) r.set(j, y_parity(s[j]));
  return r;
}

/// Pauli V whose commutation pattern with S equals `pattern`, or nullopt.
inline std::optional<PauliOperator> solve_commutation_pattern(const PauliSupport& s, const BitVector& pattern) {
  if (pattern.size() != s.size()) throw DimensionMismatch("pattern length does not match support size");
  auto sol = solve_affine(build_constraint_rows(s), pattern);
  if (!sol) return std::nullopt;
  return pauli_from_assignment(sol->assignment);
}

/// True iff `v` has exactly the given anti-commutation pattern against S.
inline bool matches_pattern(const PauliSupport& s, const PauliOperator& v, const BitVector& pattern) {
  for (std::size_t j = 0; j < s.size(); ++j) {
    if (symplectic_product(s[j], v) != pattern.get(j)) return false;
  }
  return true;
}

/// Pauli V anti-commuting with every term, so that V U V = U^dagger.
inline std::optional<PauliOperator> find_single_query_inverter(const PauliSupport& s) {
  return solve_commutation_pattern(s, inverse_pattern(s));
}

/// V with V U V = U^*: anti-commutes with even-Y terms, commutes with odd-Y.
inline std::optional<PauliOperator> find_single_query_conjugator(const PauliSupport& s) {
  return solve_commutation_pattern(s, conjugation_pattern(s));
}

/// V with V U V = U^T: anti-commutes with odd-Y terms, commutes with even-Y.
inline std::optional<PauliOperator> find_single_query_transposer(const PauliSupport& s) {
  return solve_commutation_pattern(s, transpose_pattern(s));
}

// ---------------------------------------------------------------------------
// Brute-force oracles

/// Smallest subset of S whose product is proportional to the identity and
/// whose pattern bits sum to 1 mod 2. Such a subset exists iff no Pauli has
/// the given commutation pattern. Ties are broken by the smallest index mask.
inline std::optional<std::vector<std::size_t>> identity_subset_witness(const PauliSupport& s, const BitVector& pattern,
                                                                       std::size_t cap = kOracleCap) {
  const std::size_t m = s.size();
  if (m > cap) throw SearchCapExceeded("identity-subset enumeration", m, cap);
  if (m == 0) return std::nullopt;
  const std::size_t n = s.n_qubits();
  const std::size_t words = words_for(2 * n);
  std::vector<word_t> vec(m * words);
  for (std::size_t j = 0; j < m; ++j) {
    const BitVector sv = to_symplectic(s[j]).bits;
    std::copy(sv.words().begin(), sv.words().end(), vec.begin() + static_cast<std::ptrdiff_t>(j * words));
  }

  // Gray-code walk over all nonempty subsets.
  std::vector<word_t> acc(words, 0);
  bool parity = false;
  std::optional<std::uint64_t> best;
  const std::uint64_t total = std::uint64_t{1} << m;
  for (std::uint64_t i = 1; i < total; ++i) {
    const std::size_t j = static_cast<std::size_t>(std::countr_zero(i));
    for (std::size_t w = 0; w < words; ++w) acc[w] ^= vec[j * words + w];
    parity ^= pattern.get(j);
    if (!parity) continue;
    bool zero = true;
    for (word_t w : acc) zero = zero && (w == 0);
    if (!zero) continue;
    const std::uint64_t mask = i ^ (i >> 1);
    if (!best || std::popcount(mask) < std::popcount(*best) ||
        (std::popcount(mask) == std::popcount(*best) && mask < *best)) {
      best = mask;
    }
  }
  if (!best) return std::nullopt;
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < m; ++j) {
    if ((*best >> j) & 1U) out.push_back(j);
  }
  return out;
}

/// Odd-size subset with product proportional to I (blocks single-query inversion).
inline std::optional<std::vector<std::size_t>> odd_identity_subset_witness(const PauliSupport& s,
                                                                           std::size_t cap = kOracleCap) {
  return identity_subset_witness(s, inverse_pattern(s), cap);
}

inline bool odd_identity_subset_exists(const PauliSupport& s, std::size_t cap = kOracleCap) {
  return odd_identity_subset_witness(s, cap).has_value();
}

/// Identity-product subset with an odd number of even-Y members (blocks
/// single-query conjugation).
inline std::optional<std::vector<std::size_t>> even_y_identity_subset_witness(const PauliSupport& s,
                                                                              std::size_t cap = kOracleCap) {
  return identity_subset_witness(s, conjugation_pattern(s), cap);
}

/// Identity-product subset with an odd number of odd-Y members (blocks
/// single-query transposition).
inline std::optional<std::vector<std::size_t>> odd_y_identity_subset_witness(const PauliSupport& s,
                                                                             std::size_t cap = kOracleCap) {
  return identity_subset_witness(s, transpose_pattern(s), cap);
}

// ---------------------------------------------------------------------------
// Anti-commute covers

/// W = {V_0 .. V_{L-1}}: every support term anti-commutes with the element
/// covered_by assigns to it.
struct AntiCommuteCover {
  std::vector<PauliOperator> elements;
  std::vector<std::size_t> covered_by;

  std::size_t size() const { return elements.size(); }
};

inline bool check_pairwise_commuting(const PauliSupport& s) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      if (!commutes(s[i], s[j])) return false;
    }
  }
  return true;
}

/// Greedy cover: solve for a V anti-commuting with as many remaining terms
/// as the input-order max-consistent solve allows, retire the terms it
/// covers, repeat. Not minimal in general.
inline AntiCommuteCover find_greedy_anticommute_cover(const PauliSupport& s) {
  AntiCommuteCover cover;
  cover.covered_by.assign(s.size(), 0);
  std::vector<std::size_t> remaining(s.size());
  for (std::size_t j = 0; j < s.size(); ++j) remaining[j] = j;

  while (!remaining.empty()) {
    const PauliSupport rest = s.subset(remaining);
    const F2Solution sol = solve_max_consistent(build_constraint_rows(rest), BitVector::ones(rest.size()));
    const PauliOperator v = pauli_from_assignment(sol.assignment);
    const std::size_t element = cover.elements.size();
    std::vector<std::size_t> next;
    for (std::size_t k = 0; k < remaining.size(); ++k) {
      if (symplectic_product(rest[k], v)) {
        cover.covered_by[remaining[k]] = element;
      } else {
        next.push_back(remaining[k]);
      }
    }
    // The first remaining row is always incorporated, so each pass covers
    // at least one term.
    if (next.size() == remaining.size()) throw std::logic_error("anti-commute cover made no progress");
    cover.elements.push_back(v);
    remaining = std::move(next);
  }
  return cover;
}

/// True iff every term anti-commutes with its assigned cover element.
inline bool validate_cover(const PauliSupport& s, const AntiCommuteCover& w) {
  if (w.covered_by.size() != s.size()) return false;
  for (std::size_t j = 0; j < s.size(); ++j) {
    if (w.covered_by[j] >= w.elements.size()) return false;
    if (!symplectic_product(s[j], w.elements[w.covered_by[j]])) return false;
  }
  return true;
}

/// Rebuilds covered_by for a hand-written set of cover elements. Returns
/// nullopt when some term anti-commutes with none of them.
inline std::optional<AntiCommuteCover> make_cover(const PauliSupport& s, std::vector<PauliOperator> elements) {
  AntiCommuteCover w{std::move(elements), std::vector<std::size_t>(s.size(), 0)};
  for (std::size_t j = 0; j < s.size(); ++j) {
    bool found = false;
    for (std::size_t l = 0; l < w.elements.size() && !found; ++l) {
      if (symplectic_product(s[j], w.elements[l])) {
        w.covered_by[j] = l;
        found = true;
      }
    }
    if (!found) return std::nullopt;
  }
  return w;
}

inline constexpr std::size_t kPatternSpaceMaxRank = 12;

/// Every commutation pattern some Pauli realizes on S (bit j set iff the
/// Pauli anti-commutes with term j), with one Pauli per pattern. Index 0 is
/// the all-commuting pattern with the identity frame.
struct PatternSpace {
  std::size_t rank = 0;
  std::vector<BitVector> patterns;
  std::vector<PauliOperator> frames;
};

/// Enumerates the column space of the constraint matrix. Throws
/// SearchCapExceeded when its rank exceeds max_rank.
inline PatternSpace realizable_patterns(const PauliSupport& s, std::size_t max_rank = kPatternSpaceMaxRank,
                                        const std::string& what = "pattern space rank") {
  const std::size_t m = s.size();
  const std::size_t n = s.n_qubits();
  const BitMatrix rows = build_constraint_rows(s);
  struct Gen {
    BitVector pattern;
    PauliOperator frame;
  };
  std::vector<Gen> basis;
  std::vector<std::size_t> pivots;
  for (std::size_t c = 0; c < 2 * n; ++c) {
    BitVector pat(m);
    for (std::size_t j = 0; j < m; ++j) pat.set(j, rows.get(j, c));
    BitVector unit(2 * n);
    unit.set(c);
    PauliOperator frame = pauli_from_assignment(unit);
    for (std::size_t k = 0; k < basis.size(); ++k) {
      if (pat.get(pivots[k])) {
        pat ^= basis[k].pattern;
        frame = multiply(frame, basis[k].frame).without_phase();
      }
    }
    const std::size_t p = pat.find_first();
    if (p == m) continue;
    basis.push_back({std::move(pat), std::move(frame)});
    pivots.push_back(p);
  }
  PatternSpace out;
  out.rank = basis.size();
  if (out.rank > max_rank) throw SearchCapExceeded(what, out.rank, max_rank);
  const std::size_t count = std::size_t{1} << out.rank;
  out.patterns.reserve(count);
  out.frames.reserve(count);
  for (std::size_t mask = 0; mask < count; ++mask) {
    BitVector pat(m);
    PauliOperator f = PauliOperator::identity(n);
    for (std::size_t k = 0; k < out.rank; ++k) {
      if ((mask >> k) & 1U) {
        pat ^= basis[k].pattern;
        f = multiply(f, basis[k].frame).without_phase();
      }
    }
    out.patterns.push_back(std::move(pat));
    out.frames.push_back(std::move(f));
  }
  return out;
}

/// Smallest cover, by iterative deepening over inclusion-maximal realizable
/// patterns. Falls back to the greedy cover when the pattern space rank
/// exceeds max_rank.
inline AntiCommuteCover find_anticommute_cover(const PauliSupport& s, std::size_t max_rank = kPatternSpaceMaxRank) {
  AntiCommuteCover greedy = find_greedy_anticommute_cover(s);
  if (greedy.size() <= 1) return greedy;
  PatternSpace space;
  try {
    space = realizable_patterns(s, max_rank);
  } catch (const SearchCapExceeded&) {
    return greedy;
  }
  const std::size_t m = s.size();
  std::vector<std::size_t> maximal;
  for (std::size_t a = 1; a < space.patterns.size(); ++a) {
    bool dominated = false;
    for (std::size_t b = 1; b < space.patterns.size() && !dominated; ++b) {
      if (a == b) continue;
      const BitVector& pa = space.patterns[a];
      dominated = (pa & space.patterns[b]) == pa;
    }
    if (!dominated) maximal.push_back(a);
  }
  std::stable_sort(maximal.begin(), maximal.end(), [&](std::size_t a, std::size_t b) {
    return space.patterns[a].popcount() > space.patterns[b].popcount();
  });

  std::vector<std::size_t> chosen;
  auto dfs = [&](auto&& self, const BitVector& covered, std::size_t depth) -> bool {
    const std::size_t j = (BitVector::ones(m) ^ covered).find_first();
    if (j >= m) return true;
    if (depth == 0) return false;
    for (std::size_t idx : maximal) {
      if (!space.patterns[idx].get(j)) continue;
      chosen.push_back(idx);
      if (self(self, covered | space.patterns[idx], depth - 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  for (std::size_t l = 1; l < greedy.size(); ++l) {
    chosen.clear();
    if (dfs(dfs, BitVector(m), l)) {
      std::vector<PauliOperator> elements;
      for (std::size_t idx : chosen) elements.push_back(space.frames[idx]);
      return *make_cover(s, std::move(elements));
    }
  }
  return greedy;
}

// ---------------------------------------------------------------------------
// Split certificates

/// S = S0 + S1 where S0 pairwise commutes and commutes with S1, V0
/// anti-commutes with S1 and commutes with S0, and W covers S0.
struct SplitCertificate {
  std::vector<std::size_t> s0_indices;
  std::vector<std::size_t> s1_indices;
  PauliOperator v0;
  AntiCommuteCover w;

  /// 2^(|W|+1) - 1.
  std::size_t query_count() const { return (std::size_t{1} << (w.size() + 1)) - 1; }
};

namespace detail {

/// Indices of terms that commute with every term of S. Any valid S0 lies in
/// this set, since S0 must commute with itself and with S1.
inline std::vector<std::size_t> central_terms(const PauliSupport& s) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    bool central = true;
    for (std::size_t j = 0; j < s.size() && central; ++j) central = commutes(s[i], s[j]);
    if (central) out.push_back(i);
  }
  return out;
}

/// Calls fn(subset) for every k-subset of `pool` in lexicographic order of
/// positions in `pool`. Stops early when fn returns false.
template <class Fn>
bool for_each_combination(const std::vector<std::size_t>& pool, std::size_t k, Fn&& fn) {
  if (k > pool.size()) return true;
  std::vector<std::size_t> pos(k);
  for (std::size_t i = 0; i < k; ++i) pos[i] = i;
  std::vector<std::size_t> subset(k);
  while (true) {
    for (std::size_t i = 0; i < k; ++i) subset[i] = pool[pos[i]];
    if (!fn(subset)) return false;
    std::size_t i = k;
    while (i > 0 && pos[i - 1] == pool.size() - k + i - 1) --i;
    if (i == 0) return true;
    ++pos[i - 1];
    for (std::size_t j = i; j < k; ++j) pos[j] = pos[j - 1] + 1;
  }
}

inline std::vector<std::size_t> complement(std::size_t m, const std::vector<std::size_t>& sorted_subset) {
  std::vector<std::size_t> out;
  std::size_t k = 0;
  for (std::size_t i = 0; i < m; ++i) {
    if (k < sorted_subset.size() && sorted_subset[k] == i) {
      ++k;
    } else {
      out.push_back(i);
    }
  }
  return out;
}

/// Pattern for V0: anti on S1, commute on S0.
inline BitVector split_pattern(std::size_t m, const std::vector<std::size_t>& s1) {
  BitVector r(m);
  for (std::size_t i : s1) r.set(i);
  return r;
}

}  // namespace detail

/// Checks all SplitCertificate invariants by direct pairwise commutation.
inline bool validate_split_certificate(const PauliSupport& s, const SplitCertificate& c) {
  std::vector<bool> seen(s.size(), false);
  for (auto idx : {&c.s0_indices, &c.s1_indices}) {
    for (std::size_t i : *idx) {
      if (i >= s.size() || seen[i]) return false;
      seen[i] = true;
    }
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end()) return false;
  if (c.s1_indices.empty()) return false;
  for (std::size_t a : c.s0_indices) {
    for (std::size_t b = 0; b < s.size(); ++b) {
      if (!commutes(s[a], s[b])) return false;
    }
    if (!commutes(s[a], c.v0)) return false;
  }
  for (std::size_t b : c.s1_indices) {
    if (commutes(s[b], c.v0)) return false;
  }
  return validate_cover(s.subset(c.s0_indices), c.w);
}

/// Searches bipartitions (S0, S1) by increasing |S0|, lexicographic within a
/// size, and returns the certificate with the fewest cover elements at the
/// first size that has any. S1 must be nonempty. Throws SearchCapExceeded
/// when |S| > cap.
inline std::optional<SplitCertificate> find_split_certificate(const PauliSupport& s,
                                                              std::size_t cap = kSplitSearchCap) {
  const std::size_t m = s.size();
  if (m > cap) throw SearchCapExceeded("split-certificate search", m, cap);
  if (m == 0) return std::nullopt;
  const BitMatrix rows = build_constraint_rows(s);
  const std::vector<std::size_t> pool = detail::central_terms(s);

  for (std::size_t k = 0; k <= pool.size() && k < m; ++k) {
    std::optional<SplitCertificate> best;
    detail::for_each_combination(pool, k, [&](const std::vector<std::size_t>& s0) {
      const std::vector<std::size_t> s1 = detail::complement(m, s0);
      auto sol = solve_affine(rows, detail::split_pattern(m, s1));
      if (!sol) return true;
      SplitCertificate cert;
      cert.s0_indices = s0;
      cert.s1_indices = s1;
      cert.v0 = pauli_from_assignment(sol->assignment);
      if (!s0.empty()) cert.w = find_anticommute_cover(s.subset(s0));
      if (!best || cert.w.size() < best->w.size()) best = std::move(cert);
      return true;
    });
    if (best) return best;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Sign plans for commuting supports

inline constexpr std::size_t kSignPlanMaxRank = 10;
inline constexpr std::size_t kSignPlanMaxQueries = 7;

/// Target coefficient signs per term: -1 for inversion, +-1 by Y-parity for
/// conjugation (odd-Y keeps its sign) and transposition (odd-Y flips).
enum class Task { Invert, Conjugate, Transpose };

inline std::vector<int> target_signs(const PauliSupport& s, Task task) {
  std::vector<int> t(s.size());
  for (std::size_t j = 0; j < s.size(); ++j) {
    const bool odd = y_parity(s[j]);
    switch (task) {
      case Task::Invert: t[j] = -1; break;
      case Task::Conjugate: t[j] = odd ? 1 : -1; break;
      case Task::Transpose: t[j] = odd ? -1 : 1; break;
    }
  }
  return t;
}

/// Frames c_1..c_Q such that, for every term P_j of a pairwise-commuting S,
/// the number of frames commuting with P_j minus the number anti-commuting
/// equals targets[j]. The sandwich product (c_Q U c_Q)...(c_1 U c_1) then
/// carries every coefficient a_j to targets[j] * a_j.
///
/// Frames are drawn from the 2^rank distinct commutation patterns realizable
/// on S. Searches Q = 1, 3, 5, ... up to max_queries; returns nullopt when no
/// plan exists within that bound. Throws SearchCapExceeded when the pattern
/// space rank exceeds max_rank.
inline std::optional<std::vector<PauliOperator>> find_commuting_sign_plan(
    const PauliSupport& s, const std::vector<int>& targets, std::size_t max_queries = kSignPlanMaxQueries,
    std::size_t max_rank = kSignPlanMaxRank) {
  const std::size_t m = s.size();
  if (targets.size() != m) throw DimensionMismatch("targets length does not match support size");

  const PatternSpace space = realizable_patterns(s, max_rank, "sign-plan pattern space rank");
  const std::size_t count = space.patterns.size();
  std::vector<std::vector<int>> signs(count, std::vector<int>(m));
  for (std::size_t k = 0; k < count; ++k) {
    for (std::size_t j = 0; j < m; ++j) signs[k][j] = space.patterns[k].get(j) ? -1 : 1;
  }
  const std::vector<PauliOperator>& frames = space.frames;

  for (std::size_t q = 1; q <= max_queries; q += 2) {
    std::vector<std::size_t> chosen;
    std::vector<int> partial(m, 0);
    // Depth-first over nondecreasing pattern indices with a reachability
    // bound: each remaining frame moves a sum by exactly one.
    auto dfs = [&](auto&& self, std::size_t start) -> bool {
      const std::size_t left = q - chosen.size();
      for (std::size_t j = 0; j < m; ++j) {
        const int gap = targets[j] - partial[j];
        if (static_cast<std::size_t>(std::abs(gap)) > left || ((gap - static_cast<int>(left)) % 2 != 0)) {
          return false;
        }
      }
      if (left == 0) return true;
      for (std::size_t idx = start; idx < count; ++idx) {
        chosen.push_back(idx);
        for (std::size_t j = 0; j < m; ++j) partial[j] += signs[idx][j];
        if (self(self, idx)) return true;
        for (std::size_t j = 0; j < m; ++j) partial[j] -= signs[idx][j];
        chosen.pop_back();
      }
      return false;
    };
    if (dfs(dfs, 0)) {
      std::vector<PauliOperator> out;
      out.reserve(q);
      for (std::size_t idx : chosen) out.push_back(frames[idx]);
      return out;
    }
  }
  return std::nullopt;
}

}  // namespace paulinv

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
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "paulinv/bit_vector.hpp"

namespace paulinv {

/// Thrown by parse_pauli. kind() tells the three failure modes apart and
/// token() names the offending token.
class PauliParseError : public std::invalid_argument {
 public:
  enum class Kind { Malformed, IndexOutOfRange, DuplicateIndex };

  PauliParseError(Kind kind, std::string token, const std::string& what)
      : std::invalid_argument(what), kind_(kind), token_(std::move(token)) {}

  Kind kind() const { return kind_; }
  const std::string& token() const { return token_; }

 private:
  Kind kind_;
  std::string token_;
};

/// Thrown when two operators over different qubit counts are combined.
class QubitCountMismatch : public std::invalid_argument {
 public:
  QubitCountMismatch(std::size_t a, std::size_t b)
      : std::invalid_argument("qubit count mismatch: " + std::to_string(a) + " vs " + std::to_string(b)) {}
};

/// Binary encoding of a Pauli word, layout [x_0..x_{N-1} | z_0..z_{N-1}].
struct SymplecticVector {
  BitVector bits;

  std::size_t n_qubits() const { return bits.size() / 2; }
  std::string str() const { return bits.str(); }
  friend bool operator==(const SymplecticVector&, const SymplecticVector&) = default;
};

/// An N-qubit Pauli operator i^phase * (sigma_0 (x) ... (x) sigma_{N-1}).
///
/// Per qubit: X -> (x=1,z=0), Y -> (1,1), Z -> (0,1), where Y is the usual
/// Hermitian Pauli Y. Qubit 0 is the leftmost tensor factor.
class PauliOperator {
 public:
  PauliOperator() = default;
  explicit PauliOperator(std::size_t n_qubits) : n_(n_qubits), x_(n_qubits), z_(n_qubits) {}
  PauliOperator(BitVector x, BitVector z, unsigned phase_exp = 0)
      : n_(x.size()), x_(std::move(x)), z_(std::move(z)), phase_(phase_exp & 3U) {
    if (x_.size() != z_.size()) throw std::invalid_argument("PauliOperator: x/z length mismatch");
  }

  static PauliOperator identity(std::size_t n_qubits) { return PauliOperator(n_qubits); }

  /// Single-qubit factor `letter` on `qubit`, identity elsewhere.
  static PauliOperator single(std::size_t n_qubits, std::size_t qubit, char letter) {
    PauliOperator p(n_qubits);
    p.set_letter(qubit, letter);
    return p;
  }

  std::size_t n_qubits() const { return n_; }
  const BitVector& x_bits() const { return x_; }
  const BitVector& z_bits() const { return z_; }
  unsigned phase_exp() const { return phase_; }

  char letter(std::size_t q) const {
    const bool x = x_.get(q);
    const bool z = z_.get(q);
    if (x && z) return 'Y';
    if (x) return 'X';
    if (z) return 'Z';
    return 'I';
  }

  void set_letter(std::size_t q, char letter) {
    switch (letter) {
      case 'I': x_.set(q, false); z_.set(q, false); break;
      case 'X': x_.set(q, true);  z_.set(q, false); break;
      case 'Y': x_.set(q, true);  z_.set(q, true);  break;
      case 'Z': x_.set(q, false); z_.set(q, true);  break;
      default: throw std::invalid_argument(std::string("unknown Pauli letter '") + letter + "'");
    }
  }

  bool is_identity_word() const { return x_.none() && z_.none(); }
  bool is_identity() const { return is_identity_word() && phase_ == 0; }

  std::size_t weight() const { return (x_ | z_).popcount(); }
  std::size_t y_count() const { return (x_ & z_).popcount(); }

  PauliOperator without_phase() const { return PauliOperator(x_, z_, 0); }

  /// Same Pauli word, ignoring the phase.
  bool same_word(const PauliOperator& o) const { return x_ == o.x_ && z_ == o.z_; }

  /// Canonical text: ascending qubit index, `I` for the identity word. A
  /// non-zero phase is rendered as a `i*`, `-` or `-i*` prefix.
  std::string str() const {
    static constexpr const char* kPrefix[4] = {"", "i*", "-", "-i*"};
    std::string out = kPrefix[phase_];
    bool first = true;
    for (std::size_t q = 0; q < n_; ++q) {
      const char c = letter(q);
      if (c == 'I') continue;
      if (!first) out += ' ';
      out += c;
      out += std::to_string(q);
      first = false;
    }
    if (first) out += 'I';
    return out;
  }

  friend bool operator==(const PauliOperator&, const PauliOperator&) = default;

  std::size_t hash() const { return x_.hash() * 31 + z_.hash() + phase_; }

 private:
  std::size_t n_ = 0;
  BitVector x_;
  BitVector z_;
  unsigned phase_ = 0;
};

struct PauliWordHash {
  std::size_t operator()(const PauliOperator& p) const { return p.without_phase().hash(); }
};
struct PauliWordEqual {
  bool operator()(const PauliOperator& a, const PauliOperator& b) const { return a.same_word(b); }
};

/// Parses whitespace-separated `<letter><index>` tokens, e.g. "X0 Z2".
inline PauliOperator parse_pauli(std::string_view text, std::size_t n_qubits) {
  using Kind = PauliParseError::Kind;
  std::istringstream in{std::string(text)};
  std::vector<std::string> tokens;
  for (std::string tok; in >> tok;) tokens.push_back(tok);
  if (tokens.empty()) throw PauliParseError(Kind::Malformed, "", "empty Pauli string");

  PauliOperator p(n_qubits);
  if (tokens.size() == 1 && tokens[0] == "I") return p;

  std::vector<bool> seen(n_qubits, false);
  for (const auto& tok : tokens) {
    const char letter = tok[0];
    const bool digits_ok =
        tok.size() >= 2 && tok.find_first_not_of("0123456789", 1) == std::string::npos && tok.size() <= 20;
    if ((letter != 'X' && letter != 'Y' && letter != 'Z') || !digits_ok) {
      throw PauliParseError(Kind::Malformed, tok, "malformed Pauli token '" + tok + "'");
    }
    const unsigned long long idx = std::stoull(tok.substr(1));
    if (idx >= n_qubits) {
      throw PauliParseError(Kind::IndexOutOfRange, tok,
                            "qubit index out of range in '" + tok + "' (" + std::to_string(n_qubits) + " qubits)");
    }
    if (seen[idx]) throw PauliParseError(Kind::DuplicateIndex, tok, "duplicate qubit index in '" + tok + "'");
    seen[idx] = true;
    p.set_letter(static_cast<std::size_t>(idx), letter);
  }
  return p;
}

/// Largest qubit index mentioned in a token string plus one (0 for "I").
/// Used to infer qubit counts when a file has no `qubits:` header.
inline std::size_t infer_qubit_count(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::size_t n = 0;
  for (std::string tok; in >> tok;) {
    if (tok.size() >= 2 && tok.find_first_not_of("0123456789", 1) == std::string::npos && tok.size() <= 20) {
      n = std::max<std::size_t>(n, std::stoull(tok.substr(1)) + 1);
    }
  }
  return n;
}

inline SymplecticVector to_symplectic(const PauliOperator& p) { return {p.x_bits().concat(p.z_bits())}; }

inline PauliOperator from_symplectic(const SymplecticVector& v) {
  if (v.bits.size() % 2 != 0) throw std::invalid_argument("symplectic vector must have even length");
  const std::size_t n = v.n_qubits();
  return PauliOperator(v.bits.slice(0, n), v.bits.slice(n, n), 0);
}

/// Exact product p*q including the i-power.
inline PauliOperator multiply(const PauliOperator& p, const PauliOperator& q) {
  if (p.n_qubits() != q.n_qubits()) throw QubitCountMismatch(p.n_qubits(), q.n_qubits());
  // Per qubit: XY=iZ, YZ=iX, ZX=iY contribute +1; the reversed orders -1.
  const auto px = p.x_bits().words();
  const auto pz = p.z_bits().words();
  const auto qx = q.x_bits().words();
  const auto qz = q.z_bits().words();
  int delta = 0;
  for (std::size_t k = 0; k < px.size(); ++k) {
    const word_t a_x = px[k] & ~pz[k], a_y = px[k] & pz[k], a_z = ~px[k] & pz[k];
    const word_t b_x = qx[k] & ~qz[k], b_y = qx[k] & qz[k], b_z = ~qx[k] & qz[k];
    const word_t plus = (a_x & b_y) | (a_y & b_z) | (a_z & b_x);
    const word_t minus = (a_x & b_z) | (a_y & b_x) | (a_z & b_y);
    delta += std::popcount(plus) - std::popcount(minus);
  }
  const unsigned phase = static_cast<unsigned>(((static_cast<int>(p.phase_exp() + q.phase_exp()) + delta) % 4 + 4) % 4);
  return PauliOperator(p.x_bits() ^ q.x_bits(), p.z_bits() ^ q.z_bits(), phase);
}

/// Symplectic inner product p_x.q_z + p_z.q_x mod 2; 1 means anti-commuting.
inline bool symplectic_product(const PauliOperator& p, const PauliOperator& q) {
  if (p.n_qubits() != q.n_qubits()) throw QubitCountMismatch(p.n_qubits(), q.n_qubits());
  const auto px = p.x_bits().words();
  const auto pz = p.z_bits().words();
  const auto qx = q.x_bits().words();
  const auto qz = q.z_bits().words();
  word_t acc = 0;
  for (std::size_t k = 0; k < px.size(); ++k) acc ^= (px[k] & qz[k]) ^ (pz[k] & qx[k]);
  return std::popcount(acc) & 1;
}

inline bool commutes(const PauliOperator& p, const PauliOperator& q) { return !symplectic_product(p, q); }

/// Parity of the number of Y factors. Odd-Y words flip sign under transpose.
inline bool y_parity(const PauliOperator& p) { return p.y_count() & 1U; }

}  // namespace paulinv

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

#include <cstddef>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "paulinv/pauli.hpp"

namespace paulinv {

/// Error in a text input file, carrying the 1-based line number (0 when the
/// error is not tied to a line).
class InputFileError : public std::runtime_error {
 public:
  InputFileError(std::size_t line, const std::string& msg)
      : std::runtime_error(line == 0 ? msg : "line " + std::to_string(line) + ": " + msg), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// The Pauli support S of a Hamiltonian: ordered, deduplicated, non-identity
/// words over a common qubit count. Phases are dropped on insertion.
class PauliSupport {
 public:
  PauliSupport() = default;
  explicit PauliSupport(std::size_t n_qubits) : n_(n_qubits) {}

  PauliSupport(std::size_t n_qubits, const std::vector<PauliOperator>& terms) : n_(n_qubits) {
    seen_.reserve(terms.size());
    terms_.reserve(terms.size());
    for (const auto& t : terms) add(t);
  }

  /// Convenience: terms in token grammar, e.g. {"Z0 Z1", "X0", "X1"}.
  static PauliSupport parse(std::size_t n_qubits, const std::vector<std::string>& terms) {
    PauliSupport s(n_qubits);
    for (const auto& t : terms) s.add(parse_pauli(t, n_qubits));
    return s;
  }

  /// Appends `p` unless it is the identity or already present. Returns
  /// whether it was added.
  bool add(const PauliOperator& p) {
    if (p.n_qubits() != n_) throw QubitCountMismatch(p.n_qubits(), n_);
    if (p.is_identity_word()) return false;
    PauliOperator w = p.without_phase();
    if (!seen_.insert(w).second) return false;
    terms_.push_back(std::move(w));
    return true;
  }

  std::size_t n_qubits() const { return n_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }
  const std::vector<PauliOperator>& terms() const { return terms_; }
  const PauliOperator& operator[](std::size_t i) const { return terms_[i]; }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  bool contains(const PauliOperator& p) const { return seen_.count(p.without_phase()) > 0; }

  /// Sub-support of the listed term indices, in the given order.
  PauliSupport subset(const std::vector<std::size_t>& indices) const {
    PauliSupport s(n_);
    for (std::size_t i : indices) s.add(terms_.at(i));
    return s;
  }

  std::string str() const {
    std::string out = "{";
    for (std::size_t i = 0; i < terms_.size(); ++i) {
      if (i) out += ", ";
      out += terms_[i].str();
    }
    return out + "}";
  }

 private:
  std::size_t n_ = 0;
  std::vector<PauliOperator> terms_;
  std::unordered_set<PauliOperator, PauliWordHash, PauliWordEqual> seen_;
};

/// Largest qubit count accepted from a text file.
inline constexpr std::size_t kMaxFileQubits = std::size_t{1} << 16;

namespace detail {

inline std::string strip_comment(const std::string& line) {
  std::string s = line.substr(0, line.find('#'));
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

/// Parses `key: value` header lines; returns nullopt for non-header lines.
inline std::optional<std::pair<std::string, std::string>> header_line(const std::string& s) {
  const auto colon = s.find(':');
  if (colon == std::string::npos) return std::nullopt;
  auto trim = [](std::string x) {
    const auto b = x.find_first_not_of(" \t");
    const auto e = x.find_last_not_of(" \t");
    return b == std::string::npos ? std::string{} : x.substr(b, e - b + 1);
  };
  return std::make_pair(trim(s.substr(0, colon)), trim(s.substr(colon + 1)));
}

inline std::size_t parse_count(const std::string& value, std::size_t line) {
  if (value.empty() || value.find_first_not_of("0123456789") != std::string::npos || value.size() > 6) {
    throw InputFileError(line, "expected a positive integer, got '" + value + "'");
  }
  const std::size_t n = std::stoul(value);
  if (n == 0) throw InputFileError(line, "qubit count must be positive");
  if (n > kMaxFileQubits) throw InputFileError(line, "qubit count exceeds " + std::to_string(kMaxFileQubits));
  return n;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputFileError(0, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::size_t checked_qubit_count(const std::string& tokens, std::size_t line) {
  const std::size_t n = infer_qubit_count(tokens);
  if (n > kMaxFileQubits) throw InputFileError(line, "qubit index exceeds " + std::to_string(kMaxFileQubits - 1));
  return n;
}

}  // namespace detail

/// Support file: one Pauli term per line, `#` comments, blank lines ignored.
/// The qubit count is 1 + the largest index unless a `qubits: <n>` header
/// is present.
inline PauliSupport parse_support_text(const std::string& text) {
  std::vector<std::pair<std::size_t, std::string>> lines;
  std::optional<std::size_t> declared;
  std::size_t inferred = 0;
  std::istringstream in(text);
  std::size_t lineno = 0;
  for (std::string raw; std::getline(in, raw);) {
    ++lineno;
    const std::string s = detail::strip_comment(raw);
    if (s.empty()) continue;
    if (auto h = detail::header_line(s)) {
      if (h->first != "qubits") throw InputFileError(lineno, "unknown header '" + h->first + "'");
      if (declared) throw InputFileError(lineno, "duplicate 'qubits:' header");
      declared = detail::parse_count(h->second, lineno);
      continue;
    }
    inferred = std::max(inferred, detail::checked_qubit_count(s, lineno));
    lines.emplace_back(lineno, s);
  }
  const std::size_t n = declared.value_or(std::max<std::size_t>(inferred, 1));
  PauliSupport support(n);
  for (const auto& [ln, s] : lines) {
    try {
      support.add(parse_pauli(s, n));
    } catch (const PauliParseError& e) {
      throw InputFileError(ln, e.what());
    }
  }
  return support;
}

inline PauliSupport load_support(const std::string& path) { return parse_support_text(detail::read_file(path)); }

/// Canonical text form; parse_support_text round-trips it.
inline std::string render_support(const PauliSupport& s) {
  std::string out = "qubits: " + std::to_string(s.n_qubits()) + "\n";
  for (const auto& t : s) out += t.str() + "\n";
  return out;
}

/// FNV-1a over the canonical rendering, as 16 hex digits.
inline std::string support_hash(const PauliSupport& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : render_support(s)) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace paulinv

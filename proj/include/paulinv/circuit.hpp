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

// Circuit programs: alternating Pauli frame gates and black-box query slots.
//
// Steps are stored in application order (first applied first), which is how
// circuit diagrams read left to right. Operator products read the other way:
// the program [A, Q, B] is the operator B U A.

#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "paulinv/analysis.hpp"
#include "paulinv/pauli.hpp"
#include "paulinv/support.hpp"

namespace paulinv {

inline const char* task_name(Task t) {
  switch (t) {
    case Task::Invert: return "invert";
    case Task::Conjugate: return "conjugate";
    case Task::Transpose: return "transpose";
  }
  return "?";
}

inline std::optional<Task> parse_task(const std::string& s) {
  if (s == "invert") return Task::Invert;
  if (s == "conjugate") return Task::Conjugate;
  if (s == "transpose") return Task::Transpose;
  return std::nullopt;
}

struct FrameGate {
  PauliOperator pauli;
  friend bool operator==(const FrameGate&, const FrameGate&) = default;
};
struct QuerySlot {
  friend bool operator==(const QuerySlot&, const QuerySlot&) = default;
};
using Step = std::variant<FrameGate, QuerySlot>;

inline bool is_query(const Step& s) { return std::holds_alternative<QuerySlot>(s); }

/// A merged circuit program: no two adjacent frame gates and no identity
/// frames. Global phases picked up while merging are dropped.
class CircuitProgram {
 public:
  CircuitProgram() = default;
  CircuitProgram(Task task, std::size_t n_qubits) : task_(task), n_(n_qubits) {}

  /// Builds a program from raw steps, merging adjacent frames.
  static CircuitProgram from_steps(Task task, std::size_t n_qubits, std::span<const Step> steps) {
    CircuitProgram p(task, n_qubits);
    for (const auto& s : steps) {
      if (is_query(s)) {
        p.push_query();
      } else {
        p.push_frame(std::get<FrameGate>(s).pauli);
      }
    }
    return p;
  }

  Task task() const { return task_; }
  std::size_t n_qubits() const { return n_; }
  const std::vector<Step>& steps() const { return steps_; }
  std::size_t query_count() const { return queries_; }
  bool empty() const { return steps_.empty(); }

  void push_query() {
    steps_.emplace_back(QuerySlot{});
    ++queries_;
  }

  void push_frame(const PauliOperator& p) {
    if (p.n_qubits() != n_) throw QubitCountMismatch(p.n_qubits(), n_);
    if (!steps_.empty() && !is_query(steps_.back())) {
      PauliOperator merged = multiply(std::get<FrameGate>(steps_.back()).pauli, p).without_phase();
      steps_.pop_back();
      if (!merged.is_identity_word()) steps_.emplace_back(FrameGate{std::move(merged)});
      return;
    }
    if (!p.is_identity_word()) steps_.emplace_back(FrameGate{p.without_phase()});
  }

  /// Appends another program's steps (frames at the seam are merged).
  void append(const CircuitProgram& o) {
    for (const auto& s : o.steps_) {
      if (is_query(s)) {
        push_query();
      } else {
        push_frame(std::get<FrameGate>(s).pauli);
      }
    }
  }

  friend bool operator==(const CircuitProgram&, const CircuitProgram&) = default;

 private:
  Task task_ = Task::Invert;
  std::size_t n_ = 0;
  std::vector<Step> steps_;
  std::size_t queries_ = 0;
};

/// Frames seen by each query: entry k is the product of all frame gates
/// applied before query k. `total` is the product of every frame.
struct QueryFrames {
  std::vector<PauliOperator> before_query;
  PauliOperator total;
};

inline QueryFrames query_frames(const CircuitProgram& prog) {
  QueryFrames out{{}, PauliOperator::identity(prog.n_qubits())};
  for (const auto& s : prog.steps()) {
    if (is_query(s)) {
      out.before_query.push_back(out.total);
    } else {
      out.total = multiply(std::get<FrameGate>(s).pauli, out.total).without_phase();
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Synthesis

/// [V, Q, V]; V = I collapses to [Q].
inline CircuitProgram synth_single_query(Task task, const PauliOperator& v) {
  CircuitProgram p(task, v.n_qubits());
  p.push_frame(v);
  p.push_query();
  p.push_frame(v);
  return p;
}

/// Sandwich product with the given frames in application order:
/// [c_1, Q, c_1, c_2, Q, c_2, ...], merged.
inline CircuitProgram synth_sandwiches(Task task, std::size_t n_qubits, const std::vector<PauliOperator>& frames) {
  CircuitProgram p(task, n_qubits);
  for (const auto& c : frames) {
    p.push_frame(c);
    p.push_query();
    p.push_frame(c);
  }
  return p;
}

namespace detail {

/// Nested inverse recursion over elements e_0..e_{L-1}:
///   f_1 = [e_0, Q],  f_l = f_{l-1} ++ [e_{l-1}, Q] ++ f_{l-1},
/// full program f_L ++ [e_{L-1}]; 2^L - 1 queries.
inline CircuitProgram nested_inverse(std::size_t n_qubits, const std::vector<PauliOperator>& elements) {
  if (elements.empty()) throw std::invalid_argument("inverse recursion needs at least one element");
  CircuitProgram f(Task::Invert, n_qubits);
  f.push_frame(elements[0]);
  f.push_query();
  for (std::size_t l = 1; l < elements.size(); ++l) {
    CircuitProgram next = f;
    next.push_frame(elements[l]);
    next.push_query();
    next.append(f);
    f = std::move(next);
  }
  f.push_frame(elements.back());
  return f;
}

}  // namespace detail

/// Inverse for a pairwise-commuting support from its anti-commute set.
inline CircuitProgram synth_commuting_inverse(std::size_t n_qubits, const AntiCommuteCover& w) {
  if (w.elements.empty()) throw std::invalid_argument("synth_commuting_inverse: empty cover");
  return detail::nested_inverse(n_qubits, w.elements);
}

/// Inverse from a split certificate: the recursion runs over V0 followed by
/// the cover of S0, for 2^(|W|+1) - 1 queries.
inline CircuitProgram synth_split_inverse(const PauliSupport& s, const SplitCertificate& cert) {
  if (!validate_split_certificate(s, cert)) throw std::invalid_argument("synth_split_inverse: invalid certificate");
  std::vector<PauliOperator> elements{cert.v0};
  elements.insert(elements.end(), cert.w.elements.begin(), cert.w.elements.end());
  return detail::nested_inverse(s.n_qubits(), elements);
}

// ---------------------------------------------------------------------------
// Exact combinatorial check for commuting supports

class NonCommutingSupport : public std::invalid_argument {
 public:
  NonCommutingSupport() : std::invalid_argument("support is not pairwise commuting; sign replay is not sound") {}
};

/// For a pairwise-commuting S, the program's channel multiplies coefficient
/// a_j by sum_k s_jk, where s_jk = +1 if P_j commutes with the frame seen by
/// query k and -1 otherwise; the trailing total frame must be trivial.
/// Returns true iff those sums equal target_signs.
inline bool verify_commuting_plan(const PauliSupport& s, const CircuitProgram& prog,
                                  const std::vector<int>& target_signs) {
  if (!check_pairwise_commuting(s)) throw NonCommutingSupport();
  if (target_signs.size() != s.size()) throw DimensionMismatch("target_signs length does not match support");
  if (prog.n_qubits() != s.n_qubits()) throw QubitCountMismatch(prog.n_qubits(), s.n_qubits());
  const QueryFrames qf = query_frames(prog);
  if (!qf.total.is_identity_word()) return false;
  for (std::size_t j = 0; j < s.size(); ++j) {
    int sum = 0;
    for (const auto& f : qf.before_query) sum += commutes(s[j], f) ? 1 : -1;
    if (sum != target_signs[j]) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Text format

/// Body lines only: `GATE <tokens>` / `QUERY`.
inline std::string render_steps(const CircuitProgram& prog) {
  std::string out;
  for (const auto& s : prog.steps()) {
    out += is_query(s) ? std::string("QUERY") : "GATE " + std::get<FrameGate>(s).pauli.str();
    out += '\n';
  }
  return out;
}

/// Full circuit file: `task:` and `qubits:` headers followed by the body.
inline std::string render_program(const CircuitProgram& prog) {
  return std::string("task: ") + task_name(prog.task()) + "\nqubits: " + std::to_string(prog.n_qubits()) + "\n" +
         render_steps(prog);
}

/// Parses a circuit file. Headers are optional: the task defaults to invert
/// and the qubit count to 1 + the largest index used.
inline CircuitProgram parse_program(const std::string& text) {
  struct Line {
    std::size_t no;
    bool query;
    std::string tokens;
  };
  std::vector<Line> body;
  std::optional<Task> task;
  std::optional<std::size_t> declared;
  std::size_t inferred = 0;

  std::istringstream in(text);
  std::size_t lineno = 0;
  for (std::string raw; std::getline(in, raw);) {
    ++lineno;
    const std::string s = detail::strip_comment(raw);
    if (s.empty()) continue;
    if (auto h = detail::header_line(s)) {
      if (h->first == "task") {
        if (task) throw InputFileError(lineno, "duplicate 'task:' header");
        task = parse_task(h->second);
        if (!task) throw InputFileError(lineno, "unknown task '" + h->second + "'");
      } else if (h->first == "qubits") {
        if (declared) throw InputFileError(lineno, "duplicate 'qubits:' header");
        declared = detail::parse_count(h->second, lineno);
      } else {
        throw InputFileError(lineno, "unknown header '" + h->first + "'");
      }
      continue;
    }
    std::istringstream ls(s);
    std::string directive;
    ls >> directive;
    std::string rest;
    std::getline(ls, rest);
    if (directive == "QUERY") {
      if (rest.find_first_not_of(" \t") != std::string::npos) {
        throw InputFileError(lineno, "QUERY takes no arguments");
      }
      body.push_back({lineno, true, {}});
    } else if (directive == "GATE") {
      if (rest.find_first_not_of(" \t") == std::string::npos) throw InputFileError(lineno, "GATE needs a Pauli word");
      inferred = std::max(inferred, detail::checked_qubit_count(rest, lineno));
      body.push_back({lineno, false, rest});
    } else {
      throw InputFileError(lineno, "unknown directive '" + directive + "'");
    }
  }

  const std::size_t n = declared.value_or(std::max<std::size_t>(inferred, 1));
  CircuitProgram prog(task.value_or(Task::Invert), n);
  for (const auto& l : body) {
    if (l.query) {
      prog.push_query();
      continue;
    }
    try {
      prog.push_frame(parse_pauli(l.tokens, n));
    } catch (const PauliParseError& e) {
      throw InputFileError(l.no, e.what());
    }
  }
  return prog;
}

inline CircuitProgram load_program(const std::string& path) { return parse_program(detail::read_file(path)); }

/// Operator-product text, right to left, e.g. "V1 U V0 U V1 U V0" with the
/// Pauli words written out.
inline std::string operator_string(const CircuitProgram& prog) {
  std::vector<std::string> parts;
  for (const auto& s : prog.steps()) {
    parts.push_back(is_query(s) ? std::string("U") : "(" + std::get<FrameGate>(s).pauli.str() + ")");
  }
  std::string out;
  for (std::size_t k = parts.size(); k-- > 0;) {
    out += parts[k];
    if (k) out += ' ';
  }
  return out.empty() ? "I" : out;
}

}  // namespace paulinv

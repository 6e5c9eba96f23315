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

// Decision chain per task: single query first, then the multi-query
// constructions that apply to the support.

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "paulinv/analysis.hpp"
#include "paulinv/circuit.hpp"
#include "paulinv/conjugation.hpp"
#include "paulinv/sim.hpp"
#include "paulinv/support.hpp"

namespace paulinv {

enum class PlanStatus {
  Found,        // a program was synthesized
  NotFound,     // every searched construction came up empty
  CapExceeded,  // a search was skipped because the support is too large
  Unsupported,  // no multi-query construction is offered for this task
};

inline const char* status_name(PlanStatus s) {
  switch (s) {
    case PlanStatus::Found: return "found";
    case PlanStatus::NotFound: return "not_found";
    case PlanStatus::CapExceeded: return "cap_exceeded";
    case PlanStatus::Unsupported: return "unsupported";
  }
  return "?";
}

struct PlanOptions {
  std::size_t split_cap = kSplitSearchCap;
  std::size_t oracle_cap = kOracleCap;
  std::size_t max_qubits = kDefaultMaxQubits;
};

struct SynthesisPlan {
  Task task = Task::Invert;
  /// false means a single query is impossible: the affine system is
  /// inconsistent, which is exact.
  bool single_query = false;
  std::optional<PauliOperator> single_query_v;
  /// Subset whose product is the identity and which rules out a single query.
  std::optional<std::vector<std::size_t>> witness;
  PlanStatus status = PlanStatus::NotFound;
  std::string route;
  std::optional<AntiCommuteCover> cover;
  std::optional<SplitCertificate> split;
  std::optional<ConjugationCertificate> conjugation;
  std::optional<CircuitProgram> program;
  std::vector<std::string> notes;
};

namespace detail {

inline std::optional<PauliOperator> single_query_for(const PauliSupport& s, Task task) {
  switch (task) {
    case Task::Invert: return find_single_query_inverter(s);
    case Task::Conjugate: return find_single_query_conjugator(s);
    case Task::Transpose: return find_single_query_transposer(s);
  }
  return std::nullopt;
}

inline std::optional<std::vector<std::size_t>> witness_for(const PauliSupport& s, Task task, std::size_t cap) {
  switch (task) {
    case Task::Invert: return odd_identity_subset_witness(s, cap);
    case Task::Conjugate: return even_y_identity_subset_witness(s, cap);
    case Task::Transpose: return odd_y_identity_subset_witness(s, cap);
  }
  return std::nullopt;
}

inline void plan_invert(const PauliSupport& s, const PlanOptions& opt, SynthesisPlan& plan) {
  if (check_pairwise_commuting(s)) {
    AntiCommuteCover w = find_anticommute_cover(s);
    plan.program = synth_commuting_inverse(s.n_qubits(), w);
    plan.cover = std::move(w);
    plan.route = "commuting-cover";
    plan.status = PlanStatus::Found;
    return;
  }
  try {
    if (auto cert = find_split_certificate(s, opt.split_cap)) {
      plan.program = synth_split_inverse(s, *cert);
      plan.split = std::move(cert);
      plan.route = "split";
      plan.status = PlanStatus::Found;
      return;
    }
    plan.status = PlanStatus::NotFound;
    plan.notes.push_back("no split certificate exists; other multi-query constructions are not searched");
  } catch (const SearchCapExceeded& e) {
    plan.status = PlanStatus::CapExceeded;
    plan.notes.push_back(e.what());
  }
}

inline void plan_conjugate(const PauliSupport& s, const PlanOptions& opt, SynthesisPlan& plan) {
  ConjugationOptions copt;
  copt.cap = opt.split_cap;
  copt.max_qubits = opt.max_qubits;
  try {
    if (auto r = synth_conjugate(s, copt)) {
      plan.route = route_name(r->route);
      plan.program = std::move(r->program);
      plan.conjugation = std::move(r->certificate);
      plan.status = PlanStatus::Found;
      return;
    }
    plan.status = PlanStatus::NotFound;
    plan.notes.push_back("no conjugation split with a sign-plan subcircuit was found");
  } catch (const SearchCapExceeded& e) {
    plan.status = PlanStatus::CapExceeded;
    plan.notes.push_back(e.what());
  }
}

/// Every synthesized program must also pass dense simulation when N is within
/// the simulator cap; a failure withdraws the program.
inline void validate_numerically(const PauliSupport& s, const PlanOptions& opt, SynthesisPlan& plan) {
  if (!plan.program || s.n_qubits() > opt.max_qubits) return;
  const VerificationReport r = certify_program(s, *plan.program, plan.task, kDefaultSamples, 0, kDefaultTolerance,
                                               opt.max_qubits);
  if (r.pass) return;
  plan.program.reset();
  plan.status = PlanStatus::NotFound;
  plan.notes.push_back("synthesized program failed numeric validation (min fidelity " +
                       std::to_string(r.min_fidelity) + ")");
}

}  // namespace detail

inline SynthesisPlan plan_task(const PauliSupport& s, Task task, const PlanOptions& opt = {}) {
  SynthesisPlan plan;
  plan.task = task;
  if (s.empty()) {
    // Nothing to undo: the bare query already equals its own target.
    plan.single_query = true;
    plan.single_query_v = PauliOperator::identity(s.n_qubits());
  } else {
    plan.single_query_v = detail::single_query_for(s, task);
    plan.single_query = plan.single_query_v.has_value();
  }

  if (plan.single_query) {
    plan.program = synth_single_query(task, *plan.single_query_v);
    plan.route = "single-query";
    plan.status = PlanStatus::Found;
    detail::validate_numerically(s, opt, plan);
    return plan;
  }

  if (s.size() <= opt.oracle_cap) {
    plan.witness = detail::witness_for(s, task, opt.oracle_cap);
  } else {
    plan.notes.push_back("witness search skipped: " + std::to_string(s.size()) + " terms exceed oracle cap " +
                         std::to_string(opt.oracle_cap));
  }

  switch (task) {
    case Task::Invert: detail::plan_invert(s, opt, plan); break;
    case Task::Conjugate: detail::plan_conjugate(s, opt, plan); break;
    case Task::Transpose:
      plan.status = PlanStatus::Unsupported;
      plan.notes.push_back("multi-query transposition is not offered");
      break;
  }
  detail::validate_numerically(s, opt, plan);
  return plan;
}

}  // namespace paulinv

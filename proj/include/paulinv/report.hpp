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

// JSON and text renderings of analysis, verification and robustness results.
// Numbers are printed in shortest round-trip form in both, so the two outputs
// agree digit for digit.

#pragma once

#include <charconv>
#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

#include "paulinv/planner.hpp"
#include "paulinv/sim.hpp"

namespace paulinv {

using json = nlohmann::json;

inline std::string fmt_double(double v) {
  char buf[32];
  auto r = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, r.ptr);
}

inline json support_json(const PauliSupport& s) {
  json terms = json::array();
  for (const auto& t : s) terms.push_back(t.str());
  return {{"qubits", s.n_qubits()}, {"terms", terms}, {"hash", support_hash(s)}};
}

inline json program_json(const CircuitProgram& p) {
  json steps = json::array();
  for (const auto& s : p.steps()) {
    steps.push_back(is_query(s) ? std::string("QUERY") : "GATE " + std::get<FrameGate>(s).pauli.str());
  }
  return {{"task", task_name(p.task())},
          {"qubits", p.n_qubits()},
          {"queries", p.query_count()},
          {"operator", operator_string(p)},
          {"steps", steps}};
}

inline json indices_json(const PauliSupport& s, const std::vector<std::size_t>& idx) {
  json out = json::array();
  for (std::size_t i : idx) out.push_back(s[i].str());
  return out;
}

inline json plan_json(const PauliSupport& s, const SynthesisPlan& p) {
  json j;
  j["support"] = support_json(s);
  j["task"] = task_name(p.task);
  json sq;
  sq["status"] = p.single_query ? "yes" : "impossible";
  sq["v"] = p.single_query_v ? json(p.single_query_v->str()) : json(nullptr);
  sq["witness"] = p.witness ? indices_json(s, *p.witness) : json(nullptr);
  j["single_query"] = sq;
  j["status"] = status_name(p.status);
  j["route"] = p.route.empty() ? json(nullptr) : json(p.route);
  j["query_count"] = p.program ? json(p.program->query_count()) : json(nullptr);

  json cert = nullptr;
  if (p.cover) {
    json w = json::array();
    for (const auto& e : p.cover->elements) w.push_back(e.str());
    cert = {{"kind", "cover"}, {"w", w}};
  } else if (p.split) {
    json w = json::array();
    for (const auto& e : p.split->w.elements) w.push_back(e.str());
    cert = {{"kind", "split"},
            {"s0", indices_json(s, p.split->s0_indices)},
            {"s1", indices_json(s, p.split->s1_indices)},
            {"v0", p.split->v0.str()},
            {"w", w}};
  } else if (p.conjugation) {
    cert = {{"kind", "conjugation-split"},
            {"s0", indices_json(s, p.conjugation->s0_indices)},
            {"s1", indices_json(s, p.conjugation->s1_indices)},
            {"v0", p.conjugation->v0.str()},
            {"v0_prime", p.conjugation->v0_prime.str()},
            {"s0_subcircuit", operator_string(p.conjugation->s0_subcircuit)}};
  } else if (p.single_query_v) {
    cert = {{"kind", "single-query"}, {"v", p.single_query_v->str()}};
  }
  j["certificate"] = cert;
  j["program"] = p.program ? program_json(*p.program) : json(nullptr);
  j["notes"] = p.notes;
  return j;
}

inline std::string plan_text(const PauliSupport& s, const SynthesisPlan& p) {
  std::string out;
  out += "support: " + std::to_string(s.size()) + " terms on " + std::to_string(s.n_qubits()) + " qubits (" +
         support_hash(s) + ")\n";
  out += "task: " + std::string(task_name(p.task)) + "\n";
  out += "single-query: " + std::string(p.single_query ? "YES" : "NO");
  if (p.single_query_v) out += ", V = " + p.single_query_v->str();
  out += "\n";
  if (p.witness) {
    out += "witness: {";
    for (std::size_t k = 0; k < p.witness->size(); ++k) out += (k ? ", " : "") + s[(*p.witness)[k]].str();
    out += "}\n";
  }
  out += "status: " + std::string(status_name(p.status));
  if (!p.route.empty()) out += " (" + p.route + ")";
  out += "\n";
  if (p.cover) {
    out += "cover W:";
    for (const auto& e : p.cover->elements) out += " [" + e.str() + "]";
    out += "\n";
  }
  if (p.split) {
    out += "split: S0 = {";
    for (std::size_t k = 0; k < p.split->s0_indices.size(); ++k) {
      out += (k ? ", " : "") + s[p.split->s0_indices[k]].str();
    }
    out += "}, V0 = " + p.split->v0.str() + ", W =";
    for (const auto& e : p.split->w.elements) out += " [" + e.str() + "]";
    out += "\n";
  }
  if (p.conjugation) {
    out += "split: S0 = {";
    for (std::size_t k = 0; k < p.conjugation->s0_indices.size(); ++k) {
      out += (k ? ", " : "") + s[p.conjugation->s0_indices[k]].str();
    }
    out += "}, V0 = " + p.conjugation->v0.str() + ", V0' = " + p.conjugation->v0_prime.str() +
           ", S0 subcircuit = " + operator_string(p.conjugation->s0_subcircuit) + "\n";
  }
  if (p.program) {
    out += "queries: " + std::to_string(p.program->query_count()) + "\n";
    out += "operator: " + operator_string(*p.program) + "\n";
  }
  for (const auto& n : p.notes) out += "note: " + n + "\n";
  return out;
}

inline json verification_json(const VerificationReport& r) {
  return {{"task", task_name(r.task)},     {"samples", r.samples},
          {"seed", r.seed},                {"tolerance", r.tolerance},
          {"min_fidelity", r.min_fidelity}, {"mean_fidelity", r.mean_fidelity},
          {"max_infidelity", r.max_infidelity}, {"verdict", r.pass ? "pass" : "fail"}};
}

inline std::string verification_text(const VerificationReport& r) {
  return "task: " + std::string(task_name(r.task)) + "\nsamples: " + std::to_string(r.samples) +
         "\nseed: " + std::to_string(r.seed) + "\ntolerance: " + fmt_double(r.tolerance) +
         "\nmin_fidelity: " + fmt_double(r.min_fidelity) + "\nmean_fidelity: " + fmt_double(r.mean_fidelity) +
         "\nmax_infidelity: " + fmt_double(r.max_infidelity) + "\nverdict: " + (r.pass ? "pass" : "fail") + "\n";
}

inline json robustness_json(const std::vector<RobustnessPoint>& pts, std::size_t samples, std::uint64_t seed) {
  json rows = json::array();
  for (const auto& p : pts) {
    rows.push_back({{"delta", p.delta},
                    {"mean_fidelity", p.mean_fidelity},
                    {"min_fidelity", p.min_fidelity},
                    {"mean_infidelity", 1.0 - p.mean_fidelity}});
  }
  return {{"samples", samples}, {"seed", seed}, {"points", rows}};
}

inline std::string robustness_csv(const std::vector<RobustnessPoint>& pts) {
  std::string out = "delta,mean_fidelity,min_fidelity,mean_infidelity\n";
  for (const auto& p : pts) {
    out += fmt_double(p.delta) + "," + fmt_double(p.mean_fidelity) + "," + fmt_double(p.min_fidelity) + "," +
           fmt_double(1.0 - p.mean_fidelity) + "\n";
  }
  return out;
}

}  // namespace paulinv

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

// paulinv: analyze Pauli supports, synthesize inversion / conjugation /
// transposition programs, certify them and sweep their robustness.
//
// Exit codes: 0 success, 1 input or usage error, 2 no protocol found or
// verification failed. Every option can also be set through an environment
// variable PAULINV_<NAME>, e.g. PAULINV_SAMPLES=100.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "paulinv/report.hpp"

namespace {

using namespace paulinv;

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitNoProtocol = 2;

struct Common {
  std::string task = "invert";
  bool json = false;
  std::string out;
  std::size_t samples = kDefaultSamples;
  std::uint64_t seed = 0;
  double tol = kDefaultTolerance;
  std::vector<double> deltas;
  std::size_t max_qubits = kDefaultMaxQubits;
  std::size_t cap = kSplitSearchCap;
  std::size_t threads = 1;
  std::string which = "invert";
  std::string support_file;
  std::string circuit_file;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Task task_or_throw(const std::string& s) {
  auto t = parse_task(s);
  if (!t) throw UsageError("unknown task '" + s + "' (expected invert, conjugate or transpose)");
  return *t;
}

void emit(const Common& c, const std::string& text) {
  if (c.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(c.out);
  if (!f) throw InputFileError(0, "cannot write '" + c.out + "'");
  f << text;
}

void check_max_qubits(const Common& c) {
  if (c.max_qubits > kHardMaxQubits) {
    throw UsageError("--max-qubits " + std::to_string(c.max_qubits) + " exceeds the hard limit of " +
                     std::to_string(kHardMaxQubits));
  }
  if (c.max_qubits > kDefaultMaxQubits) {
    std::cerr << "warning: dense simulation above " << kDefaultMaxQubits << " qubits is slow and memory hungry\n";
  }
}

PlanOptions plan_options(const Common& c) {
  PlanOptions o;
  o.split_cap = c.cap;
  o.max_qubits = c.max_qubits;
  return o;
}

int cmd_analyze(const Common& c) {
  const PauliSupport s = load_support(c.support_file);
  const SynthesisPlan plan = plan_task(s, task_or_throw(c.task), plan_options(c));
  emit(c, c.json ? plan_json(s, plan).dump(2) + "\n" : plan_text(s, plan));
  return plan.status == PlanStatus::Found ? kExitOk : kExitNoProtocol;
}

int cmd_synth(const Common& c) {
  const PauliSupport s = load_support(c.support_file);
  const SynthesisPlan plan = plan_task(s, task_or_throw(c.task), plan_options(c));
  if (!plan.program) {
    std::cerr << "no program: status " << status_name(plan.status) << "\n";
    for (const auto& n : plan.notes) std::cerr << "note: " << n << "\n";
    return kExitNoProtocol;
  }
  const std::string body = "# support " + support_hash(s) + ", route " + plan.route + "\n" + render_program(*plan.program);
  emit(c, body);
  if (c.json) {
    std::cerr << json{{"queries", plan.program->query_count()}, {"route", plan.route}}.dump() << "\n";
  } else {
    std::cerr << "queries: " << plan.program->query_count() << "\n";
  }
  return kExitOk;
}

int cmd_verify(const Common& c, bool task_given) {
  const PauliSupport s = load_support(c.support_file);
  const CircuitProgram prog = load_program(c.circuit_file);
  if (prog.n_qubits() != s.n_qubits()) throw QubitCountMismatch(prog.n_qubits(), s.n_qubits());
  const Task task = task_given ? task_or_throw(c.task) : prog.task();
  const VerificationReport r = certify_program(s, prog, task, c.samples, c.seed, c.tol, c.max_qubits, c.threads);
  emit(c, c.json ? verification_json(r).dump(2) + "\n" : verification_text(r));
  return r.pass ? kExitOk : kExitNoProtocol;
}

int cmd_robustness(const Common& c) {
  if (c.deltas.empty()) throw UsageError("--deltas needs at least one value");
  for (double d : c.deltas) {
    if (!(d >= 0)) throw UsageError("deltas must be non-negative");
  }
  const PauliSupport s = load_support(c.support_file);
  const CircuitProgram prog = load_program(c.circuit_file);
  if (prog.n_qubits() != s.n_qubits()) throw QubitCountMismatch(prog.n_qubits(), s.n_qubits());
  if (prog.task() != Task::Invert) throw UsageError("robustness sweeps apply to inversion programs only");
  const auto pts = robustness_sweep(s, prog, c.deltas, c.samples, c.seed, c.max_qubits);
  emit(c, c.json ? robustness_json(pts, c.samples, c.seed).dump(2) + "\n" : robustness_csv(pts));
  return kExitOk;
}

int cmd_oracle(const Common& c) {
  const PauliSupport s = load_support(c.support_file);
  const Task which = task_or_throw(c.which);
  if (s.size() > kOracleCap) throw SearchCapExceeded("identity-subset oracle", s.size(), kOracleCap);
  std::optional<std::vector<std::size_t>> w;
  std::string question;
  switch (which) {
    case Task::Invert:
      w = odd_identity_subset_witness(s);
      question = "odd-size subset multiplying to the identity";
      break;
    case Task::Conjugate:
      w = even_y_identity_subset_witness(s);
      question = "identity subset with an odd number of even-Y terms";
      break;
    case Task::Transpose:
      w = odd_y_identity_subset_witness(s);
      question = "identity subset with an odd number of odd-Y terms";
      break;
  }
  if (c.json) {
    json j{{"support", support_json(s)}, {"which", task_name(which)}, {"question", question},
           {"exists", w.has_value()}, {"witness", w ? indices_json(s, *w) : json(nullptr)}};
    emit(c, j.dump(2) + "\n");
  } else {
    std::string t = "question: " + question + "\nexists: " + (w ? "yes" : "no") + "\n";
    if (w) {
      t += "witness: {";
      for (std::size_t k = 0; k < w->size(); ++k) t += (k ? ", " : "") + s[(*w)[k]].str();
      t += "}\n";
    }
    emit(c, t);
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Query-efficient inversion, conjugation and transposition of Pauli-supported unitaries"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "paulinv 0.1.0");
  Common c;

  auto add_task = [&](CLI::App* sub) {
    return sub->add_option("--task", c.task, "invert | conjugate | transpose")->envname("PAULINV_TASK");
  };
  auto add_json = [&](CLI::App* sub) { sub->add_flag("--json", c.json, "JSON output")->envname("PAULINV_JSON"); };
  auto add_out = [&](CLI::App* sub) { sub->add_option("--out", c.out, "output path")->envname("PAULINV_OUT"); };
  auto add_sampling = [&](CLI::App* sub) {
    sub->add_option("--samples", c.samples, "random coefficient draws")->envname("PAULINV_SAMPLES");
    sub->add_option("--seed", c.seed, "base seed")->envname("PAULINV_SEED");
  };
  auto add_max_qubits = [&](CLI::App* sub) {
    sub->add_option("--max-qubits", c.max_qubits, "dense simulation cap")->envname("PAULINV_MAX_QUBITS");
  };
  auto add_cap = [&](CLI::App* sub) {
    sub->add_option("--cap", c.cap, "subset-search cap on the number of terms")->envname("PAULINV_CAP");
  };

  auto* analyze = app.add_subcommand("analyze", "decide which protocols apply to a support");
  analyze->add_option("support", c.support_file, "support file")->required()->check(CLI::ExistingFile);
  add_task(analyze);
  add_json(analyze);
  add_out(analyze);
  add_cap(analyze);
  add_max_qubits(analyze);

  auto* synth = app.add_subcommand("synth", "write a circuit program for a support");
  synth->add_option("support", c.support_file, "support file")->required()->check(CLI::ExistingFile);
  add_task(synth);
  add_json(synth);
  add_out(synth);
  add_cap(synth);
  add_max_qubits(synth);

  auto* verify = app.add_subcommand("verify", "certify a circuit program by dense simulation");
  verify->add_option("support", c.support_file, "support file")->required()->check(CLI::ExistingFile);
  verify->add_option("circuit", c.circuit_file, "circuit file")->required()->check(CLI::ExistingFile);
  auto* verify_task = add_task(verify);
  add_json(verify);
  add_out(verify);
  add_sampling(verify);
  verify->add_option("--tol", c.tol, "fidelity tolerance")->envname("PAULINV_TOL");
  verify->add_option("--threads", c.threads, "worker threads")->envname("PAULINV_THREADS");
  add_max_qubits(verify);

  auto* robust = app.add_subcommand("robustness", "fidelity under terms outside the support");
  robust->add_option("support", c.support_file, "support file")->required()->check(CLI::ExistingFile);
  robust->add_option("circuit", c.circuit_file, "inversion circuit file")->required()->check(CLI::ExistingFile);
  robust->add_option("--deltas", c.deltas, "relative noise strengths, comma separated")
      ->delimiter(',')
      ->required()
      ->envname("PAULINV_DELTAS");
  add_json(robust);
  add_out(robust);
  add_sampling(robust);
  add_max_qubits(robust);

  auto* oracle = app.add_subcommand("oracle", "brute-force identity-subset search");
  oracle->add_option("support", c.support_file, "support file")->required()->check(CLI::ExistingFile);
  oracle->add_option("--which", c.which, "invert | conjugate | transpose")->envname("PAULINV_WHICH");
  add_json(oracle);
  add_out(oracle);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    check_max_qubits(c);
    if (analyze->parsed()) return cmd_analyze(c);
    if (synth->parsed()) return cmd_synth(c);
    if (verify->parsed()) return cmd_verify(c, verify_task->count() > 0 || std::getenv("PAULINV_TASK"));
    if (robust->parsed()) return cmd_robustness(c);
    if (oracle->parsed()) return cmd_oracle(c);
  } catch (const SearchCapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return kExitNoProtocol;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}

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

#include "paulinv/conjugation.hpp"

#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"

namespace paulinv {
namespace {

PauliSupport load(const std::string& name) { return load_support(std::string(PAULINV_DATA_DIR "/") + name); }

std::vector<std::string> terms(const PauliSupport& s, const std::vector<std::size_t>& idx) {
  std::vector<std::string> out;
  for (std::size_t i : idx) out.push_back(s[i].str());
  return out;
}

TEST(ConjugationSplit, SuppliedSubcircuitReproducesKnownProgram) {
  const PauliSupport s = load("y_seven.txt");
  ConjugationOptions opt;
  opt.s0_subcircuit = load_program(PAULINV_DATA_DIR "/y_seven_s0_subcircuit.circ");
  const auto cert = find_conjugation_certificate(s, opt);
  ASSERT_TRUE(cert);
  EXPECT_EQ(terms(s, cert->s0_indices), (std::vector<std::string>{"Y0", "Y1", "Y0 Y1"}));
  EXPECT_EQ(cert->query_count(), 7u);
  const CircuitProgram p = synth_conjugation_split(3, *cert);
  EXPECT_EQ(operator_string(p), "(X0 X1) U (X0 X1) U (X2) U (X0 X2) U (X2) U (X0 X1 X2) U (X2) U (X1 X2)");
  EXPECT_EQ(p, load_program(PAULINV_DATA_DIR "/y_seven_conjugate.circ"));
  EXPECT_TRUE(certify_program(s, p, Task::Conjugate, 32).pass);
}

TEST(ConjugationSplit, CertificatePatterns) {
  const PauliSupport s = load("y_seven.txt");
  ConjugationOptions opt;
  opt.s0_subcircuit = load_program(PAULINV_DATA_DIR "/y_seven_s0_subcircuit.circ");
  const auto cert = find_conjugation_certificate(s, opt);
  ASSERT_TRUE(cert);
  std::vector<bool> in_s0(s.size(), false);
  for (std::size_t i : cert->s0_indices) in_s0[i] = true;
  for (std::size_t j = 0; j < s.size(); ++j) {
    EXPECT_EQ(oracle::letters_commute(s[j], cert->v0), in_s0[j]) << s[j].str();
    const bool odd_y = oracle::y_letters(s[j]) % 2 == 1;
    EXPECT_EQ(!oracle::letters_commute(s[j], cert->v0_prime), odd_y == in_s0[j]) << s[j].str();
  }
}

TEST(ConjugationSplit, RejectsWrongSubcircuit) {
  const PauliSupport s = load("y_seven.txt");
  ConjugationOptions opt;
  opt.s0_subcircuit = synth_single_query(Task::Conjugate, parse_pauli("X0", 3));
  EXPECT_FALSE(find_conjugation_certificate(s, opt));
}

TEST(SynthConjugate, RoutesInOrder) {
  const auto xyz = synth_conjugate(PauliSupport::parse(1, {"X0", "Y0", "Z0"}));
  ASSERT_TRUE(xyz);
  EXPECT_EQ(xyz->route, ConjugationRoute::SingleQuery);

  const auto yy = synth_conjugate(load("asym_transpose.txt"));
  ASSERT_TRUE(yy);
  EXPECT_EQ(yy->route, ConjugationRoute::SignPlan);
  EXPECT_EQ(yy->program.query_count(), 3u);

  const auto y7 = synth_conjugate(load("y_seven.txt"));
  ASSERT_TRUE(y7);
  EXPECT_EQ(y7->route, ConjugationRoute::SignPlan);
  EXPECT_EQ(y7->program.query_count(), 7u);

  EXPECT_FALSE(synth_conjugate(load("asym_invert.txt")));
  EXPECT_THROW(synth_conjugate(load("one_slot_3q.txt")), SearchCapExceeded);
}

TEST(SynthConjugate, ResultsCertify) {
  for (const char* f : {"asym_transpose.txt", "y_seven.txt", "ising_chain_3.txt", "cluster_ising.txt",
                        "diagonal_2q.txt", "y_model.txt"}) {
    const PauliSupport s = load(f);
    const auto r = synth_conjugate(s);
    if (!r) continue;
    EXPECT_TRUE(certify_program(s, r->program, Task::Conjugate, 32, 7).pass) << f;
  }
}

TEST(SynthConjugate, RandomSupportsCertifyWhenFound) {
  std::mt19937_64 rng(301);
  int found = 0;
  for (int t = 0; t < 80; ++t) {
    const PauliSupport s = oracle::random_support(rng, 2 + rng() % 2, 2 + rng() % 5);
    const auto r = synth_conjugate(s);
    if (!r) continue;
    ++found;
    EXPECT_TRUE(certify_program(s, r->program, Task::Conjugate, 8, 11).pass) << s.str();
    if (r->certificate) {
      EXPECT_EQ(r->program.query_count(), r->certificate->query_count());
    }
  }
  EXPECT_GT(found, 10);
}

}  // namespace
}  // namespace paulinv

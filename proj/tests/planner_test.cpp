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

#include "paulinv/planner.hpp"

#include <gtest/gtest.h>

#include "paulinv/report.hpp"

namespace paulinv {
namespace {

PauliSupport load(const std::string& name) { return load_support(std::string(PAULINV_DATA_DIR "/") + name); }

TEST(Planner, StatusesAndRoutes) {
  struct Case {
    const char* file;
    Task task;
    PlanStatus status;
    const char* route;
    std::size_t queries;
  };
  const std::vector<Case> cases{
      {"ising_chain_6.txt", Task::Invert, PlanStatus::Found, "single-query", 1},
      {"y_model.txt", Task::Invert, PlanStatus::Found, "commuting-cover", 3},
      {"y_fifteen.txt", Task::Invert, PlanStatus::Found, "commuting-cover", 15},
      {"cluster_ising.txt", Task::Invert, PlanStatus::Found, "split", 3},
      {"eight_term.txt", Task::Invert, PlanStatus::Found, "split", 7},
      {"triangle_ising.txt", Task::Invert, PlanStatus::NotFound, "", 0},
      {"y_seven.txt", Task::Conjugate, PlanStatus::Found, "sign-plan", 7},
      {"asym_invert.txt", Task::Conjugate, PlanStatus::NotFound, "", 0},
      {"one_slot_3q.txt", Task::Conjugate, PlanStatus::CapExceeded, "", 0},
      {"asym_transpose.txt", Task::Transpose, PlanStatus::Found, "single-query", 1},
      {"asym_invert.txt", Task::Transpose, PlanStatus::Unsupported, "", 0},
  };
  for (const auto& c : cases) {
    const PauliSupport s = load(c.file);
    const SynthesisPlan p = plan_task(s, c.task);
    EXPECT_EQ(p.status, c.status) << c.file << " " << task_name(c.task);
    EXPECT_EQ(p.route, c.route) << c.file;
    EXPECT_EQ(p.program ? p.program->query_count() : 0, c.queries) << c.file;
    if (p.program) {
      EXPECT_TRUE(certify_program(s, *p.program, c.task).pass) << c.file;
    }
  }
}

TEST(Planner, WitnessAccompaniesImpossibleSingleQuery) {
  const PauliSupport s = load("triangle_ising.txt");
  const SynthesisPlan p = plan_task(s, Task::Invert);
  EXPECT_FALSE(p.single_query);
  ASSERT_TRUE(p.witness);
  EXPECT_EQ(p.witness->size() % 2, 1u);
  PlanOptions tight;
  tight.oracle_cap = 3;
  EXPECT_FALSE(plan_task(s, Task::Invert, tight).witness);
}

TEST(Planner, EmptySupportIsTrivial) {
  const SynthesisPlan p = plan_task(PauliSupport(2), Task::Conjugate);
  EXPECT_EQ(p.status, PlanStatus::Found);
  EXPECT_EQ(p.program->query_count(), 1u);
}

TEST(Planner, SkipsNumericCheckAboveSimulatorCap) {
  PauliSupport s(12);
  s.add(parse_pauli("Z0 Z11", 12));
  const SynthesisPlan p = plan_task(s, Task::Invert);
  EXPECT_EQ(p.status, PlanStatus::Found);
}

TEST(Report, JsonAndTextAgree) {
  const PauliSupport s = load("odd_cycle_7.txt");
  const SynthesisPlan p = plan_task(s, Task::Invert);
  const json j = plan_json(s, p);
  const std::string t = plan_text(s, p);
  EXPECT_NE(t.find("operator: " + j["program"]["operator"].get<std::string>()), std::string::npos);
  EXPECT_NE(t.find("queries: 3"), std::string::npos);
  EXPECT_EQ(j["support"]["hash"], support_hash(s));
}

TEST(Report, ShortestRoundTripDoubles) {
  EXPECT_EQ(fmt_double(0.1), "0.1");
  EXPECT_EQ(std::stod(fmt_double(1.0 / 3.0)), 1.0 / 3.0);
}

}  // namespace
}  // namespace paulinv

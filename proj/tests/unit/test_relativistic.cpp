// Copyright 2026 The reldeleg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <random>

#include <gtest/gtest.h>

#include "reldeleg/relativistic.hpp"

using namespace reldeleg::rel;

TEST(Causality, Examples) {
  EXPECT_FALSE(causally_reachable({0, 0}, {1, 0.5}));
  EXPECT_TRUE(causally_reachable({0, 0}, {1, 1}));
  const double t0 = 1.7;
  EXPECT_TRUE(causally_reachable({-t0, t0}, {t0, 3 * t0}));
  EXPECT_FALSE(causally_reachable({-t0, t0}, {t0, 3 * t0 - 1e-6}));
  EXPECT_FALSE(causally_reachable({0, 1}, {0, 0}));
}

TEST(HonestSchedule, ArrivalsAndDeadline) {
  const Schedule s = honest_schedule(1, 0.1);
  EXPECT_EQ(s.deadline, 3.0);
  int answers = 0;
  for (const auto& m : s.messages) {
    if (!m.answer) continue;
    ++answers;
    EXPECT_NEAR(m.receive.time, 2.1, 1e-12);
  }
  EXPECT_EQ(answers, 2);
  EXPECT_EQ(s.messages.size(), 4u);
  EXPECT_TRUE(validate(s).ok());
}

TEST(HonestSchedule, Guard) {
  EXPECT_THROW(honest_schedule(1, 1), std::invalid_argument);
  EXPECT_THROW(honest_schedule(1, 0), std::invalid_argument);
  EXPECT_NO_THROW(honest_schedule(1, 0.5, 0.6));
}

TEST(HonestSchedule, EdgesHaveStrictMarginWhereTheyMove) {
  const Schedule s = honest_schedule(1, 0.1);
  for (const auto& m : s.messages) {
    const double gap = (m.receive.time - m.emit.time) - std::abs(m.receive.position - m.emit.position);
    EXPECT_GE(gap, -1e-12) << m.id;
    // Independent re-check of the validator's verdict.
    EXPECT_TRUE(causally_reachable(m.emit, m.receive)) << m.id;
  }
}

TEST(Validate, FlagsFasterThanLight) {
  Schedule s = honest_schedule(1, 0.1);
  s.messages[0].receive.time = 0.5;
  const Verdict v = validate(s);
  ASSERT_EQ(v.nss_violations.size(), 1u);
  EXPECT_EQ(v.nss_violations[0], s.messages[0].id);
}

TEST(Validate, FlagsLateAnswer) {
  const Schedule late = with_answer_delay(honest_schedule(1, 0.1), "a2", 0.9 + 1e-6);
  const Verdict v = validate(late);
  ASSERT_EQ(v.late.size(), 1u);
  EXPECT_EQ(v.late[0], "a2");
  EXPECT_TRUE(validate(with_answer_delay(honest_schedule(1, 0.1), "a2", 0.9)).ok());
  EXPECT_THROW(with_answer_delay(honest_schedule(1, 0.1), "q1", 1), std::invalid_argument);
}

TEST(Validate, FlagsPartyOffWorldline) {
  Schedule s = honest_schedule(1, 0.1);
  s.messages[2].emit.position = -0.5;
  s.messages[2].receive.time += 1;
  EXPECT_FALSE(validate(s).worldline_violations.empty());
}

TEST(Intercept, Examples) {
  const double t0 = 1;
  const Attack quarter = intercept_attack_feasible(t0, 0.1, t0 / 4);
  EXPECT_TRUE(quarter.feasible);
  EXPECT_FALSE(quarter.chain.empty());
  EXPECT_NEAR(quarter.chain.back().time, 1.5, 1e-12);
  EXPECT_FALSE(intercept_attack_feasible(t0, 0.1, 0.9).feasible);
  EXPECT_TRUE(intercept_attack_feasible(t0, 0.1, 0.5).feasible);
  EXPECT_THROW(intercept_attack_feasible(t0, 0.1, 0), std::invalid_argument);
  EXPECT_THROW(intercept_attack_feasible(t0, 0.1, 1), std::invalid_argument);
}

TEST(Intercept, ChainIsCausal) {
  for (double x : {0.1, 0.3, 0.5}) {
    const Attack a = intercept_attack_feasible(2, 0.1, 2 * x);
    ASSERT_TRUE(a.feasible);
    for (std::size_t i = 1; i < a.chain.size(); ++i) {
      EXPECT_TRUE(causally_reachable(a.chain[i - 1], a.chain[i]));
    }
  }
}

TEST(Intercept, DichotomyOnGrid) {
  for (double t0 : {1.0, 2.5}) {
    const auto grid = attack_grid(honest_schedule(t0, 0.1 * t0), 100);
    ASSERT_EQ(grid.size(), 100u);
    for (const auto& a : grid) EXPECT_EQ(a.feasible, a.x <= t0 / 2 + 1e-12) << a.x;
  }
}

TEST(Agents, ScheduleValidatesAndBlocksIntercept) {
  const Schedule s = agent_schedule(1, 0.1);
  EXPECT_TRUE(validate(s).ok());
  for (const auto& a : attack_grid(s, 100)) EXPECT_FALSE(a.feasible) << a.x;
  // Exhaustive over a finer grid including the endpoints' neighbourhood.
  for (int k = 1; k < 1000; ++k) EXPECT_FALSE(intercept_attack(s, k / 1000.0).feasible);
  EXPECT_THROW(agent_schedule(1, 0.1, 256, 128), std::invalid_argument);
}

TEST(Agents, PlaintextAvailability) {
  const double t0 = 1;
  const Schedule s = agent_schedule(t0, 0.1);
  EXPECT_TRUE(plaintext_available(s, "q1", {0, 0}));
  EXPECT_FALSE(plaintext_available(s, "q1", {-t0, t0 - 1e-6}));
  EXPECT_FALSE(plaintext_available(s, "q1", {-0.5, 0.6}));
  EXPECT_TRUE(plaintext_available(s, "q1", {-t0, t0}));
  // With the key the ciphertext edge exposes the payload early.
  EXPECT_TRUE(plaintext_available(s, "q1", {-0.5, 0.6}, true));
  const auto e = earliest_exposure(s, "q1", t0);
  ASSERT_TRUE(e.has_value());
  EXPECT_NEAR(e->time, 3 * t0, 1e-12);
  const auto honest = earliest_exposure(honest_schedule(t0, 0.1), "q1", t0);
  ASSERT_TRUE(honest.has_value());
  EXPECT_LT(honest->time, 3 * t0);
}

TEST(GreenZone, HonestAndAgentSchedules) {
  EXPECT_TRUE(green_zone(honest_schedule(1, 0.1)));
  EXPECT_TRUE(green_zone(agent_schedule(1, 0.1)));
  // A prover that emits its answer late enough to hear the other's question.
  Schedule s = honest_schedule(1, 0.1);
  for (auto& m : s.messages) {
    if (m.id == "a2") {
      m.emit.time = 3.5;
      m.receive.time = 4.5;
    }
  }
  EXPECT_FALSE(green_zone(s));
}

TEST(Otp, RoundTrip) {
  std::mt19937_64 gen(51);
  for (int k = 0; k < 1000; ++k) {
    std::vector<std::uint8_t> key(16);
    std::vector<std::uint8_t> msg(16);
    for (auto& b : key) b = static_cast<std::uint8_t>(gen());
    for (auto& b : msg) b = static_cast<std::uint8_t>(gen());
    EXPECT_EQ(otp(key, otp(key, msg)), msg);
  }
  const std::vector<std::uint8_t> m{1, 2, 3};
  EXPECT_EQ(otp(std::vector<std::uint8_t>(3, 0), m), m);
  EXPECT_THROW(otp({1, 2}, m), std::invalid_argument);
}

TEST(Schedule, JsonRoundTrip) {
  for (const Schedule& s : {honest_schedule(1, 0.1), agent_schedule(2, 0.3)}) {
    const std::string text = schedule_to_json(s);
    const Schedule back = schedule_from_json(text);
    EXPECT_EQ(schedule_to_json(back), text);
    EXPECT_EQ(validate(back).ok(), validate(s).ok());
  }
  EXPECT_ANY_THROW(schedule_from_json("{\"t0\": 1}"));
}

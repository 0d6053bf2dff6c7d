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

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace reldeleg::rel {

/// A point in 1-D space-time, c = 1.
struct Event {
  double position = 0;
  double time = 0;
  bool operator==(const Event&) const = default;
};

inline constexpr double kTimeTolerance = 1e-12;

/// e2.time - e1.time >= |e2.position - e1.position|.
bool causally_reachable(const Event& e1, const Event& e2, double tol = kTimeTolerance);

struct Party {
  std::string name;
  std::vector<Event> worldline;  ///< breakpoints in increasing time
};

struct Message {
  std::string id;
  std::string sender;
  std::string receiver;
  Event emit;
  Event receive;
  std::size_t payload_bits = 0;
  std::string topic;       ///< q1, q2, a1, a2
  bool answer = false;     ///< subject to the deadline
  bool encrypted = false;  ///< one-time-pad ciphertext
};

struct Schedule {
  double t0 = 1;
  double t1 = 0;
  std::vector<Party> parties;
  std::vector<Message> messages;
  double deadline = 0;
};

struct Verdict {
  std::vector<std::string> nss_violations;  ///< message ids
  std::vector<std::string> late;            ///< answer ids past the deadline
  std::vector<std::string> worldline_violations;
  bool ok() const { return nss_violations.empty() && late.empty() && worldline_violations.empty(); }
};

Verdict validate(const Schedule& schedule);

/// Verifier at 0, P1 at -t0, P2 at +t0. Requires 0 < t1 < guard * t0.
Schedule honest_schedule(double t0, double t1, double guard = 0.25);

/// As honest_schedule, but questions travel encrypted to agents V1, V2 at the
/// provers' positions and are handed over locally at time t0. Throws
/// std::invalid_argument when key_bits < payload_bits.
Schedule agent_schedule(double t0, double t1, std::size_t payload_bits = 128,
                        std::size_t key_bits = 128, double guard = 0.25);

/// Delays one answer message by `delay`.
Schedule with_answer_delay(Schedule schedule, const std::string& answer_id, double delay);

/// Earliest time the plaintext of `topic` can reach `position`, taking any
/// point along an unencrypted message edge (or any edge when `with_key`) as
/// a relay source. nullopt when the topic is never exposed.
std::optional<Event> earliest_exposure(const Schedule& schedule, const std::string& topic,
                                       double position, bool with_key = false);

/// Whether the plaintext of `topic` can be known at `event`.
bool plaintext_available(const Schedule& schedule, const std::string& topic, const Event& event,
                         bool with_key = false);

struct Attack {
  double x = 0;
  bool feasible = false;
  /// Relay source, interception at -x, arrival at P2 (+t0).
  std::vector<Event> chain;
};

/// A cheating P1 waits at -x, learns its question as early as the schedule
/// allows and relays it to P2, who must receive it by 2 t0. Requires
/// 0 < x < t0.
Attack intercept_attack(const Schedule& schedule, double x);
/// Against the honest schedule: feasible iff x <= t0 / 2.
Attack intercept_attack_feasible(double t0, double t1, double x);

/// x_k = (k + 1/2) t0 / points for k = 0..points-1.
std::vector<Attack> attack_grid(const Schedule& schedule, std::size_t points);

/// No schedule event holding one prover's question plaintext can causally
/// reach the other prover's answer emission.
bool green_zone(const Schedule& schedule);

/// XOR with the key; involutive. Throws std::invalid_argument when the key
/// is shorter than the message.
std::vector<std::uint8_t> otp(const std::vector<std::uint8_t>& key,
                              const std::vector<std::uint8_t>& message);

std::string schedule_to_json(const Schedule& schedule);
Schedule schedule_from_json(const std::string& text);

}  // namespace reldeleg::rel

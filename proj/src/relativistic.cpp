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

#include "reldeleg/relativistic.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace reldeleg::rel {

bool causally_reachable(const Event& e1, const Event& e2, double tol) {
  return e2.time - e1.time + tol >= std::abs(e2.position - e1.position);
}

namespace {

const Party* find_party(const Schedule& s, const std::string& name) {
  for (const auto& p : s.parties) {
    if (p.name == name) return &p;
  }
  return nullptr;
}

// Position of a party at time t; static before the first and after the last
// breakpoint.
double position_at(const Party& p, double t) {
  const auto& w = p.worldline;
  if (t <= w.front().time) return w.front().position;
  for (std::size_t k = 1; k < w.size(); ++k) {
    if (t <= w[k].time) {
      const double span = w[k].time - w[k - 1].time;
      const double f = span > 0 ? (t - w[k - 1].time) / span : 1.0;
      return w[k - 1].position + f * (w[k].position - w[k - 1].position);
    }
  }
  return w.back().position;
}

Party static_party(std::string name, double position, double horizon) {
  return {std::move(name), {{position, 0}, {position, horizon}}};
}

void check_timing(double t0, double t1, double guard) {
  if (!(t0 > 0) || !std::isfinite(t0)) throw std::invalid_argument("t0 must be positive");
  if (!(t1 > 0) || !(t1 < guard * t0)) {
    throw std::invalid_argument("t1 must satisfy 0 < t1 < guard * t0");
  }
}

Message answer_message(const std::string& id, const std::string& sender, double pos, double t0,
                       double t1) {
  return {id, sender, "V", {pos, t0 + t1}, {0, 2 * t0 + t1}, 128, id, true, false};
}

struct Exposure {
  Event source;
  double arrival;
};

std::optional<Exposure> exposure(const Schedule& s, const std::string& topic, double target,
                                 bool with_key) {
  std::optional<Exposure> best;
  for (const auto& m : s.messages) {
    if (m.topic != topic || (m.encrypted && !with_key)) continue;
    // time(u) + |target - pos(u)| is convex along the edge: endpoints and the
    // crossing point suffice.
    std::vector<double> us = {0.0, 1.0};
    const double dx = m.receive.position - m.emit.position;
    if (dx != 0) {
      const double u = (target - m.emit.position) / dx;
      if (u > 0 && u < 1) us.push_back(u);
    }
    for (double u : us) {
      const Event p{m.emit.position + u * dx, m.emit.time + u * (m.receive.time - m.emit.time)};
      const double arrival = p.time + std::abs(target - p.position);
      if (!best || arrival < best->arrival) best = Exposure{p, arrival};
    }
  }
  return best;
}

}  // namespace

Verdict validate(const Schedule& s) {
  Verdict v;
  for (const auto& p : s.parties) {
    if (p.worldline.empty()) {
      v.worldline_violations.push_back(p.name + ": empty worldline");
      continue;
    }
    for (std::size_t k = 1; k < p.worldline.size(); ++k) {
      const Event& a = p.worldline[k - 1];
      const Event& b = p.worldline[k];
      if (b.time < a.time || !causally_reachable(a, b)) {
        v.worldline_violations.push_back(p.name + ": segment " + std::to_string(k) +
                                         " exceeds light speed");
      }
    }
  }
  for (const auto& m : s.messages) {
    if (!causally_reachable(m.emit, m.receive)) v.nss_violations.push_back(m.id);
    if (m.answer && m.receive.time > s.deadline + kTimeTolerance) v.late.push_back(m.id);
    for (const auto& [who, e] : {std::pair{m.sender, m.emit}, std::pair{m.receiver, m.receive}}) {
      const Party* p = find_party(s, who);
      if (!p || p->worldline.empty()) {
        v.worldline_violations.push_back(m.id + ": unknown party " + who);
      } else if (std::abs(position_at(*p, e.time) - e.position) > 1e-9) {
        v.worldline_violations.push_back(m.id + ": " + who + " is not at the event");
      }
    }
  }
  return v;
}

Schedule honest_schedule(double t0, double t1, double guard) {
  check_timing(t0, t1, guard);
  Schedule s;
  s.t0 = t0;
  s.t1 = t1;
  s.deadline = 3 * t0;
  const double horizon = 4 * t0;
  s.parties = {static_party("V", 0, horizon), static_party("P1", -t0, horizon),
               static_party("P2", t0, horizon)};
  s.messages = {
      {"q1", "V", "P1", {0, 0}, {-t0, t0}, 128, "q1", false, false},
      {"q2", "V", "P2", {0, 0}, {t0, t0}, 128, "q2", false, false},
      answer_message("a1", "P1", -t0, t0, t1),
      answer_message("a2", "P2", t0, t0, t1),
  };
  return s;
}

Schedule agent_schedule(double t0, double t1, std::size_t payload_bits, std::size_t key_bits,
                        double guard) {
  check_timing(t0, t1, guard);
  if (key_bits < payload_bits) throw std::invalid_argument("one-time pad key shorter than payload");
  Schedule s;
  s.t0 = t0;
  s.t1 = t1;
  s.deadline = 3 * t0;
  const double horizon = 4 * t0;
  s.parties = {static_party("V", 0, horizon), static_party("V1", -t0, horizon),
               static_party("V2", t0, horizon), static_party("P1", -t0, horizon),
               static_party("P2", t0, horizon)};
  s.messages = {
      {"q1-otp", "V", "V1", {0, 0}, {-t0, t0}, payload_bits, "q1", false, true},
      {"q2-otp", "V", "V2", {0, 0}, {t0, t0}, payload_bits, "q2", false, true},
      {"q1", "V1", "P1", {-t0, t0}, {-t0, t0}, payload_bits, "q1", false, false},
      {"q2", "V2", "P2", {t0, t0}, {t0, t0}, payload_bits, "q2", false, false},
      answer_message("a1", "P1", -t0, t0, t1),
      answer_message("a2", "P2", t0, t0, t1),
  };
  return s;
}

Schedule with_answer_delay(Schedule s, const std::string& answer_id, double delay) {
  for (auto& m : s.messages) {
    if (m.id == answer_id && m.answer) {
      m.emit.time += delay;
      m.receive.time += delay;
      return s;
    }
  }
  throw std::invalid_argument("no answer message " + answer_id);
}

std::optional<Event> earliest_exposure(const Schedule& s, const std::string& topic,
                                       double position, bool with_key) {
  const auto e = exposure(s, topic, position, with_key);
  if (!e) return std::nullopt;
  return Event{position, e->arrival};
}

bool plaintext_available(const Schedule& s, const std::string& topic, const Event& event,
                         bool with_key) {
  // The verifier holds every question from the moment it sends it.
  for (const auto& m : s.messages) {
    if (m.topic == topic && m.sender == "V" &&
        std::abs(event.position - m.emit.position) <= kTimeTolerance &&
        event.time >= m.emit.time - kTimeTolerance) {
      return true;
    }
  }
  const auto e = exposure(s, topic, event.position, with_key);
  return e && e->arrival <= event.time + kTimeTolerance;
}

Attack intercept_attack(const Schedule& s, double x) {
  if (!(x > 0 && x < s.t0)) throw std::invalid_argument("x must lie in (0, t0)");
  Attack a;
  a.x = x;
  const auto e = exposure(s, "q1", -x, false);
  if (!e) return a;
  const Event intercept{-x, e->arrival};
  const Event arrival{s.t0, intercept.time + s.t0 + x};
  a.chain = {e->source, intercept, arrival};
  // P2 must still answer by the deadline from +t0.
  a.feasible = arrival.time <= s.deadline - s.t0 + kTimeTolerance;
  return a;
}

Attack intercept_attack_feasible(double t0, double t1, double x) {
  return intercept_attack(honest_schedule(t0, t1), x);
}

std::vector<Attack> attack_grid(const Schedule& s, std::size_t points) {
  std::vector<Attack> out;
  for (std::size_t k = 0; k < points; ++k) {
    out.push_back(intercept_attack(s, (static_cast<double>(k) + 0.5) * s.t0 /
                                          static_cast<double>(points)));
  }
  return out;
}

bool green_zone(const Schedule& s) {
  for (int k = 1; k <= 2; ++k) {
    const std::string other = "q" + std::to_string(3 - k);
    const std::string answer = "a" + std::to_string(k);
    std::optional<Event> emission;
    for (const auto& m : s.messages) {
      if (m.topic == answer && m.answer) emission = m.emit;
    }
    if (!emission) continue;
    for (const auto& m : s.messages) {
      if (m.topic != other || m.encrypted) continue;
      std::vector<Event> holders = {m.receive};
      if (m.sender != "V") holders.push_back(m.emit);
      for (const Event& e : holders) {
        if (causally_reachable(e, *emission)) return false;
      }
    }
  }
  return true;
}

std::vector<std::uint8_t> otp(const std::vector<std::uint8_t>& key,
                              const std::vector<std::uint8_t>& message) {
  if (key.size() < message.size()) throw std::invalid_argument("one-time pad key too short");
  std::vector<std::uint8_t> out(message.size());
  for (std::size_t i = 0; i < message.size(); ++i) out[i] = message[i] ^ key[i];
  return out;
}

namespace {

using nlohmann::json;

json event_json(const Event& e) { return json::array({e.position, e.time}); }

Event event_from(const json& j) {
  if (!j.is_array() || j.size() != 2) throw std::invalid_argument("event must be [x, t]");
  return {j.at(0).get<double>(), j.at(1).get<double>()};
}

}  // namespace

std::string schedule_to_json(const Schedule& s) {
  json j;
  j["t0"] = s.t0;
  j["t1"] = s.t1;
  j["deadline"] = s.deadline;
  j["parties"] = json::array();
  for (const auto& p : s.parties) {
    json w = json::array();
    for (const auto& e : p.worldline) w.push_back(event_json(e));
    j["parties"].push_back({{"name", p.name}, {"worldline", w}});
  }
  j["messages"] = json::array();
  for (const auto& m : s.messages) {
    j["messages"].push_back({{"id", m.id},
                             {"sender", m.sender},
                             {"receiver", m.receiver},
                             {"emit", event_json(m.emit)},
                             {"receive", event_json(m.receive)},
                             {"payload_bits", m.payload_bits},
                             {"topic", m.topic},
                             {"answer", m.answer},
                             {"encrypted", m.encrypted}});
  }
  return j.dump(2) + "\n";
}

Schedule schedule_from_json(const std::string& text) {
  try {
    const json j = json::parse(text);
    Schedule s;
    s.t0 = j.at("t0").get<double>();
    s.t1 = j.at("t1").get<double>();
    s.deadline = j.at("deadline").get<double>();
    for (const auto& p : j.at("parties")) {
      Party party{p.at("name").get<std::string>(), {}};
      for (const auto& e : p.at("worldline")) party.worldline.push_back(event_from(e));
      s.parties.push_back(std::move(party));
    }
    for (const auto& m : j.at("messages")) {
      s.messages.push_back({m.at("id").get<std::string>(), m.at("sender").get<std::string>(),
                            m.at("receiver").get<std::string>(), event_from(m.at("emit")),
                            event_from(m.at("receive")), m.value("payload_bits", std::size_t{0}),
                            m.value("topic", std::string{}), m.value("answer", false),
                            m.value("encrypted", false)});
    }
    return s;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed schedule: ") + e.what());
  }
}

}  // namespace reldeleg::rel

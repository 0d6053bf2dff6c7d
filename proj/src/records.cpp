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

#include "reldeleg/records.hpp"

namespace reldeleg::records {

std::string dump(const json& record) { return record.dump(2) + "\n"; }

json to_json(const games::Estimate& e) {
  json per = json::object();
  for (const auto& [name, tally] : e.per_test) {
    per[name] = {{"rounds", tally.rounds}, {"accepted", tally.accepted}};
  }
  return {{"acceptance", e.frequency},
          {"interval", {e.frequency - e.half_width, e.frequency + e.half_width}},
          {"half_width", e.half_width},
          {"rounds", e.rounds},
          {"accepted", e.accepted},
          {"per_test", per},
          {"resamples", e.resamples},
          {"seed", e.seed}};
}

namespace {

json question_json(const games::Question& q) {
  return std::visit(
      [](const auto& v) -> json {
        using Q = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<Q, games::MeasureQuestion>) {
          return {{"measure", v.word.word()}};
        } else if constexpr (std::is_same_v<Q, games::PairQuestion>) {
          return {{"pair", {v.first.word(), v.second.word()}}};
        } else if constexpr (std::is_same_v<Q, games::MagicSquareQuestion>) {
          return {{v.is_row ? "row" : "column", v.index}, {"pairs", {v.pair_i, v.pair_j}}};
        } else {
          return {{"teleport", v.positions}};
        }
      },
      q);
}

json answer_json(const games::Answer& a) {
  return std::visit(
      [](const auto& v) -> json {
        using A = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<A, games::SignsAnswer>) {
          return {{"c", v.values}};
        } else if constexpr (std::is_same_v<A, games::SignsPairAnswer>) {
          return {{"b", v.first}, {"b_prime", v.second}};
        } else if constexpr (std::is_same_v<A, games::MagicSquareAnswer>) {
          return {{"entries", {v.first, v.second}}};
        } else {
          return {{"a", v.a}, {"b", v.b}};
        }
      },
      a);
}

}  // namespace

json to_json(const games::Transcript& t) {
  json j = {{"test", games::to_string(t.test)}, {"wrapped", t.wrapped}, {"accepted", t.accepted}};
  if (t.question1) j["question1"] = question_json(*t.question1);
  if (t.question2) j["question2"] = question_json(*t.question2);
  if (t.answer1) j["answer1"] = answer_json(*t.answer1);
  if (t.answer2) j["answer2"] = answer_json(*t.answer2);
  if (t.test == games::TestKind::kEnergy) {
    j["term"] = t.term;
    j["gamma"] = t.gamma;
    if (t.word) j["W"] = t.word->str();
    j["e"] = t.mask;
    j["d"] = t.d;
    j["coin"] = t.coin;
    j["resamples"] = t.resamples;
  }
  return j;
}

json to_json(const c2h::KitaevReport& r) {
  return {{"T", r.steps},
          {"acceptance", r.acceptance},
          {"epsilon", r.epsilon},
          {"lambda0", r.ground_energy},
          {"completeness_bound", r.completeness_bound},
          {"history_energy", r.history_energy},
          {"within_completeness", r.within_completeness},
          {"strictly_positive", r.strictly_positive},
          {"hamiltonian", r.summed ? "summed" : "averaged"}};
}

json to_json(const rel::Event& e) { return json::array({e.position, e.time}); }

json to_json(const rel::Verdict& v) {
  return {{"ok", v.ok()},
          {"nss_violations", v.nss_violations},
          {"late", v.late},
          {"worldline_violations", v.worldline_violations}};
}

json to_json(const rel::Attack& a) {
  json chain = json::array();
  for (const auto& e : a.chain) chain.push_back(to_json(e));
  return {{"x", a.x}, {"feasible", a.feasible}, {"chain", chain}};
}

json error_record(const std::string& kind, const std::string& message) {
  return {{"error", {{"kind", kind}, {"message", message}}}};
}

}  // namespace reldeleg::records

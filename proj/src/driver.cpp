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

#include "reldeleg/driver.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "reldeleg/amplify.hpp"
#include "reldeleg/circuit.hpp"
#include "reldeleg/clock_hamiltonian.hpp"
#include "reldeleg/errors.hpp"
#include "reldeleg/estimate.hpp"
#include "reldeleg/exact.hpp"
#include "reldeleg/records.hpp"
#include "reldeleg/relativistic.hpp"
#include "reldeleg/rounds.hpp"
#include "reldeleg/spectral.hpp"

namespace reldeleg::driver {

namespace {

template <class T>
T get_or(const json& d, const char* key, T fallback) {
  return d.contains(key) && !d.at(key).is_null() ? d.at(key).get<T>() : fallback;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

// The instance comes from "instance" (a path) or "instance_text"; the
// record always carries the text.
XZHamiltonian load_instance(json& inputs) {
  if (!inputs.contains("instance_text")) {
    if (!inputs.contains("instance")) throw std::invalid_argument("missing instance");
    inputs["instance_text"] = read_file(inputs.at("instance").get<std::string>());
  }
  return XZHamiltonian::parse(inputs.at("instance_text").get<std::string>());
}

json interval_json(const games::Estimate& e, std::optional<double> exact) {
  json j = records::to_json(e);
  if (exact) j["contains_exact"] = e.contains(*exact);
  return j;
}

}  // namespace

Result diag(const json& descriptor) {
  json inputs = descriptor;
  inputs["command"] = "diag";
  const XZHamiltonian h = load_instance(inputs);
  const auto cap = get_or<std::size_t>(inputs, "cap", kDefaultDenseCap);
  inputs["cap"] = cap;
  const GroundState g = ground_state(h, cap);
  const auto ps = get_or<std::vector<double>>(inputs, "p", {0.25, 0.5, 1.0});
  inputs["p"] = ps;
  json omega = json::array();
  for (double p : ps) omega.push_back({{"p", p}, {"omega_h", exact::omega_h(h, p, cap)}});
  json r = {{"command", "diag"},
            {"inputs", inputs},
            {"n", h.num_qubits()},
            {"m", h.num_terms()},
            {"k", h.locality()},
            {"lambda0", g.energy},
            {"degeneracy", g.degeneracy},
            {"norm", operator_norm(h, cap)},
            {"normal_form", h.is_normal_form()},
            {"omega_h", omega}};
  return {r, 0};
}

Result game(const json& descriptor) {
  json inputs = descriptor;
  inputs["command"] = "game";
  const XZHamiltonian h = load_instance(inputs);
  games::GameConfig cfg;
  cfg.p = get_or(inputs, "p", 0.5);
  cfg.t = get_or<std::size_t>(inputs, "t", 0);
  cfg.seed = get_or<std::uint64_t>(inputs, "seed", 0);
  cfg.max_embed_resamples = get_or<std::size_t>(inputs, "max_embed_resamples", 64);
  cfg.eta_prime = get_or(inputs, "eta_prime", 0.0);
  cfg.cap = get_or<std::size_t>(inputs, "cap", kDefaultDenseCap);
  const auto rounds = get_or<std::size_t>(inputs, "rounds", 0);
  const auto threads = get_or<std::size_t>(inputs, "threads", 0);
  const auto sel1 = get_or<std::string>(inputs, "p1", "honest");
  const auto sel2 = get_or<std::string>(inputs, "p2", "honest");
  const bool wrapped = get_or(inputs, "wrapped", false);
  inputs["p"] = cfg.p;
  inputs["seed"] = cfg.seed;
  inputs["rounds"] = rounds;
  inputs["p1"] = sel1;
  inputs["p2"] = sel2;
  inputs["wrapped"] = wrapped;
  inputs["max_embed_resamples"] = cfg.max_embed_resamples;

  json r = {{"command", "game"}, {"seed", cfg.seed}};
  std::optional<double> exact_value;
  games::RoundFn round;
  std::optional<games::WrappedGame> wg;
  strategies::ProverStrategy s1;
  strategies::ProverStrategy s2;
  if (wrapped) {
    const double alpha = get_or(inputs, "alpha", h.alpha().value_or(0.0));
    const double beta = get_or(inputs, "beta", h.beta().value_or(0.5));
    inputs["alpha"] = alpha;
    inputs["beta"] = beta;
    inputs["eta_prime"] = cfg.eta_prime;
    wg = games::make_wrapped_game(h, alpha, beta, cfg);
    s1 = strategies::parse_selector(sel1, wg->inner, true, cfg.cap);
    s2 = strategies::parse_selector(sel2, wg->inner, false, cfg.cap);
    r["wrapped"] = {{"power", wg->power},     {"rescale", wg->rescale},
                    {"shift", wg->shift},     {"scale", wg->scale},
                    {"c", wg->c},             {"accept_weight", wg->accept_weight},
                    {"reject_weight", wg->reject_weight},
                    {"inner_terms", wg->inner.num_terms()},
                    {"inner_qubits", wg->inner.num_qubits()}};
    inputs["t"] = games::pair_count(cfg, wg->inner);
    round = [&](const Rng& rng) { return games::wrapped_game_round(*wg, s1, s2, cfg, rng); };
  } else {
    s1 = strategies::parse_selector(sel1, h, true, cfg.cap);
    s2 = strategies::parse_selector(sel2, h, false, cfg.cap);
    inputs["t"] = games::pair_count(cfg, h);
    round = [&](const Rng& rng) { return games::hamiltonian_test_round(h, s1, s2, cfg, rng); };
  }
  const std::size_t t = inputs["t"].get<std::size_t>();
  try {
    exact_value = wrapped ? exact::wrapped_game_value(*wg, s1, s2, cfg)
                          : exact::hamiltonian_test_value(h, s1, s2, cfg.p, t, cfg.cap);
    r["exact"] = *exact_value;
    if (!wrapped) r["omega_h"] = exact::omega_h(h, cfg.p, cfg.cap);
  } catch (const OutsideAnalyzableClass& e) {
    r["exact"] = nullptr;
    r["exact_note"] = e.what();
  }
  if (rounds > 0) {
    const games::Estimate est = games::estimate_acceptance(round, rounds, cfg.seed, threads);
    r["estimate"] = interval_json(est, exact_value);
  }
  r["inputs"] = inputs;
  return {r, 0};
}

Result amplify(const json& descriptor) {
  json inputs = descriptor;
  inputs["command"] = "amplify";
  const XZHamiltonian h = load_instance(inputs);
  const auto cap = get_or<std::size_t>(inputs, "cap", kDefaultDenseCap);
  const double alpha = get_or(inputs, "alpha", h.alpha().value_or(0.0));
  const double beta = get_or(inputs, "beta", h.beta().value_or(0.5));
  inputs["alpha"] = alpha;
  inputs["beta"] = beta;
  const ShiftScaled ss = shift_scale_nonneg(h, cap);
  const double a2 = ss.map_energy(alpha);
  const double b2 = ss.map_energy(beta);
  AmplifyOptions opt;
  opt.cap = cap;
  const Amplified amp = reldeleg::amplify(ss.hamiltonian, a2, b2, opt);
  const double l0 = ground_energy(ss.hamiltonian, cap);
  json r = {{"command", "amplify"},
            {"inputs", inputs},
            {"shift", ss.shift},
            {"scale", ss.scale},
            {"alpha_mapped", a2},
            {"beta_mapped", b2},
            {"power", amp.power},
            {"rescale", amp.rescale},
            {"lambda0_input", l0},
            {"terms", amp.normalized.num_terms()},
            {"qubits", amp.normalized.num_qubits()},
            {"output_text", amp.normalized.serialize()}};
  if (amp.normalized.num_qubits() <= cap) {
    r["lambda0_output_raw"] = ground_energy(amp.normalized, cap) * amp.rescale;
  }
  if (inputs.contains("output")) amp.normalized.save(inputs.at("output").get<std::string>());
  return {r, 0};
}

Result c2h(const json& descriptor) {
  json inputs = descriptor;
  inputs["command"] = "c2h";
  if (!inputs.contains("circuit_text")) {
    if (!inputs.contains("circuit")) throw std::invalid_argument("missing circuit");
    inputs["circuit_text"] = read_file(inputs.at("circuit").get<std::string>());
  }
  const c2h::Circuit circuit = c2h::Circuit::parse(inputs.at("circuit_text").get<std::string>());
  const auto cap = get_or<std::size_t>(inputs, "cap", kDefaultDenseCap);
  const double acceptance = circuit.acceptance(cap);
  const double epsilon = get_or(inputs, "epsilon", 1 - acceptance);
  inputs["epsilon"] = epsilon;
  inputs["cap"] = cap;
  const c2h::ClockHamiltonian hq = c2h::build_hq(circuit, true, cap);
  json families = json::object();
  bool all_xz = true;
  for (const auto& term : hq.terms) {
    const std::string name = c2h::to_string(term.family);
    const bool xz = c2h::pauli_decompose(term.local).is_xz;
    all_xz = all_xz && xz;
    auto& f = families[name];
    f["count"] = get_or<std::size_t>(f, "count", 0) + 1;
    f["xz"] = get_or(f, "xz", true) && xz;
  }
  json r = {{"command", "c2h"},
            {"inputs", inputs},
            {"report", records::to_json(c2h::kitaev_check(circuit, epsilon, cap))},
            {"families", families},
            {"is_xz", all_xz},
            {"qubits", hq.num_qubits()}};
  return {r, 0};
}

Result reltime(const json& descriptor) {
  json inputs = descriptor;
  inputs["command"] = "reltime";
  const double t0 = get_or(inputs, "t0", 1.0);
  const double t1 = get_or(inputs, "t1", 0.1);
  const double guard = get_or(inputs, "guard", 0.25);
  const auto points = get_or<std::size_t>(inputs, "attack_grid", 100);
  const bool agents = get_or(inputs, "agents", false);
  const double delay = get_or(inputs, "answer_delay", 0.0);
  inputs["t0"] = t0;
  inputs["t1"] = t1;
  inputs["guard"] = guard;
  inputs["attack_grid"] = points;
  inputs["agents"] = agents;
  inputs["answer_delay"] = delay;
  rel::Schedule s;
  if (inputs.contains("schedule")) {
    s = rel::schedule_from_json(read_file(inputs.at("schedule").get<std::string>()));
  } else {
    s = agents ? rel::agent_schedule(t0, t1, 128, 128, guard) : rel::honest_schedule(t0, t1, guard);
  }
  if (delay != 0) s = rel::with_answer_delay(s, "a2", delay);
  const rel::Verdict v = rel::validate(s);
  json attacks = json::array();
  std::optional<double> boundary;
  for (const auto& a : rel::attack_grid(s, points)) {
    attacks.push_back(records::to_json(a));
    if (a.feasible) boundary = a.x;
  }
  json r = {{"command", "reltime"},
            {"inputs", inputs},
            {"verdict", records::to_json(v)},
            {"green_zone", rel::green_zone(s)},
            {"attacks", attacks},
            {"feasible_up_to", boundary ? json(*boundary) : json(nullptr)},
            {"schedule", json::parse(rel::schedule_to_json(s))}};
  return {r, v.ok() ? 0 : 1};
}

Result magic_square(const json& descriptor) {
  json inputs = descriptor;
  inputs["command"] = "magic-square";
  const auto rounds = get_or<std::size_t>(inputs, "rounds", 0);
  const auto seed = get_or<std::uint64_t>(inputs, "seed", 0);
  const auto threads = get_or<std::size_t>(inputs, "threads", 0);
  const auto rows_sel = get_or<std::string>(inputs, "p1", "honest");
  const auto cols_sel = get_or<std::string>(inputs, "p2", "honest");
  inputs["rounds"] = rounds;
  inputs["seed"] = seed;
  inputs["p1"] = rows_sel;
  inputs["p2"] = cols_sel;
  const XZHamiltonian unused(1, {{1.0, parse_pauli("Z")}});
  const auto rows = strategies::parse_selector(rows_sel, unused, false);
  const auto cols = strategies::parse_selector(cols_sel, unused, false);
  const exact::ClassicalSearch best = exact::classical_magic_square_value();
  const double value = exact::magic_square_value(rows, cols);
  json r = {{"command", "magic-square"},
            {"inputs", inputs},
            {"seed", seed},
            {"classical_value",
             {{"numerator", best.value.numerator}, {"denominator", best.value.denominator}}},
            {"exact", value}};
  if (rounds > 0) {
    const auto est = games::estimate_acceptance(
        [&](const Rng& rng) { return games::magic_square_round(rows, cols, rng); }, rounds, seed,
        threads);
    r["estimate"] = interval_json(est, value);
  }
  return {r, 0};
}

Result run(const json& descriptor) {
  const std::string command = descriptor.at("command").get<std::string>();
  if (command == "diag") return diag(descriptor);
  if (command == "game") return game(descriptor);
  if (command == "amplify") return amplify(descriptor);
  if (command == "c2h") return c2h(descriptor);
  if (command == "reltime") return reltime(descriptor);
  if (command == "magic-square") return magic_square(descriptor);
  throw std::invalid_argument("unknown command " + command);
}

Result run_guarded(const json& descriptor) {
  try {
    return run(descriptor);
  } catch (const ParseError& e) {
    return {records::error_record("parse", e.what()), 2};
  } catch (const CapacityError& e) {
    return {records::error_record("capacity", e.what()), 2};
  } catch (const ShapeError& e) {
    return {records::error_record("shape", e.what()), 2};
  } catch (const NoEmbedding& e) {
    return {records::error_record("embedding", e.what()), 2};
  } catch (const json::exception& e) {
    return {records::error_record("descriptor", e.what()), 2};
  } catch (const std::exception& e) {
    return {records::error_record("error", e.what()), 2};
  }
}

}  // namespace reldeleg::driver

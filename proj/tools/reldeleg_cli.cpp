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

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "reldeleg/driver.hpp"
#include "reldeleg/records.hpp"

namespace {

using reldeleg::driver::json;

// Flag values land here and are merged over the descriptor file, if any.
struct Flags {
  std::string descriptor;
  std::string out;
  std::optional<std::string> instance, circuit, schedule, output, p1, p2;
  std::optional<double> alpha, beta, t0, t1, guard, epsilon, eta_prime, answer_delay;
  std::optional<std::vector<double>> p;
  std::optional<std::size_t> t, rounds, threads, cap, attack_grid, max_embed_resamples;
  std::optional<std::uint64_t> seed;
  bool wrapped = false;
  bool agents = false;
};

template <class T>
void put(json& d, const char* key, const std::optional<T>& v) {
  if (v) d[key] = *v;
}

json descriptor_from(const Flags& f, const std::string& command) {
  json d = json::object();
  if (!f.descriptor.empty()) {
    std::ifstream in(f.descriptor);
    if (!in) throw std::runtime_error("cannot open " + f.descriptor);
    d = json::parse(in);
  }
  d["command"] = command;
  put(d, "instance", f.instance);
  put(d, "circuit", f.circuit);
  put(d, "schedule", f.schedule);
  put(d, "output", f.output);
  put(d, "p1", f.p1);
  put(d, "p2", f.p2);
  put(d, "alpha", f.alpha);
  put(d, "beta", f.beta);
  put(d, "t0", f.t0);
  put(d, "t1", f.t1);
  put(d, "guard", f.guard);
  put(d, "epsilon", f.epsilon);
  put(d, "eta_prime", f.eta_prime);
  put(d, "answer_delay", f.answer_delay);
  put(d, "t", f.t);
  put(d, "rounds", f.rounds);
  put(d, "threads", f.threads);
  put(d, "cap", f.cap);
  put(d, "attack_grid", f.attack_grid);
  put(d, "max_embed_resamples", f.max_embed_resamples);
  put(d, "seed", f.seed);
  if (f.p) {
    if (command == "diag") {
      d["p"] = *f.p;
    } else if (f.p->size() == 1) {
      d["p"] = f.p->front();
    } else {
      throw std::invalid_argument("--p takes one value for " + command);
    }
  }
  if (f.wrapped) d["wrapped"] = true;
  if (f.agents) d["agents"] = true;
  return d;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Relativistic delegation toolkit: games, spectra, clock Hamiltonians, schedules"};
  app.require_subcommand(1);
  Flags f;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--descriptor", f.descriptor, "JSON run descriptor; flags override it");
    sub->add_option("--out", f.out, "write the record here instead of stdout");
    sub->add_option("--cap", f.cap, "dense qubit cap");
  };
  auto instance = [&](CLI::App* sub) { sub->add_option("--instance,-i", f.instance, "Hamiltonian file"); };
  auto strategies = [&](CLI::App* sub) {
    sub->add_option("--p1", f.p1, "prover 1 strategy selector");
    sub->add_option("--p2", f.p2, "prover 2 strategy selector");
  };
  auto sampling = [&](CLI::App* sub) {
    sub->add_option("--rounds", f.rounds, "Monte Carlo rounds (0: exact only)");
    sub->add_option("--seed", f.seed, "root seed");
    sub->add_option("--threads", f.threads, "worker threads (0: all cores)");
  };

  CLI::App* diag = app.add_subcommand("diag", "ground energy, norm and omega_h");
  common(diag);
  instance(diag);
  diag->add_option("--p", f.p, "Energy Test probabilities")->expected(1, -1);

  CLI::App* game = app.add_subcommand("game", "Hamiltonian test or wrapped game");
  common(game);
  instance(game);
  strategies(game);
  sampling(game);
  game->add_option("--p", f.p, "Energy Test probability")->expected(1);
  game->add_option("--t", f.t, "EPR pairs (0: default)");
  game->add_option("--max-embed-resamples", f.max_embed_resamples);
  game->add_flag("--wrapped", f.wrapped, "play the wrapped game");
  game->add_option("--alpha", f.alpha);
  game->add_option("--beta", f.beta);
  game->add_option("--eta-prime", f.eta_prime);

  CLI::App* amp = app.add_subcommand("amplify", "gap amplification");
  common(amp);
  instance(amp);
  amp->add_option("--alpha", f.alpha);
  amp->add_option("--beta", f.beta);
  amp->add_option("--output,-o", f.output, "write the amplified instance here");

  CLI::App* c2h = app.add_subcommand("c2h", "circuit to clock Hamiltonian");
  common(c2h);
  c2h->add_option("--circuit,-c", f.circuit, "circuit file");
  c2h->add_option("--epsilon", f.epsilon, "completeness epsilon (default 1 - acceptance)");

  CLI::App* rel = app.add_subcommand("reltime", "space-time schedule checks");
  common(rel);
  rel->add_option("--t0", f.t0);
  rel->add_option("--t1", f.t1);
  rel->add_option("--guard", f.guard, "require t1 < guard * t0");
  rel->add_option("--attack-grid", f.attack_grid, "intercept offsets to test");
  rel->add_flag("--agents", f.agents, "trusted agents with one-time pads");
  rel->add_option("--answer-delay", f.answer_delay, "delay prover 2's answer");
  rel->add_option("--schedule", f.schedule, "schedule JSON file");

  CLI::App* ms = app.add_subcommand("magic-square", "Magic Square values");
  common(ms);
  strategies(ms);
  sampling(ms);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  reldeleg::driver::Result result;
  try {
    result = reldeleg::driver::run_guarded(descriptor_from(f, command));
  } catch (const std::exception& e) {
    result = {reldeleg::records::error_record("descriptor", e.what()), 2};
  }
  const std::string text = reldeleg::records::dump(result.record);
  if (f.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(f.out);
    if (!out) {
      std::cerr << reldeleg::records::dump(
          reldeleg::records::error_record("io", "cannot write " + f.out));
      return 2;
    }
    out << text;
  }
  return result.status;
}

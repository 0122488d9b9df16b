/*
 * Copyright 2026 The eternal-colouring Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "egc/egc.hpp"

namespace {

using nlohmann::json;

constexpr int kExitConfig = 2;
constexpr int kExitInfeasible = 3;

json parse_json_arg(const std::string& text, const char* what) {
  if (text.empty()) return json::object();
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw egc::ConfigError(std::string("--") + what + " is not valid JSON: " + e.what());
  }
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw egc::ConfigError("cannot read " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw egc::ConfigError(path + " is not valid JSON: " + e.what());
  }
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::trunc | std::ios::binary);
  if (!out) throw egc::OutputError("cannot write " + path);
  out << text;
}

egc::RuleVariant variant_arg(const std::string& s) {
  try {
    return egc::parse_variant(s);
  } catch (const std::exception&) {
    throw egc::ConfigError("unknown variant '" + s + "'");
  }
}

struct PlayArgs {
  std::string graph = "path:3";
  egc::Colour k = 3;
  std::string variant = "standard";
  std::string alice = "greedy-first-fit", bob = "greedy-first-fit";
  std::string alice_params, bob_params;
  std::size_t max_rounds = 10;
  std::uint64_t seed = 1;
  std::string out;
};

int run_play(const PlayArgs& a) {
  const auto spec = egc::parse_graph_spec(a.graph);
  const auto variant = variant_arg(a.variant);
  auto graph = std::make_shared<const egc::Graph>(spec.instantiate(egc::derive_seed(a.seed, {0})));
  auto alice = egc::make_strategy({a.alice, parse_json_arg(a.alice_params, "alice-params")}, graph, a.k, variant);
  auto bob = egc::make_strategy({a.bob, parse_json_arg(a.bob_params, "bob-params")}, graph, a.k, variant);
  if (!a.out.empty()) egc::preflight_outputs(a.out);
  const auto res = egc::play_game(graph, a.k, *alice, *bob, variant, a.max_rounds, a.seed);
  json summary = {{"winner", std::string(egc::to_string(res.winner))},
                  {"terminationRound", res.termination_round},
                  {"roundsCompleted", res.rounds_completed},
                  {"movesPlayed", res.moves_played},
                  {"fault", res.fault()}};
  if (res.fault()) summary["faultReason"] = res.fault_reason;
  if (!a.out.empty()) {
    std::ofstream t(a.out + ".jsonl", std::ios::trunc | std::ios::binary);
    if (!t) throw egc::OutputError("cannot write " + a.out + ".jsonl");
    egc::write_transcript(t, res.transcript);
  }
  std::cout << summary.dump(2) << '\n';
  return 0;
}

struct SolveArgs {
  std::string graph = "star:5";
  std::string variant = "greedy-both";
  std::optional<egc::Colour> k;
  std::optional<egc::Colour> k_min, k_max;
  std::size_t cap = 100'000'000;
  bool symmetry = false;
  bool one_round = false;
  bool full_scan = false;
};

int run_solve(const SolveArgs& a) {
  const auto spec = egc::parse_graph_spec(a.graph);
  if (spec.random()) throw egc::ConfigError("solve needs a fixed graph, not a random family");
  const auto g = spec.instantiate(0);
  const auto variant = variant_arg(a.variant);
  egc::SolverOptions opt;
  opt.state_cap = a.cap;
  opt.colour_symmetry = a.symmetry;
  json out = {{"graph", a.graph}, {"variant", std::string(egc::to_string(variant))}};
  if (a.one_round) {
    if (!a.k) throw egc::ConfigError("--one-round needs --k");
    const auto r = egc::solve_one_round(g, *a.k, opt);
    out["k"] = *a.k;
    out["winner"] = std::string(egc::to_string(r.winner));
    out["statesExplored"] = r.states_explored;
  } else if (a.k) {
    const auto r = egc::solve_eternal(g, *a.k, variant, opt);
    out["k"] = *a.k;
    out["winner"] = std::string(egc::to_string(r.winner));
    out["statesExplored"] = r.states_explored;
  } else {
    egc::ScanOptions so;
    so.solver = opt;
    so.k_min = a.k_min.value_or(1);
    so.k_max = a.k_max;
    so.stop_at_first = !a.full_scan;
    const auto r = egc::eternal_game_chromatic_number(g, variant, so);
    out["kStar"] = r.k_star ? json(*r.k_star) : json(nullptr);
    out["monotone"] = r.monotone;
    out["statesExplored"] = r.states_explored;
    json scanned = json::array();
    for (auto [k, w] : r.scanned) scanned.push_back({{"k", k}, {"winner", std::string(egc::to_string(w))}});
    out["scanned"] = scanned;
  }
  std::cout << out.dump(2) << '\n';
  return 0;
}

struct AuditArgs {
  std::string graph = "gnp:300:0.5";
  std::string config;
  std::uint64_t seed = 1;
  std::string out;
};

int run_audit(const AuditArgs& a) {
  const auto spec = egc::parse_graph_spec(a.graph);
  auto params = a.config.empty() ? egc::AuditParams{} : egc::audit_params_from_json(read_json_file(a.config));
  const auto g = spec.instantiate(a.seed);
  if (!a.out.empty()) write_text(a.out, "");
  json report = egc::to_json(egc::audit_graph(g, params));
  report["graph"] = a.graph;
  report["seed"] = a.seed;
  report["params"] = egc::to_json(params);
  if (!a.out.empty()) write_text(a.out, report.dump(2) + "\n");
  std::cout << report.dump(2) << '\n';
  return 0;
}

struct ExperimentArgs {
  std::string config;
  std::optional<std::uint64_t> seed;
  std::string out;
  unsigned jobs = 1;
};

egc::ExperimentConfig load_with_overrides(const ExperimentArgs& a) {
  auto c = egc::load_experiment_config(a.config);
  if (a.seed) c.master_seed = *a.seed;
  if (!a.out.empty()) c.output = a.out;
  return c;
}

int run_experiment_cmd(const ExperimentArgs& a, bool threshold_only) {
  const auto c = load_with_overrides(a);
  egc::preflight_outputs(c.output);
  const auto table = egc::run_experiment(c, a.jobs);
  egc::emit_outputs(table, c, c.output);
  const auto summary = egc::summary_json(table, c);
  if (threshold_only) {
    json curve = json::array();
    for (const auto& row : summary["perK"])
      curve.push_back({{"k", row["k"]}, {"aliceSurvival", row["aliceSurvival"]}});
    std::cout << json{{"threshold", summary["threshold"]}, {"curve", curve}}.dump(2) << '\n';
  } else {
    std::cout << json{{"csv", egc::csv_path(c.output)}, {"summary", egc::summary_path(c.output)},
                      {"threshold", summary["threshold"]}}
                     .dump(2)
              << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Eternal vertex colouring game toolkit"};
  app.set_version_flag("--version", std::string(egc::kVersion));
  app.require_subcommand(1);

  PlayArgs play;
  auto* p = app.add_subcommand("play", "Play one game and print the outcome");
  p->add_option("--graph", play.graph, "Graph spec, e.g. path:3 or gnp:101:0.5");
  p->add_option("-k,--k", play.k, "Palette size")->check(CLI::PositiveNumber);
  p->add_option("--variant", play.variant, "standard, greedy-bob or greedy-both");
  p->add_option("--alice", play.alice, "Alice strategy name");
  p->add_option("--bob", play.bob, "Bob strategy name");
  p->add_option("--alice-params", play.alice_params, "Alice parameters as JSON");
  p->add_option("--bob-params", play.bob_params, "Bob parameters as JSON");
  p->add_option("--max-rounds", play.max_rounds, "Rounds Alice must survive")->check(CLI::PositiveNumber);
  p->add_option("--seed", play.seed, "Seed for graph and strategies");
  p->add_option("--out", play.out, "Write the transcript to OUT.jsonl");

  SolveArgs solve;
  auto* s = app.add_subcommand("solve", "Solve a small instance exactly");
  s->add_option("--graph", solve.graph, "Graph spec (fixed graphs only)");
  s->add_option("--variant", solve.variant, "standard, greedy-bob or greedy-both");
  s->add_option("-k,--k", solve.k, "Solve for this palette size only");
  s->add_option("--k-min", solve.k_min, "First palette size of the scan");
  s->add_option("--k-max", solve.k_max, "Last palette size of the scan (default max degree + 2)");
  s->add_option("--cap", solve.cap, "Refuse beyond this many positions");
  s->add_flag("--colour-symmetry", solve.symmetry, "Identify positions up to colour relabelling");
  s->add_flag("--one-round", solve.one_round, "Solve the one-round colouring game instead");
  s->add_flag("--full-scan", solve.full_scan, "Do not stop at the first Alice win");

  AuditArgs audit;
  auto* au = app.add_subcommand("audit", "Check finite-n structural properties of a graph");
  au->add_option("--graph", audit.graph, "Graph spec");
  au->add_option("--config", audit.config, "Audit parameters (JSON)");
  au->add_option("--seed", audit.seed, "Graph seed");
  au->add_option("--out", audit.out, "Write the report here");

  ExperimentArgs exp, thr;
  auto* e = app.add_subcommand("experiment", "Run a batch of games from a config file");
  auto* t = app.add_subcommand("threshold", "Estimate the survival threshold in k");
  for (auto [cmd, args] : {std::pair{e, &exp}, std::pair{t, &thr}}) {
    cmd->add_option("--config", args->config, "Experiment config (JSON)")->required();
    cmd->add_option("--seed", args->seed, "Override the master seed");
    cmd->add_option("--out", args->out, "Override the output prefix");
    cmd->add_option("--jobs", args->jobs, "Worker threads")->check(CLI::PositiveNumber);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& err) {
    return app.exit(err);
  } catch (const CLI::CallForVersion& err) {
    return app.exit(err);
  } catch (const CLI::ParseError& err) {
    app.exit(err);
    return kExitConfig;
  }

  try {
    if (*p) return run_play(play);
    if (*s) return run_solve(solve);
    if (*au) return run_audit(audit);
    if (*e) return run_experiment_cmd(exp, false);
    if (*t) return run_experiment_cmd(thr, true);
  } catch (const egc::InfeasibleSolve& err) {
    std::cerr << "infeasible: " << err.what() << '\n';
    return kExitInfeasible;
  } catch (const egc::ConfigError& err) {
    std::cerr << "config error: " << err.what() << '\n';
    return kExitConfig;
  } catch (const egc::OutputError& err) {
    std::cerr << "output error: " << err.what() << '\n';
    return kExitConfig;
  } catch (const std::invalid_argument& err) {
    std::cerr << "config error: " << err.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << '\n';
    return 1;
  }
  return 0;
}

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

#pragma once

#include <atomic>
#include <cstdint>
#include <exception>
#include <fstream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <nlohmann/json.hpp>

#include "egc/graph.hpp"
#include "egc/play.hpp"
#include "egc/rational.hpp"
#include "egc/rng.hpp"
#include "egc/strategies/registry.hpp"

#ifndef EGC_VERSION
#define EGC_VERSION "0.0.0"
#endif

namespace egc {

inline constexpr const char* kVersion = EGC_VERSION;

/**
 * A graph or a family of random graphs, written as "star:5", "path:4",
 * "cycle:5", "complete:4", "empty:3", "gnp:101:0.5" or "file:edges.txt".
 */
struct GraphSpec {
  std::string text;
  std::optional<NamedKind> kind;
  std::size_t size = 0;
  double p = 0.0;  // gnp only
  std::string path;

  bool random() const { return !kind && path.empty(); }

  Graph instantiate(std::uint64_t seed) const {
    if (kind) return make_named(*kind, size);
    if (!path.empty()) {
      std::ifstream in(path);
      if (!in) throw ConfigError("cannot read graph file " + path);
      return read_edge_list(in);
    }
    return gnp_generate({size, p, seed});
  }
};

inline GraphSpec parse_graph_spec(const std::string& text) {
  GraphSpec g;
  g.text = text;
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw ConfigError("graph spec '" + text + "' needs the form kind:args");
  const std::string kind = text.substr(0, colon), rest = text.substr(colon + 1);
  auto count = [&](const std::string& s) {
    std::size_t pos = 0;
    unsigned long long v = 0;
    try {
      v = std::stoull(s, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos != s.size() || s.empty() || s[0] == '-') throw ConfigError("bad size in graph spec '" + text + "'");
    return static_cast<std::size_t>(v);
  };
  static const std::map<std::string, NamedKind> kinds{{"star", NamedKind::Star},
                                                      {"path", NamedKind::Path},
                                                      {"cycle", NamedKind::Cycle},
                                                      {"complete", NamedKind::Complete},
                                                      {"empty", NamedKind::Empty}};
  if (auto it = kinds.find(kind); it != kinds.end()) {
    g.kind = it->second;
    g.size = count(rest);
    if (g.size < 1 || (it->second == NamedKind::Cycle && g.size < 3))
      throw ConfigError("graph spec '" + text + "' is too small");
  } else if (kind == "gnp") {
    const auto c2 = rest.find(':');
    if (c2 == std::string::npos) throw ConfigError("gnp spec needs gnp:n:p");
    g.size = count(rest.substr(0, c2));
    try {
      const Rational p = parse_rational(rest.substr(c2 + 1));
      if (p < 0 || p > 1) throw ConfigError("gnp edge probability outside [0,1]");
      g.p = static_cast<double>(p);
    } catch (const std::runtime_error& e) {
      throw ConfigError("bad gnp probability in '" + text + "'");
    }
  } else if (kind == "file") {
    if (rest.empty()) throw ConfigError("file graph spec needs a path");
    g.path = rest;
  } else {
    throw ConfigError("unknown graph kind '" + kind + "'");
  }
  return g;
}

struct ExperimentConfig {
  std::string graph = "gnp:101:0.5";
  bool share_graph = false;  // one graph for every trial instead of a fresh draw
  Colour k_min = 20;
  Colour k_max = 20;
  RuleVariant variant = RuleVariant::Standard;
  StrategySpec alice{"paper-alice", nlohmann::json::object()};
  StrategySpec bob{"paper-odd", nlohmann::json::object()};
  std::size_t trials = 200;
  std::size_t max_rounds = 10;
  std::uint64_t master_seed = 1;
  std::string output = "results/experiment";
  double survival_quantile = 0.5;

  std::vector<Colour> ks() const {
    std::vector<Colour> out;
    for (Colour k = k_min; k <= k_max; ++k) out.push_back(k);
    return out;
  }

  void validate() const {
    if (trials < 1) throw ConfigError("trials must be at least 1");
    if (k_min < 1 || k_max < k_min) throw ConfigError("kRange must be a nonempty range of positive integers");
    if (max_rounds < 1) throw ConfigError("maxRounds must be at least 1");
    if (!(survival_quantile > 0.0 && survival_quantile <= 1.0)) throw ConfigError("survivalQuantile must be in (0,1]");
    parse_graph_spec(graph);
    auto known = [](const std::string& name) {
      const auto& names = strategy_names();
      return std::find(names.begin(), names.end(), name) != names.end();
    };
    if (!known(alice.name)) throw ConfigError("unknown alice strategy '" + alice.name + "'");
    if (!known(bob.name)) throw ConfigError("unknown bob strategy '" + bob.name + "'");
  }
};

inline nlohmann::json to_json(const ExperimentConfig& c) {
  return {{"graph", c.graph},
          {"shareGraph", c.share_graph},
          {"kRange", {{"min", c.k_min}, {"max", c.k_max}}},
          {"variant", std::string(to_string(c.variant))},
          {"alice", {{"name", c.alice.name}, {"params", c.alice.params}}},
          {"bob", {{"name", c.bob.name}, {"params", c.bob.params}}},
          {"trials", c.trials},
          {"maxRounds", c.max_rounds},
          {"masterSeed", c.master_seed},
          {"output", c.output},
          {"survivalQuantile", c.survival_quantile}};
}

inline ExperimentConfig experiment_config_from_json(const nlohmann::json& j) {
  static const std::vector<std::string> keys{"graph",  "shareGraph", "kRange",     "variant", "alice",
                                             "bob",    "trials",     "maxRounds",  "masterSeed",
                                             "output", "survivalQuantile"};
  ExperimentConfig c;
  try {
    if (!j.is_object()) throw ConfigError("config must be a JSON object");
    for (auto it = j.begin(); it != j.end(); ++it)
      if (std::find(keys.begin(), keys.end(), it.key()) == keys.end())
        throw ConfigError("unknown config key '" + it.key() + "'");
    c.graph = j.value("graph", c.graph);
    c.share_graph = j.value("shareGraph", c.share_graph);
    if (j.contains("kRange")) {
      const auto& r = j.at("kRange");
      if (r.is_number_integer()) {
        c.k_min = c.k_max = r.get<Colour>();
      } else {
        c.k_min = r.at("min").get<Colour>();
        c.k_max = r.at("max").get<Colour>();
      }
    }
    if (j.contains("variant")) c.variant = parse_variant(j.at("variant").get<std::string>());
    auto strategy = [](const nlohmann::json& s) {
      StrategySpec spec;
      if (s.is_string()) {
        spec.name = s.get<std::string>();
      } else {
        spec.name = s.at("name").get<std::string>();
        spec.params = s.value("params", nlohmann::json::object());
      }
      return spec;
    };
    if (j.contains("alice")) c.alice = strategy(j.at("alice"));
    if (j.contains("bob")) c.bob = strategy(j.at("bob"));
    c.trials = j.value("trials", c.trials);
    c.max_rounds = j.value("maxRounds", c.max_rounds);
    c.master_seed = j.value("masterSeed", c.master_seed);
    c.output = j.value("output", c.output);
    c.survival_quantile = j.value("survivalQuantile", c.survival_quantile);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("malformed config: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  c.validate();
  return c;
}

inline ExperimentConfig load_experiment_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("config " + path + " is not valid JSON: " + e.what());
  }
  return experiment_config_from_json(j);
}

struct TrialRecord {
  std::size_t trial_index = 0;
  std::uint64_t seed = 0;
  Colour k = 0;
  Winner winner = Winner::None;
  std::size_t termination_round = 0;
  std::size_t moves_played = 0;
  bool fault = false;
  std::string fault_reason;
};

/// Graph seed depends only on the trial, so every k sees the same graph.
inline std::uint64_t graph_seed(const ExperimentConfig& c, std::size_t trial) {
  return derive_seed(c.master_seed, {0, c.share_graph ? 0 : static_cast<std::uint64_t>(trial)});
}

inline std::uint64_t game_seed(const ExperimentConfig& c, std::size_t trial, Colour k) {
  return derive_seed(c.master_seed, {1, static_cast<std::uint64_t>(trial), static_cast<std::uint64_t>(k)});
}

inline TrialRecord run_trial(const ExperimentConfig& c, const GraphSpec& spec, std::size_t trial, Colour k) {
  TrialRecord rec;
  rec.trial_index = trial;
  rec.k = k;
  rec.seed = game_seed(c, trial, k);
  try {
    auto graph = std::make_shared<const Graph>(spec.instantiate(graph_seed(c, trial)));
    auto alice = make_strategy(c.alice, graph, k, c.variant);
    auto bob = make_strategy(c.bob, graph, k, c.variant);
    const auto out = play_game(graph, k, *alice, *bob, c.variant, c.max_rounds, rec.seed, false);
    rec.winner = out.winner;
    rec.termination_round = out.termination_round;
    rec.moves_played = out.moves_played;
    rec.fault = out.fault();
    rec.fault_reason = out.fault_reason;
  } catch (const ConfigError&) {
    throw;
  } catch (const std::exception& e) {
    // Setup failures (an unlucky graph, an oversized solve) are per-trial faults.
    rec.fault = true;
    rec.fault_reason = e.what();
  }
  return rec;
}

/// Every (k, trial) cell, ordered by k then trial index regardless of jobs.
inline std::vector<TrialRecord> run_experiment(const ExperimentConfig& c, unsigned jobs = 1) {
  c.validate();
  const auto spec = parse_graph_spec(c.graph);
  const auto ks = c.ks();
  const std::size_t cells = ks.size() * c.trials;
  std::vector<TrialRecord> out(cells);
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::atomic<bool> failed{false};
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= cells || failed.load()) return;
      try {
        out[i] = run_trial(c, spec, i % c.trials, ks[i / c.trials]);
      } catch (...) {
        if (!failed.exchange(true)) error = std::current_exception();
        return;
      }
    }
  };
  jobs = std::max(1u, jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (error) std::rethrow_exception(error);
  return out;
}

struct KSummary {
  Colour k = 0;
  std::size_t trials = 0;
  std::size_t alice_wins = 0;
  std::size_t bob_wins = 0;
  std::size_t faults = 0;
  std::map<std::size_t, std::size_t> bob_wins_by_round;  // round -> Bob wins ending in it

  double alice_survival() const { return trials ? static_cast<double>(alice_wins) / static_cast<double>(trials) : 0.0; }
  double bob_win_rate() const { return trials ? static_cast<double>(bob_wins) / static_cast<double>(trials) : 0.0; }
  double bob_win_rate_by(std::size_t round) const {
    std::size_t w = 0;
    for (auto [r, c] : bob_wins_by_round)
      if (r <= round) w += c;
    return trials ? static_cast<double>(w) / static_cast<double>(trials) : 0.0;
  }
};

inline std::vector<KSummary> summarize(const std::vector<TrialRecord>& table) {
  std::map<Colour, KSummary> by_k;
  for (const auto& r : table) {
    auto& s = by_k[r.k];
    s.k = r.k;
    ++s.trials;
    if (r.fault) ++s.faults;
    if (r.winner == Winner::Alice) ++s.alice_wins;
    if (r.winner == Winner::Bob) {
      ++s.bob_wins;
      ++s.bob_wins_by_round[r.termination_round];
    }
  }
  std::vector<KSummary> out;
  for (auto& [k, s] : by_k) out.push_back(s);
  return out;
}

struct ThresholdEstimate {
  std::optional<Colour> k_hat;  // smallest k whose survival reaches the quantile
  bool censored = true;
  double quantile = 0.5;
  std::vector<KSummary> curve;
};

inline ThresholdEstimate estimate_threshold(const std::vector<TrialRecord>& table, double quantile = 0.5) {
  ThresholdEstimate t;
  t.quantile = quantile;
  t.curve = summarize(table);
  for (const auto& s : t.curve)
    if (s.alice_survival() >= quantile) {
      t.k_hat = s.k;
      t.censored = false;
      break;
    }
  return t;
}

inline ThresholdEstimate estimate_threshold(const ExperimentConfig& c, unsigned jobs = 1) {
  return estimate_threshold(run_experiment(c, jobs), c.survival_quantile);
}

inline std::string to_csv(const std::vector<TrialRecord>& table) {
  std::ostringstream os;
  os << "trialIndex,seed,k,winner,terminationRound,movesPlayed,fault\n";
  for (const auto& r : table)
    os << r.trial_index << ',' << r.seed << ',' << r.k << ',' << to_string(r.winner) << ',' << r.termination_round
       << ',' << r.moves_played << ',' << (r.fault ? 1 : 0) << '\n';
  return os.str();
}

inline nlohmann::json summary_json(const std::vector<TrialRecord>& table, const ExperimentConfig& c) {
  const auto t = estimate_threshold(table, c.survival_quantile);
  nlohmann::json per_k = nlohmann::json::array();
  for (const auto& s : t.curve) {
    nlohmann::json rounds = nlohmann::json::object();
    for (auto [r, n] : s.bob_wins_by_round) rounds[std::to_string(r)] = n;
    per_k.push_back({{"k", s.k},
                     {"trials", s.trials},
                     {"aliceWins", s.alice_wins},
                     {"bobWins", s.bob_wins},
                     {"faults", s.faults},
                     {"aliceSurvival", s.alice_survival()},
                     {"bobWinRate", s.bob_win_rate()},
                     {"bobWinsByRound", rounds}});
  }
  nlohmann::json threshold = {{"quantile", t.quantile}, {"censored", t.censored}};
  threshold["kHat"] = t.k_hat ? nlohmann::json(*t.k_hat) : nlohmann::json(nullptr);
  return {{"version", kVersion}, {"config", to_json(c)}, {"perK", per_k}, {"threshold", threshold}};
}

class OutputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline std::string csv_path(const std::string& prefix) { return prefix + ".csv"; }
inline std::string summary_path(const std::string& prefix) { return prefix + ".summary.json"; }

/// Fails early if either output file cannot be created.
inline void preflight_outputs(const std::string& prefix) {
  for (const auto& p : {csv_path(prefix), summary_path(prefix)}) {
    std::ofstream f(p, std::ios::app);
    if (!f) throw OutputError("cannot write " + p);
  }
}

inline void emit_outputs(const std::vector<TrialRecord>& table, const ExperimentConfig& c, const std::string& prefix) {
  if (table.empty()) throw std::invalid_argument("no trial records to write");
  std::ofstream csv(csv_path(prefix), std::ios::trunc | std::ios::binary);
  std::ofstream js(summary_path(prefix), std::ios::trunc | std::ios::binary);
  if (!csv || !js) throw OutputError("cannot write outputs under " + prefix);
  csv << to_csv(table);
  js << summary_json(table, c).dump(2) << '\n';
  if (!csv || !js) throw OutputError("write failed under " + prefix);
}

}  // namespace egc

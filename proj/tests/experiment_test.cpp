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

#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "egc/experiment.hpp"

namespace egc {
namespace {

ExperimentConfig cfg(const std::string& graph, Colour kmin, Colour kmax, std::size_t trials) {
  ExperimentConfig c;
  c.graph = graph;
  c.k_min = kmin;
  c.k_max = kmax;
  c.trials = trials;
  c.alice = {"greedy-first-fit", nlohmann::json::object()};
  c.bob = {"greedy-first-fit", nlohmann::json::object()};
  return c;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::filesystem::path scratch(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("egc_experiment_test_" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

TEST(Experiment, SingleVertexOneColourBobWinsInRoundTwo) {
  const auto table = run_experiment(cfg("empty:1", 1, 1, 10));
  ASSERT_EQ(table.size(), 10u);
  for (const auto& r : table) {
    EXPECT_EQ(r.winner, Winner::Bob);
    EXPECT_EQ(r.termination_round, 2u);
    EXPECT_FALSE(r.fault);
  }
}

TEST(Experiment, SingleVertexTwoColoursAliceSurvives) {
  const auto table = run_experiment(cfg("empty:1", 2, 2, 10));
  for (const auto& r : table) {
    EXPECT_EQ(r.winner, Winner::Alice);
    EXPECT_EQ(r.termination_round, 0u);
  }
  const auto s = summarize(table);
  ASSERT_EQ(s.size(), 1u);
  EXPECT_EQ(s[0].alice_wins, 10u);
  EXPECT_DOUBLE_EQ(s[0].alice_survival(), 1.0);
}

TEST(Threshold, SingleVertex) {
  const auto t = estimate_threshold(cfg("empty:1", 1, 3, 5));
  EXPECT_FALSE(t.censored);
  EXPECT_EQ(t.k_hat, Colour{2});
  EXPECT_EQ(t.curve.size(), 3u);
}

TEST(Threshold, CensoredWhenNoCrossing) {
  const auto t = estimate_threshold(cfg("empty:1", 1, 1, 5));
  EXPECT_TRUE(t.censored);
  EXPECT_FALSE(t.k_hat.has_value());
  const auto j = summary_json(run_experiment(cfg("empty:1", 1, 1, 5)), cfg("empty:1", 1, 1, 5));
  EXPECT_TRUE(j["threshold"]["kHat"].is_null());
  EXPECT_TRUE(j["threshold"]["censored"].get<bool>());
}

TEST(Threshold, StarFiveGreedyBothWithSolverTables) {
  auto c = cfg("star:5", 2, 4, 3);
  c.variant = RuleVariant::GreedyBoth;
  c.alice = {"solver", nlohmann::json::object()};
  c.bob = {"solver", nlohmann::json::object()};
  c.max_rounds = 20;
  const auto t = estimate_threshold(c);
  EXPECT_EQ(t.k_hat, Colour{3});
  EXPECT_EQ(t.curve[0].bob_wins, 3u);
}

TEST(Threshold, QuantileIsConfigurable) {
  std::vector<TrialRecord> table;
  for (std::size_t i = 0; i < 4; ++i) table.push_back({i, 0, 5, i < 3 ? Winner::Alice : Winner::Bob, 0, 0, false, ""});
  for (std::size_t i = 0; i < 4; ++i) table.push_back({i, 0, 6, Winner::Alice, 0, 0, false, ""});
  EXPECT_EQ(estimate_threshold(table, 0.5).k_hat, Colour{5});
  EXPECT_EQ(estimate_threshold(table, 0.9).k_hat, Colour{6});
}

TEST(Output, OneTrialOneRow) {
  const auto table = run_experiment(cfg("path:3", 3, 3, 1));
  const auto csv = to_csv(table);
  std::istringstream in(csv);
  std::string header, row, extra;
  std::getline(in, header);
  std::getline(in, row);
  EXPECT_EQ(header, "trialIndex,seed,k,winner,terminationRound,movesPlayed,fault");
  EXPECT_FALSE(row.empty());
  EXPECT_FALSE(std::getline(in, extra));
  EXPECT_EQ(row.rfind("0,", 0), 0u);
}

TEST(Output, SummaryAgreesWithRows) {
  auto c = cfg("gnp:25:0.5", 6, 9, 12);
  c.alice = {"random-legal", nlohmann::json::object()};
  c.bob = {"paper-odd", nlohmann::json::object()};
  const auto table = run_experiment(c, 3);
  const auto j = summary_json(table, c);
  EXPECT_EQ(j["version"], kVersion);
  EXPECT_EQ(j["config"], to_json(c));
  ASSERT_EQ(j["perK"].size(), 4u);
  for (const auto& row : j["perK"]) {
    const auto k = row["k"].get<Colour>();
    std::size_t alice = 0, bob = 0, faults = 0, trials = 0;
    for (const auto& r : table)
      if (r.k == k) {
        ++trials;
        alice += r.winner == Winner::Alice;
        bob += r.winner == Winner::Bob;
        faults += r.fault;
      }
    EXPECT_EQ(row["trials"], trials);
    EXPECT_EQ(row["aliceWins"], alice);
    EXPECT_EQ(row["bobWins"], bob);
    EXPECT_EQ(row["faults"], faults);
    std::size_t by_round = 0;
    for (auto& [r, n] : row["bobWinsByRound"].items()) by_round += n.get<std::size_t>();
    EXPECT_EQ(by_round, bob);
  }
}

TEST(Output, EmitsBothFilesAndPreflightFails) {
  const auto dir = scratch("emit");
  auto c = cfg("empty:1", 1, 2, 2);
  const auto prefix = (dir / "run").string();
  preflight_outputs(prefix);
  emit_outputs(run_experiment(c), c, prefix);
  EXPECT_EQ(slurp(csv_path(prefix)), to_csv(run_experiment(c)));
  const auto j = nlohmann::json::parse(slurp(summary_path(prefix)));
  EXPECT_EQ(j["threshold"]["kHat"], 2);
  EXPECT_THROW(preflight_outputs((dir / "missing" / "run").string()), OutputError);
}

TEST(Determinism, SameConfigSameBytes) {
  auto c = cfg("gnp:31:0.5", 8, 10, 10);
  c.alice = {"paper-alice", nlohmann::json::object()};
  c.bob = {"paper-odd", nlohmann::json::object()};
  const auto a = to_csv(run_experiment(c, 1));
  EXPECT_EQ(a, to_csv(run_experiment(c, 1)));
  EXPECT_EQ(a, to_csv(run_experiment(c, 4)));
  c.master_seed = 2;
  EXPECT_NE(a, to_csv(run_experiment(c, 1)));
}

TEST(Determinism, RandomStrategiesAcrossJobCounts) {
  auto c = cfg("gnp:20:0.3", 4, 6, 15);
  c.alice = {"random-legal", nlohmann::json::object()};
  c.bob = {"random-legal", nlohmann::json::object()};
  EXPECT_EQ(to_csv(run_experiment(c, 1)), to_csv(run_experiment(c, 7)));
}

TEST(Seeds, GraphSharedAcrossKAndOptionallyAcrossTrials) {
  auto c = cfg("gnp:20:0.5", 3, 5, 4);
  EXPECT_NE(graph_seed(c, 0), graph_seed(c, 1));
  EXPECT_NE(game_seed(c, 0, 3), game_seed(c, 0, 4));
  c.share_graph = true;
  EXPECT_EQ(graph_seed(c, 0), graph_seed(c, 3));
  EXPECT_EQ(graph_seed(c, 2), derive_seed(c.master_seed, {0, 0}));
}

TEST(Faults, OversizedSolverIsRecordedPerTrial) {
  auto c = cfg("gnp:20:0.5", 3, 3, 2);
  c.bob = {"solver", nlohmann::json::object()};
  const auto table = run_experiment(c);
  for (const auto& r : table) {
    EXPECT_TRUE(r.fault);
    EXPECT_EQ(r.winner, Winner::None);
    EXPECT_FALSE(r.fault_reason.empty());
  }
}

TEST(Config, RoundTrip) {
  auto c = cfg("gnp:101:1/2", 15, 35, 7);
  c.variant = RuleVariant::GreedyBob;
  c.alice = {"paper-alice", {{"dangerThreshold", 12}}};
  c.bob = {"paper-odd", {{"target", 3}}};
  c.master_seed = 99;
  c.share_graph = true;
  const auto back = experiment_config_from_json(to_json(c));
  EXPECT_EQ(to_json(back), to_json(c));
}

TEST(Config, ShortForms) {
  const auto c = experiment_config_from_json({{"graph", "empty:1"}, {"kRange", 4}, {"alice", "random-legal"}});
  EXPECT_EQ(c.k_min, 4u);
  EXPECT_EQ(c.k_max, 4u);
  EXPECT_EQ(c.alice.name, "random-legal");
}

TEST(Config, Rejections) {
  using nlohmann::json;
  EXPECT_THROW(experiment_config_from_json({{"colour", 3}}), ConfigError);
  EXPECT_THROW(experiment_config_from_json({{"kRange", {{"min", 5}, {"max", 3}}}}), ConfigError);
  EXPECT_THROW(experiment_config_from_json({{"trials", 0}}), ConfigError);
  EXPECT_THROW(experiment_config_from_json({{"alice", "nobody"}}), ConfigError);
  EXPECT_THROW(experiment_config_from_json({{"variant", "lazy"}}), ConfigError);
  EXPECT_THROW(experiment_config_from_json({{"trials", "many"}}), ConfigError);
  EXPECT_THROW(experiment_config_from_json(json::array()), ConfigError);
  EXPECT_THROW(load_experiment_config("/nonexistent/config.json"), ConfigError);
}

TEST(GraphSpecs, ParseAndInstantiate) {
  EXPECT_EQ(parse_graph_spec("star:5").instantiate(0), make_named(NamedKind::Star, 5));
  EXPECT_EQ(parse_graph_spec("cycle:6").instantiate(0).edge_count(), 6u);
  const auto g = parse_graph_spec("gnp:40:1/2");
  EXPECT_TRUE(g.random());
  EXPECT_EQ(g.instantiate(7), gnp_generate({40, 0.5, 7}));
  for (const char* bad : {"", "star", "star:x", "gnp:10", "gnp:10:1.5", "blob:3", "gnp:-3:0.5"})
    EXPECT_THROW(parse_graph_spec(bad), ConfigError) << bad;
}

TEST(GraphSpecs, EdgeListFile) {
  const auto dir = scratch("file");
  const auto path = (dir / "g.txt").string();
  {
    std::ofstream out(path);
    write_edge_list(out, make_named(NamedKind::Path, 4));
  }
  EXPECT_EQ(parse_graph_spec("file:" + path).instantiate(0), make_named(NamedKind::Path, 4));
}

}  // namespace
}  // namespace egc

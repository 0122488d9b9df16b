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

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "egc/solver.hpp"
#include "egc/strategies/alice_paper.hpp"
#include "egc/strategies/baseline.hpp"
#include "egc/strategies/bob_general.hpp"
#include "egc/strategies/bob_odd.hpp"
#include "egc/strategies/params.hpp"

namespace egc {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct StrategySpec {
  std::string name = "greedy-first-fit";
  nlohmann::json params = nlohmann::json::object();
};

inline const std::vector<std::string>& strategy_names() {
  static const std::vector<std::string> names{"greedy-first-fit", "random-legal", "paper-alice",
                                              "paper-odd",        "paper-even",   "solver"};
  return names;
}

/**
 * Reads a parameter block. An optional "fromFractions" object
 * {epsilon, beta, delta, K, multiplicity} is resolved at n first; any
 * explicit integer key then overrides the derived value.
 */
inline StrategyParams params_from_json(const nlohmann::json& j, std::size_t n) {
  StrategyParams p;
  if (j.contains("fromFractions")) {
    const auto& f = j.at("fromFractions");
    p = StrategyParams::from_fractions(n, f.value("epsilon", 0.1), f.value("beta", 0.02), f.value("delta", 0.01),
                                       f.value("K", std::size_t{1}), f.value("multiplicity", std::size_t{4}));
  }
  auto get = [&](const char* key, auto& field) {
    if (j.contains(key)) field = j.at(key).get<std::decay_t<decltype(field)>>();
  };
  get("epsilon", p.epsilon);
  get("dangerThreshold", p.danger_threshold);
  get("nearlyFullThreshold", p.nearly_full_threshold);
  get("nearlyFullInclusive", p.nearly_full_inclusive);
  get("smallColorCutoff", p.small_colour_cutoff);
  get("blockDistance", p.block_distance);
  get("blockBudget", p.block_budget);
  get("reserveMissing", p.reserve_missing);
  get("blockingMinUnplayed", p.blocking_min_unplayed);
  get("multiplicity", p.multiplicity);
  get("killSetSize", p.kill_set_size);
  get("killMinUnplayed", p.kill_min_unplayed);
  return p;
}

/// Builds a fresh strategy instance for one game. "solver" solves the
/// instance exactly first, so it is only usable on tiny graphs.
inline std::unique_ptr<Strategy> make_strategy(const StrategySpec& spec, const std::shared_ptr<const Graph>& graph,
                                               Colour k, RuleVariant variant) {
  const auto& j = spec.params;
  try {
    if (spec.name == "greedy-first-fit") return std::make_unique<GreedyFirstFit>();
    if (spec.name == "random-legal") return std::make_unique<RandomLegal>();
    if (spec.name == "solver") {
      SolverOptions opt;
      opt.state_cap = j.value("stateCap", opt.state_cap);
      auto res = std::make_shared<const SolveResult>(solve_eternal(*graph, k, variant, opt));
      return std::make_unique<SolverStrategy>(std::move(res));
    }
    const auto params = params_from_json(j, graph->n());
    params.validate(k);
    if (spec.name == "paper-alice") return std::make_unique<PaperAlice>(params);
    if (spec.name == "paper-odd") {
      const auto target = j.value("target", Vertex{0});
      if (target >= graph->n()) throw ConfigError("paper-odd target out of range");
      return std::make_unique<PaperBobOdd>(target, params);
    }
    if (spec.name == "paper-even") {
      const auto l = j.value("l", std::size_t{2});
      const auto kprime = j.value("kprime", std::size_t{2});
      const auto colours = j.value("numColors", static_cast<std::size_t>(k));
      if (colours > k) throw ConfigError("paper-even numColors exceeds k");
      return std::make_unique<PaperBobGeneral>(bob_even_setup(*graph, l, kprime, colours), params);
    }
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("bad parameters for strategy '" + spec.name + "': " + e.what());
  } catch (const std::invalid_argument& e) {
    throw ConfigError("bad parameters for strategy '" + spec.name + "': " + e.what());
  }
  throw ConfigError("unknown strategy '" + spec.name + "'");
}

}  // namespace egc

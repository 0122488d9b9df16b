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

#include <string>
#include <vector>

#include "egc/rng.hpp"
#include "egc/strategies/common.hpp"

namespace egc {

enum class BaselinePolicy { GreedyFirstFit, RandomLegal };

/// Lowest-index unplayed vertex, smallest legal colour.
class GreedyFirstFit final : public Strategy {
 public:
  std::string name() const override { return "greedy-first-fit"; }
  Move choose(const GameState& s) override { return detail::first_fit(s); }
};

/// Uniform over all legal (vertex, colour) pairs; a stuck vertex is chosen
/// only when nothing else is available.
class RandomLegal final : public Strategy {
 public:
  std::string name() const override { return "random-legal"; }
  void begin_game(const GameState&, std::uint64_t seed) override { rng_.seed(seed); }
  Move choose(const GameState& s) override {
    std::vector<Move> options;
    for (Vertex v = 0; v < s.n(); ++v) {
      if (s.is_played(v)) continue;
      for (Colour c : s.legal_colors(v)) options.push_back({v, c});
    }
    if (options.empty()) return detail::first_fit(s);
    return options[uniform_below(rng_, options.size())];
  }

 private:
  Rng rng_{0};
};

/// Stateless form of the baselines for a single position.
inline Move baseline_move(const GameState& s, BaselinePolicy policy, std::uint64_t seed) {
  if (policy == BaselinePolicy::GreedyFirstFit) return detail::first_fit(s);
  RandomLegal r;
  r.begin_game(s, seed);
  return r.choose(s);
}

}  // namespace egc

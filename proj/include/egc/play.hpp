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

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "egc/game.hpp"
#include "egc/rng.hpp"
#include "egc/strategy.hpp"

namespace egc {

enum class Winner : std::uint8_t { Alice, Bob, None };

inline std::string_view to_string(Winner w) {
  switch (w) {
    case Winner::Alice: return "alice";
    case Winner::Bob: return "bob";
    case Winner::None: return "none";
  }
  return "?";
}

struct GameOutcome {
  Winner winner = Winner::None;
  // Set when a strategy produced an illegal move; winner is then None.
  std::optional<Player> fault_by;
  std::string fault_reason;
  // Round in which Bob won (or the fault happened); 0 when Alice survived.
  std::size_t termination_round = 0;
  std::size_t rounds_completed = 0;
  std::size_t moves_played = 0;
  std::vector<MoveRecord> transcript;

  bool fault() const { return fault_by.has_value(); }
};

struct PlayOptions {
  std::size_t max_rounds = 10;
  bool keep_transcript = true;
};

/**
 * Runs one game until a chosen vertex has no legal colour (Bob wins), a
 * strategy emits an illegal move (fault), or max_rounds complete (Alice
 * survives). Strategies receive seeds derived from `seed`.
 */
inline GameOutcome play_game(std::shared_ptr<const Graph> graph, Colour k, Strategy& alice, Strategy& bob,
                             RuleVariant variant, std::size_t max_rounds, std::uint64_t seed,
                             bool keep_transcript = true) {
  if (max_rounds < 1) throw std::invalid_argument("max_rounds must be at least 1");
  GameState state(std::move(graph), k, variant);
  GameOutcome out;
  alice.begin_game(state, derive_seed(seed, {0}));
  bob.begin_game(state, derive_seed(seed, {1}));

  auto fault = [&](Player who, std::string why) {
    out.winner = Winner::None;
    out.fault_by = who;
    out.fault_reason = std::move(why);
    out.termination_round = state.round();
    out.rounds_completed = state.round() - 1;
    out.moves_played = state.total_moves();
    return out;
  };

  if (state.n() == 0) {
    out.winner = Winner::Alice;
    out.rounds_completed = max_rounds;
    return out;
  }

  while (state.round() <= max_rounds) {
    const Player mover = state.to_move();
    Strategy& strat = mover == Player::Alice ? alice : bob;
    Move m;
    try {
      m = strat.choose(state);
    } catch (const std::exception& e) {
      return fault(mover, std::string("strategy threw: ") + e.what());
    }
    if (m.vertex >= state.n()) return fault(mover, "vertex out of range");
    if (state.is_played(m.vertex)) return fault(mover, "vertex already played this round");

    MoveRecord rec{state.round(), state.moves_in_round(), mover, m.vertex, m.colour};
    if (state.smallest_admissible(m.vertex) == kNoColour) {
      rec.colour = kNoColour;
      if (keep_transcript) out.transcript.push_back(rec);
      out.winner = Winner::Bob;
      out.termination_round = state.round();
      out.rounds_completed = state.round() - 1;
      out.moves_played = state.total_moves();
      return out;
    }
    if (!state.is_legal(m.vertex, m.colour))
      return fault(mover, "illegal colour " + std::to_string(m.colour) + " for vertex " + std::to_string(m.vertex));

    state.apply(m.vertex, m.colour);
    if (keep_transcript) out.transcript.push_back(rec);
    alice.observe(state, rec);
    bob.observe(state, rec);
  }
  out.winner = Winner::Alice;
  out.rounds_completed = max_rounds;
  out.moves_played = state.total_moves();
  return out;
}

inline GameOutcome play_game(const Graph& graph, Colour k, Strategy& alice, Strategy& bob, RuleVariant variant,
                             std::size_t max_rounds, std::uint64_t seed) {
  return play_game(std::make_shared<const Graph>(graph), k, alice, bob, variant, max_rounds, seed);
}

}  // namespace egc

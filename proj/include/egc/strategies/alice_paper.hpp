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

#include "egc/strategies/common.hpp"
#include "egc/strategies/params.hpp"
#include "egc/strategies/round_book.hpp"

namespace egc {

/// Which rule produced a move; kept for audit replays.
struct Decision {
  std::size_t round = 0;
  std::size_t index = 0;  // move index within the round
  int priority = 0;
  Move move;
};

/**
 * Alice's upper-bound strategy. At each of her moves the first applicable
 * rule wins, and the chosen vertex gets its smallest legal colour:
 *  1. an unplayed vertex missing fewer than nearly_full_threshold colours in
 *     its closed neighbourhood;
 *  2. if Bob's last move this round was at a non-dangerous w, a playable
 *     mirror of w with respect to the current danger set;
 *  3. the lowest playable vertex.
 */
class PaperAlice final : public Strategy {
 public:
  explicit PaperAlice(StrategyParams params = {}) : params_(params) {}

  std::string name() const override { return "paper-alice"; }

  void begin_game(const GameState& initial, std::uint64_t) override {
    params_.validate(initial.k());
    book_ = RoundBook(initial.graph(), params_.danger_threshold);
    book_.start_round(1);
    log_.clear();
  }

  Move choose(const GameState& s) override {
    sync_round(s);
    auto decide = [&](int prio, Move m) {
      log_.push_back({s.round(), s.moves_in_round(), prio, m});
      return m;
    };

    for (Vertex v = 0; v < s.n(); ++v)
      if (!s.is_played(v) && nearly_full(s, v)) return decide(1, detail::smallest_on(s, v));

    if (auto w = book_.last_bob(); w && !book_.danger().test(*w)) {
      if (auto m = mirror_move(s, *w)) return decide(2, detail::smallest_on(s, *m));
    }
    return decide(3, detail::first_fit(s));
  }

  void observe(const GameState& after, const MoveRecord& m) override {
    if (m.round != book_.round()) book_.start_round(m.round);
    book_.record(m.player, m.vertex);
    if (after.round() != book_.round()) book_.start_round(after.round());
  }

  bool nearly_full(const GameState& s, Vertex v) const {
    const auto missing = s.missing_in_closed(v);
    return params_.nearly_full_inclusive ? missing <= params_.nearly_full_threshold
                                         : missing < params_.nearly_full_threshold;
  }

  /// Mirror of w w.r.t. the danger set, restricted to playable vertices.
  std::optional<Vertex> mirror_move(const GameState& s, Vertex w) const {
    VertexSet excluded = s.played();
    for (Vertex v = 0; v < s.n(); ++v)
      if (!excluded.test(v) && s.smallest_admissible(v) == kNoColour) excluded.set(v);
    return mirror_of(s.graph(), w, book_.danger(), excluded);
  }

  const RoundBook& book() const { return book_; }
  const std::vector<Decision>& decisions() const { return log_; }
  const StrategyParams& params() const { return params_; }

 private:
  void sync_round(const GameState& s) {
    if (s.round() != book_.round()) book_.start_round(s.round());
  }

  StrategyParams params_;
  RoundBook book_;
  std::vector<Decision> log_;
};

}  // namespace egc

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

#include <algorithm>
#include <deque>
#include <limits>
#include <string>
#include <vector>

#include "egc/strategies/alice_paper.hpp"
#include "egc/strategies/common.hpp"
#include "egc/strategies/params.hpp"

namespace egc {

inline constexpr std::size_t kNotABlock = std::numeric_limits<std::size_t>::max();

/**
 * How far the pair {a, b} is from locking a colour out of N[target]: the
 * number of uncoloured vertices of N[target] outside N[a] and N[b].
 * kNotABlock if a or b already carries a colour present in N[target].
 */
inline std::size_t double_block_distance(const GameState& s, Vertex a, Vertex b, Vertex target) {
  for (Vertex x : {a, b})
    if (s.colour(x) != kNoColour && s.closed_count(target, s.colour(x)) > 0) return kNotABlock;
  const auto& g = s.graph();
  std::size_t d = 0;
  g.closed_neighbourhood(target).for_each([&](std::size_t u) {
    if (s.colour(static_cast<Vertex>(u)) == kNoColour && !g.closed_neighbourhood(a).test(u) &&
        !g.closed_neighbourhood(b).test(u))
      ++d;
  });
  return d;
}

/**
 * Bob's odd-n strategy: fill N[target] with every colour during round 1,
 * then pick the target (now stuck) at his first move of round 2.
 *
 * Round-1 priorities, highest first:
 *  1. a colour seen at least twice outside N[target] but not inside goes in;
 *  2. queued blocking sequences against pairs close to a double block, while
 *     enough colours are globally unused and enough of N[target] is open;
 *  3. colours seen exactly once outside N[target], oldest first, go in;
 *  4. a globally unused colour goes into N[target];
 *  5. first fit anywhere.
 * From round 2 on he takes any stuck vertex (the target first) and
 * otherwise plays first fit.
 */
class PaperBobOdd final : public Strategy {
 public:
  struct BlockTask {
    Vertex a = 0;
    Vertex b = 0;
  };

  explicit PaperBobOdd(Vertex target = 0, StrategyParams params = {}) : target_(target), params_(params) {}

  std::string name() const override { return "paper-odd"; }

  void begin_game(const GameState& initial, std::uint64_t) override {
    params_.validate(initial.k());
    if (target_ >= initial.n()) throw std::invalid_argument("target vertex out of range");
    first_seen_.assign(initial.k() + 1, std::numeric_limits<std::size_t>::max());
    claimed_ = VertexSet(initial.n());
    tasks_.clear();
    log_.clear();
    blocks_called_ = 0;
  }

  void observe(const GameState& after, const MoveRecord& m) override {
    if (m.colour != kNoColour && first_seen_[m.colour] == std::numeric_limits<std::size_t>::max())
      first_seen_[m.colour] = after.total_moves();
  }

  Move choose(const GameState& s) override {
    auto decide = [&](int prio, Move m) {
      log_.push_back({s.round(), s.moves_in_round(), prio, m});
      return m;
    };
    const VertexSet& closed = s.graph().closed_neighbourhood(target_);
    if (s.round() >= 2) return decide(6, detail::winning_or_first_fit(s, &closed));

    const VertexSet open_target = closed - s.played();

    if (auto m = rule_repeated_outside(s, open_target)) return decide(1, *m);
    if (blocking_active(s, open_target)) {
      discover_pairs(s, open_target);
      if (auto m = next_blocking_move(s, open_target)) return decide(2, *m);
    }
    if (auto m = rule_single_outside(s, open_target)) return decide(3, *m);
    if (auto m = rule_new_colour(s, open_target)) return decide(4, *m);
    return decide(5, detail::first_fit(s));
  }

  // Rule 1: colours absent from N[target] that occur at least twice elsewhere.
  std::optional<Move> rule_repeated_outside(const GameState& s, const VertexSet& open_target) const {
    std::vector<Colour> qualifying;
    for (Colour c = 1; c <= s.k(); ++c)
      if (inside(s, c) == 0 && s.colour_total(c) >= 2) qualifying.push_back(c);
    if (qualifying.empty()) return std::nullopt;
    for (auto u = open_target.first(); u != Bitset::npos; u = open_target.next(u + 1))
      for (Colour c : qualifying)
        if (s.is_legal(static_cast<Vertex>(u), c)) return Move{static_cast<Vertex>(u), c};
    return std::nullopt;
  }

  bool blocking_active(const GameState& s, const VertexSet& open_target) const {
    return s.k() - s.colours_in_use() >= params_.reserve_missing &&
           open_target.count() >= params_.blocking_min_unplayed;
  }

  // Queue every unclaimed pair of unplayed outside vertices within
  // block_distance of a double block.
  void discover_pairs(const GameState& s, const VertexSet& open_target) {
    const auto& g = s.graph();
    const VertexSet& closed = g.closed_neighbourhood(target_);
    std::vector<Vertex> cand;
    for (Vertex v = 0; v < s.n(); ++v)
      if (!s.is_played(v) && !closed.test(v) && !claimed_.test(v)) cand.push_back(v);
    for (std::size_t i = 0; i < cand.size(); ++i) {
      if (claimed_.test(cand[i])) continue;
      const auto& na = g.closed_neighbourhood(cand[i]);
      for (std::size_t j = i + 1; j < cand.size(); ++j) {
        if (claimed_.test(cand[j])) continue;
        if (open_target.count_outside_union(na, g.closed_neighbourhood(cand[j])) <= params_.block_distance) {
          tasks_.push_back({cand[i], cand[j]});
          claimed_.set(cand[i]);
          claimed_.set(cand[j]);
          ++blocks_called_;
          break;
        }
      }
    }
  }

  // Work through the queue in call order; finished tasks are dropped, a
  // task whose next step is currently illegal is passed over.
  std::optional<Move> next_blocking_move(const GameState& s, const VertexSet& open_target) {
    for (auto it = tasks_.begin(); it != tasks_.end();) {
      bool done = false;
      if (auto m = task_step(s, *it, open_target, done)) return m;
      it = done ? tasks_.erase(it) : std::next(it);
    }
    return std::nullopt;
  }

  std::optional<Move> task_step(const GameState& s, const BlockTask& t, const VertexSet& open_target,
                                bool& done) const {
    auto needs_injection = [&](Vertex x) { return s.colour(x) != kNoColour && inside(s, s.colour(x)) == 0; };
    // If Alice coloured b, its colour goes in before a's.
    for (Vertex x : {t.b, t.a}) {
      if (needs_injection(x)) {
        if (auto u = detail::place_in(s, open_target, s.colour(x))) return Move{*u, s.colour(x)};
        return std::nullopt;
      }
    }
    for (Vertex x : {t.a, t.b}) {
      if (s.is_played(x)) continue;
      for (Colour c = 1; c <= s.k(); ++c)
        if (s.colour_total(c) == 0 && s.is_legal(x, c)) return Move{x, c};
      return std::nullopt;
    }
    done = true;
    return std::nullopt;
  }

  // Rule 3: colours seen exactly once outside N[target], oldest first.
  std::optional<Move> rule_single_outside(const GameState& s, const VertexSet& open_target) const {
    std::vector<Colour> once;
    for (Colour c = 1; c <= s.k(); ++c)
      if (inside(s, c) == 0 && s.colour_total(c) == 1) once.push_back(c);
    std::stable_sort(once.begin(), once.end(), [&](Colour a, Colour b) { return first_seen_[a] < first_seen_[b]; });
    for (Colour c : once)
      if (auto u = detail::place_in(s, open_target, c)) return Move{*u, c};
    return std::nullopt;
  }

  // Rule 4: a globally unused colour into N[target].
  std::optional<Move> rule_new_colour(const GameState& s, const VertexSet& open_target) const {
    for (auto u = open_target.first(); u != Bitset::npos; u = open_target.next(u + 1))
      for (Colour c = 1; c <= s.k(); ++c)
        if (s.colour_total(c) == 0 && s.is_legal(static_cast<Vertex>(u), c)) return Move{static_cast<Vertex>(u), c};
    return std::nullopt;
  }

  Vertex target() const { return target_; }
  const std::deque<BlockTask>& pending() const { return tasks_; }
  std::size_t blocks_called() const { return blocks_called_; }
  const std::vector<Decision>& decisions() const { return log_; }
  const StrategyParams& params() const { return params_; }

 private:
  std::size_t inside(const GameState& s, Colour c) const { return s.closed_count(target_, c); }

  Vertex target_;
  StrategyParams params_;
  std::vector<std::size_t> first_seen_;
  VertexSet claimed_;
  std::deque<BlockTask> tasks_;
  std::vector<Decision> log_;
  std::size_t blocks_called_ = 0;
};

}  // namespace egc

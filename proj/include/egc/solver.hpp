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
#include <bit>
#include <cmath>
#include <cstdint>
#include <deque>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "egc/game.hpp"
#include "egc/play.hpp"
#include "egc/strategy.hpp"

namespace egc {

class InfeasibleSolve : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SolverOptions {
  // Hard limit on distinct reachable positions; exceeding it is a refusal.
  std::size_t state_cap = 100'000'000;
  // Identify positions that differ by a relabelling of colours. Only sound
  // for the standard variant (greedy rules look at colour order), and
  // incompatible with witness extraction.
  bool colour_symmetry = false;
};

inline constexpr std::size_t kSolverMaxVertices = 12;
inline constexpr Colour kSolverMaxColours = 15;

/// Crude upper bound (k+1)^n * 2^n * 2 on the number of positions.
inline double state_space_estimate(std::size_t n, Colour k) {
  return std::pow(static_cast<double>(k) + 1.0, static_cast<double>(n)) * std::pow(2.0, static_cast<double>(n)) * 2.0;
}

namespace detail {

// Position key layout: 4 bits of colour per vertex, then the played-this-round
// mask, then the mover bit, then a first-round flag. The absolute round
// number is not part of the key: rules only distinguish round 1 from later
// rounds, and the mover bit carries the parity.
struct PositionCodec {
  std::size_t n = 0;
  Colour k = 0;

  Colour colour(std::uint64_t key, std::size_t v) const { return static_cast<Colour>((key >> (4 * v)) & 15u); }
  std::uint32_t played(std::uint64_t key) const {
    return static_cast<std::uint32_t>((key >> (4 * n)) & ((std::uint64_t{1} << n) - 1));
  }
  Player mover(std::uint64_t key) const { return static_cast<Player>((key >> (5 * n)) & 1u); }
  bool first_round(std::uint64_t key) const { return (key >> (5 * n + 1)) & 1u; }

  std::uint64_t make(const std::vector<Colour>& colours, std::uint32_t played, Player mover, bool first) const {
    std::uint64_t key = 0;
    for (std::size_t v = 0; v < n; ++v) key |= static_cast<std::uint64_t>(colours[v]) << (4 * v);
    key |= static_cast<std::uint64_t>(played) << (4 * n);
    key |= static_cast<std::uint64_t>(mover) << (5 * n);
    key |= static_cast<std::uint64_t>(first) << (5 * n + 1);
    return key;
  }

  std::uint64_t with_colour(std::uint64_t key, std::size_t v, Colour c) const {
    key &= ~(std::uint64_t{15} << (4 * v));
    return key | (static_cast<std::uint64_t>(c) << (4 * v));
  }

  // Relabel colours by order of first appearance over vertices 0..n-1.
  std::uint64_t canonical_colours(std::uint64_t key) const {
    Colour map[16] = {0};
    Colour next = 1;
    std::uint64_t out = key;
    for (std::size_t v = 0; v < n; ++v) {
      const Colour c = colour(key, v);
      if (c == kNoColour) continue;
      if (!map[c]) map[c] = next++;
      out = with_colour(out, v, map[c]);
    }
    return out;
  }

  std::uint64_t encode(const GameState& s) const {
    std::uint32_t played = 0;
    for (std::size_t v = 0; v < n; ++v)
      if (s.is_played(static_cast<Vertex>(v))) played |= std::uint32_t{1} << v;
    return make(s.colours(), played, s.to_move(), s.round() == 1);
  }
};

// Colours still available to v: bit c set for admissible c in 1..k.
inline std::uint32_t admissible_mask(const PositionCodec& codec, const std::vector<std::uint32_t>& adj,
                                     std::uint64_t key, std::size_t v) {
  std::uint32_t forbidden = std::uint32_t{1} << codec.colour(key, v);
  for (std::uint32_t m = adj[v]; m; m &= m - 1)
    forbidden |= std::uint32_t{1} << codec.colour(key, static_cast<std::size_t>(std::countr_zero(m)));
  const std::uint32_t palette = ((std::uint32_t{1} << (codec.k + 1)) - 1) & ~std::uint32_t{1};
  return palette & ~forbidden;
}

}  // namespace detail

/**
 * Result of solving the eternal game as a safety game on the finite graph
 * of positions. Besides the winner it keeps the explored positions, Bob's
 * attractor and a move table usable as a witness strategy for either side.
 */
class SolveResult {
 public:
  Winner winner = Winner::None;
  std::size_t states_explored = 0;
  std::size_t edges = 0;
  double state_estimate = 0.0;
  bool colour_symmetry = false;

  bool has_witness() const { return !colour_symmetry; }

  /// Table move for the player to move in `s`: a winning one when that
  /// player wins from `s`, otherwise a delaying one.
  Move move_for(const GameState& s) const {
    if (!has_witness()) throw std::logic_error("no witness table when colour symmetry is enabled");
    const auto key = codec_.encode(s);
    auto it = index_.find(key);
    if (it == index_.end()) throw std::logic_error("position not reached during solving");
    const auto code = best_[it->second];
    return {static_cast<Vertex>(code >> 4), static_cast<Colour>(code & 15u)};
  }

  bool bob_wins_from(const GameState& s) const {
    auto it = index_.find(key_of(s));
    if (it == index_.end()) throw std::logic_error("position not reached during solving");
    return bob_[it->second];
  }

  /// Re-applies one attractor step to every position; true when nothing new
  /// would be added.
  bool attractor_is_closed() const {
    for (std::size_t i = 0; i < keys_.size(); ++i) {
      if (bob_[i]) continue;
      const bool bob_moves = codec_.mover(keys_[i]) == Player::Bob;
      const auto b = offsets_[i], e = offsets_[i + 1];
      if (bob_moves) {
        if (stuck_[i] != kNoStuck) return false;
        for (auto j = b; j < e; ++j)
          if (bob_[succ_[j]]) return false;
      } else {
        bool all = true;
        for (auto j = b; j < e; ++j) all = all && bob_[succ_[j]];
        if (all) return false;
      }
    }
    return true;
  }

  std::size_t bob_region_size() const { return static_cast<std::size_t>(std::count(bob_.begin(), bob_.end(), true)); }

 private:
  friend SolveResult solve_eternal(const Graph&, Colour, RuleVariant, const SolverOptions&);
  static constexpr std::uint8_t kNoStuck = 0xff;

  std::uint64_t key_of(const GameState& s) const {
    const auto key = codec_.encode(s);
    return colour_symmetry ? codec_.canonical_colours(key) : key;
  }

  detail::PositionCodec codec_;
  std::vector<std::uint64_t> keys_;
  std::unordered_map<std::uint64_t, std::uint32_t> index_;
  std::vector<std::uint32_t> offsets_;
  std::vector<std::uint32_t> succ_;
  std::vector<std::uint16_t> succ_move_;
  std::vector<std::uint8_t> stuck_;
  std::vector<bool> bob_;
  std::vector<std::uint32_t> rank_;
  std::vector<std::uint16_t> best_;
};

/**
 * Decides the eternal game on a small graph with k colours. Positions are
 * explored forward from the empty colouring; Bob's attractor to "the chosen
 * vertex has no legal colour" is then computed backwards. Alice wins exactly
 * from the complement, where she can stay forever.
 */
inline SolveResult solve_eternal(const Graph& g, Colour k, RuleVariant variant, const SolverOptions& opt = {}) {
  const std::size_t n = g.n();
  if (n == 0) throw std::invalid_argument("empty graph");
  if (n > kSolverMaxVertices || k > kSolverMaxColours || k < 1)
    throw InfeasibleSolve("solver supports n <= 12 and 1 <= k <= 15");
  if (opt.colour_symmetry && variant != RuleVariant::Standard)
    throw std::invalid_argument("colour symmetry reduction is only sound for the standard variant");

  SolveResult r;
  r.colour_symmetry = opt.colour_symmetry;
  r.state_estimate = state_space_estimate(n, k);
  auto& codec = r.codec_;
  codec = {n, k};
  std::vector<std::uint32_t> adj(n, 0);
  for (auto [u, v] : g.edges()) {
    adj[u] |= std::uint32_t{1} << v;
    adj[v] |= std::uint32_t{1} << u;
  }
  const std::uint32_t all_played = static_cast<std::uint32_t>((std::uint64_t{1} << n) - 1);

  auto intern = [&](std::uint64_t key) -> std::uint32_t {
    if (opt.colour_symmetry) key = codec.canonical_colours(key);
    auto [it, fresh] = r.index_.try_emplace(key, static_cast<std::uint32_t>(r.keys_.size()));
    if (fresh) {
      if (r.keys_.size() >= opt.state_cap)
        throw InfeasibleSolve("state cap of " + std::to_string(opt.state_cap) + " positions exceeded");
      r.keys_.push_back(key);
    }
    return it->second;
  };

  intern(codec.make(std::vector<Colour>(n, kNoColour), 0, Player::Alice, true));
  r.offsets_.push_back(0);
  for (std::size_t i = 0; i < r.keys_.size(); ++i) {
    const std::uint64_t key = r.keys_[i];
    const Player mover = codec.mover(key);
    const bool greedy = greedy_for(variant, mover);
    const std::uint32_t played = codec.played(key);
    std::uint8_t stuck = SolveResult::kNoStuck;
    for (std::size_t v = 0; v < n; ++v) {
      if (played & (std::uint32_t{1} << v)) continue;
      std::uint32_t avail = detail::admissible_mask(codec, adj, key, v);
      if (!avail) {
        if (stuck == SolveResult::kNoStuck) stuck = static_cast<std::uint8_t>(v);
        continue;
      }
      if (greedy) avail &= ~avail + 1;
      for (; avail; avail &= avail - 1) {
        const auto c = static_cast<Colour>(std::countr_zero(avail));
        std::uint64_t next = codec.with_colour(key, v, c);
        std::uint32_t np = played | (std::uint32_t{1} << v);
        bool first = codec.first_round(key);
        if (np == all_played) {
          np = 0;
          first = false;
        }
        next &= (std::uint64_t{1} << (4 * n)) - 1;
        next |= static_cast<std::uint64_t>(np) << (4 * n);
        next |= static_cast<std::uint64_t>(other(mover)) << (5 * n);
        next |= static_cast<std::uint64_t>(first) << (5 * n + 1);
        r.succ_.push_back(intern(next));
        r.succ_move_.push_back(static_cast<std::uint16_t>((v << 4) | c));
      }
    }
    r.stuck_.push_back(stuck);
    r.offsets_.push_back(static_cast<std::uint32_t>(r.succ_.size()));
  }
  const std::size_t S = r.keys_.size();
  r.states_explored = S;
  r.edges = r.succ_.size();

  // Reverse edges.
  std::vector<std::uint32_t> pred_off(S + 1, 0), pred(r.succ_.size());
  for (auto j : r.succ_) ++pred_off[j + 1];
  for (std::size_t i = 0; i < S; ++i) pred_off[i + 1] += pred_off[i];
  {
    std::vector<std::uint32_t> fill(pred_off.begin(), pred_off.end() - 1);
    for (std::size_t i = 0; i < S; ++i)
      for (auto e = r.offsets_[i]; e < r.offsets_[i + 1]; ++e) pred[fill[r.succ_[e]]++] = static_cast<std::uint32_t>(i);
  }

  r.bob_.assign(S, false);
  r.rank_.assign(S, 0);
  std::vector<std::uint32_t> remaining(S);
  std::deque<std::uint32_t> queue;
  for (std::size_t i = 0; i < S; ++i) {
    remaining[i] = r.offsets_[i + 1] - r.offsets_[i];
    const bool bob_moves = codec.mover(r.keys_[i]) == Player::Bob;
    if ((bob_moves && r.stuck_[i] != SolveResult::kNoStuck) || (!bob_moves && remaining[i] == 0)) {
      r.bob_[i] = true;
      queue.push_back(static_cast<std::uint32_t>(i));
    }
  }
  while (!queue.empty()) {
    const auto j = queue.front();
    queue.pop_front();
    for (auto e = pred_off[j]; e < pred_off[j + 1]; ++e) {
      const auto i = pred[e];
      if (r.bob_[i]) continue;
      if (codec.mover(r.keys_[i]) == Player::Bob || --remaining[i] == 0) {
        r.bob_[i] = true;
        r.rank_[i] = r.rank_[j] + 1;
        queue.push_back(i);
      }
    }
  }
  r.winner = r.bob_[0] ? Winner::Bob : Winner::Alice;

  // Move table.
  r.best_.assign(S, 0);
  for (std::size_t i = 0; i < S; ++i) {
    const bool bob_moves = codec.mover(r.keys_[i]) == Player::Bob;
    const auto b = r.offsets_[i], e = r.offsets_[i + 1];
    std::optional<std::uint32_t> pick;
    if (bob_moves && r.bob_[i]) {
      if (r.stuck_[i] != SolveResult::kNoStuck) {
        r.best_[i] = static_cast<std::uint16_t>(r.stuck_[i] << 4);
        continue;
      }
      for (auto x = b; x < e; ++x)
        if (r.bob_[r.succ_[x]] && (!pick || r.rank_[r.succ_[x]] < r.rank_[r.succ_[*pick]])) pick = x;
    } else if (!bob_moves && !r.bob_[i]) {
      for (auto x = b; x < e && !pick; ++x)
        if (!r.bob_[r.succ_[x]]) pick = x;
    } else if (!bob_moves) {
      for (auto x = b; x < e; ++x)
        if (!pick || r.rank_[r.succ_[x]] > r.rank_[r.succ_[*pick]]) pick = x;
    } else {
      pick = b < e ? std::optional<std::uint32_t>(b) : std::nullopt;
    }
    if (pick)
      r.best_[i] = r.succ_move_[*pick];
    else
      r.best_[i] = static_cast<std::uint16_t>(r.stuck_[i] << 4);
  }
  return r;
}

/// Classic one-round colouring game: Alice wins iff every vertex gets coloured.
struct OneRoundResult {
  Winner winner = Winner::None;
  std::size_t states_explored = 0;
};

inline OneRoundResult solve_one_round(const Graph& g, Colour k, const SolverOptions& opt = {}) {
  const std::size_t n = g.n();
  if (n > kSolverMaxVertices || k > kSolverMaxColours || k < 1)
    throw InfeasibleSolve("solver supports n <= 12 and 1 <= k <= 15");
  detail::PositionCodec codec{n, k};
  std::vector<std::uint32_t> adj(n, 0);
  for (auto [u, v] : g.edges()) {
    adj[u] |= std::uint32_t{1} << v;
    adj[v] |= std::uint32_t{1} << u;
  }
  std::unordered_map<std::uint64_t, bool> memo;  // colouring -> Bob wins
  auto bob_wins = [&](auto&& self, std::uint64_t key, std::size_t coloured) -> bool {
    if (coloured == n) return false;
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    if (memo.size() >= opt.state_cap) throw InfeasibleSolve("state cap exceeded");
    const bool bob_moves = coloured % 2 == 1;
    bool result = !bob_moves;  // Alice loses unless some move saves her
    for (std::size_t v = 0; v < n; ++v) {
      if (codec.colour(key, v) != kNoColour) continue;
      std::uint32_t avail = detail::admissible_mask(codec, adj, key, v);
      if (!avail) {
        if (bob_moves) {
          result = true;
          break;
        }
        continue;
      }
      bool decided = false;
      for (; avail; avail &= avail - 1) {
        const bool b = self(self, codec.with_colour(key, v, static_cast<Colour>(std::countr_zero(avail))), coloured + 1);
        if (bob_moves && b) {
          result = true;
          decided = true;
          break;
        }
        if (!bob_moves && !b) {
          result = false;
          decided = true;
          break;
        }
      }
      if (decided) break;
    }
    memo.emplace(key, result);
    return result;
  };
  OneRoundResult out;
  out.winner = bob_wins(bob_wins, 0, 0) ? Winner::Bob : Winner::Alice;
  out.states_explored = memo.size();
  return out;
}

struct ChromaticScan {
  std::optional<Colour> k_star;  // smallest k with Alice winning
  std::vector<std::pair<Colour, Winner>> scanned;
  bool monotone = true;  // no Bob win above an Alice win in the scanned range
  std::size_t states_explored = 0;
};

struct ScanOptions {
  Colour k_min = 1;
  std::optional<Colour> k_max;  // defaults to max degree + 2
  bool stop_at_first = true;
  SolverOptions solver;
};

/// Smallest k for which Alice wins; k = max degree + 2 always suffices.
inline ChromaticScan eternal_game_chromatic_number(const Graph& g, RuleVariant variant, const ScanOptions& opt = {}) {
  ChromaticScan out;
  const Colour k_max = opt.k_max.value_or(static_cast<Colour>(g.max_degree() + 2));
  bool alice_seen = false;
  for (Colour k = opt.k_min; k <= k_max; ++k) {
    const auto res = solve_eternal(g, k, variant, opt.solver);
    out.states_explored += res.states_explored;
    out.scanned.emplace_back(k, res.winner);
    if (res.winner == Winner::Alice) {
      if (!out.k_star) out.k_star = k;
      alice_seen = true;
      if (opt.stop_at_first) break;
    } else if (alice_seen) {
      out.monotone = false;
    }
  }
  return out;
}

/// Plays the solver's move table for whichever side it is given to.
class SolverStrategy final : public Strategy {
 public:
  explicit SolverStrategy(std::shared_ptr<const SolveResult> result) : result_(std::move(result)) {}
  std::string name() const override { return "solver"; }
  Move choose(const GameState& s) override { return result_->move_for(s); }

 private:
  std::shared_ptr<const SolveResult> result_;
};

}  // namespace egc

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

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "egc/graph.hpp"

namespace egc {

using Colour = std::uint32_t;
inline constexpr Colour kNoColour = 0;

enum class Player : std::uint8_t { Alice = 0, Bob = 1 };

inline Player other(Player p) { return p == Player::Alice ? Player::Bob : Player::Alice; }
inline std::string_view to_string(Player p) { return p == Player::Alice ? "alice" : "bob"; }

/// STANDARD is the plain eternal game; GREEDY_BOB forces Bob to take the
/// smallest legal colour; GREEDY_BOTH forces both players to.
enum class RuleVariant : std::uint8_t { Standard, GreedyBob, GreedyBoth };

inline std::string_view to_string(RuleVariant v) {
  switch (v) {
    case RuleVariant::Standard: return "standard";
    case RuleVariant::GreedyBob: return "greedy-bob";
    case RuleVariant::GreedyBoth: return "greedy-both";
  }
  return "?";
}

inline RuleVariant parse_variant(std::string_view s) {
  if (s == "standard") return RuleVariant::Standard;
  if (s == "greedy-bob" || s == "greedy_bob") return RuleVariant::GreedyBob;
  if (s == "greedy-both" || s == "greedy_both") return RuleVariant::GreedyBoth;
  throw std::invalid_argument("unknown rule variant: " + std::string(s));
}

inline bool greedy_for(RuleVariant v, Player p) {
  return v == RuleVariant::GreedyBoth || (v == RuleVariant::GreedyBob && p == Player::Bob);
}

class IllegalMove : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/**
 * Full position of the eternal colouring game.
 *
 * Rounds partition the move sequence: every vertex is played exactly once
 * per round. Turns alternate strictly, across round boundaries too, so with
 * odd n the round opener alternates between Alice and Bob.
 *
 * Alongside the colouring the state keeps, for every vertex v and colour c,
 * how many vertices of the closed neighbourhood of v carry c. This makes
 * legality and "missing colours" queries O(k).
 */
class GameState {
 public:
  GameState(std::shared_ptr<const Graph> graph, Colour k, RuleVariant variant = RuleVariant::Standard)
      : graph_(std::move(graph)),
        k_(k),
        variant_(variant),
        colour_(graph_->n(), kNoColour),
        played_(graph_->n()),
        played_by_(graph_->n(), -1),
        closed_count_(graph_->n() * (static_cast<std::size_t>(k) + 1), 0),
        distinct_(graph_->n(), 0),
        total_(static_cast<std::size_t>(k) + 1, 0) {
    if (k < 1) throw std::invalid_argument("need at least one colour");
  }
  GameState(const Graph& graph, Colour k, RuleVariant variant = RuleVariant::Standard)
      : GameState(std::make_shared<const Graph>(graph), k, variant) {}

  const Graph& graph() const { return *graph_; }
  const std::shared_ptr<const Graph>& graph_ptr() const { return graph_; }
  std::size_t n() const { return graph_->n(); }
  Colour k() const { return k_; }
  RuleVariant variant() const { return variant_; }
  std::size_t round() const { return round_; }
  Player to_move() const { return to_move_; }
  std::size_t moves_in_round() const { return moves_in_round_; }
  std::size_t total_moves() const { return total_moves_; }

  Colour colour(Vertex v) const { return colour_[v]; }
  const std::vector<Colour>& colours() const { return colour_; }
  const VertexSet& played() const { return played_; }
  bool is_played(Vertex v) const { return played_.test(v); }
  std::optional<Player> played_by(Vertex v) const {
    if (played_by_[v] < 0) return std::nullopt;
    return static_cast<Player>(played_by_[v]);
  }

  /// Vertices of N[v] coloured c (c in 1..k).
  std::size_t closed_count(Vertex v, Colour c) const { return closed_count_[index(v, c)]; }
  /// Distinct colours present in N[v].
  std::size_t distinct_in_closed(Vertex v) const { return distinct_[v]; }
  std::size_t missing_in_closed(Vertex v) const { return k_ - distinct_[v]; }
  /// Vertices of the whole graph coloured c.
  std::size_t colour_total(Colour c) const { return total_[c]; }
  std::size_t colours_in_use() const {
    std::size_t u = 0;
    for (Colour c = 1; c <= k_; ++c) u += total_[c] > 0;
    return u;
  }

  /// Whether c may be given to v ignoring the greedy truncation.
  bool admits(Vertex v, Colour c) const {
    return c >= 1 && c <= k_ && c != colour_[v] && closed_count(v, c) == 0;
  }

  /// Smallest colour admissible for v (no greedy truncation needed: the
  /// smallest is always the greedy choice), or kNoColour.
  Colour smallest_admissible(Vertex v) const {
    for (Colour c = 1; c <= k_; ++c)
      if (admits(v, c)) return c;
    return kNoColour;
  }

  /// Legal colours for v for the player to move, including greedy truncation.
  std::vector<Colour> legal_colors(Vertex v) const {
    check_vertex(v);
    if (is_played(v)) throw IllegalMove("vertex " + std::to_string(v) + " was already played this round");
    std::vector<Colour> out;
    const bool greedy = greedy_for(variant_, to_move_);
    for (Colour c = 1; c <= k_; ++c) {
      if (admits(v, c)) {
        out.push_back(c);
        if (greedy) break;
      }
    }
    return out;
  }

  bool is_legal(Vertex v, Colour c) const {
    if (v >= n() || is_played(v) || !admits(v, c)) return false;
    if (greedy_for(variant_, to_move_)) return smallest_admissible(v) == c;
    return true;
  }

  bool has_legal_colour(Vertex v) const { return !is_played(v) && smallest_admissible(v) != kNoColour; }

  void apply(Vertex v, Colour c) {
    check_vertex(v);
    if (is_played(v)) throw IllegalMove("vertex " + std::to_string(v) + " was already played this round");
    if (!is_legal(v, c))
      throw IllegalMove("colour " + std::to_string(c) + " is not legal for vertex " + std::to_string(v));
    const Colour old = colour_[v];
    graph_->closed_neighbourhood(v).for_each([&](std::size_t u) {
      if (old != kNoColour && --closed_count_[index(static_cast<Vertex>(u), old)] == 0) --distinct_[u];
      if (closed_count_[index(static_cast<Vertex>(u), c)]++ == 0) ++distinct_[u];
    });
    if (old != kNoColour) --total_[old];
    ++total_[c];
    colour_[v] = c;
    played_.set(v);
    played_by_[v] = static_cast<std::int8_t>(to_move_);
    to_move_ = other(to_move_);
    ++total_moves_;
    if (++moves_in_round_ == n()) {
      ++round_;
      moves_in_round_ = 0;
      played_.clear();
      std::fill(played_by_.begin(), played_by_.end(), -1);
    }
  }

  bool is_proper() const {
    for (auto [u, v] : graph_->edges())
      if (colour_[u] != kNoColour && colour_[u] == colour_[v]) return false;
    return true;
  }

 private:
  std::size_t index(Vertex v, Colour c) const { return static_cast<std::size_t>(v) * (k_ + 1) + c; }
  void check_vertex(Vertex v) const {
    if (v >= n()) throw IllegalMove("vertex " + std::to_string(v) + " out of range");
  }

  std::shared_ptr<const Graph> graph_;
  Colour k_;
  RuleVariant variant_;
  std::vector<Colour> colour_;
  VertexSet played_;
  std::vector<std::int8_t> played_by_;
  std::vector<std::uint16_t> closed_count_;
  std::vector<std::uint32_t> distinct_;
  std::vector<std::uint32_t> total_;
  std::size_t round_ = 1;
  std::size_t moves_in_round_ = 0;
  std::size_t total_moves_ = 0;
  Player to_move_ = Player::Alice;
};

inline std::vector<Colour> legal_colors(const GameState& state, Vertex v) { return state.legal_colors(v); }

inline GameState apply_move(GameState state, Vertex v, Colour c) {
  state.apply(v, c);
  return state;
}

/// One chosen vertex. colour == kNoColour records a stuck choice (the move
/// that ended the game).
struct MoveRecord {
  std::size_t round = 0;
  std::size_t index = 0;
  Player player = Player::Alice;
  Vertex vertex = 0;
  Colour colour = kNoColour;

  friend bool operator==(const MoveRecord&, const MoveRecord&) = default;
};

/// Replays accepted moves from the initial position. Stuck records are skipped.
inline GameState replay(std::shared_ptr<const Graph> graph, Colour k, RuleVariant variant,
                        const std::vector<MoveRecord>& transcript) {
  GameState s(std::move(graph), k, variant);
  for (const auto& m : transcript) {
    if (m.colour == kNoColour) continue;
    if (m.round != s.round() || m.index != s.moves_in_round() || m.player != s.to_move())
      throw IllegalMove("transcript out of sync with game state");
    s.apply(m.vertex, m.colour);
  }
  return s;
}

}  // namespace egc

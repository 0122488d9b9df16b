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

#include <optional>
#include <vector>

#include "egc/game.hpp"

namespace egc {

/**
 * Per-round tallies of who played where. For every vertex u it counts the
 * moves of each player inside N[u]; u joins the danger set the first time
 * Bob's count reaches Alice's plus the threshold, and stays there until the
 * round ends.
 */
class RoundBook {
 public:
  RoundBook() = default;
  RoundBook(const Graph& g, std::size_t threshold)
      : graph_(&g),
        threshold_(threshold),
        alice_hits_(g.n(), 0),
        bob_hits_(g.n(), 0),
        alice_moves_(g.n()),
        bob_moves_(g.n()),
        danger_(g.n()) {}

  void start_round(std::size_t round) {
    round_ = round;
    std::fill(alice_hits_.begin(), alice_hits_.end(), 0);
    std::fill(bob_hits_.begin(), bob_hits_.end(), 0);
    alice_moves_.clear();
    bob_moves_.clear();
    danger_.clear();
    last_bob_.reset();
  }

  void record(Player who, Vertex v) {
    auto& mine = who == Player::Alice ? alice_hits_ : bob_hits_;
    (who == Player::Alice ? alice_moves_ : bob_moves_).set(v);
    if (who == Player::Bob) last_bob_ = v;
    graph_->closed_neighbourhood(v).for_each([&](std::size_t u) {
      ++mine[u];
      if (who == Player::Bob && bob_hits_[u] >= alice_hits_[u] + threshold_) danger_.set(u);
    });
  }

  std::size_t round() const { return round_; }
  std::size_t threshold() const { return threshold_; }
  const VertexSet& alice_moves() const { return alice_moves_; }
  const VertexSet& bob_moves() const { return bob_moves_; }
  const VertexSet& danger() const { return danger_; }
  std::size_t alice_hits(Vertex u) const { return alice_hits_[u]; }
  std::size_t bob_hits(Vertex u) const { return bob_hits_[u]; }
  /// Bob's most recent move in this round.
  std::optional<Vertex> last_bob() const { return last_bob_; }

 private:
  const Graph* graph_ = nullptr;
  std::size_t threshold_ = 1;
  std::size_t round_ = 1;
  std::vector<std::size_t> alice_hits_, bob_hits_;
  VertexSet alice_moves_, bob_moves_, danger_;
  std::optional<Vertex> last_bob_;
};

inline const VertexSet& dangerous_vertices(const RoundBook& book) { return book.danger(); }

/**
 * Lowest vertex v outside s and excluded, v != w, whose adjacency to every
 * vertex of s matches that of w.
 */
inline std::optional<Vertex> mirror_of(const Graph& g, Vertex w, const VertexSet& s, const VertexSet& excluded) {
  const VertexSet& nw = g.neighbours(w);
  for (Vertex v = 0; v < g.n(); ++v) {
    if (v == w || s.test(v) || excluded.test(v)) continue;
    const auto& nv = g.neighbours(v);
    bool same = true;
    const auto& a = nv.words();
    const auto& b = nw.words();
    const auto& m = s.words();
    for (std::size_t i = 0; i < m.size() && same; ++i) same = ((a[i] ^ b[i]) & m[i]) == 0;
    if (same) return v;
  }
  return std::nullopt;
}

}  // namespace egc

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

#include "egc/game.hpp"
#include "egc/strategy.hpp"

// Small move-finding helpers shared by the strategies. Ties are broken by
// lowest vertex index, then smallest colour.
namespace egc::detail {

/// Lowest unplayed vertex with a legal colour, played with its smallest one;
/// if every unplayed vertex is stuck, the lowest unplayed vertex.
inline Move first_fit(const GameState& s) {
  std::optional<Vertex> fallback;
  for (Vertex v = 0; v < s.n(); ++v) {
    if (s.is_played(v)) continue;
    if (!fallback) fallback = v;
    if (Colour c = s.smallest_admissible(v); c != kNoColour) return {v, c};
  }
  return {fallback.value_or(0), kNoColour};
}

/// Lowest unplayed vertex (optionally inside `among`) with no legal colour.
inline std::optional<Vertex> stuck_vertex(const GameState& s, const VertexSet* among = nullptr) {
  for (Vertex v = 0; v < s.n(); ++v) {
    if (s.is_played(v) || (among && !among->test(v))) continue;
    if (s.smallest_admissible(v) == kNoColour) return v;
  }
  return std::nullopt;
}

/// Lowest unplayed vertex of `where` that may legally take c.
inline std::optional<Vertex> place_in(const GameState& s, const VertexSet& where, Colour c) {
  for (auto v = where.first(); v != Bitset::npos; v = where.next(v + 1))
    if (s.is_legal(static_cast<Vertex>(v), c)) return static_cast<Vertex>(v);
  return std::nullopt;
}

inline Move smallest_on(const GameState& s, Vertex v) { return {v, s.smallest_admissible(v)}; }

/// Bob's generic play after his designed horizon: win on the spot if some
/// unplayed vertex is stuck (preferring `preferred`), else first fit.
inline Move winning_or_first_fit(const GameState& s, const VertexSet* preferred = nullptr) {
  if (preferred)
    if (auto v = stuck_vertex(s, preferred)) return {*v, kNoColour};
  if (auto v = stuck_vertex(s)) return {*v, kNoColour};
  return first_fit(s);
}

}  // namespace egc::detail

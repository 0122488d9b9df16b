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
#include <string>

#include "egc/game.hpp"

namespace egc {

/// A chosen vertex and colour. colour == kNoColour means "this vertex,
/// which I know has no legal colour" and is only accepted when that is true.
struct Move {
  Vertex vertex = 0;
  Colour colour = kNoColour;

  friend bool operator==(const Move&, const Move&) = default;
};

/**
 * Move-selection policy for one side of one game. Instances are stateful
 * and belong to a single game; the engine calls begin_game once, choose
 * whenever it is this side's turn, and observe after every accepted move
 * (both sides').
 */
class Strategy {
 public:
  virtual ~Strategy() = default;
  virtual std::string name() const = 0;
  virtual void begin_game(const GameState& /*initial*/, std::uint64_t /*seed*/) {}
  virtual Move choose(const GameState& state) = 0;
  virtual void observe(const GameState& /*after*/, const MoveRecord& /*move*/) {}
};

}  // namespace egc

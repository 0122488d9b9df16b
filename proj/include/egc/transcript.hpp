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

#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "egc/game.hpp"

namespace egc {

// Transcript files hold one JSON object per line:
//   {"round":1,"idx":0,"player":"alice","vertex":0,"colour":1}
// A stuck choice carries "colour":null.

inline nlohmann::json to_json(const MoveRecord& m) {
  nlohmann::json j;
  j["round"] = m.round;
  j["idx"] = m.index;
  j["player"] = std::string(to_string(m.player));
  j["vertex"] = m.vertex;
  if (m.colour == kNoColour)
    j["colour"] = nullptr;
  else
    j["colour"] = m.colour;
  return j;
}

inline MoveRecord move_from_json(const nlohmann::json& j) {
  MoveRecord m;
  m.round = j.at("round").get<std::size_t>();
  m.index = j.at("idx").get<std::size_t>();
  const auto who = j.at("player").get<std::string>();
  if (who == "alice")
    m.player = Player::Alice;
  else if (who == "bob")
    m.player = Player::Bob;
  else
    throw std::runtime_error("transcript: unknown player " + who);
  m.vertex = j.at("vertex").get<Vertex>();
  m.colour = j.at("colour").is_null() ? kNoColour : j.at("colour").get<Colour>();
  return m;
}

inline void write_transcript(std::ostream& os, const std::vector<MoveRecord>& moves) {
  for (const auto& m : moves) os << to_json(m).dump() << '\n';
}

inline std::vector<MoveRecord> read_transcript(std::istream& is) {
  std::vector<MoveRecord> out;
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    out.push_back(move_from_json(nlohmann::json::parse(line)));
  }
  return out;
}

}  // namespace egc

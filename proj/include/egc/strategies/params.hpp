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
#include <cmath>
#include <cstddef>
#include <stdexcept>

namespace egc {

/**
 * Integer thresholds for the paper-style strategies. The asymptotic
 * constants only make sense for huge n, so each is an explicit knob; the
 * defaults come from from_fractions() at a given n.
 */
struct StrategyParams {
  double epsilon = 0.1;
  // A vertex is dangerous once Bob leads Alice by this many moves in its
  // closed neighbourhood during the current round (ceil(eps/100 n)).
  std::size_t danger_threshold = 1;
  // Alice's first priority: unplayed vertices missing fewer than this many
  // colours (ceil(beta n)).
  std::size_t nearly_full_threshold = 2;
  // Use "missing <= threshold" instead of "missing < threshold".
  bool nearly_full_inclusive = false;
  // Colours below this index count as small (ceil(eps/200 n)).
  std::size_t small_colour_cutoff = 1;
  // A pair (or kill set) this close to blocking its target triggers
  // blocking moves (ceil(delta n)).
  std::size_t block_distance = 1;
  std::size_t block_budget = 1;     // K
  std::size_t reserve_missing = 10;  // 10K
  // Blocking only runs while at least this many target vertices are unplayed.
  std::size_t blocking_min_unplayed = 1;
  std::size_t multiplicity = 4;  // C_l
  std::size_t kill_set_size = 2;
  std::size_t kill_min_unplayed = 1;

  static StrategyParams from_fractions(std::size_t n, double epsilon, double beta, double delta, std::size_t K,
                                       std::size_t multiplicity) {
    auto ceil_at_least_one = [&](double frac) {
      return std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(frac * static_cast<double>(n) - 1e-9)));
    };
    StrategyParams p;
    p.epsilon = epsilon;
    p.danger_threshold = ceil_at_least_one(epsilon / 100.0);
    p.nearly_full_threshold = ceil_at_least_one(beta);
    p.small_colour_cutoff = ceil_at_least_one(epsilon / 200.0);
    p.block_distance = ceil_at_least_one(delta);
    p.block_budget = std::max<std::size_t>(1, K);
    p.reserve_missing = 10 * p.block_budget;
    p.blocking_min_unplayed = ceil_at_least_one(epsilon / 100.0);
    p.multiplicity = std::max<std::size_t>(1, multiplicity);
    p.kill_min_unplayed = p.blocking_min_unplayed;
    return p;
  }

  void validate(std::size_t k) const {
    if (danger_threshold < 1 || nearly_full_threshold < 1 || small_colour_cutoff < 1 || block_distance < 1 ||
        block_budget < 1 || multiplicity < 1 || kill_set_size < 1)
      throw std::invalid_argument("strategy thresholds must be at least 1");
    if (small_colour_cutoff > k) throw std::invalid_argument("small colour cutoff exceeds the palette");
  }
};

}  // namespace egc

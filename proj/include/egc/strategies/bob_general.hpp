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
#include <stdexcept>
#include <string>
#include <vector>

#include "egc/color_plan.hpp"
#include "egc/strategies/alice_paper.hpp"
#include "egc/strategies/common.hpp"
#include "egc/strategies/params.hpp"

namespace egc {

/// Disjoint target sets X_i with the colour sets Y_i Bob wants to see in them.
struct TargetPlan {
  std::vector<VertexSet> targets;
  std::vector<std::vector<Colour>> colours;
  // For plans built from adjacency traces: the subset mask I of each X_I.
  std::vector<SubsetMask> labels;
  // Vertices expected to see every colour after round 1 (may be empty).
  std::vector<Vertex> distinguished;

  std::size_t size() const { return targets.size(); }
};

class SetupFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/**
 * Plan for even n with p = 1/kprime: X = vertices 0..l-1; every other vertex
 * goes to the class X_I of its adjacency trace I on X; class X_I is to
 * receive the colours f(I) of the colour plan. After round 1 each x in X
 * then sees the whole palette.
 */
inline TargetPlan bob_even_setup(const Graph& g, std::size_t l, std::size_t kprime, std::size_t num_colors) {
  if (l < 1 || l > kMaxGroundSet) throw std::invalid_argument("l must be in 1..10");
  if (g.n() <= l) throw SetupFailure("graph too small for the distinguished set");
  const ColorPlan plan = build_color_plan(l, kprime, num_colors);

  TargetPlan tp;
  const SubsetMask classes = SubsetMask{1} << l;
  tp.targets.assign(classes, VertexSet(g.n()));
  for (SubsetMask m = 0; m < classes; ++m) {
    tp.labels.push_back(m);
    const auto& cs = plan.colours_of(m);
    tp.colours.emplace_back(cs.begin(), cs.end());
  }
  for (Vertex v = static_cast<Vertex>(l); v < g.n(); ++v) {
    SubsetMask trace = 0;
    for (Vertex x = 0; x < l; ++x)
      if (g.adjacent(v, x)) trace |= SubsetMask{1} << x;
    tp.targets[trace].set(v);
  }
  for (SubsetMask m = 0; m < classes; ++m)
    if (tp.targets[m].none() && !tp.colours[m].empty())
      throw SetupFailure("class " + std::to_string(m) + " is empty but has designated colours");
  for (Vertex x = 0; x < l; ++x) tp.distinguished.push_back(x);
  return tp;
}

/**
 * Bob's strategy for filling several disjoint target sets with their
 * designated colours during round 1. Priorities, highest first:
 *  1. a colour placed at least C*(q+1) times while present in only q of its
 *     designated sets goes into one of the missing ones;
 *  2. sets in their end stage (at most reserve_missing designated colours
 *     absent) get their missing colours, Alice's last colour first;
 *  3. queued kill sequences against vertex sets close to blocking a target;
 *  4. a placed colour with fewer than C*(q-1) placements per present set, q
 *     as above, goes into a missing designated set;
 *  5. a designated colour not yet in X_i goes into X_i, preferring the set
 *     Alice just played in;
 *  6. first fit.
 * From round 2 on: any stuck vertex (distinguished ones first), else first fit.
 */
class PaperBobGeneral : public Strategy {
 public:
  struct KillTask {
    std::size_t set = 0;
    std::vector<Vertex> members;
  };

  PaperBobGeneral(TargetPlan plan, StrategyParams params = {}) : plan_(std::move(plan)), params_(params) {}

  std::string name() const override { return "paper-general"; }

  void begin_game(const GameState& initial, std::uint64_t) override {
    params_.validate(initial.k());
    const std::size_t n = initial.n(), k = initial.k();
    owner_.assign(n, kNone);
    for (std::size_t i = 0; i < plan_.size(); ++i) {
      if (plan_.targets[i].size() != n) throw std::invalid_argument("target set sized for a different graph");
      plan_.targets[i].for_each([&](std::size_t v) {
        if (owner_[v] != kNone) throw std::invalid_argument("target sets must be disjoint");
        owner_[v] = i;
      });
      for (Colour c : plan_.colours[i])
        if (c < 1 || c > k) throw std::invalid_argument("designated colour outside the palette");
    }
    designated_.assign(k + 1, {});
    for (std::size_t i = 0; i < plan_.size(); ++i)
      for (Colour c : plan_.colours[i]) designated_[c].push_back(i);
    counts_.assign(plan_.size(), std::vector<std::size_t>(k + 1, 0));
    end_stage_.assign(plan_.size(), false);
    end_stage_move_.assign(plan_.size(), 0);
    claimed_ = VertexSet(n);
    distinguished_ = VertexSet(n);
    for (Vertex x : plan_.distinguished) distinguished_.set(x);
    kills_.clear();
    log_.clear();
    last_alice_.reset();
    update_end_stages(0);
  }

  void observe(const GameState& after, const MoveRecord& m) override {
    if (m.colour == kNoColour) return;
    if (m.player == Player::Alice) last_alice_ = m;
    if (m.round == 1) {
      if (owner_[m.vertex] != kNone) ++counts_[owner_[m.vertex]][m.colour];
      update_end_stages(after.total_moves());
    }
  }

  Move choose(const GameState& s) override {
    auto decide = [&](int prio, Move m) {
      log_.push_back({s.round(), s.moves_in_round(), prio, m});
      return m;
    };
    if (s.round() >= 2)
      return decide(7, detail::winning_or_first_fit(s, distinguished_.any() ? &distinguished_ : nullptr));

    if (auto m = rule_multiplicity(s, false)) return decide(1, *m);
    if (auto m = rule_end_stage(s)) return decide(2, *m);
    discover_kills(s);
    if (auto m = next_kill_move(s)) return decide(3, *m);
    if (auto m = rule_multiplicity(s, true)) return decide(4, *m);
    if (auto m = rule_designated(s)) return decide(5, *m);
    return decide(6, detail::first_fit(s));
  }

  std::size_t missing_from(std::size_t i) const {
    std::size_t m = 0;
    for (Colour c : plan_.colours[i]) m += counts_[i][c] == 0;
    return m;
  }
  bool in_end_stage(std::size_t i) const { return end_stage_[i]; }
  std::size_t end_stage_move(std::size_t i) const { return end_stage_move_[i]; }
  std::size_t count_in(std::size_t i, Colour c) const { return counts_[i][c]; }
  const TargetPlan& plan() const { return plan_; }
  const std::vector<Decision>& decisions() const { return log_; }
  const std::deque<KillTask>& pending() const { return kills_; }

  /// Whether rule 1 (strict) or rule 4 (relaxed) applies to colour c.
  bool multiplicity_rule_fires(const GameState& s, Colour c, bool relaxed) const {
    const auto& sets = designated_[c];
    if (sets.empty()) return false;
    std::size_t present = 0;
    for (auto i : sets) present += counts_[i][c] > 0;
    const std::size_t missing = sets.size() - present;
    if (missing == 0) return false;
    const std::size_t r = s.colour_total(c), C = params_.multiplicity;
    if (!relaxed) return r >= C * (present + 1);
    return r >= 1 && (present == 0 || r > C * (present - 1));
  }

 private:
  static constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

  void update_end_stages(std::size_t move) {
    for (std::size_t i = 0; i < plan_.size(); ++i)
      if (!end_stage_[i] && missing_from(i) <= params_.reserve_missing) {
        end_stage_[i] = true;
        end_stage_move_[i] = move;
      }
  }

  VertexSet open_part(const GameState& s, std::size_t i) const { return plan_.targets[i] - s.played(); }

  std::optional<Move> rule_multiplicity(const GameState& s, bool relaxed) const {
    std::optional<Move> best;
    for (Colour c = 1; c <= s.k(); ++c) {
      if (!multiplicity_rule_fires(s, c, relaxed)) continue;
      for (auto i : designated_[c]) {
        if (counts_[i][c] > 0) continue;
        if (auto u = detail::place_in(s, open_part(s, i), c))
          if (!best || *u < best->vertex) best = Move{*u, c};
      }
    }
    return best;
  }

  std::optional<Move> rule_end_stage(const GameState& s) const {
    for (std::size_t i = 0; i < plan_.size(); ++i) {
      if (!end_stage_[i] || missing_from(i) == 0) continue;
      const VertexSet open = open_part(s, i);
      std::vector<Colour> order;
      if (last_alice_ && counts_[i][last_alice_->colour] == 0 && is_designated(i, last_alice_->colour))
        order.push_back(last_alice_->colour);
      for (Colour c : plan_.colours[i])
        if (counts_[i][c] == 0) order.push_back(c);
      for (Colour c : order)
        if (auto u = detail::place_in(s, open, c)) return Move{*u, c};
    }
    return std::nullopt;
  }

  bool is_designated(std::size_t i, Colour c) const {
    return std::find(designated_[c].begin(), designated_[c].end(), i) != designated_[c].end();
  }

  // Vertex sets of kill_set_size unplayed outside vertices whose closed
  // neighbourhoods cover all but block_distance open vertices of some X_i.
  void discover_kills(const GameState& s) {
    const auto& g = s.graph();
    for (std::size_t i = 0; i < plan_.size(); ++i) {
      if (end_stage_[i]) continue;
      const VertexSet open = open_part(s, i);
      if (open.count() < params_.kill_min_unplayed) continue;
      std::vector<Vertex> cand;
      for (Vertex v = 0; v < s.n(); ++v)
        if (!s.is_played(v) && !plan_.targets[i].test(v) && !claimed_.test(v)) cand.push_back(v);
      for (std::size_t a = 0; a < cand.size(); ++a) {
        if (claimed_.test(cand[a])) continue;
        // Grow greedily from cand[a] by best marginal coverage.
        std::vector<Vertex> members{cand[a]};
        VertexSet uncovered = open - g.closed_neighbourhood(cand[a]);
        while (members.size() < params_.kill_set_size && uncovered.any()) {
          std::size_t best_cover = 0;
          Vertex best = 0;
          bool found = false;
          for (std::size_t b = a + 1; b < cand.size(); ++b) {
            if (claimed_.test(cand[b])) continue;
            const auto cover = uncovered.intersect_count(g.closed_neighbourhood(cand[b]));
            if (!found || cover > best_cover) {
              best_cover = cover;
              best = cand[b];
              found = true;
            }
          }
          if (!found) break;
          members.push_back(best);
          uncovered.subtract(g.closed_neighbourhood(best));
        }
        if (members.size() == params_.kill_set_size && uncovered.count() <= params_.block_distance) {
          for (Vertex m : members) claimed_.set(m);
          kills_.push_back({i, std::move(members)});
        }
      }
    }
  }

  std::optional<Move> next_kill_move(const GameState& s) {
    for (auto it = kills_.begin(); it != kills_.end();) {
      bool done = false;
      if (auto m = kill_step(s, *it, done)) return m;
      it = done ? kills_.erase(it) : std::next(it);
    }
    return std::nullopt;
  }

  std::optional<Move> kill_step(const GameState& s, const KillTask& t, bool& done) const {
    const VertexSet open = open_part(s, t.set);
    for (Vertex a : t.members) {
      const Colour ca = s.colour(a);
      if (ca != kNoColour) {
        if (counts_[t.set][ca] > 0) continue;
        if (auto u = detail::place_in(s, open, ca)) return Move{*u, ca};
        return std::nullopt;
      }
      // Prefer a colour X_i already has: that disarms a at once.
      for (Colour c = 1; c <= s.k(); ++c)
        if (counts_[t.set][c] > 0 && s.is_legal(a, c)) return Move{a, c};
      for (Colour c = 1; c <= s.k(); ++c)
        if (s.colour_total(c) == 0 && s.is_legal(a, c)) return Move{a, c};
      return std::nullopt;
    }
    done = true;
    return std::nullopt;
  }

  std::optional<Move> rule_designated(const GameState& s) const {
    std::vector<std::size_t> order;
    if (last_alice_ && last_alice_->round == s.round() && owner_[last_alice_->vertex] != kNone)
      order.push_back(owner_[last_alice_->vertex]);
    for (std::size_t i = 0; i < plan_.size(); ++i)
      if (order.empty() || order.front() != i) order.push_back(i);
    for (auto i : order) {
      const VertexSet open = open_part(s, i);
      for (auto u = open.first(); u != Bitset::npos; u = open.next(u + 1))
        for (Colour c : plan_.colours[i])
          if (counts_[i][c] == 0 && s.is_legal(static_cast<Vertex>(u), c)) return Move{static_cast<Vertex>(u), c};
    }
    return std::nullopt;
  }

  TargetPlan plan_;
  StrategyParams params_;
  std::vector<std::size_t> owner_;
  std::vector<std::vector<std::size_t>> designated_;
  std::vector<std::vector<std::size_t>> counts_;
  std::vector<bool> end_stage_;
  std::vector<std::size_t> end_stage_move_;
  VertexSet claimed_, distinguished_;
  std::deque<KillTask> kills_;
  std::vector<Decision> log_;
  std::optional<MoveRecord> last_alice_;
};

}  // namespace egc

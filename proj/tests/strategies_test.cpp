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

#include <map>
#include <set>

#include <gtest/gtest.h>

#include "egc/play.hpp"
#include "egc/rng.hpp"
#include "egc/strategies/alice_paper.hpp"
#include "egc/strategies/baseline.hpp"
#include "egc/strategies/bob_general.hpp"
#include "egc/strategies/bob_odd.hpp"

namespace egc {
namespace {

Graph graph_of(std::size_t n, std::vector<Edge> es) { return Graph(n, es); }

// Applies scripted moves and keeps the listed strategies informed.
struct Driver {
  GameState s;
  std::vector<Strategy*> watchers;

  Driver(const Graph& g, Colour k, std::vector<Strategy*> w, RuleVariant v = RuleVariant::Standard)
      : s(g, k, v), watchers(std::move(w)) {
    for (auto* x : watchers) x->begin_game(s, 0);
  }
  void play(Vertex v, Colour c) {
    const MoveRecord r{s.round(), s.moves_in_round(), s.to_move(), v, c};
    s.apply(v, c);
    for (auto* x : watchers) x->observe(s, r);
  }
};

// ---------------------------------------------------------------- oracles

bool brute_legal(const GameState& s, Vertex v, Colour c) {
  if (s.is_played(v) || c < 1 || c > s.k() || c == s.colour(v)) return false;
  for (Vertex u = 0; u < s.n(); ++u)
    if (s.graph().adjacent(u, v) && s.colour(u) == c) return false;
  return true;
}

Colour brute_smallest(const GameState& s, Vertex v) {
  for (Colour c = 1; c <= s.k(); ++c)
    if (brute_legal(s, v, c)) return c;
  return kNoColour;
}

std::size_t brute_missing(const GameState& s, Vertex v) {
  std::set<Colour> seen;
  for (Vertex u = 0; u < s.n(); ++u)
    if ((u == v || s.graph().adjacent(u, v)) && s.colour(u) != kNoColour) seen.insert(s.colour(u));
  return s.k() - seen.size();
}

// Danger set from the list of this round's moves, recounted on every prefix.
std::set<Vertex> brute_danger(const Graph& g, const std::vector<std::pair<Player, Vertex>>& moves, std::size_t thr) {
  std::set<Vertex> d;
  for (std::size_t j = 1; j <= moves.size(); ++j)
    for (Vertex u = 0; u < g.n(); ++u) {
      long diff = 0;
      for (std::size_t i = 0; i < j; ++i) {
        const Vertex v = moves[i].second;
        if (v == u || g.adjacent(u, v)) diff += moves[i].first == Player::Bob ? 1 : -1;
      }
      if (diff >= static_cast<long>(thr)) d.insert(u);
    }
  return d;
}

std::optional<Vertex> brute_mirror(const Graph& g, Vertex w, const std::set<Vertex>& s, const std::set<Vertex>& excl) {
  for (Vertex v = 0; v < g.n(); ++v) {
    if (v == w || s.count(v) || excl.count(v)) continue;
    bool ok = true;
    for (Vertex x : s) ok = ok && g.adjacent(v, x) == g.adjacent(w, x);
    if (ok) return v;
  }
  return std::nullopt;
}

std::set<Vertex> members(const VertexSet& s) {
  std::set<Vertex> out;
  s.for_each([&](std::size_t v) { out.insert(static_cast<Vertex>(v)); });
  return out;
}

// Alice's rules recomputed from scratch.
Move oracle_alice(const GameState& s, const std::vector<std::pair<Player, Vertex>>& round_moves,
                  const StrategyParams& p) {
  for (Vertex v = 0; v < s.n(); ++v) {
    if (s.is_played(v)) continue;
    const auto miss = brute_missing(s, v);
    if (p.nearly_full_inclusive ? miss <= p.nearly_full_threshold : miss < p.nearly_full_threshold)
      return {v, brute_smallest(s, v)};
  }
  std::optional<Vertex> w;
  for (auto [who, v] : round_moves)
    if (who == Player::Bob) w = v;
  const auto d = brute_danger(s.graph(), round_moves, p.danger_threshold);
  if (w && !d.count(*w)) {
    std::set<Vertex> excl;
    for (Vertex v = 0; v < s.n(); ++v)
      if (s.is_played(v) || brute_smallest(s, v) == kNoColour) excl.insert(v);
    if (auto m = brute_mirror(s.graph(), *w, d, excl)) return {*m, brute_smallest(s, *m)};
  }
  std::optional<Vertex> fallback;
  for (Vertex v = 0; v < s.n(); ++v) {
    if (s.is_played(v)) continue;
    if (!fallback) fallback = v;
    if (auto c = brute_smallest(s, v); c != kNoColour) return {v, c};
  }
  return {fallback.value_or(0), kNoColour};
}

// ------------------------------------------------------------ danger sets

TEST(Danger, EmptyAtRoundStart) {
  const auto g = make_named(NamedKind::Star, 9);
  RoundBook book(g, 1);
  book.start_round(1);
  EXPECT_TRUE(book.danger().none());
}

TEST(Danger, TwoBobMovesOnStarLeavesMarkOnlyCentre) {
  const auto g = make_named(NamedKind::Star, 9);
  RoundBook book(g, 2);
  book.start_round(1);
  book.record(Player::Alice, 5);
  book.record(Player::Bob, 1);
  // Alice at leaf 5 also counts in N[centre].
  book.record(Player::Alice, 6);
  book.record(Player::Bob, 2);
  EXPECT_TRUE(book.danger().none());
  book.record(Player::Bob, 3);
  book.record(Player::Bob, 4);
  EXPECT_EQ(members(book.danger()), (std::set<Vertex>{0}));
}

TEST(Danger, ThresholdOneSingleBobMoveMarksClosedNeighbourhood) {
  const auto g = gnp_generate({30, 0.3, 8});
  RoundBook book(g, 1);
  book.start_round(1);
  book.record(Player::Bob, 7);
  EXPECT_EQ(book.danger(), g.closed_neighbourhood(7));
}

TEST(Danger, MatchesPrefixRecountAndNeverShrinksWithinRound) {
  Rng rng(17);
  for (int t = 0; t < 40; ++t) {
    const std::size_t n = 8 + t % 10;
    const auto g = gnp_generate({n, 0.35, 900u + t});
    const std::size_t thr = 1 + t % 3;
    RoundBook book(g, thr);
    book.start_round(1);
    std::vector<Vertex> order(n);
    for (Vertex v = 0; v < n; ++v) order[v] = v;
    for (std::size_t i = n; i > 1; --i) std::swap(order[i - 1], order[uniform_below(rng, i)]);
    std::vector<std::pair<Player, Vertex>> moves;
    VertexSet prev(n);
    for (Vertex v : order) {
      const Player who = uniform_below(rng, 3) ? Player::Bob : Player::Alice;
      book.record(who, v);
      moves.emplace_back(who, v);
      ASSERT_EQ(members(book.danger()), brute_danger(g, moves, thr));
      EXPECT_TRUE(prev.is_subset_of(book.danger()));
      prev = book.danger();
    }
    book.start_round(2);
    EXPECT_TRUE(book.danger().none());
  }
}

// ---------------------------------------------------------------- mirrors

TEST(Mirror, TriangleEmptySet) {
  const auto g = make_named(NamedKind::Complete, 3);
  VertexSet excl(3);
  excl.set(0);
  EXPECT_EQ(mirror_of(g, 0, VertexSet(3), excl), Vertex{1});
}

TEST(Mirror, StarLeavesMirrorEachOther) {
  const auto g = make_named(NamedKind::Star, 3);
  VertexSet s(4), excl(4);
  s.set(0);
  excl.set(1);
  EXPECT_EQ(mirror_of(g, 1, s, excl), Vertex{2});
}

TEST(Mirror, PathEndsMirrorAroundMiddle) {
  const auto g = make_named(NamedKind::Path, 3);
  VertexSet s(3), excl(3);
  s.set(1);
  excl.set(0);
  EXPECT_EQ(mirror_of(g, 0, s, excl), Vertex{2});
}

TEST(Mirror, NoneWhenEverythingExcluded) {
  const auto g = make_named(NamedKind::Path, 3);
  VertexSet s(3), excl(3);
  s.set(1);
  excl.set(0);
  excl.set(2);
  EXPECT_FALSE(mirror_of(g, 0, s, excl).has_value());
}

TEST(Mirror, MatchesBruteForce) {
  Rng rng(3);
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = 3 + t % 70;
    const auto g = gnp_generate({n, 0.5, 40u + t});
    VertexSet s(n), excl(n);
    for (Vertex v = 0; v < n; ++v) {
      const auto r = uniform_below(rng, 10);
      if (r == 0) s.set(v);
      if (r == 1) excl.set(v);
    }
    const Vertex w = static_cast<Vertex>(uniform_below(rng, n));
    EXPECT_EQ(mirror_of(g, w, s, excl), brute_mirror(g, w, members(s), members(excl))) << "trial " << t;
  }
}

// ---------------------------------------------------------------- Alice

TEST(PaperAliceRules, OpensWithVertexZeroColourOne) {
  const auto g = gnp_generate({15, 0.5, 2});
  PaperAlice a;
  Driver d(g, 10, {&a});
  EXPECT_EQ(a.choose(d.s), (Move{0, 1}));
  EXPECT_EQ(a.decisions().back().priority, 3);
}

TEST(PaperAliceRules, NearlyFullLeafComesFirst) {
  const auto g = make_named(NamedKind::Star, 9);
  PaperAlice a;
  Driver d(g, 3, {&a});
  d.play(0, 1);
  for (Vertex v = 1; v <= 9; ++v) d.play(v, 2);
  ASSERT_EQ(d.s.round(), 2u);
  d.play(0, 3);
  d.play(1, 1);
  // Leaf 2 now sees colours {2, 3}: one colour missing, below the threshold 2.
  EXPECT_EQ(a.choose(d.s), (Move{2, 1}));
  EXPECT_EQ(a.decisions().back().priority, 1);
}

TEST(PaperAliceRules, MirrorsBobsLeaf) {
  const auto g = make_named(NamedKind::Star, 5);
  StrategyParams p;
  p.danger_threshold = 2;
  PaperAlice a(p);
  Driver d(g, 4, {&a});
  d.play(0, 1);
  d.play(1, 2);
  EXPECT_TRUE(a.book().danger().none());
  EXPECT_EQ(a.choose(d.s), (Move{2, 2}));
  EXPECT_EQ(a.decisions().back().priority, 2);
}

TEST(PaperAliceRules, DangerousBobMoveIsNotMirrored) {
  const auto g = make_named(NamedKind::Star, 5);
  PaperAlice a;  // threshold 1: Bob's leaf becomes dangerous at once
  Driver d(g, 4, {&a});
  d.play(1, 1);
  d.play(3, 2);
  EXPECT_TRUE(a.book().danger().test(3));
  EXPECT_EQ(a.choose(d.s), (Move{0, 3}));
  EXPECT_EQ(a.decisions().back().priority, 3);
}

TEST(PaperAliceRules, AgreesWithRecomputedRulesInRandomGames) {
  int checked = 0;
  for (int t = 0; t < 60; ++t) {
    const std::size_t n = 9 + t % 12;
    const auto g = gnp_generate({n, 0.4, 7000u + t});
    StrategyParams p;
    p.danger_threshold = 1 + t % 3;
    p.nearly_full_threshold = 1 + t % 4;
    p.nearly_full_inclusive = t % 5 == 0;
    PaperAlice a(p);
    RandomLegal b;
    const Colour k = static_cast<Colour>(g.max_degree() / 2 + 2 + t % 4);
    GameState s(g, k, RuleVariant::Standard);
    a.begin_game(s, 0);
    b.begin_game(s, 500 + t);
    std::vector<std::pair<Player, Vertex>> round_moves;
    std::size_t round = 1;
    while (s.round() <= 6) {
      if (s.round() != round) {
        round = s.round();
        round_moves.clear();
      }
      const Player who = s.to_move();
      Move m;
      if (who == Player::Alice) {
        const Move want = oracle_alice(s, round_moves, p);
        m = a.choose(s);
        ASSERT_EQ(m, want) << "trial " << t << " round " << s.round();
        ++checked;
      } else {
        m = b.choose(s);
      }
      if (m.colour == kNoColour) break;
      const MoveRecord r{s.round(), s.moves_in_round(), who, m.vertex, m.colour};
      s.apply(m.vertex, m.colour);
      round_moves.emplace_back(who, m.vertex);
      a.observe(s, r);
      b.observe(s, r);
    }
  }
  EXPECT_GT(checked, 1000);
}

// ---------------------------------------------------------- double blocks

// target 0 with N[0] = {0,1,2,3}; 4 sees 1 and 2, 5 sees 3; 6 isolated.
Graph block_fixture() { return graph_of(7, {{0, 1}, {0, 2}, {0, 3}, {4, 1}, {4, 2}, {5, 3}}); }

TEST(DoubleBlock, FullyColouredTargetIsDistanceZero) {
  const auto big = graph_of(5, {{0, 1}, {0, 2}});
  GameState s(big, 6, RuleVariant::Standard);
  s.apply(0, 1);
  s.apply(1, 2);
  s.apply(2, 3);
  EXPECT_EQ(double_block_distance(s, 3, 4, 0), 0u);
}

TEST(DoubleBlock, PairAdjacentToWholeTargetIsDistanceZero) {
  const auto g = graph_of(5, {{0, 1}, {0, 2}, {3, 0}, {3, 1}, {3, 2}, {4, 0}});
  GameState s(g, 6, RuleVariant::Standard);
  EXPECT_EQ(double_block_distance(s, 3, 4, 0), 0u);
}

TEST(DoubleBlock, OneUncoveredVertex) {
  GameState s(block_fixture(), 6, RuleVariant::Standard);
  EXPECT_EQ(double_block_distance(s, 4, 5, 0), 1u);
}

TEST(DoubleBlock, ColourAlreadyInsideIsNotABlock) {
  GameState s(block_fixture(), 6, RuleVariant::Standard);
  s.apply(1, 2);
  s.apply(4, 1);  // 4 is adjacent to 1, so colour 1 is fine there
  s.apply(3, 1);
  EXPECT_EQ(double_block_distance(s, 4, 5, 0), kNotABlock);
}

TEST(DoubleBlock, MatchesBruteForce) {
  Rng rng(99);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 6 + t % 20;
    const auto g = gnp_generate({n, 0.3, 300u + t});
    GameState s(g, 8, RuleVariant::Standard);
    for (int i = 0; i < static_cast<int>(n / 2); ++i) {
      const Vertex v = static_cast<Vertex>(uniform_below(rng, n));
      if (auto c = brute_smallest(s, v); c != kNoColour) s.apply(v, c);
    }
    const Vertex a = static_cast<Vertex>(uniform_below(rng, n)), b = static_cast<Vertex>(uniform_below(rng, n)),
                 x = static_cast<Vertex>(uniform_below(rng, n));
    auto in_closed = [&](Vertex u, Vertex v) { return u == v || g.adjacent(u, v); };
    std::size_t want = 0;
    bool blocked = false;
    for (Vertex y : {a, b})
      if (s.colour(y) != kNoColour)
        for (Vertex u = 0; u < n; ++u)
          if (in_closed(u, x) && s.colour(u) == s.colour(y)) blocked = true;
    for (Vertex u = 0; u < n; ++u)
      if (in_closed(u, x) && s.colour(u) == kNoColour && !in_closed(u, a) && !in_closed(u, b)) ++want;
    EXPECT_EQ(double_block_distance(s, a, b, x), blocked ? kNotABlock : want) << "trial " << t;
  }
}

// --------------------------------------------------------------- Bob, odd

TEST(PaperBobOddRules, FreshPositionFillsTarget) {
  const auto g = make_named(NamedKind::Star, 3);
  PaperBobOdd b(1);
  Driver d(g, 5, {&b});
  EXPECT_EQ(b.choose(d.s), (Move{0, 1}));
  EXPECT_EQ(b.decisions().back().priority, 4);
}

TEST(PaperBobOddRules, RepeatedOutsideColourGoesIn) {
  // N[0] = {0,1,2}; 2 - 3 keeps vertex 2 from taking colour 5.
  const auto g = graph_of(5, {{0, 1}, {0, 2}, {2, 3}});
  PaperBobOdd b(0);
  Driver d(g, 6, {&b});
  d.play(3, 5);
  d.play(0, 1);
  d.play(4, 5);
  EXPECT_EQ(b.choose(d.s), (Move{1, 5}));
  EXPECT_EQ(b.decisions().back().priority, 1);
}

TEST(PaperBobOddRules, BlockingPairGetsUnusedColour) {
  PaperBobOdd b(0);
  Driver d(block_fixture(), 20, {&b});
  d.play(6, 1);
  EXPECT_EQ(b.choose(d.s), (Move{4, 2}));
  EXPECT_EQ(b.decisions().back().priority, 2);
  ASSERT_EQ(b.pending().size(), 1u);
  EXPECT_EQ(b.pending().front().a, 4u);
  EXPECT_EQ(b.pending().front().b, 5u);
}

TEST(PaperBobOddRules, BlockingOffWithoutReserve) {
  StrategyParams p;
  p.reserve_missing = 100;
  PaperBobOdd b(0, p);
  Driver d(block_fixture(), 20, {&b});
  d.play(6, 1);
  const Move m = b.choose(d.s);
  EXPECT_EQ(b.decisions().back().priority, 3);  // colour 1, seen once, goes in
  EXPECT_EQ(m, (Move{0, 1}));
}

TEST(PaperBobOddRules, TakesStuckTargetInRoundTwo) {
  const auto g = make_named(NamedKind::Star, 3);
  PaperBobOdd b(0);
  Driver d(g, 3, {&b});
  for (auto [v, c] : std::vector<std::pair<Vertex, Colour>>{{0, 1}, {1, 2}, {2, 3}, {3, 2}, {1, 3}}) d.play(v, c);
  ASSERT_EQ(d.s.to_move(), Player::Bob);
  EXPECT_EQ(b.choose(d.s), (Move{0, kNoColour}));
  EXPECT_EQ(b.decisions().back().priority, 6);
}

TEST(PaperBobOddRules, PrioritiesAreSoundInRandomGames) {
  int checked = 0;
  for (int t = 0; t < 40; ++t) {
    const std::size_t n = 15 + 2 * (t % 10);
    const auto g = gnp_generate({n, 0.5, 1200u + t});
    const Vertex target = static_cast<Vertex>(t % n);
    StrategyParams p;
    p.reserve_missing = 3 + t % 5;
    PaperBobOdd b(target, p);
    RandomLegal a;
    const Colour k = static_cast<Colour>(g.max_degree() / 2 + 4 + t % 6);
    GameState s(g, k, RuleVariant::Standard);
    a.begin_game(s, t);
    b.begin_game(s, 0);
    const auto& nt = g.closed_neighbourhood(target);
    auto inside = [&](Colour c) {
      std::size_t x = 0;
      nt.for_each([&](std::size_t u) { x += s.colour(static_cast<Vertex>(u)) == c; });
      return x;
    };
    auto total = [&](Colour c) {
      std::size_t x = 0;
      for (Vertex u = 0; u < n; ++u) x += s.colour(u) == c;
      return x;
    };
    auto placeable = [&](auto pred) {
      for (Vertex u = 0; u < n; ++u)
        if (nt.test(u) && !s.is_played(u))
          for (Colour c = 1; c <= k; ++c)
            if (pred(c) && brute_legal(s, u, c)) return std::optional<Move>(Move{u, c});
      return std::optional<Move>();
    };
    while (s.round() == 1) {
      const Player who = s.to_move();
      const Move m = who == Player::Alice ? a.choose(s) : b.choose(s);
      if (who == Player::Bob) {
        const int prio = b.decisions().back().priority;
        const auto r1 = placeable([&](Colour c) { return inside(c) == 0 && total(c) >= 2; });
        if (prio == 1) EXPECT_EQ(m, *r1);
        else EXPECT_FALSE(r1.has_value()) << "trial " << t;
        if (prio >= 4) EXPECT_FALSE(placeable([&](Colour c) { return inside(c) == 0 && total(c) == 1; }).has_value());
        const auto r4 = placeable([&](Colour c) { return total(c) == 0; });
        if (prio == 4) EXPECT_EQ(m, *r4);
        if (prio == 5) EXPECT_FALSE(r4.has_value());
        ++checked;
      }
      if (m.colour == kNoColour) break;
      const MoveRecord r{s.round(), s.moves_in_round(), who, m.vertex, m.colour};
      s.apply(m.vertex, m.colour);
      a.observe(s, r);
      b.observe(s, r);
    }
  }
  EXPECT_GT(checked, 200);
}

// ----------------------------------------------------------- Bob, general

TargetPlan single_plan(std::size_t n, std::vector<Vertex> xs, std::vector<Colour> ys) {
  TargetPlan tp;
  VertexSet x(n);
  for (Vertex v : xs) x.set(v);
  tp.targets.push_back(x);
  tp.colours.push_back(std::move(ys));
  tp.labels.push_back(1);
  return tp;
}

TEST(PaperBobGeneralRules, FirstMovePutsDesignatedColourInTarget) {
  StrategyParams p;
  p.reserve_missing = 0;
  PaperBobGeneral b(single_plan(6, {2, 3, 4}, {1, 2}), p);
  Driver d(make_named(NamedKind::Empty, 6), 3, {&b});
  d.play(0, 3);
  EXPECT_EQ(b.choose(d.s), (Move{2, 1}));
  EXPECT_EQ(b.decisions().back().priority, 5);
}

TEST(PaperBobGeneralRules, EndStageAnswersAlicesColour) {
  StrategyParams p;
  p.reserve_missing = 2;
  PaperBobGeneral b(single_plan(10, {2, 3, 4, 5, 6}, {5, 6, 7, 8}), p);
  Driver d(make_named(NamedKind::Empty, 10), 8, {&b});
  EXPECT_FALSE(b.in_end_stage(0));
  d.play(2, 5);
  d.play(3, 6);
  EXPECT_TRUE(b.in_end_stage(0));
  EXPECT_EQ(b.missing_from(0), 2u);
  d.play(0, 8);
  EXPECT_EQ(b.choose(d.s), (Move{4, 8}));
  EXPECT_EQ(b.decisions().back().priority, 2);
}

TEST(PaperBobGeneralRules, RepeatedColourFillsMissingSets) {
  TargetPlan tp;
  VertexSet xa(8), xb(8);
  xa.set(4);
  xa.set(5);
  xb.set(6);
  xb.set(7);
  tp.targets = {xa, xb};
  tp.colours = {{3}, {3}};
  tp.labels = {1, 2};
  StrategyParams p;
  p.reserve_missing = 0;
  p.multiplicity = 2;
  PaperBobGeneral b(tp, p);
  Driver d(make_named(NamedKind::Empty, 8), 3, {&b});
  d.play(0, 3);
  d.play(1, 3);
  d.play(2, 1);
  EXPECT_EQ(b.choose(d.s), (Move{4, 3}));
  EXPECT_EQ(b.decisions().back().priority, 1);
}

TEST(PaperBobGeneralRules, RejectsOverlappingTargets) {
  TargetPlan tp = single_plan(5, {1, 2}, {1});
  tp.targets.push_back(tp.targets[0]);
  tp.colours.push_back({2});
  PaperBobGeneral b(tp);
  GameState s(make_named(NamedKind::Empty, 5), 3, RuleVariant::Standard);
  EXPECT_THROW(b.begin_game(s, 0), std::invalid_argument);
}

TEST(EvenSetup, SingleDistinguishedVertex) {
  const auto g = gnp_generate({20, 0.5, 11});
  const auto tp = bob_even_setup(g, 1, 2, 10);
  ASSERT_EQ(tp.size(), 2u);
  EXPECT_TRUE(tp.colours[0].empty());
  EXPECT_EQ(tp.colours[1].size(), 10u);
  for (Vertex v = 1; v < 20; ++v) {
    EXPECT_EQ(tp.targets[1].test(v), g.adjacent(0, v));
    EXPECT_EQ(tp.targets[0].test(v), !g.adjacent(0, v));
  }
  EXPECT_FALSE(tp.targets[0].test(0) || tp.targets[1].test(0));
  EXPECT_EQ(tp.distinguished, (std::vector<Vertex>{0}));
}

TEST(EvenSetup, TwoDistinguishedVerticesSeeEveryColour) {
  const auto g = gnp_generate({40, 0.5, 12});
  const auto tp = bob_even_setup(g, 2, 2, 12);
  ASSERT_EQ(tp.size(), 4u);
  EXPECT_TRUE(tp.colours[0].empty());
  for (Vertex x = 0; x < 2; ++x) {
    std::set<Colour> seen;
    for (std::size_t m = 0; m < 4; ++m)
      if (m >> x & 1)
        seen.insert(tp.colours[m].begin(), tp.colours[m].end());
    EXPECT_EQ(seen.size(), 12u);
    EXPECT_EQ(*seen.begin(), 1u);
    EXPECT_EQ(*seen.rbegin(), 12u);
  }
  // Every other vertex sits in the class of its adjacency trace.
  for (Vertex v = 2; v < 40; ++v) {
    const std::size_t trace = (g.adjacent(v, 0) ? 1 : 0) | (g.adjacent(v, 1) ? 2 : 0);
    EXPECT_TRUE(tp.targets[trace].test(v));
  }
}

TEST(EvenSetup, TooSmallGraphFails) {
  EXPECT_THROW(bob_even_setup(make_named(NamedKind::Empty, 2), 2, 2, 4), SetupFailure);
}

// -------------------------------------------------------------- baselines

TEST(Baselines, FirstFitExamples) {
  const auto g = make_named(NamedKind::Complete, 3);
  GameState s(g, 3, RuleVariant::Standard);
  EXPECT_EQ(baseline_move(s, BaselinePolicy::GreedyFirstFit, 0), (Move{0, 1}));
  s.apply(0, 1);
  EXPECT_EQ(baseline_move(s, BaselinePolicy::GreedyFirstFit, 0), (Move{1, 2}));
}

TEST(Baselines, RandomLegalIsDeterministicPerSeed) {
  const auto g = gnp_generate({12, 0.5, 1});
  GameState s(g, 6, RuleVariant::Standard);
  for (std::uint64_t seed = 0; seed < 20; ++seed)
    EXPECT_EQ(baseline_move(s, BaselinePolicy::RandomLegal, seed), baseline_move(s, BaselinePolicy::RandomLegal, seed));
}

TEST(Baselines, RandomLegalCoversLegalPairsUniformly) {
  const auto g = make_named(NamedKind::Complete, 3);
  GameState s(g, 3, RuleVariant::Standard);
  std::map<std::pair<Vertex, Colour>, int> counts;
  const int draws = 9000;
  for (int i = 0; i < draws; ++i) {
    const Move m = baseline_move(s, BaselinePolicy::RandomLegal, derive_seed(77, {std::uint64_t(i)}));
    ASSERT_TRUE(brute_legal(s, m.vertex, m.colour));
    ++counts[{m.vertex, m.colour}];
  }
  ASSERT_EQ(counts.size(), 9u);
  for (auto& [pair, c] : counts) {
    EXPECT_GT(c, 850);
    EXPECT_LT(c, 1150);
  }
}

TEST(Baselines, RandomLegalOnlyPicksStuckVertexWhenForced) {
  const auto g = make_named(NamedKind::Star, 3);
  GameState s(g, 3, RuleVariant::Standard);
  for (auto [v, c] : std::vector<std::pair<Vertex, Colour>>{{0, 1}, {1, 2}, {2, 3}, {3, 2}}) s.apply(v, c);
  // Centre is stuck, leaves are not.
  for (std::uint64_t seed = 0; seed < 50; ++seed)
    EXPECT_NE(baseline_move(s, BaselinePolicy::RandomLegal, seed).vertex, 0u);
}

}  // namespace
}  // namespace egc

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
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <nlohmann/json.hpp>

#include "egc/game.hpp"
#include "egc/graph.hpp"
#include "egc/rational.hpp"
#include "egc/rng.hpp"

namespace egc {

enum class AuditMethod { Exhaustive, Sampled, Battery };

inline std::string to_string(AuditMethod m) {
  switch (m) {
    case AuditMethod::Exhaustive:
      return "exhaustive";
    case AuditMethod::Sampled:
      return "sampled";
    case AuditMethod::Battery:
      return "battery";
  }
  return "?";
}

struct PropertyResult {
  std::string name;
  bool holds = true;
  AuditMethod method = AuditMethod::Exhaustive;
  std::vector<Vertex> witness;  // offending vertices, empty when the property holds
  nlohmann::json detail = nlohmann::json::object();
};

struct PropertyReport {
  std::vector<PropertyResult> properties;

  bool all_hold() const {
    return std::all_of(properties.begin(), properties.end(), [](const auto& p) { return p.holds; });
  }
  const PropertyResult* find(const std::string& name) const {
    for (const auto& p : properties)
      if (p.name == name) return &p;
    return nullptr;
  }
};

inline nlohmann::json to_json(const PropertyResult& r) {
  return {{"name", r.name}, {"holds", r.holds}, {"method", to_string(r.method)}, {"witness", r.witness},
          {"detail", r.detail}};
}

inline nlohmann::json to_json(const PropertyReport& r) {
  nlohmann::json props = nlohmann::json::array();
  for (const auto& p : r.properties) props.push_back(to_json(p));
  return {{"allHold", r.all_hold()}, {"properties", props}};
}

/// ceil(frac * n) clamped at zero; the single rounding rule for thresholds.
inline std::size_t resolve_count(const Rational& frac, std::size_t n) {
  const BigInt c = ceil_of(frac * Rational(static_cast<long long>(n)));
  return c <= 0 ? 0 : static_cast<std::size_t>(c);
}

// ---------------------------------------------------------------- degrees

/// Max degree <= (p + eps/100) n and min degree >= (p - eps/100) n, exactly.
inline PropertyReport check_degree_bounds(const Graph& g, const Rational& p, const Rational& epsilon) {
  const Rational n(static_cast<long long>(g.n()));
  const Rational upper = (p + epsilon / 100) * n;
  const Rational lower = (p - epsilon / 100) * n;
  PropertyResult hi{"max-degree", true, AuditMethod::Exhaustive, {}, {}};
  PropertyResult lo{"min-degree", true, AuditMethod::Exhaustive, {}, {}};
  for (Vertex v = 0; v < g.n(); ++v) {
    const Rational d(static_cast<long long>(g.degree(v)));
    if (d > upper) hi.witness.push_back(v);
    if (d < lower) lo.witness.push_back(v);
  }
  hi.holds = hi.witness.empty();
  lo.holds = lo.witness.empty();
  hi.detail = {{"bound", to_string(upper)}, {"maxDegree", g.n() ? g.max_degree() : 0}};
  lo.detail = {{"bound", to_string(lower)}, {"minDegree", g.n() ? g.min_degree() : 0}};
  return {{hi, lo}};
}

// ------------------------------------------------------ unbalanced triples

/// Vertices adjacent to at least `imbalance` more vertices of B than of A.
inline std::vector<Vertex> imbalanced_vertices(const Graph& g, const VertexSet& a, const VertexSet& b,
                                               std::size_t imbalance) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.n(); ++v) {
    const auto& nv = g.neighbours(v);
    if (nv.intersect_count(b) >= nv.intersect_count(a) + imbalance) out.push_back(v);
  }
  return out;
}

struct UnbalancedOptions {
  std::size_t exhaustive_max_n = 12;
  std::size_t samples = 10'000;
  std::size_t adversarial_rounds = 50;
  std::uint64_t seed = 1;
};

/**
 * Searches for disjoint A, B with |A| = |B| >= setSize and at least K
 * vertices favouring B by `imbalance`. Reports the largest number of such
 * vertices found; the property holds when that maximum is below K.
 */
inline PropertyResult check_unbalanced_triple(const Graph& g, std::size_t set_size, std::size_t imbalance,
                                              std::size_t K, const UnbalancedOptions& opt = {}) {
  const std::size_t n = g.n();
  PropertyResult r{"unbalanced-triple", true, AuditMethod::Exhaustive, {}, {}};
  std::vector<Vertex> best;
  VertexSet best_a(n), best_b(n);
  auto consider = [&](const VertexSet& a, const VertexSet& b) {
    auto s = imbalanced_vertices(g, a, b, imbalance);
    if (s.size() > best.size() || (best.empty() && !s.empty())) {
      best = std::move(s);
      best_a = a;
      best_b = b;
    }
  };
  const std::size_t s0 = std::max<std::size_t>(set_size, 1);
  if (2 * s0 > n) {
    r.detail = {{"maxImbalanced", 0}, {"note", "no disjoint pair of the required size"}};
    return r;
  }
  if (n <= opt.exhaustive_max_n) {
    // Every assignment of vertices to {none, A, B}.
    std::vector<std::uint8_t> side(n, 0);
    VertexSet a(n), b(n);
    for (;;) {
      const auto ca = a.count(), cb = b.count();
      if (ca == cb && ca >= s0) consider(a, b);
      std::size_t i = 0;
      while (i < n && side[i] == 2) {
        side[i] = 0;
        b.reset(i);
        ++i;
      }
      if (i == n) break;
      if (side[i] == 0) {
        side[i] = 1;
        a.set(i);
      } else {
        side[i] = 2;
        a.reset(i);
        b.set(i);
      }
    }
  } else {
    r.method = AuditMethod::Sampled;
    Rng rng(opt.seed);
    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), Vertex{0});
    for (std::size_t t = 0; t < opt.samples; ++t) {
      for (std::size_t i = 0; i < 2 * s0; ++i) std::swap(perm[i], perm[i + uniform_below(rng, n - i)]);
      VertexSet a(n), b(n);
      for (std::size_t i = 0; i < s0; ++i) {
        a.set(perm[i]);
        b.set(perm[s0 + i]);
      }
      consider(a, b);
    }
    // Adversarial refinement: given a candidate S, put the vertices seeing
    // S most into B and those seeing it least into A, then re-derive S as
    // the K most imbalanced vertices.
    for (std::size_t t = 0; t < opt.adversarial_rounds; ++t) {
      VertexSet s(n);
      for (std::size_t i = 0; i < std::min(K, n); ++i) s.set(perm[uniform_below(rng, n)]);
      for (int iter = 0; iter < 5; ++iter) {
        std::vector<std::pair<std::size_t, Vertex>> score(n);
        for (Vertex v = 0; v < n; ++v) score[v] = {g.neighbours(v).intersect_count(s), v};
        std::sort(score.begin(), score.end());
        VertexSet a(n), b(n);
        for (std::size_t i = 0; i < s0; ++i) {
          a.set(score[i].second);
          b.set(score[n - 1 - i].second);
        }
        consider(a, b);
        std::vector<std::pair<long, Vertex>> imb(n);
        for (Vertex v = 0; v < n; ++v) {
          const auto& nv = g.neighbours(v);
          imb[v] = {-(static_cast<long>(nv.intersect_count(b)) - static_cast<long>(nv.intersect_count(a))), v};
        }
        std::sort(imb.begin(), imb.end());
        s.clear();
        for (std::size_t i = 0; i < std::min(K, n); ++i) s.set(imb[i].second);
      }
    }
  }
  r.holds = best.size() < K;
  if (!r.holds) r.witness = best;
  r.detail = {{"maxImbalanced", best.size()}, {"K", K}, {"setSize", s0}, {"imbalance", imbalance}};
  if (!best.empty()) {
    r.detail["A"] = best_a.members();
    r.detail["B"] = best_b.members();
  }
  return r;
}

// ------------------------------------------------------------ nearly full

struct NearlyFullCount {
  std::size_t count = 0;
  std::vector<Vertex> vertices;
};

/**
 * Vertices whose closed neighbourhood contains all but at most
 * `missing_threshold` of the colours 1..palette. The colouring may be
 * partial or improper; colours outside the palette are ignored.
 */
inline NearlyFullCount count_nearly_full_vertices(const Graph& g, const std::vector<Colour>& colouring,
                                                  std::size_t palette, std::size_t missing_threshold) {
  if (colouring.size() != g.n()) throw std::invalid_argument("colouring size mismatch");
  NearlyFullCount out;
  std::vector<std::uint32_t> seen(palette + 1, 0);
  std::uint32_t stamp = 0;
  for (Vertex v = 0; v < g.n(); ++v) {
    ++stamp;
    std::size_t distinct = 0;
    g.closed_neighbourhood(v).for_each([&](std::size_t u) {
      const Colour c = colouring[u];
      if (c >= 1 && c <= palette && seen[c] != stamp) {
        seen[c] = stamp;
        ++distinct;
      }
    });
    if (palette - distinct <= missing_threshold) out.vertices.push_back(v);
  }
  out.count = out.vertices.size();
  return out;
}

// ------------------------------------------------------------ block sets

struct BlockSetSearch {
  AuditMethod method = AuditMethod::Exhaustive;
  std::vector<std::vector<Vertex>> sets;  // every qualifying m-set found (capped)
  bool truncated = false;
  std::vector<std::vector<Vertex>> disjoint_family;  // greedy, in discovery order
  std::size_t examined = 0;
};

struct BlockSetOptions {
  double exhaustive_limit = 1e7;
  std::size_t samples = 1'000'000;
  std::size_t max_sets = 100'000;
  std::uint64_t seed = 1;
};

inline double binomial_double(std::size_t n, std::size_t m) {
  if (m > n) return 0.0;
  double r = 1.0;
  for (std::size_t i = 1; i <= m; ++i) r = r * static_cast<double>(n - m + i) / static_cast<double>(i);
  return r;
}

/// m-sets whose closed neighbourhoods cover all but at most deltaCount of S.
inline BlockSetSearch find_m_block_sets(const Graph& g, const VertexSet& s, std::size_t m, std::size_t delta_count,
                                        const BlockSetOptions& opt = {}) {
  const std::size_t n = g.n();
  BlockSetSearch out;
  if (m == 0 || m > n) return out;
  auto accept = [&](const std::vector<Vertex>& set) {
    if (out.sets.size() >= opt.max_sets) {
      out.truncated = true;
      return;
    }
    out.sets.push_back(set);
  };
  if (binomial_double(n, m) <= opt.exhaustive_limit) {
    std::vector<Vertex> pick;
    std::vector<VertexSet> uncovered{s};
    auto rec = [&](auto&& self, Vertex from) -> void {
      if (pick.size() == m) {
        ++out.examined;
        if (uncovered.back().count() <= delta_count) accept(pick);
        return;
      }
      for (Vertex v = from; v + (m - pick.size()) <= n; ++v) {
        pick.push_back(v);
        uncovered.push_back(uncovered.back() - g.closed_neighbourhood(v));
        self(self, v + 1);
        uncovered.pop_back();
        pick.pop_back();
      }
    };
    rec(rec, 0);
  } else {
    out.method = AuditMethod::Sampled;
    Rng rng(opt.seed);
    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), Vertex{0});
    for (std::size_t t = 0; t < opt.samples; ++t) {
      for (std::size_t i = 0; i < m; ++i) std::swap(perm[i], perm[i + uniform_below(rng, n - i)]);
      std::vector<Vertex> pick(perm.begin(), perm.begin() + static_cast<std::ptrdiff_t>(m));
      std::sort(pick.begin(), pick.end());
      VertexSet unc = s;
      for (auto v : pick) unc.subtract(g.closed_neighbourhood(v));
      ++out.examined;
      if (unc.count() <= delta_count && std::find(out.sets.begin(), out.sets.end(), pick) == out.sets.end())
        accept(pick);
    }
  }
  VertexSet used(n);
  for (const auto& set : out.sets) {
    if (std::any_of(set.begin(), set.end(), [&](Vertex v) { return used.test(v); })) continue;
    for (auto v : set) used.set(v);
    out.disjoint_family.push_back(set);
  }
  return out;
}

/// Triples u, v, w with |N[u] \ (N[v] u N[w])| <= deltaCount (exhaustive).
inline PropertyResult check_dominated_triples(const Graph& g, std::size_t delta_count) {
  PropertyResult r{"no-dominated-triple", true, AuditMethod::Exhaustive, {}, {}};
  const auto n = static_cast<Vertex>(g.n());
  for (Vertex u = 0; u < n && r.holds; ++u)
    for (Vertex v = 0; v < n && r.holds; ++v) {
      if (v == u) continue;
      for (Vertex w = v + 1; w < n; ++w) {
        if (w == u) continue;
        if (g.closed_neighbourhood(u).count_outside_union(g.closed_neighbourhood(v), g.closed_neighbourhood(w)) <=
            delta_count) {
          r.holds = false;
          r.witness = {u, v, w};
          break;
        }
      }
    }
  r.detail = {{"deltaCount", delta_count}};
  return r;
}

// -------------------------------------------------------------- Hoeffding

using BigFloat = boost::multiprecision::cpp_bin_float_100;

struct HoeffdingResult {
  Rational exact_upper;  // P(Bin(n,p) >= (p+eps) n)
  Rational exact_lower;  // P(Bin(n,p) <= (p-eps) n)
  BigFloat bound;        // exp(-2 eps^2 n)
  bool holds = false;
  bool ambiguous = false;  // too close to call at 100 digits; never observed
};

namespace detail {

// Integer weights C(n,j) a^j (b-a)^(n-j) of P(Bin(n, a/b) = j) * b^n.
inline std::vector<BigInt> binomial_weights(std::size_t n, const BigInt& a, const BigInt& b) {
  std::vector<BigInt> w(n + 1);
  std::vector<BigInt> pa(n + 1), pq(n + 1);
  pa[0] = pq[0] = 1;
  for (std::size_t i = 1; i <= n; ++i) {
    pa[i] = pa[i - 1] * a;
    pq[i] = pq[i - 1] * (b - a);
  }
  BigInt binom = 1;
  for (std::size_t j = 0; j <= n; ++j) {
    w[j] = binom * pa[j] * pq[n - j];
    binom = binom * (n - j) / (j + 1);
  }
  return w;
}

inline bool tail_within(const Rational& tail, const BigFloat& bound, bool& ambiguous) {
  if (tail == 0) return true;
  const BigFloat t = BigFloat(boost::multiprecision::numerator(tail)) / BigFloat(boost::multiprecision::denominator(tail));
  if (abs(t - bound) <= bound * BigFloat("1e-90")) ambiguous = true;
  return t <= bound;
}

inline HoeffdingResult hoeffding_from_weights(std::size_t n, const std::vector<BigInt>& w, const BigInt& denom,
                                              const Rational& p, const Rational& eps) {
  HoeffdingResult r;
  const Rational nn(static_cast<long long>(n));
  const BigInt hi = ceil_of((p + eps) * nn);
  const BigInt lo = floor_of((p - eps) * nn);
  BigInt up = 0, down = 0;
  for (std::size_t j = 0; j <= n; ++j) {
    if (BigInt(static_cast<long long>(j)) >= hi) up += w[j];
    if (BigInt(static_cast<long long>(j)) <= lo) down += w[j];
  }
  r.exact_upper = Rational(up, denom);
  r.exact_lower = Rational(down, denom);
  const Rational expo = -2 * eps * eps * nn;
  r.bound = exp(BigFloat(boost::multiprecision::numerator(expo)) / BigFloat(boost::multiprecision::denominator(expo)));
  r.holds = tail_within(r.exact_upper, r.bound, r.ambiguous) && tail_within(r.exact_lower, r.bound, r.ambiguous);
  return r;
}

}  // namespace detail

/// Exact binomial tails on both sides against exp(-2 eps^2 n); p in [0,1].
inline HoeffdingResult hoeffding_check(std::size_t n, const Rational& p, const Rational& epsilon) {
  if (p < 0 || p > 1 || epsilon < 0) throw std::invalid_argument("need 0 <= p <= 1 and eps >= 0");
  if (n > 10'000) throw std::invalid_argument("n above 10^4");
  const BigInt a = boost::multiprecision::numerator(p), b = boost::multiprecision::denominator(p);
  BigInt denom = 1;
  for (std::size_t i = 0; i < n; ++i) denom *= b;
  return detail::hoeffding_from_weights(n, detail::binomial_weights(n, a, b), denom, p, epsilon);
}

struct HoeffdingGridResult {
  std::size_t checked = 0;
  std::size_t failures = 0;
  std::size_t ambiguous = 0;
  std::vector<std::tuple<std::size_t, Rational, Rational>> failing;
};

/// Same check over a grid, sharing the binomial weights across epsilons.
inline HoeffdingGridResult hoeffding_grid(const std::vector<std::size_t>& ns, const std::vector<Rational>& ps,
                                          const std::vector<Rational>& epsilons) {
  HoeffdingGridResult out;
  for (auto n : ns)
    for (const auto& p : ps) {
      const BigInt a = boost::multiprecision::numerator(p), b = boost::multiprecision::denominator(p);
      BigInt denom = 1;
      for (std::size_t i = 0; i < n; ++i) denom *= b;
      const auto w = detail::binomial_weights(n, a, b);
      for (const auto& eps : epsilons) {
        const auto r = detail::hoeffding_from_weights(n, w, denom, p, eps);
        ++out.checked;
        if (r.ambiguous) ++out.ambiguous;
        if (!r.holds) {
          ++out.failures;
          out.failing.emplace_back(n, p, eps);
        }
      }
    }
  return out;
}

// ------------------------------------------------------------- full audit

struct AuditParams {
  Rational p = make_rational(1, 2);
  Rational epsilon = make_rational(1, 10);
  Rational beta = make_rational(1, 1000);
  Rational gamma = make_rational(1, 100);
  Rational delta = make_rational(1, 100);
  std::size_t K = 10;   // unbalanced-triple and block-pair budget
  std::size_t m = 2;    // block set size
  double C = 1.0;       // nearly-full count limit, times log n
  double D = 1.0;       // small-colour count limit, times log n
  std::size_t random_colourings = 5;
  std::size_t block_samples = 3;  // random S for the block-pair property
  UnbalancedOptions unbalanced;
  std::uint64_t seed = 1;
};

inline nlohmann::json to_json(const AuditParams& a) {
  return {{"p", to_string(a.p)},
          {"epsilon", to_string(a.epsilon)},
          {"beta", to_string(a.beta)},
          {"gamma", to_string(a.gamma)},
          {"delta", to_string(a.delta)},
          {"K", a.K},
          {"m", a.m},
          {"C", a.C},
          {"D", a.D},
          {"randomColourings", a.random_colourings},
          {"blockSamples", a.block_samples},
          {"samples", a.unbalanced.samples},
          {"seed", a.seed}};
}

inline AuditParams audit_params_from_json(const nlohmann::json& j) {
  AuditParams a;
  auto frac = [&](const char* key, Rational& f) {
    if (j.contains(key)) f = j.at(key).is_string() ? parse_rational(j.at(key).get<std::string>())
                                                  : parse_rational(j.at(key).dump());
  };
  frac("p", a.p);
  frac("epsilon", a.epsilon);
  frac("beta", a.beta);
  frac("gamma", a.gamma);
  frac("delta", a.delta);
  a.K = j.value("K", a.K);
  a.m = j.value("m", a.m);
  a.C = j.value("C", a.C);
  a.D = j.value("D", a.D);
  a.random_colourings = j.value("randomColourings", a.random_colourings);
  a.block_samples = j.value("blockSamples", a.block_samples);
  a.unbalanced.samples = j.value("samples", a.unbalanced.samples);
  a.seed = j.value("seed", a.seed);
  a.unbalanced.seed = derive_seed(a.seed, {1});
  return a;
}

/// Colourings the colour-quantified properties are audited against.
inline std::vector<std::vector<Colour>> colouring_battery(const Graph& g, std::size_t palette, std::size_t randoms,
                                                          std::uint64_t seed) {
  const std::size_t n = g.n();
  std::vector<std::vector<Colour>> out;
  if (palette == 0) return out;
  Rng rng(seed);
  for (std::size_t t = 0; t < randoms; ++t) {
    std::vector<Colour> c(n);
    for (auto& x : c) x = static_cast<Colour>(1 + uniform_below(rng, palette));
    out.push_back(std::move(c));
  }
  // Cyclic: every colour used about equally.
  std::vector<Colour> cyc(n);
  for (std::size_t v = 0; v < n; ++v) cyc[v] = static_cast<Colour>(1 + v % palette);
  out.push_back(std::move(cyc));
  // Saturate vertex neighbourhoods one at a time, highest degree first.
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), Vertex{0});
  std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
  std::vector<Colour> sat(n, 0);
  for (auto v : order) {
    std::vector<bool> present(palette + 1, false);
    g.closed_neighbourhood(v).for_each([&](std::size_t u) {
      if (sat[u]) present[sat[u]] = true;
    });
    Colour next = 1;
    g.closed_neighbourhood(v).for_each([&](std::size_t u) {
      if (sat[u]) return;
      while (next <= palette && present[next]) ++next;
      sat[u] = next <= palette ? next : static_cast<Colour>(1 + uniform_below(rng, palette));
      if (next <= palette) present[next] = true;
    });
  }
  out.push_back(std::move(sat));
  return out;
}

/**
 * Runs every finite-n property check on one graph. Colour-quantified
 * properties use colouring_battery() rather than all colourings.
 */
inline PropertyReport audit_graph(const Graph& g, const AuditParams& a) {
  const std::size_t n = g.n();
  PropertyReport rep = check_degree_bounds(g, a.p, a.epsilon);
  const double logn = n > 1 ? std::log(static_cast<double>(n)) : 0.0;

  const auto side = resolve_count(a.epsilon / 200, n);
  rep.properties.push_back(check_unbalanced_triple(g, side, side, a.K, a.unbalanced));

  const auto palette = resolve_count(a.p / 2 + a.epsilon, n);
  const auto battery = colouring_battery(g, palette, a.random_colourings, derive_seed(a.seed, {2}));
  auto colour_property = [&](const char* name, std::size_t colours, std::size_t threshold, double limit) {
    PropertyResult r{name, true, AuditMethod::Battery, {}, {}};
    std::size_t worst = 0;
    for (const auto& c : battery) {
      // Restricting to colours 1..colours: anything larger is ignored.
      const auto got = count_nearly_full_vertices(g, c, colours, threshold);
      if (got.count > worst) {
        worst = got.count;
        if (static_cast<double>(got.count) > limit) r.witness = got.vertices;
      }
    }
    r.holds = static_cast<double>(worst) <= limit;
    if (r.holds) r.witness.clear();
    r.detail = {{"palette", colours}, {"missingThreshold", threshold}, {"limit", limit}, {"maxCount", worst},
                {"colourings", battery.size()}};
    rep.properties.push_back(std::move(r));
  };
  colour_property("nearly-full", palette, resolve_count(2 * a.beta, n), a.C * logn);
  colour_property("small-colours-full", std::min(palette, resolve_count(a.epsilon / 200, n)),
                  resolve_count(a.gamma, n), a.D * logn);

  const auto delta_count = resolve_count(a.delta, n);
  rep.properties.push_back(check_dominated_triples(g, delta_count));

  PropertyResult blocks{"few-block-pairs", true, AuditMethod::Sampled, {}, {}};
  std::size_t worst = 0;
  Rng rng(derive_seed(a.seed, {3}));
  const auto s_size = std::min(n, resolve_count(a.epsilon / 100, n));
  for (std::size_t t = 0; t < a.block_samples && s_size > 0; ++t) {
    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), Vertex{0});
    for (std::size_t i = 0; i < s_size; ++i) std::swap(perm[i], perm[i + uniform_below(rng, n - i)]);
    VertexSet s(n);
    for (std::size_t i = 0; i < s_size; ++i) s.set(perm[i]);
    BlockSetOptions bo;
    bo.seed = derive_seed(a.seed, {4, t});
    const auto found = find_m_block_sets(g, s, a.m, delta_count, bo);
    if (found.method == AuditMethod::Exhaustive) blocks.method = AuditMethod::Exhaustive;
    if (found.disjoint_family.size() > worst) {
      worst = found.disjoint_family.size();
      if (worst > a.K) {
        blocks.witness.clear();
        for (const auto& set : found.disjoint_family) blocks.witness.insert(blocks.witness.end(), set.begin(), set.end());
      }
    }
  }
  blocks.holds = worst <= a.K;
  if (blocks.holds) blocks.witness.clear();
  blocks.detail = {{"setSize", s_size}, {"m", a.m}, {"deltaCount", delta_count}, {"maxDisjointFamily", worst},
                   {"K", a.K}};
  rep.properties.push_back(std::move(blocks));
  return rep;
}

}  // namespace egc

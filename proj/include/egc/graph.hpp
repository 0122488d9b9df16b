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
#include <cstddef>
#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "egc/bitset.hpp"
#include "egc/rng.hpp"

namespace egc {

using Vertex = std::uint32_t;
using VertexSet = Bitset;
using Edge = std::pair<Vertex, Vertex>;

/**
 * Immutable simple undirected graph on vertices 0..n-1 with bit-matrix
 * adjacency. Both the open neighbourhood and the closed neighbourhood
 * (vertex plus its neighbours) are stored per vertex, since most game
 * logic works with the closed one.
 */
class Graph {
 public:
  Graph() = default;

  Graph(std::size_t n, const std::vector<Edge>& edges) : n_(n), open_(n, Bitset(n)), closed_(n, Bitset(n)) {
    for (auto [u, v] : edges) {
      if (u >= n || v >= n) throw std::invalid_argument("edge endpoint out of range");
      if (u == v) throw std::invalid_argument("self-loops are not allowed");
      if (!open_[u].test(v)) ++edge_count_;
      open_[u].set(v);
      open_[v].set(u);
    }
    for (std::size_t v = 0; v < n; ++v) {
      closed_[v] = open_[v];
      closed_[v].set(v);
    }
  }

  std::size_t n() const { return n_; }
  std::size_t edge_count() const { return edge_count_; }

  bool adjacent(Vertex u, Vertex v) const { return open_[u].test(v); }
  std::size_t degree(Vertex v) const { return open_[v].count(); }
  const VertexSet& neighbours(Vertex v) const { return open_[v]; }
  const VertexSet& closed_neighbourhood(Vertex v) const { return closed_[v]; }

  std::size_t max_degree() const {
    std::size_t d = 0;
    for (Vertex v = 0; v < n_; ++v) d = std::max(d, degree(v));
    return d;
  }
  std::size_t min_degree() const {
    if (n_ == 0) return 0;
    std::size_t d = n_;
    for (Vertex v = 0; v < n_; ++v) d = std::min(d, degree(v));
    return d;
  }

  /// Edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < n_; ++u)
      open_[u].for_each([&](std::size_t v) {
        if (v > u) out.emplace_back(u, static_cast<Vertex>(v));
      });
    return out;
  }

  /// Induced subgraph on `keep`, vertices renumbered in increasing order.
  Graph induced(const std::vector<Vertex>& keep) const {
    std::vector<Edge> es;
    for (std::size_t i = 0; i < keep.size(); ++i)
      for (std::size_t j = i + 1; j < keep.size(); ++j)
        if (adjacent(keep[i], keep[j])) es.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
    return Graph(keep.size(), es);
  }

  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.open_ == b.open_; }

 private:
  std::size_t n_ = 0;
  std::size_t edge_count_ = 0;
  std::vector<Bitset> open_;
  std::vector<Bitset> closed_;
};

/// The paper-convention neighbourhood: v together with everything adjacent to it.
inline VertexSet closed_neighborhood(const Graph& g, Vertex v) {
  if (v >= g.n()) throw std::out_of_range("vertex out of range");
  return g.closed_neighbourhood(v);
}

struct GnpSpec {
  std::size_t n = 0;
  double p = 0.0;
  std::uint64_t seed = 0;
};

/// One draw per pair (i, j), i < j, in lexicographic order; edge iff draw < p.
inline Graph gnp_generate(const GnpSpec& spec) {
  if (!(spec.p >= 0.0 && spec.p <= 1.0)) throw std::invalid_argument("edge probability must lie in [0,1]");
  Rng rng(spec.seed);
  std::vector<Edge> edges;
  for (Vertex i = 0; i < spec.n; ++i)
    for (Vertex j = i + 1; j < spec.n; ++j)
      if (uniform01(rng) < spec.p) edges.emplace_back(i, j);
  return Graph(spec.n, edges);
}

enum class NamedKind { Star, Path, Cycle, Complete, Empty };

/// Star m is K_{1,m} with centre 0; the others have n vertices in the usual order.
inline Graph make_named(NamedKind kind, std::size_t size) {
  if (size < 1) throw std::invalid_argument("named graph size must be at least 1");
  std::vector<Edge> es;
  switch (kind) {
    case NamedKind::Star:
      for (Vertex leaf = 1; leaf <= size; ++leaf) es.emplace_back(0, leaf);
      return Graph(size + 1, es);
    case NamedKind::Path:
      for (Vertex v = 0; v + 1 < size; ++v) es.emplace_back(v, v + 1);
      return Graph(size, es);
    case NamedKind::Cycle:
      if (size < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
      for (Vertex v = 0; v < size; ++v) es.emplace_back(v, static_cast<Vertex>((v + 1) % size));
      return Graph(size, es);
    case NamedKind::Complete:
      for (Vertex u = 0; u < size; ++u)
        for (Vertex v = u + 1; v < size; ++v) es.emplace_back(u, v);
      return Graph(size, es);
    case NamedKind::Empty:
      return Graph(size, es);
  }
  throw std::invalid_argument("unknown graph kind");
}

// Plain-text edge list: "n m" then one "u v" line per edge, u < v, sorted.
inline void write_edge_list(std::ostream& os, const Graph& g) {
  os << g.n() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) os << u << ' ' << v << '\n';
}

inline std::string to_edge_list(const Graph& g) {
  std::ostringstream os;
  write_edge_list(os, g);
  return os.str();
}

inline Graph read_edge_list(std::istream& is) {
  std::size_t n = 0, m = 0;
  if (!(is >> n >> m)) throw std::runtime_error("edge list: missing header");
  std::vector<Edge> es;
  es.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    std::int64_t u = 0, v = 0;
    if (!(is >> u >> v)) throw std::runtime_error("edge list: truncated");
    if (u < 0 || v < 0) throw std::runtime_error("edge list: negative vertex id");
    es.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  Graph g(n, es);
  if (g.edge_count() != m) throw std::runtime_error("edge list: duplicate edges");
  return g;
}

}  // namespace egc

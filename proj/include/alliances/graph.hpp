#pragma once

#include <algorithm>
#include <queue>
#include <string>
#include <utility>
#include <vector>

#include "alliances/error.hpp"
#include "alliances/vertex_set.hpp"

namespace alliances {

// Simple undirected graph, immutable after construction.
// Duplicate edges and self loops are construction errors, not warnings:
// every predicate downstream assumes a simple graph.
class Graph {
 public:
  Graph() = default;

  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 0) fail(Err::bad_params, "vertex count must be non-negative");
    Graph g;
    g.n_ = n;
    g.nbrs_.resize(static_cast<size_t>(n));
    g.rows_.assign(static_cast<size_t>(n), VertexSet(n));
    for (auto [u, v] : edges) {
      if (u < 0 || u >= n || v < 0 || v >= n)
        fail(Err::vertex_out_of_range,
             "edge (" + std::to_string(u) + "," + std::to_string(v) + ") with n=" + std::to_string(n));
      if (u == v) fail(Err::self_loop, "vertex " + std::to_string(u));
      if (g.rows_[static_cast<size_t>(u)].contains(v))
        fail(Err::duplicate_edge, "(" + std::to_string(u) + "," + std::to_string(v) + ")");
      g.rows_[static_cast<size_t>(u)].insert(v);
      g.rows_[static_cast<size_t>(v)].insert(u);
      g.nbrs_[static_cast<size_t>(u)].push_back(v);
      g.nbrs_[static_cast<size_t>(v)].push_back(u);
    }
    for (auto& list : g.nbrs_) std::sort(list.begin(), list.end());
    for (int u = 0; u < n; ++u)
      for (int v : g.nbrs_[static_cast<size_t>(u)])
        if (u < v) g.edges_.emplace_back(u, v);
    return g;
  }

  int n() const { return n_; }
  int m() const { return static_cast<int>(edges_.size()); }

  int degree(int v) const {
    require_vertex(v);
    return static_cast<int>(nbrs_[static_cast<size_t>(v)].size());
  }

  const std::vector<int>& neighbors(int v) const {
    require_vertex(v);
    return nbrs_[static_cast<size_t>(v)];
  }

  const VertexSet& adjacency(int v) const {
    require_vertex(v);
    return rows_[static_cast<size_t>(v)];
  }

  bool has_edge(int u, int v) const {
    require_vertex(u);
    return rows_[static_cast<size_t>(u)].contains(v);
  }

  // Canonical order: sorted pairs with u < v.
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  int min_degree() const {
    int md = n_ == 0 ? 0 : n_;
    for (const auto& list : nbrs_) md = std::min(md, static_cast<int>(list.size()));
    return md;
  }

  // True when every vertex has the same degree; writes that degree if asked.
  bool is_regular(int* degree_out = nullptr) const {
    if (n_ == 0) return false;
    int d = degree(0);
    for (int v = 1; v < n_; ++v)
      if (degree(v) != d) return false;
    if (degree_out) *degree_out = d;
    return true;
  }

  void require_vertex(int v) const {
    if (v < 0 || v >= n_)
      fail(Err::vertex_out_of_range,
           "vertex " + std::to_string(v) + " in graph with n=" + std::to_string(n_));
  }

 private:
  int n_ = 0;
  std::vector<std::vector<int>> nbrs_;
  std::vector<VertexSet> rows_;
  std::vector<std::pair<int, int>> edges_;
};

struct DegreeSplit {
  int inside = 0;   // neighbors of v that lie in the set
  int outside = 0;  // neighbors of v that do not
};

inline DegreeSplit degree_split(const Graph& g, const VertexSet& s, int v) {
  g.require_vertex(v);
  if (s.universe() != g.n())
    fail(Err::vertex_out_of_range, "set universe does not match graph");
  DegreeSplit d;
  d.inside = g.adjacency(v).intersection_count(s);
  d.outside = g.degree(v) - d.inside;
  return d;
}

// N[s] = V, i.e. every vertex is in s or adjacent to it. The empty set
// dominates only the empty graph.
inline bool is_dominating(const Graph& g, const VertexSet& s) {
  if (s.universe() != g.n())
    fail(Err::vertex_out_of_range, "set universe does not match graph");
  for (int v = 0; v < g.n(); ++v) {
    if (!s.contains(v) && !s.intersects(g.adjacency(v))) return false;
  }
  return true;
}

// G^r: edges between distinct vertices at distance <= r. BFS per vertex.
inline Graph graph_power(const Graph& g, int radius) {
  if (radius < 1) fail(Err::bad_params, "power radius must be >= 1");
  std::vector<std::pair<int, int>> edges;
  std::vector<int> dist(static_cast<size_t>(g.n()));
  std::vector<int> frontier;
  for (int src = 0; src < g.n(); ++src) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[static_cast<size_t>(src)] = 0;
    frontier.assign(1, src);
    for (int depth = 1; depth <= radius && !frontier.empty(); ++depth) {
      std::vector<int> next;
      for (int u : frontier) {
        for (int w : g.neighbors(u)) {
          if (dist[static_cast<size_t>(w)] == -1) {
            dist[static_cast<size_t>(w)] = depth;
            next.push_back(w);
            if (src < w) edges.emplace_back(src, w);
          }
        }
      }
      frontier = std::move(next);
    }
  }
  return Graph::from_edges(g.n(), edges);
}

}  // namespace alliances

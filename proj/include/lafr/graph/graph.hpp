#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <queue>
#include <utility>
#include <vector>

#include "lafr/error.hpp"
#include "lafr/exact/matrix.hpp"

namespace lafr {

using Vertex = std::size_t;
using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph on vertices 0..n-1. Edges are stored sorted with
/// u < v inside each pair, so equality is equality of (n, edge set).
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n) : n_(n), adj_(n) {}

  Graph(std::size_t n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)), adj_(n) {
    for (auto& [u, v] : edges_) {
      if (u >= n_ || v >= n_) throw DomainError("edge endpoint out of range");
      if (u == v) throw DomainError("self-loop in a simple graph");
      if (u > v) std::swap(u, v);
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
      throw DomainError("repeated edge in a simple graph");
    for (const auto& [u, v] : edges_) {
      adj_[u].push_back(v);
      adj_[v].push_back(u);
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
  }

  std::size_t order() const { return n_; }
  std::size_t size() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<Vertex>& neighbors(Vertex v) const { return adj_.at(v); }
  std::size_t degree(Vertex v) const { return adj_.at(v).size(); }

  bool adjacent(Vertex u, Vertex v) const {
    const auto& nb = adj_.at(u);
    return std::binary_search(nb.begin(), nb.end(), v);
  }

  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.edges_ == b.edges_; }

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adj_;
};

/// Index of the pair (i, j), i < j, in the column-major upper-triangle order
/// used by graph6 and by bitmask enumeration: (0,1), (0,2), (1,2), (0,3), ...
constexpr std::size_t pair_index(Vertex i, Vertex j) { return j * (j - 1) / 2 + i; }

/// Graph from an upper-triangle bitmask (bit pair_index(i, j) set iff i ~ j).
inline Graph graph_from_mask(std::size_t n, std::uint64_t mask) {
  std::vector<Edge> edges;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i)
      if ((mask >> pair_index(i, j)) & 1U) edges.emplace_back(i, j);
  return Graph(n, std::move(edges));
}

inline std::uint64_t graph_to_mask(const Graph& g) {
  if (g.order() > 11) throw DomainError("graph_to_mask: more than 11 vertices");
  std::uint64_t mask = 0;
  for (const auto& [u, v] : g.edges()) mask |= std::uint64_t{1} << pair_index(u, v);
  return mask;
}

inline IntMatrix adjacency_matrix(const Graph& g) {
  IntMatrix a(g.order(), g.order());
  for (const auto& [u, v] : g.edges()) a(u, v) = a(v, u) = 1;
  return a;
}

/// L = D - A
inline IntMatrix laplacian(const Graph& g) {
  IntMatrix l(g.order(), g.order());
  for (Vertex v = 0; v < g.order(); ++v) l(v, v) = static_cast<long>(g.degree(v));
  for (const auto& [u, v] : g.edges()) l(u, v) = l(v, u) = -1;
  return l;
}

/// Arcs as (tail, head), one per edge.
struct Orientation {
  std::vector<std::pair<Vertex, Vertex>> arcs;
};

/// Every edge oriented from its lower to its higher endpoint.
inline Orientation default_orientation(const Graph& g) {
  Orientation o;
  o.arcs.assign(g.edges().begin(), g.edges().end());
  return o;
}

/// n x |E| matrix with +1 at the head and -1 at the tail of each edge; columns
/// follow the canonical edge order. B B^T = L for every orientation.
inline IntMatrix signed_incidence(const Graph& g, const Orientation& o) {
  if (o.arcs.size() != g.size()) throw DomainError("orientation does not match the edge set");
  IntMatrix b(g.order(), g.size());
  std::vector<bool> seen(g.size(), false);
  for (const auto& [tail, head] : o.arcs) {
    const Edge e = tail < head ? Edge{tail, head} : Edge{head, tail};
    const auto it = std::lower_bound(g.edges().begin(), g.edges().end(), e);
    if (it == g.edges().end() || *it != e) throw DomainError("orientation arc is not an edge");
    const auto col = static_cast<std::size_t>(it - g.edges().begin());
    if (seen[col]) throw DomainError("edge oriented twice");
    seen[col] = true;
    b(head, col) = 1;
    b(tail, col) = -1;
  }
  return b;
}

inline IntMatrix signed_incidence(const Graph& g) { return signed_incidence(g, default_orientation(g)); }

inline constexpr std::size_t kUnreachable = std::numeric_limits<std::size_t>::max();

/// BFS hop distances from a; unreachable vertices get kUnreachable.
inline std::vector<std::size_t> distances(const Graph& g, Vertex a) {
  if (a >= g.order()) throw DomainError("distances: vertex out of range");
  std::vector<std::size_t> d(g.order(), kUnreachable);
  std::queue<Vertex> q;
  d[a] = 0;
  q.push(a);
  while (!q.empty()) {
    const Vertex u = q.front();
    q.pop();
    for (Vertex w : g.neighbors(u))
      if (d[w] == kUnreachable) {
        d[w] = d[u] + 1;
        q.push(w);
      }
  }
  return d;
}

/// Largest finite distance from a.
inline std::size_t eccentricity(const Graph& g, Vertex a) {
  std::size_t ecc = 0;
  for (auto d : distances(g, a))
    if (d != kUnreachable) ecc = std::max(ecc, d);
  return ecc;
}

inline bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  const auto d = distances(g, 0);
  return std::none_of(d.begin(), d.end(), [](std::size_t x) { return x == kUnreachable; });
}

/// Exact cofactor det(L[0|0]); the number of spanning trees.
inline BigInt spanning_tree_count(const Graph& g, Vertex deleted = 0) {
  if (g.order() == 0) throw DomainError("spanning_tree_count: empty graph");
  return determinant(delete_row_col(laplacian(g), deleted));
}

/// Lexicographically least non-adjacent pair (u, v) whose neighbourhoods are
/// both exactly V \ {u, v}.
inline std::optional<std::pair<Vertex, Vertex>> is_double_cone(const Graph& g) {
  const std::size_t n = g.order();
  if (n < 3) return std::nullopt;
  for (Vertex u = 0; u < n; ++u) {
    if (g.degree(u) != n - 2) continue;
    for (Vertex v = u + 1; v < n; ++v)
      if (g.degree(v) == n - 2 && !g.adjacent(u, v)) return std::make_pair(u, v);
  }
  return std::nullopt;
}

}  // namespace lafr

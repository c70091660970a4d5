#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "lafr/error.hpp"
#include "lafr/graph/graph.hpp"

namespace lafr::corpus {

inline constexpr std::size_t kMaxTreeOrder = 14;
inline constexpr std::size_t kMaxUnlabeledOrder = 7;

namespace detail {

using Adjacency = std::vector<std::vector<Vertex>>;

inline Adjacency adjacency_lists(const Graph& g) {
  Adjacency adj(g.order());
  for (auto [u, v] : g.edges()) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  return adj;
}

inline std::string rooted_code(const Adjacency& adj, Vertex v, Vertex parent) {
  std::vector<std::string> kids;
  for (Vertex w : adj[v])
    if (w != parent) kids.push_back(rooted_code(adj, w, v));
  std::sort(kids.begin(), kids.end());
  std::string s = "(";
  for (const auto& k : kids) s += k;
  return s + ")";
}

/// One or two central vertices, found by peeling leaves.
inline std::vector<Vertex> centers(const Adjacency& adj) {
  const std::size_t n = adj.size();
  if (n <= 2) {
    std::vector<Vertex> all(n);
    for (Vertex v = 0; v < n; ++v) all[v] = v;
    return all;
  }
  std::vector<std::size_t> deg(n);
  std::vector<Vertex> layer;
  for (Vertex v = 0; v < n; ++v)
    if ((deg[v] = adj[v].size()) <= 1) layer.push_back(v);
  std::size_t remaining = n;
  while (remaining > 2) {
    remaining -= layer.size();
    std::vector<Vertex> next;
    for (Vertex v : layer)
      for (Vertex w : adj[v])
        if (--deg[w] == 1) next.push_back(w);
    layer = std::move(next);
  }
  std::sort(layer.begin(), layer.end());
  return layer;
}

inline Graph remove_vertex(const Graph& g, Vertex x) {
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges())
    if (u != x && v != x) edges.emplace_back(u - (u > x), v - (v > x));
  return Graph(g.order() - 1, edges);
}

inline Graph add_vertex(const Graph& g, const std::vector<Vertex>& nbrs) {
  std::vector<Edge> edges = g.edges();
  for (Vertex v : nbrs) edges.emplace_back(v, g.order());
  return Graph(g.order() + 1, edges);
}

}  // namespace detail

/// Isomorphism-invariant code of a tree: AHU code at the lexicographically
/// least center.
inline std::string tree_canonical_code(const Graph& t) {
  if (t.order() == 0) return "";
  const auto adj = detail::adjacency_lists(t);
  std::string best;
  for (Vertex c : detail::centers(adj)) {
    auto code = detail::rooted_code(adj, c, t.order());
    if (best.empty() || code < best) best = std::move(code);
  }
  return best;
}

/// All unlabeled free trees on n vertices, one representative each, by
/// reverse search: a tree is accepted from its canonical parent, the
/// least-coded tree obtained by deleting one leaf.
inline std::vector<Graph> free_trees(std::size_t n) {
  if (n == 0 || n > kMaxTreeOrder) throw DomainError("free_trees: order must be in [1, 14]");
  std::vector<Graph> level{Graph(1, {})};
  for (std::size_t m = 2; m <= n; ++m) {
    std::vector<Graph> next;
    for (const Graph& parent : level) {
      const std::string parent_code = tree_canonical_code(parent);
      std::set<std::string> seen;
      for (Vertex v = 0; v < parent.order(); ++v) {
        Graph child = detail::add_vertex(parent, {v});
        auto code = tree_canonical_code(child);
        if (!seen.insert(code).second) continue;
        std::string canon_parent;
        for (Vertex l = 0; l < child.order(); ++l) {
          if (child.degree(l) != 1) continue;
          auto pc = tree_canonical_code(detail::remove_vertex(child, l));
          if (canon_parent.empty() || pc < canon_parent) canon_parent = std::move(pc);
        }
        if (canon_parent == parent_code) next.push_back(std::move(child));
      }
    }
    level = std::move(next);
  }
  return level;
}

/// Least graph6-order mask over all relabelings that list vertices by
/// nondecreasing degree.
inline std::uint64_t canonical_mask(const Graph& g) {
  const std::size_t n = g.order();
  if (n > kMaxUnlabeledOrder + 4) throw DomainError("canonical_mask: order too large");
  std::vector<Vertex> order(n);
  for (Vertex v = 0; v < n; ++v) order[v] = v;
  std::stable_sort(order.begin(), order.end(), [&](Vertex x, Vertex y) { return g.degree(x) < g.degree(y); });
  // Blocks of equal degree are permuted independently.
  std::vector<std::pair<std::size_t, std::size_t>> blocks;
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i;
    while (j < n && g.degree(order[j]) == g.degree(order[i])) ++j;
    blocks.emplace_back(i, j);
    i = j;
  }
  std::vector<Vertex> label(n);
  std::uint64_t best = ~std::uint64_t{0};
  const std::function<void(std::size_t)> rec = [&](std::size_t b) {
    if (b == blocks.size()) {
      for (std::size_t i = 0; i < n; ++i) label[order[i]] = i;
      std::uint64_t m = 0;
      for (auto [u, v] : g.edges()) m |= std::uint64_t{1} << pair_index(std::min(label[u], label[v]), std::max(label[u], label[v]));
      best = std::min(best, m);
      return;
    }
    auto first = order.begin() + static_cast<std::ptrdiff_t>(blocks[b].first);
    auto last = order.begin() + static_cast<std::ptrdiff_t>(blocks[b].second);
    std::sort(first, last);
    do rec(b + 1);
    while (std::next_permutation(first, last));
  };
  rec(0);
  return best;
}

/// All unlabeled graphs on n vertices (n <= 7), by one-vertex extension with
/// dedup on canonical_mask; sorted by canonical mask.
inline std::vector<Graph> unlabeled_graphs(std::size_t n) {
  if (n > kMaxUnlabeledOrder) throw DomainError("unlabeled_graphs: order must be at most 7");
  std::vector<std::uint64_t> level{0};
  for (std::size_t m = 1; m <= n; ++m) {
    std::set<std::uint64_t> next;
    for (std::uint64_t mask : level) {
      const Graph base = graph_from_mask(m - 1, mask);
      for (std::uint64_t nb = 0; nb < (std::uint64_t{1} << (m - 1)); ++nb) {
        std::vector<Vertex> nbrs;
        for (Vertex v = 0; v + 1 < m; ++v)
          if (nb >> v & 1) nbrs.push_back(v);
        next.insert(canonical_mask(detail::add_vertex(base, nbrs)));
      }
    }
    level.assign(next.begin(), next.end());
  }
  std::vector<Graph> out;
  for (auto mask : level) out.push_back(graph_from_mask(n, mask));
  return out;
}

inline std::vector<Graph> connected_graphs(std::size_t n) {
  auto all = unlabeled_graphs(n);
  std::erase_if(all, [](const Graph& g) { return !is_connected(g); });
  return all;
}

/// Number of labeled graphs on n vertices (masks 0 .. 2^C(n,2) - 1).
inline std::uint64_t labeled_mask_count(std::size_t n) {
  if (n > 11) throw DomainError("labeled_mask_count: order too large");
  return std::uint64_t{1} << (n * (n - 1) / 2);
}

}  // namespace lafr::corpus

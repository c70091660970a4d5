#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "lafr/error.hpp"
#include "lafr/exact/matrix.hpp"
#include "lafr/graph/graph.hpp"

namespace lafr {

inline Graph path_graph(std::size_t n) {
  if (n < 1) throw DomainError("path needs n >= 1");
  std::vector<Edge> e;
  for (Vertex i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph(n, std::move(e));
}

inline Graph cycle_graph(std::size_t n) {
  if (n < 3) throw DomainError("cycle needs n >= 3");
  std::vector<Edge> e;
  for (Vertex i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  e.emplace_back(0, n - 1);
  return Graph(n, std::move(e));
}

inline Graph complete_graph(std::size_t n) {
  if (n < 1) throw DomainError("complete graph needs n >= 1");
  std::vector<Edge> e;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i) e.emplace_back(i, j);
  return Graph(n, std::move(e));
}

inline Graph empty_graph(std::size_t n) { return Graph(n); }

/// path | cycle | complete | empty
inline Graph standard_graph(std::string_view name, std::size_t n) {
  if (name == "path") return path_graph(n);
  if (name == "cycle") return cycle_graph(n);
  if (name == "complete") return complete_graph(n);
  if (name == "empty") {
    if (n < 1) throw DomainError("empty graph needs n >= 1");
    return empty_graph(n);
  }
  throw DomainError("unknown standard graph: " + std::string(name));
}

inline Graph complement(const Graph& g) {
  std::vector<Edge> e;
  for (Vertex j = 1; j < g.order(); ++j)
    for (Vertex i = 0; i < j; ++i)
      if (!g.adjacent(i, j)) e.emplace_back(i, j);
  return Graph(g.order(), std::move(e));
}

/// y's vertices are shifted by x.order().
inline Graph disjoint_union(const Graph& x, const Graph& y) {
  std::vector<Edge> e = x.edges();
  const std::size_t off = x.order();
  for (const auto& [u, v] : y.edges()) e.emplace_back(u + off, v + off);
  return Graph(x.order() + y.order(), std::move(e));
}

/// Disjoint union plus every edge between x and y.
inline Graph join(const Graph& x, const Graph& y) {
  std::vector<Edge> e = x.edges();
  const std::size_t off = x.order();
  for (const auto& [u, v] : y.edges()) e.emplace_back(u + off, v + off);
  for (Vertex i = 0; i < x.order(); ++i)
    for (Vertex j = 0; j < y.order(); ++j) e.emplace_back(i, off + j);
  return Graph(x.order() + y.order(), std::move(e));
}

/// Vertex (i, j) gets index i * y.order() + j.
inline Graph cartesian_product(const Graph& x, const Graph& y) {
  const std::size_t m = y.order();
  std::vector<Edge> e;
  for (Vertex i = 0; i < x.order(); ++i)
    for (const auto& [u, v] : y.edges()) e.emplace_back(i * m + u, i * m + v);
  for (const auto& [u, v] : x.edges())
    for (Vertex j = 0; j < m; ++j) e.emplace_back(u * m + j, v * m + j);
  return Graph(x.order() * m, std::move(e));
}

/// join(K̄2, y); the conical vertices are 0 and 1.
inline Graph double_cone(const Graph& y) { return join(empty_graph(2), y); }

/// ((((O_m1 + K_m2) ∪ O_m3) + K_m4) ∪ ... ∪ O_m(2k-1)) + K_m(2k), vertices in
/// construction order.
inline Graph threshold_graph(const std::vector<std::size_t>& m) {
  if (m.empty() || m.size() % 2 != 0) throw DomainError("threshold graph needs an even, non-empty parameter list");
  for (auto v : m)
    if (v < 1) throw DomainError("threshold graph parameters must be positive");
  Graph g = empty_graph(m[0]);
  for (std::size_t i = 1; i < m.size(); ++i)
    g = (i % 2 == 1) ? join(g, complete_graph(m[i])) : disjoint_union(g, empty_graph(m[i]));
  return g;
}

inline bool is_hadamard(const IntMatrix& h) {
  if (!h.square()) return false;
  const std::size_t n = h.rows();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (h(i, j) != 1 && h(i, j) != -1) return false;
  return h * h.transpose() == [&] {
    IntMatrix d(n, n);
    for (std::size_t i = 0; i < n; ++i) d(i, i) = static_cast<long>(n);
    return d;
  }();
}

inline constexpr unsigned kSylvesterMaxOrder = 12;

/// 2^k x 2^k Hadamard matrix by repeated doubling [[H, H], [H, -H]].
inline IntMatrix sylvester_hadamard(unsigned k) {
  if (k > kSylvesterMaxOrder) throw DomainError("sylvester_hadamard: k too large");
  IntMatrix h{{1}};
  for (unsigned s = 0; s < k; ++s) {
    const std::size_t n = h.rows();
    IntMatrix d(2 * n, 2 * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        d(i, j) = h(i, j);
        d(i, j + n) = h(i, j);
        d(i + n, j) = h(i, j);
        d(i + n, j + n) = -h(i, j);
      }
    h = std::move(d);
  }
  return h;
}

/// Bipartite graph on row symbols r_i^± and column symbols c_j^±, laid out as
/// [r+ | r- | c+ | c-]. r_i^s ~ c_j^t iff H_ij = 1 and s = t, or H_ij = -1 and
/// s != t. Antipodal pairs are (i, n + i) and (2n + j, 3n + j).
inline Graph hadamard_graph(const IntMatrix& h) {
  if (!is_hadamard(h)) throw DomainError("hadamard_graph: input is not a Hadamard matrix");
  const std::size_t n = h.rows();
  std::vector<Edge> e;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const bool same = h(i, j) == 1;
      for (std::size_t s = 0; s < 2; ++s) {
        const std::size_t t = same ? s : 1 - s;
        e.emplace_back(s * n + i, 2 * n + t * n + j);
      }
    }
  return Graph(4 * n, std::move(e));
}

}  // namespace lafr

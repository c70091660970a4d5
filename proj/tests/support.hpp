#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "lafr/lafr.hpp"

namespace lafr::testkit {

inline Graph random_graph(std::mt19937_64& rng, std::size_t n, double p = 0.5) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> e;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i)
      if (coin(rng)) e.emplace_back(i, j);
  return Graph(n, e);
}

inline Graph random_connected_graph(std::mt19937_64& rng, std::size_t n, double p = 0.5) {
  while (true) {
    Graph g = random_graph(rng, n, p);
    if (is_connected(g)) return g;
  }
}

/// Numeric support: rounded eigenvalues whose idempotent column at a is nonzero.
/// Independent of the exact pipeline (floating eigendecomposition only).
struct NumericSupport {
  std::vector<long> integers;
  bool all_integer = true;
  std::size_t size = 0;
};

inline NumericSupport numeric_support(const Graph& g, Vertex a) {
  const auto s = oracle::laplacian_spectrum(g);
  const std::size_t n = g.order();
  NumericSupport out;
  for (std::size_t r = 0; r < n;) {
    std::size_t q = r;
    double weight = 0.0;
    while (q < n && s.values[q] - s.values[r] < 1e-6) {
      weight += s.vectors(a, q) * s.vectors(a, q);
      ++q;
    }
    const double mu = s.values[r];
    if (weight > 1e-10) {
      ++out.size;
      const double rounded = std::round(mu);
      if (std::abs(mu - rounded) < 1e-7)
        out.integers.push_back(static_cast<long>(rounded));
      else
        out.all_integer = false;
    }
    r = q;
  }
  return out;
}

/// det(x I - m) at integer x through the fraction-free determinant.
inline BigInt char_poly_at(const IntMatrix& m, long x) {
  IntMatrix a = m;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) = (i == j ? BigInt(x) : BigInt(0)) - m(i, j);
  return determinant(a);
}

/// Exhaustive connected corpus n <= n_max plus `extra` random connected graphs on [lo, hi] vertices.
inline std::vector<Graph> property_corpus(std::size_t n_max, std::size_t extra, std::size_t lo, std::size_t hi,
                                          std::uint64_t seed) {
  std::vector<Graph> out;
  for (std::size_t n = 1; n <= n_max; ++n)
    for (auto& g : corpus::connected_graphs(n)) out.push_back(std::move(g));
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> size(lo, hi);
  for (std::size_t i = 0; i < extra; ++i) out.push_back(random_connected_graph(rng, size(rng), 0.4));
  return out;
}

}  // namespace lafr::testkit

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "lafr/error.hpp"
#include "lafr/graph/constructions.hpp"
#include "lafr/graph/graph.hpp"
#include "lafr/oracle.hpp"
#include "lafr/revival.hpp"
#include "lafr/spectral.hpp"

namespace lafr {

/// U(tau) e_a is a phase times e_a.
inline bool periodic_at(const Periodicity& p, PiTime tau) {
  if (!p.periodic) return false;
  if (!p.big_g) return true;
  return (static_cast<__int128>(tau.num) * *p.big_g) % (2 * tau.den) == 0;
}

/// Minimal positive period 2 pi / G; absent when not periodic or fixed at all times.
inline std::optional<PiTime> minimal_period(const Periodicity& p) {
  if (!p.periodic || !p.big_g) return std::nullopt;
  return PiTime::make(2, *p.big_g);
}

struct IffCheck {
  bool left = false;
  bool right = false;
  /// Product pairs found proper at tau on the left-hand side.
  std::vector<std::pair<Vertex, Vertex>> witnesses;
  bool holds() const { return left == right; }
};

/// Both sides of the product criterion at tau. Left: some pair (v, c), (v, d)
/// of x□y with equal x-coordinate has proper revival at tau. Right: x has a
/// periodic vertex at tau and y has a pair with proper revival at tau.
inline IffCheck check_cartesian_theorem(const Graph& x, const Graph& y, PiTime tau) {
  if (tau.num <= 0) throw DomainError("check_cartesian_theorem: time must be positive");
  const Graph xy = cartesian_product(x, y);
  IffCheck out;
  SpectralAnalyzer prod(xy);
  const std::size_t m = y.order();
  for (const auto& d : proper_pairs(prod))
    if (d.a / m == d.b / m && proper_at(d, tau)) out.witnesses.emplace_back(d.a, d.b);
  out.left = !out.witnesses.empty();

  bool x_periodic = false;
  SpectralAnalyzer sx(x);
  for (Vertex v = 0; v < x.order() && !x_periodic; ++v) x_periodic = periodic_at(is_periodic(sx, v), tau);
  bool y_proper = false;
  if (y.order() == 2) {
    y_proper = K2Schedule::proper_at(tau);
  } else if (y.order() >= 3) {
    for (const auto& d : proper_pairs(y))
      if (proper_at(d, tau)) y_proper = true;
  }
  out.right = x_periodic && y_proper;
  return out;
}

/// exp(i tau L(complement)) = exp(-i tau L) entrywise within tol, for n tau in 2 pi Z.
inline Verdict check_complement_transfer(const Graph& x, PiTime tau, double tol = oracle::kVerifyTol) {
  const auto n = static_cast<long long>(x.order());
  if (n == 0 || (static_cast<__int128>(n) * tau.num) % (2 * tau.den) != 0) return Verdict::not_applicable;
  const double t = tau.value();
  const auto lhs = oracle::transition_matrix(complement(x), t);
  const auto rhs = oracle::transition_matrix(x, -t);
  for (std::size_t i = 0; i < x.order(); ++i)
    for (std::size_t j = 0; j < x.order(); ++j)
      if (std::abs(lhs.entries(i, j) - rhs.entries(i, j)) > tol) return Verdict::fails;
  return Verdict::holds;
}

/// Every proper pair of a join has g dividing n.
inline Verdict check_join_timing(const Graph& z) {
  if (z.order() < 3 || is_connected(complement(z))) return Verdict::not_applicable;
  const auto n = static_cast<long long>(z.order());
  for (const auto& d : proper_pairs(z))
    if (n % *d.g != 0) return Verdict::fails;
  return Verdict::holds;
}

/// Decision for (a, b) on x + y, given (a, b) is proper on x with g | x.n and
/// g | y.n; nullopt when the hypothesis fails. The conclusion is
/// proper_at(result, 2 pi / g).
inline std::optional<RevivalDecision> check_infjoin_construction(const Graph& x, Vertex a, Vertex b, const Graph& y) {
  if (x.order() < 3 || a >= x.order() || b >= x.order() || a == b) return std::nullopt;
  const auto dx = decide_proper_lafr(x, a, b);
  if (dx.status != RevivalStatus::proper) return std::nullopt;
  const long long g = *dx.g;
  if (static_cast<long long>(x.order()) % g != 0 || static_cast<long long>(y.order()) % g != 0) return std::nullopt;
  return decide_proper_lafr(join(x, y), a, b);
}

struct PolygamyCheck {
  /// x proper, y periodic
  PiTime lafr_x_per_y_time;
  /// x periodic, y proper
  PiTime lafr_y_per_x_time;
  bool ok = false;
};

/// g, h: class gcds of the two pairs; big_g, big_h: gcd of the supports at a and c.
inline PolygamyCheck check_polygamy_conditions(long long g, long long h, long long big_g, long long big_h) {
  if (g <= 0 || h <= 0 || big_g <= 0 || big_h <= 0) throw DomainError("check_polygamy_conditions: inputs must be positive");
  const long long d1 = std::gcd(g, big_h);
  const long long d2 = std::gcd(h, big_g);
  // At 2 pi / d1 the x-pair revives (d1 | g) and y is periodic (d1 | H); the
  // x-revival is proper iff a is not periodic there, i.e. d1 does not divide G.
  return {PiTime::make(2, d1), PiTime::make(2, d2), big_g % d1 != 0 && big_h % d2 != 0};
}

/// Antipodal partition of the Hadamard graph of an order-n^2 Hadamard matrix.
inline bool hadamard_partition_check(long long n, const PairPartition& part) {
  const long long s = n * n;
  return part.plus == std::vector<long>{0, static_cast<long>(s), static_cast<long>(2 * s)} &&
         part.minus == std::vector<long>{static_cast<long>(s - n), static_cast<long>(s + n)};
}

/// Conditions under which threshold_graph(m) has revival between a and b at tau:
/// m1 = 2 with {a, b} the first two vertices, tau not a multiple of pi/2,
/// (m1 + m2) tau = 0 and m_j tau = 0 mod 2 pi for j >= 3.
inline bool threshold_lafr_conditions(const std::vector<std::size_t>& m, Vertex a, Vertex b, PiTime tau) {
  if (m.size() < 2 || m.size() % 2 != 0) throw DomainError("threshold_lafr_conditions: need an even, non-empty list");
  const auto mult_of_2pi = [&](long long c) { return (static_cast<__int128>(c) * tau.num) % (2 * tau.den) == 0; };
  if (m[0] != 2 || std::min(a, b) != 0 || std::max(a, b) != 1) return false;
  if ((2 * tau.num) % tau.den == 0) return false;
  if (!mult_of_2pi(static_cast<long long>(m[0] + m[1]))) return false;
  for (std::size_t j = 2; j < m.size(); ++j)
    if (!mult_of_2pi(static_cast<long long>(m[j]))) return false;
  return true;
}

}  // namespace lafr

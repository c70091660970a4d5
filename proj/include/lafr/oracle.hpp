#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <optional>
#include <vector>

#include "lafr/error.hpp"
#include "lafr/exact/matrix.hpp"
#include "lafr/graph/graph.hpp"

namespace lafr::oracle {

using Complex = std::complex<double>;
using RealMatrix = Matrix<double>;
using ComplexMatrix = Matrix<Complex>;

inline constexpr std::size_t kMaxOrder = 2000;
inline constexpr int kMaxSweeps = 100;
inline constexpr double kClusterTol = 1e-8;
inline constexpr double kVerifyTol = 1e-9;
inline constexpr double kScanTol = 1e-7;
inline constexpr double kScanMinBeta = 1e-3;
inline constexpr double kFlatSlack = 1e-13;

/// Ascending eigenvalues; column k of `vectors` is the unit eigenvector of
/// values[k].
struct Spectrum {
  std::vector<double> values;
  RealMatrix vectors;
};

inline RealMatrix to_real(const IntMatrix& m) {
  RealMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = m(i, j).get_d();
  return r;
}

inline RealMatrix laplacian_real(const Graph& g) {
  RealMatrix l(g.order(), g.order());
  for (Vertex v = 0; v < g.order(); ++v) l(v, v) = static_cast<double>(g.degree(v));
  for (const auto& [u, v] : g.edges()) l(u, v) = l(v, u) = -1.0;
  return l;
}

/// Cyclic Jacobi with threshold rotations, row-wise sweep order. Converged
/// when the off-diagonal Frobenius norm drops below 1e-13 * ||m||_F.
inline Spectrum eigh(RealMatrix a) {
  if (!a.square()) throw DomainError("eigh: matrix is not square");
  const std::size_t n = a.rows();
  if (n > kMaxOrder) throw DomainError("eigh: matrix order exceeds guard");
  double norm = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (std::abs(a(i, j) - a(j, i)) > 1e-12) throw DomainError("eigh: matrix is not symmetric");
      norm += a(i, j) * a(i, j);
    }
  norm = std::sqrt(norm);
  RealMatrix v = RealMatrix::identity(n);
  const double target = 1e-13 * std::max(norm, 1e-300);

  auto off_norm = [&] {
    double s = 0.0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) s += 2.0 * a(p, q) * a(p, q);
    return std::sqrt(s);
  };

  bool converged = false;
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    const double off = off_norm();
    if (off <= target) {
      converged = true;
      break;
    }
    const double threshold = sweep < 3 ? 0.2 * off / static_cast<double>(n * n) : 0.0;
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (std::abs(apq) <= threshold || apq == 0.0) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        a(p, p) -= t * apq;
        a(q, q) += t * apq;
        a(p, q) = a(q, p) = 0.0;
        for (std::size_t r = 0; r < n; ++r) {
          if (r != p && r != q) {
            const double arp = a(r, p), arq = a(r, q);
            a(r, p) = a(p, r) = c * arp - s * arq;
            a(r, q) = a(q, r) = s * arp + c * arq;
          }
          const double vrp = v(r, p), vrq = v(r, q);
          v(r, p) = c * vrp - s * vrq;
          v(r, q) = s * vrp + c * vrq;
        }
      }
  }
  if (!converged && off_norm() > target) throw Error("eigh: Jacobi iteration did not converge");

  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return a(x, x) < a(y, y); });
  Spectrum sp;
  sp.values.resize(n);
  sp.vectors = RealMatrix(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    sp.values[k] = a(order[k], order[k]);
    for (std::size_t r = 0; r < n; ++r) sp.vectors(r, k) = v(r, order[k]);
  }
  return sp;
}

inline Spectrum laplacian_spectrum(const Graph& g) { return eigh(laplacian_real(g)); }

struct TransitionMatrix {
  double time = 0.0;
  ComplexMatrix entries;
};

/// Evaluates U(t) = exp(itL) = sum_r e^{it mu_r} v_r v_r^T from one
/// eigendecomposition.
class Propagator {
 public:
  explicit Propagator(const Graph& g) : spectrum_(laplacian_spectrum(g)) {}
  explicit Propagator(Spectrum s) : spectrum_(std::move(s)) {}

  const Spectrum& spectrum() const { return spectrum_; }
  std::size_t order() const { return spectrum_.values.size(); }

  Complex entry(Vertex i, Vertex j, double t) const {
    Complex acc = 0.0;
    const auto& v = spectrum_.vectors;
    for (std::size_t r = 0; r < order(); ++r) acc += std::polar(1.0, t * spectrum_.values[r]) * (v(i, r) * v(j, r));
    return acc;
  }

  /// d/dt U(t)_ij
  Complex entry_derivative(Vertex i, Vertex j, double t) const {
    Complex acc = 0.0;
    const auto& v = spectrum_.vectors;
    for (std::size_t r = 0; r < order(); ++r)
      acc += Complex(0.0, spectrum_.values[r]) * std::polar(1.0, t * spectrum_.values[r]) * (v(i, r) * v(j, r));
    return acc;
  }

  std::vector<Complex> column(Vertex a, double t) const {
    const std::size_t n = order();
    std::vector<Complex> col(n);
    const auto& v = spectrum_.vectors;
    for (std::size_t r = 0; r < n; ++r) {
      const Complex w = std::polar(1.0, t * spectrum_.values[r]) * v(a, r);
      for (std::size_t i = 0; i < n; ++i) col[i] += w * v(i, r);
    }
    return col;
  }

  TransitionMatrix at(double t) const {
    const std::size_t n = order();
    TransitionMatrix u{t, ComplexMatrix(n, n)};
    const auto& v = spectrum_.vectors;
    for (std::size_t r = 0; r < n; ++r) {
      const Complex w = std::polar(1.0, t * spectrum_.values[r]);
      for (std::size_t i = 0; i < n; ++i) {
        const Complex wi = w * v(i, r);
        for (std::size_t j = i; j < n; ++j) u.entries(i, j) += wi * v(j, r);
      }
    }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < i; ++j) u.entries(i, j) = u.entries(j, i);
    return u;
  }

 private:
  Spectrum spectrum_;
};

inline TransitionMatrix transition_matrix(const Graph& g, double t) {
  if (!std::isfinite(t)) throw DomainError("transition_matrix: time must be finite");
  return Propagator(g).at(t);
}

/// max |(U U^* - I)_ij|
inline double unitarity_defect(const ComplexMatrix& u) {
  double worst = 0.0;
  for (std::size_t i = 0; i < u.rows(); ++i)
    for (std::size_t j = 0; j < u.rows(); ++j) {
      Complex s = 0.0;
      for (std::size_t k = 0; k < u.cols(); ++k) s += u(i, k) * std::conj(u(j, k));
      worst = std::max(worst, std::abs(s - (i == j ? 1.0 : 0.0)));
    }
  return worst;
}

struct Block {
  Complex alpha, beta, gamma;
};

struct BlockCheck {
  std::optional<Block> block;
  /// max |U_aj|, |U_bj| over j outside {a, b}
  double leakage = 0.0;
};

/// Detects the 2x2 block form of U on {a, b}.
inline BlockCheck block_fr_check(const TransitionMatrix& u, Vertex a, Vertex b, double tol) {
  const auto& m = u.entries;
  if (a >= m.rows() || b >= m.rows() || a == b) throw DomainError("block_fr_check: bad vertex pair");
  BlockCheck r;
  for (std::size_t j = 0; j < m.rows(); ++j) {
    if (j == a || j == b) continue;
    r.leakage = std::max({r.leakage, std::abs(m(a, j)), std::abs(m(b, j)), std::abs(m(j, a)), std::abs(m(j, b))});
  }
  if (r.leakage <= tol) r.block = Block{m(a, a), m(a, b), m(b, b)};
  return r;
}

struct ScanOptions {
  double tol = kScanTol;
  double min_beta = kScanMinBeta;
  int refine_steps = 20;
};

/// Grid search over (0, t_max] for times where U is in block form on {a, b}
/// with |beta| above min_beta. Each local minimum of the off-pair weight is
/// refined by bisection on the sign of its derivative.
inline std::vector<double> time_scan(const Propagator& prop, Vertex a, Vertex b, double t_max, std::size_t steps,
                                     const ScanOptions& opt = {}) {
  if (steps < 1) throw DomainError("time_scan: steps must be positive");
  const std::size_t n = prop.order();
  if (a >= n || b >= n || a == b) throw DomainError("time_scan: bad vertex pair");

  // Off-pair weight of rows a and b, using unitarity of U.
  auto weight = [&](double t) {
    const double aa = std::norm(prop.entry(a, a, t));
    const double bb = std::norm(prop.entry(b, b, t));
    const double ab = std::norm(prop.entry(a, b, t));
    return 2.0 - aa - bb - 2.0 * ab;
  };
  auto slope = [&](double t) {
    auto term = [&](Vertex i, Vertex j) {
      return std::real(std::conj(prop.entry(i, j, t)) * prop.entry_derivative(i, j, t));
    };
    return -2.0 * term(a, a) - 2.0 * term(b, b) - 4.0 * term(a, b);
  };
  auto leakage = [&](double t) {
    const auto ca = prop.column(a, t);
    const auto cb = prop.column(b, t);
    double worst = 0.0;
    for (std::size_t j = 0; j < n; ++j)
      if (j != a && j != b) worst = std::max({worst, std::abs(ca[j]), std::abs(cb[j])});
    return worst;
  };

  const double h = t_max / static_cast<double>(steps);
  std::vector<double> w(steps + 2);
  for (std::size_t i = 0; i <= steps + 1; ++i) w[i] = weight(h * static_cast<double>(i));

  std::vector<double> hits;
  for (std::size_t i = 1; i <= steps; ++i) {
    // The slack keeps flat stretches (weight identically zero) as candidates.
    if (!(w[i] <= w[i - 1] + kFlatSlack && w[i] <= w[i + 1] + kFlatSlack)) continue;
    double lo = h * static_cast<double>(i - 1), hi = h * static_cast<double>(i + 1);
    for (int k = 0; k < opt.refine_steps; ++k) {
      const double mid = 0.5 * (lo + hi);
      (slope(mid) > 0 ? hi : lo) = mid;
    }
    const double grid_t = h * static_cast<double>(i);
    const double refined_t = 0.5 * (lo + hi);
    const double lg = leakage(grid_t), lr = leakage(refined_t);
    const double t = lg < opt.tol || lg <= lr ? grid_t : refined_t;
    const double leak = std::min(lg, lr);
    if (leak < opt.tol && std::abs(prop.entry(a, b, t)) > opt.min_beta) {
      if (hits.empty() || t - hits.back() > 0.5 * h) hits.push_back(t);
    }
  }
  return hits;
}

inline std::vector<double> time_scan(const Graph& g, Vertex a, Vertex b, double t_max, std::size_t steps) {
  return time_scan(Propagator(g), a, b, t_max, steps);
}

/// Heuristic strong cospectrality from numeric idempotents; eigenvalues
/// closer than 1e-8 are merged into one eigenspace.
inline bool numeric_strong_cospectral(const Graph& g, Vertex a, Vertex b, double tol) {
  if (a >= g.order() || b >= g.order() || a == b) throw DomainError("numeric_strong_cospectral: bad vertex pair");
  const Spectrum sp = laplacian_spectrum(g);
  const std::size_t n = g.order();
  std::size_t start = 0;
  while (start < n) {
    std::size_t end = start + 1;
    while (end < n && sp.values[end] - sp.values[end - 1] <= kClusterTol) ++end;
    std::vector<double> fa(n, 0.0), fb(n, 0.0);
    for (std::size_t r = start; r < end; ++r)
      for (std::size_t i = 0; i < n; ++i) {
        fa[i] += sp.vectors(a, r) * sp.vectors(i, r);
        fb[i] += sp.vectors(b, r) * sp.vectors(i, r);
      }
    double same = 0.0, opposite = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      same = std::max(same, std::abs(fa[i] - fb[i]));
      opposite = std::max(opposite, std::abs(fa[i] + fb[i]));
    }
    if (same > tol && opposite > tol) return false;
    start = end;
  }
  return true;
}

}  // namespace lafr::oracle

#pragma once

#include <cstddef>
#include <numeric>
#include <utility>
#include <vector>

#include "lafr/error.hpp"
#include "lafr/exact/matrix.hpp"

namespace lafr {

/// Reduced row echelon form in place; returns the pivot column of each
/// nonzero row.
inline std::vector<std::size_t> rref(RatMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t p = row;
    while (p < m.rows() && m(p, col) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(row, j));
    const BigRational inv = 1 / m(row, col);
    for (std::size_t j = col; j < m.cols(); ++j) m(row, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col) == 0) continue;
      const BigRational f = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

/// Basis of the right null space, one vector per free column (ascending),
/// with a 1 in that free column.
inline std::vector<RatVector> kernel_basis(RatMatrix m) {
  const auto pivots = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<RatVector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    RatVector v(m.cols());
    v[f] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(r, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Solves a x = b for square nonsingular a by Gaussian elimination with full
/// pivoting; the pivot is the first nonzero entry of the trailing block in
/// row-major order.
inline RatVector solve_full_pivot(RatMatrix a, RatVector b) {
  if (!a.square() || a.rows() != b.size()) throw DomainError("solve: dimension mismatch");
  const std::size_t n = a.rows();
  std::vector<std::size_t> colperm(n);
  std::iota(colperm.begin(), colperm.end(), std::size_t{0});
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pr = n, pc = n;
    for (std::size_t i = k; i < n && pr == n; ++i)
      for (std::size_t j = k; j < n; ++j)
        if (a(i, j) != 0) {
          pr = i;
          pc = j;
          break;
        }
    if (pr == n) throw DomainError("solve: singular matrix");
    if (pr != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(pr, j), a(k, j));
      std::swap(b[pr], b[k]);
    }
    if (pc != k) {
      for (std::size_t i = 0; i < n; ++i) std::swap(a(i, pc), a(i, k));
      std::swap(colperm[pc], colperm[k]);
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k) == 0) continue;
      const BigRational f = a(i, k) / a(k, k);
      for (std::size_t j = k; j < n; ++j) a(i, j) -= f * a(k, j);
      b[i] -= f * b[k];
    }
  }
  RatVector y(n);
  for (std::size_t k = n; k-- > 0;) {
    BigRational s = b[k];
    for (std::size_t j = k + 1; j < n; ++j) s -= a(k, j) * y[j];
    y[k] = s / a(k, k);
  }
  RatVector x(n);
  for (std::size_t k = 0; k < n; ++k) x[colperm[k]] = y[k];
  return x;
}

/// Orthogonal projection of v onto span(basis): V (V^T V)^{-1} V^T v.
inline RatVector project(const std::vector<RatVector>& basis, const RatVector& v) {
  const std::size_t n = v.size();
  if (basis.empty()) return RatVector(n);
  const std::size_t k = basis.size();
  for (const auto& b : basis)
    if (b.size() != n) throw DomainError("project: dimension mismatch");
  RatMatrix gram(k, k);
  RatVector rhs(k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i; j < k; ++j) {
      BigRational s = 0;
      for (std::size_t t = 0; t < n; ++t) s += basis[i][t] * basis[j][t];
      gram(i, j) = s;
      gram(j, i) = s;
    }
    BigRational s = 0;
    for (std::size_t t = 0; t < n; ++t) s += basis[i][t] * v[t];
    rhs[i] = s;
  }
  RatVector coef;
  try {
    coef = solve_full_pivot(std::move(gram), std::move(rhs));
  } catch (const DomainError&) {
    throw DomainError("project: basis vectors are linearly dependent");
  }
  RatVector out(n);
  for (std::size_t i = 0; i < k; ++i) {
    if (coef[i] == 0) continue;
    for (std::size_t t = 0; t < n; ++t) out[t] += coef[i] * basis[i][t];
  }
  return out;
}

}  // namespace lafr

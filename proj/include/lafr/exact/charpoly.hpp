#pragma once

#include <cstddef>
#include <vector>

#include "lafr/error.hpp"
#include "lafr/exact/matrix.hpp"
#include "lafr/exact/number.hpp"
#include "lafr/exact/polynomial.hpp"

namespace lafr {

inline constexpr std::size_t kCharPolyMaxOrder = 4096;

namespace detail {

// Samuelson-Berkowitz: division free, O(n^4) ring operations. Returns the
// coefficients of det(tI - A) in descending degree order.
template <class T>
std::vector<T> berkowitz(const Matrix<T>& a) {
  const std::size_t n = a.rows();
  if (n == 0) return {T(1)};
  std::vector<T> p{T(1), T(0) - a(n - 1, n - 1)};
  std::vector<T> col, next, t;
  for (std::size_t k = n - 1; k-- > 0;) {
    const std::size_t m = n - 1 - k;  // order of the trailing block
    t.assign(m + 2, T(0));
    t[0] = T(1);
    t[1] = T(0) - a(k, k);
    col.resize(m);
    for (std::size_t i = 0; i < m; ++i) col[i] = a(k + 1 + i, k);
    for (std::size_t j = 0; j < m; ++j) {
      T dot = T(0);
      for (std::size_t i = 0; i < m; ++i) dot += a(k, k + 1 + i) * col[i];
      t[j + 2] = T(0) - dot;
      if (j + 1 == m) break;
      next.assign(m, T(0));
      for (std::size_t r = 0; r < m; ++r) {
        T acc = T(0);
        for (std::size_t c = 0; c < m; ++c) {
          const T& e = a(k + 1 + r, k + 1 + c);
          if (!(e == T(0))) acc += e * col[c];
        }
        next[r] = acc;
      }
      col.swap(next);
    }
    std::vector<T> q(m + 2, T(0));
    for (std::size_t i = 0; i < m + 2; ++i)
      for (std::size_t j = 0; j <= i && j < m + 1; ++j) q[i] += t[i - j] * p[j];
    p.swap(q);
  }
  return p;
}

inline IntPolynomial from_descending(const std::vector<BigInt>& desc) {
  return IntPolynomial(std::vector<BigInt>(desc.rbegin(), desc.rend()));
}

}  // namespace detail

/// det(tI - m), exact. Runs in checked 64-bit arithmetic and falls back to
/// arbitrary precision on overflow.
inline IntPolynomial char_poly(const IntMatrix& m) {
  if (!m.square()) throw DomainError("char_poly: matrix is not square");
  if (m.rows() > kCharPolyMaxOrder) throw DomainError("char_poly: matrix order exceeds guard");
  const std::size_t n = m.rows();

  bool small = true;
  for (std::size_t i = 0; i < n && small; ++i)
    for (std::size_t j = 0; j < n && small; ++j) small = fits_int64(m(i, j));
  if (small) {
    Matrix<detail::SafeInt> fast(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) fast(i, j) = m(i, j).get_si();
    try {
      const auto desc = detail::berkowitz(fast);
      std::vector<BigInt> coeffs(desc.size());
      for (std::size_t i = 0; i < desc.size(); ++i) coeffs[desc.size() - 1 - i] = from_int64(desc[i].value());
      return IntPolynomial(std::move(coeffs));
    } catch (const detail::Overflow&) {
    }
  }
  return detail::from_descending(detail::berkowitz(m));
}

/// Characteristic polynomial of the principal submatrix with row/column a
/// removed.
inline IntPolynomial char_poly_deleted(const IntMatrix& m, std::size_t a) {
  if (!m.square()) throw DomainError("char_poly_deleted: matrix is not square");
  if (a >= m.rows()) throw DomainError("char_poly_deleted: index out of range");
  return char_poly(delete_row_col(m, a));
}

}  // namespace lafr

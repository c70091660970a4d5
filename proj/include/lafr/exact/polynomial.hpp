#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "lafr/error.hpp"
#include "lafr/exact/number.hpp"

namespace lafr {

/// Integer polynomial, coefficients in ascending degree order. The zero
/// polynomial has no coefficients and degree -1.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }
  IntPolynomial(std::initializer_list<long> coeffs) {
    for (long v : coeffs) c_.emplace_back(v);
    trim();
  }

  /// (t - r)
  static IntPolynomial linear_root(const BigInt& r) { return IntPolynomial(std::vector<BigInt>{-r, 1}); }
  static IntPolynomial constant(const BigInt& v) { return IntPolynomial(std::vector<BigInt>{v}); }

  bool is_zero() const { return c_.empty(); }
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  const std::vector<BigInt>& coefficients() const { return c_; }

  /// Coefficient of t^k (zero beyond the degree).
  BigInt coeff(std::size_t k) const { return k < c_.size() ? c_[k] : BigInt(0); }
  const BigInt& leading() const {
    if (c_.empty()) throw DomainError("leading coefficient of the zero polynomial");
    return c_.back();
  }

  BigInt operator()(const BigInt& x) const {
    BigInt acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  BigInt content() const {
    BigInt g = 0;
    for (const auto& v : c_) g = gcd(g, v);
    return g;
  }

  /// Divides out the content and makes the leading coefficient positive.
  IntPolynomial primitive() const {
    if (is_zero()) return {};
    BigInt g = content();
    if (leading() < 0) g = -g;
    std::vector<BigInt> out(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) mpz_divexact(out[i].get_mpz_t(), c_[i].get_mpz_t(), g.get_mpz_t());
    return IntPolynomial(std::move(out));
  }

  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<BigInt> r(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(i) + b.coeff(i);
    return IntPolynomial(std::move(r));
  }
  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<BigInt> r(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(i) - b.coeff(i);
    return IntPolynomial(std::move(r));
  }
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigInt> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return IntPolynomial(std::move(r));
  }
  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) { return a.c_ == b.c_; }

  std::string to_string(const char* var = "t") const {
    if (is_zero()) return "0";
    std::string s;
    for (long k = degree(); k >= 0; --k) {
      const BigInt& v = c_[static_cast<std::size_t>(k)];
      if (v == 0) continue;
      BigInt mag = abs(v);
      if (s.empty()) {
        if (v < 0) s += "-";
      } else {
        s += v < 0 ? " - " : " + ";
      }
      if (k == 0 || mag != 1) s += mag.get_str();
      if (k >= 1) s += var;
      if (k >= 2) s += "^" + std::to_string(k);
    }
    return s;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<BigInt> c_;
};

namespace detail {

/// Pseudo-remainder of a by b: lc(b)^(deg a - deg b + 1) * a mod b.
inline IntPolynomial pseudo_remainder(IntPolynomial a, const IntPolynomial& b) {
  const auto& bc = b.coefficients();
  const BigInt& lb = b.leading();
  std::vector<BigInt> r = a.coefficients();
  long dr = a.degree();
  const long db = b.degree();
  while (dr >= db && dr >= 0) {
    const BigInt lr = r[static_cast<std::size_t>(dr)];
    for (auto& v : r) v *= lb;
    const std::size_t shift = static_cast<std::size_t>(dr - db);
    for (std::size_t i = 0; i < bc.size(); ++i) r[i + shift] -= lr * bc[i];
    while (!r.empty() && r.back() == 0) r.pop_back();
    dr = static_cast<long>(r.size()) - 1;
  }
  return IntPolynomial(std::move(r));
}

}  // namespace detail

/// Greatest common divisor over Z[t], primitive with positive leading
/// coefficient (primitive PRS).
inline IntPolynomial poly_gcd(const IntPolynomial& p, const IntPolynomial& q) {
  if (p.is_zero() && q.is_zero()) throw DomainError("poly_gcd: both arguments are zero");
  if (p.is_zero()) return q.primitive();
  if (q.is_zero()) return p.primitive();
  IntPolynomial a = p.primitive();
  IntPolynomial b = q.primitive();
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    IntPolynomial r = detail::pseudo_remainder(a, b);
    a = std::move(b);
    b = r.is_zero() ? r : r.primitive();
  }
  return a.primitive();
}

/// Exact quotient p / d. Throws if d does not divide p with an integral
/// quotient.
inline IntPolynomial exact_div(const IntPolynomial& p, const IntPolynomial& d) {
  if (d.is_zero()) throw DomainError("exact_div: division by the zero polynomial");
  if (p.is_zero()) return {};
  if (p.degree() < d.degree()) throw DomainError("exact_div: inexact division");
  std::vector<BigInt> r = p.coefficients();
  const auto& dc = d.coefficients();
  const BigInt& ld = d.leading();
  const long dd = d.degree();
  std::vector<BigInt> q(static_cast<std::size_t>(p.degree() - dd + 1));
  for (long k = p.degree(); k >= dd; --k) {
    const std::size_t ks = static_cast<std::size_t>(k);
    if (r[ks] == 0) continue;
    if (!mpz_divisible_p(r[ks].get_mpz_t(), ld.get_mpz_t())) throw DomainError("exact_div: inexact division");
    BigInt f;
    mpz_divexact(f.get_mpz_t(), r[ks].get_mpz_t(), ld.get_mpz_t());
    const std::size_t shift = static_cast<std::size_t>(k - dd);
    q[shift] = f;
    for (std::size_t i = 0; i < dc.size(); ++i) r[i + shift] -= f * dc[i];
  }
  for (const auto& v : r)
    if (v != 0) throw DomainError("exact_div: inexact division");
  return IntPolynomial(std::move(q));
}

/// Integer roots of p in [lo, hi] mapped to their multiplicities.
inline std::map<long, int> integer_roots(const IntPolynomial& p, long lo, long hi) {
  if (p.is_zero()) throw DomainError("integer_roots: zero polynomial");
  if (lo > hi) throw DomainError("integer_roots: empty range");
  std::map<long, int> roots;
  for (long r = lo; r <= hi; ++r) {
    const BigInt x(r);
    if (p(x) != 0) continue;
    IntPolynomial rest = p;
    int mult = 0;
    const IntPolynomial lin = IntPolynomial::linear_root(x);
    while (!rest.is_zero() && rest(x) == 0) {
      rest = exact_div(rest, lin);
      ++mult;
    }
    roots.emplace(r, mult);
  }
  return roots;
}

/// True iff `found` (root -> multiplicity) accounts for every root of p:
/// the multiplicities add up to deg p and the roots sum to -c_{k-1}/c_k.
inline bool all_roots_integer(const IntPolynomial& p, const std::map<long, int>& found) {
  if (p.is_zero()) return false;
  long count = 0;
  BigInt sum = 0;
  for (const auto& [root, mult] : found) {
    count += mult;
    sum += BigInt(root) * mult;
  }
  if (count != p.degree()) return false;
  if (p.degree() == 0) return true;
  const BigInt next = p.coeff(static_cast<std::size_t>(p.degree() - 1));
  return sum * p.leading() == -next;
}

}  // namespace lafr

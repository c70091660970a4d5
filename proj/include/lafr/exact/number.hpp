#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <limits>
#include <numeric>
#include <string>

#include "lafr/error.hpp"

namespace lafr {

using BigInt = mpz_class;
using BigRational = mpq_class;

inline BigInt gcd(const BigInt& a, const BigInt& b) {
  BigInt r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline BigInt abs(const BigInt& a) { return a < 0 ? BigInt(-a) : a; }

inline bool fits_int64(const BigInt& a) {
  return mpz_fits_slong_p(a.get_mpz_t()) != 0 && sizeof(long) == sizeof(std::int64_t);
}

inline std::int64_t to_int64(const BigInt& a) {
  if (!fits_int64(a)) throw DomainError("integer does not fit in 64 bits: " + a.get_str());
  return a.get_si();
}

inline BigInt from_int64(std::int64_t v) { return BigInt(static_cast<long>(v)); }

/// Exact rational in lowest terms with positive denominator.
inline BigRational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw DomainError("zero denominator");
  BigRational q(num, den);
  q.canonicalize();
  return q;
}

inline std::string to_string(const BigRational& q) { return q.get_str(); }

namespace detail {

struct Overflow {};

/// 64-bit integer that throws `Overflow` instead of wrapping. Used for fast
/// paths whose result is recomputed with BigInt when the exception fires.
class SafeInt {
 public:
  constexpr SafeInt() = default;
  constexpr SafeInt(std::int64_t v) : v_(v) {}  // NOLINT(google-explicit-constructor)

  constexpr std::int64_t value() const { return v_; }

  friend SafeInt operator+(SafeInt a, SafeInt b) {
    std::int64_t r;
    if (__builtin_add_overflow(a.v_, b.v_, &r)) throw Overflow{};
    return r;
  }
  friend SafeInt operator-(SafeInt a, SafeInt b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a.v_, b.v_, &r)) throw Overflow{};
    return r;
  }
  friend SafeInt operator*(SafeInt a, SafeInt b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a.v_, b.v_, &r)) throw Overflow{};
    return r;
  }
  SafeInt operator-() const {
    if (v_ == std::numeric_limits<std::int64_t>::min()) throw Overflow{};
    return -v_;
  }
  SafeInt& operator+=(SafeInt o) { return *this = *this + o; }
  SafeInt& operator-=(SafeInt o) { return *this = *this - o; }
  SafeInt& operator*=(SafeInt o) { return *this = *this * o; }
  friend bool operator==(SafeInt a, SafeInt b) = default;

 private:
  std::int64_t v_ = 0;
};

}  // namespace detail
}  // namespace lafr

#ifndef CANCOV_RATIONAL_HPP
#define CANCOV_RATIONAL_HPP

#include <gmpxx.h>

#include <compare>
#include <ostream>
#include <string>
#include <utility>

#include "cancov/errors.hpp"

namespace cancov {

/// Arbitrary-precision integer.
using Int = mpz_class;

/// Exact rational number, always stored reduced with a positive denominator.
///
/// A thin value wrapper over GMP's mpq_class. Every operation is exact; there
/// is no conversion to floating point anywhere in the library.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}  // NOLINT: implicit so `3 * chi` reads naturally
  Rational(const Int& n) : v_(n) {}
  Rational(const Int& num, const Int& den) : v_(num, den) {
    if (den == 0) throw ZeroDenominatorError();
    v_.canonicalize();
  }
  Rational(long num, long den) : Rational(Int(num), Int(den)) {}

  Int num() const { return v_.get_num(); }
  Int den() const { return v_.get_den(); }

  bool is_integer() const { return v_.get_den() == 1; }
  bool is_zero() const { return v_ == 0; }
  int sign() const { return sgn(v_); }

  /// "p/q", or just "p" when the value is an integer.
  std::string str() const { return v_.get_str(); }

  friend Rational operator-(const Rational& x) { return Rational(mpq_class(-x.v_)); }
  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(mpq_class(a.v_ + b.v_));
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(mpq_class(a.v_ - b.v_));
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(mpq_class(a.v_ * b.v_));
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw DivisionByZeroError();
    return Rational(mpq_class(a.v_ / b.v_));
  }

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0   ? std::strong_ordering::less
           : c > 0 ? std::strong_ordering::greater
                   : std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
  }

 private:
  explicit Rational(mpq_class q) : v_(std::move(q)) {}

  mpq_class v_;  // canonical: reduced, positive denominator
};

/// r/d together with a flag telling whether the result is an integer.
/// d must be >= 1.
inline std::pair<Rational, bool> divide_exact(const Rational& r, long d) {
  if (d < 1) throw Error("divide_exact: divisor must be >= 1");
  const Rational q = r / Rational(d);
  return {q, q.is_integer()};
}

inline Rational constant_like(long v, const Rational&) { return Rational(v); }

/// The value as a machine integer; throws unless it is an integer that fits.
inline long to_long(const Rational& v) {
  if (!v.is_integer()) throw Error("expected an integer, got " + v.str());
  const Int n = v.num();
  if (!n.fits_slong_p()) throw Error("integer out of machine range: " + n.get_str());
  return n.get_si();
}

/// For plain numbers the half-line constraint degenerates to the pointwise one.
inline bool nonnegative_from(const Rational& x, long /*from*/) { return x.sign() >= 0; }
inline bool ge_on_halfline(const Rational& a, const Rational& b, long /*from*/) {
  return a >= b;
}

}  // namespace cancov

#endif

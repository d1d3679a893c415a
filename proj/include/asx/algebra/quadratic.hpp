#pragma once

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>

#include "asx/algebra/rational.hpp"

namespace asx {

/// n = s^2 * f with f free of the small prime squares we could find. Trial
/// division stops at 10^5; a leftover cofactor is absorbed only when it is a
/// perfect square, so f may keep a square of a prime above that bound.
std::pair<mpz_class, mpz_class> split_square(const mpz_class& n);

/// a + b*sqrt(d) with d square-free and d >= 2, or a plain rational (d == 0).
///
/// The representation is canonical: a zero radical coefficient always drops
/// the radicand, so structural equality is value equality. Arithmetic between
/// two irrational values with different radicands throws MixedScalars.
class QuadraticNumber {
 public:
  QuadraticNumber() = default;
  QuadraticNumber(const Rational& value) : a_(value) {}
  template <std::integral I>
  QuadraticNumber(I value) : a_(value) {}

  /// a + b*sqrt(radicand); square factors of the radicand are pulled into b.
  static QuadraticNumber make(const Rational& a, const Rational& b, const mpz_class& radicand);
  /// Non-negative square root of a rational, exact.
  static QuadraticNumber sqrt_of(const Rational& value);
  /// Accepts "p/q", "p/q+r/s*sqrt(D)", "r/s*sqrt(D)", "-sqrt(D)", ...
  static QuadraticNumber parse(std::string_view text);

  const Rational& rational_part() const { return a_; }
  const Rational& radical_coefficient() const { return b_; }
  /// 0 when the value is rational.
  const mpz_class& radicand() const { return d_; }
  bool is_rational() const { return d_ == 0; }
  bool is_zero() const { return d_ == 0 && a_.is_zero(); }

  /// Exact sign of a + b*sqrt(d), decided with rational arithmetic only.
  int sign() const;
  QuadraticNumber conjugate() const;
  QuadraticNumber inverse() const;
  /// Throws InvalidArgument when the value is irrational.
  const Rational& as_rational() const;

  std::string to_string() const;
  /// Floating approximation at the given precision in bits (diagnostics only).
  mpf_class approximate(unsigned bits = 256) const;

  QuadraticNumber operator-() const;
  QuadraticNumber& operator+=(const QuadraticNumber& rhs);
  QuadraticNumber& operator-=(const QuadraticNumber& rhs);
  QuadraticNumber& operator*=(const QuadraticNumber& rhs);
  QuadraticNumber& operator/=(const QuadraticNumber& rhs);

  friend QuadraticNumber operator+(QuadraticNumber lhs, const QuadraticNumber& rhs) { return lhs += rhs; }
  friend QuadraticNumber operator-(QuadraticNumber lhs, const QuadraticNumber& rhs) { return lhs -= rhs; }
  friend QuadraticNumber operator*(QuadraticNumber lhs, const QuadraticNumber& rhs) { return lhs *= rhs; }
  friend QuadraticNumber operator/(QuadraticNumber lhs, const QuadraticNumber& rhs) { return lhs /= rhs; }

  friend bool operator==(const QuadraticNumber& lhs, const QuadraticNumber& rhs) {
    return lhs.d_ == rhs.d_ && lhs.a_ == rhs.a_ && lhs.b_ == rhs.b_;
  }
  /// Orders by real value; throws MixedScalars for incompatible radicands.
  friend std::strong_ordering operator<=>(const QuadraticNumber& lhs, const QuadraticNumber& rhs) {
    const int s = (lhs - rhs).sign();
    return s < 0 ? std::strong_ordering::less
                 : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  static mpz_class common_radicand(const QuadraticNumber& x, const QuadraticNumber& y);
  void normalize();

  Rational a_;
  Rational b_;
  mpz_class d_;
};

std::ostream& operator<<(std::ostream& os, const QuadraticNumber& value);

inline bool is_zero(const QuadraticNumber& x) { return x.is_zero(); }
inline std::string to_string(const QuadraticNumber& x) { return x.to_string(); }

}  // namespace asx

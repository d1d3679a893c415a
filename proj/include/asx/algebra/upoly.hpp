#pragma once

#include <initializer_list>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "asx/algebra/quadratic.hpp"
#include "asx/algebra/rational.hpp"

namespace asx {

/// Dense univariate polynomial over the rationals, coefficients stored from
/// the constant term upward with no trailing zeros.
class UPoly {
 public:
  UPoly() = default;
  UPoly(const Rational& constant);
  /// Coefficients listed from the constant term upward.
  explicit UPoly(std::vector<Rational> coefficients);
  UPoly(std::initializer_list<Rational> coefficients) : UPoly(std::vector<Rational>(coefficients)) {}

  static UPoly x() { return UPoly({Rational(0), Rational(1)}); }

  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Rational>& coefficients() const { return c_; }
  Rational coefficient(std::size_t power) const { return power < c_.size() ? c_[power] : Rational(0); }
  const Rational& leading() const;

  UPoly monic() const;
  UPoly derivative() const;
  Rational operator()(const Rational& at) const;
  QuadraticNumber operator()(const QuadraticNumber& at) const;

  /// Quotient and remainder of Euclidean division.
  std::pair<UPoly, UPoly> divmod(const UPoly& divisor) const;

  std::string to_string(const std::string& var = "x") const;

  UPoly operator-() const;
  UPoly& operator+=(const UPoly& rhs);
  UPoly& operator-=(const UPoly& rhs);
  friend UPoly operator+(UPoly lhs, const UPoly& rhs) { return lhs += rhs; }
  friend UPoly operator-(UPoly lhs, const UPoly& rhs) { return lhs -= rhs; }
  friend UPoly operator*(const UPoly& lhs, const UPoly& rhs);
  friend bool operator==(const UPoly& lhs, const UPoly& rhs) { return lhs.c_ == rhs.c_; }

 private:
  void trim();
  std::vector<Rational> c_;
};

/// Monic gcd; gcd(0, 0) = 0.
UPoly gcd(const UPoly& a, const UPoly& b);

std::ostream& operator<<(std::ostream& os, const UPoly& p);

}  // namespace asx

#pragma once

#include <iosfwd>
#include <map>
#include <string>

#include "asx/algebra/multipoly.hpp"

namespace asx {

/// Quotient of multivariate polynomials, always kept reduced: numerator and
/// denominator are coprime and the denominator's leading coefficient is 1.
/// Structural equality is therefore value equality.
class RatFunc {
 public:
  RatFunc() : den_(1) {}
  RatFunc(const MultiPoly& p) : num_(p), den_(1) {}
  RatFunc(const Rational& c) : num_(c), den_(1) {}
  template <std::integral I>
  RatFunc(I c) : num_(c), den_(1) {}
  RatFunc(MultiPoly numerator, MultiPoly denominator);

  static RatFunc variable(const std::string& name) { return RatFunc(MultiPoly::variable(name)); }

  const MultiPoly& numerator() const { return num_; }
  const MultiPoly& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  Rational constant_value() const;

  RatFunc inverse() const;
  RatFunc substitute(const std::string& var, const RatFunc& value) const;
  RatFunc partial_evaluate(const std::map<std::string, Rational>& values) const;
  /// Throws DivisionByZero when the denominator vanishes at the point.
  Rational evaluate(const std::map<std::string, Rational>& values) const;

  std::string to_string() const;

  RatFunc operator-() const;
  RatFunc& operator+=(const RatFunc& rhs);
  RatFunc& operator-=(const RatFunc& rhs);
  RatFunc& operator*=(const RatFunc& rhs);
  RatFunc& operator/=(const RatFunc& rhs);

  friend RatFunc operator+(RatFunc lhs, const RatFunc& rhs) { return lhs += rhs; }
  friend RatFunc operator-(RatFunc lhs, const RatFunc& rhs) { return lhs -= rhs; }
  friend RatFunc operator*(RatFunc lhs, const RatFunc& rhs) { return lhs *= rhs; }
  friend RatFunc operator/(RatFunc lhs, const RatFunc& rhs) { return lhs /= rhs; }
  friend bool operator==(const RatFunc& lhs, const RatFunc& rhs) {
    return lhs.num_ == rhs.num_ && lhs.den_ == rhs.den_;
  }

 private:
  struct Reduced {};
  RatFunc(MultiPoly numerator, MultiPoly denominator, Reduced) : num_(std::move(numerator)), den_(std::move(denominator)) {}
  void normalize();

  MultiPoly num_;
  MultiPoly den_;
};

/// a/b == c/d decided as a*d == c*b, independent of normalization.
bool equal_by_cross_multiplication(const RatFunc& lhs, const RatFunc& rhs);

std::ostream& operator<<(std::ostream& os, const RatFunc& f);

inline bool is_zero(const RatFunc& x) { return x.is_zero(); }
inline std::string to_string(const RatFunc& x) { return x.to_string(); }

}  // namespace asx

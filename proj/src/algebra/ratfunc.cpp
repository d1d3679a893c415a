#include "asx/algebra/ratfunc.hpp"

#include <ostream>

#include "asx/algebra/errors.hpp"

namespace asx {

namespace {

// p(var -> n/d) * d^degree, computed without leaving polynomials
MultiPoly homogenized_substitute(const MultiPoly& p, const std::string& var, const MultiPoly& n,
                                 const MultiPoly& d, unsigned degree) {
  const auto coeffs = p.coefficients_in(var);
  MultiPoly out;
  MultiPoly n_power(1);
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (!coeffs[k].is_zero()) out += coeffs[k] * n_power * pow(d, degree - static_cast<unsigned>(k));
    n_power *= n;
  }
  return out;
}

std::string wrapped(const MultiPoly& p, bool as_divisor) {
  const std::string s = p.to_string();
  const bool single = p.is_monomial() && s.find_first_of("+-", 1) == std::string::npos;
  if (single && !(as_divisor && s.find_first_of("*^/") != std::string::npos)) return s;
  return "(" + s + ")";
}

}  // namespace

RatFunc::RatFunc(MultiPoly numerator, MultiPoly denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  if (den_.is_zero()) throw Error(ErrorKind::DivisionByZero, "rational function with zero denominator");
  normalize();
}

void RatFunc::normalize() {
  if (num_.is_zero()) {
    den_ = MultiPoly(1);
    return;
  }
  if (!den_.is_constant()) {
    const MultiPoly g = gcd(num_, den_);
    if (!g.is_constant()) {
      num_ = *divide_exact(num_, g);
      den_ = *divide_exact(den_, g);
    }
  }
  const Rational lead = den_.leading_coefficient();
  if (lead != Rational(1)) {
    const Rational inv = lead.inverse();
    num_ *= inv;
    den_ *= inv;
  }
}

Rational RatFunc::constant_value() const {
  if (!is_constant()) throw Error(ErrorKind::InvalidArgument, "rational function is not constant: " + to_string());
  return num_.constant_value() / den_.constant_value();
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of the zero rational function");
  return RatFunc(den_, num_);
}

RatFunc RatFunc::substitute(const std::string& var, const RatFunc& value) const {
  if (!num_.contains(var) && !den_.contains(var)) return *this;
  const unsigned dn = num_.degree_in(var);
  const unsigned dd = den_.degree_in(var);
  const MultiPoly& n = value.numerator();
  const MultiPoly& d = value.denominator();
  MultiPoly top = homogenized_substitute(num_, var, n, d, dn);
  MultiPoly bottom = homogenized_substitute(den_, var, n, d, dd);
  if (dd > dn) {
    top *= pow(d, dd - dn);
  } else if (dn > dd) {
    bottom *= pow(d, dn - dd);
  }
  if (bottom.is_zero()) throw Error(ErrorKind::DivisionByZero, "substitution makes the denominator vanish");
  return RatFunc(std::move(top), std::move(bottom));
}

RatFunc RatFunc::partial_evaluate(const std::map<std::string, Rational>& values) const {
  MultiPoly bottom = den_.partial_evaluate(values);
  if (bottom.is_zero()) throw Error(ErrorKind::DivisionByZero, "denominator vanishes at the given point");
  return RatFunc(num_.partial_evaluate(values), std::move(bottom));
}

Rational RatFunc::evaluate(const std::map<std::string, Rational>& values) const {
  const Rational bottom = den_.evaluate(values);
  if (bottom.is_zero()) throw Error(ErrorKind::DivisionByZero, "denominator vanishes at the given point");
  return num_.evaluate(values) / bottom;
}

std::string RatFunc::to_string() const {
  if (den_.is_constant() && den_.constant_value() == Rational(1)) return num_.to_string();
  return wrapped(num_, false) + "/" + wrapped(den_, true);
}

RatFunc RatFunc::operator-() const { return RatFunc(-num_, den_, Reduced{}); }

RatFunc& RatFunc::operator+=(const RatFunc& rhs) {
  if (rhs.is_zero()) return *this;
  if (is_zero()) return *this = rhs;
  if (den_ == rhs.den_) {
    *this = RatFunc(num_ + rhs.num_, den_);
    return *this;
  }
  // a/b + c/d over lcm(b, d)
  const MultiPoly g = gcd(den_, rhs.den_);
  const MultiPoly b = g.is_constant() ? den_ : *divide_exact(den_, g);
  const MultiPoly d = g.is_constant() ? rhs.den_ : *divide_exact(rhs.den_, g);
  *this = RatFunc(num_ * d + rhs.num_ * b, b * rhs.den_);
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& rhs) { return *this += -rhs; }

RatFunc& RatFunc::operator*=(const RatFunc& rhs) {
  if (is_zero() || rhs.is_zero()) return *this = RatFunc();
  // cross-cancel first so the products stay small
  const MultiPoly g1 = gcd(num_, rhs.den_);
  const MultiPoly g2 = gcd(rhs.num_, den_);
  const MultiPoly a = g1.is_constant() ? num_ : *divide_exact(num_, g1);
  const MultiPoly d = g1.is_constant() ? rhs.den_ : *divide_exact(rhs.den_, g1);
  const MultiPoly c = g2.is_constant() ? rhs.num_ : *divide_exact(rhs.num_, g2);
  const MultiPoly b = g2.is_constant() ? den_ : *divide_exact(den_, g2);
  MultiPoly top = a * c;
  MultiPoly bottom = b * d;
  const Rational lead = bottom.leading_coefficient();
  if (lead != Rational(1)) {
    top *= lead.inverse();
    bottom *= lead.inverse();
  }
  num_ = std::move(top);
  den_ = std::move(bottom);
  return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& rhs) { return *this *= rhs.inverse(); }

bool equal_by_cross_multiplication(const RatFunc& lhs, const RatFunc& rhs) {
  return lhs.numerator() * rhs.denominator() == rhs.numerator() * lhs.denominator();
}

std::ostream& operator<<(std::ostream& os, const RatFunc& f) { return os << f.to_string(); }

}  // namespace asx

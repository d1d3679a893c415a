#include "asx/algebra/quadratic.hpp"

#include <ostream>

#include "asx/algebra/errors.hpp"

namespace asx {

std::pair<mpz_class, mpz_class> split_square(const mpz_class& n) {
  if (n <= 0) throw Error(ErrorKind::InvalidArgument, "split_square needs a positive integer");
  mpz_class square = 1;
  mpz_class rest = n;
  const unsigned long bound = 100000;
  for (unsigned long p = 2; p <= bound; p += (p == 2 ? 1 : 2)) {
    const mpz_class pp = mpz_class(p) * p;
    if (pp > rest) break;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p * p) != 0) {
      rest /= pp;
      square *= p;
    }
  }
  if (rest > 1 && mpz_perfect_square_p(rest.get_mpz_t()) != 0) {
    square *= sqrt(rest);
    rest = 1;
  }
  return {square, rest};
}

QuadraticNumber QuadraticNumber::make(const Rational& a, const Rational& b, const mpz_class& radicand) {
  if (radicand < 0) {
    throw Error(ErrorKind::UnsupportedAlgebraicDegree, "negative radicand " + radicand.get_str());
  }
  QuadraticNumber x;
  x.a_ = a;
  if (radicand == 0 || b.is_zero()) return x;
  const auto [square, free] = split_square(radicand);
  if (free == 1) {
    x.a_ += b * Rational(square);
    return x;
  }
  x.b_ = b * Rational(square);
  x.d_ = free;
  return x;
}

QuadraticNumber QuadraticNumber::sqrt_of(const Rational& value) {
  if (value.sign() < 0) {
    throw Error(ErrorKind::UnsupportedAlgebraicDegree, "square root of negative " + value.to_string());
  }
  if (value.is_zero()) return QuadraticNumber();
  // sqrt(n/d) = sqrt(n*d)/d
  const mpz_class den = value.denominator();
  return make(Rational(0), Rational(mpz_class(1), den), value.numerator() * den);
}

QuadraticNumber QuadraticNumber::parse(std::string_view text) {
  const auto pos = text.find("sqrt(");
  if (pos == std::string_view::npos) return QuadraticNumber(Rational::parse(text));
  if (text.back() != ')') throw Error(ErrorKind::ParseError, "malformed radical in '" + std::string(text) + "'");
  const std::string_view inside = text.substr(pos + 5, text.size() - pos - 6);
  const Rational radicand = Rational::parse(inside);
  if (!radicand.is_integer() || radicand.sign() <= 0 || inside.find_first_of("+-") != std::string_view::npos) {
    throw Error(ErrorKind::ParseError, "radicand must be a positive integer in '" + std::string(text) + "'");
  }
  std::string_view prefix = text.substr(0, pos);
  if (!prefix.empty() && prefix.back() == '*') prefix.remove_suffix(1);

  std::size_t split = std::string_view::npos;
  for (std::size_t i = prefix.size(); i-- > 1;) {
    if ((prefix[i] == '+' || prefix[i] == '-') && prefix[i - 1] != '/') {
      split = i;
      break;
    }
  }
  const std::string_view rational_text = split == std::string_view::npos ? std::string_view() : prefix.substr(0, split);
  const std::string_view coeff_text = split == std::string_view::npos ? prefix : prefix.substr(split);

  Rational a = rational_text.empty() ? Rational(0) : Rational::parse(rational_text);
  Rational b;
  if (coeff_text.empty() || coeff_text == "+") {
    b = Rational(1);
  } else if (coeff_text == "-") {
    b = Rational(-1);
  } else {
    b = Rational::parse(coeff_text);
  }
  return make(a, b, radicand.numerator());
}

mpz_class QuadraticNumber::common_radicand(const QuadraticNumber& x, const QuadraticNumber& y) {
  if (x.d_ == 0) return y.d_;
  if (y.d_ == 0 || x.d_ == y.d_) return x.d_;
  throw Error(ErrorKind::MixedScalars,
              "cannot combine sqrt(" + x.d_.get_str() + ") with sqrt(" + y.d_.get_str() + ")");
}

void QuadraticNumber::normalize() {
  if (b_.is_zero()) d_ = 0;
}

int QuadraticNumber::sign() const {
  if (d_ == 0 || b_.is_zero()) return a_.sign();
  const int sa = a_.sign();
  const int sb = b_.sign();
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // opposite signs: the part with the larger square wins
  const Rational lhs = a_ * a_;
  const Rational rhs = b_ * b_ * Rational(d_);
  if (lhs > rhs) return sa;
  if (lhs < rhs) return sb;
  return 0;
}

QuadraticNumber QuadraticNumber::conjugate() const {
  QuadraticNumber x = *this;
  x.b_ = -x.b_;
  return x;
}

QuadraticNumber QuadraticNumber::inverse() const {
  if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
  if (d_ == 0) return QuadraticNumber(a_.inverse());
  const Rational norm = a_ * a_ - b_ * b_ * Rational(d_);
  QuadraticNumber x;
  x.a_ = a_ / norm;
  x.b_ = -b_ / norm;
  x.d_ = d_;
  x.normalize();
  return x;
}

const Rational& QuadraticNumber::as_rational() const {
  if (d_ != 0) throw Error(ErrorKind::InvalidArgument, "value " + to_string() + " is not rational");
  return a_;
}

std::string QuadraticNumber::to_string() const {
  if (d_ == 0) return a_.to_string();
  const std::string radical = "sqrt(" + d_.get_str() + ")";
  std::string coeff;
  if (b_ == Rational(1)) {
    coeff = radical;
  } else if (b_ == Rational(-1)) {
    coeff = "-" + radical;
  } else {
    coeff = b_.to_string() + "*" + radical;
  }
  if (a_.is_zero()) return coeff;
  return a_.to_string() + (b_.sign() > 0 ? "+" : "") + coeff;
}

mpf_class QuadraticNumber::approximate(unsigned bits) const {
  mpf_class a(a_.raw(), bits);
  if (d_ == 0) return a;
  mpf_class root(d_, bits);
  root = sqrt(root);
  mpf_class b(b_.raw(), bits);
  return a + b * root;
}

QuadraticNumber QuadraticNumber::operator-() const {
  QuadraticNumber x = *this;
  x.a_ = -x.a_;
  x.b_ = -x.b_;
  return x;
}

QuadraticNumber& QuadraticNumber::operator+=(const QuadraticNumber& rhs) {
  d_ = common_radicand(*this, rhs);
  a_ += rhs.a_;
  b_ += rhs.b_;
  normalize();
  return *this;
}

QuadraticNumber& QuadraticNumber::operator-=(const QuadraticNumber& rhs) {
  d_ = common_radicand(*this, rhs);
  a_ -= rhs.a_;
  b_ -= rhs.b_;
  normalize();
  return *this;
}

QuadraticNumber& QuadraticNumber::operator*=(const QuadraticNumber& rhs) {
  const mpz_class d = common_radicand(*this, rhs);
  const Rational a = a_ * rhs.a_ + b_ * rhs.b_ * Rational(d);
  const Rational b = a_ * rhs.b_ + b_ * rhs.a_;
  a_ = a;
  b_ = b;
  d_ = d;
  normalize();
  return *this;
}

QuadraticNumber& QuadraticNumber::operator/=(const QuadraticNumber& rhs) {
  common_radicand(*this, rhs);
  return *this *= rhs.inverse();
}

std::ostream& operator<<(std::ostream& os, const QuadraticNumber& value) { return os << value.to_string(); }

}  // namespace asx

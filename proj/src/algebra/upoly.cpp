#include "asx/algebra/upoly.hpp"

#include <ostream>
#include <sstream>

#include "asx/algebra/errors.hpp"

namespace asx {

UPoly::UPoly(const Rational& constant) {
  if (!constant.is_zero()) c_.push_back(constant);
}

UPoly::UPoly(std::vector<Rational> coefficients) : c_(std::move(coefficients)) { trim(); }

void UPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

const Rational& UPoly::leading() const {
  if (c_.empty()) throw Error(ErrorKind::InvalidArgument, "zero polynomial has no leading coefficient");
  return c_.back();
}

UPoly UPoly::monic() const {
  if (is_zero()) return *this;
  const Rational inv = leading().inverse();
  std::vector<Rational> c = c_;
  for (auto& v : c) v *= inv;
  return UPoly(std::move(c));
}

UPoly UPoly::derivative() const {
  if (c_.size() <= 1) return UPoly();
  std::vector<Rational> c(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) c[i - 1] = c_[i] * Rational(i);
  return UPoly(std::move(c));
}

Rational UPoly::operator()(const Rational& at) const {
  Rational acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * at + *it;
  return acc;
}

QuadraticNumber UPoly::operator()(const QuadraticNumber& at) const {
  QuadraticNumber acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * at + QuadraticNumber(*it);
  return acc;
}

std::pair<UPoly, UPoly> UPoly::divmod(const UPoly& divisor) const {
  if (divisor.is_zero()) throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
  if (degree() < divisor.degree()) return {UPoly(), *this};
  std::vector<Rational> rest = c_;
  std::vector<Rational> quot(c_.size() - divisor.c_.size() + 1);
  const Rational lead_inv = divisor.leading().inverse();
  const std::size_t dd = divisor.c_.size() - 1;
  for (std::size_t k = quot.size(); k-- > 0;) {
    const Rational factor = rest[k + dd] * lead_inv;
    quot[k] = factor;
    if (factor.is_zero()) continue;
    for (std::size_t i = 0; i <= dd; ++i) rest[k + i] -= factor * divisor.c_[i];
  }
  rest.resize(dd);
  return {UPoly(std::move(quot)), UPoly(std::move(rest))};
}

std::string UPoly::to_string(const std::string& var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = c_.size(); k-- > 0;) {
    Rational c = c_[k];
    if (c.is_zero()) continue;
    if (!first) {
      os << (c.sign() < 0 ? "-" : "+");
      c = c.abs();
    } else if (k > 0 && c == Rational(-1)) {
      os << "-";
      c = Rational(1);
    }
    first = false;
    if (k == 0 || c != Rational(1)) {
      os << c;
      if (k > 0) os << "*";
    }
    if (k > 0) os << var;
    if (k > 1) os << "^" << k;
  }
  return os.str();
}

UPoly UPoly::operator-() const {
  std::vector<Rational> c = c_;
  for (auto& v : c) v = -v;
  return UPoly(std::move(c));
}

UPoly& UPoly::operator+=(const UPoly& rhs) {
  if (rhs.c_.size() > c_.size()) c_.resize(rhs.c_.size());
  for (std::size_t i = 0; i < rhs.c_.size(); ++i) c_[i] += rhs.c_[i];
  trim();
  return *this;
}

UPoly& UPoly::operator-=(const UPoly& rhs) { return *this += -rhs; }

UPoly operator*(const UPoly& lhs, const UPoly& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return UPoly();
  std::vector<Rational> c(lhs.c_.size() + rhs.c_.size() - 1);
  for (std::size_t i = 0; i < lhs.c_.size(); ++i) {
    for (std::size_t j = 0; j < rhs.c_.size(); ++j) c[i + j] += lhs.c_[i] * rhs.c_[j];
  }
  return UPoly(std::move(c));
}

UPoly gcd(const UPoly& a, const UPoly& b) {
  UPoly x = a;
  UPoly y = b;
  while (!y.is_zero()) {
    UPoly r = x.divmod(y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

std::ostream& operator<<(std::ostream& os, const UPoly& p) { return os << p.to_string(); }

}  // namespace asx

#include "asx/algebra/multipoly.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "asx/algebra/errors.hpp"

namespace asx {

namespace {

using Exponents = MultiPoly::Exponents;
using TermMap = MultiPoly::TermMap;

std::vector<std::string> union_of(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  if (a == b) return a;
  std::vector<std::string> out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

// Re-index the exponents of `p` over `target` (a superset of p's variables).
TermMap embed(const MultiPoly& p, const std::vector<std::string>& target) {
  const auto& vars = p.variables();
  if (vars == target) return p.terms();
  std::vector<std::size_t> slot(vars.size());
  for (std::size_t i = 0; i < vars.size(); ++i) {
    slot[i] = static_cast<std::size_t>(std::lower_bound(target.begin(), target.end(), vars[i]) - target.begin());
  }
  TermMap out;
  for (const auto& [exps, coeff] : p.terms()) {
    Exponents e(target.size(), 0);
    for (std::size_t i = 0; i < exps.size(); ++i) e[slot[i]] = exps[i];
    out.emplace(std::move(e), coeff);
  }
  return out;
}

void accumulate(TermMap& terms, const Exponents& exps, const Rational& coeff) {
  auto [it, inserted] = terms.try_emplace(exps, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms.erase(it);
  }
}

std::size_t index_of(const std::vector<std::string>& vars, const std::string& var) {
  const auto it = std::lower_bound(vars.begin(), vars.end(), var);
  if (it == vars.end() || *it != var) return vars.size();
  return static_cast<std::size_t>(it - vars.begin());
}

}  // namespace

MultiPoly::MultiPoly(const Rational& constant) {
  if (!constant.is_zero()) terms_.emplace(Exponents{}, constant);
}

MultiPoly MultiPoly::variable(const std::string& name) {
  MultiPoly p;
  p.vars_ = {name};
  p.terms_.emplace(Exponents{1}, Rational(1));
  return p;
}

MultiPoly MultiPoly::from_terms(std::vector<std::string> vars, TermMap terms) {
  for (auto it = terms.begin(); it != terms.end();) {
    it = it->second.is_zero() ? terms.erase(it) : std::next(it);
  }
  std::vector<bool> used(vars.size(), false);
  for (const auto& [exps, coeff] : terms) {
    for (std::size_t i = 0; i < exps.size(); ++i) {
      if (exps[i] != 0) used[i] = true;
    }
  }
  MultiPoly p;
  if (std::all_of(used.begin(), used.end(), [](bool u) { return u; })) {
    p.vars_ = std::move(vars);
    p.terms_ = std::move(terms);
    return p;
  }
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (used[i]) p.vars_.push_back(vars[i]);
  }
  for (const auto& [exps, coeff] : terms) {
    Exponents e;
    e.reserve(p.vars_.size());
    for (std::size_t i = 0; i < exps.size(); ++i) {
      if (used[i]) e.push_back(exps[i]);
    }
    p.terms_.emplace(std::move(e), coeff);
  }
  return p;
}

bool MultiPoly::contains(const std::string& var) const { return index_of(vars_, var) != vars_.size(); }

Rational MultiPoly::constant_value() const {
  if (!is_constant()) throw Error(ErrorKind::InvalidArgument, "polynomial is not constant: " + to_string());
  return terms_.empty() ? Rational(0) : terms_.begin()->second;
}

unsigned MultiPoly::degree_in(const std::string& var) const {
  const std::size_t k = index_of(vars_, var);
  if (k == vars_.size()) return 0;
  unsigned deg = 0;
  for (const auto& [exps, coeff] : terms_) deg = std::max<unsigned>(deg, exps[k]);
  return deg;
}

unsigned MultiPoly::total_degree() const {
  unsigned deg = 0;
  for (const auto& [exps, coeff] : terms_) {
    unsigned s = 0;
    for (auto e : exps) s += e;
    deg = std::max(deg, s);
  }
  return deg;
}

const Rational& MultiPoly::leading_coefficient() const {
  if (terms_.empty()) throw Error(ErrorKind::InvalidArgument, "zero polynomial has no leading coefficient");
  return terms_.rbegin()->second;
}

MultiPoly MultiPoly::monic() const {
  if (is_zero()) return *this;
  MultiPoly p = *this;
  p *= leading_coefficient().inverse();
  return p;
}

std::vector<MultiPoly> MultiPoly::coefficients_in(const std::string& var) const {
  const std::size_t k = index_of(vars_, var);
  if (k == vars_.size()) return {*this};
  std::vector<TermMap> buckets(degree_in(var) + 1);
  for (const auto& [exps, coeff] : terms_) {
    Exponents e = exps;
    const auto power = e[k];
    e[k] = 0;
    buckets[power].emplace(std::move(e), coeff);
  }
  std::vector<MultiPoly> out;
  out.reserve(buckets.size());
  for (auto& bucket : buckets) out.push_back(from_terms(vars_, std::move(bucket)));
  return out;
}

MultiPoly MultiPoly::from_coefficients(const std::vector<MultiPoly>& coeffs, const std::string& var) {
  MultiPoly out;
  const MultiPoly x = variable(var);
  MultiPoly power(1);
  for (const auto& c : coeffs) {
    if (!c.is_zero()) out += c * power;
    power *= x;
  }
  return out;
}

MultiPoly MultiPoly::substitute(const std::string& var, const MultiPoly& value) const {
  if (!contains(var)) return *this;
  const auto coeffs = coefficients_in(var);
  // Horner in the substituted variable
  MultiPoly out;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    out = out * value + *it;
  }
  return out;
}

MultiPoly MultiPoly::partial_evaluate(const std::map<std::string, Rational>& values) const {
  std::vector<std::pair<std::size_t, Rational>> bound;
  std::vector<std::string> rest;
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    const auto it = values.find(vars_[i]);
    if (it != values.end()) {
      bound.emplace_back(i, it->second);
    } else {
      rest.push_back(vars_[i]);
    }
  }
  if (bound.empty()) return *this;
  TermMap out;
  for (const auto& [exps, coeff] : terms_) {
    Rational c = coeff;
    for (const auto& [idx, val] : bound) c *= val.pow(exps[idx]);
    if (c.is_zero()) continue;
    Exponents e;
    e.reserve(rest.size());
    std::size_t b = 0;
    for (std::size_t i = 0; i < exps.size(); ++i) {
      if (b < bound.size() && bound[b].first == i) {
        ++b;
      } else {
        e.push_back(exps[i]);
      }
    }
    accumulate(out, e, c);
  }
  return from_terms(std::move(rest), std::move(out));
}

Rational MultiPoly::evaluate(const std::map<std::string, Rational>& values) const {
  const MultiPoly p = partial_evaluate(values);
  if (!p.is_constant()) throw Error(ErrorKind::InvalidArgument, "unbound variables in evaluation of " + to_string());
  return p.constant_value();
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [exps, coeff] = *it;
    const bool unit_monomial = std::all_of(exps.begin(), exps.end(), [](auto e) { return e == 0; });
    Rational c = coeff;
    if (!first) {
      os << (c.sign() < 0 ? "-" : "+");
      c = c.abs();
    } else if (c.sign() < 0 && !unit_monomial && c == Rational(-1)) {
      os << "-";
      c = Rational(1);
    }
    first = false;
    bool wrote = false;
    if (unit_monomial || c != Rational(1)) {
      os << c;
      wrote = true;
    }
    for (std::size_t i = 0; i < exps.size(); ++i) {
      if (exps[i] == 0) continue;
      if (wrote) os << "*";
      os << vars_[i];
      if (exps[i] > 1) os << "^" << exps[i];
      wrote = true;
    }
  }
  return os.str();
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly p = *this;
  for (auto& [exps, coeff] : p.terms_) coeff = -coeff;
  return p;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& rhs) {
  if (rhs.is_zero()) return *this;
  if (vars_ == rhs.vars_) {
    for (const auto& [exps, coeff] : rhs.terms_) accumulate(terms_, exps, coeff);
    if (!vars_.empty()) *this = from_terms(std::move(vars_), std::move(terms_));
    return *this;
  }
  auto vars = union_of(vars_, rhs.vars_);
  TermMap terms = embed(*this, vars);
  for (const auto& [exps, coeff] : embed(rhs, vars)) accumulate(terms, exps, coeff);
  *this = from_terms(std::move(vars), std::move(terms));
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& rhs) { return *this += -rhs; }

MultiPoly operator*(const MultiPoly& lhs, const MultiPoly& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return MultiPoly();
  if (lhs.is_constant()) return rhs * lhs.constant_value();
  if (rhs.is_constant()) return lhs * rhs.constant_value();
  auto vars = union_of(lhs.vars_, rhs.vars_);
  const TermMap a = embed(lhs, vars);
  const TermMap b = embed(rhs, vars);
  TermMap out;
  Exponents e(vars.size());
  for (const auto& [ea, ca] : a) {
    for (const auto& [eb, cb] : b) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      accumulate(out, e, ca * cb);
    }
  }
  return MultiPoly::from_terms(std::move(vars), std::move(out));
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& rhs) {
  *this = *this * rhs;
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& rhs) {
  if (rhs.is_zero()) {
    vars_.clear();
    terms_.clear();
    return *this;
  }
  for (auto& [exps, coeff] : terms_) coeff *= rhs;
  return *this;
}

MultiPoly pow(const MultiPoly& base, unsigned exponent) {
  MultiPoly result(1);
  MultiPoly b = base;
  while (exponent > 0) {
    if (exponent & 1U) result *= b;
    exponent >>= 1U;
    if (exponent > 0) b *= b;
  }
  return result;
}

std::optional<MultiPoly> divide_exact(const MultiPoly& dividend, const MultiPoly& divisor) {
  if (divisor.is_zero()) throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
  if (dividend.is_zero()) return MultiPoly();
  if (divisor.is_constant()) return dividend * divisor.constant_value().inverse();
  // a divisor variable missing from the dividend can never divide it
  for (const auto& v : divisor.variables()) {
    if (!dividend.contains(v)) return std::nullopt;
  }
  const auto vars = dividend.variables();
  TermMap rest = dividend.terms();
  const TermMap d = embed(divisor, vars);
  const auto& [lead_exps, lead_coeff] = *d.rbegin();
  const Rational lead_inv = lead_coeff.inverse();
  TermMap quotient;
  Exponents shift(vars.size());
  Exponents e(vars.size());
  while (!rest.empty()) {
    const auto& [re, rc] = *rest.rbegin();
    for (std::size_t i = 0; i < vars.size(); ++i) {
      if (re[i] < lead_exps[i]) return std::nullopt;
      shift[i] = re[i] - lead_exps[i];
    }
    const Rational factor = rc * lead_inv;
    quotient.emplace(shift, factor);
    for (const auto& [de, dc] : d) {
      for (std::size_t i = 0; i < vars.size(); ++i) e[i] = de[i] + shift[i];
      accumulate(rest, e, -(dc * factor));
    }
  }
  return MultiPoly::from_terms(vars, std::move(quotient));
}

namespace {

MultiPoly exact_quotient(const MultiPoly& a, const MultiPoly& b) {
  auto q = divide_exact(a, b);
  if (!q) throw Error(ErrorKind::InvalidArgument, "internal: inexact polynomial division");
  return *std::move(q);
}

MultiPoly monomial_gcd(const MultiPoly& monomial, const MultiPoly& other) {
  const auto vars = union_of(monomial.variables(), other.variables());
  const TermMap m = embed(monomial, vars);
  Exponents low = m.begin()->first;
  for (const auto& [exps, coeff] : embed(other, vars)) {
    for (std::size_t i = 0; i < low.size(); ++i) low[i] = std::min(low[i], exps[i]);
  }
  TermMap t;
  t.emplace(std::move(low), Rational(1));
  return MultiPoly::from_terms(vars, std::move(t));
}

MultiPoly content_in(const MultiPoly& p, const std::string& var) {
  MultiPoly g;
  for (const auto& c : p.coefficients_in(var)) {
    if (c.is_zero()) continue;
    if (c.is_constant()) return MultiPoly(1);
    g = gcd(g, c);
    if (g.is_constant()) return g;
  }
  return g;
}

MultiPoly primitive_part(const MultiPoly& p, const std::string& var) {
  return exact_quotient(p, content_in(p, var)).monic();
}

MultiPoly pseudo_remainder(const MultiPoly& a, const MultiPoly& b, const std::string& var) {
  const unsigned db = b.degree_in(var);
  const auto bc = b.coefficients_in(var);
  const MultiPoly& lead_b = bc.back();
  const MultiPoly x = MultiPoly::variable(var);
  MultiPoly r = a;
  while (!r.is_zero() && r.degree_in(var) >= db) {
    const unsigned dr = r.degree_in(var);
    const MultiPoly lead_r = r.coefficients_in(var).back();
    r = lead_b * r - lead_r * pow(x, dr - db) * b;
  }
  return r;
}

}  // namespace

MultiPoly gcd(const MultiPoly& a, const MultiPoly& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant()) return MultiPoly(1);
  if (a.is_monomial()) return monomial_gcd(a, b);
  if (b.is_monomial()) return monomial_gcd(b, a);
  // a common factor only involves variables that occur in both
  for (const auto& v : a.variables()) {
    if (!b.contains(v)) return gcd(content_in(a, v), b);
  }
  for (const auto& v : b.variables()) {
    if (!a.contains(v)) return gcd(a, content_in(b, v));
  }
  const std::string var = a.variables().front();
  const MultiPoly ca = content_in(a, var);
  const MultiPoly cb = content_in(b, var);
  MultiPoly pa = exact_quotient(a, ca);
  MultiPoly pb = exact_quotient(b, cb);
  const MultiPoly content = gcd(ca, cb);
  if (pa.degree_in(var) < pb.degree_in(var)) std::swap(pa, pb);
  while (true) {
    MultiPoly r = pseudo_remainder(pa, pb, var);
    if (r.is_zero()) break;
    if (r.degree_in(var) == 0) {
      pb = MultiPoly(1);
      break;
    }
    pa = std::move(pb);
    pb = primitive_part(r, var);
  }
  if (!pb.is_constant()) pb = primitive_part(pb, var);
  return (content * pb).monic();
}

std::ostream& operator<<(std::ostream& os, const MultiPoly& p) { return os << p.to_string(); }

}  // namespace asx

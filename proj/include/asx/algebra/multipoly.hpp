#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "asx/algebra/rational.hpp"

namespace asx {

/// Sparse multivariate polynomial with rational coefficients.
///
/// Canonical form: variable names sorted ascending and each one actually
/// occurring in some term; no zero coefficients. Terms are ordered
/// lexicographically on exponent vectors (first variable most significant),
/// so the leading term is the last map entry.
class MultiPoly {
 public:
  using Exponents = std::vector<std::uint32_t>;
  using TermMap = std::map<Exponents, Rational>;

  MultiPoly() = default;
  MultiPoly(const Rational& constant);
  template <std::integral I>
  MultiPoly(I constant) : MultiPoly(Rational(constant)) {}

  static MultiPoly variable(const std::string& name);
  /// Builds and canonicalizes; `vars` must be sorted and duplicate-free.
  static MultiPoly from_terms(std::vector<std::string> vars, TermMap terms);

  const std::vector<std::string>& variables() const { return vars_; }
  const TermMap& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return vars_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  bool contains(const std::string& var) const;
  Rational constant_value() const;  // requires is_constant()
  unsigned degree_in(const std::string& var) const;
  unsigned total_degree() const;
  const Rational& leading_coefficient() const;
  MultiPoly monic() const;

  /// Coefficients (polynomials free of `var`) indexed by the power of `var`.
  std::vector<MultiPoly> coefficients_in(const std::string& var) const;
  static MultiPoly from_coefficients(const std::vector<MultiPoly>& coeffs, const std::string& var);

  MultiPoly substitute(const std::string& var, const MultiPoly& value) const;
  /// Replace the bound variables by rational values; unbound ones stay symbolic.
  MultiPoly partial_evaluate(const std::map<std::string, Rational>& values) const;
  Rational evaluate(const std::map<std::string, Rational>& values) const;

  std::string to_string() const;

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& rhs);
  MultiPoly& operator-=(const MultiPoly& rhs);
  MultiPoly& operator*=(const MultiPoly& rhs);
  MultiPoly& operator*=(const Rational& rhs);

  friend MultiPoly operator+(MultiPoly lhs, const MultiPoly& rhs) { return lhs += rhs; }
  friend MultiPoly operator-(MultiPoly lhs, const MultiPoly& rhs) { return lhs -= rhs; }
  friend MultiPoly operator*(const MultiPoly& lhs, const MultiPoly& rhs);
  friend MultiPoly operator*(MultiPoly lhs, const Rational& rhs) { return lhs *= rhs; }
  friend bool operator==(const MultiPoly& lhs, const MultiPoly& rhs) {
    return lhs.vars_ == rhs.vars_ && lhs.terms_ == rhs.terms_;
  }

 private:
  std::vector<std::string> vars_;
  TermMap terms_;
};

MultiPoly pow(const MultiPoly& base, unsigned exponent);

/// Quotient when `divisor` divides `dividend` exactly, otherwise nullopt.
std::optional<MultiPoly> divide_exact(const MultiPoly& dividend, const MultiPoly& divisor);

/// Monic greatest common divisor (recursive primitive PRS); gcd(0, 0) = 0.
MultiPoly gcd(const MultiPoly& a, const MultiPoly& b);

std::ostream& operator<<(std::ostream& os, const MultiPoly& p);

}  // namespace asx
